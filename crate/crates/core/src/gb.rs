//! Buchberger engine shared by commutative polynomials and Weyl algebra
//! operators.
//!
//! Elements are term vectors sorted ascending under the active order, so the
//! leading term is the last entry. The only thing distinguishing the rings is
//! how a monomial multiplies an element from the left ([`MonomialAction`]).
//! Reduction is fraction-free: `p <- lc(g) p - lc(p) m g`, followed by the
//! coefficient normalizer, so rational-function coefficients stay polynomial.

use std::cmp::Ordering;

use crate::algebra::{Coeff, TermOrder};

pub type Terms<C> = Vec<(Vec<u32>, C)>;

/// Ring structure seen by the engine.
pub trait MonomialAction<C: Coeff> {
    fn order(&self) -> &TermOrder;

    /// `c * m * g`, sorted ascending. The leading monomial of the result is
    /// `m + lm(g)` and its coefficient `c * lc(g)`.
    fn mul_monomial_left(&self, c: &C, m: &[u32], g: &[(Vec<u32>, C)]) -> Terms<C>;

    /// Whether Buchberger's coprime-leading-monomial criterion applies.
    fn commutative(&self) -> bool;
}

pub fn sort_terms<C>(order: &TermOrder, terms: &mut Terms<C>) {
    terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
}

pub fn leading<C>(p: &[(Vec<u32>, C)]) -> Option<&(Vec<u32>, C)> {
    p.last()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `a - b` for sorted term vectors.
pub fn sub_terms<C: Coeff>(order: &TermOrder, a: Terms<C>, b: Terms<C>) -> Terms<C> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(ia.next().unwrap()),
            (None, Some(_)) => {
                let (m, c) = ib.next().unwrap();
                out.push((m, c.neg()));
            }
            (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                Ordering::Less => out.push(ia.next().unwrap()),
                Ordering::Greater => {
                    let (m, c) = ib.next().unwrap();
                    out.push((m, c.neg()));
                }
                Ordering::Equal => {
                    let (m, c1) = ia.next().unwrap();
                    let (_, c2) = ib.next().unwrap();
                    let c = c1.sub(&c2);
                    if !c.is_zero() {
                        out.push((m, c));
                    }
                }
            },
        }
    }
    out
}

pub fn add_terms<C: Coeff>(order: &TermOrder, a: Terms<C>, b: Terms<C>) -> Terms<C> {
    let neg: Terms<C> = b.into_iter().map(|(m, c)| (m, c.neg())).collect();
    sub_terms(order, a, neg)
}

fn scale<C: Coeff>(p: &mut [(Vec<u32>, C)], c: &C) {
    for t in p.iter_mut() {
        t.1 = c.mul(&t.1);
    }
}

/// Applies the coefficient normalizer to an element (leading term first).
pub fn normalize<C: Coeff>(p: &mut Terms<C>, full: bool) {
    let coeffs: Vec<&C> = p.iter().rev().map(|t| &t.1).collect();
    if let Some(u) = C::normalizer(&coeffs, full) {
        scale(p, &u);
    }
}

/// Joint size reduction of the pending part and the remainder collected so
/// far; both carry the same accumulated scalar.
fn normalize_pair<C: Coeff>(p: &mut Terms<C>, r: &mut Terms<C>) {
    let coeffs: Vec<&C> = p.iter().rev().chain(r.iter()).map(|t| &t.1).collect();
    if let Some(u) = C::normalizer(&coeffs, false) {
        scale(p, &u);
        scale(r, &u);
    }
}

/// One fraction-free reduction of the leading term of `p` by `g`.
fn reduce_lead<C: Coeff, A: MonomialAction<C>>(
    ring: &A,
    p: Terms<C>,
    r: &mut Terms<C>,
    g: &[(Vec<u32>, C)],
) -> Terms<C> {
    let (pm, pc) = p.last().expect("nonzero").clone();
    let (gm, gc) = g.last().expect("nonzero");
    let shift = diff(&pm, gm);
    let q = ring.mul_monomial_left(&pc, &shift, g);
    let mut p = p;
    if !gc.is_one() {
        scale(&mut p, gc);
        scale(r, gc);
    }
    let mut out = sub_terms(ring.order(), p, q);
    debug_assert!(out.last().is_none_or(|t| t.0 != pm), "leading term must cancel");
    normalize_pair(&mut out, r);
    out
}

/// Full normal form of `p` modulo `basis`, up to a unit factor when the
/// basis is not monic (a remainder is zero iff `p` reduces to zero).
pub fn normal_form<C: Coeff, A: MonomialAction<C>>(ring: &A, p: Terms<C>, basis: &[Terms<C>]) -> Terms<C> {
    let mut p = p;
    // remainder, collected in descending order
    let mut r: Terms<C> = Vec::new();
    while let Some((lm, _)) = p.last() {
        match basis.iter().find(|g| divides(&g.last().unwrap().0, lm)) {
            Some(g) => {
                p = reduce_lead(ring, p, &mut r, g);
            }
            None => {
                let t = p.pop().unwrap();
                r.push(t);
            }
        }
    }
    r.reverse();
    r
}

/// Reduces only the leading term until it is irreducible.
fn top_reduce<C: Coeff, A: MonomialAction<C>>(ring: &A, p: Terms<C>, basis: &[Terms<C>]) -> Terms<C> {
    let mut p = p;
    let mut dummy = Vec::new();
    while let Some((lm, _)) = p.last() {
        match basis.iter().find(|g| divides(&g.last().unwrap().0, lm)) {
            Some(g) => p = reduce_lead(ring, p, &mut dummy, g),
            None => break,
        }
    }
    p
}

fn spoly<C: Coeff, A: MonomialAction<C>>(ring: &A, f: &[(Vec<u32>, C)], g: &[(Vec<u32>, C)]) -> Terms<C> {
    let (fm, fc) = f.last().unwrap();
    let (gm, gc) = g.last().unwrap();
    let l = lcm(fm, gm);
    let a = ring.mul_monomial_left(gc, &diff(&l, fm), f);
    let b = ring.mul_monomial_left(fc, &diff(&l, gm), g);
    let mut s = sub_terms(ring.order(), a, b);
    normalize(&mut s, false);
    s
}

/// Statistics of a Buchberger run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_considered: usize,
    pub pairs_skipped: usize,
    pub zero_reductions: usize,
}

/// Reduced Groebner basis of the left ideal generated by `gens`.
///
/// Pairs are taken by the normal strategy (smallest lcm first, ties by
/// index); pairs are skipped by the chain criterion and, for commutative
/// rings, by the coprime criterion. The output is sorted ascending by
/// leading monomial and fully normalized.
pub fn buchberger<C: Coeff, A: MonomialAction<C>>(ring: &A, gens: Vec<Terms<C>>) -> (Vec<Terms<C>>, GbStats) {
    let order = ring.order();
    let mut stats = GbStats::default();
    let mut basis: Vec<Terms<C>> = Vec::new();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    // treated[i][j] for i < j
    let mut done: Vec<Vec<bool>> = Vec::new();

    let add =
        |basis: &mut Vec<Terms<C>>, pending: &mut Vec<(usize, usize)>, done: &mut Vec<Vec<bool>>, mut g: Terms<C>| {
            normalize(&mut g, true);
            let k = basis.len();
            for i in 0..k {
                pending.push((i, k));
            }
            for row in done.iter_mut() {
                row.push(false);
            }
            done.push(vec![false; k + 1]);
            basis.push(g);
        };

    for g in gens {
        let g = top_reduce(ring, g, &basis);
        if !g.is_empty() {
            add(&mut basis, &mut pending, &mut done, g);
        }
    }

    let is_done = |done: &Vec<Vec<bool>>, a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        done[a][b]
    };

    while !pending.is_empty() {
        if basis.iter().any(|g| g.last().unwrap().0.iter().all(|&e| e == 0)) {
            break;
        }
        // normal strategy
        let pos = (0..pending.len())
            .min_by(|&x, &y| {
                let (i, j) = pending[x];
                let (k, l) = pending[y];
                let a = lcm(&basis[i].last().unwrap().0, &basis[j].last().unwrap().0);
                let b = lcm(&basis[k].last().unwrap().0, &basis[l].last().unwrap().0);
                order.cmp(&a, &b).then((i, j).cmp(&(k, l)))
            })
            .unwrap();
        let (i, j) = pending.swap_remove(pos);
        stats.pairs_considered += 1;
        let mi = basis[i].last().unwrap().0.clone();
        let mj = basis[j].last().unwrap().0.clone();
        let l = lcm(&mi, &mj);
        let coprime = ring.commutative() && mi.iter().zip(&mj).all(|(a, b)| *a == 0 || *b == 0);
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && divides(&basis[k].last().unwrap().0, &l) && is_done(&done, i, k) && is_done(&done, j, k)
        });
        done[i][j] = true;
        if coprime || chain {
            stats.pairs_skipped += 1;
            continue;
        }
        let s = spoly(ring, &basis[i], &basis[j]);
        let r = normal_form(ring, s, &basis);
        if r.is_empty() {
            stats.zero_reductions += 1;
        } else {
            add(&mut basis, &mut pending, &mut done, r);
        }
    }
    (interreduce(ring, basis), stats)
}

/// Minimal and tail-reduced form of a Groebner basis.
pub fn interreduce<C: Coeff, A: MonomialAction<C>>(ring: &A, basis: Vec<Terms<C>>) -> Vec<Terms<C>> {
    let order = ring.order();
    if let Some(unit) = basis.iter().find(|g| g.last().unwrap().0.iter().all(|&e| e == 0)) {
        let mut u = vec![unit.last().unwrap().clone()];
        normalize(&mut u, true);
        return vec![u];
    }
    let mut sorted = basis;
    sorted.sort_by(|a, b| order.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
    let mut minimal: Vec<Terms<C>> = Vec::new();
    for g in sorted {
        let lm = &g.last().unwrap().0;
        if !minimal.iter().any(|h| divides(&h.last().unwrap().0, lm)) {
            minimal.push(g);
        }
    }
    // the lead of each element is irreducible by the others, so the full
    // normal form only rewrites the tail
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Terms<C>> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, h)| h.clone())
            .collect();
        let mut g = normal_form(ring, minimal[idx].clone(), &others);
        normalize(&mut g, true);
        out.push(g);
    }
    out
}

/// `true` iff `p` reduces to zero.
pub fn reduces_to_zero<C: Coeff, A: MonomialAction<C>>(ring: &A, p: Terms<C>, basis: &[Terms<C>]) -> bool {
    normal_form(ring, p, basis).is_empty()
}
