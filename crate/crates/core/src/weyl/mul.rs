//! Normal ordering of a product of two terms.
//!
//! Per coordinate, `d^b x^c = sum_j C(b,j) C(c,j) j! x^(c-j) d^(b-j)`, and a
//! partial passing a coefficient obeys `d^b g = sum_k C(b,k) (d^k g) d^(b-k)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{binomial, Coeff, Rational};

/// Adds `(ca x^a d^b) * (cb x^c d^e)` into `acc`; keys are `x ++ d`.
pub(crate) fn product_into<C: Coeff>(
    n: usize,
    ka: &[u32],
    ca: &C,
    kb: &[u32],
    cb: &C,
    acc: &mut BTreeMap<Vec<u32>, C>,
) {
    let b: Vec<u32> = ka[n..].to_vec();
    // variables whose partial hits the coefficient cb
    let hit: Vec<usize> = (0..n).filter(|&i| b[i] > 0 && cb.depends_on(i)).collect();
    let mut b_rest = b.clone();
    coefficient_stage(n, ka, ca, kb, cb.clone(), BigInt::one(), &hit, 0, &mut b_rest, acc);
}

#[allow(clippy::too_many_arguments)]
fn coefficient_stage<C: Coeff>(
    n: usize,
    ka: &[u32],
    ca: &C,
    kb: &[u32],
    g: C,
    weight: BigInt,
    hit: &[usize],
    pos: usize,
    b_rest: &mut Vec<u32>,
    acc: &mut BTreeMap<Vec<u32>, C>,
) {
    if pos == hit.len() {
        if g.is_zero() {
            return;
        }
        let coeff = ca.mul(&g).mul_rational(&Rational::from_integer(weight));
        commutation_stage(n, ka, kb, &coeff, b_rest, acc);
        return;
    }
    let i = hit[pos];
    let b = b_rest[i];
    let mut gk = g;
    for k in 0..=b {
        if k > 0 {
            gk = gk.derivative(i);
            if gk.is_zero() {
                break;
            }
        }
        b_rest[i] = b - k;
        let w = &weight * binomial(b, k);
        coefficient_stage(n, ka, ca, kb, gk.clone(), w, hit, pos + 1, b_rest, acc);
    }
    b_rest[i] = b;
}

/// Moves `d^b` past `x^c` once coefficients are settled.
fn commutation_stage<C: Coeff>(
    n: usize,
    ka: &[u32],
    kb: &[u32],
    coeff: &C,
    b: &[u32],
    acc: &mut BTreeMap<Vec<u32>, C>,
) {
    let c = &kb[..n];
    // per-variable options (j, weight)
    let opts: Vec<Vec<(u32, BigInt)>> = (0..n)
        .map(|i| {
            let top = b[i].min(c[i]);
            let mut fact = BigInt::one();
            (0..=top)
                .map(|j| {
                    if j > 0 {
                        fact *= j;
                    }
                    (j, binomial(b[i], j) * binomial(c[i], j) * &fact)
                })
                .collect()
        })
        .collect();
    let mut idx = vec![0usize; n];
    loop {
        let mut key = vec![0u32; 2 * n];
        let mut w = BigInt::one();
        for i in 0..n {
            let (j, ref wi) = opts[i][idx[i]];
            key[i] = ka[i] + c[i] - j;
            key[n + i] = b[i] - j + kb[n + i];
            if j > 0 {
                w *= wi;
            }
        }
        let t = coeff.mul_rational(&Rational::from_integer(w));
        add_into(acc, key, t);
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            idx[i] += 1;
            if idx[i] < opts[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

pub(crate) fn add_into<C: Coeff>(acc: &mut BTreeMap<Vec<u32>, C>, key: Vec<u32>, c: C) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&key) {
        Some(old) => {
            let s = old.add(&c);
            if s.is_zero() {
                acc.remove(&key);
            } else {
                *old = s;
            }
        }
        None => {
            acc.insert(key, c);
        }
    }
}
