use std::fmt;

use super::groebner::check_generators;
use super::{left_groebner, WeylElement};
use crate::algebra::{Coeff, Rational, TermOrder};
use crate::error::Result;

/// Holonomic rank: a dimension over the rational-function field, or
/// `Infinite` when the quotient is not finite dimensional.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rank {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(r) => write!(f, "{r}"),
            Rank::Infinite => f.write_str("infinite"),
        }
    }
}

/// Number of exponent vectors not divisible by any of `leads`.
pub fn count_standard_monomials(leads: &[Vec<u32>], n: usize) -> Rank {
    let mut bound = vec![None::<u32>; n];
    for m in leads {
        let support: Vec<usize> = (0..n).filter(|&i| m[i] > 0).collect();
        match support.len() {
            // a unit: nothing is standard
            0 => return Rank::Finite(0),
            1 => {
                let i = support[0];
                bound[i] = Some(bound[i].map_or(m[i], |b: u32| b.min(m[i])));
            }
            _ => {}
        }
    }
    let Some(bounds) = bound.into_iter().collect::<Option<Vec<u32>>>() else {
        return Rank::Infinite;
    };
    if n == 0 {
        return Rank::Finite(1);
    }
    let mut count = 0;
    let mut e = vec![0u32; n];
    loop {
        if !leads.iter().any(|m| m.iter().zip(&e).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Rank::Finite(count);
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// Holonomic rank of the left ideal generated by `gens`: the dimension of
/// `R/R*I` over `Q(x)`, with `R` the Weyl algebra with rational-function
/// coefficients, counted from leading partial exponents under graded reverse
/// lex.
///
/// Operators with constant coefficients and no localized variable take the
/// polynomial route of [`holonomic_rank_in_weyl`]; everything else runs over
/// the rational-function field ([`holonomic_rank_localized`]).
pub fn holonomic_rank<C: Coeff>(gens: &[WeylElement<C>]) -> Result<Rank> {
    holonomic_rank_with(gens, &TermOrder::GrevLex)
}

/// [`holonomic_rank`] with an explicit order on the partial exponents.
pub fn holonomic_rank_with<C: Coeff>(gens: &[WeylElement<C>], order: &TermOrder) -> Result<Rank> {
    let ctx = check_generators(gens)?;
    order.check_arity(ctx.len())?;
    if !ctx.has_localized() {
        let polynomial: Option<Vec<WeylElement<Rational>>> = gens
            .iter()
            .map(|g| {
                let terms = g
                    .raw_terms()
                    .iter()
                    .map(|(k, c)| c.as_rational().map(|r| (k.clone(), r)))
                    .collect::<Option<_>>()?;
                Some(WeylElement::from_map(&ctx, terms))
            })
            .collect();
        if let Some(p) = polynomial {
            return partial_rank(&p, order);
        }
    }
    holonomic_rank_localized(gens, order)
}

/// The rank computed directly over `Q(x)`: every variable is localized and
/// the Groebner basis is taken in `R` itself.
pub fn holonomic_rank_localized<C: Coeff>(gens: &[WeylElement<C>], order: &TermOrder) -> Result<Rank> {
    let ctx = check_generators(gens)?;
    let n = ctx.len();
    order.check_arity(n)?;
    let local: Vec<_> = gens.iter().map(|g| g.localize_all()).collect();
    let gb = left_groebner(&local, &lift_order(order, n))?;
    let leads: Vec<Vec<u32>> = gb.leading_monomials().into_iter().map(|m| m[n..].to_vec()).collect();
    Ok(count_standard_monomials(&leads, n))
}

/// An order on `d`-exponents read on `x ++ d`. Localized operators have a
/// zero x-block, on which lex, graded lex and graded reverse lex restrict to
/// the same order of the partials; weight vectors get zero x-weights.
fn lift_order(order: &TermOrder, n: usize) -> TermOrder {
    match order {
        TermOrder::Weighted { weights, tie } => {
            let mut w = vec![0u32; n];
            w.extend_from_slice(weights);
            TermOrder::weighted(w, lift_order(tie, n))
        }
        other => other.clone(),
    }
}

/// Weight rows, most significant first, realizing `order` on the block of
/// positions `offset..offset + m` of vectors of length `len`.
fn block_rows(order: &TermOrder, offset: usize, m: usize, len: usize) -> Vec<Vec<u32>> {
    let unit = |i: usize| {
        let mut w = vec![0; len];
        w[offset + i] = 1;
        w
    };
    let ones = || {
        let mut w = vec![0; len];
        w[offset..offset + m].iter_mut().for_each(|x| *x = 1);
        w
    };
    match order {
        TermOrder::Lex => (0..m).map(unit).collect(),
        TermOrder::GrLex => std::iter::once(ones()).chain((0..m).map(unit)).collect(),
        // total degree, then prefer a smaller last exponent
        TermOrder::GrevLex => (1..=m)
            .rev()
            .map(|keep| {
                let mut w = vec![0; len];
                w[offset..offset + keep].iter_mut().for_each(|x| *x = 1);
                w
            })
            .collect(),
        TermOrder::Weighted { weights, tie } => {
            let mut w = vec![0; len];
            w[offset..offset + m].clone_from_slice(weights);
            std::iter::once(w).chain(block_rows(tie, offset, m, len)).collect()
        }
    }
}

/// Order on `x ++ d` comparing the partials by `order` first and the
/// coordinates by graded reverse lex second.
fn partials_first(order: &TermOrder, n: usize) -> TermOrder {
    let mut rows = block_rows(order, n, n, 2 * n);
    rows.extend(block_rows(&TermOrder::GrevLex, 0, n, 2 * n));
    rows.into_iter()
        .rev()
        .fold(TermOrder::GrevLex, |tie, w| TermOrder::weighted(w, tie))
}

/// A Groebner basis in the polynomial Weyl algebra under an order comparing
/// partial exponents first is also one of the extended ideal over `Q(x)`,
/// so the partial parts of its leading monomials give the rank.
fn partial_rank(gens: &[WeylElement<Rational>], order: &TermOrder) -> Result<Rank> {
    let n = gens[0].context().len();
    let gb = left_groebner(gens, &partials_first(order, n))?;
    let leads: Vec<Vec<u32>> = gb.leading_monomials().into_iter().map(|m| m[n..].to_vec()).collect();
    Ok(count_standard_monomials(&leads, n))
}

/// Holonomic rank computed inside the polynomial Weyl algebra under the
/// block order with graded reverse lex on both blocks.
pub fn holonomic_rank_in_weyl(gens: &[WeylElement<Rational>]) -> Result<Rank> {
    let ctx = check_generators(gens)?;
    if ctx.has_localized() {
        return Err(crate::error::Error::Unsupported(
            "localized variables need the rational-function route".into(),
        ));
    }
    partial_rank(gens, &TermOrder::GrevLex)
}
