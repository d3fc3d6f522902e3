use std::collections::BTreeMap;

use super::mul::product_into;
use super::{WeylContext, WeylElement};
use crate::algebra::{Coeff, TermOrder};
use crate::error::{Error, Result};
use crate::gb::{self, GbStats, MonomialAction, Terms};

/// Left multiplication in the Weyl algebra, as seen by the Buchberger engine.
pub(crate) struct WeylAction<'a> {
    n: usize,
    order: &'a TermOrder,
}

impl<'a> WeylAction<'a> {
    pub(crate) fn new(n: usize, order: &'a TermOrder) -> Self {
        WeylAction { n, order }
    }
}

impl<C: Coeff> MonomialAction<C> for WeylAction<'_> {
    fn order(&self) -> &TermOrder {
        self.order
    }

    fn mul_monomial_left(&self, c: &C, m: &[u32], g: &[(Vec<u32>, C)]) -> Terms<C> {
        let mut acc = BTreeMap::new();
        for (k, gc) in g {
            product_into(self.n, m, c, k, gc, &mut acc);
        }
        let mut out: Terms<C> = acc.into_iter().collect();
        gb::sort_terms(self.order, &mut out);
        out
    }

    fn commutative(&self) -> bool {
        false
    }
}

pub(crate) fn to_terms<C: Coeff>(p: &WeylElement<C>, order: &TermOrder) -> Terms<C> {
    let mut t: Terms<C> = p.raw_terms().iter().map(|(k, c)| (k.clone(), c.clone())).collect();
    gb::sort_terms(order, &mut t);
    t
}

pub(crate) fn from_terms<C: Coeff>(ctx: &WeylContext, t: Terms<C>) -> WeylElement<C> {
    WeylElement::from_map(ctx, t.into_iter().collect())
}

/// Reduced Groebner basis of a left ideal of the Weyl algebra.
#[derive(Clone, Debug)]
pub struct LeftGB<C: Coeff = crate::algebra::Rational> {
    ctx: WeylContext,
    order: TermOrder,
    basis: Vec<WeylElement<C>>,
    terms: Vec<Terms<C>>,
    stats: GbStats,
}

/// Checks a generator list for a common context and rejects degenerate input.
pub(crate) fn check_generators<C: Coeff>(gens: &[WeylElement<C>]) -> Result<WeylContext> {
    let ctx = match gens.first() {
        Some(g) => g.context().clone(),
        None => return Err(Error::Invalid("empty generator list".into())),
    };
    for g in gens {
        ctx.check_same(g.context())?;
        if g.is_zero() {
            return Err(Error::Invalid("the zero operator is not allowed as a generator".into()));
        }
    }
    Ok(ctx)
}

/// Buchberger's algorithm for left ideals.
///
/// Correct for every monomial well-order on `x ++ d`: commutator corrections
/// are componentwise smaller, so leading monomials multiply.
pub fn left_groebner<C: Coeff>(gens: &[WeylElement<C>], order: &TermOrder) -> Result<LeftGB<C>> {
    let ctx = check_generators(gens)?;
    order.check_arity(2 * ctx.len())?;
    let ring = WeylAction::new(ctx.len(), order);
    let input = gens.iter().map(|g| to_terms(g, order)).collect();
    let (terms, stats) = gb::buchberger(&ring, input);
    let basis = terms.iter().map(|t| from_terms(&ctx, t.clone())).collect();
    Ok(LeftGB {
        ctx,
        order: order.clone(),
        basis,
        terms,
        stats,
    })
}

impl<C: Coeff> LeftGB<C> {
    pub fn basis(&self) -> &[WeylElement<C>] {
        &self.basis
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn context(&self) -> &WeylContext {
        &self.ctx
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    /// Leading exponents `x ++ d` of the basis elements.
    pub fn leading_monomials(&self) -> Vec<Vec<u32>> {
        self.terms
            .iter()
            .map(|t| t.last().expect("nonzero").0.clone())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.leading_monomials().iter().any(|m| m.iter().all(|&e| e == 0))
    }

    /// Remainder of `p` on division by the basis. With rational
    /// coefficients the basis is monic and the remainder exact; with
    /// rational-function coefficients it is determined up to a unit.
    pub fn normal_form(&self, p: &WeylElement<C>) -> Result<WeylElement<C>> {
        self.ctx.check_same(p.context())?;
        let ring = WeylAction::new(self.ctx.len(), &self.order);
        let r = gb::normal_form(&ring, to_terms(p, &self.order), &self.terms);
        Ok(from_terms(&self.ctx, r))
    }

    pub fn contains(&self, p: &WeylElement<C>) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

/// Remainder of `p` modulo a left Groebner basis.
pub fn weyl_normal_form<C: Coeff>(p: &WeylElement<C>, gb: &LeftGB<C>) -> Result<WeylElement<C>> {
    gb.normal_form(p)
}
