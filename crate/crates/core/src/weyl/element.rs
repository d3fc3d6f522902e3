use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::mul::product_into;
use super::WeylContext;
use crate::algebra::{Coeff, Polynomial, Rational, RationalFunction, TermOrder};
use crate::error::{Error, Result};

/// Normal-ordered differential operator `sum c * x^a * d^b`.
///
/// Terms are keyed by the concatenated exponent vector `a ++ b` (length
/// `2n`); zero coefficients are never stored and localized variables always
/// have x-exponent zero.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylElement<C: Coeff = Rational> {
    ctx: WeylContext,
    terms: BTreeMap<Vec<u32>, C>,
}

pub(crate) fn join(x: &[u32], d: &[u32]) -> Vec<u32> {
    let mut k = Vec::with_capacity(x.len() + d.len());
    k.extend_from_slice(x);
    k.extend_from_slice(d);
    k
}

impl<C: Coeff> WeylElement<C> {
    pub fn zero(ctx: &WeylContext) -> Self {
        WeylElement {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &WeylContext, c: Rational) -> Self {
        Self::from_coeff(ctx, C::from_rational(c, ctx.vars()))
    }

    pub fn one(ctx: &WeylContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn from_coeff(ctx: &WeylContext, c: C) -> Self {
        let n = ctx.len();
        let mut out = Self::zero(ctx);
        out.add_term(vec![0; 2 * n], c);
        out
    }

    /// The multiplication operator by `x_i`.
    pub fn x(ctx: &WeylContext, i: usize) -> Result<Self> {
        let n = ctx.len();
        if i >= n {
            return Err(Error::Invalid(format!("no variable with index {i}")));
        }
        if ctx.is_localized(i) {
            let c = C::variable(ctx.vars(), i)
                .ok_or_else(|| Error::Unsupported("localized variables need rational-function coefficients".into()))?;
            return Ok(Self::from_coeff(ctx, c));
        }
        let mut key = vec![0; 2 * n];
        key[i] = 1;
        let mut out = Self::zero(ctx);
        out.add_term(key, C::from_rational(Rational::one(), ctx.vars()));
        Ok(out)
    }

    /// The partial derivative `d_i`.
    pub fn d(ctx: &WeylContext, i: usize) -> Result<Self> {
        let n = ctx.len();
        if i >= n {
            return Err(Error::Invalid(format!("no variable with index {i}")));
        }
        let mut key = vec![0; 2 * n];
        key[n + i] = 1;
        let mut out = Self::zero(ctx);
        out.add_term(key, C::from_rational(Rational::one(), ctx.vars()));
        Ok(out)
    }

    /// `c * x^a * d^b`; fails if a localized variable has a positive x-exponent.
    pub fn monomial(ctx: &WeylContext, x: &[u32], d: &[u32], c: C) -> Result<Self> {
        let n = ctx.len();
        if x.len() != n || d.len() != n {
            return Err(Error::ContextMismatch(format!(
                "exponent vectors of length {}/{} for {n} variables",
                x.len(),
                d.len()
            )));
        }
        if (0..n).any(|i| ctx.is_localized(i) && x[i] > 0) {
            return Err(Error::Invalid("localized variable with an x-exponent".into()));
        }
        let mut out = Self::zero(ctx);
        out.add_term(join(x, d), c);
        Ok(out)
    }

    /// A polynomial as a multiplication operator.
    pub fn from_polynomial(ctx: &WeylContext, p: &Polynomial) -> Result<Self> {
        ctx.vars().check_same(p.vars())?;
        let n = ctx.len();
        let mut out = Self::zero(ctx);
        for (m, c) in p.terms() {
            let mut x = m.0.clone();
            let mut coeff = C::from_rational(c.clone(), ctx.vars());
            for (i, e) in x.iter_mut().enumerate() {
                if ctx.is_localized(i) && *e > 0 {
                    let v = C::variable(ctx.vars(), i).ok_or_else(|| {
                        Error::Unsupported("localized variables need rational-function coefficients".into())
                    })?;
                    for _ in 0..*e {
                        coeff = coeff.mul(&v);
                    }
                    *e = 0;
                }
            }
            out.add_term(join(&x, &vec![0; n]), coeff);
        }
        Ok(out)
    }

    pub(crate) fn from_map(ctx: &WeylContext, terms: BTreeMap<Vec<u32>, C>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        WeylElement {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub(crate) fn add_term(&mut self, key: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn context(&self) -> &WeylContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(x-exponent, d-exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &[u32], &C)> {
        let n = self.ctx.len();
        self.terms.iter().map(move |(k, c)| (&k[..n], &k[n..], c))
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<Vec<u32>, C> {
        &self.terms
    }

    pub fn coefficient(&self, x: &[u32], d: &[u32]) -> Option<&C> {
        self.terms.get(&join(x, d))
    }

    /// Terms sorted by `order` on the concatenated exponents, highest first.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(&Vec<u32>, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Leading `(x-exponent ++ d-exponent, coefficient)` under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Vec<u32>, &C)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Largest value of `|a| + |b|` over the terms.
    pub fn order_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.iter().sum()).max()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.neg());
        }
        Ok(out)
    }

    /// Normal-ordered product `self * other`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let n = self.ctx.len();
        let mut acc = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                product_into(n, ka, ca, kb, cb, &mut acc);
            }
        }
        Ok(Self::from_map(&self.ctx, acc))
    }

    /// Commutator `self * other - other * self`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.mul_rational(r));
        }
        out
    }

    /// Left multiplication by a coefficient.
    pub fn mul_coeff(&self, a: &C) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), a.mul(c));
        }
        out
    }

    /// The same operator in `Q(x)<d>` (every variable localized): each
    /// `c x^a d^b` becomes the coefficient `c x^a` times `d^b`.
    pub fn localize_all(&self) -> WeylElement<RationalFunction> {
        let ctx = self.ctx.localize_all();
        let vars = ctx.vars().clone();
        let n = ctx.len();
        let mut out = WeylElement::zero(&ctx);
        for (k, c) in &self.terms {
            let mono = Polynomial::monomial(&vars, crate::algebra::Monomial(k[..n].to_vec()), Rational::one());
            let coeff = &c.to_rational_function(&vars) * &RationalFunction::from_poly(mono);
            out.add_term(join(&vec![0; n], &k[n..]), coeff);
        }
        out
    }
}

impl WeylElement<Rational> {
    /// The operator as an element with rational-function coefficients over
    /// the same (non-localized) context.
    pub fn to_rational_functions(&self) -> WeylElement<RationalFunction> {
        let vars = self.ctx.vars().clone();
        let mut out = WeylElement::zero(&self.ctx);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), RationalFunction::constant(&vars, c.clone()));
        }
        out
    }
}

impl<C: Coeff> Add for &WeylElement<C> {
    type Output = WeylElement<C>;
    fn add(self, rhs: &WeylElement<C>) -> WeylElement<C> {
        self.try_add(rhs).expect("Weyl context mismatch")
    }
}

impl<C: Coeff> Sub for &WeylElement<C> {
    type Output = WeylElement<C>;
    fn sub(self, rhs: &WeylElement<C>) -> WeylElement<C> {
        self.try_sub(rhs).expect("Weyl context mismatch")
    }
}

impl<C: Coeff> Mul for &WeylElement<C> {
    type Output = WeylElement<C>;
    fn mul(self, rhs: &WeylElement<C>) -> WeylElement<C> {
        self.try_mul(rhs).expect("Weyl context mismatch")
    }
}

impl<C: Coeff> Neg for &WeylElement<C> {
    type Output = WeylElement<C>;
    fn neg(self) -> WeylElement<C> {
        WeylElement {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }
}
