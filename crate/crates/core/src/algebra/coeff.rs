use std::fmt;

use num_traits::{One, Zero};

use super::{poly_gcd, Polynomial, Rational, RationalFunction, TermOrder, Vars};

/// Coefficient field for the Groebner engine and for operator arithmetic.
///
/// Rationals are constants; rational functions may depend on variables, and
/// `derivative` is what the partial derivatives of the ambient Weyl algebra
/// do to them when commuted past.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn from_rational(r: Rational, vars: &Vars) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; callers guarantee `self` is nonzero.
    fn inv(&self) -> Self;
    fn mul_rational(&self, r: &Rational) -> Self;
    fn derivative(&self, var: usize) -> Self;
    fn depends_on(&self, var: usize) -> bool;
    fn as_rational(&self) -> Option<Rational>;
    /// The coordinate function `vars[i]` as a coefficient, if this domain
    /// has non-constant elements.
    fn variable(vars: &Vars, i: usize) -> Option<Self>;
    fn to_rational_function(&self, vars: &Vars) -> RationalFunction;

    /// A unit to multiply an element's coefficients by (leading coefficient
    /// first) to bring it into canonical form; `None` when already canonical.
    ///
    /// With `full = false` only a cheap size reduction is requested.
    fn normalizer(coeffs: &[&Self], full: bool) -> Option<Self>;
}

impl Coeff for Rational {
    fn from_rational(r: Rational, _vars: &Vars) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn mul_rational(&self, r: &Rational) -> Self {
        self * r
    }
    fn derivative(&self, _var: usize) -> Self {
        Rational::zero()
    }
    fn depends_on(&self, _var: usize) -> bool {
        false
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn variable(_vars: &Vars, _i: usize) -> Option<Self> {
        None
    }
    fn to_rational_function(&self, vars: &Vars) -> RationalFunction {
        RationalFunction::constant(vars, self.clone())
    }
    fn normalizer(coeffs: &[&Self], full: bool) -> Option<Self> {
        let lead = coeffs.first()?;
        (full && !One::is_one(*lead)).then(|| lead.recip())
    }
}

impl Coeff for RationalFunction {
    fn from_rational(r: Rational, vars: &Vars) -> Self {
        RationalFunction::constant(vars, r)
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| One::is_one(&c))
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        RationalFunction::inv(self).expect("inverse of a nonzero rational function")
    }
    fn mul_rational(&self, r: &Rational) -> Self {
        self.scale(r)
    }
    fn derivative(&self, var: usize) -> Self {
        RationalFunction::derivative(self, var)
    }
    fn depends_on(&self, var: usize) -> bool {
        RationalFunction::depends_on(self, var)
    }
    fn as_rational(&self) -> Option<Rational> {
        self.constant_value()
    }
    fn variable(vars: &Vars, i: usize) -> Option<Self> {
        Some(RationalFunction::var(vars, i))
    }
    fn to_rational_function(&self, _vars: &Vars) -> RationalFunction {
        self.clone()
    }

    /// Clears denominators and divides by the gcd of the numerators
    /// ("content"); the full form also makes the leading numerator monic.
    fn normalizer(coeffs: &[&Self], full: bool) -> Option<Self> {
        let lead = coeffs.first()?;
        let vars = lead.vars().clone();
        // lcm of denominators
        let mut lcm = Polynomial::one(&vars);
        for c in coeffs {
            if !c.denominator().is_one() {
                let g = poly_gcd(&lcm, c.denominator());
                let q = super::poly_div_exact(c.denominator(), &g).expect("gcd divides");
                lcm = &lcm * &q;
            }
        }
        // gcd of numerators after clearing
        let mut nums: Vec<Polynomial> = coeffs
            .iter()
            .map(|c| {
                if lcm.is_one() {
                    c.numerator().clone()
                } else {
                    let q = super::poly_div_exact(&lcm, c.denominator()).expect("lcm");
                    &q * c.numerator()
                }
            })
            .collect();
        nums.sort_by_key(|p| (p.total_degree(), p.len()));
        let mut g = Polynomial::zero(&vars);
        for p in &nums {
            g = poly_gcd(&g, p);
            if g.is_constant() {
                g = Polynomial::one(&vars);
                break;
            }
        }
        let mut factor = RationalFunction::new(lcm, g).expect("nonzero content");
        if full {
            let scaled = &factor * *lead;
            let lc = scaled.numerator().leading_coefficient(&TermOrder::GrevLex);
            if !One::is_one(&lc) {
                factor = factor.scale(&lc.recip());
            }
        }
        (!Coeff::is_one(&factor)).then_some(factor)
    }
}
