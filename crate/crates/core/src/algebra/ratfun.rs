use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{poly_div_exact, poly_gcd, Polynomial, Rational, TermOrder, Vars};
use crate::error::{Error, Result};

/// Quotient of polynomials in lowest terms.
///
/// Invariants: the denominator is nonzero, coprime to the numerator and has
/// leading coefficient 1 under graded reverse lex; zero is `0/1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        num.vars().check_same(den.vars())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            let one = Polynomial::one(num.vars());
            return RationalFunction { num, den: one };
        }
        if let Some(c) = den.constant_value() {
            let inv = c.recip();
            return RationalFunction {
                num: num.scale(&inv),
                den: Polynomial::one(den.vars()),
            };
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                poly_div_exact(&num, &g).expect("gcd divides numerator"),
                poly_div_exact(&den, &g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coefficient(&TermOrder::GrevLex).recip();
        RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    /// Whether the stored representation is in lowest terms with a
    /// normalized denominator. Always true for values built through the
    /// public API.
    pub fn is_reduced(&self) -> bool {
        if self.is_zero() {
            return self.den.is_one();
        }
        poly_gcd(&self.num, &self.den).is_one() && self.den.leading_coefficient(&TermOrder::GrevLex).is_one()
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let one = Polynomial::one(p.vars());
        RationalFunction { num: p, den: one }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(vars, c))
    }

    pub fn zero(vars: &Vars) -> Self {
        Self::from_poly(Polynomial::zero(vars))
    }

    pub fn one(vars: &Vars) -> Self {
        Self::from_poly(Polynomial::one(vars))
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        Self::from_poly(Polynomial::var(vars, i))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.vars().check_same(other.vars())?;
        if self.den == other.den {
            let num = self.num.try_add(&other.num)?;
            if self.den.is_one() {
                return Ok(Self::from_poly(num));
            }
            return Ok(Self::reduce(num, self.den.clone()));
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Ok(Self::reduce(num, &self.den * &other.den))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.vars().check_same(other.vars())?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.vars()));
        }
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self::from_poly(&self.num * &other.num));
        }
        // cross-cancel, inputs are already in lowest terms
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let a = poly_div_exact(&self.num, &g1).expect("gcd divides");
        let d = poly_div_exact(&other.den, &g1).expect("gcd divides");
        let c = poly_div_exact(&other.num, &g2).expect("gcd divides");
        let b = poly_div_exact(&self.den, &g2).expect("gcd divides");
        let num = &a * &c;
        let den = &b * &d;
        let lc = den.leading_coefficient(&TermOrder::GrevLex).recip();
        Ok(RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Partial derivative by the quotient rule.
    pub fn derivative(&self, i: usize) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.derivative(i));
        }
        let top = &(&self.num.derivative(i) * &self.den) - &(&self.num * &self.den.derivative(i));
        Self::reduce(top, &self.den * &self.den)
    }

    pub fn depends_on(&self, i: usize) -> bool {
        self.num.degree_in(i) > 0 || self.den.degree_in(i) > 0
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(RationalFunction {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Substitutes `subs[i]` for variable `i`; the result lives in `target`.
    pub fn compose(&self, subs: &[RationalFunction], target: &Vars) -> Result<Self> {
        let n = eval_poly(&self.num, subs, target)?;
        let d = eval_poly(&self.den, subs, target)?;
        n.try_div(&d)
    }

    /// Parses `num` or `num // den` with both sides in the polynomial grammar.
    pub fn parse(text: &str, vars: &Vars) -> Result<Self> {
        match text.split_once("//") {
            Some((n, d)) => Self::new(Polynomial::parse(n, vars)?, Polynomial::parse(d, vars)?),
            None => Ok(Self::from_poly(Polynomial::parse(text, vars)?)),
        }
    }
}

fn eval_poly(p: &Polynomial, subs: &[RationalFunction], target: &Vars) -> Result<RationalFunction> {
    if subs.len() != p.vars().len() {
        return Err(Error::ContextMismatch(format!(
            "{} substitutions for {} variables",
            subs.len(),
            p.vars().len()
        )));
    }
    let mut acc = RationalFunction::zero(target);
    for (m, c) in p.terms() {
        let mut t = RationalFunction::constant(target, c.clone());
        for (s, &e) in subs.iter().zip(&m.0) {
            if e > 0 {
                t = t.try_mul(&s.pow(e as i64)?)?;
            }
        }
        acc = acc.try_add(&t)?;
    }
    Ok(acc)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_add(rhs).expect("rational function context mismatch")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_sub(rhs).expect("rational function context mismatch")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_mul(rhs).expect("rational function context mismatch")
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_div(rhs).expect("division by the zero function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}
