use num_traits::{One, Zero};

use super::{WeylContext, WeylElement};
use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};

fn require_polynomial(p: &WeylElement, what: &str) -> Result<()> {
    if p.context().has_localized() {
        Err(Error::Unsupported(format!(
            "{what} of an operator with localized variables"
        )))
    } else {
        Ok(())
    }
}

fn sign(e: u32) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `c * (x^a d^b) * (x^a' d^b')` for two monomials given as `(x, d)` pairs.
fn ordered_product(
    ctx: &WeylContext,
    first: (&[u32], &[u32]),
    second: (&[u32], &[u32]),
    c: Rational,
) -> Result<WeylElement> {
    let f = WeylElement::monomial(ctx, first.0, first.1, c)?;
    let s = WeylElement::monomial(ctx, second.0, second.1, Rational::one())?;
    f.try_mul(&s)
}

/// Anti-automorphism `x^a d^b -> (-1)^|b| d^b x^a`, normal ordered.
pub fn transpose(p: &WeylElement) -> Result<WeylElement> {
    require_polynomial(p, "transpose")?;
    let ctx = p.context();
    let zero = vec![0; ctx.len()];
    let mut out = WeylElement::zero(ctx);
    for (x, d, c) in p.terms() {
        let s = sign(d.iter().sum());
        out = out.try_add(&ordered_product(ctx, (&zero, d), (x, &zero), c * s)?)?;
    }
    Ok(out)
}

/// Automorphism `x_i -> -d_i`, `d_i -> x_i`, normal ordered.
pub fn fourier_laplace(p: &WeylElement) -> Result<WeylElement> {
    require_polynomial(p, "Fourier-Laplace transform")?;
    let ctx = p.context();
    let zero = vec![0; ctx.len()];
    let mut out = WeylElement::zero(ctx);
    for (x, d, c) in p.terms() {
        let s = sign(x.iter().sum());
        out = out.try_add(&ordered_product(ctx, (&zero, x), (d, &zero), c * s)?)?;
    }
    Ok(out)
}

/// Substitution `x -> -x`, `d -> -d` (the square of the Fourier-Laplace
/// transform).
pub fn antipode(p: &WeylElement) -> WeylElement {
    let mut out = WeylElement::zero(p.context());
    for (k, c) in p.raw_terms() {
        let s = sign(k.iter().sum());
        out.add_term(k.clone(), c * s);
    }
    out
}

/// The operator acting on a polynomial.
pub fn apply(p: &WeylElement, f: &Polynomial) -> Result<Polynomial> {
    require_polynomial(p, "action on polynomials")?;
    p.context().vars().check_same(f.vars())?;
    let vars = f.vars();
    let mut out = Polynomial::zero(vars);
    for (x, d, c) in p.terms() {
        let mut g = f.clone();
        for (i, &e) in d.iter().enumerate() {
            for _ in 0..e {
                g = g.derivative(i);
            }
        }
        if g.is_zero() {
            continue;
        }
        let g = g.mul_monomial(&crate::algebra::Monomial(x.to_vec())).scale(c);
        out = &out + &g;
    }
    Ok(out)
}

/// Euler operator `sum x_i d_i`.
pub fn euler_operator(ctx: &WeylContext) -> WeylElement {
    let n = ctx.len();
    let mut out = WeylElement::zero(ctx);
    for i in 0..n {
        let mut x = vec![0; n];
        let mut d = vec![0; n];
        x[i] = 1;
        d[i] = 1;
        out.add_term(super::element::join(&x, &d), Rational::one());
    }
    out
}

/// Whether all terms share the same `|a| - |b|`, and that common degree.
/// The zero operator counts as homogeneous of degree 0.
pub fn is_euler_homogeneous<C: crate::algebra::Coeff>(p: &WeylElement<C>) -> (bool, Option<i64>) {
    let mut degrees = p
        .terms()
        .map(|(x, d, _)| x.iter().map(|&e| e as i64).sum::<i64>() - d.iter().map(|&e| e as i64).sum::<i64>());
    let first = match degrees.next() {
        Some(f) => f,
        None => return (true, Some(0)),
    };
    if degrees.all(|g| g == first) {
        (true, Some(first))
    } else {
        (false, None)
    }
}

/// `true` iff `p = r * q` for some nonzero rational `r`.
pub fn proportional(p: &WeylElement, q: &WeylElement) -> bool {
    if p.is_zero() || q.is_zero() {
        return p.is_zero() && q.is_zero();
    }
    if p.len() != q.len() {
        return false;
    }
    let mut ratio: Option<Rational> = None;
    for (k, c) in p.raw_terms() {
        let Some(d) = q.raw_terms().get(k) else {
            return false;
        };
        let r = c / d;
        match &ratio {
            None => ratio = Some(r),
            Some(s) if *s == r => {}
            _ => return false,
        }
    }
    ratio.is_some_and(|r| !r.is_zero())
}
