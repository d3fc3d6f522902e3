//! Multivariate gcd over the rationals by content / primitive-part recursion
//! on the highest variable, with a primitive pseudo-remainder sequence.

use super::{rat, Monomial, Polynomial, TermOrder};

/// Exact quotient `a / b`, or `None` if `b` does not divide `a`.
pub fn poly_div_exact(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    assert!(!b.is_zero(), "division by the zero polynomial");
    if let Some(c) = b.constant_value() {
        return Some(a.scale(&c.recip()));
    }
    let order = TermOrder::Lex;
    let (bm, bc) = b.leading_term(&order).map(|(m, c)| (m.clone(), c.clone()))?;
    let mut r = a.clone();
    let mut q = Polynomial::zero(a.vars());
    while let Some((rm, rc)) = r.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())) {
        let shift = bm.quotient(&rm)?;
        let c = rc / &bc;
        q.add_term(shift.clone(), c.clone());
        r = &r - &b.mul_monomial(&shift).scale(&c);
    }
    Some(q)
}

fn normalize(p: Polynomial) -> Polynomial {
    p.monic(&TermOrder::GrevLex)
}

/// Greatest common divisor, normalized to leading coefficient 1 under
/// graded reverse lex. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return normalize(b.clone());
    }
    if b.is_zero() {
        return normalize(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.vars());
    }
    if a == b {
        return normalize(a.clone());
    }
    let (ma, mb) = (monomial_content(a), monomial_content(b));
    if !ma.is_one() || !mb.is_one() {
        let common = Polynomial::monomial(a.vars(), ma.gcd(&mb), rat(1, 1));
        let a = poly_div_exact(a, &Polynomial::monomial(a.vars(), ma, rat(1, 1))).expect("monomial divides");
        let b = poly_div_exact(b, &Polynomial::monomial(b.vars(), mb, rat(1, 1))).expect("monomial divides");
        return normalize(&common * &poly_gcd(&a, &b));
    }
    for (big, small) in [(a, b), (b, a)] {
        if poly_div_exact(big, small).is_some() {
            return normalize(small.clone());
        }
    }
    // the shared variable of least degree keeps the remainder sequence short
    let n = a.vars().len();
    let main = (0..n)
        .filter(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
        .min_by_key(|&i| {
            (
                a.degree_in(i) == 0 || b.degree_in(i) == 0,
                a.degree_in(i).max(b.degree_in(i)),
            )
        })
        .expect("non-constant polynomial has a variable");
    if a.degree_in(main) == 0 {
        return poly_gcd(a, &content(b, main));
    }
    if b.degree_in(main) == 0 {
        return poly_gcd(&content(a, main), b);
    }
    let ca = content(a, main);
    let cb = content(b, main);
    let pa = poly_div_exact(a, &ca).expect("content divides");
    let pb = poly_div_exact(b, &cb).expect("content divides");
    let c = poly_gcd(&ca, &cb);
    let g = subresultant_gcd(pa, pb, main);
    normalize(&c * &g)
}

/// Largest monomial dividing every term of `p`.
fn monomial_content(p: &Polynomial) -> Monomial {
    let mut terms = p.terms().map(|(m, _)| m);
    let first = terms.next().expect("nonzero polynomial").clone();
    terms.fold(first, |acc, m| acc.gcd(m))
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
fn content(p: &Polynomial, var: usize) -> Polynomial {
    let mut coeffs: Vec<Polynomial> = p.coefficients_in(var).into_iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| (c.total_degree(), c.len()));
    let mut g = Polynomial::zero(p.vars());
    for c in &coeffs {
        g = poly_gcd(&g, c);
        if g.is_constant() {
            return Polynomial::one(p.vars());
        }
    }
    g
}

fn primitive_part(p: &Polynomial, var: usize) -> Polynomial {
    let c = content(p, var);
    poly_div_exact(p, &c).expect("content divides")
}

fn leading_coeff_in(p: &Polynomial, var: usize) -> Polynomial {
    p.coefficients_in(var).pop().expect("nonzero polynomial")
}

/// `lc(b)^(deg a - deg b + 1) * a` reduced modulo `b` in `var`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let db = b.degree_in(var);
    let lb = leading_coeff_in(b, var);
    let n = a.vars().len();
    let mut r = a.clone();
    let mut unused = a.degree_in(var) + 1 - db;
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = leading_coeff_in(&r, var);
        let mut shift = Monomial::one(n);
        shift.0[var] = dr - db;
        r = &(&lb * &r) - &(&lr * &b.mul_monomial(&shift));
        unused -= 1;
    }
    &lb.pow(unused) * &r
}

/// Gcd of two primitive polynomials in `var` by the subresultant sequence,
/// which keeps coefficient growth linear without per-step content gcds.
fn subresultant_gcd(a: Polynomial, b: Polynomial, var: usize) -> Polynomial {
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    let one = Polynomial::one(a.vars());
    let (mut g, mut h) = (one.clone(), one.clone());
    loop {
        let delta = a.degree_in(var) - b.degree_in(var);
        let r = pseudo_remainder(&a, &b, var);
        if r.is_zero() {
            return primitive_part(&b, var);
        }
        if r.degree_in(var) == 0 {
            return one;
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = poly_div_exact(&r, &divisor).expect("subresultant division is exact");
        g = leading_coeff_in(&a, var);
        h = if delta == 0 {
            h
        } else {
            poly_div_exact(&g.pow(delta), &h.pow(delta - 1)).expect("subresultant division is exact")
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Vars;

    fn p(s: &str, v: &Vars) -> Polynomial {
        Polynomial::parse(s, v).unwrap()
    }

    #[test]
    fn univariate_gcd() {
        let v = Vars::new(["x"]);
        let g = poly_gcd(&p("x^2 - 1", &v), &p("x^2 + 2*x + 1", &v));
        assert_eq!(g, p("x + 1", &v));
        assert_eq!(poly_gcd(&p("2*x", &v), &p("3", &v)), p("1", &v));
    }

    #[test]
    fn multivariate_gcd_recovers_common_factor() {
        let v = Vars::new(["x", "y", "z"]);
        let common = p("x*y - z^2 + 1", &v);
        let a = &common * &p("x + y", &v);
        let b = &common * &p("x - z*y^2", &v);
        assert_eq!(poly_gcd(&a, &b), common.monic(&TermOrder::GrevLex));
        let c = &p("x + y", &v).pow(2) * &p("z", &v);
        assert_eq!(poly_gcd(&c, &p("x^2 - y^2", &v)), p("x + y", &v));
    }

    #[test]
    fn exact_division() {
        let v = Vars::new(["x", "y"]);
        let a = p("x^2 - y^2", &v);
        assert_eq!(poly_div_exact(&a, &p("x - y", &v)), Some(p("x + y", &v)));
        assert_eq!(poly_div_exact(&a, &p("x + 2*y", &v)), None);
    }
}
