use super::{Polynomial, Rational, TermOrder, Vars};
use crate::error::{Error, Result};
use crate::gb::{self, MonomialAction, Terms};

struct CommRing<'a> {
    order: &'a TermOrder,
}

impl MonomialAction<Rational> for CommRing<'_> {
    fn order(&self) -> &TermOrder {
        self.order
    }

    fn mul_monomial_left(&self, c: &Rational, m: &[u32], g: &[(Vec<u32>, Rational)]) -> Terms<Rational> {
        // shifting by a monomial preserves the order
        g.iter()
            .map(|(k, a)| (k.iter().zip(m).map(|(x, y)| x + y).collect(), c * a))
            .collect()
    }

    fn commutative(&self) -> bool {
        true
    }
}

fn to_terms(p: &Polynomial, order: &TermOrder) -> Terms<Rational> {
    let mut t: Terms<Rational> = p.terms().map(|(m, c)| (m.0.clone(), c.clone())).collect();
    gb::sort_terms(order, &mut t);
    t
}

fn from_terms(vars: &Vars, t: Terms<Rational>) -> Polynomial {
    Polynomial::from_terms(vars, t.into_iter().map(|(m, c)| (super::Monomial(m), c)))
}

/// Reduced Groebner basis of a polynomial ideal, generators monic and sorted
/// ascending by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    vars: Vars,
    order: TermOrder,
    basis: Vec<Polynomial>,
    terms: Vec<Terms<Rational>>,
}

/// Buchberger's algorithm over the rationals.
pub fn comm_groebner(gens: &[Polynomial], order: &TermOrder) -> Result<GroebnerBasis> {
    let vars = match gens.first() {
        Some(g) => g.vars().clone(),
        None => return Err(Error::Invalid("empty generator list".into())),
    };
    if vars.is_empty() {
        return Err(Error::Invalid("empty variable context".into()));
    }
    order.check_arity(vars.len())?;
    for g in gens {
        vars.check_same(g.vars())?;
    }
    let ring = CommRing { order };
    let input: Vec<Terms<Rational>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_terms(g, order))
        .collect();
    let (terms, _) = gb::buchberger(&ring, input);
    let basis = terms.iter().map(|t| from_terms(&vars, t.clone())).collect();
    Ok(GroebnerBasis {
        vars,
        order: order.clone(),
        basis,
        terms,
    })
}

impl GroebnerBasis {
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// Remainder of `p` with no term divisible by a leading monomial of the
    /// basis; `p - result` lies in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.vars.check_same(p.vars())?;
        let ring = CommRing { order: &self.order };
        let r = gb::normal_form(&ring, to_terms(p, &self.order), &self.terms);
        Ok(from_terms(&self.vars, r))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str, v: &Vars) -> Polynomial {
        Polynomial::parse(s, v).unwrap()
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let v = Vars::new(["x", "y"]);
        let gb = comm_groebner(&[p("x^2 - y", &v)], &TermOrder::GrLex).unwrap();
        assert_eq!(gb.basis(), &[p("x^2 - y", &v)]);
        let gb = comm_groebner(&[p("y", &v), p("x", &v)], &TermOrder::GrevLex).unwrap();
        assert_eq!(gb.basis(), &[p("y", &v), p("x", &v)]);
    }

    #[test]
    fn rnc2_cone_quadric_up_to_scalar() {
        let v = Vars::indexed("z", 0, 3);
        let f = p("4*z0*z2 - z1^2", &v);
        let gb = comm_groebner(std::slice::from_ref(&f), &TermOrder::GrevLex).unwrap();
        assert_eq!(gb.basis().len(), 1);
        assert_eq!(gb.basis()[0], f.scale(&rat(-1, 1)));
    }

    #[test]
    fn segre_normal_forms() {
        let v = Vars::new(["x11", "x12", "x21", "x22"]);
        let f = p("x11*x22 - x12*x21", &v);
        // x11*x22 leads under lex, x12*x21 under grevlex
        let lex = comm_groebner(std::slice::from_ref(&f), &TermOrder::Lex).unwrap();
        assert_eq!(lex.normal_form(&p("x11*x22", &v)).unwrap(), p("x12*x21", &v));
        let gb = comm_groebner(std::slice::from_ref(&f), &TermOrder::GrevLex).unwrap();
        assert_eq!(gb.normal_form(&p("x12*x21", &v)).unwrap(), p("x11*x22", &v));
        assert!(gb.normal_form(&f).unwrap().is_zero());
        assert_eq!(gb.normal_form(&p("1", &v)).unwrap(), p("1", &v));
    }

    #[test]
    fn twisted_cubic_and_unit_ideal() {
        let v = Vars::new(["x", "y", "z", "w"]);
        let gens = [p("x*z - y^2", &v), p("y*w - z^2", &v), p("x*w - y*z", &v)];
        let gb = comm_groebner(&gens, &TermOrder::GrevLex).unwrap();
        assert_eq!(gb.basis().len(), 3);
        let gb = comm_groebner(&[p("x*y - 1", &v), p("x", &v)], &TermOrder::Lex).unwrap();
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn cyclic_three_lex() {
        let v = Vars::new(["x", "y", "z"]);
        let gens = [p("x + y + z", &v), p("x*y + y*z + z*x", &v), p("x*y*z - 1", &v)];
        let gb = comm_groebner(&gens, &TermOrder::Lex).unwrap();
        // known reduced basis: x + y + z, y^2 + y z + z^2, z^3 - 1
        assert_eq!(
            gb.basis(),
            &[p("z^3 - 1", &v), p("y^2 + y*z + z^2", &v), p("x + y + z", &v)]
        );
    }
}
