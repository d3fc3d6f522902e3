use num_traits::Zero;

use super::rep::{invert, Matrix, RepSpec};
use super::TautSpec;
use crate::algebra::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{apply, euler_operator, left_groebner, WeylElement};

/// `Z(C) = sum_ij (K^-1)_ij Z(A_i) Z(A_j)` over the basis of `g`, with `K`
/// the Killing form computed from the bracket table.
pub fn casimir_weyl(rep: &RepSpec) -> Result<WeylElement> {
    casimir_weyl_with(rep, &rep.killing_form()?)
}

/// [`casimir_weyl`] for a given Gram matrix on [`RepSpec::semisimple_indices`].
pub fn casimir_weyl_with(rep: &RepSpec, killing: &Matrix) -> Result<WeylElement> {
    let idx = rep.semisimple_indices();
    if killing.len() != idx.len() {
        return Err(Error::Invalid(format!("Killing matrix must be {0}x{0}", idx.len())));
    }
    let inv = invert(killing).ok_or_else(|| Error::Invalid("degenerate Killing form".into()))?;
    let fields: Vec<WeylElement> = idx.iter().map(|&i| rep.field(i)).collect();
    let mut out = WeylElement::zero(rep.context());
    for (a, za) in fields.iter().enumerate() {
        for (b, zb) in fields.iter().enumerate() {
            let c = &inv[a][b];
            if !c.is_zero() {
                out = &out + &(za * zb).scale(c);
            }
        }
    }
    Ok(out)
}

fn int(c: i64) -> Rational {
    Rational::from_integer(c.into())
}

fn check_dimension(spec: &TautSpec, rs: &RootSystem, mu: &Weight) -> Result<()> {
    let d = rs.weyl_dim(mu)?;
    if d != spec.rep().dim() as u64 {
        return Err(Error::Invalid(format!(
            "representation has dimension {} but the highest weight gives {d}",
            spec.rep().dim()
        )));
    }
    Ok(())
}

/// All monomials of total degree `d` in `n` variables.
fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Checks that `Z(C) - Z(e)^2 |mu|^2 + 2 Z(e) <delta, mu>` maps every
/// monomial of degree at most `dmax` into the cone ideal, i.e. that the
/// Casimir acts on the degree-`d` part of the coordinate ring by
/// `d^2 |mu|^2 + 2 d <delta, mu>`.
pub fn verify_casimir_identity(spec: &TautSpec, rs: &RootSystem, mu: &Weight, dmax: u32) -> Result<bool> {
    check_dimension(spec, rs, mu)?;
    let rep = spec.rep();
    let mm = rs.killing_pairing(mu, mu)?;
    let dm = rs.killing_pairing(&rs.weyl_vector(), mu)?;
    let ze = rep.field(rep.scaling_index());
    let op = &(&casimir_weyl(rep)? - &(&ze * &ze).scale(&mm)) + &ze.scale(&(int(2) * dm));
    let gb = spec.ideal_groebner()?;
    for d in 0..=dmax {
        for m in monomials(rep.dim(), d) {
            let p = Polynomial::monomial(rep.vars(), Monomial(m), Rational::from_integer(1.into()));
            let image = apply(&op, &p)?;
            let r = match &gb {
                Some(gb) => gb.normal_form(&image)?,
                None => image,
            };
            if !r.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The operator `Z(C) - (E + n)^2 |mu|^2 + 2 (E + n) <delta, mu>`, `n = dim V`.
pub fn zztop_operator(spec: &TautSpec, rs: &RootSystem, mu: &Weight) -> Result<WeylElement> {
    check_dimension(spec, rs, mu)?;
    let rep = spec.rep();
    let ctx = rep.context();
    let mm = rs.killing_pairing(mu, mu)?;
    let dm = rs.killing_pairing(&rs.weyl_vector(), mu)?;
    let shifted = &euler_operator(ctx) + &WeylElement::constant(ctx, int(rep.dim() as i64));
    Ok(&(&casimir_weyl(rep)? - &(&shifted * &shifted).scale(&mm)) + &shifted.scale(&(int(2) * dm)))
}

/// Whether [`zztop_operator`] lies in the left ideal generated by the cone
/// ideal.
pub fn verify_zztop(spec: &TautSpec, rs: &RootSystem, mu: &Weight) -> Result<bool> {
    let op = zztop_operator(spec, rs, mu)?;
    let gens = spec.ideal_operators();
    if gens.is_empty() {
        return Ok(op.is_zero());
    }
    let gb = left_groebner(&gens, &crate::algebra::TermOrder::GrevLex)?;
    gb.contains(&op)
}
