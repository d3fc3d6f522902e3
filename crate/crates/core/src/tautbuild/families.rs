//! The shipped families: cones over rational normal curves (`rnc:k`) and
//! the Segre quadric (`segre`).

use num_traits::Zero;

use super::rep::{identity, sl2_brackets, zeros, Matrix, RepSpec};
use super::TautSpec;
use crate::algebra::{binomial, comm_groebner, Polynomial, Rational, TermOrder, Vars};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{WeylContext, WeylElement};

fn int(c: i64) -> Rational {
    Rational::from_integer(c.into())
}

fn sl2_labels(suffix: &str) -> Vec<String> {
    ["E12", "E21", "H"].iter().map(|l| format!("{l}{suffix}")).collect()
}

/// `SL2 x C*` on binary forms of degree `k`, coordinates `z0..zk`.
pub fn sym_power_rep(k: usize) -> Result<RepSpec> {
    if k < 1 {
        return Err(Error::Invalid("degree must be at least 1".into()));
    }
    let n = k + 1;
    let mut raise = zeros(n);
    let mut lower = zeros(n);
    let mut h = zeros(n);
    for i in 1..=k {
        raise[i - 1][i] = int(i as i64);
        lower[i][i - 1] = int((k - i + 1) as i64);
    }
    for (i, row) in h.iter_mut().enumerate() {
        row[i] = int(k as i64 - 2 * i as i64);
    }
    let mut labels = sl2_labels("");
    labels.push("e".into());
    let mut brackets = vec![vec![vec![Rational::zero(); 4]; 4]; 4];
    sl2_brackets(0, 4, &mut brackets);
    RepSpec::new(
        Vars::indexed("z", 0, n),
        labels,
        vec![raise, lower, h, identity(n)],
        brackets,
        3,
    )
}

/// `M (x) 1` or `1 (x) M` on `C^2 (x) C^2`, coordinates ordered
/// `x11, x12, x21, x22`.
fn tensor_factor(m: &Matrix, first: bool) -> Matrix {
    let mut out = zeros(4);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    // entry ((a,b),(c,d))
                    let v = if first {
                        if b == d {
                            m[a][c].clone()
                        } else {
                            Rational::zero()
                        }
                    } else if a == c {
                        m[b][d].clone()
                    } else {
                        Rational::zero()
                    };
                    out[2 * a + b][2 * c + d] = v;
                }
            }
        }
    }
    out
}

/// `SL2 x SL2 x C*` on `C^2 (x) C^2`; labels `E12_1, E21_1, H_1, E12_2,
/// E21_2, H_2, e`.
pub fn segre_rep() -> RepSpec {
    let sl2 = sym_power_rep(1).expect("k = 1");
    let mut matrices = Vec::new();
    let mut labels = Vec::new();
    for (first, suffix) in [(true, "_1"), (false, "_2")] {
        for i in 0..3 {
            matrices.push(tensor_factor(sl2.matrix(i), first));
        }
        labels.extend(sl2_labels(suffix));
    }
    matrices.push(identity(4));
    labels.push("e".into());
    let mut brackets = vec![vec![vec![Rational::zero(); 7]; 7]; 7];
    sl2_brackets(0, 7, &mut brackets);
    sl2_brackets(3, 7, &mut brackets);
    RepSpec::new(Vars::new(["x11", "x12", "x21", "x22"]), labels, matrices, brackets, 6).expect("valid Segre data")
}

/// Quadrics cutting out the cone over the degree-`k` rational normal curve
/// `z_i = C(k,i) a^(k-i) b^i`:
/// `C(k,i2) C(k,j2) z_i1 z_j1 - C(k,i1) C(k,j1) z_i2 z_j2` for
/// `i1 + j1 = i2 + j2`, with linearly dependent ones dropped.
pub fn rnc_ideal(k: usize) -> Result<Vec<Polynomial>> {
    if k < 1 {
        return Err(Error::Invalid("degree must be at least 1".into()));
    }
    let vars = Vars::indexed("z", 0, k + 1);
    let k32 = k as u32;
    let b = |i: usize| Rational::from_integer(binomial(k32, i as u32));
    let mut accepted: Vec<Polynomial> = Vec::new();
    for s in 0..=2 * k {
        let pairs: Vec<(usize, usize)> = (0..=k)
            .filter(|&i| s >= i && s - i >= i && s - i <= k)
            .map(|i| (i, s - i))
            .collect();
        for (pi, p) in pairs.iter().enumerate() {
            for q in &pairs[pi + 1..] {
                let lhs = &Polynomial::var(&vars, p.0) * &Polynomial::var(&vars, p.1);
                let rhs = &Polynomial::var(&vars, q.0) * &Polynomial::var(&vars, q.1);
                let g = &lhs.scale(&(b(q.0) * b(q.1))) - &rhs.scale(&(b(p.0) * b(p.1)));
                let redundant = !accepted.is_empty()
                    && comm_groebner(&accepted, &TermOrder::GrevLex)?
                        .normal_form(&g)?
                        .is_zero();
                if !redundant {
                    accepted.push(g);
                }
            }
        }
    }
    Ok(accepted)
}

/// `x11 x22 - x21 x12`.
pub fn segre_ideal() -> Vec<Polynomial> {
    let vars = segre_rep().vars().clone();
    vec![Polynomial::parse("x11*x22 - x21*x12", &vars).expect("fixed text")]
}

/// Tautological data for the cone over the degree-`k` rational normal curve.
pub fn rnc_spec(k: usize, beta_e: Rational) -> Result<TautSpec> {
    let rep = sym_power_rep(k)?;
    let e = rep.scaling_index();
    let mut beta = vec![Rational::zero(); rep.labels().len()];
    beta[e] = beta_e;
    TautSpec::new(rep, rnc_ideal(k)?, beta)
}

/// Tautological data for the Segre quadric cone.
pub fn segre_spec(beta_e: Rational) -> Result<TautSpec> {
    let rep = segre_rep();
    let e = rep.scaling_index();
    let mut beta = vec![Rational::zero(); rep.labels().len()];
    beta[e] = beta_e;
    TautSpec::new(rep, segre_ideal(), beta)
}

/// A family by name (`rnc:k` or `segre`) with the given `beta(e)`.
pub fn family_spec(name: &str, beta_e: Rational) -> Result<TautSpec> {
    match parse_family(name)? {
        Family::Rnc(k) => rnc_spec(k, beta_e),
        Family::Segre => segre_spec(beta_e),
    }
}

/// Root system and highest weight of the representation of a family.
pub fn family_weight(name: &str) -> Result<(RootSystem, Weight)> {
    match parse_family(name)? {
        Family::Rnc(k) => Ok((RootSystem::parse("A1")?, Weight::from_ints(&[k as i64]))),
        Family::Segre => Ok((RootSystem::parse("A1xA1")?, Weight::from_ints(&[1, 1]))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Rnc(usize),
    Segre,
}

pub fn parse_family(name: &str) -> Result<Family> {
    let name = name.trim();
    if name == "segre" {
        return Ok(Family::Segre);
    }
    if let Some(k) = name.strip_prefix("rnc:") {
        let k: usize = k
            .parse()
            .map_err(|_| Error::Invalid(format!("bad degree in family `{name}`")))?;
        if k < 1 {
            return Err(Error::Invalid("degree must be at least 1".into()));
        }
        return Ok(Family::Rnc(k));
    }
    Err(Error::Invalid(format!(
        "unknown family `{name}` (expected rnc:k or segre)"
    )))
}

/// The ten Segre operators in their customary hand-written form, with
/// `t_ij = x_ij d_ij`:
/// `f, E + 2, x21 d11 + x22 d12, x11 d21 + x12 d22, x11 d12 + x21 d22,
/// x12 d11 + x22 d21, t11 + t12 + 1, t21 + t22 + 1, t11 + t21 + 1,
/// t12 + t22 + 1`.
pub fn segre_reference_generators() -> Vec<WeylElement> {
    let ctx = WeylContext::new(segre_rep().vars().clone());
    [
        "x11*x22 - x21*x12",
        "x11*d11 + x12*d12 + x21*d21 + x22*d22 + 2",
        "x21*d11 + x22*d12",
        "x11*d21 + x12*d22",
        "x11*d12 + x21*d22",
        "x12*d11 + x22*d21",
        "x11*d11 + x12*d12 + 1",
        "x21*d21 + x22*d22 + 1",
        "x11*d11 + x21*d21 + 1",
        "x12*d12 + x22*d22 + 1",
    ]
    .iter()
    .map(|t| WeylElement::parse(t, &ctx).expect("fixed text"))
    .collect()
}
