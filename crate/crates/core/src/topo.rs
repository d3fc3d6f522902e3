//! Expected holonomic ranks from Euler characteristics.
//!
//! For a cone over a smooth projective `X` of dimension `dim X` with a
//! generic hyperplane section `Z`, the solution rank of the transformed
//! tautological system equals the dimension of the middle cohomology of
//! `U = X \ Z`. Since `U` is affine this is read off from
//! `chi(U) = chi(X) - chi(Z)`: for non-integral `beta` the twisted local
//! system is assumed to kill every other degree, for integral `beta` the
//! lower Betti numbers of `U` are supplied per family.

use std::fmt;

use num_integer::Integer;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::tautbuild::{build_tauthat, family_spec, fl_ideal, Family};
use crate::weyl::{holonomic_rank, Rank};

/// Topological data of a shipped family at a given `beta(e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCase {
    pub family: Family,
    pub beta: Rational,
    pub dim_x: u32,
    pub chi_x: i64,
    /// Euler characteristic of a generic hyperplane section.
    pub chi_z: i64,
    /// `b_0, ..., b_(dim X - 1)` of `U`; present only for integral `beta`.
    pub low_betti: Option<Vec<u64>>,
}

impl FamilyCase {
    /// Data for `rnc:k` (`P^1`, sections are `k` points, `U` is `P^1` minus
    /// `k` points, connected) and `segre` (`P^1 x P^1`, sections are smooth
    /// conics, `U` is an affine quadric surface, homotopic to `S^2`).
    pub fn new(family: Family, beta: Rational) -> Self {
        let integral = beta.is_integer();
        match family {
            Family::Rnc(k) => FamilyCase {
                family,
                beta,
                dim_x: 1,
                chi_x: 2,
                chi_z: k as i64,
                low_betti: integral.then(|| vec![1]),
            },
            Family::Segre => FamilyCase {
                family,
                beta,
                dim_x: 2,
                chi_x: 4,
                chi_z: 2,
                low_betti: integral.then(|| vec![1, 0]),
            },
        }
    }

    /// `family` given by name (`rnc:k`, `segre`).
    pub fn named(name: &str, beta: Rational) -> Result<Self> {
        Ok(Self::new(crate::tautbuild::parse_family(name)?, beta))
    }

    pub fn family_name(&self) -> String {
        match self.family {
            Family::Rnc(k) => format!("rnc:{k}"),
            Family::Segre => "segre".into(),
        }
    }

    pub fn chi_u(&self) -> i64 {
        self.chi_x - self.chi_z
    }
}

impl fmt::Display for FamilyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at beta = {}", self.family_name(), self.beta)
    }
}

/// Rank of `H^(dim X)` of `U`, twisted for non-integral `beta`.
pub fn expected_rank(case: &FamilyCase) -> Result<usize> {
    let sign = if case.dim_x.is_odd() { -1 } else { 1 };
    let value = if case.beta.is_integer() {
        if case.beta <= Rational::from_integer(0.into()) {
            return Err(Error::Unsupported(format!("{case}: integral beta must be positive")));
        }
        let betti = case
            .low_betti
            .as_ref()
            .ok_or_else(|| Error::Invalid(format!("{case}: integral beta needs low Betti numbers")))?;
        if betti.len() != case.dim_x as usize {
            return Err(Error::Invalid(format!(
                "{case}: expected {} low Betti numbers",
                case.dim_x
            )));
        }
        let low: i64 = betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        sign * (case.chi_u() - low)
    } else {
        sign * case.chi_u()
    };
    usize::try_from(value).map_err(|_| Error::Invalid(format!("{case}: negative rank {value}")))
}

/// Both sides of the rank comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crosscheck {
    pub expected: usize,
    pub computed: Rank,
}

impl Crosscheck {
    pub fn agrees(&self) -> bool {
        self.computed == Rank::Finite(self.expected)
    }
}

/// Computes the Groebner rank of the Fourier-Laplace transformed system
/// next to the topological prediction.
pub fn rank_comparison(case: &FamilyCase) -> Result<Crosscheck> {
    let expected = expected_rank(case)?;
    let spec = family_spec(&case.family_name(), case.beta.clone())?;
    let gens = fl_ideal(&build_tauthat(&spec)?)?;
    let computed = holonomic_rank(&gens)?;
    Ok(Crosscheck { expected, computed })
}

/// Whether the Groebner rank matches the prediction; an infinite rank fails.
pub fn rank_crosscheck(case: &FamilyCase) -> Result<bool> {
    Ok(rank_comparison(case)?.agrees())
}
