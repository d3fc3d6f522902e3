use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Deserialize;

use super::rep::{trace, Matrix, RepSpec};
use crate::algebra::{comm_groebner, parse_rational, GroebnerBasis, Polynomial, Rational, TermOrder, Vars};
use crate::error::{Error, Result};
use crate::weyl::{apply, fourier_laplace, is_euler_homogeneous, left_groebner, WeylElement};

/// Input of a tautological system: a representation, generators of the
/// cone ideal `I` and a character `beta` of `g'`.
#[derive(Clone, Debug)]
pub struct TautSpec {
    rep: RepSpec,
    ideal: Vec<Polynomial>,
    beta: Vec<Rational>,
}

impl TautSpec {
    /// Validates homogeneity of the cone generators, their stability under
    /// every `Z(xi)` (checked on the generators, which suffices by the
    /// Leibniz rule), and that `beta` vanishes on brackets.
    pub fn new(rep: RepSpec, ideal: Vec<Polynomial>, beta: Vec<Rational>) -> Result<Self> {
        let m = rep.labels().len();
        if beta.len() != m {
            return Err(Error::Invalid(format!(
                "{} beta values for {m} basis elements",
                beta.len()
            )));
        }
        for g in &ideal {
            rep.vars().check_same(g.vars())?;
            if !g.is_homogeneous() {
                return Err(Error::Invalid(format!("cone generator {g} is not homogeneous")));
            }
        }
        for i in 0..m {
            for j in 0..m {
                let v: Rational = rep.brackets()[i][j].iter().zip(&beta).map(|(c, b)| c * b).sum();
                if !v.is_zero() {
                    return Err(Error::Invalid(format!(
                        "beta does not vanish on [{}, {}]",
                        rep.labels()[i],
                        rep.labels()[j]
                    )));
                }
            }
        }
        let nonzero: Vec<Polynomial> = ideal.iter().filter(|g| !g.is_zero()).cloned().collect();
        if !nonzero.is_empty() {
            let gb = comm_groebner(&nonzero, &TermOrder::GrevLex)?;
            for i in 0..m {
                let z = rep.field(i);
                for g in &nonzero {
                    if !gb.normal_form(&apply(&z, g)?)?.is_zero() {
                        return Err(Error::Invalid(format!(
                            "cone ideal is not stable under Z({}): fails on {g}",
                            rep.labels()[i]
                        )));
                    }
                }
            }
        }
        Ok(TautSpec { rep, ideal, beta })
    }

    pub fn rep(&self) -> &RepSpec {
        &self.rep
    }

    pub fn ideal(&self) -> &[Polynomial] {
        &self.ideal
    }

    pub fn beta(&self) -> &[Rational] {
        &self.beta
    }

    pub fn beta_of(&self, label: &str) -> Option<&Rational> {
        self.rep.label_index(label).map(|i| &self.beta[i])
    }

    /// The same data with another value of `beta(e)`.
    pub fn with_beta_e(&self, beta_e: Rational) -> Result<Self> {
        let mut beta = self.beta.clone();
        beta[self.rep.scaling_index()] = beta_e;
        TautSpec::new(self.rep.clone(), self.ideal.clone(), beta)
    }

    /// Commutative Groebner basis of the cone ideal, if it is nonzero.
    pub fn ideal_groebner(&self) -> Result<Option<GroebnerBasis>> {
        let nonzero: Vec<Polynomial> = self.ideal.iter().filter(|g| !g.is_zero()).cloned().collect();
        if nonzero.is_empty() {
            Ok(None)
        } else {
            comm_groebner(&nonzero, &TermOrder::GrevLex).map(Some)
        }
    }

    /// Cone generators as operators.
    pub fn ideal_operators(&self) -> Vec<WeylElement> {
        self.ideal
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| WeylElement::from_polynomial(self.rep.context(), g).expect("same variables"))
            .collect()
    }
}

/// Generators of the tautological left ideal: the cone generators followed
/// by `Z(xi) - (trace rho(xi) - beta(xi))` for each basis element.
pub fn build_tauthat(spec: &TautSpec) -> Result<Vec<WeylElement>> {
    let rep = spec.rep();
    let ctx = rep.context();
    let mut out = spec.ideal_operators();
    for (i, b) in spec.beta().iter().enumerate() {
        let shift = trace(rep.matrix(i)) - b;
        let g = &rep.field(i) - &WeylElement::constant(ctx, shift);
        if !g.is_zero() {
            out.push(g);
        }
    }
    for g in &out {
        if !is_euler_homogeneous(g).0 {
            return Err(Error::Invalid(format!("generator {g} is not Euler-homogeneous")));
        }
    }
    Ok(out)
}

/// Whether two generator sets span the same left ideal.
pub fn ideal_equal(a: &[WeylElement], b: &[WeylElement], order: &TermOrder) -> Result<bool> {
    let ga = left_groebner(a, order)?;
    let gb = left_groebner(b, order)?;
    ga.context().check_same(gb.context())?;
    for g in a {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    for g in b {
        if !ga.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generator-wise Fourier-Laplace transform.
pub fn fl_ideal(gens: &[WeylElement]) -> Result<Vec<WeylElement>> {
    gens.iter().map(fourier_laplace).collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepJson {
    labels: Vec<String>,
    matrices: Vec<Vec<Vec<serde_json::Value>>>,
    #[serde(default)]
    brackets: BTreeMap<String, BTreeMap<String, serde_json::Value>>,
    e: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    rep: RepJson,
    #[serde(default)]
    ideal: Vec<String>,
    #[serde(default)]
    beta: BTreeMap<String, serde_json::Value>,
    #[serde(default)]
    vars: Option<Vec<String>>,
}

fn json_rational(v: &serde_json::Value) -> Result<Rational> {
    match v {
        serde_json::Value::String(s) => parse_rational(s),
        serde_json::Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None => Err(Error::Invalid(format!(
                "non-integer number {n}; write fractions as \"p/q\""
            ))),
        },
        other => Err(Error::Invalid(format!("expected a rational, found {other}"))),
    }
}

impl TautSpec {
    /// Reads the JSON form
    /// `{"rep": {"labels", "matrices", "brackets", "e"}, "ideal", "beta", "vars"}`.
    ///
    /// `brackets` maps `"A,B"` to the components of `[A, B]`, e.g.
    /// `{"E12,E21": {"H": "1"}}`; omitted pairs are zero and the opposite
    /// order is implied. `vars` defaults to `x1..xn`.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: SpecJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Invalid(format!("spec JSON: {e}")))?;
        let labels = doc.rep.labels;
        let m = labels.len();
        let index = |l: &str| {
            labels
                .iter()
                .position(|x| x == l.trim())
                .ok_or_else(|| Error::Invalid(format!("unknown label `{l}`")))
        };
        let n = doc.rep.matrices.first().map_or(0, Vec::len);
        let vars = match doc.vars {
            Some(v) => Vars::new(v),
            None => Vars::indexed("x", 1, n),
        };
        let matrices: Vec<Matrix> = doc
            .rep
            .matrices
            .iter()
            .map(|a| a.iter().map(|r| r.iter().map(json_rational).collect()).collect())
            .collect::<Result<_>>()?;
        let mut brackets = vec![vec![vec![Rational::zero(); m]; m]; m];
        let mut given = vec![vec![false; m]; m];
        for (pair, comps) in &doc.rep.brackets {
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| Error::Invalid(format!("bracket key `{pair}` is not `A,B`")))?;
            let (i, j) = (index(a)?, index(b)?);
            let mut v = vec![Rational::zero(); m];
            for (l, c) in comps {
                v[index(l)?] = json_rational(c)?;
            }
            if given[j][i] && brackets[j][i].iter().zip(&v).any(|(x, y)| *x != -y) {
                return Err(Error::Invalid(format!("inconsistent brackets for `{pair}`")));
            }
            brackets[j][i] = v.iter().map(|x| -x).collect();
            brackets[i][j] = v;
            given[i][j] = true;
            given[j][i] = true;
        }
        let e = index(&doc.rep.e)?;
        let rep = RepSpec::new(vars.clone(), labels.clone(), matrices, brackets, e)?;
        let ideal = doc
            .ideal
            .iter()
            .map(|t| Polynomial::parse(t, &vars))
            .collect::<Result<Vec<_>>>()?;
        let mut beta = vec![Rational::zero(); m];
        for (l, v) in &doc.beta {
            beta[index(l)?] = json_rational(v)?;
        }
        TautSpec::new(rep, ideal, beta)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rep = &self.rep;
        let labels = rep.labels();
        let mut brackets = serde_json::Map::new();
        for i in 0..labels.len() {
            for j in i + 1..labels.len() {
                let v = &rep.brackets()[i][j];
                if v.iter().all(Zero::is_zero) {
                    continue;
                }
                let comps: serde_json::Map<String, serde_json::Value> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (labels[k].clone(), c.to_string().into()))
                    .collect();
                brackets.insert(format!("{},{}", labels[i], labels[j]), comps.into());
            }
        }
        let matrices: Vec<Vec<Vec<String>>> = rep
            .matrices()
            .iter()
            .map(|a| a.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect())
            .collect();
        let beta: serde_json::Map<String, serde_json::Value> = self
            .beta
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_zero())
            .map(|(i, b)| (labels[i].clone(), b.to_string().into()))
            .collect();
        serde_json::json!({
            "vars": rep.vars().names(),
            "rep": {
                "labels": labels,
                "matrices": matrices,
                "brackets": brackets,
                "e": labels[rep.scaling_index()],
            },
            "ideal": self.ideal.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "beta": beta,
        })
    }
}
