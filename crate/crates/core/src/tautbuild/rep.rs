use num_traits::{One, Zero};

use crate::algebra::{Rational, Vars};
use crate::error::{Error, Result};
use crate::weyl::{WeylContext, WeylElement};

/// Square matrix with exact entries.
pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

pub fn zeros(n: usize) -> Matrix {
    vec![vec![Rational::zero(); n]; n]
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn trace(a: &Matrix) -> Rational {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Inverse by Gauss-Jordan elimination; `None` if singular.
pub fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in 0..2 * n {
                    let v = &m[col][k] * &f;
                    m[r][k] = &m[r][k] - &v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// The vector field `-sum_{i,j} a_ji x_i d_j` of the linear action with
/// matrix `a`.
pub fn vector_field(ctx: &WeylContext, a: &Matrix) -> Result<WeylElement> {
    let n = ctx.len();
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid(format!("expected a {n}x{n} matrix")));
    }
    let mut out = WeylElement::zero(ctx);
    for (j, row) in a.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut x = vec![0; n];
            let mut d = vec![0; n];
            x[i] = 1;
            d[j] = 1;
            out = &out + &WeylElement::monomial(ctx, &x, &d, -c)?;
        }
    }
    Ok(out)
}

/// A representation of `g' = g + C e` on `C^n`: basis labels, matrices,
/// structure constants and the index of the scaling element `e`.
#[derive(Clone, Debug)]
pub struct RepSpec {
    ctx: WeylContext,
    labels: Vec<String>,
    matrices: Vec<Matrix>,
    /// `brackets[i][j][k]`: coefficient of basis element `k` in `[xi_i, xi_j]`.
    brackets: Vec<Vec<Vec<Rational>>>,
    e: usize,
}

impl RepSpec {
    /// Validates and builds a representation. Checks dimensions,
    /// antisymmetry of the bracket table, `rho(e) = 1`, and
    /// `[rho(xi), rho(eta)] = rho([xi, eta])` entrywise.
    pub fn new(
        vars: Vars,
        labels: Vec<String>,
        matrices: Vec<Matrix>,
        brackets: Vec<Vec<Vec<Rational>>>,
        e: usize,
    ) -> Result<Self> {
        let n = vars.len();
        let m = labels.len();
        if n == 0 {
            return Err(Error::Invalid("representation of dimension 0".into()));
        }
        if matrices.len() != m || brackets.len() != m {
            return Err(Error::Invalid(format!(
                "{m} labels but {} matrices and {} bracket rows",
                matrices.len(),
                brackets.len()
            )));
        }
        if e >= m {
            return Err(Error::Invalid("scaling element index out of range".into()));
        }
        for (l, a) in labels.iter().zip(&matrices) {
            if a.len() != n || a.iter().any(|r| r.len() != n) {
                return Err(Error::Invalid(format!("matrix of `{l}` is not {n}x{n}")));
            }
        }
        for row in &brackets {
            if row.len() != m || row.iter().any(|v| v.len() != m) {
                return Err(Error::Invalid("bracket table has the wrong shape".into()));
            }
        }
        if matrices[e] != identity(n) {
            return Err(Error::Invalid(format!("`{}` must act as the identity", labels[e])));
        }
        for i in 0..m {
            for j in 0..m {
                let neg: Vec<Rational> = brackets[j][i].iter().map(|c| -c).collect();
                if brackets[i][j] != neg {
                    return Err(Error::Invalid(format!(
                        "bracket table is not antisymmetric at ({}, {})",
                        labels[i], labels[j]
                    )));
                }
                let lhs = commutator(&matrices[i], &matrices[j]);
                let mut rhs = zeros(n);
                for (k, c) in brackets[i][j].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for r in 0..n {
                        for s in 0..n {
                            rhs[r][s] = &rhs[r][s] + c * &matrices[k][r][s];
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "matrices do not respect the bracket [{}, {}]",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(RepSpec {
            ctx: WeylContext::new(vars),
            labels,
            matrices,
            brackets,
            e,
        })
    }

    pub fn context(&self) -> &WeylContext {
        &self.ctx
    }

    pub fn vars(&self) -> &Vars {
        self.ctx.vars()
    }

    pub fn dim(&self) -> usize {
        self.ctx.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    pub fn brackets(&self) -> &[Vec<Vec<Rational>>] {
        &self.brackets
    }

    pub fn scaling_index(&self) -> usize {
        self.e
    }

    /// `Z(xi_i)`.
    pub fn field(&self, i: usize) -> WeylElement {
        vector_field(&self.ctx, &self.matrices[i]).expect("validated matrix")
    }

    /// Indices of the basis of `g` (everything except `e`).
    pub fn semisimple_indices(&self) -> Vec<usize> {
        (0..self.labels.len()).filter(|&i| i != self.e).collect()
    }

    /// Killing form `tr(ad xi ad eta)` of `g`, from the bracket table alone,
    /// on the basis [`RepSpec::semisimple_indices`].
    pub fn killing_form(&self) -> Result<Matrix> {
        let idx = self.semisimple_indices();
        let m = idx.len();
        // ad(xi_a) as an m x m matrix on the basis of g
        let mut ads = Vec::with_capacity(m);
        for &a in &idx {
            let mut ad = zeros(m);
            for (col, &b) in idx.iter().enumerate() {
                let v = &self.brackets[a][b];
                if !v[self.e].is_zero() {
                    return Err(Error::Invalid(format!(
                        "[{}, {}] has a component along the scaling element",
                        self.labels[a], self.labels[b]
                    )));
                }
                for (row, &k) in idx.iter().enumerate() {
                    ad[row][col] = v[k].clone();
                }
            }
            ads.push(ad);
        }
        Ok((0..m)
            .map(|a| (0..m).map(|b| trace(&mat_mul(&ads[a], &ads[b]))).collect())
            .collect())
    }

    /// Whether `[Z(xi), Z(eta)] = Z([xi, eta])` for all basis pairs.
    pub fn lie_hom_check(&self) -> bool {
        let fields: Vec<WeylElement> = (0..self.labels.len()).map(|i| self.field(i)).collect();
        for i in 0..fields.len() {
            for j in 0..fields.len() {
                let lhs = fields[i].bracket(&fields[j]).expect("same context");
                let mut rhs = WeylElement::zero(&self.ctx);
                for (k, c) in self.brackets[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        rhs = &rhs + &fields[k].scale(c);
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Bracket table of `sl2 + C e` on the basis `E12, E21, H, e`.
pub(crate) fn sl2_brackets(offset: usize, size: usize, table: &mut [Vec<Vec<Rational>>]) {
    let (e, f, h) = (offset, offset + 1, offset + 2);
    let mut set = |a: usize, b: usize, k: usize, c: i64| {
        let mut v = vec![Rational::zero(); size];
        v[k] = Rational::from_integer(c.into());
        table[b][a] = v.iter().map(|x| -x).collect();
        table[a][b] = v;
    };
    set(e, f, h, 1);
    set(h, e, e, 2);
    set(h, f, f, -2);
}
