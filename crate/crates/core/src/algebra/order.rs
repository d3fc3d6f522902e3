use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Monomial well-order on exponent vectors.
///
/// `Weighted` compares the weight first and falls back to `tie` on equal
/// weight; weights are non-negative, so every variant is a multiplicative
/// well-order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum TermOrder {
    Lex,
    GrLex,
    #[default]
    GrevLex,
    Weighted {
        weights: Vec<u32>,
        tie: Box<TermOrder>,
    },
}

impl TermOrder {
    pub fn weighted(weights: Vec<u32>, tie: TermOrder) -> Self {
        TermOrder::Weighted {
            weights,
            tie: Box::new(tie),
        }
    }

    /// `grevlex`, `grlex` or `lex`.
    pub fn from_name(name: &str) -> Result<Self> {
        match name.trim() {
            "grevlex" => Ok(TermOrder::GrevLex),
            "grlex" => Ok(TermOrder::GrLex),
            "lex" => Ok(TermOrder::Lex),
            other => Err(Error::Invalid(format!("unknown term order `{other}`"))),
        }
    }

    /// Reads `TAUT_ORDER`, defaulting to graded reverse lex.
    pub fn from_env() -> Result<Self> {
        match std::env::var("TAUT_ORDER") {
            Ok(v) if !v.trim().is_empty() => TermOrder::from_name(&v),
            _ => Ok(TermOrder::GrevLex),
        }
    }

    /// Block order on vectors of length `len`: the variables listed in `high`
    /// are compared first by graded reverse lex, the remaining ones break
    /// ties by graded reverse lex.
    ///
    /// Built from nested non-negative weight vectors: on a block, graded
    /// reverse lex coincides with comparing the partial sums of the first
    /// `m`, `m-1`, ..., `1` entries in turn.
    pub fn block_grevlex(len: usize, high: &[usize]) -> Self {
        let low: Vec<usize> = (0..len).filter(|i| !high.contains(i)).collect();
        let mut rows = Vec::new();
        for block in [high.to_vec(), low] {
            for keep in (1..=block.len()).rev() {
                let mut w = vec![0; len];
                for &i in &block[..keep] {
                    w[i] = 1;
                }
                rows.push(w);
            }
        }
        rows.into_iter()
            .rev()
            .fold(TermOrder::GrevLex, |tie, w| TermOrder::weighted(w, tie))
    }

    /// Validates the order against a vector length.
    pub fn check_arity(&self, len: usize) -> Result<()> {
        match self {
            TermOrder::Weighted { weights, tie } => {
                if weights.len() != len {
                    return Err(Error::Invalid(format!(
                        "weight vector has length {} but monomials have length {len}",
                        weights.len()
                    )));
                }
                tie.check_arity(len)
            }
            _ => Ok(()),
        }
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GrLex => deg(a).cmp(&deg(b)).then_with(|| a.cmp(b)),
            TermOrder::GrevLex => deg(a).cmp(&deg(b)).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            TermOrder::Weighted { weights, tie } => {
                let wa: u64 = a.iter().zip(weights).map(|(e, w)| *e as u64 * *w as u64).sum();
                let wb: u64 = b.iter().zip(weights).map(|(e, w)| *e as u64 * *w as u64).sum();
                wa.cmp(&wb).then_with(|| tie.cmp(a, b))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            TermOrder::Lex => "lex".into(),
            TermOrder::GrLex => "grlex".into(),
            TermOrder::GrevLex => "grevlex".into(),
            TermOrder::Weighted { weights, tie } => format!("weight{weights:?}/{}", tie.name()),
        }
    }
}

fn deg(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}
