use std::sync::Arc;

use crate::algebra::Vars;
use crate::error::{Error, Result};

/// Variables `x_1..x_n` of a Weyl algebra together with the set of
/// localized ones.
///
/// A localized variable never appears in an x-exponent: its powers (and
/// inverses) live in rational-function coefficients, and its partial
/// derivative acts on them by the quotient rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylContext {
    vars: Vars,
    localized: Arc<Vec<bool>>,
}

/// What a symbol in operator text refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    X(usize),
    D(usize),
}

impl WeylContext {
    pub fn new(vars: Vars) -> Self {
        let n = vars.len();
        WeylContext {
            vars,
            localized: Arc::new(vec![false; n]),
        }
    }

    pub fn from_names<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Self::new(Vars::new(names))
    }

    /// Context in which the listed variables are localized.
    pub fn with_localized(vars: Vars, localized: &[usize]) -> Result<Self> {
        let mut flags = vec![false; vars.len()];
        for &i in localized {
            if i >= vars.len() {
                return Err(Error::Invalid(format!("no variable with index {i}")));
            }
            flags[i] = true;
        }
        Ok(WeylContext {
            vars,
            localized: Arc::new(flags),
        })
    }

    /// The same variables, all localized: the ring `Q(x)<d>`.
    pub fn localize_all(&self) -> Self {
        WeylContext {
            vars: self.vars.clone(),
            localized: Arc::new(vec![true; self.vars.len()]),
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn is_localized(&self, i: usize) -> bool {
        self.localized[i]
    }

    pub fn has_localized(&self) -> bool {
        self.localized.iter().any(|&b| b)
    }

    pub fn check_same(&self, other: &WeylContext) -> Result<()> {
        self.vars.check_same(&other.vars)?;
        if self.localized != other.localized {
            return Err(Error::ContextMismatch("different localized variables".into()));
        }
        Ok(())
    }

    /// Resolves a name to a variable or a partial derivative.
    ///
    /// `d<rest>` denotes the partial in `rest` when `rest` is a variable;
    /// otherwise `rest` may be the variable name with its alphabetic prefix
    /// dropped (`d11` for `x11`, `d0` for `z0`), provided that is unique.
    pub fn resolve(&self, name: &str) -> Option<Symbol> {
        if let Some(i) = self.vars.index_of(name) {
            return Some(Symbol::X(i));
        }
        let rest = name.strip_prefix('d')?;
        if rest.is_empty() {
            return (self.len() == 1).then_some(Symbol::D(0));
        }
        if let Some(i) = self.vars.index_of(rest) {
            return Some(Symbol::D(i));
        }
        let mut hits = (0..self.len()).filter(|&i| short_suffix(self.vars.name(i)) == Some(rest));
        match (hits.next(), hits.next()) {
            (Some(i), None) => Some(Symbol::D(i)),
            _ => None,
        }
    }

    /// Printed name of the partial in variable `i`; the short form is used
    /// whenever it resolves back unambiguously.
    pub fn d_name(&self, i: usize) -> String {
        if let Some(s) = short_suffix(self.vars.name(i)) {
            let cand = format!("d{s}");
            if self.resolve(&cand) == Some(Symbol::D(i)) {
                return cand;
            }
        }
        format!("d{}", self.vars.name(i))
    }
}

/// The part of a name after its leading letters, if both parts are nonempty.
fn short_suffix(name: &str) -> Option<&str> {
    let cut = name.find(|c: char| !c.is_alphabetic())?;
    (cut > 0).then(|| &name[cut..])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_partials() {
        let c = WeylContext::from_names(["x11", "x12", "x21", "x22"]);
        assert_eq!(c.resolve("d11"), Some(Symbol::D(0)));
        assert_eq!(c.resolve("dx22"), Some(Symbol::D(3)));
        assert_eq!(c.resolve("x21"), Some(Symbol::X(2)));
        assert_eq!(c.resolve("d13"), None);
        assert_eq!(c.d_name(1), "d12");

        let c = WeylContext::from_names(["lambda", "s"]);
        assert_eq!(c.resolve("dlambda"), Some(Symbol::D(0)));
        assert_eq!(c.d_name(1), "ds");

        let one = WeylContext::from_names(["t"]);
        assert_eq!(one.resolve("d"), Some(Symbol::D(0)));
        assert_eq!(one.resolve("dt"), Some(Symbol::D(0)));
        assert_eq!(one.d_name(0), "dt");

        // prefix stripping must be unambiguous
        let c = WeylContext::from_names(["x1", "y1"]);
        assert_eq!(c.resolve("d1"), None);
        assert_eq!(c.d_name(0), "dx1");
    }
}
