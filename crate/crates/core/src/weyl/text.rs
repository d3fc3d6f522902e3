//! Operator text and JSON forms.
//!
//! Text extends the polynomial grammar with partials `d<name>`; factors are
//! multiplied in the order written, so `d*x` parses to `x*d + 1`.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::context::Symbol;
use super::{WeylContext, WeylElement};
use crate::algebra::parse::{parse_terms, Factor};
use crate::algebra::{parse_rational, Coeff, Rational, TermOrder, Vars};
use crate::error::{Error, Result};

/// Parses operator text in the given context.
pub fn parse_operator<C: Coeff>(text: &str, ctx: &WeylContext) -> Result<WeylElement<C>> {
    let mut out = WeylElement::zero(ctx);
    for term in parse_terms(text)? {
        let sign = if term.negative {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut t = WeylElement::<C>::constant(ctx, sign);
        for f in term.factors {
            let factor = match f {
                Factor::Number(r) => WeylElement::constant(ctx, r),
                Factor::Symbol { name, exp, .. } => {
                    let base = match ctx.resolve(&name) {
                        Some(Symbol::X(i)) => WeylElement::x(ctx, i)?,
                        Some(Symbol::D(i)) => WeylElement::d(ctx, i)?,
                        None => return Err(Error::UnknownVariable(name)),
                    };
                    base.pow(exp)
                }
            };
            t = t.try_mul(&factor)?;
        }
        out = out.try_add(&t)?;
    }
    Ok(out)
}

impl WeylElement<Rational> {
    pub fn parse(text: &str, ctx: &WeylContext) -> Result<Self> {
        parse_operator(text, ctx)
    }
}

fn factors(ctx: &WeylContext, key: &[u32]) -> Vec<String> {
    let n = ctx.len();
    let mut out = Vec::new();
    for i in 0..n {
        if key[i] > 0 {
            out.push(crate::algebra::poly_power(ctx.vars().name(i), key[i]));
        }
    }
    for i in 0..n {
        if key[n + i] > 0 {
            out.push(crate::algebra::poly_power(&ctx.d_name(i), key[n + i]));
        }
    }
    out
}

impl<C: Coeff> WeylElement<C> {
    /// Prints with the given order on `x ++ d`, highest term first.
    pub fn to_string_with(&self, order: &TermOrder) -> String {
        let terms = self.sorted_terms(order);
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (k, c)) in terms.into_iter().enumerate() {
            let fs = factors(self.context(), k);
            match c.as_rational() {
                Some(r) => crate::algebra::write_signed_term(&mut out, idx == 0, &r, &fs),
                None => {
                    if idx > 0 {
                        out.push_str(" + ");
                    }
                    let mut parts = vec![format!("({c})")];
                    parts.extend(fs);
                    out.push_str(&parts.join("*"));
                }
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for WeylElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&TermOrder::GrevLex))
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    x: Vec<u32>,
    d: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct JsonOperator {
    vars: Vec<String>,
    terms: Vec<JsonTerm>,
}

fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl WeylElement<Rational> {
    /// `{"vars": [...], "terms": [{"x", "d", "c"}]}`, terms descending.
    pub fn to_json(&self, order: &TermOrder) -> serde_json::Value {
        let n = self.context().len();
        let terms = self
            .sorted_terms(order)
            .into_iter()
            .map(|(k, c)| JsonTerm {
                x: k[..n].to_vec(),
                d: k[n..].to_vec(),
                c: rational_text(c),
            })
            .collect();
        let doc = JsonOperator {
            vars: self.context().vars().names().to_vec(),
            terms,
        };
        serde_json::to_value(doc).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: JsonOperator =
            serde_json::from_value(value.clone()).map_err(|e| Error::Invalid(format!("operator JSON: {e}")))?;
        let ctx = WeylContext::new(Vars::new(doc.vars));
        let mut out = WeylElement::zero(&ctx);
        for t in doc.terms {
            let c = parse_rational(&t.c)?;
            out = out.try_add(&WeylElement::monomial(&ctx, &t.x, &t.d, c)?)?;
        }
        Ok(out)
    }
}
