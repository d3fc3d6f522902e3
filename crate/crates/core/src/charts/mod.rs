//! Chart computations on the punctured cone over the rational normal curve:
//! vector fields with rational coefficients, their pushforward along
//! coordinate changes, the line-bundle gluing equation and the chart-local
//! vanishing test for the twisted group-action module.

use std::fmt;

use num_traits::One;

use crate::algebra::{Rational, RationalFunction, TermOrder, Vars};
use crate::error::{Error, Result};
use crate::weyl::{left_groebner, WeylContext, WeylElement};

/// `sum_i c_i d_i` with rational-function coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalVectorField {
    vars: Vars,
    coeffs: Vec<RationalFunction>,
}

impl RationalVectorField {
    pub fn new(vars: &Vars, coeffs: Vec<RationalFunction>) -> Result<Self> {
        if coeffs.len() != vars.len() {
            return Err(Error::Invalid(format!(
                "{} coefficients for {} variables",
                coeffs.len(),
                vars.len()
            )));
        }
        for c in &coeffs {
            vars.check_same(c.vars())?;
        }
        Ok(RationalVectorField {
            vars: vars.clone(),
            coeffs,
        })
    }

    /// Parses one coefficient per variable (`num` or `num // den`).
    pub fn parse(vars: &Vars, coeffs: &[&str]) -> Result<Self> {
        let cs = coeffs
            .iter()
            .map(|t| RationalFunction::parse(t, vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vars, cs)
    }

    pub fn zero(vars: &Vars) -> Self {
        RationalVectorField {
            vars: vars.clone(),
            coeffs: vec![RationalFunction::zero(vars); vars.len()],
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn coefficients(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RationalFunction::is_zero)
    }

    /// `X(f) = sum_i c_i df/dx_i`.
    pub fn apply(&self, f: &RationalFunction) -> Result<RationalFunction> {
        self.vars.check_same(f.vars())?;
        let mut acc = RationalFunction::zero(&self.vars);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() && f.depends_on(i) {
                acc = acc.try_add(&c.try_mul(&f.derivative(i))?)?;
            }
        }
        Ok(acc)
    }

    /// Lie bracket `[X, Y]_j = X(Y_j) - Y(X_j)`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        let coeffs = (0..self.vars.len())
            .map(|j| self.apply(&other.coeffs[j])?.try_sub(&other.apply(&self.coeffs[j])?))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.vars, coeffs)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.vars, coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalVectorField {
            vars: self.vars.clone(),
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }
}

impl fmt::Display for RationalVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*d{}", self.vars.name(i))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A birational change of coordinates `source -> target` given by both
/// directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateMap {
    source: Vars,
    target: Vars,
    forward: Vec<RationalFunction>,
    inverse: Vec<RationalFunction>,
}

fn is_identity(map: &[RationalFunction], vars: &Vars) -> bool {
    map.iter()
        .enumerate()
        .all(|(i, f)| *f == RationalFunction::var(vars, i))
}

impl CoordinateMap {
    /// `forward` lives in the source variables, `inverse` in the target ones;
    /// both composites must be the identity.
    pub fn new(
        source: &Vars,
        target: &Vars,
        forward: Vec<RationalFunction>,
        inverse: Vec<RationalFunction>,
    ) -> Result<Self> {
        if forward.len() != target.len() || inverse.len() != source.len() {
            return Err(Error::Invalid(
                "coordinate map has the wrong number of components".into(),
            ));
        }
        for f in &forward {
            source.check_same(f.vars())?;
        }
        for g in &inverse {
            target.check_same(g.vars())?;
        }
        let there_and_back = inverse
            .iter()
            .map(|g| g.compose(&forward, source))
            .collect::<Result<Vec<_>>>()?;
        let back_and_there = forward
            .iter()
            .map(|f| f.compose(&inverse, target))
            .collect::<Result<Vec<_>>>()?;
        if !is_identity(&there_and_back, source) || !is_identity(&back_and_there, target) {
            return Err(Error::Invalid("coordinate map data are not mutually inverse".into()));
        }
        Ok(CoordinateMap {
            source: source.clone(),
            target: target.clone(),
            forward,
            inverse,
        })
    }

    pub fn identity(vars: &Vars) -> Self {
        let id: Vec<RationalFunction> = (0..vars.len()).map(|i| RationalFunction::var(vars, i)).collect();
        CoordinateMap {
            source: vars.clone(),
            target: vars.clone(),
            forward: id.clone(),
            inverse: id,
        }
    }

    pub fn source(&self) -> &Vars {
        &self.source
    }

    pub fn target(&self) -> &Vars {
        &self.target
    }

    pub fn forward(&self) -> &[RationalFunction] {
        &self.forward
    }

    pub fn inverse(&self) -> &[RationalFunction] {
        &self.inverse
    }

    /// `other` after `self`.
    pub fn then(&self, other: &CoordinateMap) -> Result<Self> {
        self.target.check_same(&other.source)?;
        let forward = other
            .forward
            .iter()
            .map(|f| f.compose(&self.forward, &self.source))
            .collect::<Result<Vec<_>>>()?;
        let inverse = self
            .inverse
            .iter()
            .map(|g| g.compose(&other.inverse, &other.target))
            .collect::<Result<Vec<_>>>()?;
        CoordinateMap::new(&self.source, &other.target, forward, inverse)
    }
}

/// Chain rule: the pushed field has coefficients `sum_i (dF_j/dx_i) c_i`,
/// rewritten in the target coordinates through the inverse map.
pub fn pushforward(vf: &RationalVectorField, map: &CoordinateMap) -> Result<RationalVectorField> {
    vf.vars.check_same(&map.source)?;
    let coeffs = map
        .forward
        .iter()
        .map(|f| vf.apply(f)?.compose(&map.inverse, &map.target))
        .collect::<Result<Vec<_>>>()?;
    RationalVectorField::new(&map.target, coeffs)
}

/// The two standard charts of the punctured cone: `U0` with coordinates
/// `(lambda, s)` mapping to `lambda (1, k s, C(k,2) s^2, ..., s^k)` and `U1`
/// with `(mu, t)` mapping to `mu (t^k, ..., k t, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    U0,
    U1,
}

impl Chart {
    pub fn vars(self) -> Vars {
        match self {
            Chart::U0 => Vars::new(["lambda", "s"]),
            Chart::U1 => Vars::new(["mu", "t"]),
        }
    }
}

fn field(vars: &Vars, scale_coeff: RationalFunction, curve_coeff: RationalFunction) -> RationalVectorField {
    RationalVectorField::new(vars, vec![scale_coeff, curve_coeff]).expect("two coefficients")
}

/// The restrictions of `Z(E12), Z(E21), Z(H), Z(e)` to a chart.
pub fn rnc_chart_fields(k: usize, chart: Chart) -> Result<[RationalVectorField; 4]> {
    if k < 1 {
        return Err(Error::Invalid("degree must be at least 1".into()));
    }
    let vars = chart.vars();
    let kk = Rational::from_integer(k.into());
    let c = |v: i64| RationalFunction::constant(&vars, Rational::from_integer(v.into()));
    let r = RationalFunction::var(&vars, 0);
    let u = RationalFunction::var(&vars, 1);
    let zero = RationalFunction::zero(&vars);
    let ru = &r * &u;
    let uu = &u * &u;
    let moving = field(&vars, ru.scale(&-&kk), uu);
    let fixed = field(&vars, zero.clone(), c(-1));
    let weight = field(&vars, r.scale(&-&kk), u.scale(&Rational::from_integer(2.into())));
    let euler = field(&vars, -&r, zero);
    Ok(match chart {
        Chart::U0 => [moving, fixed, weight, euler],
        Chart::U1 => [fixed, moving, weight.scale(&-Rational::one()), euler],
    })
}

/// `(lambda, s) -> (lambda s^k, 1/s)`.
pub fn rnc_gluing(k: usize) -> Result<CoordinateMap> {
    let src = Chart::U0.vars();
    let tgt = Chart::U1.vars();
    let kk = k as i64;
    let l = RationalFunction::var(&src, 0);
    let s = RationalFunction::var(&src, 1);
    let m = RationalFunction::var(&tgt, 0);
    let t = RationalFunction::var(&tgt, 1);
    CoordinateMap::new(
        &src,
        &tgt,
        vec![&l * &s.pow(kk)?, s.inv()?],
        vec![&m * &t.pow(kk)?, t.inv()?],
    )
}

/// Whether the `U0` fields push forward to the `U1` fields.
pub fn verify_chart_consistency(k: usize) -> Result<bool> {
    let glue = rnc_gluing(k)?;
    let u0 = rnc_chart_fields(k, Chart::U0)?;
    let u1 = rnc_chart_fields(k, Chart::U1)?;
    for (a, b) in u0.iter().zip(&u1) {
        if pushforward(a, &glue)? != *b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the logarithmic-derivative equation of the gluing: with
/// transition function `alpha^k` and `m = k (beta + 1)`, the function
/// `h = alpha^m` satisfies `h^-1 dh = (beta + 1) (alpha^k)^-1 d(alpha^k)`
/// in every variable.
pub fn gluing_cocycle_check(alpha: &RationalFunction, k: u32, beta: &Rational) -> Result<bool> {
    if alpha.is_zero() {
        return Err(Error::Invalid("transition function must be nonzero".into()));
    }
    let shift = beta + Rational::one();
    let m = &shift * Rational::from_integer(k.into());
    if !m.is_integer() {
        return Err(Error::Invalid(format!("k (beta + 1) = {m} is not an integer")));
    }
    let m: i64 = m
        .to_integer()
        .try_into()
        .map_err(|_| Error::Unsupported("exponent out of range".into()))?;
    let h = alpha.pow(m)?;
    let ak = alpha.pow(k as i64)?;
    for l in 0..alpha.vars().len() {
        let lhs = h.derivative(l).try_div(&h)?;
        let rhs = ak.derivative(l).try_div(&ak)?.scale(&shift);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The `(alpha, k, beta)` triples exercised by the gluing check, with
/// `alpha` over the variables `x, y`.
pub fn gluing_table() -> Vec<(&'static str, u32, Rational)> {
    let r = |p: i64, q: i64| Rational::new(p.into(), q.into());
    vec![
        ("x", 2, r(1, 2)),
        ("x", 1, r(-1, 1)),
        ("x", 3, r(2, 3)),
        ("x^2 + 1", 3, r(2, 3)),
        ("x*y", 2, r(1, 1)),
        ("x - y", 4, r(1, 2)),
        ("x^2 + y^2 + 1", 5, r(-3, 5)),
        ("x // y", 2, r(-1, 2)),
        ("x + 2*y", 6, r(1, 3)),
    ]
}

/// The cyclic module presented in the `U0` chart by the transposed
/// generators `k s dl l - ds s^2, ds, k dl l - 2 ds s, dl l - beta0`, with
/// `lambda` localized.
pub fn nbeta_chart_generators(k: usize, beta0: &Rational) -> Result<Vec<WeylElement<RationalFunction>>> {
    if k < 1 {
        return Err(Error::Invalid("degree must be at least 1".into()));
    }
    let ctx = WeylContext::with_localized(Chart::U0.vars(), &[0])?;
    let kk = Rational::from_integer(k.into());
    let lam = WeylElement::<RationalFunction>::x(&ctx, 0)?;
    let s = WeylElement::<RationalFunction>::x(&ctx, 1)?;
    let dl = WeylElement::<RationalFunction>::d(&ctx, 0)?;
    let ds = WeylElement::<RationalFunction>::d(&ctx, 1)?;
    let dl_l = &dl * &lam;
    let ds_s = &ds * &s;
    let konst = |c: Rational| WeylElement::<RationalFunction>::constant(&ctx, c);
    Ok(vec![
        &(&s * &dl_l).scale(&kk) - &(&ds_s * &s),
        ds,
        &dl_l.scale(&kk) - &ds_s.scale(&Rational::from_integer(2.into())),
        &dl_l - &konst(beta0.clone()),
    ])
}

/// Whether the chart-local module vanishes, i.e. the left ideal is the whole
/// ring.
pub fn nbeta_chart_reduction(k: usize, beta0: &Rational) -> Result<bool> {
    let gens = nbeta_chart_generators(k, beta0)?;
    Ok(left_groebner(&gens, &TermOrder::GrevLex)?.is_unit())
}

/// One-variable form of the shift isomorphism between the modules for
/// `beta` and `beta + 1` on `C*`: right multiplication by `t` maps
/// `D (dt t - beta - 1)` into `D (dt t - beta)`, and right multiplication by
/// `t^-1` maps back.
pub fn twist_shift_check(beta: &Rational) -> Result<bool> {
    let ctx = WeylContext::with_localized(Vars::new(["t"]), &[0])?;
    let t = WeylElement::<RationalFunction>::x(&ctx, 0)?;
    let t_inv = WeylElement::from_coeff(&ctx, RationalFunction::var(ctx.vars(), 0).inv()?);
    let dt_t = &WeylElement::<RationalFunction>::d(&ctx, 0)? * &t;
    let konst = |c: Rational| WeylElement::<RationalFunction>::constant(&ctx, c);
    let lower = &dt_t - &konst(beta.clone());
    let upper = &dt_t - &konst(beta + Rational::one());
    let lower_gb = left_groebner(std::slice::from_ref(&lower), &TermOrder::GrevLex)?;
    let upper_gb = left_groebner(std::slice::from_ref(&upper), &TermOrder::GrevLex)?;
    Ok(lower_gb.contains(&(&upper * &t))? && upper_gb.contains(&(&lower * &t_inv))?)
}

/// `k beta0 = 2`, the closed form of the vanishing dichotomy.
pub fn nbeta_expected_nonzero(k: usize, beta0: &Rational) -> bool {
    Rational::from_integer(k.into()) * beta0 == Rational::from_integer(2.into())
}
