//! Named verification suites behind `taut verify`.

use serde_json::json;

use super::Outcome;
use crate::algebra::{rat, Polynomial, Rational, RationalFunction, TermOrder, Vars};
use crate::charts::{
    gluing_cocycle_check, gluing_table, nbeta_chart_reduction, nbeta_expected_nonzero, verify_chart_consistency,
};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::tautbuild::{
    build_tauthat, casimir_weyl, family_weight, ideal_equal, rnc_spec, segre_reference_generators, segre_rep,
    segre_spec, sym_power_rep, verify_casimir_identity, verify_zztop,
};
use crate::topo::{rank_crosscheck, FamilyCase};
use crate::weyl::{apply, fourier_laplace, left_groebner, WeylContext, WeylElement};

/// Suite names accepted by [`run_suite`], besides `all` and `list`.
pub const SUITES: [&str; 13] = [
    "segre-membership",
    "segre-ideal",
    "beta-formula",
    "root-identities",
    "casimir",
    "zztop",
    "casimir-identity",
    "fl-convention",
    "rank",
    "charts",
    "gluing",
    "nbeta",
    "lie-hom",
];

/// Root systems swept by the exhaustive suites.
pub(crate) const SHIPPED_TYPES: [&str; 16] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8", "A1xA1", "A1xA1xA1", "A1xA2",
];

type Checks = Vec<(String, bool)>;

fn subsets(rank: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u32 << rank).map(move |m| (0..rank).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
}

fn segre_membership() -> Result<Checks> {
    let spec = segre_spec(rat(2, 1))?;
    let gens = build_tauthat(&spec)?;
    let ctx = spec.rep().context().clone();
    let gb = left_groebner(&gens, &TermOrder::GrevLex)?;
    let p = WeylElement::parse("d11*d22 - d21*d12", &ctx)?;
    let mut out = vec![("P is nonzero".to_string(), !gb.normal_form(&p)?.is_zero())];
    for x in ["x11", "x12", "x21", "x22"] {
        let xp = &WeylElement::parse(x, &ctx)? * &p;
        out.push((format!("{x}*P is zero"), gb.normal_form(&xp)?.is_zero()));
    }
    Ok(out)
}

fn segre_ideal() -> Result<Checks> {
    let gens = build_tauthat(&segre_spec(rat(2, 1))?)?;
    let same = ideal_equal(&gens, &segre_reference_generators(), &TermOrder::GrevLex)?;
    Ok(vec![("built ideal equals the hand-written list".into(), same)])
}

fn beta_formula() -> Result<Checks> {
    let mut out = Checks::new();
    let a1 = RootSystem::parse("A1")?;
    for k in 1..=6i64 {
        let b = a1.beta_value(&Weight::from_ints(&[k]))?;
        out.push((format!("A1, mu = {k}: beta = {}", rat(2, k)), b == rat(2, k)));
    }
    let a1a1 = RootSystem::parse("A1xA1")?;
    out.push((
        "A1xA1, mu = [1, 1]: beta = 2".into(),
        a1a1.beta_value(&Weight::from_ints(&[1, 1]))? == rat(2, 1),
    ));
    let a3 = RootSystem::parse("A3")?;
    out.push((
        "A3, mu = omega_2: beta = 4".into(),
        a3.beta_value(&Weight::from_ints(&[0, 1, 0]))? == rat(4, 1),
    ));
    for t in SHIPPED_TYPES {
        let rs = RootSystem::parse(t)?;
        let mut all = true;
        for s in subsets(rs.rank()).filter(|s| s.len() < rs.rank()) {
            let mu = rs.delta_i(&s)?.scale(&rat(2, 1));
            all &= rs.beta_value(&mu)? == Rational::from_integer(1.into());
        }
        out.push((format!("{t}: beta(2 delta_I) = 1 for every proper I"), all));
    }
    Ok(out)
}

fn root_identities() -> Result<Checks> {
    let mut out = Checks::new();
    for t in ["A1", "A2", "A3", "B2", "G2", "A1xA1", "A1xA1xA1"] {
        let rs = RootSystem::parse(t)?;
        let (mut l69, mut fano) = (true, true);
        for s in subsets(rs.rank()) {
            l69 &= rs.lemma69(&s)?;
            fano &= rs.fano_check(&s)?;
        }
        out.push((format!("{t}: <delta, delta_I> = <delta_I, delta_I> for all I"), l69));
        out.push((format!("{t}: delta_I ample for all I"), fano));
    }
    Ok(out)
}

/// Casimir value on the adjoint representation and on linear forms of
/// binary forms.
fn casimir() -> Result<Checks> {
    let mut out = Checks::new();
    for t in ["A1", "A2", "A3", "B2", "C3", "D4", "G2", "F4", "E6", "E7", "E8"] {
        let rs = RootSystem::parse(t)?;
        let theta = rs.highest_roots().remove(0);
        let v = rs.killing_pairing(&theta, &theta)? + rat(2, 1) * rs.killing_pairing(&rs.weyl_vector(), &theta)?;
        out.push((format!("{t}: adjoint Casimir = 1"), v == rat(1, 1)));
    }
    for k in 1..=4usize {
        let rep = sym_power_rep(k)?;
        let c = casimir_weyl(&rep)?;
        let scalar = rat((k * (k + 2)) as i64, 8);
        let mut ok = true;
        for i in 0..=k {
            let x = Polynomial::var(rep.vars(), i);
            ok &= apply(&c, &x)? == x.scale(&scalar);
        }
        out.push((format!("Sym^{k}: Z(C) = {scalar} on linear forms"), ok));
    }
    Ok(out)
}

fn shipped_cones() -> Result<Vec<(&'static str, crate::tautbuild::TautSpec, u32)>> {
    Ok(vec![
        ("rnc:2", rnc_spec(2, rat(1, 1))?, 3),
        ("rnc:3", rnc_spec(3, rat(2, 3))?, 2),
        ("segre", segre_spec(rat(2, 1))?, 2),
    ])
}

fn zztop() -> Result<Checks> {
    let mut out = Checks::new();
    for (name, spec, _) in shipped_cones()? {
        let (rs, mu) = family_weight(name)?;
        out.push((
            format!("{name}: Casimir identity in D*I"),
            verify_zztop(&spec, &rs, &mu)?,
        ));
    }
    Ok(out)
}

fn casimir_identity() -> Result<Checks> {
    let mut out = Checks::new();
    for (name, spec, dmax) in shipped_cones()? {
        let (rs, mu) = family_weight(name)?;
        out.push((
            format!("{name}: Casimir scalar on degrees <= {dmax}"),
            verify_casimir_identity(&spec, &rs, &mu, dmax)?,
        ));
    }
    Ok(out)
}

fn fl_convention() -> Result<Checks> {
    let ctx = WeylContext::from_names(["t"]);
    let mut out = Checks::new();
    for beta in [rat(0, 1), rat(1, 2), rat(-3, 4)] {
        let dt_t = WeylElement::parse("dt*t", &ctx)?;
        let src = &dt_t + &WeylElement::constant(&ctx, beta.clone());
        let dst = &dt_t - &WeylElement::constant(&ctx, &beta + rat(1, 1));
        let same = ideal_equal(
            &[fourier_laplace(&src)?],
            std::slice::from_ref(&dst),
            &TermOrder::GrevLex,
        )?;
        out.push((format!("FL <{src}> = <{dst}>"), same));
    }
    Ok(out)
}

fn rank() -> Result<Checks> {
    let mut out = Checks::new();
    for (name, beta) in [
        ("rnc:2", rat(1, 1)),
        ("rnc:3", rat(2, 3)),
        ("rnc:4", rat(1, 2)),
        ("segre", rat(2, 1)),
    ] {
        let case = FamilyCase::named(name, beta)?;
        out.push((
            format!("{case}: Groebner rank = topological rank"),
            rank_crosscheck(&case)?,
        ));
    }
    Ok(out)
}

fn charts(kmax: usize) -> Result<Checks> {
    (1..=kmax)
        .map(|k| Ok((format!("k = {k}: chart fields glue"), verify_chart_consistency(k)?)))
        .collect()
}

fn gluing() -> Result<Checks> {
    let vars = Vars::new(["x", "y"]);
    gluing_table()
        .into_iter()
        .map(|(alpha, k, beta)| {
            let a = RationalFunction::parse(alpha, &vars)?;
            Ok((
                format!("alpha = {alpha}, k = {k}, beta = {beta}"),
                gluing_cocycle_check(&a, k, &beta)?,
            ))
        })
        .collect()
}

fn nbeta(k: Option<usize>, beta: Option<Rational>) -> Result<Checks> {
    let mut out = Checks::new();
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=5).collect(),
    };
    for k in ks {
        let kk = k as i64;
        let betas = match &beta {
            Some(b) => vec![b.clone()],
            None => {
                let mut sweep = vec![rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 2), rat(2, kk), rat(3, kk)];
                sweep.sort();
                sweep.dedup();
                sweep
            }
        };
        for b in betas {
            let vanishes = nbeta_chart_reduction(k, &b)?;
            let state = if vanishes { "vanishes" } else { "is nonzero" };
            out.push((
                format!("k = {k}, beta0 = {b}: module {state}"),
                vanishes != nbeta_expected_nonzero(k, &b),
            ));
        }
    }
    Ok(out)
}

fn lie_hom() -> Result<Checks> {
    let mut out: Checks = (1..=5)
        .map(|k| Ok((format!("Sym^{k}"), sym_power_rep(k)?.lie_hom_check())))
        .collect::<Result<_>>()?;
    out.push(("Segre".into(), segre_rep().lie_hom_check()));
    Ok(out)
}

fn checks_for(name: &str, k: Option<usize>, beta: Option<Rational>) -> Result<Checks> {
    match name {
        "segre-membership" => segre_membership(),
        "segre-ideal" => segre_ideal(),
        "beta-formula" => beta_formula(),
        "root-identities" => root_identities(),
        "casimir" => casimir(),
        "zztop" => zztop(),
        "casimir-identity" => casimir_identity(),
        "fl-convention" => fl_convention(),
        "rank" => rank(),
        "charts" => charts(k.unwrap_or(5)),
        "gluing" => gluing(),
        "nbeta" => nbeta(k, beta),
        "lie-hom" => lie_hom(),
        other => Err(Error::Invalid(format!(
            "unknown suite `{other}`; try `taut verify list`"
        ))),
    }
}

fn render(name: &str, checks: &Checks) -> (String, serde_json::Value, bool) {
    let ok = checks.iter().all(|(_, p)| *p);
    let mut text = String::new();
    for (label, pass) in checks {
        text.push_str(&format!("{} {name}: {label}\n", if *pass { "PASS" } else { "FAIL" }));
    }
    let items: Vec<_> = checks.iter().map(|(l, p)| json!({"check": l, "pass": p})).collect();
    (text, json!({"suite": name, "pass": ok, "checks": items}), ok)
}

/// Runs one suite, `all` (every suite concurrently) or `list`.
pub fn run_suite(name: &str, k: Option<usize>, beta: Option<Rational>) -> Result<Outcome> {
    match name {
        "list" => Ok(Outcome::success(SUITES.join("\n"), json!({"suites": SUITES}))),
        "all" => {
            let results: Vec<Result<Checks>> = std::thread::scope(|s| {
                let handles: Vec<_> = SUITES
                    .iter()
                    .map(|n| {
                        let beta = beta.clone();
                        s.spawn(move || checks_for(n, k, beta))
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
            });
            let mut text = String::new();
            let mut suites = Vec::new();
            let mut ok = true;
            for (n, r) in SUITES.iter().zip(results) {
                let (t, j, pass) = render(n, &r?);
                text.push_str(&t);
                suites.push(j);
                ok &= pass;
            }
            Ok(Outcome {
                text: text.trim_end().to_string(),
                json: json!({"suite": "all", "pass": ok, "suites": suites}),
                ok,
            })
        }
        _ => {
            let (text, json, ok) = render(name, &checks_for(name, k, beta)?);
            Ok(Outcome {
                text: text.trim_end().to_string(),
                json,
                ok,
            })
        }
    }
}
