//! Acceptance suite: each criterion runs under its time budget and prints
//! one PASS or FAIL line. Any failure makes the binary exit nonzero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tautsys::algebra::{comm_groebner, rat, Monomial, Polynomial, RationalFunction, TermOrder, Vars};
use tautsys::charts::{gluing_cocycle_check, gluing_table, nbeta_chart_reduction, verify_chart_consistency};
use tautsys::rootsys::{RootSystem, Weight};
use tautsys::tautbuild::{
    build_tauthat, casimir_weyl, family_spec, family_weight, fl_ideal, ideal_equal, rnc_spec,
    segre_reference_generators, segre_rep, segre_spec, sym_power_rep, verify_casimir_identity, verify_zztop,
};
use tautsys::topo::{expected_rank, FamilyCase};
use tautsys::weyl::{
    antipode, apply, fourier_laplace, holonomic_rank, is_euler_homogeneous, left_groebner, transpose, Rank,
    WeylContext, WeylElement,
};

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn lift<T>(r: tautsys::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn subsets(rank: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u32 << rank).map(move |m| (0..rank).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
}

fn segre_membership() -> Outcome {
    let spec = lift(segre_spec(rat(2, 1)))?;
    let ctx = spec.rep().context().clone();
    let gb = lift(left_groebner(&lift(build_tauthat(&spec))?, &TermOrder::GrevLex))?;
    let p = lift(WeylElement::parse("d11*d22 - d21*d12", &ctx))?;
    ensure(!lift(gb.normal_form(&p))?.is_zero(), || "P reduces to zero".into())?;
    for x in ["x11", "x12", "x21", "x22"] {
        let xp = &lift(WeylElement::parse(x, &ctx))? * &p;
        ensure(lift(gb.normal_form(&xp))?.is_zero(), || {
            format!("{x}*P is not in the ideal")
        })?;
    }
    Ok(())
}

fn segre_ideal_equality() -> Outcome {
    let built = lift(build_tauthat(&lift(segre_spec(rat(2, 1)))?))?;
    let same = lift(ideal_equal(&built, &segre_reference_generators(), &TermOrder::GrevLex))?;
    ensure(same, || "ideals differ".into())
}

const SHIPPED_TYPES: [&str; 16] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8", "A1xA1", "A1xA1xA1", "A1xA2",
];

fn beta_formula() -> Outcome {
    let a1 = lift(RootSystem::parse("A1"))?;
    for k in 1..=6 {
        let b = lift(a1.beta_value(&Weight::from_ints(&[k])))?;
        ensure(b == rat(2, k), || format!("A1, mu = {k}: got {b}"))?;
    }
    let b = lift(lift(RootSystem::parse("A1xA1"))?.beta_value(&Weight::from_ints(&[1, 1])))?;
    ensure(b == rat(2, 1), || format!("A1xA1: got {b}"))?;
    let b = lift(lift(RootSystem::parse("A3"))?.beta_value(&Weight::from_ints(&[0, 1, 0])))?;
    ensure(b == rat(4, 1), || format!("Gr(2,4): got {b}"))?;
    for t in SHIPPED_TYPES {
        let rs = lift(RootSystem::parse(t))?;
        for s in subsets(rs.rank()).filter(|s| s.len() < rs.rank()) {
            let mu = lift(rs.delta_i(&s))?.scale(&rat(2, 1));
            let b = lift(rs.beta_value(&mu))?;
            ensure(b == rat(1, 1), || format!("{t}, I = {s:?}: got {b}"))?;
        }
    }
    Ok(())
}

fn root_identities() -> Outcome {
    for t in ["A1", "A2", "A3", "B2", "G2", "A1xA1", "A1xA1xA1", "A1xA1xA1xA1"] {
        let rs = lift(RootSystem::parse(t))?;
        for s in subsets(rs.rank()) {
            ensure(lift(rs.lemma69(&s))?, || {
                format!("{t}, I = {s:?}: pairing identity fails")
            })?;
            ensure(lift(rs.fano_check(&s))?, || format!("{t}, I = {s:?}: not Fano"))?;
        }
    }
    Ok(())
}

fn casimir_suite() -> Outcome {
    for t in [
        "A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8",
    ] {
        let rs = lift(RootSystem::parse(t))?;
        let theta = rs.highest_roots().remove(0);
        let v = lift(rs.killing_pairing(&theta, &theta))?
            + rat(2, 1) * lift(rs.killing_pairing(&rs.weyl_vector(), &theta))?;
        ensure(v == rat(1, 1), || format!("{t}: adjoint Casimir {v}"))?;
    }
    for k in 1..=4usize {
        let rep = lift(sym_power_rep(k))?;
        let c = lift(casimir_weyl(&rep))?;
        let scalar = rat((k * (k + 2)) as i64, 8);
        for i in 0..=k {
            let z = Polynomial::var(rep.vars(), i);
            ensure(lift(apply(&c, &z))? == z.scale(&scalar), || {
                format!("Sym^{k}: not scalar on {z}")
            })?;
        }
    }
    Ok(())
}

fn cones() -> Result<Vec<(&'static str, tautsys::tautbuild::TautSpec, u32)>, String> {
    Ok(vec![
        ("rnc:2", lift(rnc_spec(2, rat(1, 1)))?, 3),
        ("rnc:3", lift(rnc_spec(3, rat(2, 3)))?, 2),
        ("segre", lift(segre_spec(rat(2, 1)))?, 2),
    ])
}

fn zztop() -> Outcome {
    for (name, spec, _) in cones()? {
        let (rs, mu) = lift(family_weight(name))?;
        ensure(lift(verify_zztop(&spec, &rs, &mu))?, || format!("{name}: not in D*I"))?;
    }
    Ok(())
}

fn casimir_identity() -> Outcome {
    for (name, spec, dmax) in cones()? {
        let (rs, mu) = lift(family_weight(name))?;
        ensure(lift(verify_casimir_identity(&spec, &rs, &mu, dmax))?, || {
            format!("{name}: identity fails")
        })?;
    }
    Ok(())
}

fn fl_convention() -> Outcome {
    let ctx = WeylContext::from_names(["t"]);
    for beta in [rat(0, 1), rat(1, 2), rat(-3, 4)] {
        let dt_t = lift(WeylElement::parse("dt*t", &ctx))?;
        let src = &dt_t + &WeylElement::constant(&ctx, beta.clone());
        let dst = &dt_t - &WeylElement::constant(&ctx, &beta + rat(1, 1));
        let image = lift(fourier_laplace(&src))?;
        let same = lift(ideal_equal(
            std::slice::from_ref(&image),
            std::slice::from_ref(&dst),
            &TermOrder::GrevLex,
        ))?;
        ensure(same, || format!("beta = {beta}: FL gives {image}, want {dst}"))?;
    }
    Ok(())
}

fn rank_crosschecks() -> Outcome {
    for (name, beta, want) in [
        ("rnc:2", rat(1, 1), 1),
        ("rnc:3", rat(2, 3), 1),
        ("rnc:4", rat(1, 2), 2),
        ("segre", rat(2, 1), 1),
    ] {
        let gens = lift(fl_ideal(&lift(build_tauthat(&lift(family_spec(name, beta.clone()))?))?))?;
        let rank = lift(holonomic_rank(&gens))?;
        let expected = lift(expected_rank(&lift(FamilyCase::named(name, beta))?))?;
        ensure(expected == want, || {
            format!("{name}: oracle predicts {expected}, want {want}")
        })?;
        ensure(rank == Rank::Finite(expected), || {
            format!("{name}: rank {rank}, oracle {expected}")
        })?;
    }
    Ok(())
}

fn chart_suite() -> Outcome {
    for k in 1..=5 {
        ensure(lift(verify_chart_consistency(k))?, || {
            format!("k = {k}: charts disagree")
        })?;
    }
    let vars = Vars::new(["x", "y"]);
    for (alpha, k, beta) in gluing_table() {
        let a = lift(RationalFunction::parse(alpha, &vars))?;
        ensure(lift(gluing_cocycle_check(&a, k, &beta))?, || {
            format!("alpha = {alpha}, k = {k}")
        })?;
    }
    for k in 1..=3usize {
        let kk = k as i64;
        for beta0 in [rat(2, kk), rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 3), rat(2, kk + 1)] {
            let vanishes = lift(nbeta_chart_reduction(k, &beta0))?;
            let nonzero = rat(kk, 1) * &beta0 == rat(2, 1);
            ensure(vanishes != nonzero, || {
                format!("k = {k}, beta0 = {beta0}: vanishes = {vanishes}")
            })?;
        }
    }
    Ok(())
}

// random operators in two variables with small exponents

fn random_op(rng: &mut ChaCha8Rng, ctx: &WeylContext, max_exp: u32, max_terms: usize) -> WeylElement {
    let terms = rng.gen_range(1..=max_terms);
    (0..terms).fold(WeylElement::zero(ctx), |acc, _| {
        let x = [rng.gen_range(0..max_exp), rng.gen_range(0..max_exp)];
        let d = [rng.gen_range(0..max_exp), rng.gen_range(0..max_exp)];
        let c = rat(rng.gen_range(-3..4), rng.gen_range(1..3));
        &acc + &WeylElement::monomial(ctx, &x, &d, c).expect("two variables")
    })
}

fn random_poly(rng: &mut ChaCha8Rng, vars: &Vars) -> Polynomial {
    let terms = rng.gen_range(1..=3);
    Polynomial::from_terms(
        vars,
        (0..terms).map(|_| {
            let e = (0..vars.len()).map(|_| rng.gen_range(0..3)).collect();
            (Monomial(e), rat(rng.gen_range(-3..4), 1))
        }),
    )
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let ctx = WeylContext::from_names(["x", "y"]);
    for _ in 0..200 {
        let (p, q, r) = (
            random_op(&mut rng, &ctx, 3, 4),
            random_op(&mut rng, &ctx, 3, 4),
            random_op(&mut rng, &ctx, 3, 4),
        );
        ensure(&(&p * &q) * &r == &p * &(&q * &r), || {
            format!("associativity fails on {p}, {q}, {r}")
        })?;
    }
    for _ in 0..200 {
        let (p, q) = (random_op(&mut rng, &ctx, 3, 4), random_op(&mut rng, &ctx, 3, 4));
        let tp = lift(transpose(&p))?;
        ensure(lift(transpose(&tp))? == p, || {
            format!("transpose is not an involution on {p}")
        })?;
        let lhs = lift(transpose(&(&p * &q)))?;
        ensure(lhs == &lift(transpose(&q))? * &tp, || {
            format!("transpose reverses badly on {p}, {q}")
        })?;
    }
    for _ in 0..200 {
        let (p, q) = (random_op(&mut rng, &ctx, 3, 4), random_op(&mut rng, &ctx, 3, 4));
        let fp = lift(fourier_laplace(&p))?;
        let lhs = lift(fourier_laplace(&(&p * &q)))?;
        ensure(lhs == &fp * &lift(fourier_laplace(&q))?, || {
            format!("FL not multiplicative on {p}, {q}")
        })?;
        ensure(lift(fourier_laplace(&fp))? == antipode(&p), || {
            format!("FL squared is not the antipode on {p}")
        })?;
    }
    for k in 1..=5 {
        ensure(lift(sym_power_rep(k))?.lie_hom_check(), || {
            format!("Sym^{k}: not a Lie homomorphism")
        })?;
    }
    ensure(segre_rep().lie_hom_check(), || "Segre: not a Lie homomorphism".into())?;
    let mut specs: Vec<_> = (1..=5)
        .map(|k| lift(rnc_spec(k, rat(1, 2))))
        .collect::<Result<_, _>>()?;
    specs.push(lift(segre_spec(rat(2, 1)))?);
    for spec in &specs {
        for g in lift(build_tauthat(spec))? {
            ensure(is_euler_homogeneous(&g).0, || format!("{g} is not Euler-homogeneous"))?;
        }
    }
    for _ in 0..50 {
        let gens: Vec<_> = (0..rng.gen_range(1..=2))
            .map(|_| random_op(&mut rng, &ctx, 2, 3))
            .filter(|g| !g.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let gb = lift(left_groebner(&gens, &TermOrder::GrevLex))?;
        for g in &gens {
            ensure(lift(gb.normal_form(g))?.is_zero(), || {
                format!("generator {g} does not reduce to zero")
            })?;
        }
        let p = random_op(&mut rng, &ctx, 3, 4);
        let nf = lift(gb.normal_form(&p))?;
        ensure(lift(gb.normal_form(&nf))? == nf, || {
            format!("left normal form of {p} is not idempotent")
        })?;
    }
    let vars = Vars::new(["x", "y", "z"]);
    for _ in 0..100 {
        let gens: Vec<_> = (0..rng.gen_range(1..=3))
            .map(|_| random_poly(&mut rng, &vars))
            .filter(|g| !g.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let gb = lift(comm_groebner(&gens, &TermOrder::GrevLex))?;
        for g in &gens {
            ensure(lift(gb.normal_form(g))?.is_zero(), || {
                format!("generator {g} does not reduce to zero")
            })?;
        }
        let p = random_poly(&mut rng, &vars);
        let nf = lift(gb.normal_form(&p))?;
        ensure(lift(gb.normal_form(&nf))? == nf, || {
            format!("normal form of {p} is not idempotent")
        })?;
    }
    Ok(())
}

type Criterion = (u32, &'static str, u64, fn() -> Outcome);

const CRITERIA: [Criterion; 11] = [
    (1, "Segre membership of x_ij*P, P nonzero", 10, segre_membership),
    (
        2,
        "Segre ideal equals the explicit operator list",
        30,
        segre_ideal_equality,
    ),
    (3, "beta-formula values", 1, beta_formula),
    (
        4,
        "pairing identity and Fano check over all subsets",
        5,
        root_identities,
    ),
    (
        5,
        "adjoint Casimir and Casimir scalar on linear forms",
        10,
        casimir_suite,
    ),
    (6, "Casimir-Euler operator lies in D*I", 60, zztop),
    (7, "Casimir identity on low-degree monomials", 60, casimir_identity),
    (8, "Fourier-Laplace convention", 1, fl_convention),
    (
        9,
        "holonomic rank matches the Euler-characteristic oracle",
        300,
        rank_crosschecks,
    ),
    (
        10,
        "chart gluing, cocycle table and nonvanishing dichotomy",
        30,
        chart_suite,
    ),
    (11, "randomized property suites", 60, property_suites),
];

fn main() -> ExitCode {
    let mut failures = 0;
    for (n, name, limit, check) in CRITERIA {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let budget = Duration::from_secs(limit);
        let verdict = match outcome {
            Ok(()) if took < budget => Ok(()),
            Ok(()) => Err(format!("over the {limit} s budget")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!(
                "PASS criterion {n}: {name} ({:.3} s, budget {limit} s)",
                took.as_secs_f64()
            ),
            Err(e) => {
                failures += 1;
                println!(
                    "FAIL criterion {n}: {name} ({:.3} s, budget {limit} s): {e}",
                    took.as_secs_f64()
                );
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", CRITERIA.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
