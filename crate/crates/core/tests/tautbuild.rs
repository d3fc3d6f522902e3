use num_traits::Zero;
use tautsys::algebra::{rat, Polynomial, Rational, TermOrder, Vars};
use tautsys::rootsys::{RootSystem, Weight};
use tautsys::tautbuild::*;
use tautsys::weyl::{apply, fourier_laplace, is_euler_homogeneous, transpose, WeylContext, WeylElement};

fn op(text: &str, ctx: &WeylContext) -> WeylElement {
    WeylElement::parse(text, ctx).unwrap()
}

fn int(c: i64) -> Rational {
    rat(c, 1)
}

#[test]
fn vector_field_examples() {
    let ctx = WeylContext::from_names(["z0", "z1", "z2"]);
    assert_eq!(
        vector_field(&ctx, &identity(3)).unwrap(),
        op("-z0*d0 - z1*d1 - z2*d2", &ctx)
    );
    assert!(vector_field(&ctx, &zeros(3)).unwrap().is_zero());
    assert!(vector_field(&ctx, &zeros(2)).is_err());

    let rep = sym_power_rep(2).unwrap();
    let ctx = rep.context().clone();
    assert_eq!(rep.field(0), op("-z1*d0 - 2*z2*d1", &ctx));
    assert_eq!(rep.field(1), op("-2*z0*d1 - z1*d2", &ctx));
    assert_eq!(rep.field(2), op("-2*z0*d0 + 2*z2*d2", &ctx));
    assert_eq!(rep.field(3), op("-z0*d0 - z1*d1 - z2*d2", &ctx));
    assert!(sym_power_rep(0).is_err());
}

#[test]
fn sym_power_fields_follow_closed_forms() {
    for k in 1..=5usize {
        let rep = sym_power_rep(k).unwrap();
        let ctx = rep.context().clone();
        let mut raise = WeylElement::zero(&ctx);
        let mut lower = WeylElement::zero(&ctx);
        let mut h = WeylElement::zero(&ctx);
        for i in 0..=k {
            let mut x = vec![0; k + 1];
            let mut d = vec![0; k + 1];
            if i >= 1 {
                x[i] = 1;
                d[i - 1] = 1;
                raise = &raise + &WeylElement::monomial(&ctx, &x, &d, int(-(i as i64))).unwrap();
                let mut x = vec![0; k + 1];
                let mut d = vec![0; k + 1];
                x[i - 1] = 1;
                d[i] = 1;
                lower = &lower + &WeylElement::monomial(&ctx, &x, &d, int(-((k - i + 1) as i64))).unwrap();
            }
            let mut x = vec![0; k + 1];
            let mut d = vec![0; k + 1];
            x[i] = 1;
            d[i] = 1;
            h = &h + &WeylElement::monomial(&ctx, &x, &d, int(2 * i as i64 - k as i64)).unwrap();
        }
        assert_eq!(rep.field(0), raise);
        assert_eq!(rep.field(1), lower);
        assert_eq!(rep.field(2), h);
        let hm = commutator(rep.matrix(0), rep.matrix(1));
        assert_eq!(&hm, rep.matrix(2));
        assert!(rep.lie_hom_check(), "k = {k}");
    }
}

#[test]
fn segre_rep_examples() {
    let rep = segre_rep();
    let ctx = rep.context().clone();
    assert_eq!(rep.labels().len(), 7);
    // Z(E12 (x) 1) is the operator that moves the second row into the first
    let i = rep.label_index("E12_1").unwrap();
    assert_eq!(rep.field(i), op("-x21*d11 - x22*d12", &ctx));
    assert_eq!(rep.field(6), op("-x11*d11 - x12*d12 - x21*d21 - x22*d22", &ctx));
    assert!(rep.lie_hom_check());
    let ze = rep.field(6);
    for j in 0..7 {
        assert!(ze.bracket(&rep.field(j)).unwrap().is_zero());
    }
}

#[test]
fn rep_validation_rejects_bad_data() {
    let vars = Vars::new(["x"]);
    let e = vec![vec![vec![int(0)]]];
    assert!(RepSpec::new(vars.clone(), vec!["e".into()], vec![vec![vec![int(2)]]], e.clone(), 0).is_err());
    assert!(RepSpec::new(vars.clone(), vec!["e".into()], vec![vec![vec![int(1)]]], e, 0).is_ok());
    let bad = vec![vec![vec![int(1)]]];
    assert!(RepSpec::new(vars, vec!["e".into()], vec![vec![vec![int(1)]]], bad, 0).is_err());
}

#[test]
fn rnc_ideal_examples() {
    assert!(rnc_ideal(1).unwrap().is_empty());
    let vars = Vars::indexed("z", 0, 3);
    let two = rnc_ideal(2).unwrap();
    assert_eq!(two.len(), 1);
    let expected = Polynomial::parse("4*z0*z2 - z1^2", &vars).unwrap();
    assert!(two[0] == expected || two[0] == -&expected);
    assert_eq!(rnc_ideal(3).unwrap().len(), 3);
    assert!(rnc_ideal(0).is_err());
    // every generator vanishes on the curve z_i = C(k,i) a^(k-i) b^i
    for k in 2..=5u32 {
        for g in rnc_ideal(k as usize).unwrap() {
            let point: Vec<Rational> = (0..=k)
                .map(|i| {
                    let b = (0..i).fold(1i64, |acc, j| acc * (k - j) as i64 / (j + 1) as i64);
                    int(b * 2i64.pow(k - i) * 3i64.pow(i))
                })
                .collect();
            assert!(g.evaluate(&point).is_zero());
        }
    }
}

#[test]
fn segre_ideal_reduces_itself() {
    let f = segre_ideal();
    assert_eq!(f[0].to_string(), "-x12*x21 + x11*x22");
    let gb = tautsys::algebra::comm_groebner(&f, &TermOrder::GrevLex).unwrap();
    assert!(gb.normal_form(&f[0]).unwrap().is_zero());
}

#[test]
fn build_tauthat_examples() {
    let spec = segre_spec(int(2)).unwrap();
    let gens = build_tauthat(&spec).unwrap();
    let ctx = spec.rep().context().clone();
    assert_eq!(
        gens.last().unwrap(),
        &op("-x11*d11 - x12*d12 - x21*d21 - x22*d22 - 2", &ctx)
    );
    assert!(ideal_equal(&gens, &segre_reference_generators(), &TermOrder::GrevLex).unwrap());

    for k in 1..=4usize {
        let spec = rnc_spec(k, rat(2, k as i64)).unwrap();
        let gens = build_tauthat(&spec).unwrap();
        let ctx = spec.rep().context().clone();
        let euler = &tautsys::weyl::euler_operator(&ctx) * &WeylElement::constant(&ctx, int(-1));
        let expected = &euler - &WeylElement::constant(&ctx, int(k as i64 + 1) - rat(2, k as i64));
        assert_eq!(gens.last().unwrap(), &expected);
        for g in &gens {
            assert!(is_euler_homogeneous(g).0);
        }
    }

    let vars = Vars::new(["x"]);
    let rep = RepSpec::new(vars, vec!["e".into()], vec![identity(1)], vec![vec![vec![int(0)]]], 0).unwrap();
    let spec = TautSpec::new(rep, vec![], vec![int(0)]).unwrap();
    let ctx = spec.rep().context().clone();
    assert_eq!(build_tauthat(&spec).unwrap(), vec![op("-x*dx - 1", &ctx)]);
}

#[test]
fn taut_spec_validation() {
    let rep = sym_power_rep(2).unwrap();
    let vars = rep.vars().clone();
    let zero = vec![int(0); 4];
    // not homogeneous
    let bad = vec![Polynomial::parse("z0*z2 - 1", &vars).unwrap()];
    assert!(TautSpec::new(rep.clone(), bad, zero.clone()).is_err());
    // homogeneous but not stable under sl2
    let unstable = vec![Polynomial::parse("z0*z2", &vars).unwrap()];
    assert!(TautSpec::new(rep.clone(), unstable, zero.clone()).is_err());
    // beta nonzero on H = [E12, E21] is not a character
    let mut beta = zero.clone();
    beta[2] = int(1);
    assert!(TautSpec::new(rep.clone(), rnc_ideal(2).unwrap(), beta).is_err());
    assert!(TautSpec::new(rep, rnc_ideal(2).unwrap(), zero).is_ok());
}

#[test]
fn taut_spec_json_round_trip() {
    for spec in [segre_spec(int(2)).unwrap(), rnc_spec(3, rat(2, 3)).unwrap()] {
        let json = spec.to_json();
        let back = TautSpec::from_json(&json).unwrap();
        assert_eq!(back.beta(), spec.beta());
        assert_eq!(back.ideal(), spec.ideal());
        assert_eq!(build_tauthat(&back).unwrap(), build_tauthat(&spec).unwrap());
    }
    let minimal = serde_json::json!({
        "rep": {"labels": ["e"], "matrices": [[["1"]]], "e": "e"},
        "beta": {"e": "1/2"}
    });
    let spec = TautSpec::from_json(&minimal).unwrap();
    assert_eq!(spec.rep().vars().names(), vec!["x1".to_string()]);
    assert_eq!(spec.beta(), &[rat(1, 2)]);
    assert!(TautSpec::from_json(&serde_json::json!({"rep": {}})).is_err());
}

#[test]
fn ideal_equal_examples() {
    let ctx = WeylContext::from_names(["x"]);
    let g = TermOrder::GrevLex;
    assert!(ideal_equal(&[op("x*dx - 1", &ctx)], &[op("dx*x - 2", &ctx)], &g).unwrap());
    assert!(!ideal_equal(&[op("x", &ctx)], &[op("dx", &ctx)], &g).unwrap());
    let other = WeylContext::from_names(["y"]);
    assert!(ideal_equal(&[op("x", &ctx)], &[op("y", &other)], &g).is_err());
    let segre = segre_reference_generators();
    assert!(ideal_equal(&segre, &segre, &g).unwrap());
}

#[test]
fn casimir_examples() {
    for k in 1..=4usize {
        let rep = sym_power_rep(k).unwrap();
        let c = casimir_weyl(&rep).unwrap();
        assert_eq!(transpose(&c).unwrap(), c, "k = {k}");
        // scalar k(k+2)/8 on linear forms
        let scalar = rat((k * (k + 2)) as i64, 8);
        for i in 0..=k {
            let x = Polynomial::var(rep.vars(), i);
            assert_eq!(apply(&c, &x).unwrap(), x.scale(&scalar));
        }
    }
    let rep = sym_power_rep(1).unwrap();
    let killing = rep.killing_form().unwrap();
    assert_eq!(killing[2][2], int(8));
    assert_eq!(killing[0][1], int(4));
    assert!(casimir_weyl_with(&rep, &zeros(3)).is_err());
}

#[test]
fn adjoint_casimir_is_one() {
    // sl2 + C e on sl2 itself, basis E12, E21, H with ad matrices
    let vars = Vars::new(["a", "b", "c"]);
    let mut brackets = vec![vec![vec![int(0); 4]; 4]; 4];
    let set = |t: &mut Vec<Vec<Vec<Rational>>>, a: usize, b: usize, k: usize, c: i64| {
        t[a][b][k] = int(c);
        t[b][a][k] = int(-c);
    };
    set(&mut brackets, 0, 1, 2, 1);
    set(&mut brackets, 2, 0, 0, 2);
    set(&mut brackets, 2, 1, 1, -2);
    let ad = |i: usize| -> Matrix {
        (0..3)
            .map(|r| (0..3).map(|c| brackets[i][c][r].clone()).collect())
            .collect()
    };
    let matrices = vec![ad(0), ad(1), ad(2), identity(3)];
    let labels = ["E12", "E21", "H", "e"].iter().map(|s| s.to_string()).collect();
    let rep = RepSpec::new(vars, labels, matrices, brackets.clone(), 3).unwrap();
    assert!(rep.lie_hom_check());
    let c = casimir_weyl(&rep).unwrap();
    for i in 0..3 {
        let x = Polynomial::var(rep.vars(), i);
        assert_eq!(apply(&c, &x).unwrap(), x);
    }
}

#[test]
fn casimir_identities_hold_for_shipped_cones() {
    let a1 = RootSystem::parse("A1").unwrap();
    let rnc2 = rnc_spec(2, int(1)).unwrap();
    assert!(verify_casimir_identity(&rnc2, &a1, &Weight::from_ints(&[2]), 3).unwrap());
    assert!(verify_zztop(&rnc2, &a1, &Weight::from_ints(&[2])).unwrap());
    let rnc3 = rnc_spec(3, rat(2, 3)).unwrap();
    assert!(verify_casimir_identity(&rnc3, &a1, &Weight::from_ints(&[3]), 2).unwrap());
    assert!(verify_zztop(&rnc3, &a1, &Weight::from_ints(&[3])).unwrap());
    let a1a1 = RootSystem::parse("A1xA1").unwrap();
    let segre = segre_spec(int(2)).unwrap();
    assert!(verify_casimir_identity(&segre, &a1a1, &Weight::from_ints(&[1, 1]), 2).unwrap());
    assert!(verify_zztop(&segre, &a1a1, &Weight::from_ints(&[1, 1])).unwrap());
    // wrong weight: dimension mismatch
    assert!(verify_zztop(&rnc2, &a1, &Weight::from_ints(&[3])).is_err());
    // the linear cone has no ideal: the operator itself vanishes
    let rnc1 = rnc_spec(1, int(2)).unwrap();
    assert!(verify_zztop(&rnc1, &a1, &Weight::from_ints(&[1])).unwrap());
    assert!(zztop_operator(&rnc1, &a1, &Weight::from_ints(&[1])).unwrap().is_zero());
}

#[test]
fn fl_examples() {
    let spec = rnc_spec(2, int(1)).unwrap();
    let ctx = spec.rep().context().clone();
    let cone = spec.ideal_operators();
    let image = fl_ideal(&cone).unwrap();
    let expected = op("4*d0*d2 - d1^2", &ctx);
    assert!(image[0] == expected || image[0] == -&expected);

    let one = WeylContext::from_names(["x"]);
    let c = rat(5, 3);
    let minus_e = &op("-x*dx", &one) - &WeylElement::constant(&one, c.clone());
    assert_eq!(
        fourier_laplace(&minus_e).unwrap(),
        &op("dx*x", &one) - &WeylElement::constant(&one, c)
    );
    for beta in [int(0), rat(1, 2), rat(-3, 4)] {
        let b = WeylElement::constant(&one, beta.clone());
        let a = fl_ideal(&[&op("x*dx", &one) - &b]).unwrap();
        let target = [&op("x*dx", &one) + &(&b + &WeylElement::constant(&one, int(1)))];
        assert!(ideal_equal(&a, &target, &TermOrder::GrevLex).unwrap());
    }
}

#[test]
fn transpose_of_vector_fields() {
    let rep = sym_power_rep(3).unwrap();
    for i in 0..4 {
        let z = rep.field(i);
        let tr = trace(rep.matrix(i));
        let expected = &(-&z) + &WeylElement::constant(rep.context(), tr);
        assert_eq!(transpose(&z).unwrap(), expected);
    }
}

#[test]
fn built_generators_are_euler_homogeneous() {
    let mut specs = vec![segre_spec(int(2)).unwrap()];
    for k in 1..=5 {
        specs.push(rnc_spec(k, rat(2, k as i64)).unwrap());
    }
    for spec in &specs {
        let gens = build_tauthat(spec).unwrap();
        let e = gens.last().unwrap();
        assert_eq!(is_euler_homogeneous(e), (true, Some(0)));
        for g in &gens {
            assert!(is_euler_homogeneous(g).0);
        }
        // the cone ideal is stable under every field
        let gb = spec.ideal_groebner().unwrap();
        for i in 0..spec.rep().labels().len() {
            for g in spec.ideal() {
                let image = apply(&spec.rep().field(i), g).unwrap();
                let r = gb.as_ref().map_or(image.clone(), |gb| gb.normal_form(&image).unwrap());
                assert!(r.is_zero());
            }
        }
    }
    assert!(family_spec("rnc:0", int(1)).is_err());
    assert!(family_spec("plucker", int(1)).is_err());
    assert_eq!(parse_family("rnc:4").unwrap(), Family::Rnc(4));
}
