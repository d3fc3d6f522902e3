use num_traits::{One, Zero};
use proptest::prelude::*;
use tautsys::algebra::{rat, Rational};
use tautsys::rootsys::*;

fn rs(t: &str) -> RootSystem {
    RootSystem::parse(t).unwrap()
}

fn w(c: &[i64]) -> Weight {
    Weight::from_ints(c)
}

const TYPES: [&str; 7] = ["A1", "A2", "A3", "B2", "G2", "A1xA1", "A1xA2"];

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..1u32 << n)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
        .collect()
}

#[test]
fn builds_expected_systems() {
    assert_eq!(rs("A1").positive_roots().len(), 1);
    assert_eq!(rs("A3").positive_roots().len(), 6);
    let g2 = rs("G2");
    assert_eq!(g2.positive_roots().len(), 6);
    assert_eq!(*g2.factors()[0].dual_coxeter(), rat(4, 1));
    assert_eq!(rs("A1xA1").positive_roots().len(), 2);
    assert_eq!(rs("A1xA1").rank(), 2);
    assert!(RootSystem::parse("Z9").is_err());
}

#[test]
fn killing_pairing_examples() {
    let a1 = rs("A1");
    let alpha = a1.root_weight(&[1]);
    assert_eq!(alpha, w(&[2]));
    assert_eq!(a1.killing_pairing(&alpha, &alpha).unwrap(), rat(1, 2));
    assert_eq!(a1.killing_pairing(&w(&[1]), &w(&[1])).unwrap(), rat(1, 8));
    assert!(a1.killing_pairing(&w(&[1, 0]), &w(&[1])).is_err());
}

#[test]
fn adjoint_casimir_is_one_for_every_simple_type() {
    for t in [
        "A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8",
    ] {
        let r = rs(t);
        let theta = &r.highest_roots()[0];
        let d = r.weyl_vector();
        let v = r.killing_pairing(theta, theta).unwrap() + rat(2, 1) * r.killing_pairing(theta, &d).unwrap();
        assert_eq!(v, Rational::one(), "{t}");
        assert_eq!(r.casimir_scalar_lowest(&theta.neg()).unwrap(), Rational::one(), "{t}");
    }
}

#[test]
fn weyl_vector_is_half_sum_of_positive_roots() {
    for t in TYPES.iter().chain(&["B3", "C3", "D4", "F4", "E6"]) {
        let r = rs(t);
        assert_eq!(r.weyl_vector(), r.half_sum_of_positive_roots(), "{t}");
    }
    assert_eq!(rs("A1").weyl_vector(), w(&[1]));
    assert_eq!(rs("A3").weyl_vector(), w(&[1, 1, 1]));
}

#[test]
fn delta_i_examples() {
    let a3 = rs("A3");
    assert_eq!(a3.delta_i(&[]).unwrap(), a3.weyl_vector());
    assert!(a3.delta_i(&[1, 2, 3]).unwrap().is_zero());
    assert_eq!(a3.delta_i(&[1, 3]).unwrap(), w(&[0, 2, 0]));
    assert!(a3.delta_i(&[4]).is_err());
    assert!(a3.delta_i(&[0]).is_err());
}

#[test]
fn beta_value_examples() {
    let a1 = rs("A1");
    for k in 1..8 {
        assert_eq!(a1.beta_value(&w(&[k])).unwrap(), rat(2, k));
    }
    let a3 = rs("A3");
    let anti = a3.delta_i(&[1, 3]).unwrap().scale(&rat(2, 1));
    assert_eq!(a3.beta_value(&anti).unwrap(), Rational::one());
    let segre = rs("A1xA1");
    let mu = w(&[1, 1]);
    assert_eq!(segre.killing_pairing(&segre.weyl_vector(), &mu).unwrap(), rat(2, 8));
    assert_eq!(segre.killing_pairing(&mu, &mu).unwrap(), rat(2, 8));
    assert_eq!(segre.beta_value(&mu).unwrap(), rat(2, 1));
    assert!(a1.beta_value(&w(&[0])).is_err());
}

#[test]
fn parabolic_pairing_examples() {
    let a3 = rs("A3");
    assert!(a3.check_prop63(&[1, 3], 1, 4).unwrap());
    assert_eq!(a3.beta_value(&w(&[0, 1, 0])).unwrap(), rat(4, 1));
    assert!(rs("A1").check_prop63(&[], 1, 2).unwrap());
    assert_eq!(rs("A1").beta_value(&w(&[1])).unwrap(), rat(2, 1));
    assert!(rs("G2").check_prop63(&[1], 3, 3).unwrap());
    assert!(a3.check_prop63(&[1, 2, 3], 1, 1).is_err());
}

#[test]
fn pairing_identity_and_fano_hold_exhaustively() {
    for t in TYPES {
        let r = rs(t);
        for s in subsets(r.rank()) {
            assert!(r.lemma69(&s).unwrap(), "{t} {s:?}");
            assert!(r.fano_check(&s).unwrap(), "{t} {s:?}");
        }
    }
    let a2 = rs("A2");
    let d = a2.delta_i(&[1]).unwrap();
    assert_eq!(
        a2.killing_pairing(&a2.weyl_vector(), &d).unwrap(),
        a2.killing_pairing(&d, &d).unwrap()
    );
}

#[test]
fn ampleness_examples() {
    assert!(rs("A1").is_ample(&[], &w(&[1])).unwrap());
    assert!(!rs("A2").is_ample(&[1], &w(&[1, 0])).unwrap());
    assert!(rs("A2").is_ample(&[1], &w(&[0, 1])).unwrap());
}

#[test]
fn weyl_dimension_examples() {
    let a1 = rs("A1");
    for k in 0..6 {
        assert_eq!(a1.weyl_dim(&w(&[k])).unwrap(), k as u64 + 1);
    }
    assert_eq!(rs("A3").weyl_dim(&w(&[0, 1, 0])).unwrap(), 6);
    assert_eq!(rs("A1xA1").weyl_dim(&w(&[1, 1])).unwrap(), 4);
    assert_eq!(rs("G2").weyl_dim(&w(&[1, 0])).unwrap(), 7);
    assert_eq!(rs("G2").weyl_dim(&w(&[0, 1])).unwrap(), 14);
    assert_eq!(rs("B2").weyl_dim(&w(&[0, 1])).unwrap(), 4);
    assert_eq!(rs("E8").weyl_dim(&w(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(), 248);
    assert!(a1.weyl_dim(&w(&[-1])).is_err());
}

#[test]
fn casimir_scalar_examples() {
    let a1 = rs("A1");
    assert!(a1.casimir_scalar_lowest(&w(&[0])).unwrap().is_zero());
    for k in 0..6 {
        assert_eq!(a1.casimir_scalar_lowest(&w(&[-k])).unwrap(), rat(k * (k + 2), 8));
    }
}

#[test]
fn sections_highest_weight_examples() {
    let a3 = rs("A3");
    let d = a3.delta_i(&[1, 3]).unwrap().scale(&rat(2, 1));
    assert_eq!(a3.sections_highest_weight(&[1, 3], &d.neg()).unwrap(), d);
    assert_eq!(rs("A1").sections_highest_weight(&[], &w(&[-3])).unwrap(), w(&[3]));
    assert_eq!(
        rs("A1xA1").sections_highest_weight(&[], &w(&[-1, -1])).unwrap(),
        w(&[1, 1])
    );
    assert!(rs("A1").sections_highest_weight(&[], &w(&[2])).is_err());
    // not a character of the parabolic
    assert!(a3.sections_highest_weight(&[1], &w(&[-1, 0, 0])).is_err());
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha,
        rng_seed: prop::test_runner::RngSeed::Fixed(63),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(50))]

    #[test]
    fn prop63_holds_on_random_inputs(t in 0usize..5, mask in 0u32..8, k in -5i64..6, l in -5i64..6) {
        prop_assume!(k != 0 && l != 0);
        let r = rs(["A1", "A2", "A3", "B2", "G2"][t]);
        let s: Vec<usize> = (0..r.rank()).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        prop_assume!(s.len() < r.rank());
        prop_assert!(r.check_prop63(&s, k, l).unwrap());
    }

    #[test]
    fn beta_has_degree_minus_one(t in 0usize..7, coords in prop::collection::vec(0i64..4, 3), p in 1i64..7, q in 1i64..7) {
        let r = rs(TYPES[t]);
        let mu = w(&coords[..r.rank()]);
        prop_assume!(!mu.is_zero());
        let c = rat(p, q);
        prop_assert_eq!(r.beta_value(&mu.scale(&c)).unwrap(), r.beta_value(&mu).unwrap() / c);
    }

    #[test]
    fn weyl_dim_respects_diagram_symmetry(coords in prop::collection::vec(0i64..4, 3)) {
        let r = rs("A3");
        let rev: Vec<i64> = coords.iter().rev().copied().collect();
        prop_assert_eq!(r.weyl_dim(&w(&coords)).unwrap(), r.weyl_dim(&w(&rev)).unwrap());
        prop_assert_eq!(r.weyl_dim(&w(&[0, 0, 0])).unwrap(), 1);
    }
}
