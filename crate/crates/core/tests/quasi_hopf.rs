use std::sync::Arc;

use proptest::prelude::*;
use quasihopf_core::category::{check_rigidity, Carrier};
use quasihopf_core::instances::*;
use quasihopf_core::quasitriangular::{check_all, check_qt, induced_yd, QtStructure};
use quasihopf_core::{check_lemma41, check_pq, check_quasi_bialgebra, check_quasi_hopf, check_twist, QuasiHopf, Scalar, Tensor};

fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

fn pair(data: [Scalar; 4]) -> Tensor {
    Tensor::from_dims(&[("1", 2), ("2", 2)], data.to_vec()).unwrap()
}

/// `F_t = (1−t)·1⊗1 + t·(1⊗g + g⊗1 − g⊗g)`, a normalized gauge element of `kZ₂⊗kZ₂`
/// that is invertible exactly when `t ≠ 1/4`.
fn gauge(t: &Scalar) -> Tensor {
    pair([&Scalar::ONE - t, t.clone(), t.clone(), -t])
}

fn shipped() -> Vec<(&'static str, QuasiHopf)> {
    vec![("kz2", group_algebra_z2()), ("h2", h2_quasi()), ("h4", sweedler_h4())]
}

#[test]
fn shipped_algebras_pass_every_axiom() {
    for (name, a) in shipped() {
        let r = check_quasi_bialgebra(&a.base);
        assert!(r.all_passed(), "{name}\n{r}");
        let r = check_quasi_hopf(&a);
        assert!(r.all_passed(), "{name}\n{r}");
    }
}

#[test]
fn half_strength_reassociator_fails_the_cocycle_identity() {
    let a = h2_quasi();
    let p = [q(1, 2), q(-1, 2)];
    let mut data = Vec::new();
    for i in 0..8 {
        let idx = [i >> 2, (i >> 1) & 1, i & 1];
        let unit = if i == 0 { Scalar::ONE } else { Scalar::ZERO };
        data.push(&unit - &(&(&p[idx[0]] * &p[idx[1]]) * &p[idx[2]]));
    }
    let mut base = a.base.clone();
    base.phi = Tensor::from_dims(&[("1", 2), ("2", 2), ("3", 2)], data).unwrap();
    let r = check_quasi_bialgebra(&base);
    let q3 = r.get("q3").unwrap();
    assert!(!q3.passed);
    assert!(q3.witness.is_some());
}

#[test]
fn alpha_equal_to_g_on_kz2_breaks_the_normalization() {
    let mut a = group_algebra_z2();
    a.alpha = a.beta.clone();
    a.alpha.data_mut().swap(0, 1);
    // Cloning rebuilds the cached derived tables from the edited α.
    let a = a.clone();
    let r = check_quasi_hopf(&a);
    assert!(r.get("q5-alpha").unwrap().passed);
    assert!(!r.get("q6-normalization-phi").unwrap().passed);
}

#[test]
fn ordinary_hopf_algebras_have_trivial_canonical_elements() {
    for a in [group_algebra_z2(), sweedler_h4()] {
        let one = a.unit_power(2);
        let t = a.twist();
        let p = a.pq();
        for e in [&t.f, &t.f_inv, &t.gamma, &t.delta, &p.p_r, &p.q_r, &p.p_l, &p.q_l] {
            assert_eq!(e, &one);
        }
    }
}

#[test]
fn h2_canonical_elements_satisfy_their_identities() {
    let a = h2_quasi();
    for r in [check_twist(&a), check_pq(&a), check_lemma41(&a)] {
        assert!(r.all_passed(), "{r}");
    }
    assert_ne!(a.pq().p_r, a.unit_power(2));
}

#[test]
fn twisting_kz2_by_the_sign_gauge_gives_a_quasi_hopf_algebra() {
    let a = group_algebra_z2();
    let f = gauge(&q(1, 2));
    let t = a.twisted(&f).unwrap();
    assert!(check_quasi_hopf(&t).all_passed());
    assert_eq!(a.twisted(&a.unit_power(2)).unwrap(), a);
    let back = t.twisted(&t.element_inverse(&f).unwrap()).unwrap();
    assert_eq!(back, a);
    assert!(a.twisted(&gauge(&q(1, 4))).is_err());
}

#[test]
fn opposite_and_coopposite_variants() {
    let kz2 = group_algebra_z2();
    assert_eq!(*kz2.op(), kz2);
    let h2 = h2_quasi();
    let (op, cop, opcop) = h2.variants();
    for v in [&op, &cop, &opcop] {
        assert!(check_quasi_hopf(v).all_passed());
    }
    assert_eq!(*op.op(), h2);
    let h4 = sweedler_h4();
    assert_ne!(*h4.op(), h4);
    assert_eq!(*h4.op().op(), h4);
}

#[test]
fn rigidity_snakes_on_regular_representations() {
    for a in [trivial_field_algebra(), group_algebra_z2(), h2_quasi()] {
        let v = Carrier::regular(&a);
        let r = check_rigidity(&a, &v);
        assert!(r.all_passed(), "{r}");
    }
}

#[test]
fn quasitriangular_structures() {
    let kz2 = Arc::new(group_algebra_z2());
    for r in [kz2_r_trivial(), kz2_r_g()] {
        let qt = QtStructure::new(kz2.clone(), r, None).unwrap();
        let rep = check_all(&qt);
        assert!(rep.all_passed(), "{rep}");
    }
    let trivial = QtStructure::new(kz2.clone(), kz2_r_trivial(), None).unwrap();
    assert_eq!(&trivial.u().0, kz2.one());

    // u for R_g commutes with g and has counit 1.
    let qt = QtStructure::new(kz2.clone(), kz2_r_g(), None).unwrap();
    let u = &qt.u().0;
    let g = Tensor::from_dims(&[("1", 2)], vec![Scalar::ZERO, Scalar::ONE]).unwrap();
    assert_eq!(kz2.element_product(u, &g), kz2.element_product(&g, u));
    assert_eq!(kz2.counit_of(u), Scalar::ONE);

    let one_g = pair([Scalar::ZERO, Scalar::ONE, Scalar::ZERO, Scalar::ZERO]);
    let bad = QtStructure::new(kz2.clone(), one_g, None).unwrap();
    let rep = check_qt(&bad);
    assert!(!rep.get("qt4-left").unwrap().passed || !rep.get("qt4-right").unwrap().passed);

    let h4 = Arc::new(sweedler_h4());
    for l in [q(0, 1), q(1, 1)] {
        let qt = QtStructure::new(h4.clone(), h4_r(&l), None).unwrap();
        let rep = check_all(&qt);
        assert!(rep.all_passed(), "λ = {l}\n{rep}");
        assert_eq!(h4.counit_of(&qt.u().0), Scalar::ONE);
    }
}

#[test]
fn induced_coactions() {
    let kz2 = Arc::new(group_algebra_z2());
    let qt = QtStructure::new(kz2.clone(), kz2_r_g(), None).unwrap();
    // Trivial module: coaction 1⊗m.
    let trivial = Tensor::from_dims(&[("h", 2), ("i", 1), ("o", 1)], vec![Scalar::ONE, Scalar::ONE]).unwrap();
    let m = induced_yd(&qt, &trivial).unwrap();
    assert_eq!(m.coaction.nonzeros(), vec![(vec![0, 0, 0], Scalar::ONE)]);
    // The regular module.
    let regular = kz2.base.mult.clone();
    assert!(induced_yd(&qt, &regular).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gauge_twists_preserve_the_axioms(n in -6i64..7, d in 1i64..6, use_h2 in any::<bool>()) {
        let t = q(n, d);
        prop_assume!(t != q(1, 4));
        let a = if use_h2 { h2_quasi() } else { group_algebra_z2() };
        let f = gauge(&t);
        let tw = a.twisted(&f).unwrap();
        let r = check_quasi_hopf(&tw);
        prop_assert!(r.all_passed(), "{}", r);
        let back = tw.twisted(&tw.element_inverse(&f).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn every_member_of_the_h4_family_is_quasitriangular(n in -9i64..10, d in 1i64..8) {
        let h4 = Arc::new(sweedler_h4());
        let qt = QtStructure::new(h4, h4_r(&q(n, d)), None).unwrap();
        let r = check_all(&qt);
        prop_assert!(r.all_passed(), "{}", r);
    }
}
