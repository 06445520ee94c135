use proptest::prelude::*;
use quasihopf_core::format::{build, load, parse_instance, to_text, InstanceFile};
use quasihopf_core::instances::{catalog, h2_quasi, yd_line_modules};
use quasihopf_core::suite::{derive, run_suite, Derive, Suite};
use quasihopf_core::yd::check_yd;
use quasihopf_core::{QhaError, Scalar};

fn shipped(name: &str) -> InstanceFile {
    catalog().into_iter().find(|(n, _)| *n == name).expect("catalog entry").1
}

fn field_of(e: QhaError) -> String {
    match e {
        QhaError::Field { field, .. } => field,
        other => panic!("expected a field error, got {other}"),
    }
}

#[test]
fn catalog_files_round_trip_exactly() {
    for (name, f) in catalog() {
        let text = to_text(&f);
        let parsed = parse_instance(&text).unwrap();
        assert_eq!(parsed, f, "{name}");
        assert_eq!(to_text(&parsed), text, "{name}");
    }
}

#[test]
fn every_shipped_module_is_yetter_drinfeld() {
    for (name, f) in catalog() {
        let b = build(f).unwrap();
        for (m, module) in &b.modules {
            assert!(check_yd(module).all_passed(), "{name}/{m}");
        }
    }
    let line = yd_line_modules();
    assert_eq!(line.len(), 6);
    assert!(line.iter().all(|(_, m)| m.dim <= 2));
}

#[test]
fn computed_reassociator_inverse_matches_the_instance() {
    let b = build(shipped("h2.qha")).unwrap();
    assert_eq!(b.algebra.phi_inv(), h2_quasi().phi_inv());
}

#[test]
fn malformed_inputs_name_the_field() {
    let text = to_text(&shipped("kz2.qha"));

    let bad = text.replacen("\"1/2\"", "\"1/0\"", 1);
    assert_eq!(field_of(load(&bad).err().unwrap()), "r_matrix.r.data[0]");

    let bad = text.replacen("\"1/2\"", "\"one half\"", 1);
    assert!(field_of(load(&bad).err().unwrap()).starts_with("r_matrix.r"));

    let bad = text.replace("[algebra.counit]", "[algebra.co_unit]");
    assert!(field_of(load(&bad).err().unwrap()).contains("counit"));

    let bad = text.replace("field = \"Q\"", "field = \"C\"");
    assert_eq!(field_of(load(&bad).err().unwrap()), "meta.field");

    let bad = text.replacen("dims = [2, 2, 2]", "dims = [2, 2]", 1);
    assert!(field_of(load(&bad).err().unwrap()).starts_with("algebra.mult"));

    assert!(matches!(load("[meta\nname = 1"), Err(QhaError::Parse(_))));
}

#[test]
fn braided_block_must_name_a_left_module() {
    let mut f = shipped("kz2_classical.qha");
    f.braided_hopf[0].carrier = "missing".into();
    let e = parse_instance(&to_text(&f)).err().unwrap();
    assert!(field_of(e).starts_with("braided_hopf"));
}

#[test]
fn suites_on_shipped_files() {
    for (name, f) in catalog() {
        let b = build(f).unwrap();
        let doc = run_suite(&b, Suite::All).unwrap();
        assert!(doc.all_passed(), "{name}\n{doc}");
        assert!(doc.checks > 0);
    }
    let b = build(shipped("h4.qha")).unwrap();
    let doc = run_suite(&b, Suite::Integrals).unwrap();
    assert!(doc.all_passed());
    assert_eq!(doc.sections.len(), 1);
}

#[test]
fn perturbed_reassociator_fails_the_qbi_suite() {
    let mut f = shipped("h2.qha");
    let original = build(f.clone()).unwrap();
    f.algebra.phi_inv = Some(original.algebra.phi_inv().clone());
    let cell = f.algebra.phi.data()[0].clone();
    f.algebra.phi.set(&[0, 0, 0], &cell + &Scalar::ONE);
    let b = build(f).unwrap();
    let doc = run_suite(&b, Suite::Qbi).unwrap();
    assert!(!doc.all_passed());
    let q3 = doc.entry("qbi", "q3").unwrap();
    assert!(!q3.passed && q3.witness.is_some());
}

#[test]
fn missing_r_matrix() {
    let b = build(shipped("h2.qha")).unwrap();
    assert!(run_suite(&b, Suite::Qt).is_err());
    assert!(run_suite(&b, Suite::All).unwrap().all_passed());
    assert!(derive(&b, Derive::SmallU).is_err());
}

#[test]
fn derived_quantities() {
    let kz2 = build(shipped("kz2.qha")).unwrap();
    assert_eq!(derive(&kz2, Derive::F).unwrap(), "f = 1⊗1\nf^-1 = 1⊗1\n");
    let h2 = build(shipped("h2.qha")).unwrap();
    let pq = derive(&h2, Derive::Pq).unwrap();
    assert_eq!(pq.lines().count(), 4);
    assert!(pq.starts_with("p_R = 1/2·1⊗1"));
    let h4 = build(shipped("h4.qha")).unwrap();
    assert_eq!(derive(&h4, Derive::Integrals).unwrap().lines().count(), 1);
    for w in ["gamma-delta", "u", "U", "h0", "h0-dual"] {
        assert!(derive(&h4, w.parse().unwrap()).is_ok(), "{w}");
    }
}

#[test]
fn text_reports_are_deterministic() {
    let b = build(shipped("kz2.qha")).unwrap();
    let a = run_suite(&b, Suite::All).unwrap().to_string();
    let c = run_suite(&b, Suite::All).unwrap().to_string();
    assert_eq!(a, c);
}

proptest! {
    #[test]
    fn arbitrary_rational_entries_round_trip(cells in prop::collection::vec((-10_000i64..10_000, 1i64..500), 4)) {
        let mut f = shipped("kz2.qha");
        let r = &mut f.r_matrix.as_mut().unwrap().r;
        for (i, (n, d)) in cells.iter().enumerate() {
            r.set(&[i / 2, i % 2], Scalar::new(*n, *d));
        }
        let text = to_text(&f);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(to_text(&back), text);
    }
}
