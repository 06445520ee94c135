use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use quasihopf_core::braided::check_braided_hopf;
use quasihopf_core::dual::integrals;
use quasihopf_core::hzero::build_h0_hopf;
use quasihopf_core::instances::{h2_quasi, h4_r, sweedler_h4};
use quasihopf_core::quasitriangular::{check_all, QtStructure};
use quasihopf_core::{check_quasi_hopf, Scalar};

fn h4_qt() -> QtStructure {
    QtStructure::new(Arc::new(sweedler_h4()), h4_r(&Scalar::new(1, 2)), None).unwrap()
}

fn kernels(c: &mut Criterion) {
    let h2 = h2_quasi();
    c.bench_function("quasi-hopf axioms on H(2)", |b| b.iter(|| check_quasi_hopf(black_box(&h2))));

    let qt = h4_qt();
    c.bench_function("quasitriangular suite on H4", |b| b.iter(|| check_all(black_box(&qt))));

    c.bench_function("build and check H0(H4)", |b| {
        b.iter(|| check_braided_hopf(&build_h0_hopf(black_box(&qt)).unwrap()))
    });

    let h0 = build_h0_hopf(&qt).unwrap();
    c.bench_function("integrals of H0(H4)", |b| b.iter(|| integrals(black_box(&h0)).unwrap()));
}

criterion_group!(benches, kernels);
criterion_main!(benches);
