//! Built-in example algebras, R-matrices and modules.
//!
//! * `k`: the one-dimensional algebra; its Yetter-Drinfeld modules are plain vector spaces.
//! * `kZ₂`: group algebra with basis `{1, g}`.
//! * `H(2)`: the algebra `kZ₂` with reassociator `Φ = 1⊗1⊗1 − 2p₋⊗p₋⊗p₋`,
//!   `p₋ = (1−g)/2`, `S = id`, `α = g`, `β = 1`.
//! * `H₄`: Sweedler's algebra with basis `{1, g, x, gx}`, `g² = 1`, `x² = 0`,
//!   `xg = −gx`, `Δ(x) = x⊗1 + g⊗x`, `S(x) = −gx`.

use std::sync::{Arc, OnceLock};

use crate::braided::{over_ground_field, BraidedHopf};
use crate::format::{build, AlgebraBlock, BraidedBlock, InstanceFile, ModuleBlock, RBlock};
use crate::qha::{element, QuasiBialgebra, QuasiHopf};
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use crate::suite::{run_suite, Suite};
use crate::yd::{check_yd, Flavor, YdModule};

fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

/// Tensor of the given shape with entries `f(index)`.
pub(crate) fn tabulate(dims: &[usize], f: impl Fn(&[usize]) -> Scalar) -> Tensor {
    let total: usize = dims.iter().product();
    let mut idx = vec![0; dims.len()];
    let mut data = Vec::with_capacity(total);
    for _ in 0..total {
        data.push(f(&idx));
        for k in (0..dims.len()).rev() {
            idx[k] += 1;
            if idx[k] < dims[k] {
                break;
            }
            idx[k] = 0;
        }
    }
    element(dims, data)
}

fn delta_fn(i: usize, j: usize) -> Scalar {
    if i == j {
        Scalar::ONE
    } else {
        Scalar::ZERO
    }
}

fn trivial_phi(d: usize, unit: usize) -> Tensor {
    tabulate(&[d, d, d], |i| if i.iter().all(|&x| x == unit) { Scalar::ONE } else { Scalar::ZERO })
}

/// Group algebra of a group of order 2 as a quasi-bialgebra, with reassociator `phi`.
fn z2_base(phi: Tensor, phi_inv: Tensor) -> QuasiBialgebra {
    let mult = tabulate(&[2, 2, 2], |i| delta_fn(i[0] ^ i[1], i[2]));
    let comult = tabulate(&[2, 2, 2], |i| if i[0] == i[1] && i[1] == i[2] { Scalar::ONE } else { Scalar::ZERO });
    let unit = element(&[2], vec![Scalar::ONE, Scalar::ZERO]);
    let counit = element(&[2], vec![Scalar::ONE, Scalar::ONE]);
    QuasiBialgebra::new(mult, unit, comult, counit, phi, phi_inv).expect("kZ2 shapes")
}

pub fn trivial_field_algebra() -> QuasiHopf {
    let one = element(&[1], vec![Scalar::ONE]);
    let base = QuasiBialgebra::new(
        element(&[1, 1, 1], vec![Scalar::ONE]),
        one.clone(),
        element(&[1, 1, 1], vec![Scalar::ONE]),
        one.clone(),
        element(&[1, 1, 1], vec![Scalar::ONE]),
        element(&[1, 1, 1], vec![Scalar::ONE]),
    )
    .expect("k shapes");
    QuasiHopf::new(base, element(&[1, 1], vec![Scalar::ONE]), None, one.clone(), one).expect("k")
}

pub fn group_algebra_z2() -> QuasiHopf {
    let base = z2_base(trivial_phi(2, 0), trivial_phi(2, 0));
    let one = element(&[2], vec![Scalar::ONE, Scalar::ZERO]);
    let s = tabulate(&[2, 2], |i| delta_fn(i[0], i[1]));
    QuasiHopf::new(base, s, None, one.clone(), one).expect("kZ2")
}

/// `1⊗1⊗1 − 2p₋⊗p₋⊗p₋`, which is its own inverse.
pub fn h2_phi() -> Tensor {
    let p = [q(1, 2), q(-1, 2)];
    tabulate(&[2, 2, 2], |i| {
        let triple = &(&p[i[0]] * &p[i[1]]) * &p[i[2]];
        let unit = if i.iter().all(|&x| x == 0) { Scalar::ONE } else { Scalar::ZERO };
        &unit - &(&Scalar::from_int(2) * &triple)
    })
}

pub fn h2_quasi() -> QuasiHopf {
    let phi = h2_phi();
    let base = z2_base(phi.clone(), phi);
    let s = tabulate(&[2, 2], |i| delta_fn(i[0], i[1]));
    let g = element(&[2], vec![Scalar::ZERO, Scalar::ONE]);
    let one = element(&[2], vec![Scalar::ONE, Scalar::ZERO]);
    QuasiHopf::new(base, s, None, g, one).expect("H(2)")
}

/// Basis index of `g^a x^b` in `H₄`.
fn h4_index(a: usize, b: usize) -> usize {
    a + 2 * b
}

pub fn sweedler_h4() -> QuasiHopf {
    let mult = tabulate(&[4, 4, 4], |i| {
        let (a, b) = (i[0] % 2, i[0] / 2);
        let (c, d) = (i[1] % 2, i[1] / 2);
        if b + d == 2 || i[2] != h4_index((a + c) % 2, b + d) {
            return Scalar::ZERO;
        }
        if b * c == 1 {
            -Scalar::ONE
        } else {
            Scalar::ONE
        }
    });
    let mut comult = tabulate(&[4, 4, 4], |_| Scalar::ZERO);
    for (src, a, b) in [(0, 0, 0), (1, 1, 1), (2, 2, 0), (2, 1, 2), (3, 3, 1), (3, 0, 3)] {
        comult.set(&[src, a, b], Scalar::ONE);
    }
    let unit = element(&[4], vec![Scalar::ONE, Scalar::ZERO, Scalar::ZERO, Scalar::ZERO]);
    let counit = element(&[4], vec![Scalar::ONE, Scalar::ONE, Scalar::ZERO, Scalar::ZERO]);
    let base =
        QuasiBialgebra::new(mult, unit.clone(), comult, counit, trivial_phi(4, 0), trivial_phi(4, 0)).expect("H4");
    // S(1)=1, S(g)=g, S(x)=−gx, S(gx)=x.
    let mut s = tabulate(&[4, 4], |_| Scalar::ZERO);
    s.set(&[0, 0], Scalar::ONE);
    s.set(&[1, 1], Scalar::ONE);
    s.set(&[2, 3], -Scalar::ONE);
    s.set(&[3, 2], Scalar::ONE);
    QuasiHopf::new(base, s, None, unit.clone(), unit).expect("H4")
}

/// `½(1⊗1 + 1⊗g + g⊗1 − g⊗g)` on the first two basis vectors of a `d`-dimensional algebra.
fn r_sign(d: usize) -> Tensor {
    tabulate(&[d, d], |i| match (i[0], i[1]) {
        (0, 0) | (0, 1) | (1, 0) => q(1, 2),
        (1, 1) => q(-1, 2),
        _ => Scalar::ZERO,
    })
}

pub fn kz2_r_trivial() -> Tensor {
    tabulate(&[2, 2], |i| if i == [0, 0] { Scalar::ONE } else { Scalar::ZERO })
}

pub fn kz2_r_g() -> Tensor {
    r_sign(2)
}

/// `R_λ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + (λ/2)(x⊗x − x⊗gx + gx⊗x + gx⊗gx)`.
pub fn h4_r(lambda: &Scalar) -> Tensor {
    let mut r = r_sign(4);
    let half = lambda * &q(1, 2);
    for (a, b, sign) in [(2, 2, 1), (2, 3, -1), (3, 2, 1), (3, 3, 1)] {
        r.set(&[a, b], &half * &Scalar::from_int(sign));
    }
    r
}

/// Direct sum of one-dimensional modules over `kZ₂`: basis vector `e_i` has
/// `g·e_i = s_i e_i` and coaction `g^{a_i} ⊗ e_i` (placed on the side the
/// flavor requires), for `parts[i] = (s_i, a_i)`.
pub fn kz2_graded(algebra: Arc<QuasiHopf>, flavor: Flavor, parts: &[(i64, usize)]) -> YdModule {
    let n = parts.len();
    let sign = |i: usize, h: usize| if h == 0 { Scalar::ONE } else { Scalar::from_int(parts[i].0) };
    let action = match flavor {
        Flavor::RightLeft => tabulate(&[n, 2, n], |x| if x[0] == x[2] { sign(x[0], x[1]) } else { Scalar::ZERO }),
        _ => tabulate(&[2, n, n], |x| if x[1] == x[2] { sign(x[1], x[0]) } else { Scalar::ZERO }),
    };
    let coaction = match flavor {
        Flavor::LeftRight => tabulate(&[n, n, 2], |x| delta_fn(x[0], x[1]) * delta_fn(parts[x[0]].1, x[2])),
        _ => tabulate(&[n, 2, n], |x| delta_fn(x[0], x[2]) * delta_fn(parts[x[0]].1, x[1])),
    };
    YdModule::new(algebra, flavor, action, coaction).expect("graded module shapes")
}

/// `M₋`: `g·m = −m`, coaction `m ↦ g⊗m`.
pub fn kz2_m_minus(algebra: Arc<QuasiHopf>, flavor: Flavor) -> YdModule {
    kz2_graded(algebra, flavor, &[(-1, 1)])
}

/// `e₀` with `g·e₀ = e₀` and coaction `g⊗e₀`, plus `e₁` with `g·e₁ = −e₁` and coaction `1⊗e₁`.
pub fn kz2_sum(algebra: Arc<QuasiHopf>, flavor: Flavor) -> YdModule {
    kz2_graded(algebra, flavor, &[(1, 1), (-1, 0)])
}

/// `kZ₂` as an ordinary Hopf algebra, i.e. a braided Hopf algebra over `k`.
pub fn kz2_over_k() -> BraidedHopf {
    let a = group_algebra_z2();
    over_ground_field(
        Arc::new(trivial_field_algebra()),
        a.base.mult.clone(),
        a.base.unit.clone(),
        a.base.comult.clone(),
        a.base.counit.clone(),
        a.antipode.clone(),
    )
    .expect("kZ2 over k")
}

fn instance(name: &str, a: &QuasiHopf, basis: &[&str], r: Option<Tensor>) -> InstanceFile {
    InstanceFile {
        name: name.to_string(),
        dim: a.dim(),
        basis: Some(basis.iter().map(|s| s.to_string()).collect()),
        algebra: AlgebraBlock::from_algebra(a),
        r_matrix: r.map(|r| RBlock { r, r_inv: None }),
        modules: Vec::new(),
        braided_hopf: Vec::new(),
    }
}

fn graded_modules(a: &Arc<QuasiHopf>, flavors: &[Flavor], parts: &[(&str, Vec<(i64, usize)>)]) -> Vec<(String, YdModule)> {
    let mut out = Vec::new();
    for (name, p) in parts {
        for fl in flavors {
            let m = kz2_graded(a.clone(), *fl, p);
            let rep = check_yd(&m);
            assert!(rep.all_passed(), "module {name}-{fl} fails:\n{rep}");
            out.push((format!("{name}-{fl}"), m));
        }
    }
    out
}

/// `M₋` and the two-dimensional sum module over `kZ₂`, in every flavor.
pub fn yd_line_modules() -> Vec<(String, YdModule)> {
    let z = Arc::new(group_algebra_z2());
    graded_modules(&z, &[Flavor::Left, Flavor::LeftRight, Flavor::RightLeft], &[("m-minus", vec![(-1, 1)]), ("sum", vec![(1, 1), (-1, 0)])])
}

fn blocks(modules: Vec<(String, YdModule)>) -> Vec<ModuleBlock> {
    modules.iter().map(|(n, m)| ModuleBlock::from_module(n, m)).collect()
}

/// The shipped instance files, keyed by file name. Panics if any entry fails
/// one of its checks.
pub fn catalog() -> Vec<(&'static str, InstanceFile)> {
    static VALIDATED: OnceLock<()> = OnceLock::new();
    let files = catalog_unchecked();
    VALIDATED.get_or_init(|| {
        for (name, f) in &files {
            let bundle = build(f.clone()).unwrap_or_else(|e| panic!("{name}: {e}"));
            let doc = run_suite(&bundle, Suite::All).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(doc.all_passed(), "{name} fails its own checks:\n{doc}");
        }
    });
    files
}

fn catalog_unchecked() -> Vec<(&'static str, InstanceFile)> {

    let k = instance("k", &trivial_field_algebra(), &["1"], None);

    let z = Arc::new(group_algebra_z2());
    let mut kz2 = instance("kz2", &z, &["1", "g"], Some(kz2_r_g()));
    kz2.modules = blocks(yd_line_modules());

    let h2 = Arc::new(h2_quasi());
    let mut h2f = instance("h2", &h2, &["1", "g"], None);
    h2f.modules = blocks(graded_modules(&h2, &[Flavor::LeftRight, Flavor::RightLeft], &[("plus", vec![(1, 1), (1, 0)])]));
    h2f.modules.push(ModuleBlock::from_module("unit-left", &YdModule::trivial(h2.clone(), Flavor::Left)));

    let h4 = sweedler_h4();
    let h4_basis = ["1", "g", "x", "gx"];
    let h4f = instance("h4", &h4, &h4_basis, Some(h4_r(&Scalar::ONE)));
    let h4_l0 = instance("h4_l0", &h4, &h4_basis, Some(h4_r(&Scalar::ZERO)));

    let kk = Arc::new(trivial_field_algebra());
    let b = kz2_over_k();
    let mut classical = instance("kz2_classical", &kk, &["1"], None);
    classical.modules.push(ModuleBlock::from_module("kz2", b.carrier()));
    classical.braided_hopf.push(BraidedBlock::from_hopf("kz2", "kz2", &b));

    vec![
        ("k.qha", k),
        ("kz2.qha", kz2),
        ("h2.qha", h2f),
        ("h4.qha", h4f),
        ("h4_l0.qha", h4_l0),
        ("kz2_classical.qha", classical),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qha::{check_quasi_bialgebra, check_quasi_hopf};

    fn assert_pass(r: &crate::report::VerificationReport) {
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn shipped_algebras_pass_axioms() {
        for a in [trivial_field_algebra(), group_algebra_z2(), h2_quasi(), sweedler_h4()] {
            assert_pass(&check_quasi_hopf(&a));
        }
    }

    #[test]
    fn h2_phi_is_symmetric_under_reversal() {
        let phi = h2_phi();
        assert_eq!(phi.permute(&[2, 1, 0]).unwrap().data(), phi.data());
    }

    #[test]
    fn weakened_h2_phi_breaks_the_cocycle_condition() {
        let a = h2_quasi();
        let p = [q(1, 2), q(-1, 2)];
        let phi = tabulate(&[2, 2, 2], |i| {
            let unit = if i.iter().all(|&x| x == 0) { Scalar::ONE } else { Scalar::ZERO };
            &unit - &(&(&p[i[0]] * &p[i[1]]) * &p[i[2]])
        });
        let mut base = a.base.clone();
        base.phi = phi;
        let r = check_quasi_bialgebra(&base);
        let q3 = r.get("q3").unwrap();
        assert!(!q3.passed && q3.witness.is_some());
    }
}
