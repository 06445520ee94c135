//! The algebra `H₀`: the space of `H` with the deformed product
//! `h∘h' = Σ X¹hS(x¹X²)αx²X³₁h'S(x³X³₂)`, unit `β`, the adjoint action
//! `h▷h' = Σ h₁h'S(h₂)` and a left coaction. When `H` is quasitriangular,
//! `H₀` is a Hopf algebra in the Yetter-Drinfeld category.

use std::sync::Arc;

use crate::braided::{check_braided_algebra, check_braided_hopf, check_quantum_commutative, BraidedAlgebra, BraidedHopf};
use crate::calc::{Bil, Calc};
use crate::derived::check_lemma41;
use crate::dual::{dual_braided_hopf_unchecked, integrals_direct, same_span};
use crate::error::{QhaError, Result};
use crate::linalg::{self, Matrix};
use crate::qha::{eq, QuasiHopf};
use crate::quasitriangular::QtStructure;
use crate::report::{Entry, VerificationReport};
use crate::scalar::Scalar;
use crate::tensor::{tensors_equal, Tensor};
use crate::yd::{dual_left_yd, Flavor, YdModule};

/// `h := a ▷ h`, consuming `a`.
fn adjoint(c: &mut Calc<'_>, a: &str, h: &str) {
    let (a1, a2) = (c.fresh("a"), c.fresh("a"));
    c.delta(a, &a1, &a2).s(&a2).prod(&[&a1, h, &a2]).rename(&a1, h);
}

/// The product `∘` as a tensor `[a, b, out]`.
pub fn h0_product(a: &QuasiHopf) -> Tensor {
    let d = a.dim();
    let mut c = a.calc();
    c.input("h", d).input("k", d).put(a.phi(), &["X1", "X2", "X3"]).put(a.phi_inv(), &["x1", "x2", "x3"]);
    c.put(&a.alpha, &["al"]).mul("x1", "X2").s("x1").delta("X3", "X31", "X32").mul("x3", "X32").s("x3");
    c.prod(&["X1", "h", "x1", "al", "x2", "X31", "k", "x3"]);
    c.output(&["X1"]).into_tensor().relabel(&["a", "b", "out"]).expect("order 3")
}

/// The adjoint action as a tensor `[h, in, out]`.
pub fn h0_action(a: &QuasiHopf) -> Tensor {
    let d = a.dim();
    let mut c = a.calc();
    c.input("h", d).input("k", d);
    adjoint(&mut c, "h", "k");
    c.output(&["k"]).into_tensor().relabel(&["h", "in", "out"]).expect("order 3")
}

/// `λ(h) = Σ X¹Y¹₁h₁g¹S(q²Y²₂)Y³ ⊗ X²Y¹₂h₂g²S(X³q¹Y²₁)` as `[in, h, out]`.
pub fn h0_coaction(a: &QuasiHopf) -> Tensor {
    let d = a.dim();
    let (tw, pq) = (a.twist(), a.pq());
    let mut c = a.calc();
    c.input("h", d).put(a.phi(), &["X1", "X2", "X3"]).put(a.phi(), &["Y1", "Y2", "Y3"]);
    c.put(&tw.f_inv, &["g1", "g2"]).put(&pq.q_r, &["q1", "q2"]);
    c.delta("Y1", "Y11", "Y12").delta("Y2", "Y21", "Y22").delta("h", "h1", "h2");
    c.mul("q2", "Y22").s("q2").prod(&["X1", "Y11", "h1", "g1", "q2", "Y3"]);
    c.prod(&["X3", "q1", "Y21"]).s("X3").prod(&["X2", "Y12", "h2", "g2", "X3"]);
    c.output(&["X1", "X2"]).into_tensor().relabel(&["in", "h", "out"]).expect("order 3")
}

/// `λ(h) = Σ R² ⊗ R¹▷h` as `[in, h, out]`.
pub fn h0_coaction_r(qt: &QtStructure) -> Tensor {
    let a = &*qt.algebra;
    let mut c = a.calc();
    c.input("h", a.dim()).put(&qt.r, &["R1", "R2"]);
    adjoint(&mut c, "R1", "h");
    c.output(&["R2", "h"]).into_tensor().relabel(&["in", "h", "out"]).expect("order 3")
}

/// `Δ̲(h) = Σ x¹X¹h₁g¹S(x²R²y³X³₂) ⊗ x³R¹▷y¹X²h₂g²S(y²X³₁)` as `[in, o1, o2]`.
pub fn h0_comult(qt: &QtStructure) -> Tensor {
    let a = &*qt.algebra;
    let tw = a.twist();
    let mut c = a.calc();
    c.input("h", a.dim()).put(a.phi(), &["X1", "X2", "X3"]).put(a.phi_inv(), &["x1", "x2", "x3"]);
    c.put(a.phi_inv(), &["y1", "y2", "y3"]).put(&tw.f_inv, &["g1", "g2"]).put(&qt.r, &["R1", "R2"]);
    c.delta("h", "h1", "h2").delta("X3", "X31", "X32");
    c.prod(&["x2", "R2", "y3", "X32"]).s("x2").prod(&["x1", "X1", "h1", "g1", "x2"]);
    c.mul("y2", "X31").s("y2").prod(&["y1", "X2", "h2", "g2", "y2"]);
    c.mul("x3", "R1");
    adjoint(&mut c, "x3", "y1");
    c.output(&["x1", "y1"]).into_tensor().relabel(&["in", "o1", "o2"]).expect("order 3")
}

/// `S̲(h) = Σ X¹R²p²S(q¹(X²R¹p¹▷h)S(q²)X³)` as `[in, out]`.
pub fn h0_antipode(qt: &QtStructure) -> Tensor {
    let a = &*qt.algebra;
    let pq = a.pq();
    let mut c = a.calc();
    c.input("h", a.dim()).put(a.phi(), &["X1", "X2", "X3"]).put(&qt.r, &["R1", "R2"]);
    c.put(&pq.p_r, &["p1", "p2"]).put(&pq.q_r, &["q1", "q2"]);
    c.prod(&["X2", "R1", "p1"]);
    adjoint(&mut c, "X2", "h");
    c.s("q2").prod(&["q1", "h", "q2", "X3"]).s("q1").prod(&["X1", "R2", "p2", "q1"]);
    c.output(&["X1"]).into_tensor().relabel(&["in", "out"]).expect("order 2")
}

fn carrier(a: &Arc<QuasiHopf>, coaction: Tensor) -> Result<YdModule> {
    YdModule::new(a.clone(), Flavor::Left, h0_action(a), coaction)
}

/// `H₀` as an algebra in the Yetter-Drinfeld category, with the coaction
/// built from `f⁻¹` and `q_R`; fails if any algebra axiom does.
pub fn build_h0(a: Arc<QuasiHopf>) -> Result<BraidedAlgebra> {
    let alg = build_h0_unchecked(a)?;
    let rep = check_braided_algebra(&alg);
    if !rep.all_passed() {
        return Err(QhaError::Structure(format!("H0 fails the algebra axioms:\n{rep}")));
    }
    Ok(alg)
}

pub(crate) fn build_h0_unchecked(a: Arc<QuasiHopf>) -> Result<BraidedAlgebra> {
    let carrier = carrier(&a, h0_coaction(&a))?;
    BraidedAlgebra::new(carrier, h0_product(&a), a.beta.clone())
}

/// Lemma 4.1 together with `h∘h' = Σ (h₍₋₁₎▷h')∘h₍₀₎`, the latter both as
/// a closed formula and as `m ∘ c = m`.
pub fn check_prop42(a: &Arc<QuasiHopf>) -> Result<VerificationReport> {
    let mut rep = check_lemma41(a);
    let alg = build_h0_unchecked(a.clone())?;
    let d = a.dim();
    let m = Bil::from_tensor(&alg.mult);
    let act = Bil::from_tensor(&alg.carrier.action);
    let coact = alg.carrier.left_view().1.coact.clone().expect("coaction");
    let mut l = a.calc();
    l.input("h", d).input("k", d).bilinear("h", "k", &m, "h");
    let mut r = a.calc();
    r.input("h", d).input("k", d).coact("h", &coact, "c").act("c", "k", &act).bilinear("k", "h", &m, "k");
    rep.check("prop42-closed", "(Prop. 4.2)", eq(&l.output(&["h"]), &r.output(&["k"])));
    rep.extend(check_quantum_commutative(&alg));
    Ok(rep)
}

/// `H₀` as a Hopf algebra in the Yetter-Drinfeld category of a
/// quasitriangular `H`, with coaction `Σ R² ⊗ R¹▷h`.
pub fn build_h0_hopf(qt: &QtStructure) -> Result<BraidedHopf> {
    let b = build_h0_hopf_unchecked(qt)?;
    let rep = check_braided_hopf(&b);
    if !rep.all_passed() {
        return Err(QhaError::Structure(format!("H0 fails the braided Hopf axioms:\n{rep}")));
    }
    Ok(b)
}

pub(crate) fn build_h0_hopf_unchecked(qt: &QtStructure) -> Result<BraidedHopf> {
    let a = &qt.algebra;
    let carrier = carrier(a, h0_coaction_r(qt))?;
    let counit = a.base.counit.clone();
    BraidedHopf::from_parts(carrier, h0_product(a), a.beta.clone(), h0_comult(qt), counit, h0_antipode(qt))
}

/// Compares the coaction built from `f⁻¹, q_R` with the one induced by `R`.
/// A difference is recorded as a finding; the report has no failing entry.
pub fn h0_consistency(qt: &QtStructure) -> VerificationReport {
    let a = &*qt.algebra;
    let mut rep = VerificationReport::new();
    let s2 = h0_coaction(a);
    let r = h0_coaction_r(qt);
    match tensors_equal(&s2, &r).expect("same shape") {
        None => rep.finding("coactions (s2) and (scshz) coincide"),
        Some(m) => rep.finding(format!("coactions (s2) and (scshz) differ: first difference {m}")),
    }
    rep
}

/// `h ↦ Σ f²R̄²▷h₁̲ ⊗ f¹R̄¹▷h₂̲`, the map dual to the product of `H₀*`.
fn dual_product_short(qt: &QtStructure) -> Tensor {
    let a = &*qt.algebra;
    let und = crate::calc::Split::from_tensor(&h0_comult(qt));
    let mut c = a.calc();
    c.input("h", a.dim()).split("h", &und, "h1", "h2");
    c.put(&a.twist().f, &["f1", "f2"]).put(&qt.r_inv, &["R1", "R2"]);
    c.mul("f2", "R2").mul("f1", "R1");
    adjoint(&mut c, "f2", "h1");
    adjoint(&mut c, "f1", "h2");
    c.output(&["h1", "h2"]).into_tensor()
}

/// The expanded form
/// `h ↦ Σ f²▷(Y²R̄²X¹x¹₁h₁g¹S(Y³x³)) ⊗ f¹Y¹R̄¹▷(X²x¹₂h₂g²S(X³x²))`.
fn dual_product_long(qt: &QtStructure) -> Tensor {
    let a = &*qt.algebra;
    let tw = a.twist();
    let mut c = a.calc();
    c.input("h", a.dim()).put(&tw.f, &["f1", "f2"]).put(&tw.f_inv, &["g1", "g2"]).put(&qt.r_inv, &["R1", "R2"]);
    c.put(a.phi(), &["X1", "X2", "X3"]).put(a.phi(), &["Y1", "Y2", "Y3"]).put(a.phi_inv(), &["x1", "x2", "x3"]);
    c.delta("h", "h1", "h2").delta("x1", "x11", "x12");
    c.mul("Y3", "x3").s("Y3").prod(&["Y2", "R2", "X1", "x11", "h1", "g1", "Y3"]);
    c.mul("X3", "x2").s("X3").prod(&["X2", "x12", "h2", "g2", "X3"]);
    adjoint(&mut c, "f2", "Y2");
    c.prod(&["f1", "Y1", "R1"]);
    adjoint(&mut c, "f1", "X2");
    c.output(&["Y2", "X2"]).into_tensor()
}

/// `(i, j) ↦ (R²g²▷e_i)∘(R¹g¹▷e_j)`.
fn dual_coproduct(qt: &QtStructure) -> Tensor {
    let a = &*qt.algebra;
    let m = Bil::from_tensor(&h0_product(a));
    let mut c = a.calc();
    c.input("i", a.dim()).input("j", a.dim()).put(&qt.r, &["R1", "R2"]).put(&a.twist().f_inv, &["g1", "g2"]);
    c.mul("R2", "g2").mul("R1", "g1");
    adjoint(&mut c, "R2", "i");
    adjoint(&mut c, "R1", "j");
    c.bilinear("i", "j", &m, "i");
    c.output(&["i"]).into_tensor()
}

/// `H₀*` from the explicit formulas, on the dual Yetter-Drinfeld module of `H₀`.
pub fn h0_dual(qt: &QtStructure) -> Result<BraidedHopf> {
    let a = &qt.algebra;
    let carrier = dual_left_yd(&carrier(a, h0_coaction_r(qt))?)?;
    let mult = dual_product_short(qt).permute(&[1, 2, 0])?;
    let comult = dual_coproduct(qt).permute(&[2, 0, 1])?;
    let antipode = h0_antipode(qt).permute(&[1, 0])?;
    BraidedHopf::from_parts(carrier, mult, a.base.counit.clone(), comult, a.beta.clone(), antipode)
}

/// `Λ` with `Σ Λ(S(p̃²)f¹R̄¹▷h₂̲) S(p̃¹)f²R̄²▷h₁̲ = Λ(h)β` for every basis `h`.
pub fn h0_integrals_display(qt: &QtStructure) -> Vec<Vec<Scalar>> {
    let a = &*qt.algebra;
    let n = a.dim();
    let und = crate::calc::Split::from_tensor(&h0_comult(qt));
    let pq = a.pq();
    let mut c = a.calc();
    c.input("h", n).split("h", &und, "h1", "h2");
    c.put(&a.twist().f, &["f1", "f2"]).put(&qt.r_inv, &["R1", "R2"]).put(&pq.p_l, &["P1", "P2"]);
    c.prod(&["f2", "R2"]).prod(&["f1", "R1"]);
    adjoint(&mut c, "f2", "h1");
    adjoint(&mut c, "f1", "h2");
    c.s("P1").s("P2").lmul("P1", "h1").lmul("P2", "h2");
    let t = c.output(&["h1", "h2"]).into_tensor();
    let beta = a.beta.data();
    let mut rows: Matrix = Vec::with_capacity(n * n);
    for h in 0..n {
        for o in 0..n {
            rows.push((0..n).map(|j| if j == h { t.get(&[h, o, j]) - &beta[o] } else { t.get(&[h, o, j]).clone() }).collect());
        }
    }
    linalg::kernel(&rows, n)
}

/// The explicit `H₀*` against the general dual, the long product formula
/// against the short one, and the displayed integral condition against the
/// general integral space.
pub fn check_h0_dual(qt: &QtStructure) -> Result<VerificationReport> {
    let b = build_h0_hopf_unchecked(qt)?;
    let general = dual_braided_hopf_unchecked(&b)?;
    let explicit = h0_dual(qt)?;
    let mut rep = check_braided_hopf(&explicit);
    let cmp = |x: &Tensor, y: &Tensor| tensors_equal(x, y).ok().flatten();
    rep.check("dual-carrier-action", "(rdy1)", cmp(&explicit.carrier().action, &general.carrier().action));
    rep.check("dual-carrier-coaction", "(rdy2)", cmp(&explicit.carrier().coaction, &general.carrier().coaction));
    rep.check("dmhz1", "(dmhz1)", cmp(&explicit.algebra.mult, &general.algebra.mult));
    rep.check("duhz", "(duhz)", cmp(&explicit.algebra.unit, &general.algebra.unit));
    rep.check("dcmhz", "(dcmhz)", cmp(&explicit.coalgebra.comult, &general.coalgebra.comult));
    rep.check("dchz", "(dchz)", cmp(&explicit.coalgebra.counit, &general.coalgebra.counit));
    rep.check("danthz", "(danthz)", cmp(&explicit.antipode, &general.antipode));
    rep.check("dmhz1-vs-dmhz2", "(dmhz2)", cmp(&dual_product_short(qt), &dual_product_long(qt)));
    let display = h0_integrals_display(qt);
    let general_integrals = integrals_direct(&b)?;
    rep.push(if same_span(&display, &general_integrals) {
        Entry::passed("integral-display", "In this particular case we have")
    } else {
        Entry::failed(
            "integral-display",
            "In this particular case we have",
            format!("display gives dimension {}, coinvariants give {}", display.len(), general_integrals.len()),
        )
    });
    rep.push(if display.len() == 1 {
        Entry::passed("integral-dimension", "(Cor. 5.5)")
    } else {
        Entry::failed("integral-dimension", "(Cor. 5.5)", format!("dim I_l(H0*) = {}", display.len()))
    });
    Ok(rep)
}

/// `H₀*` and a basis of `I_l(H₀*)`, after all cross-checks pass.
pub fn h0_dual_and_integrals(qt: &QtStructure) -> Result<(BraidedHopf, Vec<Vec<Scalar>>)> {
    let rep = check_h0_dual(qt)?;
    if !rep.all_passed() {
        return Err(QhaError::Structure(format!("H0* cross-checks failed:\n{rep}")));
    }
    let b = build_h0_hopf_unchecked(qt)?;
    Ok((h0_dual(qt)?, crate::dual::integrals(&b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::*;

    #[test]
    fn ordinary_hopf_product_is_undeformed() {
        for a in [group_algebra_z2(), sweedler_h4()] {
            let p = h0_product(&a);
            assert_eq!(p.data(), a.base.mult.data());
        }
    }

    #[test]
    fn h2_product_collapses_on_a_commutative_algebra() {
        // With H commutative and m∘Δ = ε·1, the product reduces to hh'·g·(x¹x²x³) = hh'.
        let a = Arc::new(h2_quasi());
        let alg = build_h0(a.clone()).unwrap();
        assert_eq!(alg.mult.data(), a.base.mult.data());
        assert!(check_prop42(&a).unwrap().all_passed());
    }

    #[test]
    fn trivial_r_gives_classical_kz2() {
        let a = Arc::new(group_algebra_z2());
        let qt = QtStructure::new(a.clone(), kz2_r_trivial(), None).unwrap();
        let b = build_h0_hopf(&qt).unwrap();
        assert_eq!(b.coalgebra.comult.data(), a.base.comult.data());
        assert_eq!(b.antipode.data(), a.antipode.data());
    }

    #[test]
    fn quasitriangular_instances_give_braided_hopf_algebras() {
        let z = Arc::new(group_algebra_z2());
        let h4 = Arc::new(sweedler_h4());
        let cases = vec![
            QtStructure::new(z.clone(), kz2_r_g(), None).unwrap(),
            QtStructure::new(h4.clone(), h4_r(&crate::scalar::Scalar::ZERO), None).unwrap(),
            QtStructure::new(h4.clone(), h4_r(&crate::scalar::Scalar::ONE), None).unwrap(),
        ];
        for qt in &cases {
            let b = build_h0_hopf_unchecked(qt).unwrap();
            let r = check_braided_hopf(&b);
            assert!(r.all_passed(), "{r}");
            assert_eq!(h0_consistency(qt).findings.len(), 1);
            let r = check_h0_dual(qt).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn classical_kz2_dual_integral_is_delta_one() {
        let a = Arc::new(group_algebra_z2());
        let qt = QtStructure::new(a, kz2_r_trivial(), None).unwrap();
        let (_, basis) = h0_dual_and_integrals(&qt).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(basis[0][1].is_zero());
    }
}
