//! The dual `B*` of a finite-dimensional braided Hopf algebra, its right
//! `B`-Hopf module structure, and the space of left integrals `I_l(B*)`.
//!
//! `B*` is written in the dual of the stored basis of `B`: the coordinates of
//! `φ` are the values `φ(b_i)`.

use crate::braided::{apply_bil, check_braided_hopf, leaf_of, BraidedHopf};
use crate::calc::Bil;
use crate::category::{morphism, Braiding, Obj};
use crate::derived::element_u_big;
use crate::error::{QhaError, Result};
use crate::hopf_module::{check_hopf_module, coinvariants, HopfModule};
use crate::linalg::{self, Matrix};
use crate::qha::eq;
use crate::report::{Entry, VerificationReport};
use crate::scalar::Scalar;
use crate::tensor::{LinearMap, Tensor};
use crate::yd::dual_left_yd;

/// The dual braided Hopf algebra, checked against the full axiom suite.
pub fn dual_braided_hopf(b: &BraidedHopf) -> Result<BraidedHopf> {
    let d = dual_braided_hopf_unchecked(b)?;
    let rep = check_braided_hopf(&d);
    if !rep.all_passed() {
        return Err(QhaError::Structure(format!("B* fails the braided Hopf axioms:\n{rep}")));
    }
    Ok(d)
}

pub(crate) fn dual_braided_hopf_unchecked(b: &BraidedHopf) -> Result<BraidedHopf> {
    let carrier = dual_left_yd(b.carrier())?;
    let mult = dual_product_table(b).permute(&[1, 2, 0])?;
    let comult = dual_coproduct_table(b).permute(&[2, 0, 1])?;
    let antipode = b.antipode.permute(&[1, 0])?;
    let unit = b.coalgebra.counit.clone();
    let counit = b.algebra.unit.clone();
    BraidedHopf::from_parts(carrier, mult, unit, comult, counit, antipode)
}

/// `b ↦ Σ f²q̃²₂Y³S⁻¹(q̃¹Y¹(p¹·b₂)₋₁p²)·b₁ ⊗ f¹q̃²₁Y²·(p¹·b₂)₀`, so that
/// `(φ*ψ)(b)` pairs `φ` with the first factor and `ψ` with the second.
fn dual_product_table(b: &BraidedHopf) -> Tensor {
    let a = b.base();
    let (tw, pq) = (a.twist(), a.pq());
    let bc = b.view();
    let ops = b.ops();
    let coact = bc.coact.as_ref().expect("coaction");
    let mut c = a.calc();
    c.input("b", b.dim()).split("b", ops.d.unwrap(), "b1", "b2");
    c.put(&tw.f, &["f1", "f2"]).put(&pq.q_l, &["Q1", "Q2"]).put(&pq.p_r, &["p1", "p2"]);
    c.put(a.phi(), &["Y1", "Y2", "Y3"]).delta("Q2", "Q21", "Q22");
    c.act("p1", "b2", &bc.act).coact("b2", coact, "w");
    c.prod(&["Q1", "Y1", "w", "p2"]).sinv("Q1").prod(&["f2", "Q22", "Y3", "Q1"]).act("f2", "b1", &bc.act);
    c.prod(&["f1", "Q21", "Y2"]).act("f1", "b2", &bc.act);
    c.output(&["b1", "b2"]).into_tensor()
}

/// `(i, j) ↦ [(g¹·b_j)₋₁g²·b_i](g¹·b_j)₀`.
fn dual_coproduct_table(b: &BraidedHopf) -> Tensor {
    let a = b.base();
    let bc = b.view();
    let ops = b.ops();
    let coact = bc.coact.as_ref().expect("coaction");
    let mut c = a.calc();
    c.input("i", b.dim()).input("j", b.dim()).put(&a.twist().f_inv, &["g1", "g2"]);
    c.act("g1", "j", &bc.act).coact("j", coact, "w").mul("w", "g2").act("w", "i", &bc.act);
    c.bilinear("i", "j", ops.m.unwrap(), "i");
    c.output(&["i"]).into_tensor()
}

/// `⟨φ↼b, b'⟩ = Σ⟨φ, [(U¹·b)₋₁U²·b'] S̲((U¹·b)₀)⟩` as `[m, b, out]`.
pub fn star_action(b: &BraidedHopf) -> Tensor {
    let a = b.base();
    let bc = b.view();
    let ops = b.ops();
    let coact = bc.coact.as_ref().expect("coaction");
    let mut c = a.calc();
    c.input("b", b.dim()).input("c", b.dim()).put(&element_u_big(a), &["U1", "U2"]);
    c.act("U1", "b", &bc.act).coact("b", coact, "w").mul("w", "U2").act("w", "c", &bc.act);
    c.linear("b", ops.s.unwrap()).bilinear("c", "b", ops.m.unwrap(), "c");
    let t = c.output(&["c"]).into_tensor();
    t.permute(&[2, 0, 1]).expect("order 3").relabel(&["m", "b", "out"]).expect("order 3")
}

/// `ρ(φ) = Σ_i (S(p̃¹)·b_i)₋₁·[b^i*(p̃²·φ)] ⊗ (S(p̃¹)·b_i)₀` as `[in, m, b]`,
/// where `*` and the `H`-action on `B*` come from `dual`.
pub fn star_coaction(b: &BraidedHopf, dual: &BraidedHopf) -> Tensor {
    let a = b.base();
    let (bc, dc) = (b.view(), dual.view());
    let coact = bc.coact.as_ref().expect("coaction");
    let dm = Bil::from_tensor(&dual.algebra.mult);
    let mut c = a.calc();
    c.input("phi", b.dim()).diagonal("bi", "bd", b.dim()).put(&a.pq().p_l, &["P1", "P2"]);
    c.act("P2", "phi", &dc.act).bilinear("bd", "phi", &dm, "bd");
    c.s("P1").act("P1", "bi", &bc.act).coact("bi", coact, "w").act("w", "bd", &dc.act);
    c.output(&["bd", "bi"]).into_tensor().relabel(&["in", "m", "b"]).expect("order 3")
}

/// The composite `r⁻¹ ∘ (ev⊗id) ∘ ((id⊗m')⊗id) ∘ (a⊗id) ∘ a⁻¹ ∘ ((id⊗S̲)⊗coev) ∘ l`,
/// with `m' = m∘c` when `braided` is set and `m' = m` otherwise.
fn rbmd(b: &BraidedHopf, dual: &BraidedHopf, braided: bool) -> LinearMap {
    let ops = b.ops();
    let (bc, dc) = (b.view(), dual.view());
    let src = Obj::pair(Obj::leaf("phi", dc), Obj::leaf("b", bc));
    morphism(b.base(), &src, |e, o| {
        let (phi, x) = o.split();
        let x = ops.s(e, x);
        let (v, w) = (e.c.fresh("v"), e.c.fresh("w"));
        let cv = e.coev(bc, dc, [&v, &w]);
        let o = e.assoc_inv(Obj::pair(Obj::pair(phi, x), cv));
        let (left, w) = o.split();
        let (phi, xv) = e.assoc(left).split();
        let xv = if braided { e.braid(Braiding::Yd, xv) } else { xv };
        let y = ops.m(e, xv);
        let (phi_name, _) = leaf_of(&phi);
        e.ev(&phi_name, &y);
        w
    })
}

fn rbcmd(b: &BraidedHopf, dual: &BraidedHopf) -> LinearMap {
    let (bc, dc) = (b.view(), dual.view());
    let dm = Bil::from_tensor(&dual.algebra.mult);
    morphism(b.base(), &Obj::leaf("phi", dc), |e, o| {
        let (v, w) = (e.c.fresh("v"), e.c.fresh("w"));
        let cv = e.coev(bc, dc, [&v, &w]);
        let (v, rest) = e.assoc(Obj::pair(cv, o)).split();
        let w = apply_bil(e, &dm, rest, dc);
        e.braid(Braiding::Yd, Obj::pair(v, w))
    })
}

/// Compares the closed forms of the `B`-Hopf module structure on `B*`
/// with the categorical composites, then checks the Hopf module axioms.
pub fn check_star_module(b: &BraidedHopf) -> Result<VerificationReport> {
    let dual = dual_braided_hopf_unchecked(b)?;
    let m = star_module(b, &dual)?;
    let mut rep = VerificationReport::new();
    let closed_action = LinearMap::new(m.action.clone(), 2)?;
    let closed_coaction = LinearMap::new(m.coaction.clone(), 1)?;
    rep.check("rhmbd1-vs-rbmd", "(rhmbd1)", eq(&closed_action, &rbmd(b, &dual, true)));
    if let Some(m) = eq(&closed_action, &rbmd(b, &dual, false)) {
        rep.finding(format!("(rbmd) with m in place of m∘c differs from (rhmbd1): first difference {m}"));
    }
    rep.check("rhmbd2-vs-rbcmd", "(rhmbd2)", eq(&closed_coaction, &rbcmd(b, &dual)));
    rep.extend(check_hopf_module(&m, b));
    Ok(rep)
}

fn star_module(b: &BraidedHopf, dual: &BraidedHopf) -> Result<HopfModule> {
    HopfModule::new(dual.carrier().clone(), b.dim(), star_action(b), star_coaction(b, dual))
}

/// `B*` as a right `B`-Hopf module; fails if the closed forms disagree with
/// the categorical composites or the axioms fail.
pub fn b_star_hopf_module(b: &BraidedHopf) -> Result<HopfModule> {
    let rep = check_star_module(b)?;
    if !rep.all_passed() {
        return Err(QhaError::Structure(format!("B* is not a B-Hopf module:\n{rep}")));
    }
    let dual = dual_braided_hopf_unchecked(b)?;
    star_module(b, &dual)
}

/// Solutions of `Σ (p̃¹·φ)*(p̃²·Λ) = φ(1_B)Λ` for every basis functional `φ`.
pub fn integrals_direct(b: &BraidedHopf) -> Result<Vec<Vec<Scalar>>> {
    let dual = dual_braided_hopf_unchecked(b)?;
    let a = b.base();
    let n = b.dim();
    let dc = dual.view();
    let dm = Bil::from_tensor(&dual.algebra.mult);
    let mut c = a.calc();
    c.input("phi", n).input("lam", n).put(&a.pq().p_l, &["P1", "P2"]);
    c.act("P1", "phi", &dc.act).act("P2", "lam", &dc.act).bilinear("phi", "lam", &dm, "phi");
    let table = c.output(&["phi"]).to_matrix();
    let unit = b.algebra.unit.data();
    let mut rows: Matrix = Vec::with_capacity(n * n);
    for (i, u) in unit.iter().enumerate() {
        for k in 0..n {
            rows.push((0..n).map(|j| if j == k { &table[i * n + j][k] - u } else { table[i * n + j][k].clone() }).collect());
        }
    }
    Ok(linalg::kernel(&rows, n))
}

pub(crate) fn same_span(x: &[Vec<Scalar>], y: &[Vec<Scalar>]) -> bool {
    let rank = |m: &[Vec<Scalar>]| if m.is_empty() { 0 } else { linalg::rank(&m.to_vec()) };
    let both: Vec<Vec<Scalar>> = x.iter().chain(y).cloned().collect();
    rank(x) == rank(y) && rank(&both) == rank(x)
}

/// Integral space by both routes; entries for their agreement and for the dimension.
pub fn check_integrals(b: &BraidedHopf) -> Result<(Vec<Vec<Scalar>>, VerificationReport)> {
    let direct = integrals_direct(b)?;
    let dual = dual_braided_hopf_unchecked(b)?;
    let m = star_module(b, &dual)?;
    let coinv = coinvariants(&m, b);
    let mut rep = VerificationReport::new();
    rep.push(if same_span(&direct, &coinv) {
        Entry::passed("integral-routes", "(Prop. 5.4)")
    } else {
        Entry::failed(
            "integral-routes",
            "(Prop. 5.4)",
            format!("direct route gives dimension {}, coinvariants give {}", direct.len(), coinv.len()),
        )
    });
    rep.push(if direct.len() == 1 {
        Entry::passed("integral-dimension", "(Cor. 5.5)")
    } else {
        Entry::failed("integral-dimension", "(Cor. 5.5)", format!("dim I_l(B*) = {}", direct.len()))
    });
    Ok((direct, rep))
}

/// A basis of `I_l(B*)`; fails unless both routes agree on a one-dimensional space.
pub fn integrals(b: &BraidedHopf) -> Result<Vec<Vec<Scalar>>> {
    let (basis, rep) = check_integrals(b)?;
    if !rep.all_passed() {
        return Err(QhaError::Structure(format!("integral space check failed:\n{rep}")));
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::kz2_over_k;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn dual_of_kz2_is_the_function_algebra() {
        let b = kz2_over_k();
        let d = dual_braided_hopf(&b).unwrap();
        // δ_1, δ_g are orthogonal idempotents; Δ(δ_1) = δ_1⊗δ_1 + δ_g⊗δ_g.
        let m = d.algebra.mult.data();
        let expect_m = [1, 0, 0, 0, 0, 0, 0, 1].map(s);
        assert_eq!(m, &expect_m);
        let c = d.coalgebra.comult.data();
        let expect_c = [1, 0, 0, 1, 0, 1, 1, 0].map(s);
        assert_eq!(c, &expect_c);
        assert_eq!(d.algebra.unit.data(), &[s(1), s(1)]);
        assert_eq!(d.coalgebra.counit.data(), &[s(1), s(0)]);
    }

    #[test]
    fn kz2_star_module_and_integral() {
        let b = kz2_over_k();
        let r = check_star_module(&b).unwrap();
        assert!(r.all_passed(), "{r}");
        // φ↼b: ⟨φ↼b, b'⟩ = φ(b'S(b)); δ_1↼g = δ_g.
        let act = star_action(&b);
        assert_eq!(act.get(&[0, 1, 1]), &s(1));
        assert_eq!(act.get(&[0, 1, 0]), &s(0));
        let i = integrals(&b).unwrap();
        // The left integral of k^{Z₂} is δ_1.
        assert_eq!(i.len(), 1);
        assert!(i[0][1].is_zero() && !i[0][0].is_zero());
    }

    #[test]
    fn h0_duals_modules_and_integrals() {
        use crate::hzero::build_h0_hopf;
        use crate::instances::*;
        use crate::quasitriangular::QtStructure;
        use std::sync::Arc;
        let z = Arc::new(group_algebra_z2());
        let h4 = Arc::new(sweedler_h4());
        for qt in [
            QtStructure::new(z, kz2_r_g(), None).unwrap(),
            QtStructure::new(h4.clone(), h4_r(&s(0)), None).unwrap(),
            QtStructure::new(h4, h4_r(&s(1)), None).unwrap(),
        ] {
            let b = build_h0_hopf(&qt).unwrap();
            let d = dual_braided_hopf_unchecked(&b).unwrap();
            let r = check_braided_hopf(&d);
            assert!(r.all_passed(), "{r}");
            let r = check_star_module(&b).unwrap();
            assert!(r.all_passed(), "{r}");
            let (basis, r) = check_integrals(&b).unwrap();
            assert!(r.all_passed(), "{r} {basis:?}");
        }
    }

    #[test]
    fn unbraided_composite_is_not_a_right_action_on_h0_of_h4() {
        use crate::hzero::build_h0_hopf;
        use crate::instances::*;
        use crate::quasitriangular::QtStructure;
        use std::sync::Arc;
        let qt = QtStructure::new(Arc::new(sweedler_h4()), h4_r(&s(1)), None).unwrap();
        let b = build_h0_hopf(&qt).unwrap();
        let d = dual_braided_hopf_unchecked(&b).unwrap();
        let action = rbmd(&b, &d, false).into_tensor();
        let m = HopfModule::new(d.carrier().clone(), 4, action, star_coaction(&b, &d)).unwrap();
        let r = check_hopf_module(&m, &b);
        assert!(!r.get("rm1-assoc").unwrap().passed);
        let r = check_star_module(&b).unwrap();
        assert_eq!(r.findings.len(), 1);
    }
}
