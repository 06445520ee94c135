//! Canonical elements of a quasi-Hopf algebra: the Drinfeld twist `f`, the
//! elements γ, δ, and `p_R, q_R, p_L, q_L`, with the identities they satisfy.

use crate::qha::{eq, standard, twisted_phi, QuasiHopf};
use crate::report::VerificationReport;
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub gamma: Tensor,
    pub delta: Tensor,
    pub f: Tensor,
    pub f_inv: Tensor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pq {
    pub p_r: Tensor,
    pub q_r: Tensor,
    pub p_l: Tensor,
    pub q_l: Tensor,
}

pub(crate) fn compute_twist(a: &QuasiHopf) -> Twist {
    // A = (Φ⊗1)(Δ⊗id⊗id)(Φ⁻¹)
    let mut c = a.calc();
    c.put(a.phi(), &["A1", "A2", "A3"]).unit("A4");
    c.put(a.phi_inv(), &["y1", "y3", "y4"]).delta("y1", "y1", "y2");
    c.mul("A1", "y1").mul("A2", "y2").mul("A3", "y3").mul("A4", "y4");
    // γ = Σ S(A²)αA³ ⊗ S(A¹)αA⁴
    c.s("A2").put(&a.alpha, &["a"]).mul("A2", "a").mul("A2", "A3");
    c.s("A1").put(&a.alpha, &["a"]).mul("A1", "a").mul("A1", "A4");
    let gamma = standard(c.element(&["A2", "A1"]));

    // B = (Δ⊗id⊗id)(Φ)(Φ⁻¹⊗1)
    let mut c = a.calc();
    c.put(a.phi(), &["B1", "B3", "B4"]).delta("B1", "B1", "B2");
    c.put(a.phi_inv(), &["x1", "x2", "x3"]).mul("B1", "x1").mul("B2", "x2").mul("B3", "x3");
    // δ = Σ B¹βS(B⁴) ⊗ B²βS(B³)
    c.put(&a.beta, &["b"]).s("B4").mul("B1", "b").mul("B1", "B4");
    c.put(&a.beta, &["b"]).s("B3").mul("B2", "b").mul("B2", "B3");
    let delta = standard(c.element(&["B1", "B2"]));

    // f = Σ (S⊗S)(Δ^op(x¹)) γ Δ(x²βS(x³))
    let mut c = a.calc();
    c.put(a.phi_inv(), &["x1", "x2", "x3"]).delta("x1", "u", "v").s("u").s("v");
    c.put(&a.beta, &["b"]).s("x3").mul("x2", "b").mul("x2", "x3").delta("x2", "w1", "w2");
    c.put(&gamma, &["g1", "g2"]);
    c.mul("v", "g1").mul("v", "w1").mul("u", "g2").mul("u", "w2");
    let f = standard(c.element(&["v", "u"]));

    // f⁻¹ = Σ Δ(S(x¹)αx²) δ (S⊗S)(Δ^op(x³))
    let mut c = a.calc();
    c.put(a.phi_inv(), &["x1", "x2", "x3"]).s("x1").put(&a.alpha, &["a"]).mul("x1", "a").mul("x1", "x2");
    c.delta("x1", "w1", "w2").put(&delta, &["d1", "d2"]);
    c.delta("x3", "u", "v").s("u").s("v");
    c.mul("w1", "d1").mul("w1", "v").mul("w2", "d2").mul("w2", "u");
    let f_inv = standard(c.element(&["w1", "w2"]));

    Twist { gamma, delta, f, f_inv }
}

pub(crate) fn compute_pq(a: &QuasiHopf) -> Pq {
    // p_R = Σ x¹ ⊗ x²βS(x³)
    let mut c = a.calc();
    c.put(a.phi_inv(), &["x1", "x2", "x3"]).put(&a.beta, &["b"]).s("x3").mul("x2", "b").mul("x2", "x3");
    let p_r = standard(c.element(&["x1", "x2"]));
    // q_R = Σ X¹ ⊗ S⁻¹(αX³)X²
    let mut c = a.calc();
    c.put(a.phi(), &["X1", "X2", "X3"]).put(&a.alpha, &["a"]).mul("a", "X3").sinv("a").mul("a", "X2");
    let q_r = standard(c.element(&["X1", "a"]));
    // p_L = Σ X²S⁻¹(X¹β) ⊗ X³
    let mut c = a.calc();
    c.put(a.phi(), &["X1", "X2", "X3"]).put(&a.beta, &["b"]).mul("X1", "b").sinv("X1").mul("X2", "X1");
    let p_l = standard(c.element(&["X2", "X3"]));
    // q_L = Σ S(x¹)αx² ⊗ x³
    let mut c = a.calc();
    c.put(a.phi_inv(), &["x1", "x2", "x3"]).s("x1").put(&a.alpha, &["a"]).mul("x1", "a").mul("x1", "x2");
    let q_l = standard(c.element(&["x1", "x3"]));
    Pq { p_r, q_r, p_l, q_l }
}

fn ones(a: &QuasiHopf, n: usize) -> crate::tensor::LinearMap {
    let t = a.unit_power(n);
    crate::tensor::LinearMap::new(t, 0).expect("element")
}

fn elem_map(t: &Tensor) -> crate::tensor::LinearMap {
    crate::tensor::LinearMap::new(t.clone(), 0).expect("element")
}

/// Post-checks for f, f⁻¹, γ, δ.
pub fn check_twist(a: &QuasiHopf) -> VerificationReport {
    let tw = a.twist();
    let d = a.dim();
    let mut r = VerificationReport::new();

    r.check("f-times-f-inverse", "(f)", eq(&elem_map(&a.element_product(&tw.f, &tw.f_inv)), &ones(a, 2)));
    r.check("f-inverse-times-f", "(g)", eq(&elem_map(&a.element_product(&tw.f_inv, &tw.f)), &ones(a, 2)));

    let mut l = a.calc();
    l.input("h", d).s("h").delta("h", "h1", "h2").put(&tw.f, &["f1", "f2"]).put(&tw.f_inv, &["g1", "g2"]);
    l.lmul("f1", "h1").lmul("f2", "h2").mul("h1", "g1").mul("h2", "g2");
    let mut rr = a.calc();
    rr.input("h", d).delta("h", "h1", "h2").s("h1").s("h2");
    r.check("ca", "(ca)", eq(&l.output(&["h1", "h2"]), &rr.output(&["h2", "h1"])));

    let mut l = a.calc();
    l.put(&a.alpha, &["a"]).delta("a", "a1", "a2").put(&tw.f, &["f1", "f2"]).lmul("f1", "a1").lmul("f2", "a2");
    r.check("gdf-gamma", "(gdf)", eq(&l.output(&["a1", "a2"]), &elem_map(&tw.gamma)));

    let mut l = a.calc();
    l.put(&a.beta, &["b"]).delta("b", "b1", "b2").put(&tw.f_inv, &["g1", "g2"]).mul("b1", "g1").mul("b2", "g2");
    r.check("gdf-delta", "(gdf)", eq(&l.output(&["b1", "b2"]), &elem_map(&tw.delta)));

    let phi_f = twisted_phi(a, &tw.f, &tw.f_inv);
    let mut rr = a.calc();
    rr.put(a.phi(), &["X1", "X2", "X3"]).s("X1").s("X2").s("X3");
    r.check("pf", "(pf)", eq(&elem_map(&phi_f), &rr.output(&["X3", "X2", "X1"])));
    r
}

/// The (qr1)-family intertwining identities and (qr2).
pub fn check_pq(a: &QuasiHopf) -> VerificationReport {
    let pq = a.pq();
    let f = &a.twist().f;
    let d = a.dim();
    let mut r = VerificationReport::new();

    // Σ Δ(h₁) p_R [1⊗S(h₂)] = p_R (h⊗1)
    let mut l = a.calc();
    l.input("h", d).delta("h", "h1", "h2").delta("h1", "a", "b").put(&pq.p_r, &["p1", "p2"]);
    l.mul("a", "p1").mul("b", "p2").s("h2").mul("b", "h2");
    let mut rr = a.calc();
    rr.input("h", d).put(&pq.p_r, &["p1", "p2"]).mul("p1", "h");
    r.check("qr1-p_R", "(qr1)", eq(&l.output(&["a", "b"]), &rr.output(&["p1", "p2"])));

    // Σ [1⊗S⁻¹(h₂)] q_R Δ(h₁) = (h⊗1) q_R
    let mut l = a.calc();
    l.input("h", d).delta("h", "h1", "h2").sinv("h2").put(&pq.q_r, &["q1", "q2"]).lmul("h2", "q2");
    l.delta("h1", "a", "b").mul("q1", "a").mul("q2", "b");
    let mut rr = a.calc();
    rr.input("h", d).put(&pq.q_r, &["q1", "q2"]).lmul("h", "q1");
    r.check("qr1-q_R", "(qr1)", eq(&l.output(&["q1", "q2"]), &rr.output(&["q1", "q2"])));

    // Σ Δ(h₂) p_L [S⁻¹(h₁)⊗1] = p_L (1⊗h)
    let mut l = a.calc();
    l.input("h", d).delta("h", "h1", "h2").delta("h2", "a", "b").put(&pq.p_l, &["p1", "p2"]);
    l.mul("a", "p1").mul("b", "p2").sinv("h1").mul("a", "h1");
    let mut rr = a.calc();
    rr.input("h", d).put(&pq.p_l, &["p1", "p2"]).mul("p2", "h");
    r.check("ql1-p_L", "(ql1)", eq(&l.output(&["a", "b"]), &rr.output(&["p1", "p2"])));

    // Σ [S(h₁)⊗1] q_L Δ(h₂) = (1⊗h) q_L
    let mut l = a.calc();
    l.input("h", d).delta("h", "h1", "h2").s("h1").put(&pq.q_l, &["q1", "q2"]).lmul("h1", "q1");
    l.delta("h2", "a", "b").mul("q1", "a").mul("q2", "b");
    let mut rr = a.calc();
    rr.input("h", d).put(&pq.q_l, &["q1", "q2"]).lmul("h", "q2");
    r.check("ql1-q_L", "(ql1)", eq(&l.output(&["q1", "q2"]), &rr.output(&["q1", "q2"])));

    // (q_R⊗1)(Δ⊗id)(q_R)Φ⁻¹ = Σ [1⊗S⁻¹(X³)⊗S⁻¹(X²)][1⊗S⁻¹(f²)⊗S⁻¹(f¹)](id⊗Δ)(q_R Δ(X¹))
    let mut l = a.calc();
    l.put(&pq.q_r, &["r1", "r2"]).unit("r3");
    l.put(&pq.q_r, &["s1", "s3"]).delta("s1", "s1", "s2");
    l.mul("r1", "s1").mul("r2", "s2").mul("r3", "s3");
    l.put(a.phi_inv(), &["x1", "x2", "x3"]).mul("r1", "x1").mul("r2", "x2").mul("r3", "x3");
    let mut rr = a.calc();
    rr.unit("r1").put(a.phi(), &["X1", "X2", "X3"]).sinv("X3").sinv("X2");
    rr.rename("X3", "r2").rename("X2", "r3");
    rr.put(f, &["f1", "f2"]).sinv("f1").sinv("f2").mul("r2", "f2").mul("r3", "f1");
    rr.put(&pq.q_r, &["q1", "q2"]).delta("X1", "y1", "y2").mul("q1", "y1").mul("q2", "y2");
    rr.delta("q2", "q2a", "q2b").mul("r1", "q1").mul("r2", "q2a").mul("r3", "q2b");
    r.check("qr2", "(qr2)", eq(&l.output(&["r1", "r2", "r3"]), &rr.output(&["r1", "r2", "r3"])));
    r
}

/// Lemma 4.1 identities, (fox) and the auxiliary formula for `(Δ⊗id)(q_R)Φ⁻¹`.
pub fn check_lemma41(a: &QuasiHopf) -> VerificationReport {
    let pq = a.pq();
    let tw = a.twist();
    let mut r = VerificationReport::new();

    // Σ q¹y¹ ⊗ S(q²y²)y³ = 1⊗α
    let mut l = a.calc();
    l.put(&pq.q_r, &["q1", "q2"]).put(a.phi_inv(), &["y1", "y2", "y3"]);
    l.mul("q1", "y1").mul("q2", "y2").s("q2").mul("q2", "y3");
    let mut rr = a.calc();
    rr.unit("u").put(&a.alpha, &["a"]);
    r.check("l1", "(l1)", eq(&l.output(&["q1", "q2"]), &rr.output(&["u", "a"])));

    // Φ(Δ⊗id)(f⁻¹) = Σ g¹S(X³)f¹ ⊗ g²₁G¹S(X²)f² ⊗ g²₂G²S(X¹)
    let mut l = a.calc();
    l.put(a.phi(), &["X1", "X2", "X3"]).put(&tw.f_inv, &["g1", "g3"]).delta("g1", "g1", "g2");
    l.mul("X1", "g1").mul("X2", "g2").mul("X3", "g3");
    let mut rr = a.calc();
    rr.put(&tw.f_inv, &["g1", "g2"]).delta("g2", "g2a", "g2b").put(&tw.f_inv, &["G1", "G2"]);
    rr.put(a.phi(), &["X1", "X2", "X3"]).s("X1").s("X2").s("X3").put(&tw.f, &["f1", "f2"]);
    rr.mul("g1", "X3").mul("g1", "f1");
    rr.mul("g2a", "G1").mul("g2a", "X2").mul("g2a", "f2");
    rr.mul("g2b", "G2").mul("g2b", "X1");
    r.check("l2", "(l2)", eq(&l.output(&["X1", "X2", "X3"]), &rr.output(&["g1", "g2a", "g2b"])));

    // Σ S(g¹)αg² = S(β), Σ f¹βS(f²) = S(α)
    let mut l = a.calc();
    l.put(&tw.f_inv, &["g1", "g2"]).s("g1").put(&a.alpha, &["a"]).mul("g1", "a").mul("g1", "g2");
    let mut rr = a.calc();
    rr.put(&a.beta, &["b"]).s("b");
    r.check("l3-alpha", "(l3)", eq(&l.output(&["g1"]), &rr.output(&["b"])));
    let mut l = a.calc();
    l.put(&tw.f, &["f1", "f2"]).s("f2").put(&a.beta, &["b"]).mul("f1", "b").mul("f1", "f2");
    let mut rr = a.calc();
    rr.put(&a.alpha, &["a"]).s("a");
    r.check("l3-beta", "(l3)", eq(&l.output(&["f1"]), &rr.output(&["a"])));

    // Σ S(q²₂X³)f¹ ⊗ S(q¹X¹βS(q²₁X²)f²) = (id⊗S)(q_L)
    let mut l = a.calc();
    l.put(&pq.q_r, &["q1", "q2"]).delta("q2", "q21", "q22").put(a.phi(), &["X1", "X2", "X3"]);
    l.mul("q22", "X3").s("q22").put(&tw.f, &["f1", "f2"]).mul("q22", "f1");
    l.mul("q21", "X2").s("q21").put(&a.beta, &["b"]);
    l.mul("q1", "X1").mul("q1", "b").mul("q1", "q21").mul("q1", "f2").s("q1");
    let mut rr = a.calc();
    rr.put(&pq.q_l, &["q1", "q2"]).s("q2");
    r.check("l5", "(l5)", eq(&l.output(&["q22", "q1"]), &rr.output(&["q1", "q2"])));

    // (Δ⊗id)(q)Φ⁻¹ = Σ Y¹ ⊗ q¹Y²₁ ⊗ S⁻¹(Y³)q²Y²₂
    let mut l = a.calc();
    l.put(&pq.q_r, &["q1", "q3"]).delta("q1", "q1", "q2").put(a.phi_inv(), &["x1", "x2", "x3"]);
    l.mul("q1", "x1").mul("q2", "x2").mul("q3", "x3");
    let mut rr = a.calc();
    rr.put(a.phi(), &["Y1", "Y2", "Y3"]).delta("Y2", "Y2a", "Y2b").put(&pq.q_r, &["q1", "q2"]);
    rr.lmul("q1", "Y2a").sinv("Y3").mul("Y3", "q2").mul("Y3", "Y2b");
    r.check("bc1", "(bc1)", eq(&l.output(&["q1", "q2", "q3"]), &rr.output(&["Y1", "Y2a", "Y3"])));

    // (id⊗Δ)(q) = Σ Q¹Y¹x¹₁ ⊗ S⁻¹(x³g²)Q²q¹Y²₁x¹₍₂,₁₎ ⊗ S⁻¹(Y³x²g¹)q²Y²₂x¹₍₂,₂₎
    let mut l = a.calc();
    l.put(&pq.q_r, &["q1", "q2"]).delta("q2", "q2a", "q2b");
    let mut rr = a.calc();
    rr.put(&pq.q_r, &["Q1", "Q2"]).put(&pq.q_r, &["k1", "k2"]);
    rr.put(a.phi(), &["Y1", "Y2", "Y3"]).delta("Y2", "Y2a", "Y2b");
    rr.put(a.phi_inv(), &["x1", "x2", "x3"]).delta("x1", "xa", "xb").delta("xb", "xb", "xc");
    rr.put(&tw.f_inv, &["g1", "g2"]);
    rr.mul("Q1", "Y1").mul("Q1", "xa");
    rr.mul("x3", "g2").sinv("x3").mul("x3", "Q2").mul("x3", "k1").mul("x3", "Y2a").mul("x3", "xb");
    rr.mul("Y3", "x2").mul("Y3", "g1").sinv("Y3").mul("Y3", "k2").mul("Y3", "Y2b").mul("Y3", "xc");
    r.check("fox", "(fox)", eq(&l.output(&["q1", "q2a", "q2b"]), &rr.output(&["Q1", "x3", "Y3"])));
    r
}

/// The element U = Σ g¹S(q²) ⊗ g²S(q¹) with g = f⁻¹ and q = q_R.
pub fn element_u_big(a: &QuasiHopf) -> Tensor {
    let mut c = a.calc();
    c.put(&a.twist().f_inv, &["g1", "g2"]).put(&a.pq().q_r, &["q1", "q2"]).s("q1").s("q2");
    c.mul("g1", "q2").mul("g2", "q1");
    standard(c.element(&["g1", "g2"]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::*;

    #[test]
    fn derived_identities_hold_on_shipped_algebras() {
        for a in [trivial_field_algebra(), group_algebra_z2(), h2_quasi(), sweedler_h4()] {
            for r in [check_twist(&a), check_pq(&a), check_lemma41(&a)] {
                assert!(r.all_passed(), "{r}");
            }
        }
    }

    #[test]
    fn ordinary_hopf_elements_collapse() {
        for a in [group_algebra_z2(), sweedler_h4()] {
            let one = a.unit_power(2);
            let tw = a.twist();
            let pq = a.pq();
            for t in [&tw.f, &tw.f_inv, &tw.gamma, &tw.delta, &pq.p_r, &pq.q_r, &pq.p_l, &pq.q_l] {
                assert_eq!(t, &one);
            }
        }
    }

    #[test]
    fn h2_twist_is_nontrivial() {
        let a = h2_quasi();
        assert_ne!(a.twist().f, a.unit_power(2));
    }
}
