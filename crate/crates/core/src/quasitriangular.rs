//! R-matrices: the quasitriangularity axioms, the element `u`, and the
//! quasi-Yang-Baxter equation.

use std::sync::{Arc, OnceLock};

use crate::category::{check_module, Carrier};
use crate::error::{QhaError, Result};
use crate::qha::{eq, standard, QuasiHopf};
use crate::report::{Entry, VerificationReport};
use crate::tensor::{LinearMap, Tensor};
use crate::yd::{check_yd, Flavor, YdModule};

/// One factor of a product in `H⊗H⊗H`.
#[derive(Clone, Copy, Debug)]
pub enum Factor {
    /// `Φ_{σ(1)σ(2)σ(3)}`, given as `[σ(1), σ(2), σ(3)]` (1-based).
    Phi([usize; 3]),
    PhiInv([usize; 3]),
    /// `R_{ij}` (1-based positions).
    R(usize, usize),
}

#[derive(Debug)]
pub struct QtStructure {
    pub algebra: Arc<QuasiHopf>,
    pub r: Tensor,
    pub r_inv: Tensor,
    u: OnceLock<(Tensor, Tensor)>,
}

impl Clone for QtStructure {
    fn clone(&self) -> Self {
        QtStructure { algebra: self.algebra.clone(), r: self.r.clone(), r_inv: self.r_inv.clone(), u: OnceLock::new() }
    }
}

impl QtStructure {
    pub fn new(algebra: Arc<QuasiHopf>, r: Tensor, r_inv: Option<Tensor>) -> Result<Self> {
        let d = algebra.dim();
        if r.dims() != [d, d] {
            return Err(QhaError::field("r", format!("expected dimensions [{d}, {d}], found {:?}", r.dims())));
        }
        let r_inv = match r_inv {
            Some(t) => {
                if t.dims() != [d, d] {
                    return Err(QhaError::field("r_inv", format!("expected dimensions [{d}, {d}]")));
                }
                t
            }
            None => algebra.element_inverse(&r).ok_or_else(|| QhaError::NotInvertible("R".into()))?,
        };
        Ok(QtStructure { algebra, r: standard(r), r_inv: standard(r_inv), u: OnceLock::new() })
    }

    /// `(u, u⁻¹)` computed from their closed formulas.
    pub fn u(&self) -> &(Tensor, Tensor) {
        self.u.get_or_init(|| {
            let a = &*self.algebra;
            let p = &a.pq().p_r;
            // u = Σ S(R²p²) α R¹p¹
            let mut c = a.calc();
            c.put(&self.r, &["R1", "R2"]).put(p, &["p1", "p2"]).put(&a.alpha, &["a"]);
            c.mul("R2", "p2").s("R2").mul("R2", "a").mul("R2", "R1").mul("R2", "p1");
            let u = standard(c.element(&["R2"]));
            // u⁻¹ = Σ X¹R²p² S(S(X²R¹p¹)αX³)
            let mut c = a.calc();
            c.put(&self.r, &["R1", "R2"]).put(p, &["p1", "p2"]).put(a.phi(), &["X1", "X2", "X3"]);
            c.put(&a.alpha, &["a"]);
            c.mul("X2", "R1").mul("X2", "p1").s("X2").mul("X2", "a").mul("X2", "X3").s("X2");
            c.mul("X1", "R2").mul("X1", "p2").mul("X1", "X2");
            let u_inv = standard(c.element(&["X1"]));
            (u, u_inv)
        })
    }

    /// Product of factors in `H⊗H⊗H`, left to right.
    pub fn word(&self, factors: &[Factor]) -> LinearMap {
        word(&self.algebra, &self.r, factors)
    }
}

pub(crate) fn word(a: &QuasiHopf, r: &Tensor, factors: &[Factor]) -> LinearMap {
    let mut c = a.calc();
    let acc = ["w1", "w2", "w3"];
    for n in acc {
        c.unit(n);
    }
    for f in factors {
        match *f {
            Factor::Phi(s) | Factor::PhiInv(s) => {
                let t = if matches!(f, Factor::Phi(_)) { a.phi() } else { a.phi_inv() };
                let names: Vec<String> = (0..3).map(|_| c.fresh("X")).collect();
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                c.put(t, &refs);
                for (i, nm) in refs.iter().enumerate() {
                    c.mul(acc[s[i] - 1], nm);
                }
            }
            Factor::R(i, j) => {
                let (p, q) = (c.fresh("R"), c.fresh("R"));
                c.put(r, &[&p, &q]).mul(acc[i - 1], &p).mul(acc[j - 1], &q);
            }
        }
    }
    c.output(&acc)
}

/// The left Yetter-Drinfeld structure `λ(m) = Σ R² ⊗ R¹·m` on a left module
/// with action tensor `[h, in, out]`.
pub fn induced_yd(qt: &QtStructure, action: &Tensor) -> Result<YdModule> {
    let a = &*qt.algebra;
    let d = a.dim();
    let dims = action.dims();
    if dims.len() != 3 || dims[0] != d || dims[1] != dims[2] {
        return Err(QhaError::field("action", format!("expected dimensions [{d}, n, n], found {dims:?}")));
    }
    let n = dims[1];
    let carrier = Carrier::new(action, None);
    let module = check_module(a, &carrier, "(module)");
    if !module.all_passed() {
        return Err(QhaError::Structure(format!("not a module:\n{module}")));
    }
    let mut c = a.calc();
    c.input("m", n).put(&qt.r, &["R1", "R2"]).act("R1", "m", &carrier.act);
    let coaction = c.output(&["R2", "m"]).into_tensor();
    let m = YdModule::new(qt.algebra.clone(), Flavor::Left, action.clone(), coaction)?;
    let rep = check_yd(&m);
    if !rep.all_passed() {
        return Err(QhaError::Structure(format!("induced coaction fails the axioms:\n{rep}")));
    }
    Ok(m)
}

/// The quasitriangularity axioms and invertibility of R.
pub fn check_qt(qt: &QtStructure) -> VerificationReport {
    use Factor::*;
    let a = &*qt.algebra;
    let d = a.dim();
    let mut rep = VerificationReport::new();

    let one2 = a.unit_power(2);
    let prod = a.element_product(&qt.r, &qt.r_inv);
    let prod2 = a.element_product(&qt.r_inv, &qt.r);
    if prod == one2 && prod2 == one2 {
        rep.push(Entry::passed("r-invertible", "(qt)"));
    } else {
        rep.push(Entry::failed("r-invertible", "(qt)", "R·R⁻¹ ≠ 1⊗1"));
    }

    let mut l = a.calc();
    l.put(&qt.r, &["R1", "R2"]).delta("R1", "a", "b");
    let rhs = qt.word(&[Phi([3, 1, 2]), R(1, 3), PhiInv([1, 3, 2]), R(2, 3), Phi([1, 2, 3])]);
    rep.check("qt1", "(qt1)", eq(&l.output(&["a", "b", "R2"]), &rhs));

    let mut l = a.calc();
    l.put(&qt.r, &["R1", "R2"]).delta("R2", "a", "b");
    let rhs = qt.word(&[PhiInv([2, 3, 1]), R(1, 3), Phi([2, 1, 3]), R(1, 2), PhiInv([1, 2, 3])]);
    rep.check("qt2", "(qt2)", eq(&l.output(&["R1", "a", "b"]), &rhs));

    let mut l = a.calc();
    l.input("h", d).delta("h", "h1", "h2").put(&qt.r, &["R1", "R2"]).mul("h2", "R1").mul("h1", "R2");
    let mut rr = a.calc();
    rr.input("h", d).delta("h", "h1", "h2").put(&qt.r, &["R1", "R2"]).mul("R1", "h1").mul("R2", "h2");
    rep.check("qt3", "(qt3)", eq(&l.output(&["h2", "h1"]), &rr.output(&["R1", "R2"])));

    let one = LinearMap::new(a.one().clone(), 0).expect("element");
    let mut l = a.calc();
    l.put(&qt.r, &["R1", "R2"]).eps("R1");
    rep.check("qt4-left", "(qt4)", eq(&l.output(&["R2"]), &one));
    let mut l = a.calc();
    l.put(&qt.r, &["R1", "R2"]).eps("R2");
    rep.check("qt4-right", "(qt4)", eq(&l.output(&["R1"]), &one));
    rep
}

/// `u·u⁻¹ = u⁻¹·u = 1`, `ε(u) = 1` and `S²(h) = u h u⁻¹`.
pub fn check_u(qt: &QtStructure) -> VerificationReport {
    let a = &*qt.algebra;
    let d = a.dim();
    let (u, u_inv) = qt.u();
    let mut rep = VerificationReport::new();
    let one = LinearMap::new(a.one().clone(), 0).expect("element");
    let elem = |t: Tensor| LinearMap::new(t, 0).expect("element");
    rep.check("u-right-inverse", "(inelmu)", eq(&elem(a.element_product(u, u_inv)), &one));
    rep.check("u-left-inverse", "(inelmu)", eq(&elem(a.element_product(u_inv, u)), &one));
    let eu = a.counit_of(u);
    if eu.is_one() {
        rep.push(Entry::passed("counit-u", "(sqina)"));
    } else {
        rep.push(Entry::failed("counit-u", "(sqina)", format!("ε(u) = {eu}")));
    }
    let mut l = a.calc();
    l.input("h", d).s("h").s("h");
    let mut rr = a.calc();
    rr.input("h", d).put(u, &["u"]).put(u_inv, &["v"]).lmul("u", "h").mul("h", "v");
    rep.check("antipode-square-inner", "(sqina)", eq(&l.output(&["h"]), &rr.output(&["h"])));
    rep
}

/// `f₂₁ R f⁻¹ = (S⊗S)(R)`.
pub fn check_ext(qt: &QtStructure) -> VerificationReport {
    let a = &*qt.algebra;
    let tw = a.twist();
    let mut l = a.calc();
    l.put(&tw.f, &["f2", "f1"]).put(&qt.r, &["R1", "R2"]).put(&tw.f_inv, &["g1", "g2"]);
    l.mul("f2", "R1").mul("f2", "g1").mul("f1", "R2").mul("f1", "g2");
    let mut rr = a.calc();
    rr.put(&qt.r, &["R1", "R2"]).s("R1").s("R2");
    let mut rep = VerificationReport::new();
    rep.check("ext", "(ext)", eq(&l.output(&["f2", "f1"]), &rr.output(&["R1", "R2"])));
    rep
}

/// `R₁₂Φ₃₁₂R₁₃Φ⁻¹₁₃₂R₂₃Φ = Φ₃₂₁R₂₃Φ⁻¹₂₃₁R₁₃Φ₂₁₃R₁₂`.
pub fn check_qybe(qt: &QtStructure) -> VerificationReport {
    use Factor::*;
    let lhs = qt.word(&[R(1, 2), Phi([3, 1, 2]), R(1, 3), PhiInv([1, 3, 2]), R(2, 3), Phi([1, 2, 3])]);
    let rhs = qt.word(&[Phi([3, 2, 1]), R(2, 3), PhiInv([2, 3, 1]), R(1, 3), Phi([2, 1, 3]), R(1, 2)]);
    let mut rep = VerificationReport::new();
    rep.check("quasi-yang-baxter", "(qybe)", eq(&lhs, &rhs));
    rep
}

/// Every quasitriangular check in one report.
pub fn check_all(qt: &QtStructure) -> VerificationReport {
    let mut rep = check_qt(qt);
    if rep.all_passed() {
        rep.extend(check_u(qt));
        rep.extend(check_ext(qt));
        rep.extend(check_qybe(qt));
    } else {
        rep.finding("R fails the quasitriangularity axioms; u, (ext) and the quasi-Yang-Baxter equation were not evaluated");
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::*;
    use crate::scalar::Scalar;

    #[test]
    fn shipped_r_matrices_pass() {
        let kz2 = Arc::new(group_algebra_z2());
        let h4 = Arc::new(sweedler_h4());
        let cases = vec![
            QtStructure::new(kz2.clone(), kz2_r_trivial(), None).unwrap(),
            QtStructure::new(kz2, kz2_r_g(), None).unwrap(),
            QtStructure::new(h4.clone(), h4_r(&Scalar::ZERO), None).unwrap(),
            QtStructure::new(h4, h4_r(&Scalar::ONE), None).unwrap(),
        ];
        for qt in &cases {
            let r = check_all(qt);
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn r_equal_to_one_tensor_g_violates_counit_axiom() {
        let kz2 = Arc::new(group_algebra_z2());
        let r = crate::instances::tabulate(&[2, 2], |i| if i == [0, 1] { Scalar::ONE } else { Scalar::ZERO });
        let qt = QtStructure::new(kz2, r, None).unwrap();
        let rep = check_qt(&qt);
        assert!(!rep.get("qt4-left").unwrap().passed);
    }

    #[test]
    fn regular_modules_with_induced_coaction_are_yd() {
        let kz2 = Arc::new(group_algebra_z2());
        let h4 = Arc::new(sweedler_h4());
        for (alg, r) in [(kz2, kz2_r_g()), (h4.clone(), h4_r(&Scalar::ONE)), (h4, h4_r(&Scalar::ZERO))] {
            let qt = QtStructure::new(alg.clone(), r, None).unwrap();
            let reg = crate::category::Carrier::regular(&alg).action_tensor();
            induced_yd(&qt, &reg).unwrap();
        }
    }

    #[test]
    fn trivial_r_gives_unit_u() {
        let kz2 = Arc::new(group_algebra_z2());
        let qt = QtStructure::new(kz2.clone(), kz2_r_trivial(), None).unwrap();
        assert_eq!(&qt.u().0, kz2.one());
    }
}
