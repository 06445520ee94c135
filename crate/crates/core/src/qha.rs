//! Quasi-bialgebras and quasi-Hopf algebras given by structure constants.
//!
//! Conventions for the stored tensors (basis `e_0, ..., e_{d-1}`):
//! `mult[a,b,c]` is the coefficient of `e_c` in `e_a e_b`; `comult[a,b,c]` the
//! coefficient of `e_b ⊗ e_c` in `Δ(e_a)`; `antipode[a,b]` the coefficient of
//! `e_b` in `S(e_a)`; elements of `H^{⊗n}` are order-`n` tensors.

use std::sync::{Arc, OnceLock};

use crate::calc::{Bil, Calc, Lin, Split, Tables};
use crate::derived::{Pq, Twist};
use crate::error::{QhaError, Result};
use crate::linalg;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::{map_equal, Leg, LinearMap, Mismatch, Tensor};

/// Labels used for stored elements of `H^{⊗n}`.
pub(crate) const LEG_LABELS: [&str; 4] = ["1", "2", "3", "4"];

pub(crate) fn element(data_dims: &[usize], data: Vec<Scalar>) -> Tensor {
    let legs = data_dims.iter().zip(LEG_LABELS).map(|(&d, l)| Leg::new(l, d)).collect();
    Tensor::new(legs, data).expect("element shape")
}

/// Relabels a tensor's legs to the standard element labels.
pub(crate) fn standard(t: Tensor) -> Tensor {
    let n = t.order();
    t.relabel(&LEG_LABELS[..n]).expect("at most four legs")
}

fn expect_dims(t: &Tensor, dims: &[usize], field: &str) -> Result<()> {
    if t.dims() != dims {
        return Err(QhaError::field(field, format!("expected dimensions {dims:?}, found {:?}", t.dims())));
    }
    Ok(())
}

/// Exact comparison of two maps built by the same formula shape.
pub(crate) fn eq(l: &LinearMap, r: &LinearMap) -> Option<Mismatch> {
    map_equal(l, r).expect("both sides of an identity share a signature")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiBialgebra {
    pub dim: usize,
    pub mult: Tensor,
    pub unit: Tensor,
    pub comult: Tensor,
    pub counit: Tensor,
    pub phi: Tensor,
    pub phi_inv: Tensor,
}

impl QuasiBialgebra {
    pub fn new(
        mult: Tensor,
        unit: Tensor,
        comult: Tensor,
        counit: Tensor,
        phi: Tensor,
        phi_inv: Tensor,
    ) -> Result<Self> {
        let d = unit.len();
        if unit.order() != 1 || d == 0 {
            return Err(QhaError::field("unit", "must be a nonempty vector"));
        }
        expect_dims(&mult, &[d, d, d], "mult")?;
        expect_dims(&comult, &[d, d, d], "comult")?;
        expect_dims(&counit, &[d], "counit")?;
        expect_dims(&phi, &[d, d, d], "phi")?;
        expect_dims(&phi_inv, &[d, d, d], "phi_inv")?;
        Ok(QuasiBialgebra {
            dim: d,
            mult: standard(mult),
            unit: standard(unit),
            comult: standard(comult),
            counit: standard(counit),
            phi: standard(phi),
            phi_inv: standard(phi_inv),
        })
    }

    pub(crate) fn tables(&self, s: Option<Lin>, sinv: Option<Lin>) -> Tables {
        Tables {
            dim: self.dim,
            mult: Bil::from_tensor(&self.mult),
            unit: self.unit.data().to_vec(),
            delta: Split::from_tensor(&self.comult),
            eps: self.counit.data().to_vec(),
            s,
            sinv,
        }
    }
}

/// A quasi-Hopf algebra with lazily derived canonical elements.
#[derive(Debug)]
pub struct QuasiHopf {
    pub base: QuasiBialgebra,
    pub antipode: Tensor,
    pub antipode_inv: Tensor,
    pub alpha: Tensor,
    pub beta: Tensor,
    tables: Tables,
    twist: OnceLock<Twist>,
    pq: OnceLock<Pq>,
    op: OnceLock<Arc<QuasiHopf>>,
    cop: OnceLock<Arc<QuasiHopf>>,
    opcop: OnceLock<Arc<QuasiHopf>>,
}

impl Clone for QuasiHopf {
    fn clone(&self) -> Self {
        QuasiHopf::assemble(
            self.base.clone(),
            self.antipode.clone(),
            self.antipode_inv.clone(),
            self.alpha.clone(),
            self.beta.clone(),
        )
    }
}

impl PartialEq for QuasiHopf {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
            && self.antipode == other.antipode
            && self.antipode_inv == other.antipode_inv
            && self.alpha == other.alpha
            && self.beta == other.beta
    }
}

impl QuasiHopf {
    /// Validates shapes and computes `S⁻¹` by matrix inversion when it is not supplied.
    pub fn new(
        base: QuasiBialgebra,
        antipode: Tensor,
        antipode_inv: Option<Tensor>,
        alpha: Tensor,
        beta: Tensor,
    ) -> Result<Self> {
        let d = base.dim;
        expect_dims(&antipode, &[d, d], "antipode")?;
        expect_dims(&alpha, &[d], "alpha")?;
        expect_dims(&beta, &[d], "beta")?;
        let antipode_inv = match antipode_inv {
            Some(t) => {
                expect_dims(&t, &[d, d], "antipode_inv")?;
                t
            }
            None => {
                let m: linalg::Matrix = antipode.data().chunks(d).map(|r| r.to_vec()).collect();
                let inv = linalg::inverse(&m).ok_or_else(|| QhaError::NotInvertible("antipode".into()))?;
                element(&[d, d], inv.into_iter().flatten().collect())
            }
        };
        Ok(Self::assemble(base, standard(antipode), standard(antipode_inv), standard(alpha), standard(beta)))
    }

    fn assemble(base: QuasiBialgebra, antipode: Tensor, antipode_inv: Tensor, alpha: Tensor, beta: Tensor) -> Self {
        let tables = base.tables(Some(Lin::from_tensor(&antipode)), Some(Lin::from_tensor(&antipode_inv)));
        QuasiHopf {
            base,
            antipode,
            antipode_inv,
            alpha,
            beta,
            tables,
            twist: OnceLock::new(),
            pq: OnceLock::new(),
            op: OnceLock::new(),
            cop: OnceLock::new(),
            opcop: OnceLock::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.base.dim
    }

    pub fn phi(&self) -> &Tensor {
        &self.base.phi
    }

    pub fn phi_inv(&self) -> &Tensor {
        &self.base.phi_inv
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    pub fn calc(&self) -> Calc<'_> {
        Calc::new(&self.tables)
    }

    pub fn one(&self) -> &Tensor {
        &self.base.unit
    }

    pub fn twist(&self) -> &Twist {
        self.twist.get_or_init(|| crate::derived::compute_twist(self))
    }

    pub fn pq(&self) -> &Pq {
        self.pq.get_or_init(|| crate::derived::compute_pq(self))
    }

    /// Whether Φ is `1⊗1⊗1`, α = β = 1: an ordinary Hopf algebra.
    pub fn is_ordinary_hopf(&self) -> bool {
        let one = self.one();
        self.phi() == &self.unit_power(3) && &self.alpha == one && &self.beta == one
    }

    /// `1⊗...⊗1` with `n` factors.
    pub fn unit_power(&self, n: usize) -> Tensor {
        let mut c = self.calc();
        let names: Vec<String> = (0..n).map(|i| format!("u{i}")).collect();
        for nm in &names {
            c.unit(nm);
        }
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        standard(c.element(&refs))
    }

    /// Counit of an element of H.
    pub fn counit_of(&self, h: &Tensor) -> Scalar {
        h.data().iter().zip(self.base.counit.data()).map(|(a, b)| a * b).sum()
    }

    /// Inverse of an element of `H^{⊗n}` under the componentwise product.
    pub fn element_inverse(&self, t: &Tensor) -> Option<Tensor> {
        let n = t.order();
        let d = self.dim();
        let ins: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let ts: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
        let mut c = self.calc();
        for nm in &ins {
            c.input(nm, d);
        }
        let tr: Vec<&str> = ts.iter().map(String::as_str).collect();
        c.put(t, &tr);
        for (a, x) in ts.iter().zip(&ins) {
            c.mul(a, x);
        }
        let m = c.output(&tr).to_matrix();
        let target = self.unit_power(n);
        // Solve Σ_i x_i M[i][j] = 1_j.
        let inv = linalg::inverse(&linalg::transpose(&m))?;
        let x: Vec<Scalar> = inv
            .iter()
            .map(|row| row.iter().zip(target.data()).map(|(a, b)| a * b).sum())
            .collect();
        let dims = vec![d; n];
        Some(element(&dims, x))
    }

    /// Componentwise product of two elements of `H^{⊗n}`.
    pub fn element_product(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let n = a.order();
        assert_eq!(n, b.order(), "orders differ");
        let an: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
        let bn: Vec<String> = (0..n).map(|i| format!("b{i}")).collect();
        let ar: Vec<&str> = an.iter().map(String::as_str).collect();
        let br: Vec<&str> = bn.iter().map(String::as_str).collect();
        let mut c = self.calc();
        c.put(a, &ar).put(b, &br);
        for (x, y) in ar.iter().zip(&br) {
            c.mul(x, y);
        }
        standard(c.element(&ar))
    }

    /// Applies `S` to an element of H.
    pub fn apply_s(&self, h: &Tensor) -> Tensor {
        let mut c = self.calc();
        c.put(h, &["h"]).s("h");
        standard(c.element(&["h"]))
    }

    pub fn apply_sinv(&self, h: &Tensor) -> Tensor {
        let mut c = self.calc();
        c.put(h, &["h"]).sinv("h");
        standard(c.element(&["h"]))
    }

    /// Rescales α and β to have counit 1 when `ε(α)ε(β) = 1`.
    pub fn normalized_alpha_beta(&self) -> Result<QuasiHopf> {
        let ea = self.counit_of(&self.alpha);
        let eb = self.counit_of(&self.beta);
        if !(&ea * &eb).is_one() {
            return Err(QhaError::Structure(format!("ε(α)ε(β) = {} ≠ 1, cannot normalize", &ea * &eb)));
        }
        let alpha = self.alpha.scale(&ea.inv().expect("nonzero"));
        let beta = self.beta.scale(&eb.inv().expect("nonzero"));
        Ok(Self::assemble(self.base.clone(), self.antipode.clone(), self.antipode_inv.clone(), alpha, beta))
    }

    /// `H^op`: opposite multiplication.
    pub fn op(&self) -> Arc<QuasiHopf> {
        self.op
            .get_or_init(|| {
                let base = QuasiBialgebra {
                    mult: standard(self.base.mult.permute(&[1, 0, 2]).expect("order 3")),
                    phi: self.base.phi_inv.clone(),
                    phi_inv: self.base.phi.clone(),
                    ..self.base.clone()
                };
                let alpha = self.apply_sinv(&self.beta);
                let beta = self.apply_sinv(&self.alpha);
                Arc::new(Self::assemble(base, self.antipode_inv.clone(), self.antipode.clone(), alpha, beta))
            })
            .clone()
    }

    /// `H^cop`: opposite comultiplication.
    pub fn cop(&self) -> Arc<QuasiHopf> {
        self.cop
            .get_or_init(|| {
                let base = QuasiBialgebra {
                    comult: standard(self.base.comult.permute(&[0, 2, 1]).expect("order 3")),
                    phi: standard(self.base.phi_inv.permute(&[2, 1, 0]).expect("order 3")),
                    phi_inv: standard(self.base.phi.permute(&[2, 1, 0]).expect("order 3")),
                    ..self.base.clone()
                };
                let alpha = self.apply_sinv(&self.alpha);
                let beta = self.apply_sinv(&self.beta);
                Arc::new(Self::assemble(base, self.antipode_inv.clone(), self.antipode.clone(), alpha, beta))
            })
            .clone()
    }

    /// `H^{op,cop}`.
    pub fn opcop(&self) -> Arc<QuasiHopf> {
        self.opcop
            .get_or_init(|| {
                let base = QuasiBialgebra {
                    mult: standard(self.base.mult.permute(&[1, 0, 2]).expect("order 3")),
                    comult: standard(self.base.comult.permute(&[0, 2, 1]).expect("order 3")),
                    phi: standard(self.base.phi.permute(&[2, 1, 0]).expect("order 3")),
                    phi_inv: standard(self.base.phi_inv.permute(&[2, 1, 0]).expect("order 3")),
                    ..self.base.clone()
                };
                Arc::new(Self::assemble(
                    base,
                    self.antipode.clone(),
                    self.antipode_inv.clone(),
                    self.beta.clone(),
                    self.alpha.clone(),
                ))
            })
            .clone()
    }

    /// All three variants `(op, cop, opcop)`.
    pub fn variants(&self) -> (Arc<QuasiHopf>, Arc<QuasiHopf>, Arc<QuasiHopf>) {
        (self.op(), self.cop(), self.opcop())
    }

    /// The twisted algebra `H_F` for a gauge transformation `F`.
    pub fn twisted(&self, f: &Tensor) -> Result<QuasiHopf> {
        let d = self.dim();
        expect_dims(f, &[d, d], "twist")?;
        let mut c = self.calc();
        c.put(f, &["a", "b"]).eps("a");
        let left = standard(c.element(&["b"]));
        let mut c = self.calc();
        c.put(f, &["a", "b"]).eps("b");
        let right = standard(c.element(&["a"]));
        if &left != self.one() || &right != self.one() {
            return Err(QhaError::Structure("twist violates the counit condition".into()));
        }
        let g = self.element_inverse(f).ok_or_else(|| QhaError::NotInvertible("twist".into()))?;

        let mut c = self.calc();
        c.input("h", d).put(f, &["F1", "F2"]).put(&g, &["G1", "G2"]).delta("h", "h1", "h2");
        c.lmul("F1", "h1").lmul("F2", "h2").mul("h1", "G1").mul("h2", "G2");
        let comult = c.output(&["h1", "h2"]).into_tensor();

        let phi = twisted_phi(self, f, &g);
        let phi_inv = twisted_phi_inverse(self, f, &g);

        let mut c = self.calc();
        c.put(&g, &["G1", "G2"]).s("G1").put(&self.alpha, &["a"]).mul("G1", "a").mul("G1", "G2");
        let alpha = c.element(&["G1"]);
        let mut c = self.calc();
        c.put(f, &["F1", "F2"]).put(&self.beta, &["b"]).s("F2").mul("F1", "b").mul("F1", "F2");
        let beta = c.element(&["F1"]);

        let base = QuasiBialgebra { comult: standard(comult), phi, phi_inv, ..self.base.clone() };
        Ok(Self::assemble(base, self.antipode.clone(), self.antipode_inv.clone(), standard(alpha), standard(beta)))
    }
}

/// `(1⊗F)(id⊗Δ)(F) Φ (Δ⊗id)(F⁻¹)(F⁻¹⊗1)`.
pub(crate) fn twisted_phi(a: &QuasiHopf, f: &Tensor, g: &Tensor) -> Tensor {
    let mut c = a.calc();
    c.unit("r1").put(f, &["r2", "r3"]);
    c.put(f, &["a1", "a2"]).delta("a2", "a2", "a3");
    c.mul("r1", "a1").mul("r2", "a2").mul("r3", "a3");
    c.put(a.phi(), &["X1", "X2", "X3"]).mul("r1", "X1").mul("r2", "X2").mul("r3", "X3");
    c.put(g, &["b1", "b3"]).delta("b1", "b1", "b2");
    c.mul("r1", "b1").mul("r2", "b2").mul("r3", "b3");
    c.put(g, &["c1", "c2"]).unit("c3");
    c.mul("r1", "c1").mul("r2", "c2").mul("r3", "c3");
    standard(c.element(&["r1", "r2", "r3"]))
}

/// Inverse of [`twisted_phi`]: `(F⊗1)(Δ⊗id)(F) Φ⁻¹ (id⊗Δ)(F⁻¹)(1⊗F⁻¹)`.
pub(crate) fn twisted_phi_inverse(a: &QuasiHopf, f: &Tensor, g: &Tensor) -> Tensor {
    let mut c = a.calc();
    c.put(f, &["r1", "r2"]).unit("r3");
    c.put(f, &["a1", "a3"]).delta("a1", "a1", "a2");
    c.mul("r1", "a1").mul("r2", "a2").mul("r3", "a3");
    c.put(a.phi_inv(), &["x1", "x2", "x3"]).mul("r1", "x1").mul("r2", "x2").mul("r3", "x3");
    c.put(g, &["b1", "b2"]).delta("b2", "b2", "b3");
    c.mul("r1", "b1").mul("r2", "b2").mul("r3", "b3");
    c.unit("c1").put(g, &["c2", "c3"]);
    c.mul("r1", "c1").mul("r2", "c2").mul("r3", "c3");
    standard(c.element(&["r1", "r2", "r3"]))
}

/// Algebra, coalgebra-morphism and 3-cocycle axioms of a quasi-bialgebra.
pub fn check_quasi_bialgebra(a: &QuasiBialgebra) -> VerificationReport {
    let t = a.tables(None, None);
    let d = a.dim;
    let mut r = VerificationReport::new();
    let calc = || Calc::new(&t);
    let id1 = {
        let mut c = calc();
        c.input("h", d);
        c.output(&["h"])
    };

    let mut l = calc();
    l.input("a", d).input("b", d).input("c", d).mul("a", "b").mul("a", "c");
    let mut rr = calc();
    rr.input("a", d).input("b", d).input("c", d).mul("b", "c").mul("a", "b");
    r.check("associativity", "(alg)", eq(&l.output(&["a"]), &rr.output(&["a"])));

    let mut l = calc();
    l.input("h", d).unit("u").lmul("u", "h");
    r.check("left-unit", "(alg)", eq(&l.output(&["h"]), &id1));
    let mut l = calc();
    l.input("h", d).unit("u").mul("h", "u");
    r.check("right-unit", "(alg)", eq(&l.output(&["h"]), &id1));

    let mut l = calc();
    l.input("a", d).input("b", d).mul("a", "b").delta("a", "a1", "a2");
    let mut rr = calc();
    rr.input("a", d).input("b", d).delta("a", "a1", "a2").delta("b", "b1", "b2").mul("a1", "b1").mul("a2", "b2");
    r.check("comult-multiplicative", "(alg)", eq(&l.output(&["a1", "a2"]), &rr.output(&["a1", "a2"])));

    let mut l = calc();
    l.unit("u").delta("u", "u1", "u2");
    let mut rr = calc();
    rr.unit("u1").unit("u2");
    r.check("comult-unital", "(alg)", eq(&l.output(&["u1", "u2"]), &rr.output(&["u1", "u2"])));

    let mut l = calc();
    l.input("a", d).input("b", d).mul("a", "b").eps("a");
    let mut rr = calc();
    rr.input("a", d).input("b", d).eps("a").eps("b");
    r.check("counit-multiplicative", "(alg)", eq(&l.output(&[]), &rr.output(&[])));

    let mut l = calc();
    l.unit("u").eps("u");
    r.check("counit-unital", "(alg)", eq(&l.output(&[]), &calc().output(&[])));

    // (q1)
    let mut l = calc();
    l.input("h", d).delta("h", "a", "b").delta("b", "b1", "b2");
    let mut rr = calc();
    rr.input("h", d).delta("h", "a", "b").delta("a", "a1", "a2");
    rr.put(&a.phi, &["X1", "X2", "X3"]).put(&a.phi_inv, &["x1", "x2", "x3"]);
    rr.lmul("X1", "a1").lmul("X2", "a2").lmul("X3", "b");
    rr.mul("a1", "x1").mul("a2", "x2").mul("b", "x3");
    r.check("q1", "(q1)", eq(&l.output(&["a", "b1", "b2"]), &rr.output(&["a1", "a2", "b"])));

    // (q2)
    let mut l = calc();
    l.input("h", d).delta("h", "h1", "h2").eps("h2");
    r.check("q2-right-counit", "(q2)", eq(&l.output(&["h1"]), &id1));
    let mut l = calc();
    l.input("h", d).delta("h", "h1", "h2").eps("h1");
    r.check("q2-left-counit", "(q2)", eq(&l.output(&["h2"]), &id1));

    // (q3)
    let mut l = calc();
    l.unit("p").put(&a.phi, &["X1", "X2", "X3"]);
    l.put(&a.phi, &["Y1", "Y2", "Y3"]).delta("Y2", "Y2a", "Y2b");
    l.mul("p", "Y1").mul("X1", "Y2a").mul("X2", "Y2b").mul("X3", "Y3");
    l.put(&a.phi, &["Z1", "Z2", "Z3"]).mul("p", "Z1").mul("X1", "Z2").mul("X2", "Z3");
    let mut rr = calc();
    rr.put(&a.phi, &["X1", "X2", "X3"]).delta("X3", "X3a", "X3b");
    rr.put(&a.phi, &["Y1", "Y2", "Y3"]).delta("Y1", "Y1a", "Y1b");
    rr.mul("X1", "Y1a").mul("X2", "Y1b").mul("X3a", "Y2").mul("X3b", "Y3");
    r.check("q3", "(q3)", eq(&l.output(&["p", "X1", "X2", "X3"]), &rr.output(&["X1", "X2", "X3a", "X3b"])));

    let ones = {
        let mut c = calc();
        c.unit("u1").unit("u2");
        c.output(&["u1", "u2"])
    };
    // (q4), (q7)
    for (id, anchor, leg) in [("q4", "(q4)", 1usize), ("q7-left", "(q7)", 0), ("q7-right", "(q7)", 2)] {
        let names = ["X1", "X2", "X3"];
        let mut l = calc();
        l.put(&a.phi, &names).eps(names[leg]);
        let rest: Vec<&str> = names.iter().enumerate().filter(|(i, _)| *i != leg).map(|(_, n)| *n).collect();
        r.check(id, anchor, eq(&l.output(&rest), &ones));
    }

    let ones3 = {
        let mut c = calc();
        c.unit("u1").unit("u2").unit("u3");
        c.output(&["u1", "u2", "u3"])
    };
    for (id, first, second) in [("phi-right-inverse", &a.phi, &a.phi_inv), ("phi-left-inverse", &a.phi_inv, &a.phi)] {
        let mut l = calc();
        l.put(first, &["a1", "a2", "a3"]).put(second, &["b1", "b2", "b3"]);
        l.mul("a1", "b1").mul("a2", "b2").mul("a3", "b3");
        r.check(id, "(phi)", eq(&l.output(&["a1", "a2", "a3"]), &ones3));
    }
    r
}

/// Antipode axioms on top of [`check_quasi_bialgebra`].
pub fn check_quasi_hopf(a: &QuasiHopf) -> VerificationReport {
    let mut r = check_quasi_bialgebra(&a.base);
    let d = a.dim();
    let id1 = {
        let mut c = a.calc();
        c.input("h", d);
        c.output(&["h"])
    };

    let mut l = a.calc();
    l.input("a", d).input("b", d).mul("a", "b").s("a");
    let mut rr = a.calc();
    rr.input("a", d).input("b", d).s("a").s("b").mul("b", "a");
    r.check("antipode-antimultiplicative", "(S)", eq(&l.output(&["a"]), &rr.output(&["b"])));

    let mut l = a.calc();
    l.unit("u").s("u");
    let mut rr = a.calc();
    rr.unit("u");
    r.check("antipode-unital", "(S)", eq(&l.output(&["u"]), &rr.output(&["u"])));

    let mut l = a.calc();
    l.input("h", d).sinv("h").s("h");
    r.check("antipode-inverse-right", "(S)", eq(&l.output(&["h"]), &id1));
    let mut l = a.calc();
    l.input("h", d).s("h").sinv("h");
    r.check("antipode-inverse-left", "(S)", eq(&l.output(&["h"]), &id1));

    let mut l = a.calc();
    l.input("h", d).delta("h", "h1", "h2").s("h1").put(&a.alpha, &["a"]).mul("h1", "a").mul("h1", "h2");
    let mut rr = a.calc();
    rr.input("h", d).eps("h").put(&a.alpha, &["a"]);
    r.check("q5-alpha", "(q5)", eq(&l.output(&["h1"]), &rr.output(&["a"])));

    let mut l = a.calc();
    l.input("h", d).delta("h", "h1", "h2").s("h2").put(&a.beta, &["b"]).mul("h1", "b").mul("h1", "h2");
    let mut rr = a.calc();
    rr.input("h", d).eps("h").put(&a.beta, &["b"]);
    r.check("q5-beta", "(q5)", eq(&l.output(&["h1"]), &rr.output(&["b"])));

    let one = {
        let mut c = a.calc();
        c.unit("u");
        c.output(&["u"])
    };
    let mut l = a.calc();
    l.put(a.phi(), &["X1", "X2", "X3"]).put(&a.beta, &["b"]).put(&a.alpha, &["a"]);
    l.s("X2").mul("X1", "b").mul("X1", "X2").mul("X1", "a").mul("X1", "X3");
    r.check("q6-normalization-phi", "(q6)", eq(&l.output(&["X1"]), &one));

    let mut l = a.calc();
    l.put(a.phi_inv(), &["x1", "x2", "x3"]).put(&a.alpha, &["a"]).put(&a.beta, &["b"]);
    l.s("x1").s("x3").mul("x1", "a").mul("x1", "x2").mul("x1", "b").mul("x1", "x3");
    r.check("q6-normalization-phi-inverse", "(q6)", eq(&l.output(&["x1"]), &one));

    let ea = a.counit_of(&a.alpha);
    let eb = a.counit_of(&a.beta);
    let prod = &ea * &eb;
    if prod.is_one() {
        r.push(crate::report::Entry::passed("counit-alpha-beta", "(norm)"));
    } else {
        r.push(crate::report::Entry::failed("counit-alpha-beta", "(norm)", format!("ε(α)ε(β) = {prod}")));
    }

    let mut l = a.calc();
    l.input("h", d).s("h").eps("h");
    let mut rr = a.calc();
    rr.input("h", d).eps("h");
    r.check("counit-antipode", "(norm)", eq(&l.output(&[]), &rr.output(&[])));
    r
}
