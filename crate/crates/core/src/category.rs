//! The monoidal category of finite-dimensional left modules, evaluated on
//! concrete vectors.
//!
//! Objects built from tensor products are trees ([`Obj`]) whose leaves are
//! named legs of a [`Calc`]. Every structure map (associator, braiding,
//! evaluation, coevaluation) acts on those legs in place, so composites such
//! as `(id ⊗ a⁻¹) ∘ a` are evaluated by running the steps in order and
//! reading off the remaining legs. The unit object has no leg, which makes
//! the unit constraints identities on flattened vectors.

use crate::calc::{Bil, Calc, Split};
use crate::qha::{eq, QuasiHopf};
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::{Leg, LinearMap, Tensor};

/// A finite-dimensional left module, optionally with a left coaction `m ↦ m₍₋₁₎ ⊗ m₍₀₎`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    pub dim: usize,
    /// `[h, m] -> m`.
    pub act: Bil,
    /// `m -> [h, m]`.
    pub coact: Option<Split>,
}

impl Carrier {
    /// From an action tensor `[h, in, out]` and an optional coaction `[in, h, out]`.
    pub fn new(action: &Tensor, coaction: Option<&Tensor>) -> Carrier {
        let act = Bil::from_tensor(action);
        Carrier { dim: act.db, act, coact: coaction.map(Split::from_tensor) }
    }

    /// The ground field with action through ε and coaction `1 ↦ 1 ⊗ 1`.
    pub fn trivial(a: &QuasiHopf) -> Carrier {
        let t = a.tables();
        let rows = t.eps.iter().map(|e| if e.is_zero() { vec![] } else { vec![(0u16, e.clone())] }).collect();
        let act = Bil { da: t.dim, db: 1, out_dim: 1, rows };
        let coact = Split {
            in_dim: 1,
            d1: t.dim,
            d2: 1,
            rows: vec![t.unit.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j as u16, 0, c.clone())).collect()],
        };
        Carrier { dim: 1, act, coact: Some(coact) }
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(a: &QuasiHopf) -> Carrier {
        Carrier { dim: a.dim(), act: a.tables().mult.clone(), coact: None }
    }

    pub fn action_tensor(&self) -> Tensor {
        self.act.to_tensor(["h", "in", "out"])
    }

    pub fn coaction_tensor(&self) -> Option<Tensor> {
        self.coact.as_ref().map(|s| s.to_tensor(["in", "h", "out"]))
    }

    /// The left dual `V*` with `(h·φ)(v) = φ(S(h)·v)`; the coaction is dropped.
    pub fn dual(&self, a: &QuasiHopf) -> Carrier {
        let s = a.tables().s.as_ref().expect("antipode");
        let n = self.dim;
        let mut rows = vec![Vec::new(); a.dim() * n];
        for h in 0..a.dim() {
            let mut acc = vec![vec![Scalar::ZERO; n]; n];
            for (k, c) in &s.rows[h] {
                for j in 0..n {
                    for (i, v) in self.act.row(*k as usize, j) {
                        acc[*i as usize][j] += c * v;
                    }
                }
            }
            for (i, row) in acc.into_iter().enumerate() {
                rows[h * n + i] = row.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j as u16, v)).collect();
            }
        }
        Carrier { dim: n, act: Bil { da: a.dim(), db: n, out_dim: n, rows }, coact: None }
    }

    /// `U ⊗ V` with the diagonal action and, when both factors have one, the
    /// tensor product coaction. The basis vector `u_i ⊗ v_j` has index `i·dim V + j`.
    pub fn tensor(a: &QuasiHopf, u: &Carrier, v: &Carrier) -> Carrier {
        let d = a.dim();
        let n = u.dim * v.dim;
        let obj = Obj::pair(Obj::leaf("u", u), Obj::leaf("v", v));
        let mut e = Eval::new(a);
        e.c.input("h", d);
        e.input(&obj);
        e.act("h", &obj);
        let act = e.output(&obj).into_tensor().into_data();
        let act = Tensor::from_dims(&[("h", d), ("in", n), ("out", n)], act).expect("action shape");
        let coact = (u.coact.is_some() && v.coact.is_some()).then(|| {
            let mut e = Eval::new(a);
            e.input(&obj);
            let h = e.coact(&obj);
            let mut outs = vec![h];
            outs.extend(obj.legs());
            let refs: Vec<&str> = outs.iter().map(String::as_str).collect();
            let data = e.c.output(&refs).into_tensor().into_data();
            Tensor::from_dims(&[("in", n), ("h", d), ("out", n)], data).expect("coaction shape")
        });
        Carrier::new(&act, coact.as_ref())
    }
}

/// An object of the category: the unit, a named leg carrying a module, or a tensor product.
#[derive(Clone, Debug)]
pub enum Obj<'m> {
    Unit,
    Leaf(String, &'m Carrier),
    Pair(Box<Obj<'m>>, Box<Obj<'m>>),
}

impl<'m> Obj<'m> {
    pub fn leaf(name: &str, m: &'m Carrier) -> Self {
        Obj::Leaf(name.to_string(), m)
    }

    pub fn pair(a: Obj<'m>, b: Obj<'m>) -> Self {
        Obj::Pair(Box::new(a), Box::new(b))
    }

    /// Leg names of the leaves, left to right.
    pub fn legs(&self) -> Vec<String> {
        match self {
            Obj::Unit => vec![],
            Obj::Leaf(n, _) => vec![n.clone()],
            Obj::Pair(a, b) => {
                let mut v = a.legs();
                v.extend(b.legs());
                v
            }
        }
    }

    pub fn split(self) -> (Obj<'m>, Obj<'m>) {
        match self {
            Obj::Pair(a, b) => (*a, *b),
            other => panic!("object {:?} is not a tensor product", other.legs()),
        }
    }
}

/// Which braiding to use on H-modules.
#[derive(Clone, Copy, Debug)]
pub enum Braiding<'r> {
    /// `c(m ⊗ n) = m₍₋₁₎·n ⊗ m₍₀₎`, using the left coaction of the first factor.
    Yd,
    /// `c(u ⊗ v) = R²·v ⊗ R¹·u`.
    R(&'r Tensor),
}

/// Evaluator for composites of structure maps.
pub struct Eval<'a> {
    pub alg: &'a QuasiHopf,
    pub c: Calc<'a>,
}

impl<'a> Eval<'a> {
    pub fn new(alg: &'a QuasiHopf) -> Self {
        Eval { alg, c: alg.calc() }
    }

    /// Declares every leaf of `o` as an input.
    pub fn input(&mut self, o: &Obj) {
        match o {
            Obj::Unit => {}
            Obj::Leaf(n, m) => {
                self.c.input(n, m.dim);
            }
            Obj::Pair(a, b) => {
                self.input(a);
                self.input(b);
            }
        }
    }

    pub fn output(&self, o: &Obj) -> LinearMap {
        let legs = o.legs();
        let refs: Vec<&str> = legs.iter().map(String::as_str).collect();
        self.c.output(&refs)
    }

    /// `o := h·o`, consuming the algebra leg `h`.
    pub fn act(&mut self, h: &str, o: &Obj) {
        match o {
            Obj::Unit => {
                self.c.eps(h);
            }
            Obj::Leaf(n, m) => {
                self.c.act(h, n, &m.act);
            }
            Obj::Pair(a, b) => {
                let (h1, h2) = (self.c.fresh("h"), self.c.fresh("h"));
                self.c.delta(h, &h1, &h2);
                self.act(&h1, a);
                self.act(&h2, b);
            }
        }
    }

    /// Applies the left coaction of `o`; returns the new algebra leg.
    pub fn coact(&mut self, o: &Obj) -> String {
        match o {
            Obj::Unit => {
                let h = self.c.fresh("h");
                self.c.unit(&h);
                h
            }
            Obj::Leaf(n, m) => {
                let h = self.c.fresh("h");
                let coact = m.coact.as_ref().unwrap_or_else(|| panic!("leg `{n}` carries no coaction"));
                self.c.coact(n, coact, &h);
                h
            }
            Obj::Pair(m, n) => {
                let [y1, y2, y3] = self.put_phi(false);
                let [x1, x2, x3] = self.put_phi(true);
                let [z1, z2, z3] = self.put_phi(false);
                self.act(&y2, n);
                self.c.mul(&x1, &y1);
                self.act(&x1, m);
                let hm = self.coact(m);
                let hn = self.coact(n);
                self.c.lmul(&z1, &hm).mul(&hm, &x2).mul(&hm, &hn).mul(&hm, &y3);
                self.act(&z2, m);
                self.c.mul(&z3, &x3);
                self.act(&z3, n);
                hm
            }
        }
    }

    /// Inserts Φ (or Φ⁻¹) on three fresh legs.
    pub fn put_phi(&mut self, inverse: bool) -> [String; 3] {
        let names = [self.c.fresh("X"), self.c.fresh("X"), self.c.fresh("X")];
        let t = if inverse { self.alg.phi_inv() } else { self.alg.phi() };
        self.c.put(t, &[&names[0], &names[1], &names[2]]);
        names
    }

    pub fn put(&mut self, t: &Tensor, prefix: &str) -> Vec<String> {
        let names: Vec<String> = (0..t.order()).map(|_| self.c.fresh(prefix)).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.c.put(t, &refs);
        names
    }

    fn triple(&mut self, inverse: bool, u: &Obj, v: &Obj, w: &Obj) {
        let x = self.put_phi(inverse);
        self.act(&x[0], u);
        self.act(&x[1], v);
        self.act(&x[2], w);
    }

    /// `a_{U,V,W}`: `(u ⊗ v) ⊗ w ↦ Φ·(u ⊗ (v ⊗ w))`.
    pub fn assoc<'m>(&mut self, o: Obj<'m>) -> Obj<'m> {
        let (uv, w) = o.split();
        let (u, v) = uv.split();
        self.triple(false, &u, &v, &w);
        Obj::pair(u, Obj::pair(v, w))
    }

    /// `a⁻¹_{U,V,W}`: `u ⊗ (v ⊗ w) ↦ Φ⁻¹·((u ⊗ v) ⊗ w)`.
    pub fn assoc_inv<'m>(&mut self, o: Obj<'m>) -> Obj<'m> {
        let (u, vw) = o.split();
        let (v, w) = vw.split();
        self.triple(true, &u, &v, &w);
        Obj::pair(Obj::pair(u, v), w)
    }

    /// `c_{U,V}` on `u ⊗ v`.
    pub fn braid<'m>(&mut self, b: Braiding, o: Obj<'m>) -> Obj<'m> {
        let (u, v) = o.split();
        match b {
            Braiding::Yd => {
                let h = self.coact(&u);
                self.act(&h, &v);
            }
            Braiding::R(r) => {
                let rr = self.put(r, "R");
                self.act(&rr[1], &v);
                self.act(&rr[0], &u);
            }
        }
        Obj::pair(v, u)
    }

    /// Inverse of the Yetter-Drinfeld braiding: `n ⊗ m ↦ c⁻¹_{M,N}(n ⊗ m) ∈ M ⊗ N`.
    pub fn braid_inv<'m>(&mut self, o: Obj<'m>) -> Obj<'m> {
        let (n, m) = o.split();
        let [x1, x2, x3] = self.put_phi(true);
        let [y1, y2, y3] = self.put_phi(true);
        let [z1, z2, z3] = self.put_phi(false);
        let a = self.put(&self.alg.alpha.clone(), "a").remove(0);
        let b = self.put(&self.alg.beta.clone(), "b").remove(0);
        let (y31, y32) = (self.c.fresh("y"), self.c.fresh("y"));
        self.act(&x1, &m);
        let hm = self.coact(&m);
        self.act(&z2, &m);
        self.c.delta(&y3, &y31, &y32);
        self.act(&y31, &m);
        self.c.mul(&y32, &z3).mul(&y32, &x3).s(&y32);
        self.c.s(&y1);
        for leg in [&a, &y2, &z1, &hm, &x2, &b, &y32] {
            self.c.mul(&y1, leg);
        }
        self.c.sinv(&y1);
        self.act(&y1, &n);
        Obj::pair(m, n)
    }

    /// `ev(φ ⊗ v) = φ(α·v)`; both legs are consumed.
    pub fn ev(&mut self, phi: &str, v: &Obj) {
        let Obj::Leaf(vn, _) = v else { panic!("evaluation on a composite object") };
        let a = self.put(&self.alg.alpha.clone(), "a").remove(0);
        self.act(&a, v);
        self.c.pair(phi, vn);
    }

    /// `coev(1) = Σ β·v_i ⊗ v^i` on two new legs.
    pub fn coev<'m>(&mut self, v: &'m Carrier, dual: &'m Carrier, names: [&str; 2]) -> Obj<'m> {
        self.c.diagonal(names[0], names[1], v.dim);
        let b = self.put(&self.alg.beta.clone(), "b").remove(0);
        let vo = Obj::leaf(names[0], v);
        self.act(&b, &vo);
        Obj::pair(vo, Obj::leaf(names[1], dual))
    }
}

/// The linear map obtained by running `f` on the leaves of `src`.
pub fn morphism<'m>(a: &QuasiHopf, src: &Obj<'m>, f: impl FnOnce(&mut Eval<'_>, Obj<'m>) -> Obj<'m>) -> LinearMap {
    let mut e = Eval::new(a);
    e.input(src);
    let out = f(&mut e, src.clone());
    e.output(&out)
}

/// Identity map on the leaves of `o`.
pub fn identity(a: &QuasiHopf, o: &Obj) -> LinearMap {
    morphism(a, o, |_, x| x)
}

/// Associativity and unitality of the action.
pub fn check_module(a: &QuasiHopf, m: &Carrier, anchor: &str) -> VerificationReport {
    let d = a.dim();
    let mut rep = VerificationReport::new();
    if m.act.da != d || m.act.out_dim != m.dim {
        rep.push(crate::report::Entry::failed("module-shape", anchor, "action tensor has the wrong shape"));
        return rep;
    }
    let mut l = a.calc();
    l.input("h", d).input("k", d).input("m", m.dim).act("k", "m", &m.act).act("h", "m", &m.act);
    let mut r = a.calc();
    r.input("h", d).input("k", d).input("m", m.dim).mul("h", "k").act("h", "m", &m.act);
    rep.check("module-associativity", anchor, eq(&l.output(&["m"]), &r.output(&["m"])));
    let mut l = a.calc();
    l.input("m", m.dim).unit("u").act("u", "m", &m.act);
    let mut r = a.calc();
    r.input("m", m.dim);
    rep.check("module-unit", anchor, eq(&l.output(&["m"]), &r.output(&["m"])));
    rep
}

/// The snake identities for `V` and its left dual.
pub fn check_rigidity(a: &QuasiHopf, v: &Carrier) -> VerificationReport {
    let vd = v.dual(a);
    let mut rep = VerificationReport::new();

    let src = Obj::leaf("v", v);
    let lhs = morphism(a, &src, |e, o| {
        let co = e.coev(v, &vd, ["w", "phi"]);
        let o = e.assoc(Obj::pair(co, o));
        let (w, rest) = o.split();
        let (phi, vv) = rest.split();
        let Obj::Leaf(pn, _) = phi else { unreachable!() };
        e.ev(&pn, &vv);
        w
    });
    rep.check("rig1", "(rig1)", eq(&lhs, &identity(a, &src)));

    let src = Obj::leaf("phi", &vd);
    let lhs = morphism(a, &src, |e, o| {
        let co = e.coev(v, &vd, ["w", "psi"]);
        let o = e.assoc_inv(Obj::pair(o, co));
        let (phiv, psi) = o.split();
        let (phi, vv) = phiv.split();
        let Obj::Leaf(pn, _) = phi else { unreachable!() };
        e.ev(&pn, &vv);
        psi
    });
    rep.check("rig2", "(rig2)", eq(&lhs, &identity(a, &src)));
    rep
}

/// Pentagon and triangle coherence of the associator.
pub fn check_coherence(a: &QuasiHopf, m: [&Carrier; 4]) -> VerificationReport {
    let [u, v, w, x] = m;
    let mut rep = VerificationReport::new();
    let src = Obj::pair(
        Obj::pair(Obj::pair(Obj::leaf("u", u), Obj::leaf("v", v)), Obj::leaf("w", w)),
        Obj::leaf("x", x),
    );
    // a_{U,V,W⊗X} ∘ a_{U⊗V,W,X}
    let lhs = morphism(a, &src, |e, o| {
        let o = e.assoc(o);
        e.assoc(o)
    });
    // (id ⊗ a_{V,W,X}) ∘ a_{U,V⊗W,X} ∘ (a_{U,V,W} ⊗ id)
    let rhs = morphism(a, &src, |e, o| {
        let (uvw, x) = o.split();
        let t = e.assoc(uvw);
        let (u, vw) = t.split();
        let o = e.assoc(Obj::pair(Obj::pair(u, vw), x));
        let (u, rest) = o.split();
        Obj::pair(u, e.assoc(rest))
    });
    rep.check("pentagon", "(as)", eq(&lhs, &rhs));

    let src = Obj::pair(Obj::pair(Obj::leaf("u", u), Obj::Unit), Obj::leaf("w", w));
    let lhs = morphism(a, &src, |e, o| e.assoc(o));
    rep.check("triangle", "(as)", eq(&lhs, &identity(a, &src)));
    rep
}

/// Both hexagon identities for three modules.
pub fn check_hexagons(a: &QuasiHopf, b: Braiding, m: [&Carrier; 3]) -> VerificationReport {
    let [u, v, w] = m;
    let (lu, lv, lw) = (Obj::leaf("u", u), Obj::leaf("v", v), Obj::leaf("w", w));
    let mut rep = VerificationReport::new();

    let src = Obj::pair(Obj::pair(lu.clone(), lv.clone()), lw.clone());
    // a_{V,W,U} ∘ c_{U,V⊗W} ∘ a_{U,V,W}
    let lhs = morphism(a, &src, |e, o| {
        let o = e.assoc(o);
        let o = e.braid(b, o);
        e.assoc(o)
    });
    // (id_V ⊗ c_{U,W}) ∘ a_{V,U,W} ∘ (c_{U,V} ⊗ id_W)
    let rhs = morphism(a, &src, |e, o| {
        let (uv, w) = o.split();
        let vu = e.braid(b, uv);
        let o = e.assoc(Obj::pair(vu, w));
        let (v, uw) = o.split();
        Obj::pair(v, e.braid(b, uw))
    });
    rep.check("hexagon-1", "(br)", eq(&lhs, &rhs));

    let src = Obj::pair(lu, Obj::pair(lv, lw));
    // a⁻¹_{W,U,V} ∘ c_{U⊗V,W} ∘ a⁻¹_{U,V,W}
    let lhs = morphism(a, &src, |e, o| {
        let o = e.assoc_inv(o);
        let o = e.braid(b, o);
        e.assoc_inv(o)
    });
    // (c_{U,W} ⊗ id_V) ∘ a⁻¹_{U,W,V} ∘ (id_U ⊗ c_{V,W})
    let rhs = morphism(a, &src, |e, o| {
        let (u, vw) = o.split();
        let wv = e.braid(b, vw);
        let o = e.assoc_inv(Obj::pair(u, wv));
        let (uw, v) = o.split();
        Obj::pair(e.braid(b, uw), v)
    });
    rep.check("hexagon-2", "(br)", eq(&lhs, &rhs));
    rep
}

/// Matrix of a linear map between flattened spaces, as a tensor `[in, out]`.
pub fn flatten(m: &LinearMap) -> Tensor {
    let rows = m.to_matrix();
    let (i, o) = (m.in_dim(), m.out_dim());
    let data = rows.into_iter().flatten().collect();
    Tensor::new(vec![Leg::new("in", i), Leg::new("out", o)], data).expect("matrix shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::*;

    #[test]
    fn snake_identities_on_small_modules() {
        for a in [trivial_field_algebra(), group_algebra_z2(), h2_quasi(), sweedler_h4()] {
            for v in [Carrier::trivial(&a), Carrier::regular(&a)] {
                let r = check_rigidity(&a, &v);
                assert!(r.all_passed(), "{r}");
            }
        }
    }

    #[test]
    fn pentagon_on_regular_modules() {
        let a = h2_quasi();
        let r = Carrier::regular(&a);
        let t = Carrier::trivial(&a);
        let rep = check_coherence(&a, [&r, &r, &t, &r]);
        assert!(rep.all_passed(), "{rep}");
    }

    #[test]
    fn r_braiding_hexagons_for_kz2() {
        let a = group_algebra_z2();
        let r = Carrier::regular(&a);
        let rg = kz2_r_g();
        let rep = check_hexagons(&a, Braiding::R(&rg), [&r, &r, &r]);
        assert!(rep.all_passed(), "{rep}");
    }

    #[test]
    fn broken_action_is_reported() {
        let a = group_algebra_z2();
        let mut m = Carrier::regular(&a);
        m.act.rows[3] = vec![(1, Scalar::from_int(2))];
        let rep = check_module(&a, &m, "(module)");
        assert!(!rep.get("module-associativity").unwrap().passed);
    }
}
