//! Algebras, coalgebras and Hopf algebras in the category of left
//! Yetter-Drinfeld modules over a quasi-Hopf algebra.
//!
//! Most identities are statements that some composite of structure maps,
//! associators and braidings agrees with another; those are evaluated with
//! the category [`Eval`]uator. The few identities the theory states in closed
//! Sweedler form are additionally evaluated literally and compared with the
//! composite they expand.

use crate::calc::{Bil, Lin, Split};
use crate::category::{morphism, Braiding, Carrier, Eval, Obj};
use crate::error::{QhaError, Result};
use crate::qha::{eq, QuasiHopf};
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::{LinearMap, Mismatch, Tensor};
use crate::yd::{check_yd, Flavor, YdModule};

pub(crate) fn expect_dims(field: &str, t: &Tensor, dims: &[usize], labels: &[&str]) -> Result<Tensor> {
    if t.dims() != dims {
        return Err(QhaError::field(field, format!("expected dimensions {dims:?}, found {:?}", t.dims())));
    }
    Ok(t.clone().relabel(labels)?)
}

fn require_left(carrier: &YdModule) -> Result<()> {
    if carrier.flavor != Flavor::Left {
        return Err(QhaError::Structure(format!("expected a left Yetter-Drinfeld module, found {}", carrier.flavor)));
    }
    Ok(())
}

/// An algebra `(B, m, 1_B)` in the Yetter-Drinfeld category.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidedAlgebra {
    pub carrier: YdModule,
    /// `[a, b, out]`.
    pub mult: Tensor,
    pub unit: Tensor,
    m: Bil,
}

impl BraidedAlgebra {
    pub fn new(carrier: YdModule, mult: Tensor, unit: Tensor) -> Result<Self> {
        require_left(&carrier)?;
        let n = carrier.dim;
        let mult = expect_dims("mult", &mult, &[n, n, n], &["a", "b", "out"])?;
        let unit = expect_dims("unit", &unit, &[n], &["b"])?;
        Ok(BraidedAlgebra { m: Bil::from_tensor(&mult), carrier, mult, unit })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn base(&self) -> &QuasiHopf {
        &self.carrier.algebra
    }

    pub(crate) fn view(&self) -> &Carrier {
        self.carrier.left_view().1
    }


    /// The same multiplication over a different carrier.
    pub fn with_carrier(&self, carrier: YdModule) -> Result<Self> {
        BraidedAlgebra::new(carrier, self.mult.clone(), self.unit.clone())
    }
}

/// A coalgebra `(B, Δ̲, ε̲)` in the Yetter-Drinfeld category.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidedCoalgebra {
    pub carrier: YdModule,
    /// `[in, o1, o2]`.
    pub comult: Tensor,
    pub counit: Tensor,
    d: Split,
}

impl BraidedCoalgebra {
    pub fn new(carrier: YdModule, comult: Tensor, counit: Tensor) -> Result<Self> {
        require_left(&carrier)?;
        let n = carrier.dim;
        let comult = expect_dims("comult", &comult, &[n, n, n], &["in", "o1", "o2"])?;
        let counit = expect_dims("counit", &counit, &[n], &["in"])?;
        Ok(BraidedCoalgebra { d: Split::from_tensor(&comult), carrier, comult, counit })
    }

}

/// A Hopf algebra in the Yetter-Drinfeld category.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidedHopf {
    pub algebra: BraidedAlgebra,
    pub coalgebra: BraidedCoalgebra,
    /// `[in, out]`.
    pub antipode: Tensor,
    s: Lin,
}

impl BraidedHopf {
    pub fn new(algebra: BraidedAlgebra, coalgebra: BraidedCoalgebra, antipode: Tensor) -> Result<Self> {
        if algebra.carrier != coalgebra.carrier {
            return Err(QhaError::Structure("algebra and coalgebra live on different carriers".into()));
        }
        let n = algebra.dim();
        let antipode = expect_dims("antipode", &antipode, &[n, n], &["in", "out"])?;
        Ok(BraidedHopf { s: Lin::from_tensor(&antipode), algebra, coalgebra, antipode })
    }

    pub fn from_parts(
        carrier: YdModule,
        mult: Tensor,
        unit: Tensor,
        comult: Tensor,
        counit: Tensor,
        antipode: Tensor,
    ) -> Result<Self> {
        let algebra = BraidedAlgebra::new(carrier.clone(), mult, unit)?;
        let coalgebra = BraidedCoalgebra::new(carrier, comult, counit)?;
        BraidedHopf::new(algebra, coalgebra, antipode)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn base(&self) -> &QuasiHopf {
        self.algebra.base()
    }

    pub fn carrier(&self) -> &YdModule {
        &self.algebra.carrier
    }

    pub(crate) fn view(&self) -> &Carrier {
        self.algebra.view()
    }


    /// The same structure with the antipode replaced.
    pub fn with_antipode(&self, antipode: Tensor) -> Result<Self> {
        BraidedHopf::new(self.algebra.clone(), self.coalgebra.clone(), antipode)
    }

    pub(crate) fn ops(&self) -> Ops<'_> {
        Ops {
            a: self.base(),
            b: self.view(),
            m: Some(&self.algebra.m),
            unit: Some(self.algebra.unit.data()),
            d: Some(&self.coalgebra.d),
            eps: Some(self.coalgebra.counit.data()),
            s: Some(&self.s),
        }
    }
}

pub(crate) fn leaf_of<'m>(o: &Obj<'m>) -> (String, &'m Carrier) {
    match o {
        Obj::Leaf(n, c) => (n.clone(), *c),
        other => panic!("expected a single leg, found {:?}", other.legs()),
    }
}

/// `x ⊗ y ↦ map(x, y)`; the value lives on the leg of `x` and is carried by `out`.
pub(crate) fn apply_bil<'m>(e: &mut Eval<'_>, map: &Bil, o: Obj<'m>, out: &'m Carrier) -> Obj<'m> {
    let (x, y) = o.split();
    let ((xn, _), (yn, _)) = (leaf_of(&x), leaf_of(&y));
    e.c.bilinear(&xn, &yn, map, &xn);
    Obj::Leaf(xn, out)
}

pub(crate) fn apply_split<'m>(e: &mut Eval<'_>, map: &Split, o: Obj<'m>, c1: &'m Carrier, c2: &'m Carrier) -> Obj<'m> {
    let (n, _) = leaf_of(&o);
    let (n1, n2) = (e.c.fresh("s"), e.c.fresh("s"));
    e.c.split(&n, map, &n1, &n2);
    Obj::pair(Obj::Leaf(n1, c1), Obj::Leaf(n2, c2))
}

pub(crate) fn apply_lin<'m>(e: &mut Eval<'_>, map: &Lin, o: Obj<'m>) -> Obj<'m> {
    let (n, _) = leaf_of(&o);
    e.c.linear(&n, map);
    o
}

pub(crate) fn apply_functional<'m>(e: &mut Eval<'_>, f: &[Scalar], o: Obj<'m>) -> Obj<'m> {
    let (n, _) = leaf_of(&o);
    e.c.functional(&n, f);
    Obj::Unit
}

pub(crate) fn put_vector<'m>(e: &mut Eval<'_>, v: &[Scalar], c: &'m Carrier) -> Obj<'m> {
    let n = e.c.fresh("v");
    e.c.put(&Tensor::vector(&n, v.to_vec()), &[&n]);
    Obj::Leaf(n, c)
}

/// Removes unit factors; the unit constraints are identities on coordinates.
pub(crate) fn drop_units(o: Obj<'_>) -> Obj<'_> {
    match o {
        Obj::Pair(a, b) => match (drop_units(*a), drop_units(*b)) {
            (Obj::Unit, x) | (x, Obj::Unit) => x,
            (x, y) => Obj::pair(x, y),
        },
        other => other,
    }
}

pub(crate) fn same<'m>(
    a: &QuasiHopf,
    src: &Obj<'m>,
    f: impl FnOnce(&mut Eval<'_>, Obj<'m>) -> Obj<'m>,
    g: impl FnOnce(&mut Eval<'_>, Obj<'m>) -> Obj<'m>,
) -> Option<Mismatch> {
    eq(&morphism(a, src, f), &morphism(a, src, g))
}

/// First failure of `f(h·x) = h·f(x)`.
pub(crate) fn linear_defect<'m>(
    a: &QuasiHopf,
    src: &Obj<'m>,
    f: impl Fn(&mut Eval<'_>, Obj<'m>) -> Obj<'m>,
) -> Option<Mismatch> {
    const H: &str = "h:act";
    let run = |before: bool| {
        let mut e = Eval::new(a);
        e.c.input(H, a.dim());
        e.input(src);
        if before {
            e.act(H, src);
        }
        let o = f(&mut e, src.clone());
        if !before {
            e.act(H, &o);
        }
        e.output(&o)
    };
    eq(&run(true), &run(false))
}

/// First failure of `λ(f(x)) = (id ⊗ f)(λ(x))`.
pub(crate) fn colinear_defect<'m>(
    a: &QuasiHopf,
    src: &Obj<'m>,
    f: impl Fn(&mut Eval<'_>, Obj<'m>) -> Obj<'m>,
) -> Option<Mismatch> {
    let run = |before: bool| {
        let mut e = Eval::new(a);
        e.input(src);
        let (h, o) = if before {
            let h = e.coact(src);
            (h, f(&mut e, src.clone()))
        } else {
            let o = f(&mut e, src.clone());
            (e.coact(&o), o)
        };
        let mut outs = vec![h];
        outs.extend(o.legs());
        let refs: Vec<&str> = outs.iter().map(String::as_str).collect();
        e.c.output(&refs)
    };
    eq(&run(true), &run(false))
}

/// `((u₁ ⊗ u₂) ⊗ (v₁ ⊗ v₂)) ↦ ((u₁ ⊗ v₁) ⊗ (u₂ ⊗ v₂))` through
/// `a⁻¹ ∘ (id ⊗ a) ∘ (id ⊗ (c ⊗ id)) ∘ (id ⊗ a⁻¹) ∘ a`.
pub(crate) fn middle_interchange<'m>(e: &mut Eval<'_>, o: Obj<'m>) -> Obj<'m> {
    let o = e.assoc(o);
    let (u1, rest) = o.split();
    let rest = e.assoc_inv(rest);
    let (p, v2) = rest.split();
    let p = e.braid(Braiding::Yd, p);
    let rest = e.assoc(Obj::pair(p, v2));
    e.assoc_inv(Obj::pair(u1, rest))
}

/// The closed form shared by the multiplicativity of `Δ̲` and the
/// linearity of a Hopf-module coaction: with `u ↦ u₁ ⊗ u₂` given by `split`
/// (second factor in `B`) and `v ↦ v₁ ⊗ v₂` the comultiplication,
/// `Σ (y¹X¹·u₁)·[y²Y¹(x¹X²·u₂)₋₁x²X³₁·v₁] ⊗ [y³₁Y²·(x¹X²·u₂)₀][y³₂Y³x³X³₂·v₂]`.
pub(crate) fn by_form(
    a: &QuasiHopf,
    left: &Carrier,
    split: &Split,
    join: &Bil,
    b: &Carrier,
    delta: &Split,
    mult: &Bil,
) -> LinearMap {
    let coact = b.coact.as_ref().expect("carrier with a coaction");
    let mut c = a.calc();
    c.input("u", left.dim).input("v", b.dim);
    c.split("u", split, "u1", "u2").split("v", delta, "v1", "v2");
    c.put(a.phi(), &["X1", "X2", "X3"]).put(a.phi(), &["Y1", "Y2", "Y3"]);
    c.put(a.phi_inv(), &["x1", "x2", "x3"]).put(a.phi_inv(), &["y1", "y2", "y3"]);
    c.delta("X3", "X31", "X32").delta("y3", "y31", "y32");
    c.mul("x1", "X2").act("x1", "u2", &b.act).coact("u2", coact, "w");
    c.mul("y1", "X1").act("y1", "u1", &left.act);
    c.prod(&["y2", "Y1", "w", "x2", "X31"]).act("y2", "v1", &b.act);
    c.mul("y31", "Y2").act("y31", "u2", &b.act);
    c.prod(&["y32", "Y3", "x3", "X32"]).act("y32", "v2", &b.act);
    c.bilinear("u1", "v1", join, "u1").bilinear("u2", "v2", mult, "u2");
    c.output(&["u1", "u2"])
}

/// Structure maps available on one carrier, for use inside composites.
pub(crate) struct Ops<'x> {
    pub a: &'x QuasiHopf,
    pub b: &'x Carrier,
    pub m: Option<&'x Bil>,
    pub unit: Option<&'x [Scalar]>,
    pub d: Option<&'x Split>,
    pub eps: Option<&'x [Scalar]>,
    pub s: Option<&'x Lin>,
}

impl<'x> Ops<'x> {
    fn algebra(alg: &'x BraidedAlgebra) -> Self {
        Ops { a: alg.base(), b: alg.view(), m: Some(&alg.m), unit: Some(alg.unit.data()), d: None, eps: None, s: None }
    }

    fn coalgebra(co: &'x BraidedCoalgebra) -> Self {
        Ops {
            a: &co.carrier.algebra,
            b: co.carrier.left_view().1,
            m: None,
            unit: None,
            d: Some(&co.d),
            eps: Some(co.counit.data()),
            s: None,
        }
    }

    pub fn x(&self, name: &str) -> Obj<'x> {
        Obj::leaf(name, self.b)
    }

    pub fn m(&self, e: &mut Eval<'_>, o: Obj<'x>) -> Obj<'x> {
        apply_bil(e, self.m.expect("multiplication"), o, self.b)
    }

    pub fn unit(&self, e: &mut Eval<'_>) -> Obj<'x> {
        put_vector(e, self.unit.expect("unit"), self.b)
    }

    pub fn delta(&self, e: &mut Eval<'_>, o: Obj<'x>) -> Obj<'x> {
        apply_split(e, self.d.expect("comultiplication"), o, self.b, self.b)
    }

    pub fn eps(&self, e: &mut Eval<'_>, o: Obj<'x>) -> Obj<'x> {
        apply_functional(e, self.eps.expect("counit"), o)
    }

    pub fn s(&self, e: &mut Eval<'_>, o: Obj<'x>) -> Obj<'x> {
        apply_lin(e, self.s.expect("antipode"), o)
    }

    fn pair(&self) -> Obj<'x> {
        Obj::pair(self.x("x"), self.x("y"))
    }
}

fn algebra_entries(ops: &Ops<'_>, rep: &mut VerificationReport) {
    let a = ops.a;
    let xyz = Obj::pair(ops.pair(), ops.x("z"));
    let assoc = same(
        a,
        &xyz,
        |e, o| {
            let (xy, z) = o.split();
            let xy = ops.m(e, xy);
            ops.m(e, Obj::pair(xy, z))
        },
        |e, o| {
            let (x, yz) = e.assoc(o).split();
            let yz = ops.m(e, yz);
            ops.m(e, Obj::pair(x, yz))
        },
    );
    rep.check("mal-associativity", "(mal)", assoc);
    let x = ops.x("x");
    let left = same(
        a,
        &x,
        |e, o| {
            let u = ops.unit(e);
            ops.m(e, Obj::pair(u, o))
        },
        |_, o| o,
    );
    rep.check("unit-left", "(mal)", left);
    let right = same(
        a,
        &x,
        |e, o| {
            let u = ops.unit(e);
            ops.m(e, Obj::pair(o, u))
        },
        |_, o| o,
    );
    rep.check("unit-right", "(mal)", right);
    rep.check("module-algebra", "(mal)", linear_defect(a, &ops.pair(), |e, o| ops.m(e, o)));
    rep.check("module-unit", "(mal)", linear_defect(a, &Obj::Unit, |e, _| ops.unit(e)));
    rep.check("qca1", "(qca1)", colinear_defect(a, &ops.pair(), |e, o| ops.m(e, o)));
    rep.check("qca2", "(qca2)", colinear_defect(a, &Obj::Unit, |e, _| ops.unit(e)));
}

fn coalgebra_entries(ops: &Ops<'_>, rep: &mut VerificationReport) {
    let a = ops.a;
    let x = ops.x("x");
    let coassoc = same(
        a,
        &x,
        |e, o| {
            let (l, r) = ops.delta(e, o).split();
            let l = ops.delta(e, l);
            e.assoc(Obj::pair(l, r))
        },
        |e, o| {
            let (l, r) = ops.delta(e, o).split();
            let r = ops.delta(e, r);
            Obj::pair(l, r)
        },
    );
    rep.check("mc1", "(mc1)", coassoc);
    let left = same(
        a,
        &x,
        |e, o| {
            let (l, r) = ops.delta(e, o).split();
            let l = ops.eps(e, l);
            drop_units(Obj::pair(l, r))
        },
        |_, o| o,
    );
    rep.check("counit-left", "(mc1)", left);
    let right = same(
        a,
        &x,
        |e, o| {
            let (l, r) = ops.delta(e, o).split();
            let r = ops.eps(e, r);
            drop_units(Obj::pair(l, r))
        },
        |_, o| o,
    );
    rep.check("counit-right", "(mc1)", right);
    rep.check("mc2-comult", "(mc2)", linear_defect(a, &x, |e, o| ops.delta(e, o)));
    rep.check("mc2-counit", "(mc2)", linear_defect(a, &x, |e, o| ops.eps(e, o)));
    rep.check("qcc1", "(qcc1)", colinear_defect(a, &x, |e, o| ops.delta(e, o)));
    rep.check("qcc2", "(qcc2)", colinear_defect(a, &x, |e, o| ops.eps(e, o)));
}

fn bialgebra_entries(ops: &Ops<'_>, rep: &mut VerificationReport) {
    let a = ops.a;
    let unit_comult = same(
        a,
        &Obj::Unit,
        |e, _| {
            let u = ops.unit(e);
            ops.delta(e, u)
        },
        |e, _| {
            let u = ops.unit(e);
            let v = ops.unit(e);
            Obj::pair(u, v)
        },
    );
    rep.check("comult-unit", "(by)", unit_comult);
    let unit_counit = same(
        a,
        &Obj::Unit,
        |e, _| {
            let u = ops.unit(e);
            ops.eps(e, u)
        },
        |_, o| o,
    );
    rep.check("counit-unit", "(bi)", unit_counit);
    let counit_mult = same(
        a,
        &ops.pair(),
        |e, o| {
            let p = ops.m(e, o);
            ops.eps(e, p)
        },
        |e, o| {
            let (x, y) = o.split();
            ops.eps(e, x);
            ops.eps(e, y)
        },
    );
    rep.check("counit-mult", "(bi)", counit_mult);

    let lhs = morphism(a, &ops.pair(), |e, o| {
        let p = ops.m(e, o);
        ops.delta(e, p)
    });
    let closed = by_form(a, ops.b, ops.d.unwrap(), ops.m.unwrap(), ops.b, ops.d.unwrap(), ops.m.unwrap());
    let composite = morphism(a, &ops.pair(), |e, o| {
        let (x, y) = o.split();
        let (x, y) = (ops.delta(e, x), ops.delta(e, y));
        let (l, r) = middle_interchange(e, Obj::pair(x, y)).split();
        let (l, r) = (ops.m(e, l), ops.m(e, r));
        Obj::pair(l, r)
    });
    rep.check("by", "(by)", eq(&closed, &lhs));
    rep.check("bi", "(bi)", eq(&composite, &lhs));
    rep.check("by-bi-agreement", "(bi)", eq(&closed, &composite));
}

fn hopf_entries(ops: &Ops<'_>, rep: &mut VerificationReport) {
    let a = ops.a;
    let x = ops.x("x");
    for (id, left) in [("antipode-left", true), ("antipode-right", false)] {
        let defect = same(
            a,
            &x,
            |e, o| {
                let (l, r) = ops.delta(e, o).split();
                let (l, r) = if left { (ops.s(e, l), r) } else { (l, ops.s(e, r)) };
                ops.m(e, Obj::pair(l, r))
            },
            |e, o| {
                ops.eps(e, o);
                ops.unit(e)
            },
        );
        rep.check(id, "(antipode)", defect);
    }
    rep.check("smorf-linear", "(smorf)", linear_defect(a, &x, |e, o| ops.s(e, o)));
    rep.check("smorf-colinear", "(smorf)", colinear_defect(a, &x, |e, o| ops.s(e, o)));

    let b = ops.b;
    let coact = b.coact.as_ref().expect("coaction");
    let (m, s, d) = (ops.m.unwrap(), ops.s.unwrap(), ops.d.unwrap());
    let s_of_m = morphism(a, &ops.pair(), |e, o| {
        let p = ops.m(e, o);
        ops.s(e, p)
    });
    let mut c = a.calc();
    c.input("x", b.dim).input("y", b.dim).coact("x", coact, "h").linear("y", s).act("h", "y", &b.act);
    c.linear("x", s).bilinear("y", "x", m, "y");
    rep.check("santi-mult", "(santi)", eq(&c.output(&["y"]), &s_of_m));
    let d_of_s = morphism(a, &x, |e, o| {
        let o = ops.s(e, o);
        ops.delta(e, o)
    });
    let mut c = a.calc();
    c.input("x", b.dim).split("x", d, "x1", "x2").coact("x1", coact, "h").linear("x2", s);
    c.act("h", "x2", &b.act).linear("x1", s);
    rep.check("santi-comult", "(santi)", eq(&c.output(&["x2", "x1"]), &d_of_s));

    let via_braiding = morphism(a, &ops.pair(), |e, o| {
        let (u, v) = e.braid(Braiding::Yd, o).split();
        let (u, v) = (ops.s(e, u), ops.s(e, v));
        ops.m(e, Obj::pair(u, v))
    });
    rep.check("antiac-mult", "(antiac)", eq(&s_of_m, &via_braiding));
    let via_braiding = morphism(a, &x, |e, o| {
        let (u, v) = ops.delta(e, o).split();
        let (u, v) = (ops.s(e, u), ops.s(e, v));
        e.braid(Braiding::Yd, Obj::pair(u, v))
    });
    rep.check("antiac-comult", "(antiac)", eq(&d_of_s, &via_braiding));
}

pub fn check_braided_algebra(alg: &BraidedAlgebra) -> VerificationReport {
    let mut rep = check_yd(&alg.carrier);
    algebra_entries(&Ops::algebra(alg), &mut rep);
    rep
}

pub fn check_braided_coalgebra(co: &BraidedCoalgebra) -> VerificationReport {
    let mut rep = check_yd(&co.carrier);
    coalgebra_entries(&Ops::coalgebra(co), &mut rep);
    rep
}

pub fn check_braided_bialgebra(b: &BraidedHopf) -> VerificationReport {
    let mut rep = check_yd(b.carrier());
    let ops = b.ops();
    algebra_entries(&ops, &mut rep);
    coalgebra_entries(&ops, &mut rep);
    bialgebra_entries(&ops, &mut rep);
    rep
}

pub fn check_braided_hopf(b: &BraidedHopf) -> VerificationReport {
    let mut rep = check_braided_bialgebra(b);
    hopf_entries(&b.ops(), &mut rep);
    rep
}

/// `m ∘ c_{B,B} = m`, i.e. `ab = Σ (a₍₋₁₎·b) a₍₀₎`.
pub fn check_quantum_commutative(alg: &BraidedAlgebra) -> VerificationReport {
    let ops = Ops::algebra(alg);
    let mut rep = VerificationReport::new();
    let defect = same(
        ops.a,
        &ops.pair(),
        |e, o| {
            let o = e.braid(Braiding::Yd, o);
            ops.m(e, o)
        },
        |e, o| ops.m(e, o),
    );
    rep.check("quantum-commutative", "(Prop. 4.2)", defect);
    rep
}

/// A braided Hopf algebra over the one-dimensional algebra `k`, i.e. an
/// ordinary Hopf algebra given by its structure tensors.
pub fn over_ground_field(
    k: std::sync::Arc<QuasiHopf>,
    mult: Tensor,
    unit: Tensor,
    comult: Tensor,
    counit: Tensor,
    antipode: Tensor,
) -> Result<BraidedHopf> {
    if k.dim() != 1 {
        return Err(QhaError::Structure("the ground algebra must be one-dimensional".into()));
    }
    let n = unit.len();
    let one = |dims: &[usize], labels: &[&str]| {
        let mut t = Tensor::zeros(dims.iter().zip(labels).map(|(d, l)| crate::tensor::Leg::new(*l, *d)).collect());
        for i in 0..n {
            let idx: Vec<usize> = dims.iter().map(|&d| if d == 1 { 0 } else { i }).collect();
            t.set(&idx, Scalar::ONE);
        }
        t
    };
    let action = one(&[1, n, n], &["h", "in", "out"]);
    let coaction = one(&[n, 1, n], &["in", "h", "out"]);
    let carrier = YdModule::new(k, Flavor::Left, action, coaction)?;
    BraidedHopf::from_parts(carrier, mult, unit, comult, counit, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::kz2_over_k;
    use std::sync::Arc;

    #[test]
    fn classical_kz2_passes_everything() {
        let b = kz2_over_k();
        let r = check_braided_hopf(&b);
        assert!(r.all_passed(), "{r}");
        assert!(check_quantum_commutative(&b.algebra).all_passed());
    }

    #[test]
    fn zero_antipode_is_rejected() {
        let b = kz2_over_k();
        let zero = crate::instances::tabulate(&[2, 2], |_| Scalar::ZERO);
        let r = check_braided_hopf(&b.with_antipode(zero).unwrap());
        let e = r.get("antipode-left").unwrap();
        assert!(!e.passed && e.witness.is_some());
        assert!(r.get("mal-associativity").unwrap().passed);
    }

    #[test]
    fn over_ground_field_rejects_bigger_algebras() {
        let a = Arc::new(crate::instances::group_algebra_z2());
        let b = kz2_over_k();
        let err = over_ground_field(
            a,
            b.algebra.mult.clone(),
            b.algebra.unit.clone(),
            b.coalgebra.comult.clone(),
            b.coalgebra.counit.clone(),
            b.antipode.clone(),
        );
        assert!(err.is_err());
    }
}
