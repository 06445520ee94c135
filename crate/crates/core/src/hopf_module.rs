//! Right Hopf modules over a braided bialgebra `B`, coinvariants and the
//! structure theorem `M ≅ M^{coB} ⊗ B`.

use crate::braided::{
    apply_bil, apply_lin, apply_split, by_form, colinear_defect, drop_units, expect_dims, leaf_of, linear_defect,
    middle_interchange, same, BraidedHopf,
};
use crate::calc::{Bil, Lin, Split};
use crate::category::{morphism, Carrier, Eval, Obj};
use crate::error::{QhaError, Result};
use crate::linalg::{self, Matrix};
use crate::qha::eq;
use crate::report::{Entry, VerificationReport};
use crate::scalar::Scalar;
use crate::tensor::{Leg, LinearMap, Mismatch, Tensor};
use crate::yd::{check_yd, yd_tensor, Flavor, YdModule};

/// A Yetter-Drinfeld module with a right `B`-action `m ↼ b` and a right
/// `B`-coaction `m ↦ m₍0̲₎ ⊗ m₍1̲₎`.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfModule {
    pub carrier: YdModule,
    /// `[m, b, out]`.
    pub action: Tensor,
    /// `[in, m, b]`.
    pub coaction: Tensor,
    w: Bil,
    rho: Split,
}

impl HopfModule {
    pub fn new(carrier: YdModule, b_dim: usize, action: Tensor, coaction: Tensor) -> Result<Self> {
        if carrier.flavor != Flavor::Left {
            return Err(QhaError::Structure("Hopf modules are built on left Yetter-Drinfeld modules".into()));
        }
        let n = carrier.dim;
        let action = expect_dims("b_action", &action, &[n, b_dim, n], &["m", "b", "out"])?;
        let coaction = expect_dims("b_coaction", &coaction, &[n, n, b_dim], &["in", "m", "b"])?;
        Ok(HopfModule { w: Bil::from_tensor(&action), rho: Split::from_tensor(&coaction), carrier, action, coaction })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    fn view(&self) -> &Carrier {
        self.carrier.left_view().1
    }
}

/// `B` over itself: action by multiplication, coaction by comultiplication.
pub fn over_itself(b: &BraidedHopf) -> HopfModule {
    HopfModule::new(b.carrier().clone(), b.dim(), b.algebra.mult.clone(), b.coalgebra.comult.clone())
        .expect("shapes of B")
}

struct Mops<'x> {
    mc: &'x Carrier,
    bc: &'x Carrier,
    w: &'x Bil,
    rho: &'x Split,
}

impl<'x> Mops<'x> {
    fn new(m: &'x HopfModule, b: &'x BraidedHopf) -> Self {
        Mops { mc: m.view(), bc: b.view(), w: &m.w, rho: &m.rho }
    }

    fn omega(&self, e: &mut Eval<'_>, o: Obj<'x>) -> Obj<'x> {
        apply_bil(e, self.w, o, self.mc)
    }

    fn rho(&self, e: &mut Eval<'_>, o: Obj<'x>) -> Obj<'x> {
        apply_split(e, self.rho, o, self.mc, self.bc)
    }

    fn m(&self) -> Obj<'x> {
        Obj::leaf("m", self.mc)
    }

    fn mb(&self) -> Obj<'x> {
        Obj::pair(self.m(), Obj::leaf("b", self.bc))
    }
}

fn shape_ok(m: &HopfModule, b: &BraidedHopf) -> bool {
    m.w.db == b.dim() && m.rho.d2 == b.dim() && m.carrier.algebra.dim() == b.base().dim()
}

pub fn check_hopf_module(m: &HopfModule, b: &BraidedHopf) -> VerificationReport {
    let mut rep = check_yd(&m.carrier);
    if !shape_ok(m, b) {
        rep.push(Entry::failed("hopf-module-shape", "(rm1)", "module and bialgebra do not match"));
        return rep;
    }
    let ops = b.ops();
    let mo = Mops::new(m, b);
    let a = b.base();

    let unit = same(
        a,
        &mo.m(),
        |e, o| {
            let u = ops.unit(e);
            mo.omega(e, Obj::pair(o, u))
        },
        |_, o| o,
    );
    rep.check("rm1-unit", "(rm1)", unit);
    let src = Obj::pair(mo.mb(), ops.x("c"));
    let assoc = same(
        a,
        &src,
        |e, o| {
            let (mb, c) = o.split();
            let mb = mo.omega(e, mb);
            mo.omega(e, Obj::pair(mb, c))
        },
        |e, o| {
            let (x, bc) = e.assoc(o).split();
            let bc = ops.m(e, bc);
            mo.omega(e, Obj::pair(x, bc))
        },
    );
    rep.check("rm1-assoc", "(rm1)", assoc);
    rep.check("olhl", "(olhl)", linear_defect(a, &mo.mb(), |e, o| mo.omega(e, o)));
    rep.check("olhcol", "(olhcol)", colinear_defect(a, &mo.mb(), |e, o| mo.omega(e, o)));

    let coassoc = same(
        a,
        &mo.m(),
        |e, o| {
            let (x, y) = mo.rho(e, o).split();
            let x = mo.rho(e, x);
            e.assoc(Obj::pair(x, y))
        },
        |e, o| {
            let (x, y) = mo.rho(e, o).split();
            let y = ops.delta(e, y);
            Obj::pair(x, y)
        },
    );
    rep.check("rbc1", "(rbc1)", coassoc);
    let counit = same(
        a,
        &mo.m(),
        |e, o| {
            let (x, y) = mo.rho(e, o).split();
            let y = ops.eps(e, y);
            drop_units(Obj::pair(x, y))
        },
        |_, o| o,
    );
    rep.check("rbc2", "(rbc2)", counit);
    rep.check("rhl", "(rhl)", linear_defect(a, &mo.m(), |e, o| mo.rho(e, o)));
    rep.check("rlhcol", "(rlhcol)", colinear_defect(a, &mo.m(), |e, o| mo.rho(e, o)));

    let lhs = morphism(a, &mo.mb(), |e, o| {
        let x = mo.omega(e, o);
        mo.rho(e, x)
    });
    let b_ops = b.ops();
    let closed = by_form(a, mo.mc, mo.rho, mo.w, mo.bc, b_ops.d.unwrap(), b_ops.m.unwrap());
    let composite = morphism(a, &mo.mb(), |e, o| {
        let (x, y) = o.split();
        let (x, y) = (mo.rho(e, x), ops.delta(e, y));
        let (l, r) = middle_interchange(e, Obj::pair(x, y)).split();
        let (l, r) = (mo.omega(e, l), ops.m(e, r));
        Obj::pair(l, r)
    });
    rep.check("hmyd", "(hmyd)", eq(&closed, &lhs));
    rep.check("hmc", "(hmc)", eq(&composite, &lhs));
    rep.check("hmyd-hmc-agreement", "(hmc)", eq(&closed, &composite));
    rep
}

fn flat(map: &LinearMap, dims: &[(&str, usize)]) -> Tensor {
    Tensor::from_dims(dims, map.tensor().data().to_vec()).expect("flattened shape")
}

/// `N ⊗ B` with `(n⊗b)↼b' = Σ X¹·n ⊗ (X²·b)(X³·b')` and
/// `ρ(n⊗b) = Σ x¹·n ⊗ x²·b₁ ⊗ x³·b₂`.
pub fn trivial_hopf_module(n: &YdModule, b: &BraidedHopf) -> Result<HopfModule> {
    let m = trivial_hopf_module_unchecked(n, b)?;
    let rep = check_hopf_module(&m, b);
    if !rep.all_passed() {
        return Err(QhaError::Structure(format!("N ⊗ B fails the Hopf module axioms:\n{rep}")));
    }
    Ok(m)
}

fn trivial_hopf_module_unchecked(n: &YdModule, b: &BraidedHopf) -> Result<HopfModule> {
    let carrier = yd_tensor(n, b.carrier())?;
    let a = b.base();
    let ops = b.ops();
    let nc = n.left_view().1;
    let (dn, db) = (n.dim, b.dim());
    let nb = Obj::pair(Obj::leaf("n", nc), ops.x("b"));
    let action = morphism(a, &Obj::pair(nb.clone(), ops.x("c")), |e, o| {
        let (x, bc) = e.assoc(o).split();
        Obj::pair(x, ops.m(e, bc))
    });
    let coaction = morphism(a, &nb, |e, o| {
        let (x, y) = o.split();
        let y = ops.delta(e, y);
        e.assoc_inv(Obj::pair(x, y))
    });
    let action = flat(&action, &[("m", dn * db), ("b", db), ("out", dn * db)]);
    let coaction = flat(&coaction, &[("in", dn * db), ("m", dn * db), ("b", db)]);
    HopfModule::new(carrier, db, action, coaction)
}

/// Axioms of `N ⊗ B`, its structure isomorphism and `dim (N ⊗ B)^{coB} = dim N`.
pub fn check_trivial_hopf_module(n: &YdModule, b: &BraidedHopf) -> Result<VerificationReport> {
    let m = trivial_hopf_module_unchecked(n, b)?;
    let mut rep = check_hopf_module(&m, b);
    let k = coinvariants(&m, b).len();
    rep.push(if k == n.dim {
        Entry::passed("coinvariant-dimension", "(fst1)")
    } else {
        Entry::failed("coinvariant-dimension", "(fst1)", format!("dim (N⊗B)^coB = {k}, dim N = {}", n.dim))
    });
    rep.extend(check_structure_iso(&m, b)?);
    Ok(rep)
}

fn rho_map(m: &HopfModule, b: &BraidedHopf) -> LinearMap {
    let mo = Mops::new(m, b);
    morphism(b.base(), &mo.m(), |e, o| mo.rho(e, o))
}

/// Basis of `{m | ρ(m) = m ⊗ 1_B}`.
pub fn coinvariants(m: &HopfModule, b: &BraidedHopf) -> Vec<Vec<Scalar>> {
    let rho = rho_map(m, b).to_matrix();
    let (n, db) = (m.dim(), b.dim());
    let unit = b.algebra.unit.data();
    let rows: Matrix = (0..n * db)
        .map(|col| {
            let (j, k) = (col / db, col % db);
            (0..n).map(|i| if i == j { &rho[i][col] - &unit[k] } else { rho[i][col].clone() }).collect()
        })
        .collect();
    linalg::kernel(&rows, n)
}

fn act_on(act: &Bil, h: usize, v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::ZERO; act.out_dim];
    for (j, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (i, c) in act.row(h, j) {
            out[*i as usize] += x * c;
        }
    }
    out
}

fn coords(basis: &[Vec<Scalar>], v: &[Scalar], what: &str) -> Result<Vec<Scalar>> {
    if basis.is_empty() {
        return if v.iter().all(Scalar::is_zero) {
            Ok(Vec::new())
        } else {
            Err(QhaError::Structure(format!("{what} leaves the coinvariants")))
        };
    }
    linalg::coordinates(basis, v).ok_or_else(|| QhaError::Structure(format!("{what} leaves the coinvariants")))
}

/// The coinvariants as a Yetter-Drinfeld submodule, in the coordinates of `basis`.
pub fn coinvariant_module(m: &HopfModule, b: &BraidedHopf) -> Result<(Vec<Vec<Scalar>>, YdModule)> {
    let basis = coinvariants(m, b);
    let mv = m.view();
    let coact = mv.coact.as_ref().expect("coaction");
    let (d, k) = (b.base().dim(), basis.len());
    let mut action = Tensor::zeros(vec![Leg::new("h", d), Leg::new("in", k), Leg::new("out", k)]);
    let mut coaction = Tensor::zeros(vec![Leg::new("in", k), Leg::new("h", d), Leg::new("out", k)]);
    for (i, v) in basis.iter().enumerate() {
        for h in 0..d {
            for (j, c) in coords(&basis, &act_on(&mv.act, h, v), "the H-action")?.into_iter().enumerate() {
                action.set(&[h, i, j], c);
            }
        }
        let mut parts = vec![vec![Scalar::ZERO; m.dim()]; d];
        for (j, x) in v.iter().enumerate() {
            for (h, t, c) in &coact.rows[j] {
                parts[*h as usize][*t as usize] += x * c;
            }
        }
        for (h, part) in parts.iter().enumerate() {
            for (j, c) in coords(&basis, part, "the H-coaction")?.into_iter().enumerate() {
                coaction.set(&[i, h, j], c);
            }
        }
    }
    let module = YdModule::new(m.carrier.algebra.clone(), Flavor::Left, action, coaction)?;
    Ok((basis, module))
}

/// `P(m) = Σ m₍0̲₎ ↼ S̲(m₍1̲₎)`.
pub fn hm_projection(m: &HopfModule, b: &BraidedHopf) -> LinearMap {
    let mo = Mops::new(m, b);
    let ops = b.ops();
    morphism(b.base(), &mo.m(), |e, o| {
        let (x, y) = mo.rho(e, o).split();
        let y = ops.s(e, y);
        mo.omega(e, Obj::pair(x, y))
    })
}

fn matrix_lin(rows: &Matrix, out_dim: usize) -> Lin {
    let rows = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j as u16, c.clone())).collect())
        .collect::<Vec<_>>();
    Lin { in_dim: rows.len(), out_dim, rows }
}

fn matrix_defect(l: &Matrix, r: &Matrix) -> Option<Mismatch> {
    l.iter().zip(r).enumerate().find_map(|(i, (a, b))| {
        a.iter().zip(b).position(|(x, y)| x != y).map(|j| Mismatch {
            index: vec![i, j],
            lhs: a[j].clone(),
            rhs: b[j].clone(),
        })
    })
}

/// Applies `map`, moving the value to the carrier `out`.
fn lin_to<'m>(e: &mut Eval<'_>, map: &Lin, o: Obj<'m>, out: &'m Carrier) -> Obj<'m> {
    let (n, _) = leaf_of(&o);
    e.c.linear(&n, map);
    Obj::Leaf(n, out)
}

/// Compares two maps on `M ⊗ B` after restricting the first factor to `basis`.
fn restricted_defect(l: &LinearMap, r: &LinearMap, basis: &[Vec<Scalar>], db: usize) -> Option<Mismatch> {
    let n = basis.first().map_or(0, Vec::len);
    for (k, v) in basis.iter().enumerate() {
        for bi in 0..db {
            let mut x = vec![Scalar::ZERO; n * db];
            for (j, c) in v.iter().enumerate() {
                x[j * db + bi] = c.clone();
            }
            let (lv, rv) = (l.apply(&x).expect("dimension"), r.apply(&x).expect("dimension"));
            if let Some(o) = (0..lv.len()).find(|&o| lv[o] != rv[o]) {
                return Some(Mismatch { index: vec![k, bi, o], lhs: lv[o].clone(), rhs: rv[o].clone() });
            }
        }
    }
    None
}

/// The projection's properties: image in the coinvariants, idempotence,
/// `P(n↼b) = ε̲(b)n` and `ρ(n↼b) = Σ (x¹·n)↼(x²·b₁) ⊗ x³·b₂` for coinvariant `n`.
pub fn check_projection(m: &HopfModule, b: &BraidedHopf) -> VerificationReport {
    let a = b.base();
    let mut rep = VerificationReport::new();
    let p = hm_projection(m, b);
    let p_lin = matrix_lin(&p.to_matrix(), m.dim());
    let mo = Mops::new(m, b);
    let ops = b.ops();
    let image = same(
        a,
        &mo.m(),
        |e, o| {
            let o = apply_lin(e, &p_lin, o);
            mo.rho(e, o)
        },
        |e, o| {
            let o = apply_lin(e, &p_lin, o);
            let u = ops.unit(e);
            Obj::pair(o, u)
        },
    );
    rep.check("projection-coinvariant", "(ii)", image);
    let idem = same(
        a,
        &mo.m(),
        |e, o| {
            let o = apply_lin(e, &p_lin, o);
            apply_lin(e, &p_lin, o)
        },
        |e, o| apply_lin(e, &p_lin, o),
    );
    rep.check("projection-idempotent", "(ii)", idem);

    let basis = coinvariants(m, b);
    let p_of_action = morphism(a, &mo.mb(), |e, o| {
        let o = mo.omega(e, o);
        apply_lin(e, &p_lin, o)
    });
    let counit_times = morphism(a, &mo.mb(), |e, o| {
        let (x, y) = o.split();
        let y = ops.eps(e, y);
        drop_units(Obj::pair(x, y))
    });
    rep.check("projection-counit", "(iii)", restricted_defect(&p_of_action, &counit_times, &basis, b.dim()));
    let rho_of_action = morphism(a, &mo.mb(), |e, o| {
        let o = mo.omega(e, o);
        mo.rho(e, o)
    });
    let closed = morphism(a, &mo.mb(), |e, o| {
        let (x, y) = o.split();
        let y = ops.delta(e, y);
        let (xy1, y2) = e.assoc_inv(Obj::pair(x, y)).split();
        Obj::pair(mo.omega(e, xy1), y2)
    });
    rep.check("coaction-of-action", "(iii)", restricted_defect(&rho_of_action, &closed, &basis, b.dim()));
    rep
}

/// The isomorphism `F: M^{coB} ⊗ B → M`, `F(n⊗b) = n↼b`, and its inverse
/// `G(m) = Σ P(m₍0̲₎) ⊗ m₍1̲₎`; coinvariants are written in the coordinates of `basis`.
#[derive(Clone, Debug)]
pub struct StructureIso {
    pub basis: Vec<Vec<Scalar>>,
    pub coinvariants: YdModule,
    pub f: LinearMap,
    pub g: LinearMap,
}

pub fn structure_iso(m: &HopfModule, b: &BraidedHopf) -> Result<StructureIso> {
    let (basis, coinv) = coinvariant_module(m, b)?;
    let (n, db, k) = (m.dim(), b.dim(), basis.len());
    let mo = Mops::new(m, b);
    let omega = morphism(b.base(), &mo.mb(), |e, o| mo.omega(e, o)).to_matrix();
    let f_rows: Matrix = (0..k * db)
        .map(|kb| {
            let (i, bi) = (kb / db, kb % db);
            let mut out = vec![Scalar::ZERO; n];
            for (j, x) in basis[i].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(&omega[j * db + bi]) {
                    *o += x * c;
                }
            }
            out
        })
        .collect();
    let p = hm_projection(m, b);
    let p_lin = matrix_lin(&p.to_matrix(), n);
    let pm = morphism(b.base(), &mo.m(), |e, o| {
        let (x, y) = mo.rho(e, o).split();
        Obj::pair(apply_lin(e, &p_lin, x), y)
    })
    .to_matrix();
    let mut g_rows: Matrix = vec![vec![Scalar::ZERO; k * db]; n];
    for (row, g) in pm.iter().zip(g_rows.iter_mut()) {
        for bi in 0..db {
            let v: Vec<Scalar> = (0..n).map(|j| row[j * db + bi].clone()).collect();
            for (i, c) in coords(&basis, &v, "the projection")?.into_iter().enumerate() {
                g[i * db + bi] = c;
            }
        }
    }
    let f = LinearMap::from_rows(Leg::new("nb", k * db), Leg::new("m", n), &f_rows)?;
    let g = LinearMap::from_rows(Leg::new("m", n), Leg::new("nb", k * db), &g_rows)?;
    Ok(StructureIso { basis, coinvariants: coinv, f, g })
}

/// `F∘G = id`, `G∘F = id`, and `F` is a morphism of Hopf modules and of
/// Yetter-Drinfeld modules from the structure of `M^{coB} ⊗ B`.
pub fn check_structure_iso(m: &HopfModule, b: &BraidedHopf) -> Result<VerificationReport> {
    let iso = structure_iso(m, b)?;
    let mut rep = VerificationReport::new();
    let (n, db, k) = (m.dim(), b.dim(), iso.basis.len());
    rep.push(if n == k * db {
        Entry::passed("dimension", "(iv)")
    } else {
        Entry::failed("dimension", "(iv)", format!("dim M = {n}, dim M^coB = {k}, dim B = {db}"))
    });
    let (f_mat, g_mat) = (iso.f.to_matrix(), iso.g.to_matrix());
    rep.check("FG-identity", "(iv)", matrix_defect(&linalg::mat_mul(&g_mat, &f_mat), &linalg::identity(n)));
    rep.check("GF-identity", "(iv)", matrix_defect(&linalg::mat_mul(&f_mat, &g_mat), &linalg::identity(k * db)));

    let triv = trivial_hopf_module_unchecked(&iso.coinvariants, b)?;
    let f = matrix_lin(&iso.f.to_matrix(), n);
    let (tv, mv) = (triv.view(), m.view());
    let to = Mops::new(&triv, b);
    let mo = Mops::new(m, b);
    let a = b.base();
    let x = Obj::leaf("x", tv);
    let xb = Obj::pair(x.clone(), Obj::leaf("b", b.view()));
    let linear = same(
        a,
        &xb,
        |e, o| {
            let o = to.omega(e, o);
            lin_to(e, &f, o, mv)
        },
        |e, o| {
            let (x, y) = o.split();
            let x = lin_to(e, &f, x, mv);
            mo.omega(e, Obj::pair(x, y))
        },
    );
    rep.check("F-right-linear", "(iv)", linear);
    let colinear = same(
        a,
        &x,
        |e, o| {
            let o = lin_to(e, &f, o, mv);
            mo.rho(e, o)
        },
        |e, o| {
            let (x, y) = to.rho(e, o).split();
            Obj::pair(lin_to(e, &f, x, mv), y)
        },
    );
    rep.check("F-right-colinear", "(iv)", colinear);
    rep.check("F-H-linear", "(iv)", linear_defect(a, &x, |e, o| lin_to(e, &f, o, mv)));
    rep.check("F-H-colinear", "(iv)", colinear_defect(a, &x, |e, o| lin_to(e, &f, o, mv)));
    Ok(rep)
}
