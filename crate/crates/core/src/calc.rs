//! Sparse evaluation of Sweedler-notation formulas.
//!
//! A [`Calc`] holds a sparse tensor whose legs carry names. Formulas are
//! written by inserting structure elements (Φ, R, f, ...) as new legs and
//! then multiplying, acting, comultiplying or pairing legs. Input legs added
//! with [`Calc::input`] are never touched, so the final [`Calc::output`] is the
//! linear map from the inputs to the requested legs.

use std::collections::HashMap;

use crate::scalar::Scalar;
use crate::tensor::{Leg, LinearMap, Tensor};

/// Sparse linear map: `rows[i]` lists `(j, c)` with `e_i ↦ Σ c e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lin {
    pub in_dim: usize,
    pub out_dim: usize,
    pub rows: Vec<Vec<(u16, Scalar)>>,
}

/// Sparse bilinear map: `rows[i * db + j]` lists the image of `e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bil {
    pub da: usize,
    pub db: usize,
    pub out_dim: usize,
    pub rows: Vec<Vec<(u16, Scalar)>>,
}

/// Sparse map into a tensor square: `rows[i]` lists `(j, k, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub in_dim: usize,
    pub d1: usize,
    pub d2: usize,
    pub rows: Vec<Vec<(u16, u16, Scalar)>>,
}

impl Lin {
    /// From a tensor with legs `[in, out]`.
    pub fn from_tensor(t: &Tensor) -> Lin {
        let d = t.dims();
        assert_eq!(d.len(), 2, "linear map tensor must have order 2");
        let mut rows = vec![Vec::new(); d[0]];
        for (idx, v) in t.nonzeros() {
            rows[idx[0]].push((idx[1] as u16, v));
        }
        Lin { in_dim: d[0], out_dim: d[1], rows }
    }

    pub fn to_tensor(&self, labels: [&str; 2]) -> Tensor {
        let mut t = Tensor::zeros(vec![Leg::new(labels[0], self.in_dim), Leg::new(labels[1], self.out_dim)]);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row {
                t.set(&[i, *j as usize], c.clone());
            }
        }
        t
    }

    pub fn identity(n: usize) -> Lin {
        Lin { in_dim: n, out_dim: n, rows: (0..n).map(|i| vec![(i as u16, Scalar::ONE)]).collect() }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.out_dim];
        for (x, row) in v.iter().zip(&self.rows) {
            if x.is_zero() {
                continue;
            }
            for (j, c) in row {
                out[*j as usize] += x * c;
            }
        }
        out
    }
}

impl Bil {
    /// From a tensor with legs `[a, b, out]`.
    pub fn from_tensor(t: &Tensor) -> Bil {
        let d = t.dims();
        assert_eq!(d.len(), 3, "bilinear map tensor must have order 3");
        let mut rows = vec![Vec::new(); d[0] * d[1]];
        for (idx, v) in t.nonzeros() {
            rows[idx[0] * d[1] + idx[1]].push((idx[2] as u16, v));
        }
        Bil { da: d[0], db: d[1], out_dim: d[2], rows }
    }

    /// The same map with its two arguments swapped.
    pub fn swapped(&self) -> Bil {
        let mut rows = vec![Vec::new(); self.da * self.db];
        for i in 0..self.da {
            for j in 0..self.db {
                rows[j * self.da + i] = self.rows[i * self.db + j].clone();
            }
        }
        Bil { da: self.db, db: self.da, out_dim: self.out_dim, rows }
    }

    pub fn row(&self, i: usize, j: usize) -> &[(u16, Scalar)] {
        &self.rows[i * self.db + j]
    }

    pub fn to_tensor(&self, labels: [&str; 3]) -> Tensor {
        let legs = vec![Leg::new(labels[0], self.da), Leg::new(labels[1], self.db), Leg::new(labels[2], self.out_dim)];
        let mut t = Tensor::zeros(legs);
        for (ij, row) in self.rows.iter().enumerate() {
            for (k, c) in row {
                t.set(&[ij / self.db, ij % self.db, *k as usize], c.clone());
            }
        }
        t
    }
}

impl Split {
    /// From a tensor with legs `[in, o1, o2]`.
    pub fn from_tensor(t: &Tensor) -> Split {
        let d = t.dims();
        assert_eq!(d.len(), 3, "split tensor must have order 3");
        let mut rows = vec![Vec::new(); d[0]];
        for (idx, v) in t.nonzeros() {
            rows[idx[0]].push((idx[1] as u16, idx[2] as u16, v));
        }
        Split { in_dim: d[0], d1: d[1], d2: d[2], rows }
    }

    /// The same map with its two outputs swapped.
    pub fn flipped(&self) -> Split {
        let rows = self.rows.iter().map(|r| r.iter().map(|(a, b, c)| (*b, *a, c.clone())).collect()).collect();
        Split { in_dim: self.in_dim, d1: self.d2, d2: self.d1, rows }
    }

    pub fn to_tensor(&self, labels: [&str; 3]) -> Tensor {
        let legs = vec![Leg::new(labels[0], self.in_dim), Leg::new(labels[1], self.d1), Leg::new(labels[2], self.d2)];
        let mut t = Tensor::zeros(legs);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, k, c) in row {
                t.set(&[i, *j as usize, *k as usize], c.clone());
            }
        }
        t
    }
}

/// Structure tables of an algebra with comultiplication, as used by [`Calc`].
#[derive(Clone, Debug)]
pub struct Tables {
    pub dim: usize,
    pub mult: Bil,
    pub unit: Vec<Scalar>,
    pub delta: Split,
    pub eps: Vec<Scalar>,
    pub s: Option<Lin>,
    pub sinv: Option<Lin>,
}

type Key = Vec<u16>;

/// Sparse tensor with named legs.
#[derive(Clone, Debug)]
pub struct Sparse {
    names: Vec<String>,
    dims: Vec<usize>,
    terms: Vec<(Key, Scalar)>,
}

fn collect(map: HashMap<Key, Scalar>) -> Vec<(Key, Scalar)> {
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn accumulate(map: &mut HashMap<Key, Scalar>, key: Key, v: Scalar) {
    match map.get_mut(&key) {
        Some(x) => *x += v,
        None => {
            map.insert(key, v);
        }
    }
}

impl Sparse {
    pub fn one() -> Self {
        Sparse { names: Vec::new(), dims: Vec::new(), terms: vec![(Vec::new(), Scalar::ONE)] }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn pos(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("no leg named `{name}` among {:?}", self.names))
    }

    fn check_new(&self, name: &str) {
        assert!(!self.names.iter().any(|n| n == name), "leg `{name}` already exists");
    }

    pub fn dim_of(&self, name: &str) -> usize {
        self.dims[self.pos(name)]
    }

    /// Tensor product with `t`, whose legs become `names`.
    pub fn kron(&mut self, t: &Tensor, names: &[&str]) {
        assert_eq!(t.order(), names.len(), "one name per leg");
        for n in names {
            self.check_new(n);
        }
        let nz = t.nonzeros();
        let mut terms = Vec::with_capacity(self.terms.len() * nz.len());
        for (k, v) in &self.terms {
            for (idx, w) in &nz {
                let mut key = k.clone();
                key.extend(idx.iter().map(|&i| i as u16));
                terms.push((key, v * w));
            }
        }
        self.terms = terms;
        self.names.extend(names.iter().map(|s| s.to_string()));
        self.dims.extend(t.dims());
    }

    /// Adds the pair of legs `Σ_i e_i ⊗ e_i`.
    pub fn diagonal(&mut self, a: &str, b: &str, dim: usize) {
        self.check_new(a);
        self.check_new(b);
        let mut terms = Vec::with_capacity(self.terms.len() * dim);
        for (k, v) in &self.terms {
            for i in 0..dim {
                let mut key = k.clone();
                key.push(i as u16);
                key.push(i as u16);
                terms.push((key, v.clone()));
            }
        }
        self.terms = terms;
        self.names.push(a.to_string());
        self.names.push(b.to_string());
        self.dims.push(dim);
        self.dims.push(dim);
    }

    pub fn linear(&mut self, leg: &str, map: &Lin) {
        let p = self.pos(leg);
        assert_eq!(self.dims[p], map.in_dim, "linear map on leg `{leg}`");
        let mut out = HashMap::new();
        for (k, v) in &self.terms {
            for (j, c) in &map.rows[k[p] as usize] {
                let mut key = k.clone();
                key[p] = *j;
                accumulate(&mut out, key, v * c);
            }
        }
        self.terms = collect(out);
        self.dims[p] = map.out_dim;
    }

    /// Replaces legs `a`, `b` by `map(a ⊗ b)`, stored in `keep` (either `a` or `b`).
    pub fn bilinear(&mut self, a: &str, b: &str, map: &Bil, keep: &str) {
        let pa = self.pos(a);
        let pb = self.pos(b);
        assert!(pa != pb, "bilinear map needs two distinct legs");
        assert_eq!((self.dims[pa], self.dims[pb]), (map.da, map.db), "bilinear map on `{a}`,`{b}`");
        let (pk, pd) = if keep == a { (pa, pb) } else { (pb, pa) };
        assert!(keep == a || keep == b, "kept leg must be an argument");
        let mut out = HashMap::new();
        for (k, v) in &self.terms {
            for (j, c) in map.row(k[pa] as usize, k[pb] as usize) {
                let mut key = k.clone();
                key[pk] = *j;
                key.remove(pd);
                accumulate(&mut out, key, v * c);
            }
        }
        self.terms = collect(out);
        self.dims[pk] = map.out_dim;
        self.dims.remove(pd);
        self.names.remove(pd);
    }

    /// Replaces leg `leg` by two legs `n1`, `n2` at its position.
    pub fn split(&mut self, leg: &str, map: &Split, n1: &str, n2: &str) {
        let p = self.pos(leg);
        assert_eq!(self.dims[p], map.in_dim, "split on leg `{leg}`");
        let mut out = HashMap::new();
        for (k, v) in &self.terms {
            for (i, j, c) in &map.rows[k[p] as usize] {
                let mut key = Vec::with_capacity(k.len() + 1);
                key.extend_from_slice(&k[..p]);
                key.push(*i);
                key.push(*j);
                key.extend_from_slice(&k[p + 1..]);
                accumulate(&mut out, key, v * c);
            }
        }
        self.terms = collect(out);
        self.names[p] = n1.to_string();
        self.names.insert(p + 1, n2.to_string());
        self.dims[p] = map.d1;
        self.dims.insert(p + 1, map.d2);
        for n in [n1, n2] {
            assert_eq!(self.names.iter().filter(|x| *x == n).count(), 1, "leg `{n}` duplicated");
        }
    }

    /// Applies a linear functional to `leg`, removing it.
    pub fn functional(&mut self, leg: &str, f: &[Scalar]) {
        let p = self.pos(leg);
        assert_eq!(self.dims[p], f.len(), "functional on leg `{leg}`");
        let mut out = HashMap::new();
        for (k, v) in &self.terms {
            let c = &f[k[p] as usize];
            if c.is_zero() {
                continue;
            }
            let mut key = k.clone();
            key.remove(p);
            accumulate(&mut out, key, v * c);
        }
        self.terms = collect(out);
        self.names.remove(p);
        self.dims.remove(p);
    }

    /// Contracts two legs of equal dimension against each other (`Σ_i e^i ⊗ e_i`).
    pub fn pair(&mut self, a: &str, b: &str) {
        let pa = self.pos(a);
        let pb = self.pos(b);
        assert_eq!(self.dims[pa], self.dims[pb], "pairing `{a}` with `{b}`");
        let (lo, hi) = if pa < pb { (pa, pb) } else { (pb, pa) };
        let mut out = HashMap::new();
        for (k, v) in &self.terms {
            if k[pa] != k[pb] {
                continue;
            }
            let mut key = k.clone();
            key.remove(hi);
            key.remove(lo);
            accumulate(&mut out, key, v.clone());
        }
        self.terms = collect(out);
        for p in [hi, lo] {
            self.names.remove(p);
            self.dims.remove(p);
        }
    }

    pub fn rename(&mut self, old: &str, new: &str) {
        if old == new {
            return;
        }
        self.check_new(new);
        let p = self.pos(old);
        self.names[p] = new.to_string();
    }

    pub fn scale(&mut self, c: &Scalar) {
        for (_, v) in self.terms.iter_mut() {
            *v = &*v * c;
        }
        self.terms.retain(|(_, v)| !v.is_zero());
    }

    /// Dense tensor with legs in the given order; every leg must be listed.
    pub fn to_tensor(&self, order: &[&str], labels: &[&str]) -> Tensor {
        assert_eq!(order.len(), self.names.len(), "output legs {order:?} vs present {:?}", self.names);
        let perm: Vec<usize> = order.iter().map(|n| self.pos(n)).collect();
        let legs: Vec<Leg> = perm.iter().zip(labels).map(|(&p, l)| Leg::new(*l, self.dims[p])).collect();
        let mut t = Tensor::zeros(legs);
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        for (k, v) in &self.terms {
            let mut off = 0;
            for (&p, d) in perm.iter().zip(&dims) {
                off = off * d + k[p] as usize;
            }
            let data = t.data_mut();
            data[off] += v;
        }
        t
    }
}

/// Formula evaluator over an algebra given by its [`Tables`].
#[derive(Clone)]
pub struct Calc<'a> {
    pub alg: &'a Tables,
    sp: Sparse,
    inputs: Vec<String>,
    counter: usize,
}

impl<'a> Calc<'a> {
    pub fn new(alg: &'a Tables) -> Self {
        Calc { alg, sp: Sparse::one(), inputs: Vec::new(), counter: 0 }
    }

    pub fn sparse(&self) -> &Sparse {
        &self.sp
    }

    /// A leg name that cannot clash with names chosen by formula code.
    pub fn fresh(&mut self, prefix: &str) -> String {
        self.counter += 1;
        format!("{prefix}#{}", self.counter)
    }

    /// Declares an input of dimension `dim`; the active leg is called `name`.
    pub fn input(&mut self, name: &str, dim: usize) -> &mut Self {
        let passive = format!("in:{name}");
        self.sp.diagonal(&passive, name, dim);
        self.inputs.push(passive);
        self
    }

    pub fn put(&mut self, t: &Tensor, names: &[&str]) -> &mut Self {
        self.sp.kron(t, names);
        self
    }

    pub fn unit(&mut self, name: &str) -> &mut Self {
        let u = Tensor::vector("u", self.alg.unit.clone());
        self.sp.kron(&u, &[name]);
        self
    }

    /// `a := a·b`, consuming `b`.
    pub fn mul(&mut self, a: &str, b: &str) -> &mut Self {
        self.sp.bilinear(a, b, &self.alg.mult, a);
        self
    }

    /// `b := a·b`, consuming `a`.
    pub fn lmul(&mut self, a: &str, b: &str) -> &mut Self {
        self.sp.bilinear(a, b, &self.alg.mult, b);
        self
    }

    /// Multiplies the legs left to right into the first one.
    pub fn prod(&mut self, legs: &[&str]) -> &mut Self {
        for b in &legs[1..] {
            self.mul(legs[0], b);
        }
        self
    }

    pub fn s(&mut self, a: &str) -> &mut Self {
        let s = self.alg.s.as_ref().expect("antipode required");
        self.sp.linear(a, s);
        self
    }

    pub fn sinv(&mut self, a: &str) -> &mut Self {
        let s = self.alg.sinv.as_ref().expect("inverse antipode required");
        self.sp.linear(a, s);
        self
    }

    pub fn delta(&mut self, a: &str, a1: &str, a2: &str) -> &mut Self {
        self.sp.split(a, &self.alg.delta, a1, a2);
        self
    }

    pub fn eps(&mut self, a: &str) -> &mut Self {
        self.sp.functional(a, &self.alg.eps);
        self
    }

    pub fn linear(&mut self, a: &str, map: &Lin) -> &mut Self {
        self.sp.linear(a, map);
        self
    }

    /// `m := h ▷ m` for a left action table `[h, m] -> m`, consuming `h`.
    pub fn act(&mut self, h: &str, m: &str, action: &Bil) -> &mut Self {
        self.sp.bilinear(h, m, action, m);
        self
    }

    /// `m := m ◁ h` for a right action table `[m, h] -> m`, consuming `h`.
    pub fn ract(&mut self, m: &str, h: &str, action: &Bil) -> &mut Self {
        self.sp.bilinear(m, h, action, m);
        self
    }

    pub fn bilinear(&mut self, a: &str, b: &str, map: &Bil, keep: &str) -> &mut Self {
        self.sp.bilinear(a, b, map, keep);
        self
    }

    /// Replaces `m` by the two legs of `map(m)`.
    pub fn split(&mut self, m: &str, map: &Split, n1: &str, n2: &str) -> &mut Self {
        self.sp.split(m, map, n1, n2);
        self
    }

    /// Left coaction `m ↦ h ⊗ m` (table legs `[m, h, m]`), new leg `h`.
    pub fn coact(&mut self, m: &str, coaction: &Split, h: &str) -> &mut Self {
        let tmp = self.fresh("m");
        self.sp.split(m, coaction, h, &tmp);
        self.sp.rename(&tmp, m);
        self
    }

    /// Right coaction `m ↦ m ⊗ h` (table legs `[m, m, h]`), new leg `h`.
    pub fn rcoact(&mut self, m: &str, coaction: &Split, h: &str) -> &mut Self {
        let tmp = self.fresh("m");
        self.sp.split(m, coaction, &tmp, h);
        self.sp.rename(&tmp, m);
        self
    }

    pub fn functional(&mut self, a: &str, f: &[Scalar]) -> &mut Self {
        self.sp.functional(a, f);
        self
    }

    pub fn pair(&mut self, a: &str, b: &str) -> &mut Self {
        self.sp.pair(a, b);
        self
    }

    pub fn diagonal(&mut self, a: &str, b: &str, dim: usize) -> &mut Self {
        self.sp.diagonal(a, b, dim);
        self
    }

    pub fn rename(&mut self, old: &str, new: &str) -> &mut Self {
        self.sp.rename(old, new);
        self
    }

    pub fn scale(&mut self, c: &Scalar) -> &mut Self {
        self.sp.scale(c);
        self
    }

    pub fn dim_of(&self, leg: &str) -> usize {
        self.sp.dim_of(leg)
    }

    /// The linear map from the declared inputs to the listed output legs.
    pub fn output(&self, outs: &[&str]) -> LinearMap {
        let mut order: Vec<&str> = self.inputs.iter().map(String::as_str).collect();
        order.extend_from_slice(outs);
        let t = self.sp.to_tensor(&order, &order);
        LinearMap::new(t, self.inputs.len()).expect("input count")
    }

    /// Output when no inputs were declared: a plain element.
    pub fn element(&self, outs: &[&str]) -> Tensor {
        assert!(self.inputs.is_empty(), "element() on a calculation with inputs");
        self.sp.to_tensor(outs, outs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    /// Group algebra of Z2 with basis {1, g}.
    fn kz2() -> Tables {
        let mut m = Tensor::zeros(vec![Leg::new("a", 2), Leg::new("b", 2), Leg::new("c", 2)]);
        for a in 0..2 {
            for b in 0..2 {
                m.set(&[a, b, a ^ b], Scalar::ONE);
            }
        }
        let mut d = Tensor::zeros(vec![Leg::new("a", 2), Leg::new("b", 2), Leg::new("c", 2)]);
        d.set(&[0, 0, 0], Scalar::ONE);
        d.set(&[1, 1, 1], Scalar::ONE);
        Tables {
            dim: 2,
            mult: Bil::from_tensor(&m),
            unit: ints(&[1, 0]),
            delta: Split::from_tensor(&d),
            eps: ints(&[1, 1]),
            s: Some(Lin::identity(2)),
            sinv: Some(Lin::identity(2)),
        }
    }

    #[test]
    fn comultiplication_of_g_is_g_tensor_g() {
        let t = kz2();
        let mut c = Calc::new(&t);
        c.put(&Tensor::basis_vector("g", 2, 1), &["h"]).delta("h", "h1", "h2");
        assert_eq!(c.element(&["h1", "h2"]).nonzeros(), vec![(vec![1, 1], Scalar::ONE)]);
    }

    #[test]
    fn input_map_of_multiplication_by_g() {
        let t = kz2();
        let mut c = Calc::new(&t);
        c.input("h", 2).put(&Tensor::basis_vector("g", 2, 1), &["g"]).mul("h", "g");
        let m = c.output(&["h"]);
        assert_eq!(m.to_matrix(), vec![ints(&[0, 1]), ints(&[1, 0])]);
    }

    #[test]
    fn pairing_contracts_diagonal() {
        let t = kz2();
        let mut c = Calc::new(&t);
        c.put(&Tensor::vector("v", ints(&[2, 3])), &["v"]).put(&Tensor::vector("w", ints(&[5, 7])), &["w"]).pair(
            "v", "w",
        );
        assert_eq!(c.element(&[]).data(), &ints(&[31])[..]);
    }
}
