//! Dense tensors over `Scalar` with labeled legs, and linear maps built on them.

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Leg {
    pub label: String,
    pub dim: usize,
}

impl Leg {
    pub fn new(label: impl Into<String>, dim: usize) -> Self {
        Leg { label: label.into(), dim }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown leg label `{0}`")]
    UnknownLeg(String),
    #[error("duplicate leg label `{0}`")]
    DuplicateLabel(String),
    #[error("data length {got} does not match leg dimensions (expected {expected})")]
    DataLength { expected: usize, got: usize },
    #[error("permutation {0:?} does not match tensor order {1}")]
    BadPermutation(Vec<usize>, usize),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
}

/// Dense row-major tensor. The last leg varies fastest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    legs: Vec<Leg>,
    data: Vec<Scalar>,
}

fn check_unique(legs: &[Leg]) -> Result<(), TensorError> {
    for (i, a) in legs.iter().enumerate() {
        if legs[..i].iter().any(|b| b.label == a.label) {
            return Err(TensorError::DuplicateLabel(a.label.clone()));
        }
    }
    Ok(())
}

pub(crate) fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

/// Advances a multi-index in row-major order; returns false after the last one.
pub(crate) fn next_index(idx: &mut [usize], dims: &[usize]) -> bool {
    for k in (0..idx.len()).rev() {
        idx[k] += 1;
        if idx[k] < dims[k] {
            return true;
        }
        idx[k] = 0;
    }
    false
}

impl Tensor {
    pub fn new(legs: Vec<Leg>, data: Vec<Scalar>) -> Result<Self, TensorError> {
        check_unique(&legs)?;
        let expected: usize = legs.iter().map(|l| l.dim).product();
        if expected != data.len() {
            return Err(TensorError::DataLength { expected, got: data.len() });
        }
        if let Some(l) = legs.iter().find(|l| l.dim == 0) {
            return Err(TensorError::DimensionMismatch(format!("leg `{}` has dimension 0", l.label)));
        }
        Ok(Tensor { legs, data })
    }

    pub fn zeros(legs: Vec<Leg>) -> Self {
        let n = legs.iter().map(|l| l.dim).product();
        Tensor::new(legs, vec![Scalar::ZERO; n]).expect("invalid legs")
    }

    pub fn scalar(s: Scalar) -> Self {
        Tensor { legs: Vec::new(), data: vec![s] }
    }

    /// Convenience constructor from `(label, dim)` pairs.
    pub fn from_dims(legs: &[(&str, usize)], data: Vec<Scalar>) -> Result<Self, TensorError> {
        Tensor::new(legs.iter().map(|(l, d)| Leg::new(*l, *d)).collect(), data)
    }

    pub fn vector(label: &str, data: Vec<Scalar>) -> Self {
        let n = data.len();
        Tensor::new(vec![Leg::new(label, n)], data).expect("vector")
    }

    pub fn basis_vector(label: &str, dim: usize, i: usize) -> Self {
        let mut t = Tensor::zeros(vec![Leg::new(label, dim)]);
        t.data[i] = Scalar::ONE;
        t
    }

    pub fn legs(&self) -> &[Leg] {
        &self.legs
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn dims(&self) -> Vec<usize> {
        self.legs.iter().map(|l| l.dim).collect()
    }

    pub fn order(&self) -> usize {
        self.legs.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn leg_index(&self, label: &str) -> Result<usize, TensorError> {
        self.legs
            .iter()
            .position(|l| l.label == label)
            .ok_or_else(|| TensorError::UnknownLeg(label.to_string()))
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.legs.len(), "index arity");
        let mut off = 0;
        for (i, l) in idx.iter().zip(&self.legs) {
            assert!(*i < l.dim, "index out of range");
            off = off * l.dim + i;
        }
        off
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn data_mut(&mut self) -> &mut [Scalar] {
        &mut self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Multi-indices and values of all nonzero entries, in row-major order.
    pub fn nonzeros(&self) -> Vec<(Vec<usize>, Scalar)> {
        let dims = self.dims();
        let mut out = Vec::new();
        let mut idx = vec![0; dims.len()];
        for v in &self.data {
            if !v.is_zero() {
                out.push((idx.clone(), v.clone()));
            }
            next_index(&mut idx, &dims);
        }
        out
    }

    pub fn relabel(mut self, labels: &[&str]) -> Result<Self, TensorError> {
        if labels.len() != self.legs.len() {
            return Err(TensorError::SignatureMismatch(format!(
                "relabel with {} labels on an order-{} tensor",
                labels.len(),
                self.legs.len()
            )));
        }
        for (l, new) in self.legs.iter_mut().zip(labels) {
            l.label = new.to_string();
        }
        check_unique(&self.legs)?;
        Ok(self)
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        Tensor { legs: self.legs.clone(), data: self.data.iter().map(|x| x * c).collect() }
    }

    fn same_shape(&self, other: &Tensor) -> Result<(), TensorError> {
        if self.dims() != other.dims() {
            return Err(TensorError::SignatureMismatch(format!(
                "shapes {:?} and {:?}",
                self.dims(),
                other.dims()
            )));
        }
        Ok(())
    }

    /// Entrywise sum; labels are taken from `self`.
    pub fn add(&self, other: &Tensor) -> Result<Tensor, TensorError> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Tensor { legs: self.legs.clone(), data })
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor, TensorError> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Tensor { legs: self.legs.clone(), data })
    }

    /// Outer product; legs of `self` come first. Clashing labels are an error.
    pub fn kron(&self, other: &Tensor) -> Result<Tensor, TensorError> {
        let mut legs = self.legs.clone();
        legs.extend(other.legs.iter().cloned());
        check_unique(&legs)?;
        let mut data = Vec::with_capacity(self.data.len() * other.data.len());
        for a in &self.data {
            if a.is_zero() {
                data.extend(std::iter::repeat_n(Scalar::ZERO, other.data.len()));
            } else {
                data.extend(other.data.iter().map(|b| a * b));
            }
        }
        Ok(Tensor { legs, data })
    }

    /// Reorders legs so that output leg `i` is input leg `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Tensor, TensorError> {
        let n = self.legs.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(TensorError::BadPermutation(perm.to_vec(), n));
        }
        let legs: Vec<Leg> = perm.iter().map(|&p| self.legs[p].clone()).collect();
        let in_strides = strides(&self.dims());
        let out_dims: Vec<usize> = legs.iter().map(|l| l.dim).collect();
        let mut data = Vec::with_capacity(self.data.len());
        let mut idx = vec![0; n];
        loop {
            let off: usize = idx.iter().zip(perm).map(|(i, &p)| i * in_strides[p]).sum();
            data.push(self.data[off].clone());
            if !next_index(&mut idx, &out_dims) {
                break;
            }
        }
        Ok(Tensor { legs, data })
    }

    /// Reorders legs to follow the given labels.
    pub fn permute_labels(&self, labels: &[&str]) -> Result<Tensor, TensorError> {
        let perm = labels.iter().map(|l| self.leg_index(l)).collect::<Result<Vec<_>, _>>()?;
        self.permute(&perm)
    }

    /// Contracts `pairs` of legs (label in `self`, label in `other`). The
    /// remaining legs of `self` come first, then those of `other`.
    pub fn contract(&self, other: &Tensor, pairs: &[(&str, &str)]) -> Result<Tensor, TensorError> {
        let mut ta = Vec::new();
        let mut ub = Vec::new();
        for (a, b) in pairs {
            let i = self.leg_index(a)?;
            let j = other.leg_index(b)?;
            if self.legs[i].dim != other.legs[j].dim {
                return Err(TensorError::DimensionMismatch(format!(
                    "`{a}` has dimension {} but `{b}` has {}",
                    self.legs[i].dim, other.legs[j].dim
                )));
            }
            if ta.contains(&i) || ub.contains(&j) {
                return Err(TensorError::DuplicateLabel(format!("{a}/{b}")));
            }
            ta.push(i);
            ub.push(j);
        }
        let free_t: Vec<usize> = (0..self.order()).filter(|i| !ta.contains(i)).collect();
        let free_u: Vec<usize> = (0..other.order()).filter(|j| !ub.contains(j)).collect();
        let mut legs: Vec<Leg> = free_t.iter().map(|&i| self.legs[i].clone()).collect();
        legs.extend(free_u.iter().map(|&j| other.legs[j].clone()));
        check_unique(&legs)?;

        // Reshape to matrices (free_t x paired) and (paired x free_u).
        let mut pt = free_t.clone();
        pt.extend(&ta);
        let mut pu = ub.clone();
        pu.extend(&free_u);
        let a = self.permute(&pt)?;
        let b = other.permute(&pu)?;
        let rows: usize = free_t.iter().map(|&i| self.legs[i].dim).product();
        let inner: usize = ta.iter().map(|&i| self.legs[i].dim).product();
        let cols: usize = free_u.iter().map(|&j| other.legs[j].dim).product();
        let mut data = vec![Scalar::ZERO; rows * cols];
        for r in 0..rows {
            let row = &mut data[r * cols..(r + 1) * cols];
            for k in 0..inner {
                let x = &a.data[r * inner + k];
                if x.is_zero() {
                    continue;
                }
                for (c, y) in b.data[k * cols..(k + 1) * cols].iter().enumerate() {
                    if !y.is_zero() {
                        row[c] += x * y;
                    }
                }
            }
        }
        Ok(Tensor { legs, data })
    }
}

impl fmt::Display for Tensor {
    /// Sparse listing `[i,j,..]=v` of nonzero entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz = self.nonzeros();
        if nz.is_empty() {
            return write!(f, "0");
        }
        for (k, (idx, v)) in nz.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let idx: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            write!(f, "[{}]={}", idx.join(","), v)?;
        }
        Ok(())
    }
}

/// A tensor whose first `n_in` legs are inputs and the rest outputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    tensor: Tensor,
    n_in: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: Vec<usize>,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.index.iter().map(|i| i.to_string()).collect();
        write!(f, "at ({}): lhs={} rhs={}", idx.join(","), self.lhs, self.rhs)
    }
}

impl LinearMap {
    pub fn new(tensor: Tensor, n_in: usize) -> Result<Self, TensorError> {
        if n_in > tensor.order() {
            return Err(TensorError::SignatureMismatch(format!(
                "{n_in} inputs on an order-{} tensor",
                tensor.order()
            )));
        }
        Ok(LinearMap { tensor, n_in })
    }

    /// Builds a map from a matrix `m[i][j]` = coefficient of output `j` on input `i`.
    pub fn from_rows(input: Leg, output: Leg, rows: &[Vec<Scalar>]) -> Result<Self, TensorError> {
        let data = rows.iter().flatten().cloned().collect();
        LinearMap::new(Tensor::new(vec![input, output], data)?, 1)
    }

    pub fn identity(input: Leg, output_label: &str) -> Self {
        let n = input.dim;
        let mut t = Tensor::zeros(vec![input, Leg::new(output_label, n)]);
        for i in 0..n {
            t.set(&[i, i], Scalar::ONE);
        }
        LinearMap { tensor: t, n_in: 1 }
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn into_tensor(self) -> Tensor {
        self.tensor
    }

    pub fn inputs(&self) -> &[Leg] {
        &self.tensor.legs[..self.n_in]
    }

    pub fn outputs(&self) -> &[Leg] {
        &self.tensor.legs[self.n_in..]
    }

    pub fn in_dim(&self) -> usize {
        self.inputs().iter().map(|l| l.dim).product()
    }

    pub fn out_dim(&self) -> usize {
        self.outputs().iter().map(|l| l.dim).product()
    }

    /// Flattened matrix, rows indexed by inputs and columns by outputs.
    pub fn to_matrix(&self) -> Vec<Vec<Scalar>> {
        let c = self.out_dim();
        self.tensor.data.chunks(c).map(|r| r.to_vec()).collect()
    }

    /// `other ∘ self`: outputs of `self` must match inputs of `other`.
    pub fn then(&self, other: &LinearMap) -> Result<LinearMap, TensorError> {
        if self.outputs().len() != other.inputs().len()
            || self.outputs().iter().zip(other.inputs()).any(|(a, b)| a != b)
        {
            return Err(TensorError::SignatureMismatch(format!(
                "outputs {:?} do not match inputs {:?}",
                self.outputs(),
                other.inputs()
            )));
        }
        let labels_a: Vec<String> = self.outputs().iter().map(|l| l.label.clone()).collect();
        let renamed: Vec<String> = labels_a.iter().map(|l| format!("{l}\u{0}")).collect();
        let mut b = other.tensor.clone();
        for (leg, r) in b.legs.iter_mut().zip(&renamed) {
            leg.label = r.clone();
        }
        let pairs: Vec<(&str, &str)> =
            labels_a.iter().zip(&renamed).map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let t = self.tensor.contract(&b, &pairs)?;
        Ok(LinearMap { tensor: t, n_in: self.n_in })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap, TensorError> {
        other.then(self)
    }

    /// Applies the map to a flattened input vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, TensorError> {
        if v.len() != self.in_dim() {
            return Err(TensorError::DimensionMismatch(format!(
                "vector of length {} for input dimension {}",
                v.len(),
                self.in_dim()
            )));
        }
        let c = self.out_dim();
        let mut out = vec![Scalar::ZERO; c];
        for (x, row) in v.iter().zip(self.tensor.data.chunks(c)) {
            if x.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(row) {
                if !y.is_zero() {
                    *o += x * y;
                }
            }
        }
        Ok(out)
    }
}

/// Exact entrywise comparison of two tensors with identical shapes. On
/// failure the first differing multi-index in row-major order is returned.
pub fn tensors_equal(f: &Tensor, g: &Tensor) -> Result<Option<Mismatch>, TensorError> {
    if f.dims() != g.dims() {
        return Err(TensorError::SignatureMismatch(format!("shapes {:?} and {:?}", f.dims(), g.dims())));
    }
    let dims = f.dims();
    let mut idx = vec![0; dims.len()];
    for (a, b) in f.data.iter().zip(&g.data) {
        if a != b {
            return Ok(Some(Mismatch { index: idx, lhs: a.clone(), rhs: b.clone() }));
        }
        next_index(&mut idx, &dims);
    }
    Ok(None)
}

/// Exact equality of linear maps. Inputs precede outputs in the witness
/// index, so the reported failure is the smallest failing input tuple.
pub fn map_equal(f: &LinearMap, g: &LinearMap) -> Result<Option<Mismatch>, TensorError> {
    if f.n_in != g.n_in {
        return Err(TensorError::SignatureMismatch(format!("{} vs {} inputs", f.n_in, g.n_in)));
    }
    tensors_equal(&f.tensor, &g.tensor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::new(n, d)
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn identity_contracts_to_vector() {
        let id = LinearMap::identity(Leg::new("in", 2), "out");
        let v = Tensor::vector("x", ints(&[1, 0]));
        let r = id.tensor().contract(&v, &[("in", "x")]).unwrap();
        assert_eq!(r.data(), &ints(&[1, 0])[..]);
        assert_eq!(r.legs()[0].label, "out");
    }

    #[test]
    fn full_self_contraction_is_dot_product() {
        let t = Tensor::vector("a", vec![q(1, 2), q(1, 3)]);
        let u = t.clone().relabel(&["b"]).unwrap();
        let r = t.contract(&u, &[("a", "b")]).unwrap();
        assert_eq!(r.order(), 0);
        assert_eq!(r.data()[0], q(13, 36));
    }

    #[test]
    fn kron_of_basis_vectors() {
        let a = Tensor::vector("a", ints(&[1, 0]));
        let b = Tensor::vector("b", ints(&[0, 1]));
        let k = a.kron(&b).unwrap();
        assert_eq!(k.dims(), vec![2, 2]);
        assert_eq!(k.nonzeros(), vec![(vec![0, 1], Scalar::ONE)]);
        assert!(a.kron(&a).is_err());
    }

    #[test]
    fn permute_cycles_factors() {
        // x⊗y⊗z with x=e0, y=e1, z=e2 in a 3-dim space.
        let x = Tensor::basis_vector("1", 3, 0);
        let y = Tensor::basis_vector("2", 3, 1);
        let z = Tensor::basis_vector("3", 3, 2);
        let xyz = x.kron(&y).unwrap().kron(&z).unwrap();
        let zxy = xyz.permute(&[2, 0, 1]).unwrap();
        assert_eq!(zxy.nonzeros(), vec![(vec![2, 0, 1], Scalar::ONE)]);
        assert!(xyz.permute(&[0, 0, 1]).is_err());
        assert!(xyz.permute(&[0, 1]).is_err());
    }

    #[test]
    fn contract_reports_errors() {
        let a = Tensor::vector("a", ints(&[1, 2]));
        let b = Tensor::vector("b", ints(&[1, 2, 3]));
        assert!(matches!(a.contract(&b, &[("a", "b")]), Err(TensorError::DimensionMismatch(_))));
        assert!(matches!(a.contract(&b, &[("z", "b")]), Err(TensorError::UnknownLeg(_))));
    }

    #[test]
    fn map_equal_reports_first_difference() {
        let id = LinearMap::identity(Leg::new("in", 2), "out");
        assert_eq!(map_equal(&id, &id).unwrap(), None);
        let mut t = id.tensor().clone();
        t.set(&[0, 0], Scalar::ONE + Scalar::new(1, 1_000_000_000));
        let perturbed = LinearMap::new(t, 1).unwrap();
        let m = map_equal(&id, &perturbed).unwrap().unwrap();
        assert_eq!(m.index, vec![0, 0]);
        assert_eq!(m.lhs, Scalar::ONE);
    }

    #[test]
    fn composition_and_application() {
        let swap = LinearMap::from_rows(
            Leg::new("i", 2),
            Leg::new("o", 2),
            &[ints(&[0, 1]), ints(&[1, 0])],
        )
        .unwrap();
        let sq = swap.then(&LinearMap::new(swap.tensor().clone().relabel(&["o", "p"]).unwrap(), 1).unwrap());
        let sq = sq.unwrap();
        assert_eq!(sq.to_matrix(), vec![ints(&[1, 0]), ints(&[0, 1])]);
        assert_eq!(swap.apply(&ints(&[3, 5])).unwrap(), ints(&[5, 3]));
    }

    fn small_tensor(dims: Vec<usize>) -> impl Strategy<Value = Tensor> {
        let n: usize = dims.iter().product();
        proptest::collection::vec(-3i64..4, n).prop_map(move |v| {
            let legs = dims.iter().enumerate().map(|(i, &d)| Leg::new(format!("l{i}"), d)).collect();
            Tensor::new(legs, ints(&v)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn permute_round_trips(t in small_tensor(vec![2, 3, 2, 1]), perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
            let mut inv = vec![0; perm.len()];
            for (i, &p) in perm.iter().enumerate() {
                inv[p] = i;
            }
            prop_assert_eq!(t.permute(&perm).unwrap().permute(&inv).unwrap(), t);
        }

        #[test]
        fn contraction_commutes_with_kron(
            a in small_tensor(vec![2]),
            b in small_tensor(vec![3, 2]),
            c in small_tensor(vec![2, 2]),
        ) {
            let a = a.relabel(&["a"]).unwrap();
            let b = b.relabel(&["b0", "b1"]).unwrap();
            let c = c.relabel(&["c0", "c1"]).unwrap();
            let lhs = a.kron(&b).unwrap().contract(&c, &[("b1", "c0")]).unwrap();
            let rhs = a.kron(&b.contract(&c, &[("b1", "c0")]).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
