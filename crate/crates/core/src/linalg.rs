//! Exact Gaussian elimination over the rationals.

use crate::scalar::Scalar;
use crate::tensor::LinearMap;

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{x : A x = 0}` where `A` has `ncols` columns. Each basis vector
/// has a 1 at one free column and 0 at the other free columns, so the basis is
/// determined by the row space alone.
pub fn kernel(a: &Matrix, ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m: Matrix = a.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    for row in &m {
        assert_eq!(row.len(), ncols, "row length");
    }
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::ZERO; ncols];
            v[f] = Scalar::ONE;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&m[r][f];
            }
            v
        })
        .collect()
}

/// Basis of the kernel of a linear map, as flattened input vectors.
pub fn nullspace(map: &LinearMap) -> Vec<Vec<Scalar>> {
    let rows = map.to_matrix();
    let n = map.in_dim();
    let m = map.out_dim();
    // Equation j: sum_i x_i M[i][j] = 0.
    let a: Matrix = (0..m).map(|j| (0..n).map(|i| rows[i][j].clone()).collect()).collect();
    kernel(&a, n)
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::ONE } else { Scalar::ZERO }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "inner dimension");
            let mut out = vec![Scalar::ZERO; cols];
            for (x, brow) in row.iter().zip(b) {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(brow) {
                    if !y.is_zero() {
                        *o += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut aug: Matrix = a
        .iter()
        .zip(identity(n))
        .map(|(r, e)| {
            assert_eq!(r.len(), n, "square matrix");
            r.iter().cloned().chain(e).collect()
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Coordinates of `v` in the span of `basis` (vectors as rows), if it lies there.
pub fn coordinates(basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    let k = basis.len();
    let n = v.len();
    // Columns: basis vectors, then v.
    let mut m: Matrix = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).chain(std::iter::once(v[i].clone())).collect())
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&k) || pivots.len() < k {
        return None;
    }
    Some((0..k).map(|r| m[r][k].clone()).collect())
}
