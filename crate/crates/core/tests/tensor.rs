use proptest::prelude::*;
use quasihopf_core::linalg::{kernel, mat_mul, nullspace, rank, Matrix};
use quasihopf_core::{map_equal, Leg, LinearMap, Scalar, Tensor};

fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| q(n, d))
}

/// A tensor with the given leg labels and dimensions 1..=3 each.
fn tensor_with(labels: &'static [&'static str]) -> impl Strategy<Value = Tensor> {
    prop::collection::vec(1usize..=3, labels.len()).prop_flat_map(move |dims| {
        let n: usize = dims.iter().product();
        prop::collection::vec(rational(), n).prop_map(move |data| {
            let legs: Vec<(&str, usize)> = labels.iter().copied().zip(dims.iter().copied()).collect();
            Tensor::from_dims(&legs, data).unwrap()
        })
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    // Small entries with many zeros so kernels are often nontrivial.
    let entry = prop_oneof![3 => Just(Scalar::ZERO), 2 => (-3i64..4).prop_map(Scalar::from_int), 1 => rational()];
    prop::collection::vec(prop::collection::vec(entry, cols), rows)
}

#[test]
fn identity_contraction_fixes_a_vector() {
    let id = Tensor::from_dims(&[("i", 2), ("o", 2)], vec![q(1, 1), q(0, 1), q(0, 1), q(1, 1)]).unwrap();
    let v = Tensor::vector("v", vec![q(1, 1), q(0, 1)]);
    let out = id.contract(&v, &[("i", "v")]).unwrap();
    assert_eq!(out.data(), &[q(1, 1), q(0, 1)]);
}

#[test]
fn comultiplication_of_g_in_kz2() {
    let a = quasihopf_core::instances::group_algebra_z2();
    let delta = a.base.comult.relabel(&["h", "l", "r"]).unwrap();
    let g = Tensor::basis_vector("x", 2, 1);
    let out = delta.contract(&g, &[("h", "x")]).unwrap();
    assert_eq!(out.dims(), vec![2, 2]);
    assert_eq!(out.nonzeros(), vec![(vec![1, 1], Scalar::ONE)]);
}

#[test]
fn self_contraction_is_the_dot_product() {
    let t = Tensor::vector("a", vec![q(1, 2), q(1, 3)]);
    let u = t.clone().relabel(&["b"]).unwrap();
    let s = t.contract(&u, &[("a", "b")]).unwrap();
    assert_eq!(s.data(), &[q(13, 36)]);
}

#[test]
fn kron_examples() {
    let a = quasihopf_core::instances::h2_quasi();
    let ab = a.alpha.kron(&a.beta.clone().relabel(&["b"]).unwrap()).unwrap();
    // α = g, β = 1 in H(2): α⊗β = g⊗1.
    assert_eq!(ab.nonzeros(), vec![(vec![1, 0], Scalar::ONE)]);

    let e0 = Tensor::basis_vector("x", 2, 0);
    let e1 = Tensor::basis_vector("y", 2, 1);
    assert_eq!(e0.kron(&e1).unwrap().nonzeros(), vec![(vec![0, 1], Scalar::ONE)]);
}

#[test]
fn permute_moves_the_last_factor_to_the_front() {
    let x = Tensor::basis_vector("x", 2, 0);
    let y = Tensor::basis_vector("y", 3, 1);
    let z = Tensor::basis_vector("z", 4, 3);
    let xyz = x.kron(&y).unwrap().kron(&z).unwrap();
    let zxy = xyz.permute(&[2, 0, 1]).unwrap();
    assert_eq!(zxy.dims(), vec![4, 2, 3]);
    assert_eq!(zxy.nonzeros(), vec![(vec![3, 0, 1], Scalar::ONE)]);
}

#[test]
fn nullspace_examples() {
    let id = LinearMap::identity(Leg::new("i", 2), "o");
    assert!(nullspace(&id).is_empty());
    let zero = LinearMap::from_rows(Leg::new("i", 3), Leg::new("o", 2), &vec![vec![Scalar::ZERO; 2]; 3]).unwrap();
    assert_eq!(nullspace(&zero).len(), 3);
}

#[test]
fn coinvariants_of_kz2_are_spanned_by_the_unit() {
    // m ↦ Δ(m) − m⊗1 on kZ₂, as a map k² → k⁴ (rows are inputs).
    let a = quasihopf_core::instances::group_algebra_z2();
    let mut rows = vec![vec![Scalar::ZERO; 4]; 2];
    for (i, row) in rows.iter_mut().enumerate() {
        for j in 0..2 {
            for k in 0..2 {
                row[2 * j + k] = a.base.comult.get(&[i, j, k]).clone();
            }
        }
        row[2 * i] -= &Scalar::ONE;
    }
    let f = LinearMap::from_rows(Leg::new("m", 2), Leg::new("mb", 4), &rows).unwrap();
    assert_eq!(nullspace(&f), vec![vec![Scalar::ONE, Scalar::ZERO]]);
}

#[test]
fn map_equal_finds_a_tiny_difference() {
    let id = LinearMap::identity(Leg::new("i", 2), "o");
    assert!(map_equal(&id, &id).unwrap().is_none());
    let eps = Scalar::new(1, 1_000_000_000);
    let rows = vec![vec![&Scalar::ONE + &eps, Scalar::ZERO], vec![Scalar::ZERO, Scalar::ONE]];
    let bumped = LinearMap::from_rows(Leg::new("i", 2), Leg::new("o", 2), &rows).unwrap();
    let w = map_equal(&id, &bumped).unwrap().expect("differs");
    assert_eq!(w.index, vec![0, 0]);
    assert_eq!(w.rhs, &Scalar::ONE + &eps);
}

proptest! {
    #[test]
    fn scalars_form_a_field(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), Scalar::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::ONE);
        }
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn permutation_round_trips(t in tensor_with(&["a", "b", "c"]), k in 0usize..6) {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let p = perms[k];
        let mut inv = [0; 3];
        for (i, &pi) in p.iter().enumerate() {
            inv[pi] = i;
        }
        prop_assert_eq!(t.permute(&p).unwrap().permute(&inv).unwrap(), t);
    }

    #[test]
    fn contraction_commutes_with_kron(
        a in tensor_with(&["a"]),
        b in tensor_with(&["b", "c"]),
        u in tensor_with(&["x", "y"]),
    ) {
        // Reshape `u` so that its first leg matches leg `c` of `b`.
        let cdim = b.dims()[1];
        let udims = u.dims();
        let data: Vec<Scalar> = (0..cdim * udims[1]).map(|i| u.data()[i % u.len()].clone()).collect();
        let u = Tensor::from_dims(&[("x", cdim), ("y", udims[1])], data).unwrap();

        let lhs = a.kron(&b).unwrap().contract(&u, &[("c", "x")]).unwrap();
        let rhs = a.kron(&b.contract(&u, &[("c", "x")]).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_vectors_are_independent_solutions(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))) {
        let ncols = m[0].len();
        let ker = kernel(&m, ncols);
        for v in &ker {
            for row in &m {
                let s: Scalar = row.iter().zip(v).map(|(x, y)| x * y).sum();
                prop_assert!(s.is_zero());
            }
        }
        prop_assert_eq!(ker.len() + rank(&m), ncols);
        if !ker.is_empty() {
            prop_assert_eq!(rank(&ker), ker.len());
        }
    }

    #[test]
    fn composition_matches_matrix_product(
        f in matrix(2, 3),
        g in matrix(3, 2),
    ) {
        let lf = LinearMap::from_rows(Leg::new("i", 2), Leg::new("m", 3), &f).unwrap();
        let lg = LinearMap::from_rows(Leg::new("m", 3), Leg::new("o", 2), &g).unwrap();
        prop_assert_eq!(lf.then(&lg).unwrap().to_matrix(), mat_mul(&f, &g));
    }
}
