//! Independent reference computations checked against the engine.
//!
//! Each oracle works straight from the structure constants with its own
//! evaluation code, so a shared bug in the engine's kernel refinement or
//! chain code cannot make both sides agree by accident.

use lderlab::bracket::{enumerate_arrangements, BracketTree};
use lderlab::catalog;
use lderlab::leibniz::{der_space, f_lder_space, left_lder_space, lder_space};
use lderlab::linalg::{det_and_inverse, nullspace, Matrix, Subspace, Vector};
use lderlab::{Algebra, ChainKind, Scalar};

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn mul(a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vector {
    let m = a.dim();
    let mut out = vec![q(0); m];
    for i in 0..m {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..m {
            if y[j].is_zero() {
                continue;
            }
            let c = &x[i] * &y[j];
            for (k, v) in a.product(i, j).iter().enumerate() {
                out[k] = &out[k] + &(&c * v);
            }
        }
    }
    out
}

fn eval(a: &Algebra, t: &BracketTree, args: &[Vector]) -> Vector {
    match t {
        BracketTree::Leaf(i) => args[i - 1].clone(),
        BracketTree::Node(l, r) => mul(a, &eval(a, l, args), &eval(a, r, args)),
    }
}

fn unit(m: usize, i: usize) -> Vector {
    (0..m).map(|k| if k == i { q(1) } else { q(0) }).collect()
}

fn tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..m).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Nullspace of the full linear system `d(f(e)) = sum_j f(.., d e_j, ..)`
/// in the `m^2` unknowns `d[k][l]`, one row per basis tuple and output
/// coordinate.
fn lder_oracle(a: &Algebra, f: &BracketTree) -> Subspace {
    let m = a.dim();
    let n = f.leaf_count();
    let mut rows = Vec::new();
    for idx in tuples(m, n) {
        let args: Vec<Vector> = idx.iter().map(|&i| unit(m, i)).collect();
        let p = eval(a, f, &args);
        let mut inserted = Vec::new();
        for j in 0..n {
            for k in 0..m {
                let mut xs = args.clone();
                xs[j] = unit(m, k);
                inserted.push((idx[j], k, eval(a, f, &xs)));
            }
        }
        for r in 0..m {
            let mut row = vec![q(0); m * m];
            for l in 0..m {
                row[r * m + l] = &row[r * m + l] + &p[l];
            }
            for (col, k, v) in &inserted {
                row[k * m + col] = &row[k * m + col] - &v[r];
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(m * m);
    }
    nullspace(&Matrix::from_rows(m * m, rows).unwrap())
}

/// `A^n` as the span of every bracketed product of `n` basis elements.
fn power_oracle(a: &Algebra, n: usize) -> usize {
    let m = a.dim();
    if n == 1 {
        return m;
    }
    let mut span = Subspace::zero(m);
    for t in enumerate_arrangements(n).unwrap() {
        for idx in tuples(m, n) {
            let args: Vec<Vector> = idx.iter().map(|&i| unit(m, i)).collect();
            span.insert(eval(a, &t, &args)).unwrap();
        }
    }
    span.dim()
}

/// `A^<n>` as the span of left-normed products `(..(e e) ..) e`.
fn right_power_oracle(a: &Algebra, n: usize) -> usize {
    let m = a.dim();
    if n == 1 {
        return m;
    }
    let t = BracketTree::left_comb(n).unwrap();
    let mut span = Subspace::zero(m);
    for idx in tuples(m, n) {
        let args: Vec<Vector> = idx.iter().map(|&i| unit(m, i)).collect();
        span.insert(eval(a, &t, &args)).unwrap();
    }
    span.dim()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut r = p.clone();
            r.insert(pos, n - 1);
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((r, sign));
        }
    }
    out
}

fn leibniz_det(m: &Matrix) -> Scalar {
    permutations(m.rows())
        .into_iter()
        .map(|(p, s)| {
            let mut term = q(s);
            for (i, &j) in p.iter().enumerate() {
                term = &term * m.get(i, j);
            }
            term
        })
        .fold(q(0), |acc, t| &acc + &t)
}

fn small_catalog() -> Vec<Algebra> {
    vec![
        catalog::dorofeev_algebra(),
        catalog::heisenberg(),
        catalog::sl2(),
        catalog::mat2(),
        catalog::plus_mat2(),
        catalog::quasi_mat2(),
        catalog::abelian(3),
        catalog::sl2_semidirect_v2(),
        catalog::zinbiel2(),
        catalog::zinbiel3(),
        catalog::jordan_nil3(),
    ]
}

#[test]
fn lder_spaces_match_constraint_nullspace() {
    for a in small_catalog() {
        for n in 2..=4 {
            for t in enumerate_arrangements(n).unwrap() {
                assert_eq!(f_lder_space(&a, &t).unwrap().space, lder_oracle(&a, &t), "{} {t}", a.name());
            }
        }
    }
    for a in [catalog::m7(), catalog::cayley_dickson_split(), catalog::jordan_mixed()] {
        for n in 2..=3 {
            for t in enumerate_arrangements(n).unwrap() {
                assert_eq!(f_lder_space(&a, &t).unwrap().space, lder_oracle(&a, &t), "{} {t}", a.name());
            }
        }
    }
}

#[test]
fn lder_space_is_intersection_over_arrangements() {
    for a in small_catalog() {
        for n in 2..=4 {
            let mut meet = Subspace::full(a.dim() * a.dim());
            for t in enumerate_arrangements(n).unwrap() {
                meet = meet.intersect(&lder_oracle(&a, &t)).unwrap();
            }
            assert_eq!(lder_space(&a, n).unwrap().space, meet, "{} order {n}", a.name());
        }
    }
}

#[test]
fn chains_match_brute_force_spans() {
    for a in small_catalog() {
        let power = a.chain(ChainKind::Power).unwrap();
        let right = a.chain(ChainKind::RightPower).unwrap();
        for (k, &d) in power.dims.iter().enumerate().take(4) {
            assert_eq!(d, power_oracle(&a, k + 1), "{} A^{}", a.name(), k + 1);
        }
        for (k, &d) in right.dims.iter().enumerate().take(5) {
            assert_eq!(d, right_power_oracle(&a, k + 1), "{} A<{}>", a.name(), k + 1);
        }
    }
}

// Frozen from the oracles above.
#[test]
fn frozen_chain_dims() {
    let d = catalog::dorofeev_algebra();
    assert_eq!((1..=4).map(|n| power_oracle(&d, n)).collect::<Vec<_>>(), vec![5, 3, 3, 3]);
    assert_eq!((1..=4).map(|n| right_power_oracle(&d, n)).collect::<Vec<_>>(), vec![5, 3, 1, 0]);
    assert_eq!(d.chain(ChainKind::Power).unwrap().dims, vec![5, 3, 3]);
    assert_eq!(d.chain(ChainKind::RightPower).unwrap().dims, vec![5, 3, 1, 0]);

    let z = catalog::zinbiel3();
    assert_eq!((1..=4).map(|n| power_oracle(&z, n)).collect::<Vec<_>>(), vec![3, 2, 1, 0]);
    let h = catalog::heisenberg();
    assert_eq!((1..=3).map(|n| power_oracle(&h, n)).collect::<Vec<_>>(), vec![3, 1, 0]);
}

#[test]
fn frozen_space_dims() {
    let d = catalog::dorofeev_algebra();
    let left: Vec<usize> = (2..=4).map(|n| lder_oracle(&d, &BracketTree::left_comb(n).unwrap()).dim()).collect();
    assert_eq!(left, vec![7, 12, 25]);
    assert_eq!(
        (2..=4).map(|n| left_lder_space(&d, n).unwrap().dim()).collect::<Vec<_>>(),
        left
    );
    assert_eq!(lder_oracle(&catalog::m7(), &BracketTree::left_comb(2).unwrap()).dim(), 14);
    assert_eq!(der_space(&catalog::m7()).dim(), 14);
    assert_eq!(der_space(&catalog::cayley_dickson_split()).dim(), 14);
    assert_eq!(der_space(&catalog::sl2()).dim(), 3);
    assert_eq!(der_space(&catalog::sl2_semidirect_v2()).dim(), 6);
    assert_eq!(der_space(&catalog::heisenberg()).dim(), 6);
}

#[test]
fn determinants_match_permutation_expansion() {
    let phi = catalog::dorofeev_phi();
    assert_eq!(leibniz_det(&phi), q(-6));
    assert_eq!(det_and_inverse(&phi).unwrap().0, q(-6));
    let samples = [
        Matrix::from_i64(&[&[2, -1, 0, 3], &[1, 1, 4, -2], &[0, 5, -3, 1], &[7, 0, 2, 2]]),
        Matrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]),
        catalog::filippov_derivation(3).unwrap(),
        catalog::filippov_derivation(4).unwrap(),
        catalog::williams_corrected(6),
        catalog::williams_original(5),
    ];
    for m in &samples {
        let (det, inv) = det_and_inverse(m).unwrap();
        assert_eq!(det, leibniz_det(m));
        assert_eq!(inv.is_some(), !det.is_zero());
    }
}

/// The n-ary derivation condition for a diagonal map on `[x_1..x_n] = x_2`
/// reduces to `sum_{j != 2} lambda_j = 0`.
#[test]
fn williams_diagonal_condition() {
    for n in 3..=6 {
        let b = catalog::williams_algebra(n).unwrap();
        for (label, d) in [("corrected", catalog::williams_corrected(n)), ("original", catalog::williams_original(n))] {
            let off: Scalar = (0..n).filter(|&j| j != 1).map(|j| d.get(j, j).clone()).sum();
            assert_eq!(b.is_nary_derivation(&d).unwrap(), off.is_zero(), "n = {n} {label}");
        }
        assert_eq!(b.is_nary_derivation(&catalog::williams_corrected(n)).unwrap(), n % 2 == 0);
        assert_eq!(b.is_nary_derivation(&catalog::williams_original(n)).unwrap(), n % 2 == 1);
    }
}

/// Derivations of the simple Filippov algebra form an orthogonal Lie
/// algebra of dimension `(n+1)n/2`.
#[test]
fn filippov_derivation_dimension() {
    for n in 3..=5 {
        let b = catalog::filippov_simple_algebra(n).unwrap();
        assert_eq!(b.nary_derivation_space().dim(), (n + 1) * n / 2);
    }
}

#[test]
fn split_octonions_are_alternative_with_multiplicative_norm() {
    let o = catalog::cayley_dickson_split();
    let norm = |x: &[Scalar]| -> Scalar {
        let conj: Vector = x.iter().enumerate().map(|(i, c)| if i == 0 { c.clone() } else { -c }).collect();
        mul(&o, x, &conj)[0].clone()
    };
    let xs: Vec<Vector> = [[1, 2, 0, -1, 3, 0, 1, -2], [0, 1, -1, 2, 0, 1, 1, 0], [2, 0, 0, 1, -1, 1, 0, 3]]
        .iter()
        .map(|r| r.iter().map(|&v| q(v)).collect())
        .collect();
    for x in &xs {
        for y in &xs {
            assert_eq!(norm(&mul(&o, x, y)), &norm(x) * &norm(y));
            let left = mul(&o, &mul(&o, x, x), y);
            let right = mul(&o, x, &mul(&o, x, y));
            assert_eq!(left, right);
        }
    }
    // the last doubling parameter is +1, so the norm is indefinite
    assert_eq!(norm(&unit(8, 4)), q(-1));
    assert_eq!(norm(&unit(8, 1)), q(1));
}
