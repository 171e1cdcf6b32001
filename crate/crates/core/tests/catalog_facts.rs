use lderlab::catalog::{self, Fact, FactSource};
use lderlab::linalg::{add_vectors, det_and_inverse, is_zero_vector, Matrix, Subspace};
use lderlab::varieties::satisfies;
use lderlab::{Algebra, Scalar, VarietyTag};

#[test]
fn every_known_fact_reverifies() {
    for entry in catalog::all_entries() {
        for fact in &entry.known_facts {
            assert!(entry.verify_fact(&fact.fact).unwrap(), "{}: {:?}", entry.name, fact);
        }
    }
}

#[test]
fn discrepancies_are_published_claims() {
    let ids: Vec<String> = catalog::all_entries()
        .iter()
        .flat_map(|e| e.discrepancies().cloned().collect::<Vec<_>>())
        .map(|f| {
            assert_eq!(f.source, FactSource::Published);
            match f.fact {
                Fact::Discrepancy { id, .. } => id,
                _ => unreachable!(),
            }
        })
        .collect();
    for id in ["dorofeev-right-index", "dorofeev-alpha-bc", "williams-parity", "filippov-odd-dimension"] {
        assert!(ids.iter().any(|i| i == id), "{id}");
    }
}

#[test]
fn dorofeev_entries() {
    let d = catalog::dorofeev_algebra();
    let e = |i| d.basis_vector(i);
    let mut minus_c = vec![Scalar::zero(); 5];
    minus_c[2] = Scalar::from_int(-1);
    assert_eq!(d.multiply(&e(0), &e(4)).unwrap(), minus_c);
    assert_eq!(d.multiply(&e(1), &e(2)).unwrap(), e(4));
    assert!(is_zero_vector(&d.multiply(&e(2), &e(0)).unwrap()));
    let (det, _) = det_and_inverse(&catalog::dorofeev_phi()).unwrap();
    assert_eq!(det, Scalar::from_int(-6));
}

fn bracket(a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    a.multiply(x, y).unwrap()
}

fn r(a: &Algebra, x: &[Scalar]) -> Matrix {
    a.right_op(x).unwrap()
}

/// Operators act on the right, so `R_x R_y` is "first `R_x`, then `R_y`"
/// and the commutator of matrices comes out reversed.
fn pc(x: &Matrix, y: &Matrix) -> Matrix {
    Matrix::commutator(y, x)
}

fn malcev_catalog() -> Vec<Algebra> {
    [catalog::m7(), catalog::sl2(), catalog::heisenberg(), catalog::sl2_semidirect_v2(), catalog::abelian(3)]
        .into_iter()
        .inspect(|a| assert!(satisfies(a, VarietyTag::Malcev).holds, "{}", a.name()))
        .collect()
}

#[test]
fn malcev_operator_identity() {
    for a in malcev_catalog() {
        let m = a.dim();
        let e = |i| a.basis_vector(i);
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let lhs = r(&a, &bracket(&a, &bracket(&a, &x, &y), &z)).scale(&Scalar::from_int(2));
                    let rhs = &(&pc(&pc(&r(&a, &x), &r(&a, &y)), &r(&a, &z)) + &pc(&r(&a, &y), &r(&a, &bracket(&a, &z, &x))))
                        + &pc(&r(&a, &x), &r(&a, &bracket(&a, &y, &z)));
                    assert_eq!(lhs, rhs, "{} ({i},{j},{k})", a.name());
                }
            }
        }
    }
}

#[test]
fn killing_form_is_symmetric_and_invariant() {
    for a in malcev_catalog() {
        let chi = a.killing_form();
        assert!(chi.is_symmetric());
        let m = a.dim();
        let e = |i| a.basis_vector(i);
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    assert_eq!(
                        chi.eval(&bracket(&a, &e(i), &e(j)), &e(k)),
                        chi.eval(&e(i), &bracket(&a, &e(j), &e(k))),
                        "{}",
                        a.name()
                    );
                }
            }
        }
    }
    assert!(catalog::m7().killing_form().is_nondegenerate());
    assert!(catalog::m7().lie_center().unwrap().is_zero());
}

/// `D(x, y) = [R_x, R_y] + R_[x,y]` is a derivation.
#[test]
fn sagle_maps_are_derivations() {
    for a in malcev_catalog() {
        let der = lderlab::leibniz::der_space(&a);
        let m = a.dim();
        let e = |i| a.basis_vector(i);
        for i in 0..m {
            for j in 0..m {
                let d = &pc(&r(&a, &e(i)), &r(&a, &e(j))) + &r(&a, &bracket(&a, &e(i), &e(j)));
                assert!(der.contains(&d).unwrap(), "{} D({i},{j})", a.name());
            }
        }
    }
}

/// `T(M) = R(M) + [R(M), R(M)]` is closed under commutators.
#[test]
fn right_multiplications_generate_a_closed_space() {
    for a in malcev_catalog() {
        let m = a.dim();
        let rs: Vec<Matrix> = (0..m).map(|i| a.right_basis_op(i)).collect();
        let mut gens: Vec<Vec<Scalar>> = rs.iter().map(Matrix::flatten).collect();
        for x in &rs {
            for y in &rs {
                gens.push(Matrix::commutator(x, y).flatten());
            }
        }
        let t = Subspace::span(m * m, gens).unwrap();
        let basis: Vec<Matrix> = t.basis().iter().map(|v| Matrix::from_flat(m, v).unwrap()).collect();
        for x in &basis {
            for y in &basis {
                assert!(t.contains(&Matrix::commutator(x, y).flatten()).unwrap(), "{}", a.name());
            }
        }
        if a.name() == "m7" {
            // T(M7) = Der(M7) + R(M7), dimension 14 + 7
            assert_eq!(t.dim(), 21);
        }
    }
}

#[test]
fn m7_facts() {
    let m7 = catalog::m7();
    assert!(m7.is_anticommutative());
    assert!(satisfies(&m7, VarietyTag::Malcev).holds);
    let lie = satisfies(&m7, VarietyTag::Lie);
    assert!(!lie.holds);
    assert!(lie.witness.is_some());
    let s = add_vectors(&m7.basis_vector(0), &m7.basis_vector(3));
    assert_eq!(m7.multiply(&s, &s).unwrap(), vec![Scalar::zero(); 7]);
}
