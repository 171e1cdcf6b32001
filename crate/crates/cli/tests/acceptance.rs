//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p lderlab-cli --test acceptance -- --nocapture`
//! to see the lines.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lderlab::algebra::operator_subspace_product;
use lderlab::bracket::enumerate_arrangements;
use lderlab::catalog::{self, Fact, NilpotentClass};
use lderlab::leibniz::{
    check_commutator_closure, check_order_monotonicity, construct_invertible_lder, contains_invertible, der_space,
    eigenspace_product_check, f_lder_space, is_f_leibniz_derivation, lder_space, left_lder_space,
    radical_invariance_check, verify_leibniz_rule, Certificate, DerivationSpace,
};
use lderlab::linalg::{det_and_inverse, unit_vector};
use lderlab::varieties::{minus_algebra, mutation, plus_algebra, satisfies};
use lderlab::{Algebra, ChainKind, Matrix, NAryAlgebra, Scalar, SearchConfig, Subspace, VarietyTag};

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.ok = false;
            self.notes.push(what.into());
        }
    }
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn is_invertible(m: &Matrix) -> bool {
    det_and_inverse(m).map(|(d, _)| !d.is_zero()).unwrap_or(false)
}

fn catalog_binary() -> Vec<Algebra> {
    catalog::standard_entries().iter().filter_map(|e| e.binary().cloned()).collect()
}

fn random_table(rng: &mut ChaCha8Rng, m: usize, name: String) -> Algebra {
    let table = (0..m)
        .map(|_| {
            (0..m)
                .map(|_| (0..m).map(|_| if rng.gen_bool(0.3) { int(rng.gen_range(-1..=1)) } else { Scalar::zero() }).collect())
                .collect()
        })
        .collect();
    Algebra::new(name, (1..=m).map(|k| format!("e{k}")).collect(), table).unwrap()
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let entry = catalog::dorofeev();
    let a = entry.binary().unwrap();
    o.check(satisfies(a, VarietyTag::RightAlternative).holds, "not right alternative");
    let power = a.chain(ChainKind::Power).unwrap();
    o.check(power.dims == [5, 3, 3] && power.index.is_none(), format!("power dims {:?}", power.dims));
    let right = a.chain(ChainKind::RightPower).unwrap();
    o.check(right.dims == [5, 3, 1, 0], format!("right-power dims {:?}", right.dims));
    let der = der_space(a);
    o.check(der.dim() == 7, format!("dim Der {}", der.dim()));
    let phi = catalog::dorofeev_phi();
    let (det, _) = det_and_inverse(&phi).unwrap();
    o.check(der.contains(&phi).unwrap() && det == int(-6), format!("phi det {det}"));
    let l4 = left_lder_space(a, 4).unwrap();
    let l3 = left_lder_space(a, 3).unwrap();
    o.check(l4.is_full() && l4.dim() == 25, format!("left order 4 dim {}", l4.dim()));
    o.check(!l3.is_full(), "left order 3 is End");
    let flagged = entry.discrepancies().any(|f| {
        matches!(&f.fact, Fact::Discrepancy { id, .. } if id == "dorofeev-right-index")
            && entry.verify_fact(&f.fact).unwrap_or(false)
    });
    o.check(flagged, "index-3 claim not flagged");
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let a = catalog::m7();
    o.check(satisfies(&a, VarietyTag::Malcev).holds, "not Malcev");
    o.check(!satisfies(&a, VarietyTag::Lie).holds, "Lie");
    let m = a.dim();
    let e = |i| a.basis_vector(i);
    let mul = |x: &[Scalar], y: &[Scalar]| a.multiply(x, y).unwrap();
    let r = |x: &[Scalar]| a.right_op(x).unwrap();
    // operators act on the right, so [R_x, R_y] is the reversed matrix commutator
    let pc = |x: &Matrix, y: &Matrix| Matrix::commutator(y, x);
    let chi = a.killing_form();
    let mut identity = true;
    let mut invariant = true;
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let (x, y, z) = (e(i), e(j), e(k));
                let lhs = r(&mul(&mul(&x, &y), &z)).scale(&int(2));
                let rhs = &(&pc(&pc(&r(&x), &r(&y)), &r(&z)) + &pc(&r(&y), &r(&mul(&z, &x)))) + &pc(&r(&x), &r(&mul(&y, &z)));
                identity &= lhs == rhs;
                invariant &= chi.eval(&mul(&x, &y), &z) == chi.eval(&x, &mul(&y, &z));
            }
        }
    }
    o.check(identity, "operator identity fails");
    o.check(invariant, "Killing form not associative");
    o.check(a.lie_center().unwrap().is_zero(), "Lie center nonzero");
    let der = der_space(&a);
    o.check(der.dim() == 14, format!("dim Der {}", der.dim()));
    let l3 = left_lder_space(&a, 3).unwrap();
    o.check(l3.space == der.space, format!("left order 3 dim {}", l3.dim()));
    let w = contains_invertible(&a, &der, &SearchConfig::default());
    let skew = matches!(&w.certificate, Certificate::CertifiedNone(r) if r.contains("skew"));
    o.check(skew, format!("certificate {:?}", w.certificate.label()));
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    for a in [catalog::mat2(), catalog::plus_mat2()] {
        let der = der_space(&a);
        let mut count = 0;
        for n in 3..=4 {
            for t in enumerate_arrangements(n).unwrap() {
                let s = f_lder_space(&a, &t).unwrap();
                o.check(s.space == der.space, format!("{} {}", a.name(), t.serialize()));
                count += 1;
            }
        }
        o.check(count == 7, format!("{count} arrangements"));
    }
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let mut algebras = catalog_binary();
    let classes = [NilpotentClass::Anticommutative, NilpotentClass::CommutativeJordan, NilpotentClass::Associative];
    for i in 0..6 {
        let dim = 2 + i % 4;
        let index = if dim <= 3 { 3 } else { 4 };
        algebras.push(catalog::random_nilpotent(classes[i % 3], dim, index, 40 + i as u64).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..4 {
        algebras.push(random_table(&mut rng, 2 + i % 2, format!("random_table_{i}")));
    }
    for a in &algebras {
        let right = a.right_nilpotency_index().unwrap();
        let power = a.nilpotency_index().unwrap();
        for n in 2..=5 {
            let l = left_lder_space(a, n).unwrap();
            o.check(l.is_full() == right.is_some_and(|i| i <= n), format!("{} left {n}", a.name()));
            let f = lder_space(a, n).unwrap();
            o.check(f.is_full() == power.is_some_and(|i| i <= n), format!("{} all {n}", a.name()));
        }
    }
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    let classes = [NilpotentClass::Anticommutative, NilpotentClass::CommutativeJordan, NilpotentClass::Associative];
    for (c, class) in classes.into_iter().enumerate() {
        for i in 0..20u64 {
            let dim = 2 + (i as usize) % 5;
            let index = if dim <= 3 && i % 2 == 0 { 3 } else { 4 };
            let a = match catalog::random_nilpotent(class, dim, index, 1000 * c as u64 + i) {
                Ok(a) => a,
                Err(e) => {
                    o.check(false, format!("{} {i}: {e}", class.as_str()));
                    continue;
                }
            };
            o.check(satisfies(&a, VarietyTag::Malcev).holds || class != NilpotentClass::Anticommutative, "not Malcev");
            o.check(satisfies(&a, VarietyTag::Jordan).holds || class != NilpotentClass::CommutativeJordan, "not Jordan");
            o.check(a.is_nilpotent().unwrap(), format!("{} not nilpotent", a.name()));
            let w = construct_invertible_lder(&a).unwrap();
            let map = w.map.clone().unwrap();
            let verified = enumerate_arrangements(w.order)
                .unwrap()
                .iter()
                .all(|t| is_f_leibniz_derivation(&a, t, &map).unwrap());
            o.check(verified && is_invertible(&map), format!("{} witness", a.name()));
        }
    }
    let config = SearchConfig::default();
    for a in [catalog::sl2(), catalog::mat2(), catalog::plus_mat2(), catalog::m7()] {
        for n in 2..=5 {
            for s in [left_lder_space(&a, n).unwrap(), lder_space(&a, n).unwrap()] {
                let w = contains_invertible(&a, &s, &config);
                o.check(!w.is_invertible(), format!("{} order {n} has an invertible element", a.name()));
            }
        }
    }
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let catalog = catalog_binary();
    let pairs = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 4), (3, 3), (4, 4)];
    for a in &catalog {
        for (s, t) in pairs {
            o.check(check_order_monotonicity(a, s, t).unwrap(), format!("{} ord {s}|{t}", a.name()));
        }
        let mut spaces: Vec<DerivationSpace> = vec![der_space(a)];
        for n in 2..=4 {
            spaces.push(left_lder_space(a, n).unwrap());
            spaces.push(lder_space(a, n).unwrap());
        }
        for s in &spaces {
            o.check(check_commutator_closure(s), format!("{} closure", a.name()));
        }
        for n in 2..=3 {
            let basis = left_lder_space(a, n).unwrap().basis_maps();
            let mut combo = Matrix::zeros(a.dim(), a.dim());
            for b in &basis {
                combo = &combo + &b.scale(&int(rng.gen_range(-3..=3)));
            }
            for d in basis.iter().take(2).chain([&combo]) {
                for k in 1..=3 {
                    o.check(verify_leibniz_rule(a, d, n, k).unwrap(), format!("{} Leibniz rule n={n} k={k}", a.name()));
                }
            }
        }
    }
    let mut powers: Vec<Algebra> =
        catalog.into_iter().filter(|a| a.is_commutative() || a.is_anticommutative()).collect();
    for i in 0..10u64 {
        let dim = 2 + (i as usize) % 5;
        powers.push(catalog::random_nilpotent(NilpotentClass::Anticommutative, dim, 4, 300 + i).unwrap());
        powers.push(catalog::random_nilpotent(NilpotentClass::CommutativeJordan, dim, 4, 400 + i).unwrap());
    }
    for a in &powers {
        let p = a.power_terms(8);
        let r = a.right_power_terms(3);
        for n in 1..=3 {
            o.check(p[(1 << n) - 1].is_subspace_of(&r[n - 1]).unwrap(), format!("{} powers n={n}", a.name()));
        }
    }
    let heis = catalog::heisenberg();
    let d = Matrix::diagonal(&[int(1), int(1), int(2)]);
    o.check(eigenspace_product_check(&heis, &d, 2).unwrap(), "heisenberg eigenspaces");
    let dor = catalog::dorofeev_algebra();
    o.check(eigenspace_product_check(&dor, &catalog::dorofeev_phi(), 2).unwrap(), "dorofeev phi eigenspaces");
    o.check(eigenspace_product_check(&dor, &Matrix::identity(5), 4).unwrap(), "dorofeev identity eigenspaces");
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    o.check(catalog::sl2().form_radical_malcev().unwrap().is_zero(), "sl2 radical");
    let semi = catalog::sl2_semidirect_v2();
    let module = Subspace::span(5, [unit_vector(5, 3), unit_vector(5, 4)]).unwrap();
    let rad = semi.form_radical_malcev().unwrap();
    o.check(rad == module, format!("semidirect radical dim {}", rad.dim()));
    o.check(catalog::plus_mat2().form_radical_jordan().unwrap().is_zero(), "plus(mat2) radical");
    for n in 2..=4 {
        let s = left_lder_space(&semi, n).unwrap();
        o.check(radical_invariance_check(&semi, &rad, &s).unwrap(), format!("invariance order {n}"));
    }
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    for n in 3..=4 {
        let b = catalog::filippov_simple_algebra(n).unwrap();
        o.check(b.filippov_check().unwrap().holds, format!("{} Filippov", b.name()));
        let d = catalog::filippov_derivation(n).unwrap();
        o.check(b.is_nary_derivation(&d).unwrap(), format!("{} matrix is not a derivation", b.name()));
        o.check(is_invertible(&d), format!("{} derivation matrix is singular", b.name()));
    }
    for n in [4, 6] {
        let b = catalog::williams_algebra(n).unwrap();
        let d = catalog::williams_corrected(n);
        o.check(b.is_nary_derivation(&d).unwrap() && is_invertible(&d), format!("williams{n} corrected"));
    }
    for n in [3, 5] {
        let e = catalog::williams(n).unwrap();
        let recorded = e.discrepancies().any(|f| {
            matches!(&f.fact, Fact::Discrepancy { id, .. } if id == "williams-parity")
                && e.verify_fact(&f.fact).unwrap_or(false)
        });
        o.check(recorded, format!("williams{n} parity not recorded"));
    }
    for a in catalog_binary() {
        for n in 2..=4 {
            for t in enumerate_arrangements(n).unwrap() {
                let induced = NAryAlgebra::from_bracketing(&a, &t).unwrap();
                let direct = f_lder_space(&a, &t).unwrap();
                o.check(induced.nary_derivation_space() == direct.space, format!("{} {}", a.name(), t.serialize()));
            }
        }
    }
    o
}

/// Multiplication algebras include the identity operator.
fn criterion_9() -> Outcome {
    let mut o = Outcome::new();
    for u in [catalog::mat2(), mutation(&catalog::mat2(), &int(2))] {
        let whole = u.unital_multiplication_algebra();
        let plus = plus_algebra(&u).unital_multiplication_algebra();
        let minus = minus_algebra(&u).unital_multiplication_algebra();
        let product = operator_subspace_product(u.dim(), &plus, &minus);
        o.check(whole == product, format!("{}: dim {} vs {}", u.name(), whole.dim(), product.dim()));
    }
    o
}

fn run_all(bin: &str) -> (bool, Vec<u8>, Duration) {
    let start = Instant::now();
    let out = Command::new(bin).args(["verify", "all", "--seed", "0"]).output().expect("binary runs");
    (out.status.code() == Some(0), out.stdout, start.elapsed())
}

fn criterion_10() -> Outcome {
    let mut o = Outcome::new();
    let bin = env!("CARGO_BIN_EXE_lder-lab");
    let (ok1, out1, t1) = run_all(bin);
    let (ok2, out2, t2) = run_all(bin);
    o.check(ok1 && ok2, "nonzero exit");
    o.check(out1 == out2, "reports differ");
    let limit = Duration::from_secs(120);
    o.check(t1 < limit && t2 < limit, format!("runs took {t1:?} and {t2:?}"));
    o
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome, Option<u64>); 10] = [
        ("dorofeev block", criterion_1, Some(5)),
        ("m7 block", criterion_2, Some(30)),
        ("unital proposition", criterion_3, None),
        ("characterization propositions", criterion_4, None),
        ("moens property suite", criterion_5, None),
        ("structural lemmas", criterion_6, None),
        ("radical suite", criterion_7, None),
        ("n-ary suite", criterion_8, Some(30)),
        ("ncj factorization", criterion_9, None),
        ("end-to-end verify all", criterion_10, None),
    ];
    let mut failed = Vec::new();
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let Some(secs) = limit {
            outcome.check(elapsed < Duration::from_secs(secs), format!("took {elapsed:?}, limit {secs} s"));
        }
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        let notes = if outcome.notes.is_empty() { String::new() } else { format!(": {}", outcome.notes.join("; ")) };
        println!("criterion {:2} {status} {name} ({:.1} s){notes}", i + 1, elapsed.as_secs_f64());
        if !outcome.ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
