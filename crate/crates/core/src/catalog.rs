//! Named algebras with their known facts, the Filippov and Williams n-ary
//! algebras, and seeded random nilpotent algebras.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{saturate, Algebra, ChainKind};
use crate::bracket::BracketTree;
use crate::error::{Error, Result};
use crate::leibniz::{der_space, is_f_leibniz_derivation, Arrangement};
use crate::linalg::{det_and_inverse, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::nary::NAryAlgebra;
use crate::scalar::Scalar;
use crate::varieties::{self, satisfies, VarietyTag};

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogAlgebra {
    Binary(Algebra),
    NAry(NAryAlgebra),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactSource {
    Published,
    Derived,
}

impl FactSource {
    pub fn as_str(self) -> &'static str {
        match self {
            FactSource::Published => "published",
            FactSource::Derived => "derived",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact {
    Variety { tag: VarietyTag, holds: bool },
    ChainDims { kind: ChainKind, dims: Vec<usize> },
    DerDim(usize),
    /// The supplied solvable radical.
    Radical(Subspace),
    /// `map` is a Leibniz-derivation of length `order` for `arrangement`.
    Derivation { label: String, map: Matrix, order: usize, arrangement: Arrangement, invertible: bool },
    NAryDerivation { label: String, map: Matrix, invertible: bool },
    /// The n-ary Filippov identity.
    Filippov(bool),
    /// A published statement that computation contradicts or repairs.
    Discrepancy { id: String, claim: String, computed: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownFact {
    pub fact: Fact,
    pub source: FactSource,
}

impl KnownFact {
    fn published(fact: Fact) -> Self {
        KnownFact { fact, source: FactSource::Published }
    }

    fn derived(fact: Fact) -> Self {
        KnownFact { fact, source: FactSource::Derived }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: CatalogAlgebra,
    pub known_facts: Vec<KnownFact>,
}

impl CatalogEntry {
    pub fn binary(&self) -> Option<&Algebra> {
        match &self.algebra {
            CatalogAlgebra::Binary(a) => Some(a),
            CatalogAlgebra::NAry(_) => None,
        }
    }

    pub fn nary(&self) -> Option<&NAryAlgebra> {
        match &self.algebra {
            CatalogAlgebra::NAry(a) => Some(a),
            CatalogAlgebra::Binary(_) => None,
        }
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &KnownFact> {
        self.known_facts.iter().filter(|f| matches!(f.fact, Fact::Discrepancy { .. }))
    }

    /// Re-checks a fact against the algebra; discrepancies check the
    /// computed side.
    pub fn verify_fact(&self, fact: &Fact) -> Result<bool> {
        match (&self.algebra, fact) {
            (CatalogAlgebra::Binary(a), Fact::Variety { tag, holds }) => Ok(satisfies(a, *tag).holds == *holds),
            (CatalogAlgebra::Binary(a), Fact::ChainDims { kind, dims }) => Ok(&a.chain(*kind)?.dims == dims),
            (CatalogAlgebra::Binary(a), Fact::DerDim(n)) => Ok(der_space(a).dim() == *n),
            (CatalogAlgebra::Binary(a), Fact::Radical(r)) => {
                Ok(a.is_ideal(r)? && a.is_solvable_subspace(r)? && radical_matches(a, r))
            }
            (CatalogAlgebra::Binary(a), Fact::Derivation { map, order, arrangement, invertible, .. }) => {
                for t in arrangement.trees(*order)? {
                    if !is_f_leibniz_derivation(a, &t, map)? {
                        return Ok(false);
                    }
                }
                Ok(det_and_inverse(map)?.1.is_some() == *invertible)
            }
            (CatalogAlgebra::NAry(b), Fact::NAryDerivation { map, invertible, .. }) => {
                Ok(b.is_nary_derivation(map)? && det_and_inverse(map)?.1.is_some() == *invertible)
            }
            (CatalogAlgebra::NAry(b), Fact::Filippov(holds)) => Ok(b.filippov_check()?.holds == *holds),
            (_, Fact::Discrepancy { id, .. }) => self.verify_discrepancy(id),
            _ => Err(Error::Precondition(format!("fact {fact:?} does not apply to {}", self.name))),
        }
    }

    fn verify_discrepancy(&self, id: &str) -> Result<bool> {
        match id {
            "dorofeev-right-index" => {
                let a = self.binary().expect("binary");
                let id3 = is_f_leibniz_derivation(a, &BracketTree::left_comb(3)?, &Matrix::identity(5))?;
                let id4 = is_f_leibniz_derivation(a, &BracketTree::left_comb(4)?, &Matrix::identity(5))?;
                Ok(a.right_nilpotency_index()? == Some(4) && !id3 && id4)
            }
            "dorofeev-alpha-bc" => {
                let a = self.binary().expect("binary");
                Ok(dorofeev_family_spans_der(a))
            }
            "williams-parity" => {
                let b = self.nary().expect("n-ary");
                let n = b.arity();
                let corrected = b.is_nary_derivation(&williams_corrected(n))?;
                let original = b.is_nary_derivation(&williams_original(n))?;
                Ok(if n % 2 == 0 { corrected && !original } else { original && !corrected })
            }
            "filippov-odd-dimension" => {
                let b = self.nary().expect("n-ary");
                let d = filippov_derivation(b.arity())?;
                Ok(b.is_nary_derivation(&d)? && det_and_inverse(&d)?.1.is_none())
            }
            other => Err(Error::Precondition(format!("unknown discrepancy {other}"))),
        }
    }
}

fn radical_matches(a: &Algebra, r: &Subspace) -> bool {
    let malcev = satisfies(a, VarietyTag::Malcev).holds;
    let jordan = satisfies(a, VarietyTag::Jordan).holds;
    let computed = if malcev {
        a.form_radical_malcev().ok()
    } else if jordan {
        a.form_radical_jordan().ok()
    } else {
        return true;
    };
    computed.as_ref() == Some(r)
}

/// Basis `a, b, c, d, e` with `ab = -ba = ae = -ea = db = -bd = -c`,
/// `ac = d`, `bc = e`.
pub fn dorofeev_algebra() -> Algebra {
    let (a, b, c, d, e) = (0, 1, 2, 3, 4);
    let minus_c = vec![(c, q(-1))];
    let plus_c = vec![(c, q(1))];
    Algebra::from_products(
        "dorofeev",
        &["a", "b", "c", "d", "e"],
        &[
            (a, b, minus_c.clone()),
            (b, a, plus_c.clone()),
            (a, e, minus_c.clone()),
            (e, a, plus_c.clone()),
            (d, b, minus_c),
            (b, d, plus_c),
            (a, c, vec![(d, q(1))]),
            (b, c, vec![(e, q(1))]),
        ],
    )
    .expect("valid table")
}

/// The published derivation family; the entry printed with `alpha_bc` is
/// read as `alpha_be`.
pub fn dorofeev_derivation(
    aa: &Scalar,
    ab: &Scalar,
    ad: &Scalar,
    ae: &Scalar,
    ba: &Scalar,
    bd: &Scalar,
    be: &Scalar,
) -> Matrix {
    let z = Scalar::zero;
    let rows = vec![
        vec![aa.clone(), ba.clone(), z(), z(), z()],
        vec![ab.clone(), -aa, z(), z(), z()],
        vec![z(), z(), ad + be, z(), z()],
        vec![ad.clone(), bd.clone(), z(), &(aa + ad) + be, ba.clone()],
        vec![ae.clone(), be.clone(), z(), ab.clone(), &(ad - aa) + be],
    ];
    Matrix::from_rows(5, rows).expect("5x5")
}

/// `a -> a + d, b -> -b + e, c -> 2c, d -> 3d, e -> e`.
pub fn dorofeev_phi() -> Matrix {
    let one = q(1);
    let zero = q(0);
    dorofeev_derivation(&one, &zero, &one, &zero, &zero, &zero, &one)
}

fn dorofeev_family_spans_der(a: &Algebra) -> bool {
    let family = (0..7).map(|k| {
        let p: Vec<Scalar> = (0..7).map(|i| if i == k { q(1) } else { q(0) }).collect();
        dorofeev_derivation(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], &p[6]).flatten()
    });
    let span = Subspace::span(25, family).expect("25 entries");
    span == der_space(a).space
}

pub fn dorofeev() -> CatalogEntry {
    use ChainKind::*;
    let a = dorofeev_algebra();
    CatalogEntry {
        name: "dorofeev".into(),
        known_facts: vec![
            KnownFact::published(Fact::Variety { tag: VarietyTag::RightAlternative, holds: true }),
            KnownFact::derived(Fact::ChainDims { kind: Power, dims: vec![5, 3, 3] }),
            KnownFact::derived(Fact::ChainDims { kind: RightPower, dims: vec![5, 3, 1, 0] }),
            KnownFact::published(Fact::DerDim(7)),
            KnownFact::published(Fact::Derivation { label: "phi".into(), map: dorofeev_phi(), order: 2, arrangement: Arrangement::All, invertible: true }),
            KnownFact::derived(Fact::Derivation {
                label: "identity".into(),
                map: Matrix::identity(5),
                order: 4,
                arrangement: Arrangement::Left,
                invertible: true,
            }),
            KnownFact::published(Fact::Discrepancy {
                id: "dorofeev-right-index".into(),
                claim: "right nilpotent of index 3, so the identity is a left Leibniz-derivation of order 3".into(),
                computed: "right-power dims [5,3,1,0]: index 4; the identity fails at order 3 ((ac)b = -c) and holds at order 4"
                    .into(),
            }),
            KnownFact::published(Fact::Discrepancy {
                id: "dorofeev-alpha-bc".into(),
                claim: "derivation matrix entry -alpha_aa + alpha_ad + alpha_bc".into(),
                computed: "read as -alpha_aa + alpha_ad + alpha_be; the seven-parameter family then spans Der exactly"
                    .into(),
            }),
        ],
        algebra: CatalogAlgebra::Binary(a),
    }
}

pub fn heisenberg() -> Algebra {
    Algebra::from_products("heisenberg", &["x", "y", "z"], &[(0, 1, vec![(2, q(1))]), (1, 0, vec![(2, q(-1))])])
        .expect("valid table")
}

/// Basis `(e, h, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> Algebra {
    let (e, h, f) = (0, 1, 2);
    Algebra::from_products(
        "sl2",
        &["e", "h", "f"],
        &[
            (h, e, vec![(e, q(2))]),
            (e, h, vec![(e, q(-2))]),
            (h, f, vec![(f, q(-2))]),
            (f, h, vec![(f, q(2))]),
            (e, f, vec![(h, q(1))]),
            (f, e, vec![(h, q(-1))]),
        ],
    )
    .expect("valid table")
}

/// 2x2 matrices on `e11, e12, e21, e22`.
pub fn mat2() -> Algebra {
    let idx = |i: usize, j: usize| 2 * i + j;
    let mut products = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                products.push((idx(i, j), idx(j, l), vec![(idx(i, l), q(1))]));
            }
        }
    }
    Algebra::from_products("mat2", &["e11", "e12", "e21", "e22"], &products).expect("valid table")
}

pub fn plus_mat2() -> Algebra {
    varieties::plus_algebra(&mat2()).renamed("plus_mat2")
}

pub fn abelian(m: usize) -> Algebra {
    Algebra::zero_algebra(format!("abelian{m}"), m).expect("m >= 1")
}

pub fn zero(m: usize) -> Algebra {
    Algebra::zero_algebra(format!("zero{m}"), m).expect("m >= 1")
}

/// `sl2` acting on its 2-dimensional module `(v1, v2)`.
pub fn sl2_semidirect_v2() -> Algebra {
    let (e, h, f, v1, v2) = (0, 1, 2, 3, 4);
    let mut products: Vec<(usize, usize, Vec<(usize, Scalar)>)> = Vec::new();
    for &(i, j, k, c) in &[
        (h, e, e, 2),
        (h, f, f, -2),
        (e, f, h, 1),
        (e, v2, v1, 1),
        (h, v1, v1, 1),
        (h, v2, v2, -1),
        (f, v1, v2, 1),
    ] {
        products.push((i, j, vec![(k, q(c))]));
        products.push((j, i, vec![(k, q(-c))]));
    }
    Algebra::from_products("sl2_semidirect_v2", &["e", "h", "f", "v1", "v2"], &products).expect("valid table")
}

/// `e1 e1 = e2`.
pub fn zinbiel2() -> Algebra {
    Algebra::from_products("zinbiel2", &["e1", "e2"], &[(0, 0, vec![(1, q(1))])]).expect("valid table")
}

/// `e1 e1 = e2`, `e1 e2 = e3`, `e2 e1 = 2 e3`.
pub fn zinbiel3() -> Algebra {
    Algebra::from_products(
        "zinbiel3",
        &["e1", "e2", "e3"],
        &[(0, 0, vec![(1, q(1))]), (0, 1, vec![(2, q(1))]), (1, 0, vec![(2, q(2))])],
    )
    .expect("valid table")
}

/// Commutative `e1^2 = e2`, `e1 e2 = e3`.
pub fn jordan_nil3() -> Algebra {
    Algebra::from_products(
        "jordan_nil3",
        &["e1", "e2", "e3"],
        &[(0, 0, vec![(1, q(1))]), (0, 1, vec![(2, q(1))]), (1, 0, vec![(2, q(1))])],
    )
    .expect("valid table")
}

/// `plus(mat2) ⊕ jordan_nil3`.
pub fn jordan_mixed() -> Algebra {
    plus_mat2().direct_sum(&jordan_nil3(), "jordan_mixed")
}

/// `mat2` mutated with `lambda = 2`.
pub fn quasi_mat2() -> Algebra {
    varieties::mutation(&mat2(), &q(2)).renamed("quasi_mat2")
}

fn conj(x: &[Scalar]) -> Vector {
    x.iter().enumerate().map(|(i, c)| if i == 0 { c.clone() } else { -c }).collect()
}

/// Cayley-Dickson product on vectors of length `2^gammas.len()`:
/// `(a,b)(c,d) = (ac + g conj(d) b, d a + b conj(c))`.
fn cd_mul(x: &[Scalar], y: &[Scalar], gammas: &[Scalar]) -> Vector {
    let Some((g, rest)) = gammas.split_last() else {
        return vec![&x[0] * &y[0]];
    };
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let first: Vector = cd_mul(a, c, rest)
        .into_iter()
        .zip(cd_mul(&conj(d), b, rest))
        .map(|(p, r)| &p + &(g * &r))
        .collect();
    let second: Vector = cd_mul(d, a, rest)
        .into_iter()
        .zip(cd_mul(b, &conj(c), rest))
        .map(|(p, r)| &p + &r)
        .collect();
    first.into_iter().chain(second).collect()
}

/// Split octonions by doubling with parameters `(-1, -1, +1)`.
pub fn cayley_dickson_split() -> Algebra {
    let gammas = [q(-1), q(-1), q(1)];
    let names = ["1", "i", "j", "k", "l", "il", "jl", "kl"];
    Algebra::from_bilinear("cd_split", labels(&names), |i, j| {
        cd_mul(&unit_vector(8, i), &unit_vector(8, j), &gammas)
    })
    .expect("valid table")
}

/// Trace-zero split octonions under `x * y = [x, y] / 2`.
pub fn m7() -> Algebra {
    let o = cayley_dickson_split();
    let half = Scalar::new(1, 2);
    let names = ["i", "j", "k", "l", "il", "jl", "kl"];
    Algebra::from_bilinear("m7", labels(&names), |i, j| {
        let xy = o.product(i + 1, j + 1);
        let yx = o.product(j + 1, i + 1);
        (1..8).map(|k| &(&xy[k] - &yx[k]) * &half).collect()
    })
    .expect("valid table")
}

fn simple_entry(name: &str, a: Algebra, facts: Vec<KnownFact>) -> CatalogEntry {
    CatalogEntry { name: name.into(), algebra: CatalogAlgebra::Binary(a.renamed(name)), known_facts: facts }
}

/// Every named binary algebra.
pub fn standard_entries() -> Vec<CatalogEntry> {
    use ChainKind::*;
    use VarietyTag::*;
    let v = |tag, holds| KnownFact::derived(Fact::Variety { tag, holds });
    let chain = |kind, dims: &[usize]| KnownFact::derived(Fact::ChainDims { kind, dims: dims.to_vec() });
    let sd = sl2_semidirect_v2();
    let module = Subspace::span(5, [unit_vector(5, 3), unit_vector(5, 4)]).expect("ambient 5");
    let mixed_radical = Subspace::span(7, (4..7).map(|i| unit_vector(7, i))).expect("ambient 7");
    vec![
        dorofeev(),
        simple_entry(
            "heisenberg",
            heisenberg(),
            vec![
                v(Lie, true),
                v(Malcev, true),
                chain(Power, &[3, 1, 0]),
                KnownFact::derived(Fact::Derivation {
                    label: "diag(1,1,2)".into(),
                    map: Matrix::diagonal(&[q(1), q(1), q(2)]),
                    order: 2,
                    arrangement: Arrangement::All,
                    invertible: true,
                }),
            ],
        ),
        simple_entry("sl2", sl2(), vec![v(Lie, true), KnownFact::derived(Fact::DerDim(3)), KnownFact::derived(Fact::Radical(Subspace::zero(3)))]),
        simple_entry(
            "mat2",
            mat2(),
            vec![v(Associative, true), v(Commutative, false), KnownFact::derived(Fact::DerDim(3))],
        ),
        simple_entry(
            "plus_mat2",
            plus_mat2(),
            vec![v(Jordan, true), KnownFact::derived(Fact::Radical(Subspace::zero(4)))],
        ),
        simple_entry("quasi_mat2", quasi_mat2(), vec![v(NoncommutativeJordan, true), v(MalcevAdmissible, true)]),
        simple_entry("abelian3", abelian(3), vec![v(Lie, true), chain(Power, &[3, 0])]),
        simple_entry("zero4", zero(4), vec![v(Associative, true), chain(Power, &[4, 0])]),
        simple_entry(
            "sl2_semidirect_v2",
            sd,
            vec![v(Lie, true), KnownFact::derived(Fact::Radical(module))],
        ),
        simple_entry("zinbiel2", zinbiel2(), vec![v(Zinbiel, true), chain(Power, &[2, 1, 0])]),
        simple_entry("zinbiel3", zinbiel3(), vec![v(Zinbiel, true), chain(Power, &[3, 2, 1, 0])]),
        simple_entry("jordan_nil3", jordan_nil3(), vec![v(Jordan, true), chain(Power, &[3, 2, 1, 0])]),
        simple_entry(
            "jordan_mixed",
            jordan_mixed(),
            vec![v(Jordan, true), KnownFact::derived(Fact::Radical(mixed_radical))],
        ),
        simple_entry(
            "cd_split",
            cayley_dickson_split(),
            vec![v(Associative, false), v(RightAlternative, true), v(Flexible, true)],
        ),
        simple_entry(
            "m7",
            m7(),
            vec![
                KnownFact::published(Fact::Variety { tag: Malcev, holds: true }),
                KnownFact::published(Fact::Variety { tag: Lie, holds: false }),
                KnownFact::derived(Fact::DerDim(14)),
                KnownFact::derived(Fact::Radical(Subspace::zero(7))),
            ],
        ),
    ]
}

fn check_nary_order(n: usize) -> Result<()> {
    if (3..=6).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange { order: n, min: 3, max: 6 })
    }
}

/// `D_{n+1}`: `[e_1, .., ^e_i, .., e_{n+1}] = (-1)^{n+i+1} e_i`.
pub fn filippov_simple_algebra(n: usize) -> Result<NAryAlgebra> {
    check_nary_order(n)?;
    let m = n + 1;
    let entries = (1..=m)
        .map(|i| {
            let args: Vec<usize> = (0..m).filter(|&k| k != i - 1).collect();
            let sign = if (n + i + 1) % 2 == 0 { 1 } else { -1 };
            let mut v = zero_vector(m);
            v[i - 1] = q(sign);
            (args, v)
        })
        .collect();
    let names = (1..=m).map(|i| format!("e{i}")).collect();
    NAryAlgebra::new(format!("D{m}"), n, names, entries, true)
}

/// `sum (e_{i,i+1} - e_{i+1,i})` over odd `i` when `n + 1` is even; with
/// `e_{1,n+1} - e_{n+1,1}` added when `n` is even.
pub fn filippov_derivation(n: usize) -> Result<Matrix> {
    check_nary_order(n)?;
    let m = n + 1;
    let mut d = Matrix::zeros(m, m);
    let mut i = 0;
    while i + 1 < m {
        d.set(i, i + 1, q(1));
        d.set(i + 1, i, q(-1));
        i += 2;
    }
    if n % 2 == 0 {
        d.set(0, m - 1, q(1));
        d.set(m - 1, 0, q(-1));
    }
    Ok(d)
}

pub fn filippov_simple(n: usize) -> Result<CatalogEntry> {
    let b = filippov_simple_algebra(n)?;
    let d = filippov_derivation(n)?;
    let mut facts = vec![KnownFact::published(Fact::Filippov(true))];
    if n % 2 == 1 {
        facts.push(KnownFact::published(Fact::NAryDerivation { label: "published".into(), map: d, invertible: true }));
    } else {
        facts.push(KnownFact::derived(Fact::NAryDerivation { label: "published".into(), map: d, invertible: false }));
        facts.push(KnownFact::published(Fact::Discrepancy {
            id: "filippov-odd-dimension".into(),
            claim: format!("the matrix for n = 2k is an invertible derivation of D{}", n + 1),
            computed: format!(
                "it is a derivation, but D{} has odd dimension and all its derivations are skew, so none is invertible",
                n + 1
            ),
        }));
    }
    Ok(CatalogEntry { name: format!("d{}", n + 1), algebra: CatalogAlgebra::NAry(b), known_facts: facts })
}

/// `[x_1, .., x_n] = x_2` on an `n`-dimensional space.
pub fn williams_algebra(n: usize) -> Result<NAryAlgebra> {
    check_nary_order(n)?;
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    NAryAlgebra::new(format!("williams{n}"), n, names, vec![((0..n).collect(), unit_vector(n, 1))], true)
}

/// `x1, x2 -> 1`, `x3, x4 -> -1/2`, `x_j -> (-1)^j` for `j > 4`.
pub fn williams_corrected(n: usize) -> Matrix {
    let diag: Vec<Scalar> = (1..=n)
        .map(|j| match j {
            1 | 2 => q(1),
            3 | 4 => Scalar::new(-1, 2),
            _ => q(if j % 2 == 0 { 1 } else { -1 }),
        })
        .collect();
    Matrix::diagonal(&diag)
}

/// `x1, x2 -> 1`, `x_j -> (-1)^j` for `j >= 3`.
pub fn williams_original(n: usize) -> Matrix {
    let diag: Vec<Scalar> = (1..=n)
        .map(|j| if j <= 2 { q(1) } else { q(if j % 2 == 0 { 1 } else { -1 }) })
        .collect();
    Matrix::diagonal(&diag)
}

pub fn williams(n: usize) -> Result<CatalogEntry> {
    let b = williams_algebra(n)?;
    let (good, label) = if n % 2 == 0 {
        (williams_corrected(n), "corrected")
    } else {
        (williams_original(n), "original")
    };
    Ok(CatalogEntry {
        name: format!("williams{n}"),
        algebra: CatalogAlgebra::NAry(b),
        known_facts: vec![
            KnownFact::derived(Fact::Filippov(true)),
            KnownFact::derived(Fact::NAryDerivation { label: label.into(), map: good, invertible: true }),
            KnownFact::published(Fact::Discrepancy {
                id: "williams-parity".into(),
                claim: "the corrected mapping is an invertible derivation for every n".into(),
                computed: "the corrected mapping verifies only for even n; for odd n the original assignment verifies"
                    .into(),
            }),
        ],
    })
}

/// Every catalog entry, binary first.
pub fn all_entries() -> Vec<CatalogEntry> {
    let mut out = standard_entries();
    for n in 3..=4 {
        out.push(filippov_simple(n).expect("in range"));
    }
    for n in 3..=6 {
        out.push(williams(n).expect("in range"));
    }
    out
}

pub fn by_name(name: &str) -> Option<CatalogEntry> {
    let name = name.strip_prefix('@').unwrap_or(name);
    all_entries().into_iter().find(|e| e.name == name)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NilpotentClass {
    Anticommutative,
    CommutativeJordan,
    Associative,
}

impl NilpotentClass {
    pub fn as_str(self) -> &'static str {
        match self {
            NilpotentClass::Anticommutative => "anticommutative",
            NilpotentClass::CommutativeJordan => "commutative_jordan",
            NilpotentClass::Associative => "associative",
        }
    }
}

const RETRIES: u64 = 64;

/// A random nilpotent algebra of dimension `dim` with `A^index = 0`.
///
/// Anticommutative and commutative algebras are graded,
/// `V_1 ⊕ .. ⊕ V_{index-1}` with `V_i V_j ⊆ V_{i+j}`, and kept only if they
/// are Malcev or Jordan. Associative algebras are subalgebras generated by
/// random strictly upper triangular `index x index` matrices, kept when the
/// generated algebra has dimension `dim`.
pub fn random_nilpotent(class: NilpotentClass, dim: usize, index: usize, seed: u64) -> Result<Algebra> {
    if !(1..=6).contains(&dim) || !(2..=4).contains(&index) {
        return Err(Error::Precondition(format!("need 1 <= dim <= 6 and 2 <= index <= 4, got {dim}, {index}")));
    }
    for attempt in 0..RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(attempt));
        let name = format!("random_{}_{dim}_{index}_{seed}", class.as_str());
        let candidate = match class {
            NilpotentClass::Associative => matrix_nilpotent(&mut rng, dim, index, &name),
            _ => Some(graded_nilpotent(&mut rng, class, dim, index, &name)),
        };
        let Some(a) = candidate else { continue };
        let keep = match class {
            NilpotentClass::Anticommutative => satisfies(&a, VarietyTag::Malcev).holds,
            NilpotentClass::CommutativeJordan => satisfies(&a, VarietyTag::Jordan).holds,
            NilpotentClass::Associative => satisfies(&a, VarietyTag::Associative).holds,
        };
        if keep {
            return Ok(a);
        }
    }
    Err(Error::RetriesExhausted { class: class.as_str().into(), seed })
}

fn graded_nilpotent(rng: &mut ChaCha8Rng, class: NilpotentClass, dim: usize, index: usize, name: &str) -> Algebra {
    let top = index - 1;
    // every degree 1..top gets a basis vector while there are enough
    let mut degree: Vec<usize> = (0..dim).map(|i| if i < top { i + 1 } else { rng.gen_range(1..=top) }).collect();
    degree.sort_unstable();
    let mut table = vec![vec![zero_vector(dim); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let target = degree[i] + degree[j];
            if target > top {
                continue;
            }
            let skip = match class {
                NilpotentClass::Anticommutative => j <= i,
                _ => j < i,
            };
            if skip {
                continue;
            }
            let v: Vector = (0..dim)
                .map(|k| if degree[k] == target { q(rng.gen_range(-2..=2)) } else { q(0) })
                .collect();
            if class == NilpotentClass::Anticommutative {
                table[j][i] = v.iter().map(|x| -x).collect();
            } else {
                table[j][i] = v.clone();
            }
            table[i][j] = v;
        }
    }
    let names = (1..=dim).map(|i| format!("e{i}")).collect();
    Algebra::new(name, names, table).expect("square table")
}

fn matrix_nilpotent(rng: &mut ChaCha8Rng, dim: usize, index: usize, name: &str) -> Option<Algebra> {
    let size = index;
    let generators: Vec<Matrix> = (0..rng.gen_range(1..=3))
        .map(|_| {
            Matrix::from_fn(size, size, |i, j| {
                if j > i && rng.gen_bool(0.6) {
                    q(rng.gen_range(-2..=2))
                } else {
                    q(0)
                }
            })
        })
        .filter(|g| !g.is_zero())
        .collect();
    if generators.is_empty() {
        return None;
    }
    let span = saturate(size, &generators, None);
    if span.dim() != dim {
        return None;
    }
    let basis: Vec<Matrix> = span.basis().iter().map(|v| Matrix::from_flat(size, v).expect("square")).collect();
    let table = basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| span.coordinates(&(x * y).flatten()).expect("ambient").expect("closed under products"))
                .collect()
        })
        .collect();
    let names = (1..=dim).map(|i| format!("e{i}")).collect();
    Algebra::new(name, names, table).ok()
}
