//! Leibniz-derivation spaces: assembling and solving the linear systems,
//! searching them for invertible elements, constructing invertible
//! Leibniz-derivations of nilpotent algebras, and the structural checks
//! built on top of these.
//!
//! A linear map `d` is an `m x m` matrix whose column `j` is `d(e_j)`; as an
//! element of a derivation space it is flattened row-major, so entry `(i, j)`
//! sits at index `i * m + j`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{combine, Algebra, ChainKind};
use crate::bracket::{enumerate_arrangements, BracketTree};
use crate::error::{check_len, Error, Result};
use crate::linalg::{
    det_and_inverse, generalized_eigenspace, is_zero_vector, nullspace, rational_eigenvalues, sub_vectors,
    unit_vector, zero_vector, Matrix, Subspace, Vector,
};
use crate::scalar::Scalar;
use crate::varieties::{self, VarietyTag};

/// Largest order for which derivation spaces are assembled.
pub const MAX_ORDER: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    pub trials: usize,
    pub coefficient_bound: i64,
    pub max_order: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { seed: 0, trials: 64, coefficient_bound: 5, max_order: 5 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arrangement {
    Single(BracketTree),
    Left,
    All,
}

impl Arrangement {
    pub fn trees(&self, order: usize) -> Result<Vec<BracketTree>> {
        check_order(order)?;
        match self {
            Arrangement::Single(t) => {
                if t.leaf_count() != order {
                    return Err(Error::DimensionMismatch { expected: order, found: t.leaf_count() });
                }
                Ok(vec![t.clone()])
            }
            Arrangement::Left => Ok(vec![BracketTree::left_comb(order)?]),
            Arrangement::All => enumerate_arrangements(order),
        }
    }

    /// Accepts `left`, `all` or a bracket expression.
    pub fn parse(text: &str) -> Result<Arrangement> {
        match text.trim() {
            "left" => Ok(Arrangement::Left),
            "all" => Ok(Arrangement::All),
            other => BracketTree::parse(other).map(Arrangement::Single),
        }
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arrangement::Single(t) => f.write_str(&t.serialize()),
            Arrangement::Left => f.write_str("left"),
            Arrangement::All => f.write_str("all"),
        }
    }
}

fn check_order(order: usize) -> Result<()> {
    if (2..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(Error::OutOfRange { order, min: 2, max: MAX_ORDER })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub algebra_dim: usize,
    pub order: usize,
    pub arrangement: Arrangement,
    pub space: Subspace,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_full(&self) -> bool {
        self.space.is_full()
    }

    pub fn basis_maps(&self) -> Vec<Matrix> {
        self.space
            .basis()
            .iter()
            .map(|v| Matrix::from_flat(self.algebra_dim, v).expect("m^2 entries"))
            .collect()
    }

    pub fn contains(&self, d: &Matrix) -> Result<bool> {
        check_len(self.algebra_dim, d.rows())?;
        check_len(self.algebra_dim, d.cols())?;
        self.space.contains(&d.flatten())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The inverse of the witness map.
    ExplicitInverse(Matrix),
    /// Random search failed; says nothing definite.
    NoneFound { trials: usize },
    /// No element of the space is invertible, for the stated reason.
    CertifiedNone(String),
}

impl Certificate {
    pub fn label(&self) -> &'static str {
        match self {
            Certificate::ExplicitInverse(_) => "explicit-inverse",
            Certificate::NoneFound { .. } => "none-found",
            Certificate::CertifiedNone(_) => "certified-none",
        }
    }
}

/// Which branch of [`construct_invertible_lder`] produced the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    /// Eigenvalue 1 on a complement of `A^q`, `q` on `A^q`.
    Filtration { q: usize },
    /// The identity, valid at order `n` once `A^n = 0`.
    IdentityFallback { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertibleWitness {
    pub map: Option<Matrix>,
    pub order: usize,
    pub certificate: Certificate,
    pub construction: Option<Construction>,
}

impl InvertibleWitness {
    pub fn is_invertible(&self) -> bool {
        matches!(self.certificate, Certificate::ExplicitInverse(_))
    }
}

fn check_map(a: &Algebra, d: &Matrix) -> Result<()> {
    check_len(a.dim(), d.rows())?;
    check_len(a.dim(), d.cols())
}

/// Calls `visit` on every basis tuple of length `n` in lexicographic order
/// until it returns `false`.
fn for_each_tuple(m: usize, n: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let mut idx = vec![0usize; n];
    loop {
        if !visit(&idx) {
            return false;
        }
        let mut p = n;
        loop {
            if p == 0 {
                return true;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < m {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Direct check of `d([x_1..x_n]_f) = sum_j [x_1, .., d(x_j), .., x_n]_f` on
/// all basis tuples.
pub fn is_f_leibniz_derivation(a: &Algebra, f: &BracketTree, d: &Matrix) -> Result<bool> {
    check_map(a, d)?;
    let m = a.dim();
    let n = f.leaf_count();
    let basis: Vec<Vector> = (0..m).map(|i| a.basis_vector(i)).collect();
    let images: Vec<Vector> = (0..m).map(|j| d.column(j)).collect();
    Ok(for_each_tuple(m, n, |idx| {
        let mut args: Vec<&[Scalar]> = idx.iter().map(|&i| basis[i].as_slice()).collect();
        let lhs = d.apply(&f.eval_unchecked(a, &args));
        let mut rhs = zero_vector(m);
        for j in 0..n {
            args[j] = &images[idx[j]];
            let term = f.eval_unchecked(a, &args);
            for (r, t) in rhs.iter_mut().zip(term) {
                *r += &t;
            }
            args[j] = &basis[idx[j]];
        }
        lhs == rhs
    }))
}

/// A subtree together with its values on every basis subtuple; the subtuple
/// `(i_1..i_k)` is stored at index `i_1 m^{k-1} + .. + i_k`.
struct Compiled {
    values: Vec<Vector>,
    children: Option<(Box<Compiled>, Box<Compiled>)>,
}

impl Compiled {
    fn new(a: &Algebra, tree: &BracketTree) -> Compiled {
        match tree {
            BracketTree::Leaf(_) => Compiled {
                values: (0..a.dim()).map(|i| a.basis_vector(i)).collect(),
                children: None,
            },
            BracketTree::Node(l, r) => {
                let (l, r) = (Compiled::new(a, l), Compiled::new(a, r));
                let values = product_table(&l.values, &r.values, |x, y| a.mul(x, y));
                Compiled { values, children: Some((Box::new(l), Box::new(r))) }
            }
        }
    }

    /// `delta(node) = delta(left) v(right) + v(left) delta(right)` with
    /// `delta(leaf e_i) = d(e_i)`.
    fn deltas(&self, a: &Algebra, columns: &[Vector]) -> Vec<Vector> {
        match &self.children {
            None => columns.to_vec(),
            Some((l, r)) => {
                let (dl, dr) = (l.deltas(a, columns), r.deltas(a, columns));
                let mut out = Vec::with_capacity(l.values.len() * r.values.len());
                for (vl, dl) in l.values.iter().zip(&dl) {
                    for (vr, drr) in r.values.iter().zip(&dr) {
                        let mut x = a.mul(dl, vr);
                        for (s, t) in x.iter_mut().zip(a.mul(vl, drr)) {
                            *s += &t;
                        }
                        out.push(x);
                    }
                }
                out
            }
        }
    }
}

fn product_table(l: &[Vector], r: &[Vector], mut f: impl FnMut(&[Scalar], &[Scalar]) -> Vector) -> Vec<Vector> {
    let mut out = Vec::with_capacity(l.len() * r.len());
    for x in l {
        for y in r {
            out.push(f(x, y));
        }
    }
    out
}

/// `d(v)` using only the nonzero coordinates of `v`.
fn apply_columns(columns: &[Vector], v: &[Scalar], m: usize) -> Vector {
    let mut out = zero_vector(m);
    for (j, c) in v.iter().enumerate() {
        if !c.is_zero() {
            crate::linalg::axpy(&mut out, c, &columns[j]);
        }
    }
    out
}

/// Per-kernel-element data needed to evaluate defects at the root.
struct KernelTables {
    columns: Vec<Vec<Vector>>,
    left: Vec<Vec<Vector>>,
    right: Vec<Vec<Vector>>,
}

impl KernelTables {
    fn new(a: &Algebra, l: &Compiled, r: &Compiled, kernel: &[Matrix]) -> KernelTables {
        let m = a.dim();
        let columns: Vec<Vec<Vector>> = kernel.iter().map(|d| (0..m).map(|j| d.column(j)).collect()).collect();
        let left = columns.iter().map(|c| l.deltas(a, c)).collect();
        let right = columns.iter().map(|c| r.deltas(a, c)).collect();
        KernelTables { columns, left, right }
    }
}

/// Shrinks `kernel` to the maps in its span that are `f`-Leibniz.
///
/// Each basis tuple contributes the defect `d(v) - delta(v)` of every kernel
/// element; the rows of these defects constrain the coefficients of a
/// combination. Tuples are taken in chunks of growing size and the kernel
/// is replaced by the solution space after each chunk that constrained it.
fn refine_kernel(a: &Algebra, tree: &BracketTree, mut kernel: Vec<Matrix>) -> Vec<Matrix> {
    let m = a.dim();
    let BracketTree::Node(lt, rt) = tree else {
        return kernel;
    };
    let (l, r) = (Compiled::new(a, lt), Compiled::new(a, rt));
    let width = r.values.len();
    let total = l.values.len() * width;
    let mut tables = KernelTables::new(a, &l, &r, &kernel);
    let mut pos = 0;
    let mut chunk = 8;
    while pos < total && !kernel.is_empty() {
        let end = (pos + chunk).min(total);
        let k = kernel.len();
        let mut rows = Subspace::zero(k);
        for t in pos..end {
            let (il, ir) = (t / width, t % width);
            let v = a.mul(&l.values[il], &r.values[ir]);
            let defects: Vec<Vector> = (0..k)
                .map(|s| {
                    let mut x = apply_columns(&tables.columns[s], &v, m);
                    let p = a.mul(&tables.left[s][il], &r.values[ir]);
                    let q = a.mul(&l.values[il], &tables.right[s][ir]);
                    for ((x, p), q) in x.iter_mut().zip(p).zip(q) {
                        *x = &(&*x - &p) - &q;
                    }
                    x
                })
                .collect();
            for coord in 0..m {
                let row: Vector = defects.iter().map(|d| d[coord].clone()).collect();
                if !is_zero_vector(&row) {
                    rows.insert(row).expect("row has kernel length");
                }
            }
            if rows.is_full() {
                return Vec::new();
            }
        }
        pos = end;
        chunk *= 2;
        if !rows.is_zero() {
            let solutions = nullspace(&rows.basis_matrix());
            kernel = solutions
                .basis()
                .iter()
                .map(|c| {
                    let mut acc = Matrix::zeros(m, m);
                    for (coef, d) in c.iter().zip(&kernel) {
                        if !coef.is_zero() {
                            acc = &acc + &d.scale(coef);
                        }
                    }
                    acc
                })
                .collect();
            if !kernel.is_empty() {
                tables = KernelTables::new(a, &l, &r, &kernel);
            }
        }
    }
    kernel
}

fn solve(a: &Algebra, order: usize, arrangement: Arrangement) -> Result<DerivationSpace> {
    let trees = arrangement.trees(order)?;
    let m = a.dim();
    let mut kernel: Vec<Matrix> = (0..m * m)
        .map(|idx| {
            let mut e = Matrix::zeros(m, m);
            e.set(idx / m, idx % m, Scalar::one());
            e
        })
        .collect();
    for t in &trees {
        kernel = refine_kernel(a, t, kernel);
        if kernel.is_empty() {
            break;
        }
    }
    let space = Subspace::span(m * m, kernel.iter().map(Matrix::flatten))?;
    Ok(DerivationSpace { algebra_dim: m, order, arrangement, space })
}

/// `LDer_f(A)`.
pub fn f_lder_space(a: &Algebra, f: &BracketTree) -> Result<DerivationSpace> {
    solve(a, f.leaf_count(), Arrangement::Single(f.clone()))
}

/// `LDer_{l(n)}(A)`.
pub fn left_lder_space(a: &Algebra, n: usize) -> Result<DerivationSpace> {
    solve(a, n, Arrangement::Left)
}

/// `LDer_n(A)`: the intersection over all arrangements of length `n`.
pub fn lder_space(a: &Algebra, n: usize) -> Result<DerivationSpace> {
    solve(a, n, Arrangement::All)
}

pub fn lder_space_for(a: &Algebra, n: usize, arrangement: &Arrangement) -> Result<DerivationSpace> {
    solve(a, n, arrangement.clone())
}

/// `Der(A)`.
pub fn der_space(a: &Algebra) -> DerivationSpace {
    left_lder_space(a, 2).expect("order 2 is in range")
}

/// Random search for an invertible element of `space`, falling back to
/// certificates that rule out invertibility for the whole space.
pub fn contains_invertible(a: &Algebra, space: &DerivationSpace, config: &SearchConfig) -> InvertibleWitness {
    let m = space.algebra_dim;
    let none = |certificate| InvertibleWitness { map: None, order: space.order, certificate, construction: None };
    if space.space.is_zero() {
        return none(Certificate::NoneFound { trials: 0 });
    }
    let basis = space.space.basis();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let b = config.coefficient_bound.max(1);
    for _ in 0..config.trials {
        let coeffs: Vec<Scalar> = (0..basis.len()).map(|_| Scalar::from_int(rng.gen_range(-b..=b))).collect();
        let flat = combine(&coeffs, basis, m * m);
        let x = Matrix::from_flat(m, &flat).expect("m^2 entries");
        if let Ok((_, Some(inv))) = det_and_inverse(&x) {
            return InvertibleWitness {
                map: Some(x),
                order: space.order,
                certificate: Certificate::ExplicitInverse(inv),
                construction: None,
            };
        }
    }
    if let Some(reason) = skew_certificate(a, space) {
        return none(Certificate::CertifiedNone(reason));
    }
    if let Some(reason) = common_kernel_certificate(space) {
        return none(Certificate::CertifiedNone(reason));
    }
    none(Certificate::NoneFound { trials: config.trials })
}

/// Every element is skew for a nondegenerate symmetric form on an
/// odd-dimensional space, hence singular.
fn skew_certificate(a: &Algebra, space: &DerivationSpace) -> Option<String> {
    if a.dim() != space.algebra_dim || a.dim() % 2 == 0 || !a.is_anticommutative() {
        return None;
    }
    let g = a.killing_form().gram;
    if crate::linalg::rank(&g) != a.dim() {
        return None;
    }
    let skew = space.basis_maps().iter().all(|x| (&(&x.transpose() * &g) + &(&g * x)).is_zero());
    skew.then(|| "odd-dimensional skew family".to_string())
}

/// All elements share a nonzero kernel vector.
fn common_kernel_certificate(space: &DerivationSpace) -> Option<String> {
    let m = space.algebra_dim;
    let mut common = Subspace::full(m);
    for x in space.basis_maps() {
        common = common.intersect(&nullspace(&x)).ok()?;
        if common.is_zero() {
            return None;
        }
    }
    Some(format!("common kernel of dimension {}", common.dim()))
}

/// An invertible Leibniz-derivation of a nilpotent algebra.
///
/// With `n` the nilpotency index and `q = ceil(n/2)`, the candidate acts as
/// 1 on a complement of `A^q` and as `q` on `A^q`; it is verified on every
/// arrangement of length `q`. When `q < 2` or verification fails the
/// identity is returned at order `n`.
pub fn construct_invertible_lder(a: &Algebra) -> Result<InvertibleWitness> {
    let Some(n) = a.nilpotency_index()? else {
        return Err(Error::NotNilpotent(a.name().to_string()));
    };
    let m = a.dim();
    let q = n.div_ceil(2);
    let fallback_reason;
    if q >= 2 && q <= MAX_ORDER {
        let aq = a.power_terms(q).pop().expect("q >= 1");
        let complement = aq.complement_indices();
        let mut columns: Vec<Vector> = complement.iter().map(|&i| unit_vector(m, i)).collect();
        columns.extend(aq.basis().iter().cloned());
        let change = Matrix::from_fn(m, m, |i, j| columns[j][i].clone());
        let mut eigen = vec![Scalar::one(); complement.len()];
        eigen.extend(std::iter::repeat(Scalar::from_int(q as i64)).take(aq.dim()));
        let (_, inv) = det_and_inverse(&change)?;
        let inv = inv.ok_or_else(|| Error::Inconsistent("basis change is singular".into()))?;
        let phi = &(&change * &Matrix::diagonal(&eigen)) * &inv;
        let mut verified = true;
        for t in enumerate_arrangements(q)? {
            if !is_f_leibniz_derivation(a, &t, &phi)? {
                verified = false;
                break;
            }
        }
        if verified {
            let (_, phi_inv) = det_and_inverse(&phi)?;
            let phi_inv = phi_inv.ok_or_else(|| Error::Inconsistent("filtration candidate is singular".into()))?;
            return Ok(InvertibleWitness {
                map: Some(phi),
                order: q,
                certificate: Certificate::ExplicitInverse(phi_inv),
                construction: Some(Construction::Filtration { q }),
            });
        }
        fallback_reason = format!("filtration candidate fails at order {q}");
    } else {
        fallback_reason = format!("q = {q} outside 2..={MAX_ORDER}");
    }
    let id = Matrix::identity(m);
    if n <= MAX_ORDER {
        for t in enumerate_arrangements(n)? {
            if !is_f_leibniz_derivation(a, &t, &id)? {
                return Err(Error::Inconsistent(format!("identity fails at order {n} although A^{n} = 0")));
            }
        }
    }
    Ok(InvertibleWitness {
        map: Some(id.clone()),
        order: n,
        certificate: Certificate::ExplicitInverse(id),
        construction: Some(Construction::IdentityFallback { reason: fallback_reason }),
    })
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

/// Compositions of `k` into `parts` nonnegative summands.
fn compositions(k: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![k]];
    }
    let mut out = Vec::new();
    for first in 0..=k {
        for mut rest in compositions(k - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `d^k([x_1..x_n]_{l(n)}) = sum k!/(i_1!..i_n!) [d^{i_1} x_1, .., d^{i_n} x_n]_{l(n)}`
/// on all basis tuples, for `d` in `LDer_{l(n)}(A)`.
pub fn verify_leibniz_rule(a: &Algebra, d: &Matrix, n: usize, k: usize) -> Result<bool> {
    check_map(a, d)?;
    if k > 4 {
        return Err(Error::OutOfRange { order: k, min: 0, max: 4 });
    }
    let f = BracketTree::left_comb(n)?;
    if !is_f_leibniz_derivation(a, &f, d)? {
        return Err(Error::Precondition(format!("map is not a left Leibniz-derivation of order {n}")));
    }
    let m = a.dim();
    let mut powers = vec![Matrix::identity(m)];
    for _ in 0..k {
        let next = d * powers.last().expect("nonempty");
        powers.push(next);
    }
    // images[p][i] = d^p(e_i)
    let images: Vec<Vec<Vector>> = powers.iter().map(|p| (0..m).map(|i| p.column(i)).collect()).collect();
    let terms: Vec<(Scalar, Vec<usize>)> = compositions(k, n)
        .into_iter()
        .map(|c| {
            let denom: i64 = c.iter().map(|&i| factorial(i)).product();
            (Scalar::from_int(factorial(k) / denom), c)
        })
        .collect();
    Ok(for_each_tuple(m, n, |idx| {
        let base: Vec<&[Scalar]> = idx.iter().map(|&i| images[0][i].as_slice()).collect();
        let lhs = powers[k].apply(&f.eval_unchecked(a, &base));
        let mut rhs = zero_vector(m);
        for (coef, c) in &terms {
            let args: Vec<&[Scalar]> = idx.iter().zip(c).map(|(&i, &p)| images[p][i].as_slice()).collect();
            crate::linalg::axpy(&mut rhs, coef, &f.eval_unchecked(a, &args));
        }
        lhs == rhs
    }))
}

/// `LDer_{l(s+1)}(A) ⊆ LDer_{l(t+1)}(A)` for `s | t`.
pub fn check_order_monotonicity(a: &Algebra, s: usize, t: usize) -> Result<bool> {
    if s == 0 || t % s != 0 {
        return Err(Error::Precondition(format!("{s} does not divide {t}")));
    }
    check_order(t + 1)?;
    let small = left_lder_space(a, s + 1)?;
    let big = left_lder_space(a, t + 1)?;
    small.space.is_subspace_of(&big.space)
}

/// `[d1, d2] ∈ S` for all basis pairs.
pub fn check_commutator_closure(space: &DerivationSpace) -> bool {
    let maps = space.basis_maps();
    maps.iter().enumerate().all(|(i, x)| {
        maps[i + 1..]
            .iter()
            .all(|y| space.space.contains(&Matrix::commutator(x, y).flatten()).expect("m^2 entries"))
    })
}

/// `d(R) ⊆ R` for every basis element `d` of `S`, with `R` an ideal.
pub fn radical_invariance_check(a: &Algebra, radical: &Subspace, space: &DerivationSpace) -> Result<bool> {
    check_len(a.dim(), space.algebra_dim)?;
    if !a.is_ideal(radical)? {
        return Err(Error::Precondition("supplied subspace is not an ideal".into()));
    }
    for d in space.basis_maps() {
        for r in radical.basis() {
            if !radical.contains(&d.apply(r))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Left-comb products of generalized eigenspaces land in the generalized
/// eigenspace of the summed eigenvalue.
pub fn eigenspace_product_check(a: &Algebra, d: &Matrix, n: usize) -> Result<bool> {
    check_map(a, d)?;
    if !is_f_leibniz_derivation(a, &BracketTree::left_comb(n)?, d)? {
        return Err(Error::Precondition(format!("map is not a left Leibniz-derivation of order {n}")));
    }
    let spectrum = rational_eigenvalues(d)?;
    if !spectrum.complete {
        return Err(Error::IrrationalSpectrum { found: spectrum.total_multiplicity(), degree: a.dim() });
    }
    let values: Vec<Scalar> = spectrum.eigenvalues.iter().map(|(v, _)| v.clone()).collect();
    let spaces: Vec<Subspace> = values.iter().map(|v| generalized_eigenspace(d, v)).collect::<Result<_>>()?;
    let target = |s: &Scalar| -> Result<Subspace> {
        match values.iter().position(|v| v == s) {
            Some(i) => Ok(spaces[i].clone()),
            None => Ok(Subspace::zero(a.dim())),
        }
    };
    let mut ok = true;
    for_each_tuple(values.len(), n, |idx| {
        let mut prod = spaces[idx[0]].clone();
        let mut sum = values[idx[0]].clone();
        for &i in &idx[1..] {
            prod = a.subspace_product(&prod, &spaces[i]).expect("same ambient");
            sum += &values[i];
        }
        ok = target(&sum).and_then(|t| prod.is_subspace_of(&t)).unwrap_or(false);
        ok
    });
    Ok(ok)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderResult {
    pub order: usize,
    pub left_dim: usize,
    pub left_witness: InvertibleWitness,
    /// Only computed at the first order with an invertible left
    /// Leibniz-derivation.
    pub all_dim: Option<usize>,
    pub all_witness: Option<InvertibleWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: &'static str,
    pub consistent: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoensReport {
    pub varieties: Vec<VarietyTag>,
    pub nilpotency_index: Option<usize>,
    pub right_nilpotency_index: Option<usize>,
    pub orders: Vec<OrderResult>,
    pub constructed: Option<InvertibleWitness>,
    pub verdicts: Vec<TheoremVerdict>,
    pub errors: Vec<String>,
}

impl MoensReport {
    pub fn invertible_left_order(&self) -> Option<usize> {
        self.orders.iter().find(|o| o.left_witness.is_invertible()).map(|o| o.order)
    }

    pub fn invertible_full_order(&self) -> Option<usize> {
        self.orders
            .iter()
            .find(|o| o.all_witness.as_ref().is_some_and(InvertibleWitness::is_invertible))
            .map(|o| o.order)
    }

    pub fn consistent(&self) -> bool {
        self.verdicts.iter().all(|v| v.consistent)
    }
}

/// Runs variety detection, nilpotency analysis, Leibniz-derivation spaces
/// and invertibility searches, then compares the outcome with every
/// nilpotency criterion that applies to the detected varieties.
pub fn moens_verdict(a: &Algebra, config: &SearchConfig) -> MoensReport {
    let varieties = varieties::detect(a);
    let mut errors = Vec::new();
    let nilpotency_index = a.chain(ChainKind::Power).map(|c| c.index).unwrap_or_else(|e| {
        errors.push(e.to_string());
        None
    });
    let right_nilpotency_index = a.chain(ChainKind::RightPower).map(|c| c.index).unwrap_or_else(|e| {
        errors.push(e.to_string());
        None
    });
    let mut orders = Vec::new();
    for n in 2..=config.max_order.min(MAX_ORDER) {
        let left = match left_lder_space(a, n) {
            Ok(s) => s,
            Err(e) => {
                errors.push(e.to_string());
                continue;
            }
        };
        let left_witness = contains_invertible(a, &left, config);
        let first = left_witness.is_invertible() && !orders.iter().any(|o: &OrderResult| o.left_witness.is_invertible());
        let (all_dim, all_witness) = if first {
            match lder_space(a, n) {
                Ok(s) => (Some(s.dim()), Some(contains_invertible(a, &s, config))),
                Err(e) => {
                    errors.push(e.to_string());
                    (None, None)
                }
            }
        } else {
            (None, None)
        };
        orders.push(OrderResult { order: n, left_dim: left.dim(), left_witness, all_dim, all_witness });
    }
    let constructed = match nilpotency_index {
        Some(_) => match construct_invertible_lder(a) {
            Ok(w) => Some(w),
            Err(e) => {
                errors.push(e.to_string());
                None
            }
        },
        None => None,
    };
    let mut report = MoensReport {
        varieties,
        nilpotency_index,
        right_nilpotency_index,
        orders,
        constructed,
        verdicts: Vec::new(),
        errors,
    };
    report.verdicts = verdicts(&report);
    report
}

fn search_summary(report: &MoensReport) -> String {
    let certified = report
        .orders
        .iter()
        .all(|o| matches!(o.left_witness.certificate, Certificate::CertifiedNone(_)));
    if certified {
        "no invertible left Leibniz-derivation, certified at every order".into()
    } else {
        "no invertible left Leibniz-derivation found by random search".into()
    }
}

fn verdicts(r: &MoensReport) -> Vec<TheoremVerdict> {
    let has = |t| r.varieties.contains(&t);
    let nilpotent = r.nilpotency_index.is_some();
    let left_found = r.invertible_left_order();
    let mut out = Vec::new();

    // Nilpotent algebras always carry an invertible Leibniz-derivation.
    let constructed_ok = r.constructed.as_ref().is_some_and(InvertibleWitness::is_invertible);
    out.push(TheoremVerdict {
        theorem: "nilpotent-has-invertible",
        consistent: !nilpotent || constructed_ok,
        detail: match (&r.constructed, nilpotent) {
            (Some(w), true) => format!("constructed invertible Leibniz-derivation of order {}", w.order),
            (None, true) => "nilpotent but construction failed".into(),
            _ => "not nilpotent; nothing to construct".into(),
        },
    });

    let iff = |theorem: &'static str| {
        let consistent = match (nilpotent, left_found) {
            (true, _) => constructed_ok,
            (false, Some(_)) => false,
            (false, None) => true,
        };
        let detail = match (nilpotent, left_found) {
            (true, _) => "nilpotent with an invertible Leibniz-derivation".to_string(),
            (false, Some(n)) => format!("not nilpotent yet an invertible left Leibniz-derivation of order {n} exists"),
            (false, None) => format!("not nilpotent; {}", search_summary(r)),
        };
        TheoremVerdict { theorem, consistent, detail }
    };
    if has(VarietyTag::Malcev) {
        out.push(iff("moens-malcev"));
    }
    if has(VarietyTag::Jordan) {
        out.push(iff("moens-jordan"));
    }
    if has(VarietyTag::MinusOneOne) {
        out.push(iff("moens-minus-one-one"));
    }
    if has(VarietyTag::Zinbiel) {
        out.push(iff("moens-zinbiel"));
    }
    if has(VarietyTag::NoncommutativeJordan) && has(VarietyTag::MalcevAdmissible) {
        out.push(iff("moens-ncj-malcev-admissible"));
    }
    if has(VarietyTag::RightAlternative) {
        // One direction only: an invertible Leibniz-derivation forces right
        // nilpotency, not nilpotency.
        let right_nilpotent = r.right_nilpotency_index.is_some();
        let full = r.invertible_full_order();
        out.push(TheoremVerdict {
            theorem: "right-alternative",
            consistent: full.is_none() || right_nilpotent,
            detail: match (full, right_nilpotent) {
                (Some(n), true) => format!("invertible Leibniz-derivation of order {n}; right nilpotent as required"),
                (Some(n), false) => format!("invertible Leibniz-derivation of order {n} but not right nilpotent"),
                (None, _) => "no invertible Leibniz-derivation found; nothing to check".into(),
            },
        });
    }
    out
}

/// Defect `d(xy) - d(x)y - xd(y)` for basis pairs, used by tests as a quick
/// derivation check.
pub fn derivation_defect(a: &Algebra, d: &Matrix, i: usize, j: usize) -> Vector {
    let (x, y) = (a.basis_vector(i), a.basis_vector(j));
    let lhs = d.apply(&a.mul(&x, &y));
    let rhs = crate::linalg::add_vectors(&a.mul(&d.apply(&x), &y), &a.mul(&x, &d.apply(&y)));
    sub_vectors(&lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn dorofeev_phi_and_identity() {
        let d = catalog::dorofeev_algebra();
        let phi = catalog::dorofeev_phi();
        assert!(is_f_leibniz_derivation(&d, &BracketTree::left_comb(2).unwrap(), &phi).unwrap());
        let id = Matrix::identity(5);
        assert!(is_f_leibniz_derivation(&d, &BracketTree::left_comb(4).unwrap(), &id).unwrap());
        assert!(!is_f_leibniz_derivation(&d, &BracketTree::left_comb(3).unwrap(), &id).unwrap());
    }

    #[test]
    fn space_dimensions() {
        assert_eq!(der_space(&catalog::dorofeev_algebra()).dim(), 7);
        assert_eq!(der_space(&catalog::sl2()).dim(), 3);
        let z = Algebra::zero_algebra("z", 3).unwrap();
        assert!(f_lder_space(&z, &BracketTree::parse("(x(xx))").unwrap()).unwrap().is_full());
        assert_eq!(left_lder_space(&catalog::dorofeev_algebra(), 4).unwrap().dim(), 25);
        let mat2 = catalog::mat2();
        assert_eq!(left_lder_space(&mat2, 3).unwrap().dim(), 3);
        assert_eq!(lder_space(&mat2, 3).unwrap().dim(), 3);
        assert!(left_lder_space(&mat2, 7).is_err());
    }

    #[test]
    fn invertibility_search() {
        let config = SearchConfig::default();
        let d = catalog::dorofeev_algebra();
        let w = contains_invertible(&d, &der_space(&d), &config);
        assert!(w.is_invertible());
        let m7 = catalog::m7();
        let w = contains_invertible(&m7, &der_space(&m7), &config);
        assert_eq!(w.certificate, Certificate::CertifiedNone("odd-dimensional skew family".into()));
        let empty = DerivationSpace {
            algebra_dim: 2,
            order: 2,
            arrangement: Arrangement::Left,
            space: Subspace::zero(4),
        };
        assert_eq!(contains_invertible(&catalog::zinbiel2(), &empty, &config).certificate, Certificate::NoneFound { trials: 0 });
    }

    #[test]
    fn construction_branches() {
        let h = catalog::heisenberg();
        let w = construct_invertible_lder(&h).unwrap();
        assert_eq!(w.order, 2);
        assert_eq!(w.construction, Some(Construction::Filtration { q: 2 }));
        assert_eq!(w.map.unwrap(), Matrix::diagonal(&[q(1), q(1), q(2)]));

        let z = Algebra::zero_algebra("z", 3).unwrap();
        let w = construct_invertible_lder(&z).unwrap();
        assert_eq!(w.order, 2);
        assert!(matches!(w.construction, Some(Construction::IdentityFallback { .. })));

        assert!(matches!(construct_invertible_lder(&catalog::sl2()), Err(Error::NotNilpotent(_))));
    }

    #[test]
    fn leibniz_rule_examples() {
        let d = catalog::dorofeev_algebra();
        assert!(verify_leibniz_rule(&d, &catalog::dorofeev_phi(), 2, 2).unwrap());
        let id = Matrix::identity(5);
        assert!(verify_leibniz_rule(&d, &id, 4, 3).unwrap());
        assert!(verify_leibniz_rule(&d, &id, 3, 2).is_err());
        assert!(verify_leibniz_rule(&d, &id, 4, 5).is_err());
    }

    #[test]
    fn monotonicity_and_closure() {
        let d = catalog::dorofeev_algebra();
        assert!(check_order_monotonicity(&d, 1, 2).unwrap());
        assert!(check_order_monotonicity(&d, 1, 3).unwrap());
        assert!(check_order_monotonicity(&d, 2, 2).unwrap());
        assert!(check_order_monotonicity(&d, 2, 3).is_err());
        assert!(check_commutator_closure(&der_space(&catalog::sl2())));
        assert!(check_commutator_closure(&left_lder_space(&d, 3).unwrap()));
    }

    #[test]
    fn radical_invariance_examples() {
        let sd = catalog::sl2_semidirect_v2();
        let r = sd.form_radical_malcev().unwrap();
        let s = left_lder_space(&sd, 3).unwrap();
        assert!(radical_invariance_check(&sd, &r, &s).unwrap());
        assert!(radical_invariance_check(&sd, &Subspace::zero(5), &s).unwrap());
        assert!(radical_invariance_check(&sd, &Subspace::full(5), &s).unwrap());
        let not_ideal = Subspace::span(5, [sd.basis_vector(0)]).unwrap();
        assert!(radical_invariance_check(&sd, &not_ideal, &s).is_err());
    }

    #[test]
    fn eigenspace_examples() {
        let h = catalog::heisenberg();
        assert!(eigenspace_product_check(&h, &Matrix::diagonal(&[q(1), q(1), q(2)]), 2).unwrap());
        let z = Algebra::zero_algebra("z", 2).unwrap();
        assert!(eigenspace_product_check(&z, &Matrix::diagonal(&[q(3), q(-1)]), 3).unwrap());
        let d = catalog::dorofeev_algebra();
        assert!(eigenspace_product_check(&d, &catalog::dorofeev_phi(), 2).unwrap());
        let rot = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(matches!(eigenspace_product_check(&z, &rot, 2), Err(Error::IrrationalSpectrum { .. })));
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(compositions(0, 4), vec![vec![0, 0, 0, 0]]);
    }
}
