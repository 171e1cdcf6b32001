//! Structure-constant algebras and everything computed directly from the
//! multiplication table: operators, subspace products, the three power
//! chains, the multiplication algebra, Killing and trace forms, and radicals
//! obtained from those forms.

use std::fmt;

use crate::error::{check_len, Error, Result};
use crate::linalg::{
    axpy, det_and_inverse, dot, is_zero_vector, nullspace, rank, unit_vector, zero_vector, Matrix,
    Subspace, Vector,
};
use crate::scalar::Scalar;
use crate::varieties::{self, VarietyTag};

/// A finite-dimensional algebra `e_i e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone)]
pub struct Algebra {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<Vector>>,
    // nonzero coordinates of each basis product, for fast multiplication
    sparse: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({:?}, dim {})", self.name, self.dim())
    }
}

fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl Algebra {
    /// `table[i][j]` holds the coordinates of `e_i e_j`.
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<Vector>>) -> Result<Self> {
        let dim = table.len();
        if dim == 0 {
            return Err(Error::Precondition("algebra dimension must be at least 1".into()));
        }
        check_len(dim, labels.len())?;
        for row in &table {
            check_len(dim, row.len())?;
            for v in row {
                check_len(dim, v.len())?;
            }
        }
        let sparse = table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(k, c)| (k, c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(Algebra { name: name.into(), labels, table, sparse })
    }

    /// Builds an algebra from its nonzero basis products `(i, j, [(k, c)])`.
    pub fn from_products(
        name: impl Into<String>,
        labels: &[&str],
        products: &[(usize, usize, Vec<(usize, Scalar)>)],
    ) -> Result<Self> {
        let dim = labels.len();
        let mut table = vec![vec![zero_vector(dim); dim]; dim];
        for (i, j, terms) in products {
            if *i >= dim || *j >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: (*i).max(*j) + 1 });
            }
            for (k, c) in terms {
                if *k >= dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: k + 1 });
                }
                table[*i][*j][*k] += c;
            }
        }
        Algebra::new(name, labels.iter().map(|s| s.to_string()).collect(), table)
    }

    pub fn zero_algebra(name: impl Into<String>, dim: usize) -> Result<Self> {
        let table = vec![vec![zero_vector(dim); dim]; dim];
        Algebra::new(name, default_labels(dim), table)
    }

    /// Builds an algebra from a bilinear product on coordinate vectors.
    pub fn from_bilinear(
        name: impl Into<String>,
        labels: Vec<String>,
        mut product: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let dim = labels.len();
        let table = (0..dim).map(|i| (0..dim).map(|j| product(i, j)).collect()).collect();
        Algebra::new(name, labels, table)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<Vector>] {
        &self.table
    }

    /// Coordinates of `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    /// Product without length checks; callers guarantee `dim`-length inputs.
    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in &self.sparse[i][j] {
                    out[*k] += &(&s * c);
                }
            }
        }
        out
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        check_len(self.dim(), x.len())?;
        check_len(self.dim(), y.len())?;
        Ok(self.mul(x, y))
    }

    /// Matrix of `a -> x a`; column `j` is `x e_j`.
    pub fn left_op(&self, x: &[Scalar]) -> Result<Matrix> {
        check_len(self.dim(), x.len())?;
        let m = self.dim();
        let mut op = Matrix::zeros(m, m);
        for j in 0..m {
            let col = self.mul(x, &unit_vector(m, j));
            for (k, c) in col.into_iter().enumerate() {
                op.set(k, j, c);
            }
        }
        Ok(op)
    }

    /// Matrix of `a -> a x`; column `j` is `e_j x`.
    pub fn right_op(&self, x: &[Scalar]) -> Result<Matrix> {
        check_len(self.dim(), x.len())?;
        let m = self.dim();
        let mut op = Matrix::zeros(m, m);
        for j in 0..m {
            let col = self.mul(&unit_vector(m, j), x);
            for (k, c) in col.into_iter().enumerate() {
                op.set(k, j, c);
            }
        }
        Ok(op)
    }

    pub fn left_basis_op(&self, i: usize) -> Matrix {
        self.left_op(&self.basis_vector(i)).expect("basis vector has algebra length")
    }

    pub fn right_basis_op(&self, i: usize) -> Matrix {
        self.right_op(&self.basis_vector(i)).expect("basis vector has algebra length")
    }

    pub fn is_commutative(&self) -> bool {
        let m = self.dim();
        (0..m).all(|i| (i + 1..m).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn is_anticommutative(&self) -> bool {
        let m = self.dim();
        (0..m).all(|i| {
            is_zero_vector(&self.table[i][i])
                && (i + 1..m).all(|j| {
                    self.table[i][j].iter().zip(&self.table[j][i]).all(|(a, b)| (a + b).is_zero())
                })
        })
    }

    /// A two-sided unit, if one exists.
    pub fn unit(&self) -> Option<Vector> {
        let m = self.dim();
        // u e_j = e_j and e_j u = e_j for all j is a linear system in u.
        let mut rows = Vec::with_capacity(2 * m * m);
        let mut rhs = Vec::with_capacity(2 * m * m);
        for j in 0..m {
            for k in 0..m {
                rows.push((0..m).map(|i| self.table[i][j][k].clone()).collect::<Vector>());
                rhs.push(if j == k { Scalar::one() } else { Scalar::zero() });
                rows.push((0..m).map(|i| self.table[j][i][k].clone()).collect::<Vector>());
                rhs.push(if j == k { Scalar::one() } else { Scalar::zero() });
            }
        }
        // Solve via the kernel of the augmented system [A | -b].
        let aug: Vec<Vector> = rows
            .into_iter()
            .zip(rhs)
            .map(|(mut r, b)| {
                r.push(-b);
                r
            })
            .collect();
        let kernel = nullspace(&Matrix::from_rows(m + 1, aug).ok()?);
        kernel.basis().iter().find(|v| !v[m].is_zero()).map(|v| {
            let s = v[m].recip().expect("nonzero");
            v[..m].iter().map(|x| x * &s).collect()
        })
    }

    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        check_len(self.dim(), u.ambient_dim())?;
        check_len(self.dim(), v.ambient_dim())?;
        let mut out = Subspace::zero(self.dim());
        for a in u.basis() {
            for b in v.basis() {
                out.insert(self.mul(a, b))?;
                if out.is_full() {
                    return Ok(out);
                }
            }
        }
        Ok(out)
    }

    fn whole(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// `A^1, ..., A^k` computed without early stopping.
    pub fn power_terms(&self, k: usize) -> Vec<Subspace> {
        let mut terms = vec![self.whole()];
        for n in 2..=k {
            let mut t = Subspace::zero(self.dim());
            for i in 1..n {
                let p = self
                    .subspace_product(&terms[i - 1], &terms[n - i - 1])
                    .expect("same ambient");
                t = t.sum(&p).expect("same ambient");
            }
            terms.push(t);
        }
        terms
    }

    /// `A^<1>, ..., A^<k>` computed without early stopping.
    pub fn right_power_terms(&self, k: usize) -> Vec<Subspace> {
        let mut terms = vec![self.whole()];
        for _ in 2..=k {
            let last = terms.last().expect("nonempty");
            terms.push(self.subspace_product(last, &self.whole()).expect("same ambient"));
        }
        terms
    }

    pub fn chain(&self, kind: ChainKind) -> Result<ChainReport> {
        let (dims, _) = self.chain_terms(kind)?;
        Ok(ChainReport::from_dims(kind, dims))
    }

    /// Chain subspaces until a repeat or zero; the last entry is terminal.
    pub fn chain_terms(&self, kind: ChainKind) -> Result<(Vec<usize>, Vec<Subspace>)> {
        let cap = self.dim() + 1;
        let mut terms: Vec<Subspace> = Vec::new();
        loop {
            let next = match (kind, terms.len()) {
                (ChainKind::Power | ChainKind::RightPower, 0) => self.whole(),
                (ChainKind::Solvable, 0) => self.subspace_product(&self.whole(), &self.whole())?,
                (ChainKind::Power, n) => {
                    // A^{n+1} = sum_{i=1}^{n} A^i A^{n+1-i}
                    let mut t = Subspace::zero(self.dim());
                    for i in 1..=n {
                        t = t.sum(&self.subspace_product(&terms[i - 1], &terms[n - i])?)?;
                    }
                    t
                }
                (ChainKind::RightPower, _) => {
                    self.subspace_product(terms.last().expect("nonempty"), &self.whole())?
                }
                (ChainKind::Solvable, _) => {
                    let last = terms.last().expect("nonempty");
                    self.subspace_product(last, last)?
                }
            };
            let stop = next.is_zero() || terms.last().is_some_and(|t| t.dim() == next.dim());
            terms.push(next);
            if stop {
                break;
            }
            if terms.len() > cap {
                return Err(Error::Inconsistent(format!(
                    "{kind} chain of {} did not terminate within {cap} steps",
                    self.name
                )));
            }
        }
        Ok((terms.iter().map(Subspace::dim).collect(), terms))
    }

    pub fn nilpotency_index(&self) -> Result<Option<usize>> {
        Ok(self.chain(ChainKind::Power)?.index)
    }

    pub fn right_nilpotency_index(&self) -> Result<Option<usize>> {
        Ok(self.chain(ChainKind::RightPower)?.index)
    }

    /// Nilpotency decided twice: by the power chain and by nilpotency of the
    /// multiplication algebra. Disagreement is reported as an error.
    pub fn is_nilpotent(&self) -> Result<bool> {
        let by_chain = self.chain(ChainKind::Power)?.index.is_some();
        let by_operators = operator_algebra_is_nilpotent(&self.multiplication_algebra(), self.dim());
        if by_chain != by_operators {
            return Err(Error::Inconsistent(format!(
                "nilpotency of {}: power chain says {by_chain}, multiplication algebra says {by_operators}",
                self.name
            )));
        }
        Ok(by_chain)
    }

    /// The (non-unital) associative algebra generated by all `L_x`, `R_x`,
    /// as a subspace of flattened `m x m` operators.
    pub fn multiplication_algebra(&self) -> Subspace {
        let m = self.dim();
        let generators: Vec<Matrix> = (0..m)
            .flat_map(|i| [self.left_basis_op(i), self.right_basis_op(i)])
            .filter(|g| !g.is_zero())
            .collect();
        saturate(m, &generators, None)
    }

    /// `F id + M(A)`.
    pub fn unital_multiplication_algebra(&self) -> Subspace {
        let m = self.dim();
        let mut s = self.multiplication_algebra();
        s.insert(Matrix::identity(m).flatten()).expect("ambient m^2");
        s
    }

    pub fn jacobian(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector> {
        if !self.is_anticommutative() {
            return Err(Error::NotAnticommutative(self.name.clone()));
        }
        check_len(self.dim(), x.len())?;
        check_len(self.dim(), y.len())?;
        check_len(self.dim(), z.len())?;
        Ok(self.jacobian_unchecked(x, y, z))
    }

    pub(crate) fn jacobian_unchecked(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let mut j = self.mul(&self.mul(x, y), z);
        let b = self.mul(&self.mul(z, x), y);
        let c = self.mul(&self.mul(y, z), x);
        for ((a, b), c) in j.iter_mut().zip(b).zip(c) {
            *a = &(&*a + &b) + &c;
        }
        j
    }

    /// Elements `z` with `J(z,A,A) = J(A,z,A) = J(A,A,z) = 0`.
    pub fn lie_center(&self) -> Result<Subspace> {
        if !self.is_anticommutative() {
            return Err(Error::NotAnticommutative(self.name.clone()));
        }
        let m = self.dim();
        let basis: Vec<Vector> = (0..m).map(|i| self.basis_vector(i)).collect();
        let mut rows: Vec<Vector> = Vec::new();
        for i in 0..m {
            for j in 0..m {
                let images: [Vec<Vector>; 3] = [
                    (0..m).map(|t| self.jacobian_unchecked(&basis[t], &basis[i], &basis[j])).collect(),
                    (0..m).map(|t| self.jacobian_unchecked(&basis[i], &basis[t], &basis[j])).collect(),
                    (0..m).map(|t| self.jacobian_unchecked(&basis[i], &basis[j], &basis[t])).collect(),
                ];
                for img in &images {
                    for k in 0..m {
                        let row: Vector = (0..m).map(|t| img[t][k].clone()).collect();
                        if !is_zero_vector(&row) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        Ok(nullspace(&Matrix::from_rows(m, rows)?))
    }

    /// `chi(x, y) = Tr(R_x R_y)`.
    pub fn killing_form(&self) -> BilinearForm {
        let m = self.dim();
        let ops: Vec<Matrix> = (0..m).map(|i| self.right_basis_op(i)).collect();
        let gram = Matrix::from_fn(m, m, |i, j| (&ops[i] * &ops[j]).trace());
        BilinearForm { gram, label: "killing".into() }
    }

    /// `tau(x, y) = Tr(L_{xy})`.
    pub fn trace_form(&self) -> BilinearForm {
        let m = self.dim();
        let gram = Matrix::from_fn(m, m, |i, j| {
            self.left_op(&self.table[i][j]).expect("table vector has algebra length").trace()
        });
        BilinearForm { gram, label: "trace".into() }
    }

    /// Radical of a Malcev algebra as the Killing-orthogonal complement of `A^2`.
    pub fn form_radical_malcev(&self) -> Result<Subspace> {
        if !varieties::satisfies(self, VarietyTag::Malcev).holds {
            return Err(Error::Precondition(format!("{} is not a Malcev algebra", self.name)));
        }
        let chi = self.killing_form();
        let square = self.subspace_product(&self.whole(), &self.whole())?;
        let rows: Vec<Vector> = square.basis().iter().map(|y| chi.gram.apply(y)).collect();
        let radical = nullspace(&Matrix::from_rows(self.dim(), rows)?);
        self.validate_radical(&radical, |q| q.killing_form())?;
        Ok(radical)
    }

    /// Radical of a Jordan algebra as the radical of the trace form.
    pub fn form_radical_jordan(&self) -> Result<Subspace> {
        if !varieties::satisfies(self, VarietyTag::Jordan).holds {
            return Err(Error::Precondition(format!("{} is not a Jordan algebra", self.name)));
        }
        let radical = nullspace(&self.trace_form().gram);
        self.validate_radical(&radical, |q| q.trace_form())?;
        Ok(radical)
    }

    fn validate_radical(&self, radical: &Subspace, form: impl Fn(&Algebra) -> BilinearForm) -> Result<()> {
        if !self.is_ideal(radical)? {
            return Err(Error::RadicalCriterionInapplicable(format!(
                "candidate radical of {} is not an ideal",
                self.name
            )));
        }
        if !self.is_solvable_subspace(radical)? {
            return Err(Error::RadicalCriterionInapplicable(format!(
                "candidate radical of {} is not solvable",
                self.name
            )));
        }
        if let Some(quotient) = self.quotient(radical)? {
            if !form(&quotient).is_nondegenerate() {
                return Err(Error::RadicalCriterionInapplicable(format!(
                    "form on {} modulo the candidate radical is degenerate",
                    self.name
                )));
            }
        }
        Ok(())
    }

    /// Two-sided ideal test: `A I ⊆ I` and `I A ⊆ I`.
    pub fn is_ideal(&self, ideal: &Subspace) -> Result<bool> {
        check_len(self.dim(), ideal.ambient_dim())?;
        let whole = self.whole();
        Ok(self.subspace_product(&whole, ideal)?.is_subspace_of(ideal)?
            && self.subspace_product(ideal, &whole)?.is_subspace_of(ideal)?)
    }

    /// Solvable chain of the subalgebra spanned by `b` reaches zero.
    pub fn is_solvable_subspace(&self, b: &Subspace) -> Result<bool> {
        let mut cur = b.clone();
        loop {
            if cur.is_zero() {
                return Ok(true);
            }
            let next = self.subspace_product(&cur, &cur)?;
            if next.dim() == cur.dim() {
                return Ok(false);
            }
            cur = next;
        }
    }

    /// `A / I` on the complement spanned by the non-pivot basis vectors of
    /// `I`; `None` when `I = A`. `I` must be an ideal.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Option<Algebra>> {
        check_len(self.dim(), ideal.ambient_dim())?;
        let keep = ideal.complement_indices();
        if keep.is_empty() {
            return Ok(None);
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut table = Vec::with_capacity(keep.len());
        for &a in &keep {
            let mut row = Vec::with_capacity(keep.len());
            for &b in &keep {
                let r = ideal.reduce(&self.table[a][b])?;
                row.push(keep.iter().map(|&k| r[k].clone()).collect());
            }
            table.push(row);
        }
        Algebra::new(format!("{}/I", self.name), labels, table).map(Some)
    }

    /// Direct sum `A ⊕ B` with basis of `A` first.
    pub fn direct_sum(&self, other: &Algebra, name: impl Into<String>) -> Algebra {
        let (m, n) = (self.dim(), other.dim());
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let table = (0..m + n)
            .map(|i| {
                (0..m + n)
                    .map(|j| {
                        let mut v = zero_vector(m + n);
                        if i < m && j < m {
                            v[..m].clone_from_slice(&self.table[i][j]);
                        } else if i >= m && j >= m {
                            v[m..].clone_from_slice(&other.table[i - m][j - m]);
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        Algebra::new(name, labels, table).expect("direct sum of valid algebras")
    }
}

/// Associative closure of `generators` (optionally starting from `seed`).
pub(crate) fn saturate(m: usize, generators: &[Matrix], seed: Option<Subspace>) -> Subspace {
    let mut space = seed.unwrap_or_else(|| Subspace::zero(m * m));
    let mut frontier: Vec<Matrix> = Vec::new();
    for g in generators {
        if space.insert(g.flatten()).expect("ambient m^2") {
            frontier.push(g.clone());
        }
    }
    while let Some(w) = frontier.pop() {
        for g in generators {
            let p = g * &w;
            if space.insert(p.flatten()).expect("ambient m^2") {
                frontier.push(p);
            }
        }
    }
    space
}

/// Product subspace `span{XY}` of two operator subspaces.
pub fn operator_subspace_product(m: usize, u: &Subspace, v: &Subspace) -> Subspace {
    let us: Vec<Matrix> = u.basis().iter().map(|x| Matrix::from_flat(m, x).expect("m^2")).collect();
    let vs: Vec<Matrix> = v.basis().iter().map(|x| Matrix::from_flat(m, x).expect("m^2")).collect();
    let mut out = Subspace::zero(m * m);
    for a in &us {
        for b in &vs {
            out.insert((a * b).flatten()).expect("m^2");
        }
    }
    out
}

/// Nilpotency of an associative operator algebra by its power chain.
pub fn operator_algebra_is_nilpotent(ops: &Subspace, m: usize) -> bool {
    let mut cur = ops.clone();
    loop {
        if cur.is_zero() {
            return true;
        }
        let next = operator_subspace_product(m, &cur, ops);
        if next.dim() == cur.dim() {
            return false;
        }
        cur = next;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainKind {
    Power,
    RightPower,
    Solvable,
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainKind::Power => "power",
            ChainKind::RightPower => "right_power",
            ChainKind::Solvable => "solvable",
        })
    }
}

/// Dimensions of a chain, step 1 first.
///
/// For `Power` and `RightPower` step 1 is `A` itself; for `Solvable` step 1
/// is `A^(1) = A^2`. `index` is the first step whose subspace is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub kind: ChainKind,
    pub dims: Vec<usize>,
    pub stabilized_at: usize,
    pub terminal_dim: usize,
    pub index: Option<usize>,
}

impl ChainReport {
    fn from_dims(kind: ChainKind, dims: Vec<usize>) -> Self {
        let terminal_dim = *dims.last().expect("chains have at least one step");
        let stabilized_at = if terminal_dim == 0 || dims.len() == 1 {
            dims.len()
        } else {
            dims.len() - 1
        };
        let index = (terminal_dim == 0).then_some(dims.len());
        ChainReport { kind, dims, stabilized_at, terminal_dim, index }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: Matrix,
    pub label: String,
}

impl BilinearForm {
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.gram.apply(y))
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn rank(&self) -> usize {
        rank(&self.gram)
    }

    pub fn is_nondegenerate(&self) -> bool {
        det_and_inverse(&self.gram).map(|(d, _)| !d.is_zero()).unwrap_or(false)
    }

    pub fn radical(&self) -> Subspace {
        nullspace(&self.gram)
    }
}

/// `x -> sum_i x_i v_i` helper used by operator constructions.
pub(crate) fn combine(coeffs: &[Scalar], vectors: &[Vector], len: usize) -> Vector {
    let mut out = zero_vector(len);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn dorofeev_products() {
        let a = catalog::dorofeev_algebra();
        let e = |i| a.basis_vector(i);
        // a=0 b=1 c=2 d=3 e=4
        let mut minus_c = zero_vector(5);
        minus_c[2] = q(-1);
        assert_eq!(a.multiply(&e(0), &e(1)).unwrap(), minus_c);
        assert_eq!(a.multiply(&e(0), &e(2)).unwrap(), e(3));
        assert_eq!(a.multiply(&e(0), &zero_vector(5)).unwrap(), zero_vector(5));
        assert!(a.multiply(&e(0), &zero_vector(4)).is_err());
        // R_b(a) = ab = -c
        assert_eq!(a.right_op(&e(1)).unwrap().column(0), minus_c);
        assert!(a.left_op(&zero_vector(5)).unwrap().is_zero());
    }

    #[test]
    fn heisenberg_operators_and_square() {
        let h = catalog::heisenberg();
        let x = h.basis_vector(0);
        assert_eq!(h.left_op(&x).unwrap().column(1), h.basis_vector(2));
        let whole = Subspace::full(3);
        let sq = h.subspace_product(&whole, &whole).unwrap();
        assert_eq!(sq, Subspace::span(3, [h.basis_vector(2)]).unwrap());
        assert!(h.subspace_product(&whole, &Subspace::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn dorofeev_square_is_cde() {
        let a = catalog::dorofeev_algebra();
        let whole = Subspace::full(5);
        let sq = a.subspace_product(&whole, &whole).unwrap();
        assert_eq!(sq, Subspace::span(5, (2..5).map(|i| a.basis_vector(i))).unwrap());
    }

    #[test]
    fn chain_examples() {
        let h = catalog::heisenberg();
        let c = h.chain(ChainKind::Power).unwrap();
        assert_eq!(c.dims, vec![3, 1, 0]);
        assert_eq!(c.index, Some(3));

        let d = catalog::dorofeev_algebra();
        let c = d.chain(ChainKind::Power).unwrap();
        assert_eq!(c.dims, vec![5, 3, 3]);
        assert_eq!(c.index, None);
        assert_eq!(c.stabilized_at, 2);
        assert_eq!(c.terminal_dim, 3);
        let r = d.chain(ChainKind::RightPower).unwrap();
        assert_eq!(r.dims, vec![5, 3, 1, 0]);
        assert_eq!(r.index, Some(4));

        let z = Algebra::zero_algebra("zero", 4).unwrap();
        assert_eq!(z.chain(ChainKind::Power).unwrap().index, Some(2));
        assert_eq!(z.chain(ChainKind::Solvable).unwrap().index, Some(1));
    }

    #[test]
    fn nilpotency_two_ways() {
        assert!(catalog::heisenberg().is_nilpotent().unwrap());
        assert!(!catalog::dorofeev_algebra().is_nilpotent().unwrap());
        assert!(Algebra::zero_algebra("zero", 4).unwrap().is_nilpotent().unwrap());
    }

    #[test]
    fn multiplication_algebra_examples() {
        assert!(Algebra::zero_algebra("z", 3).unwrap().multiplication_algebra().is_zero());
        assert_eq!(catalog::mat2().multiplication_algebra().dim(), 16);
        let h = catalog::heisenberg().multiplication_algebra();
        assert!(operator_algebra_is_nilpotent(&h, 3));
        // every product of two Heisenberg multiplication operators vanishes
        assert!(operator_subspace_product(3, &h, &h).is_zero());
    }

    #[test]
    fn jacobian_examples() {
        let s = catalog::sl2();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let j_ = s.jacobian(&s.basis_vector(i), &s.basis_vector(j), &s.basis_vector(k)).unwrap();
                    assert!(is_zero_vector(&j_));
                }
            }
        }
        let m7 = catalog::m7();
        let e = |i| m7.basis_vector(i);
        let witness = (0..7).any(|i| {
            (0..7).any(|j| (0..7).any(|k| !is_zero_vector(&m7.jacobian(&e(i), &e(j), &e(k)).unwrap())))
        });
        assert!(witness);
        assert!(is_zero_vector(&m7.jacobian(&e(1), &e(1), &e(2)).unwrap()));
        assert!(catalog::mat2().jacobian(&zero_vector(4), &zero_vector(4), &zero_vector(4)).is_err());
    }

    #[test]
    fn lie_center_examples() {
        assert!(Algebra::zero_algebra("ab", 3).unwrap().lie_center().unwrap().is_full());
        assert!(catalog::m7().lie_center().unwrap().is_zero());
        assert!(catalog::sl2().lie_center().unwrap().is_full());
        assert!(catalog::sl2_semidirect_v2().lie_center().unwrap().is_full());
        assert!(catalog::mat2().lie_center().is_err());
    }

    #[test]
    fn killing_form_examples() {
        let s = catalog::sl2();
        // basis (e, h, f)
        let chi = s.killing_form();
        assert_eq!(chi.gram.get(1, 1), &q(8));
        assert!(chi.is_symmetric());
        assert!(Algebra::zero_algebra("ab", 3).unwrap().killing_form().gram.is_zero());
        assert!(catalog::m7().killing_form().is_nondegenerate());
    }

    #[test]
    fn malcev_radicals() {
        assert!(catalog::sl2().form_radical_malcev().unwrap().is_zero());
        let sd = catalog::sl2_semidirect_v2();
        let module = Subspace::span(5, [sd.basis_vector(3), sd.basis_vector(4)]).unwrap();
        assert_eq!(sd.form_radical_malcev().unwrap(), module);
        assert!(Algebra::zero_algebra("ab", 3).unwrap().form_radical_malcev().unwrap().is_full());
        assert!(catalog::mat2().form_radical_malcev().is_err());
    }

    #[test]
    fn jordan_radicals() {
        let p = catalog::plus_mat2();
        assert!(p.form_radical_jordan().unwrap().is_zero());
        let nil = catalog::jordan_nil3();
        assert!(nil.form_radical_jordan().unwrap().is_full());
        let mixed = p.direct_sum(&nil, "mixed");
        let expected = Subspace::span(7, (4..7).map(|i| mixed.basis_vector(i))).unwrap();
        assert_eq!(mixed.form_radical_jordan().unwrap(), expected);
    }

    #[test]
    fn unit_detection() {
        let u = catalog::mat2().unit().unwrap();
        assert_eq!(u, vec![q(1), q(0), q(0), q(1)]);
        assert!(catalog::heisenberg().unit().is_none());
    }

    #[test]
    fn quotient_by_radical() {
        let sd = catalog::sl2_semidirect_v2();
        let r = sd.form_radical_malcev().unwrap();
        let qa = sd.quotient(&r).unwrap().unwrap();
        assert_eq!(qa.dim(), 3);
        assert!(qa.killing_form().is_nondegenerate());
        assert!(sd.quotient(&Subspace::full(5)).unwrap().is_none());
    }
}
