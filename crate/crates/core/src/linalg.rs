//! Dense exact linear algebra over [`Scalar`].
//!
//! Subspaces are always kept in reduced row-echelon form, so two subspaces
//! of the same ambient space are equal exactly when their bases are equal.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{check_len, Error, Result};
use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(s * x);
        }
    }
}

pub fn scale_vector(s: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| s * x).collect()
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn scalar_matrix(n: usize, s: &Scalar) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = s.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            check_len(cols, r.len())?;
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Convenience for literals in tests and catalog constructors.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                r.iter().map(|&x| Scalar::from_int(x))
            })
            .collect();
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Reshapes a row-major vector of length `n*n`.
    pub fn from_flat(n: usize, v: &[Scalar]) -> Result<Self> {
        check_len(n * n, v.len())?;
        Ok(Matrix { rows: n, cols: n, data: v.to_vec() })
    }

    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector length mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| s * x).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `[a, b] = ab - ba`
    pub fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
        &(a * b) - &(b * a)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        check_len(self.cols, other.cols)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                axpy(row, a, rhs.row(k));
            }
        }
        out
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: add_vectors(&self.data, &rhs.data) }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: sub_vectors(&self.data, &rhs.data) }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&Scalar::from_int(-1))
    }
}

fn rref_rows(rows: &mut Vec<Vector>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = -&row[c];
            axpy(&mut row[c..], &f, &pivot_row[c..]);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row-echelon form and rank.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let mut rows = m.to_rows();
    let pivots = rref_rows(&mut rows, m.cols);
    let rank = pivots.len();
    let data = rows.into_iter().flatten().collect();
    (Matrix { rows: m.rows, cols: m.cols, data }, rank)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1
}

/// Kernel of `m` as a subspace of `Q^cols`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let mut rows = m.to_rows();
    let pivots = rref_rows(&mut rows, m.cols);
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|c| !pivot_set.contains(c)) {
        let mut v = zero_vector(m.cols);
        v[free] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -&rows[r][free];
        }
        basis.push(v);
    }
    Subspace::span(m.cols, basis).expect("kernel vectors have ambient length")
}

/// Exact determinant, plus the inverse when it exists.
pub fn det_and_inverse(m: &Matrix) -> Result<(Scalar, Option<Matrix>)> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a: Vec<Vector> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend(unit_vector(n, i));
            r
        })
        .collect();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok((Scalar::zero(), None));
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det = &det * &piv;
        let inv = piv.recip().expect("nonzero pivot");
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = -&row[c];
                axpy(row, &f, &prow);
            }
        }
    }
    let inv = Matrix::from_fn(n, n, |i, j| a[i][n + j].clone());
    Ok((det, Some(inv)))
}

/// Dense univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Scalar::zero());
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Polynomial::new(c.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Scalar {
        self.coeffs.last().expect("nonempty")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::scalar_matrix(n, c);
        }
        acc
    }

    /// Quotient and remainder on division by `t - r`.
    pub fn divide_linear(&self, r: &Scalar) -> (Polynomial, Scalar) {
        let n = self.degree();
        if n == 0 {
            return (Polynomial::new(vec![Scalar::zero()]), self.coeffs[0].clone());
        }
        let mut q = vec![Scalar::zero(); n];
        let mut carry = Scalar::zero();
        for i in (0..=n).rev() {
            let v = &self.coeffs[i] + &(&carry * r);
            if i == 0 {
                return (Polynomial::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(first && i == 0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(tI - M)` by Berkowitz's division-free
/// recurrence.
pub fn char_poly(m: &Matrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    // Coefficients highest degree first.
    let mut p: Vec<Scalar> = vec![Scalar::one()];
    for r in 0..n {
        // Leading block A_r, column c = A[0..r][r], row R = A[r][0..r], a = A[r][r].
        let a = m.get(r, r).clone();
        let c: Vector = (0..r).map(|i| m.get(i, r).clone()).collect();
        let row: Vector = (0..r).map(|j| m.get(r, j).clone()).collect();
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(Scalar::one());
        toeplitz.push(-&a);
        let mut v = c;
        for _ in 0..r {
            toeplitz.push(-dot(&row, &v));
            v = (0..r).map(|i| {
                let mut s = Scalar::zero();
                for (k, vk) in v.iter().enumerate() {
                    if !vk.is_zero() {
                        s += &(m.get(i, k) * vk);
                    }
                }
                s
            }).collect();
        }
        let mut next = vec![Scalar::zero(); r + 2];
        for (i, out) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate() {
                if i >= j && !pj.is_zero() {
                    *out += &(&toeplitz[i - j] * pj);
                }
            }
        }
        p = next;
    }
    p.reverse();
    Ok(Polynomial::new(p))
}

/// Rational part of a spectrum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalSpectrum {
    /// Distinct rational eigenvalues in increasing order, with algebraic multiplicity.
    pub eigenvalues: Vec<(Scalar, usize)>,
    /// Whether the multiplicities add up to the matrix size.
    pub complete: bool,
}

impl RationalSpectrum {
    pub fn total_multiplicity(&self) -> usize {
        self.eigenvalues.iter().map(|(_, k)| k).sum()
    }
}

const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_BOUND {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // A cofactor above the trial bound squared may be composite; treating it as
    // one atom can only hide roots, which then shows up as an incomplete spectrum.
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut ds = vec![BigInt::one()];
    for (p, e) in factor(n) {
        let mut next = Vec::with_capacity(ds.len() * (e as usize + 1));
        for d in &ds {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        ds = next;
    }
    ds
}

/// Rational eigenvalues via the rational-root theorem on the integer-cleared
/// characteristic polynomial.
pub fn rational_eigenvalues(m: &Matrix) -> Result<RationalSpectrum> {
    let poly = char_poly(m)?;
    let degree = poly.degree();
    let mut found: Vec<(Scalar, usize)> = Vec::new();
    let mut rest = poly.clone();

    let mut zero_mult = 0;
    while rest.degree() > 0 && rest.coeffs()[0].is_zero() {
        rest = rest.divide_linear(&Scalar::zero()).0;
        zero_mult += 1;
    }
    if zero_mult > 0 {
        found.push((Scalar::zero(), zero_mult));
    }

    if rest.degree() > 0 {
        let lcm = rest.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
        let ints: Vec<BigInt> = rest
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut candidates: BTreeSet<Scalar> = BTreeSet::new();
        let lead = ints.last().expect("nonempty").clone();
        let qs = divisors(&lead);
        for p in divisors(&ints[0]) {
            for q in &qs {
                let r = Scalar::from_ratio(p.clone(), q.clone());
                candidates.insert(-&r);
                candidates.insert(r);
            }
        }
        for r in candidates {
            let mut mult = 0;
            loop {
                if rest.degree() == 0 {
                    break;
                }
                let (q, rem) = rest.divide_linear(&r);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                found.push((r, mult));
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    let total: usize = found.iter().map(|(_, k)| k).sum();
    Ok(RationalSpectrum { eigenvalues: found, complete: total == degree })
}

/// `ker (M - λI)^n` with `n` the size of `M`.
pub fn generalized_eigenspace(m: &Matrix, lambda: &Scalar) -> Result<Subspace> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let shifted = m - &Matrix::scalar_matrix(n, lambda);
    Ok(nullspace(&shifted.pow(n as u32)))
}

/// A linear subspace of `Q^n`, stored by its reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(ambient {}, {:?})", self.ambient, self.rows)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ambient, self.rows.clone()).expect("rows have ambient length")
    }

    /// Standard basis indices spanning a complement (the non-pivot columns).
    pub fn complement_indices(&self) -> Vec<usize> {
        let piv: BTreeSet<usize> = self.pivots.iter().copied().collect();
        (0..self.ambient).filter(|i| !piv.contains(i)).collect()
    }

    /// Residual of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(self.ambient, v.len())?;
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = -&r[p];
                axpy(&mut r, &f, row);
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(is_zero_vector(&self.reduce(v)?))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> Result<bool> {
        let mut r = self.reduce(&v)?;
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].recip().expect("nonzero");
        if !inv.is_one() {
            for x in r.iter_mut().skip(p) {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = -&row[p];
                axpy(row, &f, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_len(self.ambient, other.ambient)?;
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone())?;
        }
        Ok(s)
    }

    /// Zassenhaus intersection: row-reduce `[U U; V 0]` and keep the right
    /// halves of rows whose left half vanishes.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_len(self.ambient, other.ambient)?;
        let n = self.ambient;
        let mut rows: Vec<Vector> = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.rows {
            let mut r = u.clone();
            r.extend(u.iter().cloned());
            rows.push(r);
        }
        for v in &other.rows {
            let mut r = v.clone();
            r.extend(zero_vector(n));
            rows.push(r);
        }
        rref_rows(&mut rows, 2 * n);
        let tails = rows
            .into_iter()
            .filter(|r| is_zero_vector(&r[..n]) && !is_zero_vector(&r[n..]))
            .map(|r| r[n..].to_vec());
        Subspace::span(n, tails)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_len(self.ambient, other.ambient)?;
        for v in &self.rows {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn subspace_sum(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.sum(v)
}

pub fn subspace_intersect(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.intersect(v)
}

pub fn subspace_contains(u: &Subspace, v: &[Scalar]) -> Result<bool> {
    u.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let (r, k) = rref(&Matrix::from_i64(&[&[1, 1], &[2, 2]]));
        assert_eq!(r, Matrix::from_i64(&[&[1, 1], &[0, 0]]));
        assert_eq!(k, 1);
        let (r, k) = rref(&Matrix::identity(3));
        assert_eq!((r, k), (Matrix::identity(3), 3));
        let (r, k) = rref(&Matrix::zeros(2, 2));
        assert_eq!((r, k), (Matrix::zeros(2, 2), 0));
    }

    #[test]
    fn nullspace_examples() {
        let k = nullspace(&Matrix::from_i64(&[&[1, 1], &[2, 2]]));
        assert_eq!(k, Subspace::span(2, [v(&[1, -1])]).unwrap());
        assert!(nullspace(&Matrix::identity(2)).is_zero());
        assert!(nullspace(&Matrix::zeros(1, 2)).is_full());
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_and_inverse(&Matrix::identity(3)).unwrap().0, q(1));
        let (d, inv) = det_and_inverse(&Matrix::zeros(2, 2)).unwrap();
        assert!(d.is_zero() && inv.is_none());
        assert!(matches!(det_and_inverse(&Matrix::zeros(2, 3)), Err(Error::NotSquare { .. })));
        let m = Matrix::from_i64(&[&[2, 1], &[7, 4]]);
        let (d, inv) = det_and_inverse(&m).unwrap();
        assert_eq!(d, q(1));
        assert_eq!(&m * &inv.unwrap(), Matrix::identity(2));
    }

    #[test]
    fn char_poly_examples() {
        let p = char_poly(&Matrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap();
        assert_eq!(p, Polynomial::from_i64(&[0, 0, 1]));
        let p = char_poly(&Matrix::from_i64(&[&[1, 0], &[0, 2]])).unwrap();
        assert_eq!(p, Polynomial::from_i64(&[2, -3, 1]));
        assert!(char_poly(&Matrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        let s = rational_eigenvalues(&Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]])).unwrap();
        assert_eq!(s.eigenvalues, vec![(q(1), 2), (q(2), 1)]);
        assert!(s.complete);
        let s = rational_eigenvalues(&Matrix::from_i64(&[&[0, -1], &[1, 0]])).unwrap();
        assert!(s.eigenvalues.is_empty());
        assert!(!s.complete);
        let half = Matrix::from_fn(2, 2, |i, j| if i == j { Scalar::new(1, 2) } else { Scalar::zero() });
        let s = rational_eigenvalues(&half).unwrap();
        assert_eq!(s.eigenvalues, vec![(Scalar::new(1, 2), 2)]);
    }

    #[test]
    fn generalized_eigenspace_examples() {
        let d = Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        assert_eq!(generalized_eigenspace(&d, &q(1)).unwrap().dim(), 2);
        let j = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert!(generalized_eigenspace(&j, &q(1)).unwrap().is_full());
    }

    #[test]
    fn subspace_examples() {
        let x = Subspace::span(2, [v(&[1, 0])]).unwrap();
        let y = Subspace::span(2, [v(&[0, 1])]).unwrap();
        let z = Subspace::zero(2);
        assert_eq!(x.sum(&z).unwrap(), x);
        assert_eq!(x.sum(&x).unwrap(), x);
        assert!(x.sum(&y).unwrap().is_full());
        assert_eq!(x.intersect(&x).unwrap(), x);
        assert!(x.intersect(&y).unwrap().is_zero());
        assert_eq!(x.intersect(&Subspace::full(2)).unwrap(), x);
        let k = Subspace::span(2, [v(&[1, -1])]).unwrap();
        assert!(k.contains(&v(&[0, 0])).unwrap());
        assert!(!k.contains(&v(&[1, 1])).unwrap());
        assert!(k.contains(&k.basis()[0]).unwrap());
        assert!(k.contains(&v(&[1])).is_err());
        assert!(x.sum(&Subspace::zero(3)).is_err());
        assert!(x.intersect(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn insert_keeps_rref() {
        let mut s = Subspace::zero(3);
        assert!(s.insert(v(&[0, 2, 4])).unwrap());
        assert!(s.insert(v(&[1, 1, 1])).unwrap());
        assert!(!s.insert(v(&[2, 4, 6])).unwrap());
        let (r, _) = rref(&s.basis_matrix());
        assert_eq!(r, s.basis_matrix());
        assert_eq!(s.pivots(), &[0, 1]);
    }

    #[test]
    fn divide_linear_roundtrip() {
        // (t-1)(t+2) = t^2 + t - 2
        let p = Polynomial::from_i64(&[-2, 1, 1]);
        let (quot, rem) = p.divide_linear(&q(1));
        assert!(rem.is_zero());
        assert_eq!(quot, Polynomial::from_i64(&[2, 1]));
        assert_eq!(p.eval(&q(3)), q(10));
    }
}
