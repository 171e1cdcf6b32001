//! Explicit n-ary algebras: induced algebras `A_f`, n-ary derivations,
//! n-solvability, ideals and the Filippov identity.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::bracket::BracketTree;
use crate::error::{check_len, Error, Result};
use crate::leibniz::MAX_ORDER;
use crate::linalg::{axpy, is_zero_vector, nullspace, sub_vectors, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

/// An n-ary algebra given by the products of basis tuples.
///
/// When `anticommutative` is set, only strictly increasing tuples are
/// stored; any other tuple is the signed product of its sorted form, and
/// tuples with a repeated index vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NAryAlgebra {
    name: String,
    arity: usize,
    labels: Vec<String>,
    entries: BTreeMap<Vec<usize>, Vector>,
    anticommutative: bool,
}

/// Sign of the sorting permutation, or `None` for a repeated index.
fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = idx.to_vec();
    let mut negative = false;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, negative))
}

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

/// Strictly increasing tuples of length `n` from `0..m`, lexicographically.
fn increasing_tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NChainReport {
    pub dims: Vec<usize>,
    pub stabilized_at: usize,
    pub n_solvable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilippovCheck {
    pub holds: bool,
    /// `(x_1..x_n, y_2..y_n)` of the first violation.
    pub witness: Option<Vec<usize>>,
}

impl NAryAlgebra {
    /// `entries` lists `(args, value)`; with `anticommutative` set, `args`
    /// must be strictly increasing.
    pub fn new(
        name: impl Into<String>,
        arity: usize,
        labels: Vec<String>,
        entries: Vec<(Vec<usize>, Vector)>,
        anticommutative: bool,
    ) -> Result<Self> {
        if arity < 2 {
            return Err(Error::OutOfRange { order: arity, min: 2, max: usize::MAX });
        }
        let m = labels.len();
        let mut map = BTreeMap::new();
        for (args, val) in entries {
            check_len(arity, args.len())?;
            check_len(m, val.len())?;
            if let Some(&bad) = args.iter().find(|&&i| i >= m) {
                return Err(Error::DimensionMismatch { expected: m, found: bad + 1 });
            }
            if anticommutative && args.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Precondition(format!(
                    "anticommutative entries need strictly increasing arguments, got {args:?}"
                )));
            }
            if !is_zero_vector(&val) {
                map.insert(args, val);
            }
        }
        Ok(NAryAlgebra { name: name.into(), arity, labels, entries: map, anticommutative })
    }

    /// `A_f`: the n-ary algebra `[a_1..a_n] = [a_1..a_n]_f`.
    pub fn from_bracketing(a: &Algebra, f: &BracketTree) -> Result<Self> {
        let n = f.leaf_count();
        if !(2..=MAX_ORDER).contains(&n) {
            return Err(Error::OutOfRange { order: n, min: 2, max: MAX_ORDER });
        }
        let m = a.dim();
        let basis: Vec<Vector> = (0..m).map(|i| a.basis_vector(i)).collect();
        let mut entries = Vec::new();
        for_each_tuple(m, n, |idx| {
            let args: Vec<&[Scalar]> = idx.iter().map(|&i| basis[i].as_slice()).collect();
            let v = f.eval_unchecked(a, &args);
            if !is_zero_vector(&v) {
                entries.push((idx.to_vec(), v));
            }
            true
        });
        NAryAlgebra::new(format!("{}_{}", a.name(), f.serialize()), n, a.labels().to_vec(), entries, false)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_flagged_anticommutative(&self) -> bool {
        self.anticommutative
    }

    /// Stored `(args, value)` pairs in key order.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vector)> {
        self.entries.iter()
    }

    /// Product of basis vectors `e_{idx_1} .. e_{idx_n}`.
    pub fn basis_product(&self, idx: &[usize]) -> Vector {
        let m = self.dim();
        if self.anticommutative {
            match sort_with_sign(idx) {
                None => zero_vector(m),
                Some((key, negative)) => match self.entries.get(&key) {
                    None => zero_vector(m),
                    Some(v) if negative => v.iter().map(|x| -x).collect(),
                    Some(v) => v.clone(),
                },
            }
        } else {
            self.entries.get(idx).cloned().unwrap_or_else(|| zero_vector(m))
        }
    }

    pub fn nary_product(&self, args: &[Vector]) -> Result<Vector> {
        check_len(self.arity, args.len())?;
        for a in args {
            check_len(self.dim(), a.len())?;
        }
        Ok(self.product_unchecked(args))
    }

    fn product_unchecked<V: AsRef<[Scalar]>>(&self, args: &[V]) -> Vector {
        let m = self.dim();
        let supports: Vec<Vec<(usize, &Scalar)>> = args
            .iter()
            .map(|a| a.as_ref().iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        let mut out = zero_vector(m);
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let mut pos = vec![0usize; self.arity];
        loop {
            let idx: Vec<usize> = pos.iter().zip(&supports).map(|(&p, s)| s[p].0).collect();
            let v = self.basis_product(&idx);
            if !is_zero_vector(&v) {
                let mut coef = Scalar::one();
                for (&p, s) in pos.iter().zip(&supports) {
                    coef = &coef * s[p].1;
                }
                axpy(&mut out, &coef, &v);
            }
            let mut k = self.arity;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                pos[k] += 1;
                if pos[k] < supports[k].len() {
                    break;
                }
                pos[k] = 0;
            }
        }
    }

    /// Span of `[u_1..u_n]` over basis vectors `u_i` of the `U_i`.
    pub fn nary_subspace_product(&self, spaces: &[Subspace]) -> Result<Subspace> {
        check_len(self.arity, spaces.len())?;
        for s in spaces {
            check_len(self.dim(), s.ambient_dim())?;
        }
        let mut out = Subspace::zero(self.dim());
        if spaces.iter().any(Subspace::is_zero) {
            return Ok(out);
        }
        let mut pos = vec![0usize; self.arity];
        loop {
            let args: Vec<&Vector> = pos.iter().zip(spaces).map(|(&p, s)| &s.basis()[p]).collect();
            out.insert(self.product_unchecked(&args))?;
            if out.is_full() {
                return Ok(out);
            }
            let mut k = self.arity;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                pos[k] += 1;
                if pos[k] < spaces[k].dim() {
                    break;
                }
                pos[k] = 0;
            }
        }
    }

    /// Direct check of `d[x_1..x_n] = sum_i [x_1, .., d x_i, .., x_n]` on
    /// basis tuples.
    pub fn is_nary_derivation(&self, d: &Matrix) -> Result<bool> {
        let m = self.dim();
        check_len(m, d.rows())?;
        check_len(m, d.cols())?;
        let basis: Vec<Vector> = (0..m).map(|i| unit_vector(m, i)).collect();
        let images: Vec<Vector> = (0..m).map(|j| d.column(j)).collect();
        Ok(for_each_tuple(m, self.arity, |idx| {
            let lhs = d.apply(&self.basis_product(idx));
            let mut rhs = zero_vector(m);
            let mut args: Vec<&Vector> = idx.iter().map(|&i| &basis[i]).collect();
            for j in 0..self.arity {
                args[j] = &images[idx[j]];
                let t = self.product_unchecked(&args);
                for (r, t) in rhs.iter_mut().zip(t) {
                    *r += &t;
                }
                args[j] = &basis[idx[j]];
            }
            lhs == rhs
        }))
    }

    /// Kernel of the derivation constraints in the `m^2` entries of `d`.
    pub fn nary_derivation_space(&self) -> Subspace {
        let m = self.dim();
        let mut constraints = Subspace::zero(m * m);
        let mut idx_buf = vec![0usize; self.arity];
        for_each_tuple(m, self.arity, |idx| {
            // row k of: d(P(t)) - sum_j P(t with slot j replaced by d(e_{t_j}))
            let p = self.basis_product(idx);
            let mut rows = vec![zero_vector(m * m); m];
            for (b, c) in p.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (k, row) in rows.iter_mut().enumerate() {
                    row[k * m + b] += c;
                }
            }
            idx_buf.copy_from_slice(idx);
            for j in 0..self.arity {
                let ij = idx[j];
                for a in 0..m {
                    idx_buf[j] = a;
                    let q = self.basis_product(&idx_buf);
                    for (k, c) in q.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        rows[k][a * m + ij] -= c;
                    }
                }
                idx_buf[j] = ij;
            }
            for row in rows {
                if !is_zero_vector(&row) {
                    constraints.insert(row).expect("m^2 entries");
                }
            }
            !constraints.is_full()
        });
        if constraints.is_zero() {
            return Subspace::full(m * m);
        }
        nullspace(&constraints.basis_matrix())
    }

    /// `B^{(1)} = [B..B]`, `B^{(t+1)} = [B^{(t)}..B^{(t)}]` until the
    /// dimension repeats or reaches zero.
    pub fn n_solvable_chain(&self) -> NChainReport {
        let mut dims: Vec<usize> = Vec::new();
        let mut cur = Subspace::full(self.dim());
        loop {
            let next = self
                .nary_subspace_product(&vec![cur.clone(); self.arity])
                .expect("same ambient");
            let stop = next.is_zero() || dims.last() == Some(&next.dim());
            dims.push(next.dim());
            if stop {
                break;
            }
            cur = next;
        }
        let n_solvable = dims.last() == Some(&0);
        let stabilized_at = if n_solvable || dims.len() == 1 { dims.len() } else { dims.len() - 1 };
        NChainReport { dims, stabilized_at, n_solvable }
    }

    /// `[B, .., I, .., B] ⊆ I` for every slot.
    pub fn is_nary_ideal(&self, ideal: &Subspace) -> Result<bool> {
        check_len(self.dim(), ideal.ambient_dim())?;
        let whole = Subspace::full(self.dim());
        for slot in 0..self.arity {
            let mut spaces = vec![whole.clone(); self.arity];
            spaces[slot] = ideal.clone();
            if !self.nary_subspace_product(&spaces)?.is_subspace_of(ideal)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Swapping two adjacent arguments negates every basis product.
    pub fn verify_anticommutativity(&self) -> bool {
        let m = self.dim();
        for_each_tuple(m, self.arity, |idx| {
            let p = self.basis_product(idx);
            (0..self.arity - 1).all(|k| {
                let mut swapped = idx.to_vec();
                swapped.swap(k, k + 1);
                let q = self.basis_product(&swapped);
                p.iter().zip(&q).all(|(a, b)| (a + b).is_zero())
            })
        })
    }

    /// `[[x_1..x_n], y_2..y_n] = sum_i [x_1, .., [x_i, y_2..y_n], .., x_n]`.
    ///
    /// Both sides are skew in the `x` and in the `y`, so strictly increasing
    /// index tuples suffice.
    pub fn filippov_check(&self) -> Result<FilippovCheck> {
        if !self.anticommutative && !self.verify_anticommutativity() {
            return Err(Error::NotAnticommutative(self.name.clone()));
        }
        let m = self.dim();
        let n = self.arity;
        let basis: Vec<Vector> = (0..m).map(|i| unit_vector(m, i)).collect();
        for xs in increasing_tuples(m, n) {
            let inner = self.basis_product(&xs);
            for ys in increasing_tuples(m, n - 1) {
                let mut args: Vec<&[Scalar]> = vec![&inner];
                args.extend(ys.iter().map(|&y| basis[y].as_slice()));
                let lhs = self.product_unchecked(&args);
                let mut rhs = zero_vector(m);
                for i in 0..n {
                    let mut inner_args: Vec<&[Scalar]> = vec![&basis[xs[i]]];
                    inner_args.extend(ys.iter().map(|&y| basis[y].as_slice()));
                    let replaced = self.product_unchecked(&inner_args);
                    let mut outer: Vec<&[Scalar]> = xs.iter().map(|&x| basis[x].as_slice()).collect();
                    outer[i] = &replaced;
                    let t = self.product_unchecked(&outer);
                    for (r, t) in rhs.iter_mut().zip(t) {
                        *r += &t;
                    }
                }
                if !is_zero_vector(&sub_vectors(&lhs, &rhs)) {
                    let mut w = xs.clone();
                    w.extend(ys);
                    return Ok(FilippovCheck { holds: false, witness: Some(w) });
                }
            }
        }
        Ok(FilippovCheck { holds: true, witness: None })
    }

    /// Copy with one stored entry replaced; `None` for a key that is not a
    /// stored representative or a value of the wrong length.
    pub fn with_entry(&self, key: &[usize], value: Vector) -> Option<NAryAlgebra> {
        if value.len() != self.dim() {
            return None;
        }
        let mut out = self.clone();
        *out.entries.get_mut(key)? = value;
        out.name = format!("{}~", self.name);
        Some(out)
    }
}
