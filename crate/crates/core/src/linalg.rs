//! Exact sparse rational linear algebra.
//!
//! Every rank, kernel, and quotient dimension in the crate goes through this
//! module. Coefficients are arbitrary-precision rationals and all decisions
//! are exact; there is no floating point anywhere. Small matrices are
//! eliminated densely, larger ones sparsely with
//! Markowitz-style pivoting. Nullspace bases always come from a reduced row
//! echelon form with a fixed pivot order, so they are reproducible across
//! runs and platforms.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use crate::Error;

/// Scalar type of the whole crate: arbitrary-precision rationals, always in
/// lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as a rational in lowest terms. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient as a big integer.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// Side of the dense-elimination fallback: strictly smaller matrices are
/// handled densely.
const DENSE_LIMIT: usize = 64;

/// Sparse vector over the rationals. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalVector {
    len: usize,
    entries: BTreeMap<usize, Rational>,
}

impl RationalVector {
    pub fn zero(len: usize) -> Self {
        RationalVector { len, entries: BTreeMap::new() }
    }

    pub fn from_dense(values: Vec<Rational>) -> Self {
        let len = values.len();
        let mut v = RationalVector::zero(len);
        for (i, x) in values.into_iter().enumerate() {
            v.set(i, x);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn set(&mut self, index: usize, value: Rational) {
        assert!(index < self.len, "index {index} out of range {}", self.len);
        if value.is_zero() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, value);
        }
    }

    pub fn get(&self, index: usize) -> Rational {
        self.entries.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_scaled(&mut self, other: &RationalVector, coeff: &Rational) {
        assert_eq!(self.len, other.len);
        if coeff.is_zero() {
            return;
        }
        for (&i, x) in &other.entries {
            let newval = self.get(i) + x * coeff;
            self.set(i, newval);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(&i, x)| (i, x))
    }
}

/// Sparse matrix over the rationals; `entries` maps `(row, col)` to a nonzero
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    row_count: usize,
    col_count: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseRationalMatrix {
    pub fn new(row_count: usize, col_count: usize) -> Self {
        SparseRationalMatrix { row_count, col_count, entries: BTreeMap::new() }
    }

    /// Matrix whose columns are the given vectors (all of length `row_count`).
    pub fn from_columns(row_count: usize, columns: &[RationalVector]) -> Self {
        let mut m = SparseRationalMatrix::new(row_count, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), row_count, "column length mismatch");
            for (i, x) in col.iter() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_rows(col_count: usize, rows: &[RationalVector]) -> Self {
        let mut m = SparseRationalMatrix::new(rows.len(), col_count);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), col_count, "row length mismatch");
            for (j, x) in row.iter() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn row_count(&self) -> usize {
        self.row_count
    }

    pub fn col_count(&self) -> usize {
        self.col_count
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.row_count && col < self.col_count, "entry ({row},{col}) out of range");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), x)| (r, c, x))
    }

    pub fn transpose(&self) -> SparseRationalMatrix {
        let mut t = SparseRationalMatrix::new(self.col_count, self.row_count);
        for (r, c, x) in self.entries() {
            t.set(c, r, x.clone());
        }
        t
    }

    pub fn mul_vector(&self, v: &RationalVector) -> RationalVector {
        assert_eq!(v.len(), self.col_count);
        let mut out = RationalVector::zero(self.row_count);
        for (r, c, x) in self.entries() {
            if let Some(val) = v.entries.get(&c) {
                let newval = out.get(r) + x * val;
                out.set(r, newval);
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &SparseRationalMatrix) -> SparseRationalMatrix {
        assert_eq!(self.col_count, rhs.row_count);
        // index rhs by row
        let mut rhs_rows: BTreeMap<usize, Vec<(usize, &Rational)>> = BTreeMap::new();
        for (r, c, x) in rhs.entries() {
            rhs_rows.entry(r).or_default().push((c, x));
        }
        let mut out = SparseRationalMatrix::new(self.row_count, rhs.col_count);
        for (r, k, a) in self.entries() {
            if let Some(row) = rhs_rows.get(&k) {
                for &(c, b) in row {
                    let newval = out.get(r, c) + a * b;
                    out.set(r, c, newval);
                }
            }
        }
        out
    }

    fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut rows = vec![vec![Rational::zero(); self.col_count]; self.row_count];
        for (r, c, x) in self.entries() {
            rows[r][c] = x.clone();
        }
        rows
    }

    fn to_sparse_rows(&self) -> Vec<BTreeMap<usize, Rational>> {
        let mut rows = vec![BTreeMap::new(); self.row_count];
        for (r, c, x) in self.entries() {
            rows[r].insert(c, x.clone());
        }
        rows
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        if self.entries.is_empty() {
            return 0;
        }
        if self.row_count < DENSE_LIMIT && self.col_count < DENSE_LIMIT {
            self.rank_dense()
        } else {
            self.rank_markowitz()
        }
    }

    fn rank_dense(&self) -> usize {
        let mut rows = self.to_dense();
        let mut rank = 0;
        for col in 0..self.col_count {
            let pivot = (rank..self.row_count).find(|&r| !rows[r][col].is_zero());
            let Some(p) = pivot else { continue };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            let inv = pivot_row[col].clone();
            for row in rows.iter_mut().skip(rank + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] / &inv;
                for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                    let sub = &factor * pv;
                    row[c] = &row[c] - sub;
                }
            }
            rank += 1;
            if rank == self.row_count {
                break;
            }
        }
        rank
    }

    /// Sparse elimination with Markowitz-style pivoting: the pivot minimizes
    /// `(row_nnz - 1) * (col_nnz - 1)`, ties broken by smallest row then
    /// smallest column so the elimination is deterministic.
    fn rank_markowitz(&self) -> usize {
        let mut rows = self.to_sparse_rows();
        let mut row_active = vec![true; self.row_count];
        let mut col_active = vec![true; self.col_count];
        let mut col_nnz = vec![0usize; self.col_count];
        for row in &rows {
            for &c in row.keys() {
                col_nnz[c] += 1;
            }
        }
        let mut rank = 0;
        loop {
            let mut best: Option<(usize, usize, usize)> = None; // (score, row, col)
            for (r, row) in rows.iter().enumerate() {
                if !row_active[r] || row.is_empty() {
                    continue;
                }
                let rn = row.len();
                for &c in row.keys() {
                    if !col_active[c] {
                        continue;
                    }
                    let score = (rn - 1) * (col_nnz[c] - 1);
                    let cand = (score, r, c);
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
            let Some((_, pr, pc)) = best else { break };
            let pivot_row = rows[pr].clone();
            let pivot_val = pivot_row[&pc].clone();
            row_active[pr] = false;
            col_active[pc] = false;
            for &c in pivot_row.keys() {
                col_nnz[c] -= 1;
            }
            for r in 0..self.row_count {
                if !row_active[r] {
                    continue;
                }
                let Some(val) = rows[r].get(&pc).cloned() else { continue };
                let factor = val / &pivot_val;
                for (&c, x) in &pivot_row {
                    let cur = rows[r].get(&c).cloned().unwrap_or_else(Rational::zero);
                    let newval = cur - &factor * x;
                    let had = rows[r].contains_key(&c);
                    if newval.is_zero() {
                        if had {
                            rows[r].remove(&c);
                            col_nnz[c] -= 1;
                        }
                    } else {
                        if !had {
                            col_nnz[c] += 1;
                        }
                        rows[r].insert(c, newval);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form with the fixed pivot order (leftmost column,
    /// then smallest remaining row). Returns the reduced rows together with
    /// the pivot columns.
    fn rref(&self) -> (Vec<BTreeMap<usize, Rational>>, Vec<usize>) {
        let mut rows = self.to_sparse_rows();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.col_count {
            let pivot = (next_row..self.row_count).find(|&r| rows[r].contains_key(&col));
            let Some(p) = pivot else { continue };
            rows.swap(next_row, p);
            let inv = rows[next_row][&col].clone();
            if !inv.is_one() {
                for x in rows[next_row].values_mut() {
                    *x /= &inv;
                }
            }
            let pivot_row = rows[next_row].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next_row {
                    continue;
                }
                let Some(factor) = row.get(&col).cloned() else { continue };
                for (&c, x) in &pivot_row {
                    let cur = row.get(&c).cloned().unwrap_or_else(Rational::zero);
                    let newval = cur - &factor * x;
                    if newval.is_zero() {
                        row.remove(&c);
                    } else {
                        row.insert(c, newval);
                    }
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == self.row_count {
                break;
            }
        }
        (rows, pivots)
    }

    /// Basis of `{v : self · v = 0}` in reduced echelon parametrization: one
    /// vector per free column, carrying 1 there and the negated reduced
    /// entries at the pivot columns. Deterministic by construction.
    pub fn nullspace_basis(&self) -> Vec<RationalVector> {
        self.nullspace_basis_with_free_cols().0
    }

    /// Like [`Self::nullspace_basis`], also returning the free column of each
    /// basis vector. Each basis vector is 1 at its own free column and 0 at
    /// every other free column, so coordinates in this basis can be read off
    /// those positions.
    pub fn nullspace_basis_with_free_cols(&self) -> (Vec<RationalVector>, Vec<usize>) {
        let (rows, pivots) = self.rref();
        let pivot_set: BTreeMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let mut basis = Vec::new();
        let mut free_cols = Vec::new();
        for free in 0..self.col_count {
            if pivot_set.contains_key(&free) {
                continue;
            }
            let mut v = RationalVector::zero(self.col_count);
            v.set(free, Rational::one());
            for (&pcol, &prow) in &pivot_set {
                if let Some(x) = rows[prow].get(&free) {
                    v.set(pcol, -x.clone());
                }
            }
            basis.push(v);
            free_cols.push(free);
        }
        (basis, free_cols)
    }
}

/// Rank of the span of a set of vectors.
pub fn span_rank(vectors: &[RationalVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    SparseRationalMatrix::from_rows(vectors[0].len(), vectors).rank()
}

/// Does `v` lie in the span of `span`?
pub fn in_span(span: &[RationalVector], v: &RationalVector) -> bool {
    if v.is_zero() {
        return true;
    }
    let base = span_rank(span);
    let mut all: Vec<RationalVector> = span.to_vec();
    all.push(v.clone());
    span_rank(&all) == base
}

/// Do two sets of vectors span the same subspace?
pub fn same_span(a: &[RationalVector], b: &[RationalVector]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    if ra != rb {
        return false;
    }
    let mut all: Vec<RationalVector> = a.to_vec();
    all.extend_from_slice(b);
    span_rank(&all) == ra
}

/// `dim span(kernel_basis) - rank(image_generators)`, after checking that
/// every image generator lies in the span of the kernel basis. A containment
/// failure means a restricted differential is not a chain map and is reported
/// as a structural error.
pub fn quotient_dim(
    kernel_basis: &[RationalVector],
    image_generators: &[RationalVector],
) -> Result<usize, Error> {
    let kernel_rank = span_rank(kernel_basis);
    for (i, g) in image_generators.iter().enumerate() {
        if !in_span(kernel_basis, g) {
            return Err(Error::Containment(format!(
                "image generator {i} does not lie in the kernel span"
            )));
        }
    }
    let image_rank = span_rank(image_generators);
    Ok(kernel_rank - image_rank)
}
