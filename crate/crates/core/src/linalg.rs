//! Exact linear algebra over the rationals.
//!
//! [`Matrix`] is a small dense matrix used for structure maps (derivations,
//! sections, module maps). [`SparseMatrix`] holds assembled differentials and
//! provides rank, kernel and solving through an incrementally maintained
//! reduced row echelon form ([`EchelonBasis`]). Pivots are always taken at the
//! leftmost nonzero column, which makes every result reproducible.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Column-convention matrix: acting on coordinate columns, `y = M x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer entries, row by row. Panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        Matrix::from_rows(converted).expect("ragged integer matrix")
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    acc.add_product(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out.data[r * other.cols + c].add_product(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Scalar::from_int(-1))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        Matrix::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self[(r, c)].clone()
            } else {
                other[(r - self.rows, c)].clone()
            }
        })
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_triplets(
            self.rows,
            self.cols,
            (0..self.rows)
                .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
                .filter_map(|(r, c)| {
                    let v = &self[(r, c)];
                    (!v.is_zero()).then(|| (r, c, v.clone()))
                }),
        )
    }

    pub fn rank(&self) -> usize {
        self.to_sparse().rank()
    }

    /// Exact inverse by Gauss-Jordan elimination, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let augmented = self.hstack(&Matrix::identity(n));
        let rref = augmented.to_sparse().rref();
        if rref.pivots().iter().take(n).copied().ne(0..n) || rref.rank() < n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for (r, (_, row)) in rref.rows.iter().enumerate() {
            for (c, v) in row {
                if *c >= n {
                    inv[(r, c - n)] = v.clone();
                }
            }
        }
        Some(inv)
    }

    /// Some `x` with `self x = b`; free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        self.to_sparse().solve(b)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sorted `(index, value)` pairs with no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `x + s * y` for sorted sparse vectors.
fn axpy(x: &SparseVec, s: &Scalar, y: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, s * &y[j].1));
            j += 1;
        } else {
            let v = &x[i].1 + &(s * &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn lookup(v: &SparseVec, idx: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&idx, |(i, _)| *i).ok().map(|k| &v[k].1)
}

/// Row-major sparse matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    row_data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            row_data: vec![Vec::new(); rows],
        }
    }

    /// Duplicate positions are summed; zeros are dropped.
    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) outside {rows}x{cols}");
            *acc[r].entry(c).or_insert_with(Scalar::zero) += v;
        }
        let row_data = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { rows, cols, row_data }
    }

    /// Each input vector becomes one column.
    pub fn from_sparse_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut row_data: Vec<SparseVec> = vec![Vec::new(); rows];
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col {
                row_data[*r].push((c, v.clone()));
            }
        }
        SparseMatrix {
            rows,
            cols: columns.len(),
            row_data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.row_data[r]
    }

    pub fn nnz(&self) -> usize {
        self.row_data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        lookup(&self.row_data[r], c).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.row_data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (r, row) in self.row_data.iter().enumerate() {
            for (c, v) in row {
                m[(r, *c)] = v.clone();
            }
        }
        m
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut row_data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (r, row) in self.row_data.iter().enumerate() {
            for (c, v) in row {
                row_data[*c].push((r, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            row_data,
        }
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().row_data
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "sparse matrix-vector shape mismatch");
        self.row_data
            .iter()
            .map(|row| {
                let mut acc = Scalar::zero();
                for (c, a) in row {
                    acc.add_product(a, &v[*c]);
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "sparse product shape mismatch");
        let mut acc = vec![Scalar::zero(); other.cols];
        let mut touched = vec![false; other.cols];
        let mut row_data = Vec::with_capacity(self.rows);
        for row in &self.row_data {
            let mut hit = Vec::new();
            for (k, a) in row {
                for (c, b) in &other.row_data[*k] {
                    if !touched[*c] {
                        touched[*c] = true;
                        hit.push(*c);
                    }
                    acc[*c].add_product(a, b);
                }
            }
            hit.sort_unstable();
            let mut out = Vec::with_capacity(hit.len());
            for c in hit {
                touched[c] = false;
                let v = std::mem::take(&mut acc[c]);
                if !v.is_zero() {
                    out.push((c, v));
                }
            }
            row_data.push(out);
        }
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            row_data,
        }
    }

    pub fn rref(&self) -> EchelonBasis {
        let mut basis = EchelonBasis::new(self.cols);
        for row in &self.row_data {
            basis.insert(row.clone());
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Kernel basis: one vector per free column, in increasing column order,
    /// with a 1 in its free column and zeros in the other free columns.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        self.rref().null_space()
    }

    /// Some `x` with `self x = b`, free variables zero; `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let rhs_col = self.cols;
        let mut basis = EchelonBasis::new(self.cols + 1);
        for (row, rhs) in self.row_data.iter().zip(b) {
            let mut r = row.clone();
            if !rhs.is_zero() {
                r.push((rhs_col, rhs.clone()));
            }
            basis.insert(r);
        }
        if basis.rows.contains_key(&rhs_col) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (pivot, row) in &basis.rows {
            if let Some(v) = lookup(row, rhs_col) {
                x[*pivot] = v.clone();
            }
        }
        Some(x)
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix {}x{} nnz={}", self.rows, self.cols, self.nnz())
    }
}

/// A subspace of `K^width` stored as the nonzero rows of its reduced row
/// echelon form, keyed by pivot column. Every row has a 1 at its pivot and
/// zeros at all other pivot columns.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    width: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new(width: usize) -> Self {
        EchelonBasis {
            width,
            rows: BTreeMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn reduced_rows(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }

    /// Residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        let coeffs: Vec<(usize, Scalar)> = v
            .iter()
            .filter(|(c, _)| self.rows.contains_key(c))
            .map(|(c, x)| (*c, -x))
            .collect();
        let mut r = v;
        for (c, s) in coeffs {
            r = axpy(&r, &s, &self.rows[&c]);
        }
        r
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_dense(&self, v: &[Scalar]) -> bool {
        self.contains(sparse_from_dense(v))
    }

    /// Adds `v` to the span; returns `true` if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.iter().all(|(c, _)| *c < self.width));
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        let r: SparseVec = r.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        for row in self.rows.values_mut() {
            if let Some(x) = lookup(row, pivot) {
                let s = -x;
                *row = axpy(row, &s, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        self.insert(sparse_from_dense(v))
    }

    /// Basis of `{x : r·x = 0 for every stored row r}`.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for free in (0..self.width).filter(|c| !self.rows.contains_key(c)) {
            let mut v = vec![Scalar::zero(); self.width];
            v[free] = Scalar::one();
            for (pivot, row) in &self.rows {
                if let Some(x) = lookup(row, free) {
                    v[*pivot] = -x;
                }
            }
            out.push(v);
        }
        out
    }
}
