use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::rational::Rational;

/// A sparse rational matrix. Only nonzero entries are stored, keyed by
/// `(row, col)`, so iteration is always row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), crate::rational::one());
        }
        m
    }

    /// Builds a matrix from dense rows; every row must have length `cols`.
    pub fn from_dense(cols: usize, data: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(data.len(), cols);
        for (r, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "dense row {r} has wrong length");
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.entries.insert((r, c), v.clone());
                }
            }
        }
        m
    }

    /// Builds the matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {c} has wrong length");
            for (r, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.entries.insert((r, c), v.clone());
                }
            }
        }
        m
    }

    /// Sums duplicate positions; zero sums are dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add_to(r, c, v);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Rational> {
        self.entries.get(&(row, col))
    }

    /// Entry value with implicit zero.
    pub fn at(&self, row: usize, col: usize) -> Rational {
        self.get(row, col).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.rows && col < self.cols, "index ({row}, {col}) out of range");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.rows && col < self.cols, "index ({row}, {col}) out of range");
        if value.is_zero() {
            return;
        }
        match self.entries.entry((row, col)) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(value);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Nonzero entries grouped by row.
    pub fn row_lists(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut out = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            out[r].push((c, v.clone()));
        }
        out
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(r, c), v)| ((c, r), v.clone())).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.at(r, col)).collect()
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let other_rows = other.row_lists();
        let mut out = SparseMatrix::zeros(self.rows, other.cols);
        for (&(i, k), a) in &self.entries {
            for (j, b) in &other_rows[k] {
                out.add_to(i, *j, a * b);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "vector length differs from column count");
        let mut out = vec![Rational::zero(); self.rows];
        for (&(r, c), a) in &self.entries {
            if !v[c].is_zero() {
                out[r] += a * &v[c];
            }
        }
        out
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shapes differ");
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_to(r, c, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add(&other.scale(&crate::rational::int(-1)))
    }

    pub fn scale(&self, factor: &Rational) -> SparseMatrix {
        if factor.is_zero() {
            return SparseMatrix::zeros(self.rows, self.cols);
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|(&k, v)| (k, v * factor)).collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&SparseMatrix]) -> SparseMatrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut out = SparseMatrix::zeros(blocks.iter().map(|b| b.rows).sum(), cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack blocks need equal column counts");
            for (&(r, c), v) in &b.entries {
                out.entries.insert((offset + r, c), v.clone());
            }
            offset += b.rows;
        }
        out
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn block_diag(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        out.entries = self.entries.clone();
        for (&(r, c), v) in &other.entries {
            out.entries.insert((self.rows + r, self.cols + c), v.clone());
        }
        out
    }

    /// Restriction to the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SparseMatrix {
        let mut col_pos = vec![usize::MAX; self.cols];
        for (i, &c) in cols.iter().enumerate() {
            col_pos[c] = i;
        }
        let mut row_pos = vec![usize::MAX; self.rows];
        for (i, &r) in rows.iter().enumerate() {
            row_pos[r] = i;
        }
        let mut out = SparseMatrix::zeros(rows.len(), cols.len());
        for (&(r, c), v) in &self.entries {
            if row_pos[r] != usize::MAX && col_pos[c] != usize::MAX {
                out.entries.insert((row_pos[r], col_pos[c]), v.clone());
            }
        }
        out
    }
}
