//! Dense linear algebra over GF(p^m): row reduction, kernels and solving.

use std::fmt;

use thiserror::Error;

use crate::finite_field::{FieldElement, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Row-major dense matrix of field elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<FieldElement>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch { expected: rows * cols, got: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(cols: usize, rows: &[Vec<FieldElement>]) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Self { rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<FieldElement>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LinalgError::DimensionMismatch { expected: rows, got: c.len() });
            }
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [FieldElement] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul_vec(&self, field: &FieldSpec, v: &[FieldElement]) -> Result<Vec<FieldElement>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows).map(|r| field.dot(self.row(r), v)).collect())
    }

    pub fn mul(&self, field: &FieldSpec, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc = vec![FieldElement::ZERO; other.cols];
            for (k, &a) in self.row(r).iter().enumerate() {
                field.add_scaled(&mut acc, other.row(k), a);
            }
            out.row_mut(r).copy_from_slice(&acc);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Reduced row echelon form by Gauss-Jordan elimination, pivoting on the
    /// first nonzero entry of each column.
    pub fn rref(&self, field: &FieldSpec) -> Echelon {
        let mut a = self.clone();
        let pivots = a.rref_in_place(field);
        Echelon { rank: pivots.len(), reduced: a, pivots }
    }

    fn rref_in_place(&mut self, field: &FieldSpec) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..cols {
            if prow == rows {
                break;
            }
            let Some(found) = (prow..rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if found != prow {
                for c in col..cols {
                    self.data.swap(found * cols + c, prow * cols + c);
                }
            }
            let inv = field.inv(self.get(prow, col)).expect("pivot is nonzero");
            field.scale(&mut self.row_mut(prow)[col..], inv);

            let (before, rest) = self.data.split_at_mut(prow * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let pivot_tail = &pivot_row[col..];
            for row in before.chunks_exact_mut(cols).chain(after.chunks_exact_mut(cols)) {
                let c = row[col];
                if !c.is_zero() {
                    field.sub_scaled(&mut row[col..], pivot_tail, c);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &FieldSpec) -> usize {
        self.rref(field).rank
    }

    /// Basis of the right kernel, one vector per free column of the reduced
    /// form, in increasing free-column order. Returned as the columns of a
    /// `cols x (cols - rank)` matrix.
    pub fn right_kernel_basis(&self, field: &FieldSpec) -> Matrix {
        let vecs = self.kernel_vectors(field);
        Matrix::from_columns(self.cols, &vecs).expect("kernel vectors have length cols")
    }

    /// Same basis as [`Matrix::right_kernel_basis`], as a list of vectors.
    pub fn kernel_vectors(&self, field: &FieldSpec) -> Vec<Vec<FieldElement>> {
        let ech = self.rref(field);
        kernel_from_echelon(field, &ech)
    }

    /// One solution of `A x = b` with every free variable set to zero, or
    /// `None` when the system is inconsistent.
    pub fn solve_any(&self, field: &FieldSpec, b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (r, &br) in b.iter().enumerate() {
            aug.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            aug.set(r, self.cols, br);
        }
        let pivots = aug.rref_in_place(field);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![FieldElement::ZERO; self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols);
        }
        Ok(Some(x))
    }
}

pub(crate) fn kernel_from_echelon(field: &FieldSpec, ech: &Echelon) -> Vec<Vec<FieldElement>> {
    let cols = ech.reduced.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![FieldElement::ZERO; cols];
            v[free] = FieldElement::ONE;
            for (r, &p) in ech.pivots.iter().enumerate() {
                v[p] = field.neg(ech.reduced.get(r, free));
            }
            v
        })
        .collect()
}
