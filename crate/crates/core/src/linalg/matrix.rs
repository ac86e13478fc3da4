use std::fmt;

use crate::error::{Error, Result};

use super::{FieldSpec, Scalar};

/// Dense matrix over an exact field, stored row-major.
///
/// Every module map in the crate acts on *row* vectors: a map `V -> W` of
/// dimensions `m -> n` is an `m x n` matrix and `v -> v * A`. Kernels are
/// left kernels for the same reason.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl ExactMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::Field("entry from a different field".into()));
        }
        Ok(ExactMatrix { field, rows, cols, entries })
    }

    /// Builds a matrix from rows; `cols` is needed for the zero-row case.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Shape(format!("row of length {} in a matrix with {cols} columns", bad.len())));
        }
        Self::from_entries(field, n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, data).expect("ragged literal")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
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

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                t.push(self.get(r, c).clone());
            }
        }
        ExactMatrix { field: self.field, rows: self.cols, cols: self.rows, entries: t }
    }

    /// Matrix product; panics on incompatible shapes.
    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = ExactMatrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in sum");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in difference");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, s: &Scalar) -> ExactMatrix {
        let entries = self.entries.iter().map(|a| a * s).collect();
        ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        ExactMatrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend(self.row(r).iter().cloned());
            entries.extend(other.row(r).iter().cloned());
        }
        ExactMatrix { field: self.field, rows: self.rows, cols, entries }
    }

    pub fn select_rows(&self, rows: &[usize]) -> ExactMatrix {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend(self.row(r).iter().cloned());
        }
        ExactMatrix { field: self.field, rows: rows.len(), cols: self.cols, entries }
    }

    pub fn select_cols(&self, cols: &[usize]) -> ExactMatrix {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            entries.extend(cols.iter().map(|&c| self.get(r, c).clone()));
        }
        ExactMatrix { field: self.field, rows: self.rows, cols: cols.len(), entries }
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &ExactMatrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> ExactMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in r0..r0 + rows {
            entries.extend(self.row(r)[c0..c0 + cols].iter().cloned());
        }
        ExactMatrix { field: self.field, rows, cols, entries }
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for c in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = m.get(pivot_row, c).inv();
            for j in c..m.cols {
                let v = m.get(pivot_row, j) * &inv;
                m.set(pivot_row, j, v);
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let p = m.get(pivot_row, j);
                    if p.is_zero() {
                        continue;
                    }
                    let v = m.get(r, j) - &(&factor * p);
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            pivot_row += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical (RREF) basis of the row space.
    pub fn row_space(&self) -> ExactMatrix {
        let r = self.rref();
        r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>())
    }

    /// Basis, in RREF, of the left kernel `{x : x * self = 0}`.
    pub fn kernel_basis(&self) -> ExactMatrix {
        let t = self.transpose().rref();
        let free: Vec<usize> = (0..self.rows).filter(|c| !t.pivots.contains(c)).collect();
        let mut basis = ExactMatrix::zeros(self.field, free.len(), self.rows);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, self.field.one());
            for (l, &p) in t.pivots.iter().enumerate() {
                basis.set(k, p, -t.matrix.get(l, f));
            }
        }
        basis.rref().matrix
    }

    /// Finds `X` with `X * self = rhs`, free variables set to zero.
    pub fn solve(&self, rhs: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        if self.cols != rhs.cols {
            return Err(Error::Shape(format!(
                "cannot solve X*A = B with A {}x{} and B {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let aug = self.transpose().hstack(&rhs.transpose()).rref();
        if aug.pivots.iter().any(|&p| p >= self.rows) {
            return Ok(None);
        }
        let mut x = ExactMatrix::zeros(self.field, rhs.rows, self.rows);
        for k in 0..rhs.rows {
            for (l, &p) in aug.pivots.iter().enumerate() {
                x.set(k, p, aug.matrix.get(l, self.rows + k).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if !self.is_invertible() {
            return None;
        }
        self.solve(&ExactMatrix::identity(self.field, self.rows)).ok().flatten()
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rref_identity_is_fixed() {
        let id = ExactMatrix::identity(Q, 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_dependent_rows() {
        let a = ExactMatrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let r = a.rref();
        assert_eq!(r.matrix, ExactMatrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_over_f2() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = ExactMatrix::from_i64(f2, &[&[1, 1], &[1, 2]]);
        assert_eq!(a.rref().matrix, ExactMatrix::identity(f2, 2));
    }

    #[test]
    fn empty_matrices_have_rank_zero() {
        assert_eq!(ExactMatrix::zeros(Q, 0, 3).rank(), 0);
        assert_eq!(ExactMatrix::zeros(Q, 3, 0).rank(), 0);
        assert_eq!(ExactMatrix::zeros(Q, 3, 0).kernel_basis(), ExactMatrix::identity(Q, 3));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(ExactMatrix::identity(Q, 3).kernel_basis().rows(), 0);
        assert_eq!(ExactMatrix::zeros(Q, 3, 2).kernel_basis(), ExactMatrix::identity(Q, 3));
        let k = ExactMatrix::from_i64(Q, &[&[1, 2], &[2, 4]]).kernel_basis();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), &[Q.one(), Q.parse_scalar("-1/2").unwrap()]);
    }

    #[test]
    fn solve_examples() {
        let b = ExactMatrix::from_i64(Q, &[&[3, -1], &[0, 7]]);
        assert_eq!(ExactMatrix::identity(Q, 2).solve(&b).unwrap(), Some(b.clone()));
        let z = ExactMatrix::zeros(Q, 2, 2);
        assert_eq!(z.solve(&z).unwrap(), Some(z.clone()));
        let a = ExactMatrix::from_i64(Q, &[&[1, 2]]);
        let x = a.solve(&ExactMatrix::from_i64(Q, &[&[3, 6]])).unwrap();
        assert_eq!(x, Some(ExactMatrix::from_i64(Q, &[&[3]])));
        assert_eq!(a.solve(&ExactMatrix::from_i64(Q, &[&[3, 5]])).unwrap(), None);
        assert!(matches!(a.solve(&ExactMatrix::zeros(Q, 1, 3)), Err(Error::Shape(_))));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = ExactMatrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), ExactMatrix::identity(Q, 2));
        assert!(ExactMatrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
