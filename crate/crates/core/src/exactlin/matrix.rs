use std::fmt;

use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Coordinate column vector.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

/// `e_i` in an `n`-dimensional space.
pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(s: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| s * x).collect()
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

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Which pivot column elimination prefers. `LowestIndex` is the default
/// everywhere; `HighestIndex` exists so callers can pick a second,
/// different preimage when the system is underdetermined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotRule {
    #[default]
    LowestIndex,
    HighestIndex,
}

/// Dense row-major matrix over one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn diagonal(field: FieldSpec, diag: &[Scalar]) -> Self {
        let mut m = Self::zeros(field, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            field,
            entries,
        }
    }

    /// Row-major entries; every entry must live in `field`.
    pub fn from_entries(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: Vec<Scalar>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::dims(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dims("ragged rows"));
        }
        Self::from_entries(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience for literals in tests and examples.
    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, rows).expect("literal rows are rectangular")
    }

    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Self {
        Self::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
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

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let start = i * rhs.cols;
                axpy(&mut out.entries[start..start + rhs.cols], a, rhs.row(k));
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = zero_vector(self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            entries: add_vectors(&self.entries, &rhs.entries),
            ..self.clone()
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            entries: sub_vectors(&self.entries, &rhs.entries),
            ..self.clone()
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            entries: scale_vector(s, &self.entries),
            ..self.clone()
        }
    }

    /// Reduced row echelon form and its pivot columns. Pivots are taken in
    /// increasing column order, each from the lowest eligible row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            let pivot_row = m.row(row).to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                let start = r * m.cols;
                let neg = -&factor;
                axpy(&mut m.entries[start..start + m.cols], &neg, &pivot_row);
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
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
        self.rref().1.len()
    }

    /// Basis of `{v : Mv = 0}`, one vector per free column in increasing order.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free = (0..self.cols).filter(|c| !pivots.contains(c));
        free.map(|f| {
            let mut v = zero_vector(self.field, self.cols);
            v[f] = self.field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(i, f);
            }
            v
        })
        .collect()
    }

    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::dims(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(self.field, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.iter().filter(|&&c| c < n).count() < n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(self.field, n, n, |r, c| red.get(r, n + c).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Some `x` with `Mx = b`; free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vector> {
        self.solve_with(b, PivotRule::LowestIndex)
    }

    pub fn solve_with(&self, b: &[Scalar], rule: PivotRule) -> Result<Vector> {
        if b.len() != self.rows {
            return Err(Error::dims(format!(
                "right-hand side has length {}, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let n = self.cols;
        let col_of = |c: usize| match rule {
            PivotRule::LowestIndex => c,
            PivotRule::HighestIndex => n - 1 - c,
        };
        let aug = Matrix::from_fn(self.field, self.rows, n + 1, |r, c| {
            if c < n {
                self.get(r, col_of(c)).clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&n) {
            return Err(Error::NoSolution);
        }
        let mut x = zero_vector(self.field, n);
        for (i, &pc) in pivots.iter().enumerate() {
            x[col_of(pc)] = red.get(i, n).clone();
        }
        Ok(x)
    }
}

/// Whether `v` lies in the span of `vectors` (the empty span is `{0}`).
pub fn in_span(vectors: &[Vector], v: &[Scalar]) -> bool {
    if is_zero_vector(v) {
        return true;
    }
    if vectors.is_empty() {
        return false;
    }
    let field = v[0].field();
    let m = Matrix::from_columns(field, v.len(), vectors);
    m.solve(v).is_ok()
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
