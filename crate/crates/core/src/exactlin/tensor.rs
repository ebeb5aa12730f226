use super::matrix::{axpy, zero_vector, Matrix, Vector};
use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Structure constants of a bilinear product: `b_i • b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructureTensor {
    dim: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl StructureTensor {
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        StructureTensor {
            dim,
            field,
            entries: vec![field.zero(); dim * dim * dim],
        }
    }

    /// Builds from `(i, j, k, c)` entries; repeated indices accumulate.
    pub fn from_sparse<I>(field: FieldSpec, dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut t = Self::zero(field, dim);
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::dims(format!(
                    "index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            let idx = t.index(i, j, k);
            t.entries[idx] += &c;
        }
        Ok(t)
    }

    /// Literal constructor for tests and examples: `(i, j, k, numerator, denominator)`.
    pub fn from_ratios(field: FieldSpec, dim: usize, entries: &[(usize, usize, usize, i64, i64)]) -> Self {
        let it = entries.iter().map(|&(i, j, k, n, d)| {
            let c = field
                .from_ratio(n.into(), d.into())
                .expect("literal denominator invertible");
            (i, j, k, c)
        });
        Self::from_sparse(field, dim, it).expect("literal indices in range")
    }

    /// Dense constructor; `entries` is indexed `(i * n + j) * n + k`.
    pub fn from_dense(field: FieldSpec, dim: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != dim * dim * dim {
            return Err(Error::dims(format!(
                "dimension {dim} needs {} structure constants, got {}",
                dim * dim * dim,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(StructureTensor { dim, field, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let idx = self.index(i, j, k);
        self.entries[idx] = c;
    }

    /// Coordinates of `b_i • b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = self.index(i, j, 0);
        &self.entries[start..start + self.dim]
    }

    /// `x • y` for coordinate vectors.
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    /// `b_i • y`
    pub fn left_product(&self, i: usize, y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (j, yj) in y.iter().enumerate() {
            axpy(&mut out, yj, self.basis_product(i, j));
        }
        out
    }

    /// `x • b_j`
    pub fn right_product(&self, x: &[Scalar], j: usize) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            axpy(&mut out, xi, self.basis_product(i, j));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &StructureTensor) -> StructureTensor {
        assert_eq!(self.dim, other.dim, "tensor dimension mismatch");
        StructureTensor {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, s: &Scalar) -> StructureTensor {
        StructureTensor {
            entries: self.entries.iter().map(|a| s * a).collect(),
            ..self.clone()
        }
    }

    /// Matrix of `y ↦ b_i • y`.
    pub fn left_multiplication(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.field, self.dim, self.dim, |k, j| self.get(i, j, k).clone())
    }

    /// Matrix of `y ↦ y • b_i`.
    pub fn right_multiplication(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.field, self.dim, self.dim, |k, j| self.get(j, i, k).clone())
    }

    /// The product `x •' y = h((h⁻¹x) • (h⁻¹y))`, i.e. this product moved
    /// along the linear isomorphism `h`.
    pub fn transport(&self, h: &Matrix) -> Result<StructureTensor> {
        let h_inv = h.invert()?;
        if h.rows() != self.dim {
            return Err(Error::dims("transport matrix size differs from tensor dimension"));
        }
        let pre: Vec<Vector> = (0..self.dim).map(|i| h_inv.column(i)).collect();
        let mut out = StructureTensor::zero(self.field, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = h.mul_vec(&self.product(&pre[i], &pre[j]));
                for (k, c) in v.into_iter().enumerate() {
                    out.set(i, j, k, c);
                }
            }
        }
        Ok(out)
    }

    /// Reduction into another field, e.g. ℚ to `F_p`. Fails when a
    /// denominator vanishes mod `p`.
    pub fn to_field(&self, field: FieldSpec) -> Result<StructureTensor> {
        let entries = self
            .entries
            .iter()
            .map(|c| c.to_field(field).ok_or_else(|| Error::BadRational(format!("{c} has no image in {field}"))))
            .collect::<Result<_>>()?;
        Ok(StructureTensor {
            dim: self.dim,
            field,
            entries,
        })
    }

    /// Nonzero constants in `(i, j, k)` order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / (n * n), (idx / n) % n, idx % n, c))
    }
}
