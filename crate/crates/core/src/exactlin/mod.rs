//! Exact scalars over ℚ and `F_p`, dense matrices, and structure-constant
//! tensors. Nothing here uses floating point.

mod matrix;
mod scalar;
mod tensor;

pub use matrix::{
    add_vectors, axpy, in_span, is_zero_vector, scale_vector, sub_vectors, unit_vector,
    zero_vector, Matrix, PivotRule, Vector,
};
pub use scalar::{FieldSpec, Scalar};
pub use tensor::StructureTensor;
