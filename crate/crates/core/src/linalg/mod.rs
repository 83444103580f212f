//! Exact dense linear algebra over the rationals.

mod eigen;
mod matrix;
pub mod poly;
mod quadratic;
mod solve;

pub use eigen::{rational_eigen, Eigenpair, RationalSpectrum};
pub use matrix::{vector, RatMatrix};
pub use quadratic::{diagonalize_form, DiagonalForm};
pub use solve::{
    determinant, in_span, independent_subset, intersect_spans, matrix_inverse, nullspace, rank, rref, same_span,
    solve_affine, AffineSolution,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    SingularMatrix,
}
