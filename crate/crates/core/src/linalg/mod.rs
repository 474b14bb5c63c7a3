//! Exact linear algebra over arbitrary-precision rationals.
//!
//! Matrices are generic over the scalar; elimination (`rref`, kernels, images,
//! inverses) needs an [`ExactField`]. Subspaces are kept in reduced row echelon
//! form so that equality of subspaces is structural equality.

pub mod bareiss;
mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{ExactField, Scalar};
pub use subspace::{subspace_intersection, subspace_sum, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{rows}x{cols} matrix needs {} entries, got {found}", rows * cols)]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("vector of length {found} where {expected} was expected")]
    VectorLength { expected: usize, found: usize },
    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
}
