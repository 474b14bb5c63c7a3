//! Exact homology of surface bundles over surfaces, computed from the
//! holonomy's action on the homology of the fiber.
//!
//! The library is organized bottom-up:
//!
//! - [`linalg`]: exact matrices and canonical subspaces, generic over the scalar;
//! - [`symplectic`]: the intersection form, Dehn twist transvections, twist words
//!   and validated holonomy problems;
//! - [`homology`]: Betti numbers and generators for bundles over a one-boundary
//!   or closed base, with independent consistency checks;
//! - [`search`]: breadth-first search for holonomy products fixing a class;
//! - [`io`]: the JSON problem and report formats used by the CLI.

pub mod homology;
pub mod io;
pub mod linalg;
pub mod search;
pub mod symplectic;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar used throughout the engine.
pub type Rational = BigRational;
/// Arbitrary-precision integer matrix.
pub type ZMatrix = linalg::Matrix<BigInt>;
/// Exact rational matrix.
pub type QMatrix = linalg::Matrix<Rational>;
/// Subspace of `Q^n`.
pub type QSubspace = linalg::Subspace<Rational>;
/// Vector in `Q^n`.
pub type QVector = Vec<Rational>;
