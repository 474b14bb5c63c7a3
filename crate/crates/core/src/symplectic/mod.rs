//! Homology action of the fiber's mapping classes.
//!
//! `H_1(F; Z)` of a genus-`h` fiber is written in the basis
//! `(a1, b1, a2, b2, ..., ah, bh)` with `ω(a_i, b_i) = +1`, so the intersection
//! form is block diagonal. A Dehn twist about a curve of class `c` acts by the
//! transvection `x ↦ x + ω(x, c)·c` (right-handed) or its inverse.

mod problem;
mod word;

pub use problem::{
    relator_product, surface_relation_holds, BaseKind, HolonomyEntry, HolonomyProblem, ProblemError,
};
pub use word::{named_curve_class, Curve, TwistLetter, TwistWord};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{LinalgError, Matrix, Scalar};
use crate::{QMatrix, Rational, ZMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("genus must be at least 1")]
    GenusZero,
    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    Shape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("matrix does not preserve the intersection form")]
    NotSymplectic,
    #[error("curve class has length {found}, expected {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("curve class {0:?} is not primitive")]
    NonPrimitive(Vec<BigInt>),
    #[error("curve {name} does not exist on a genus {genus} surface")]
    CurveIndex { name: String, genus: usize },
    #[error("unknown curve name {0:?}")]
    UnknownCurve(String),
    #[error("malformed twist letter {token:?}: {reason}")]
    Syntax { token: String, reason: &'static str },
}

/// Direction of a Dehn twist: `Plus` is `x ↦ x + ω(x, c)·c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// The standard form `J`: blocks `[[0, 1], [−1, 0]]` on each `(a_i, b_i)` pair.
pub fn standard_form<T: Scalar>(h: usize) -> Result<Matrix<T>, SymplecticError> {
    if h == 0 {
        return Err(SymplecticError::GenusZero);
    }
    let mut j = Matrix::zeros(2 * h, 2 * h);
    for i in 0..h {
        j.set(2 * i, 2 * i + 1, T::one());
        j.set(2 * i + 1, 2 * i, -T::one());
    }
    Ok(j)
}

/// `ω(x, y) = xᵀ J y`.
pub fn omega<T: Scalar>(x: &[T], y: &[T]) -> T {
    x.chunks(2)
        .zip(y.chunks(2))
        .fold(T::zero(), |acc, (p, q)| {
            acc + p[0].clone() * q[1].clone() - p[1].clone() * q[0].clone()
        })
}

/// Whether `mᵀ J m = J` exactly.
pub fn is_symplectic<T: Scalar>(m: &Matrix<T>, h: usize) -> Result<bool, SymplecticError> {
    let j = standard_form::<T>(h)?;
    if m.rows() != 2 * h || m.cols() != 2 * h {
        return Err(SymplecticError::Shape {
            expected: 2 * h,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let lhs = m
        .transpose()
        .mul(&j)
        .and_then(|t| t.mul(m))
        .expect("shapes checked");
    Ok(lhs == j)
}

/// Matrix of `x ↦ x + sign·ω(x, c)·c`.
pub fn transvection(c: &[BigInt], sign: Sign, h: usize) -> Result<SymplecticMatrix, SymplecticError> {
    if h == 0 {
        return Err(SymplecticError::GenusZero);
    }
    if c.len() != 2 * h {
        return Err(SymplecticError::VectorLength {
            expected: 2 * h,
            found: c.len(),
        });
    }
    let n = 2 * h;
    let mut m = ZMatrix::identity(n);
    // Column j is e_j + sign·ω(e_j, c)·c, and ω(e_j, c) is ±c at the partner index.
    for j in 0..n {
        let w = if j % 2 == 0 {
            c[j + 1].clone()
        } else {
            -c[j - 1].clone()
        };
        if w.is_zero() {
            continue;
        }
        let w = match sign {
            Sign::Plus => w,
            Sign::Minus => -w,
        };
        for (i, ci) in c.iter().enumerate() {
            let v = m[(i, j)].clone() + &w * ci;
            m.set(i, j, v);
        }
    }
    Ok(SymplecticMatrix { genus: h, matrix: m })
}

/// A `2h × 2h` integer matrix preserving the intersection form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticMatrix {
    genus: usize,
    matrix: ZMatrix,
}

impl SymplecticMatrix {
    pub fn new(genus: usize, matrix: ZMatrix) -> Result<Self, SymplecticError> {
        if !is_symplectic(&matrix, genus)? {
            return Err(SymplecticError::NotSymplectic);
        }
        debug_assert!(crate::linalg::bareiss::determinant(&matrix)
            .map(|d| d.is_one())
            .unwrap_or(false));
        Ok(SymplecticMatrix { genus, matrix })
    }

    pub fn identity(genus: usize) -> Self {
        SymplecticMatrix {
            genus,
            matrix: ZMatrix::identity(2 * genus),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &ZMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ZMatrix {
        self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// `M⁻¹ = −J Mᵀ J`, exact over the integers.
    pub fn inverse(&self) -> SymplecticMatrix {
        let j = standard_form::<BigInt>(self.genus).expect("genus checked on construction");
        let inv = j
            .neg()
            .mul(&self.matrix.transpose())
            .and_then(|t| t.mul(&j))
            .expect("square of matching size");
        SymplecticMatrix {
            genus: self.genus,
            matrix: inv,
        }
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn compose(&self, other: &SymplecticMatrix) -> SymplecticMatrix {
        assert_eq!(self.genus, other.genus, "composing different fiber genera");
        SymplecticMatrix {
            genus: self.genus,
            matrix: self.matrix.mul(&other.matrix).expect("same size"),
        }
    }

    pub fn pow(&self, k: i64) -> SymplecticMatrix {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = SymplecticMatrix::identity(self.genus);
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.compose(&sq);
            }
        }
        acc
    }

    /// `s · self · s⁻¹`.
    pub fn conjugate_by(&self, s: &SymplecticMatrix) -> SymplecticMatrix {
        s.compose(self).compose(&s.inverse())
    }

    /// `a·b·a⁻¹·b⁻¹`.
    pub fn commutator(a: &SymplecticMatrix, b: &SymplecticMatrix) -> SymplecticMatrix {
        a.compose(b).compose(&a.inverse()).compose(&b.inverse())
    }

    pub fn to_rational(&self) -> QMatrix {
        self.matrix.map(|x| Rational::from_integer(x.clone()))
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        self.to_rational().mul_vec(v)
    }
}

pub(crate) fn is_primitive(c: &[BigInt]) -> bool {
    c.iter().fold(BigInt::zero(), |g, x| g.gcd(x)).abs().is_one()
}
