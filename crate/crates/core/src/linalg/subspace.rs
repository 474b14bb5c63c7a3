use super::matrix::Matrix;
use super::scalar::ExactField;
use super::LinalgError;

/// A linear subspace of `T^n` stored by its reduced row echelon basis.
///
/// The representation is canonical: two `Subspace`s are equal as sets
/// exactly when they compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<T> {
    ambient_dim: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: ExactField> Subspace<T> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let m = Matrix::<T>::identity(ambient_dim);
        Subspace {
            ambient_dim,
            basis: m.to_rows(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of `vectors`, each of which must have length `ambient_dim`.
    pub fn spanned_by(ambient_dim: usize, vectors: &[Vec<T>]) -> Result<Self, LinalgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(LinalgError::VectorLength {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient_dim));
        }
        let m = Matrix::from_rows(vectors.to_vec())?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace {
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ascending coordinates that carry no pivot.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient_dim - self.dim());
        let mut p = self.pivots.iter().peekable();
        for c in 0..self.ambient_dim {
            if p.peek() == Some(&&c) {
                p.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    fn check_ambient(&self, other: &Subspace<T>) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after clearing every pivot coordinate with the basis.
    /// Zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[T]) -> Result<Vec<T>, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::VectorLength {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let factor = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = x.clone() - factor.clone() * b.clone();
                }
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[T]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(T::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace<T>) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        for v in &other.basis {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace<T>) -> Result<Subspace<T>, LinalgError> {
        self.check_ambient(other)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Subspace::spanned_by(self.ambient_dim, &vectors)
    }

    /// Zassenhaus intersection: row-reduce `[[U, U], [V, 0]]`; the rows whose
    /// left half vanishes carry a basis of `U ∩ V` in their right half.
    pub fn intersection(&self, other: &Subspace<T>) -> Result<Subspace<T>, LinalgError> {
        self.check_ambient(other)?;
        let n = self.ambient_dim;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(n));
        }
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.basis {
            let mut row = u.clone();
            row.extend(u.iter().cloned());
            rows.push(row);
        }
        for v in &other.basis {
            let mut row = v.clone();
            row.extend(std::iter::repeat_n(T::zero(), n));
            rows.push(row);
        }
        let (r, pivots) = Matrix::from_rows(rows)?.rref();
        let vectors: Vec<Vec<T>> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| r.row(i)[n..].to_vec())
            .collect();
        Subspace::spanned_by(n, &vectors)
    }

    /// Canonical representatives of a basis of `larger / self`.
    ///
    /// Each vector of `larger` is reduced against `self` (so it vanishes on the
    /// pivot coordinates of `self`), then the reduced vectors are echelonized.
    /// The result depends only on the two subspaces.
    pub fn quotient_representatives(
        &self,
        larger: &Subspace<T>,
    ) -> Result<Vec<Vec<T>>, LinalgError> {
        self.check_ambient(larger)?;
        let reduced = larger
            .basis
            .iter()
            .map(|v| self.reduce(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::spanned_by(self.ambient_dim, &reduced)?.basis)
    }

    /// Standard unit vectors at the non-pivot coordinates: a basis of a
    /// complement, hence representatives of `T^n / self`.
    pub fn complement_unit_vectors(&self) -> Vec<Vec<T>> {
        self.non_pivots()
            .into_iter()
            .map(|c| {
                let mut e = vec![T::zero(); self.ambient_dim];
                e[c] = T::one();
                e
            })
            .collect()
    }
}

/// Sum of a list of subspaces of `T^ambient_dim`.
pub fn subspace_sum<T: ExactField>(
    ambient_dim: usize,
    parts: &[Subspace<T>],
) -> Result<Subspace<T>, LinalgError> {
    let mut vectors = Vec::new();
    for s in parts {
        if s.ambient_dim != ambient_dim {
            return Err(LinalgError::AmbientMismatch {
                left: ambient_dim,
                right: s.ambient_dim,
            });
        }
        vectors.extend(s.basis.iter().cloned());
    }
    Subspace::spanned_by(ambient_dim, &vectors)
}

/// Intersection of a list of subspaces; the empty intersection is the whole space.
pub fn subspace_intersection<T: ExactField>(
    ambient_dim: usize,
    parts: &[Subspace<T>],
) -> Result<Subspace<T>, LinalgError> {
    parts
        .iter()
        .try_fold(Subspace::full(ambient_dim), |acc, s| acc.intersection(s))
}
