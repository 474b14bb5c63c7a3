use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{SymplecticError, SymplecticMatrix, TwistWord};
use crate::ZMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseKind {
    Closed,
    OneBoundary,
}

impl BaseKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BaseKind::Closed => "closed",
            BaseKind::OneBoundary => "one_boundary",
        }
    }

    /// Euler characteristic of the base surface of genus `g`.
    pub fn euler_characteristic(self, g: usize) -> i64 {
        let g = g as i64;
        match self {
            BaseKind::Closed => 2 - 2 * g,
            BaseKind::OneBoundary => 1 - 2 * g,
        }
    }
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Holonomy of one base generator, as given by the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HolonomyEntry {
    Matrix(ZMatrix),
    Word(TwistWord),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("fiber genus must be at least 2 (hyperbolic fiber), got {0}")]
    FiberGenus(usize),
    #[error("base genus must be at least 1")]
    BaseGenus,
    #[error("expected 2g = {expected} holonomy entries, got {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("holonomy entry {index}: {source}")]
    Entry {
        index: usize,
        #[source]
        source: SymplecticError,
    },
    #[error("holonomy entry {index} has fiber genus {found}, expected {expected}")]
    EntryGenus {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("holonomy violates the surface relation: the boundary loop does not act trivially")]
    RelatorViolated,
    #[error("a one-boundary base has no surface relation")]
    NoRelator,
}

/// Defining data of a surface bundle at the level of homology: fiber genus
/// `h`, the base surface, and one symplectic matrix per base generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HolonomyProblem {
    fiber_genus: usize,
    base: BaseKind,
    base_genus: usize,
    entries: Vec<HolonomyEntry>,
    matrices: Vec<SymplecticMatrix>,
}

impl HolonomyProblem {
    /// Resolves words to matrices and validates every invariant, including
    /// the surface relation when the base is closed.
    pub fn new(
        fiber_genus: usize,
        base: BaseKind,
        base_genus: usize,
        entries: Vec<HolonomyEntry>,
    ) -> Result<Self, ProblemError> {
        if fiber_genus < 2 {
            return Err(ProblemError::FiberGenus(fiber_genus));
        }
        if base_genus == 0 {
            return Err(ProblemError::BaseGenus);
        }
        if entries.len() != 2 * base_genus {
            return Err(ProblemError::EntryCount {
                expected: 2 * base_genus,
                found: entries.len(),
            });
        }
        let matrices = entries
            .iter()
            .enumerate()
            .map(|(index, e)| {
                match e {
                    HolonomyEntry::Matrix(m) => SymplecticMatrix::new(fiber_genus, m.clone()),
                    HolonomyEntry::Word(w) => w.evaluate(fiber_genus),
                }
                .map_err(|source| ProblemError::Entry { index, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if base == BaseKind::Closed && !surface_relation_holds(&matrices) {
            return Err(ProblemError::RelatorViolated);
        }
        Ok(HolonomyProblem {
            fiber_genus,
            base,
            base_genus,
            entries,
            matrices,
        })
    }

    pub fn from_matrices(
        base: BaseKind,
        matrices: Vec<SymplecticMatrix>,
    ) -> Result<Self, ProblemError> {
        let fiber_genus = matrices.first().map_or(0, SymplecticMatrix::genus);
        if let Some((index, m)) = matrices
            .iter()
            .enumerate()
            .find(|(_, m)| m.genus() != fiber_genus)
        {
            return Err(ProblemError::EntryGenus {
                index,
                expected: fiber_genus,
                found: m.genus(),
            });
        }
        if matrices.len() % 2 == 1 {
            return Err(ProblemError::EntryCount {
                expected: matrices.len() + 1,
                found: matrices.len(),
            });
        }
        let entries = matrices
            .iter()
            .map(|m| HolonomyEntry::Matrix(m.matrix().clone()))
            .collect();
        HolonomyProblem::new(fiber_genus, base, matrices.len() / 2, entries)
    }

    /// All-identity holonomy: the product bundle `F × base`.
    pub fn trivial(fiber_genus: usize, base: BaseKind, base_genus: usize) -> Result<Self, ProblemError> {
        HolonomyProblem::new(
            fiber_genus,
            base,
            base_genus,
            vec![HolonomyEntry::Word(TwistWord::default()); 2 * base_genus],
        )
    }

    pub fn fiber_genus(&self) -> usize {
        self.fiber_genus
    }

    pub fn base(&self) -> BaseKind {
        self.base
    }

    pub fn base_genus(&self) -> usize {
        self.base_genus
    }

    pub fn entries(&self) -> &[HolonomyEntry] {
        &self.entries
    }

    pub fn matrices(&self) -> &[SymplecticMatrix] {
        &self.matrices
    }

    /// Replaces every holonomy matrix `M` by `s·M·s⁻¹`.
    pub fn conjugated(&self, s: &SymplecticMatrix) -> Result<Self, ProblemError> {
        HolonomyProblem::from_matrices(
            self.base,
            self.matrices.iter().map(|m| m.conjugate_by(s)).collect(),
        )
    }

    pub fn check_surface_relation(&self) -> Result<bool, ProblemError> {
        match self.base {
            BaseKind::Closed => Ok(surface_relation_holds(&self.matrices)),
            BaseKind::OneBoundary => Err(ProblemError::NoRelator),
        }
    }
}

/// Action of the boundary loop `∏ [a_{2k−1}, a_{2k}]` on homology, with the
/// loop read left to right (the first letter transports first). Each
/// commutator contributes `M_{2k}⁻¹ M_{2k−1}⁻¹ M_{2k} M_{2k−1}`, so the result
/// is `C_g ··· C_1`.
pub fn relator_product(matrices: &[SymplecticMatrix]) -> SymplecticMatrix {
    let genus = matrices.first().map_or(1, SymplecticMatrix::genus);
    matrices
        .chunks(2)
        .fold(SymplecticMatrix::identity(genus), |acc, pair| {
            let (a, b) = (&pair[0], &pair[1]);
            SymplecticMatrix::commutator(&b.inverse(), &a.inverse()).compose(&acc)
        })
}

pub fn surface_relation_holds(matrices: &[SymplecticMatrix]) -> bool {
    matrices.len().is_multiple_of(2) && relator_product(matrices).is_identity()
}
