//! Rational homology of the total space `E` of a surface bundle `F → E → S`.
//!
//! With `M_1, ..., M_{2g}` the holonomy matrices of the base generators and
//! `h` the fiber genus, everything reduces to three spaces:
//!
//! - `W = Σ Im(M_i − I) ⊂ Q^{2h}`: `H_1(F)/W` is the fiber part of `H_1`;
//! - `Fix = ∩ Ker(M_i − I)`: classes invariant under every holonomy;
//! - `K = {(α_i) ∈ (Q^{2h})^{2g} : Σ α_i = Σ M_i α_i}`: tuples of annuli over the
//!   base loops whose ends glue back into closed 2-cycles.
//!
//! Over a one-boundary base the Betti numbers are
//! `(1, 2h − dim W + 2g, 1 + dim K, 2g, 0)`. A closed base is the one-boundary
//! surface with a disc glued along the boundary loop `δ`; the classes
//! `α ⊗ [δ]` map into `K` by the boundary-loop map `B`, giving
//! `(1, 2h − dim W + 2g, 2 + dim K − rank B, 2g + dim Fix, 1)`.

mod report;

pub use report::{validate_report, BettiReport, Dims, Generator, GeneratorLabel, Validation, Verdict};

use thiserror::Error;

use crate::linalg::{subspace_intersection, subspace_sum, LinalgError, Matrix};
use crate::symplectic::{BaseKind, HolonomyProblem, SymplecticMatrix};
use crate::{QMatrix, QSubspace, QVector, Rational, ZMatrix};
use report::{scalar, unit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("this computation needs a {expected} base, the problem has a {found} base")]
    WrongBase { expected: BaseKind, found: BaseKind },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn rational(m: &ZMatrix) -> QMatrix {
    m.map(|x| Rational::from_integer(x.clone()))
}

fn shifted(p: &HolonomyProblem) -> Vec<QMatrix> {
    p.matrices()
        .iter()
        .map(|m| rational(m.matrix()).minus_identity())
        .collect()
}

/// `W = Σ Im(M_i − I)` and the unit vectors at its non-pivot coordinates,
/// which represent a basis of the coinvariants `Q^{2h}/W`.
pub fn coinvariant_quotient(p: &HolonomyProblem) -> (QSubspace, Vec<QVector>) {
    let n = 2 * p.fiber_genus();
    let images: Vec<_> = shifted(p).iter().map(Matrix::image_basis).collect();
    let w = subspace_sum(n, &images).expect("all images live in Q^{2h}");
    let reps = w.complement_unit_vectors();
    (w, reps)
}

/// `Fix = ∩ Ker(M_i − I)`.
pub fn invariant_space(p: &HolonomyProblem) -> QSubspace {
    let n = 2 * p.fiber_genus();
    let kernels: Vec<_> = shifted(p).iter().map(Matrix::kernel_basis).collect();
    subspace_intersection(n, &kernels).expect("all kernels live in Q^{2h}")
}

/// Kernel of `(α_i) ↦ Σ (M_i − I) α_i`, in `Q^{4gh}` with block `i` holding `α_i`.
pub fn cylinder_space(p: &HolonomyProblem) -> QSubspace {
    Matrix::hstack(&shifted(p))
        .expect("blocks share 2h rows")
        .kernel_basis()
}

/// Matrix of `α ↦ i_2(α ⊗ [δ])`, the cylinder tuple swept out by transporting
/// `α` once around the boundary loop `δ = ∏ [a_{2k−1}, a_{2k}]`.
///
/// With `Q_0 = I` and `Q_k = [M_{2k}⁻¹, M_{2k−1}⁻¹] Q_{k−1}`, block `2k−1` is
/// `(I − M_{2k−1}⁻¹ M_{2k} M_{2k−1}) Q_{k−1}` and block `2k` is
/// `M_{2k−1} Q_{k−1} − Q_k`.
pub fn beta_map(p: &HolonomyProblem) -> Result<QMatrix, HomologyError> {
    if p.base() != BaseKind::Closed {
        return Err(HomologyError::WrongBase {
            expected: BaseKind::Closed,
            found: p.base(),
        });
    }
    Ok(boundary_sweep(p.fiber_genus(), p.matrices())?)
}

/// The block formula of [`beta_map`] for arbitrary holonomy, whether or not
/// the boundary loop acts trivially.
pub(crate) fn boundary_sweep(h: usize, matrices: &[SymplecticMatrix]) -> Result<QMatrix, LinalgError> {
    let id = ZMatrix::identity(2 * h);
    let mut q = SymplecticMatrix::identity(h);
    let mut blocks = Vec::with_capacity(matrices.len());
    for pair in matrices.chunks(2) {
        let (odd, even) = (&pair[0], &pair[1]);
        let conj = odd.inverse().compose(even).compose(odd);
        let next = SymplecticMatrix::commutator(&even.inverse(), &odd.inverse()).compose(&q);
        blocks.push(id.sub(conj.matrix())?.mul(q.matrix())?);
        blocks.push(odd.compose(&q).matrix().sub(next.matrix())?);
        q = next;
    }
    Ok(rational(&Matrix::vstack(&blocks)?))
}

struct OneBoundaryPart {
    w: QSubspace,
    coinvariant_reps: Vec<QVector>,
    cylinders: QSubspace,
    invariant: QSubspace,
}

impl OneBoundaryPart {
    fn compute(p: &HolonomyProblem) -> Self {
        let (w, coinvariant_reps) = coinvariant_quotient(p);
        OneBoundaryPart {
            w,
            coinvariant_reps,
            cylinders: cylinder_space(p),
            invariant: invariant_space(p),
        }
    }

    fn degree_one(&self, g: usize) -> Vec<Generator> {
        let mut out: Vec<Generator> = (0..2 * g)
            .map(|i| Generator {
                label: GeneratorLabel::BaseCircle,
                coords: unit(2 * g, i),
            })
            .collect();
        out.extend(self.coinvariant_reps.iter().map(|v| Generator {
            label: GeneratorLabel::CoinvariantClass,
            coords: v.clone(),
        }));
        out
    }
}

fn vertical(g: usize) -> impl Iterator<Item = Generator> {
    (0..2 * g).map(move |i| Generator {
        label: GeneratorLabel::Vertical3Mfld,
        coords: unit(2 * g, i),
    })
}

fn cylinders(vectors: &[QVector]) -> impl Iterator<Item = Generator> + '_ {
    vectors.iter().map(|v| Generator {
        label: GeneratorLabel::CylinderClass,
        coords: v.clone(),
    })
}

/// Homology of a bundle over the genus-`g` surface with one boundary component.
pub fn homology_bounded(p: &HolonomyProblem) -> Result<BettiReport, HomologyError> {
    if p.base() != BaseKind::OneBoundary {
        return Err(HomologyError::WrongBase {
            expected: BaseKind::OneBoundary,
            found: p.base(),
        });
    }
    let (h, g) = (p.fiber_genus(), p.base_genus());
    let part = OneBoundaryPart::compute(p);
    let dims = Dims {
        w: part.w.dim(),
        fix: part.invariant.dim(),
        k: part.cylinders.dim(),
        rank_beta: None,
    };
    let betti = [1, 2 * h - dims.w + 2 * g, 1 + dims.k, 2 * g, 0];

    let mut generators = part.degree_one(g);
    generators.push(Generator {
        label: GeneratorLabel::FiberClass,
        coords: scalar(1),
    });
    generators.extend(cylinders(part.cylinders.basis()));
    generators.extend(vertical(g));

    let mut report = BettiReport {
        base: BaseKind::OneBoundary,
        fiber_genus: h,
        base_genus: g,
        betti,
        dims,
        generators,
        validations: Vec::new(),
        coinvariant_span: part.w,
        invariant: part.invariant,
        cylinders: part.cylinders,
        beta: None,
    };
    report.validations = validate_report(&report);
    Ok(report)
}

/// Homology of a bundle over the closed genus-`g` surface.
///
/// The closed base is the one-boundary surface `A` plus a disc `D`; the
/// one-boundary computation is reused for `A`, and gluing contributes the
/// Euler-class dual `[N]` (whose boundary is `χ(F)` times the loop class), the
/// quotient of `K` by the image of the boundary-loop map, the invariant
/// 3-cycles `α ⊗ [S¹]` for `α ∈ Fix`, and the fundamental class.
pub fn homology_closed(p: &HolonomyProblem) -> Result<BettiReport, HomologyError> {
    if p.base() != BaseKind::Closed {
        return Err(HomologyError::WrongBase {
            expected: BaseKind::Closed,
            found: p.base(),
        });
    }
    let (h, g) = (p.fiber_genus(), p.base_genus());
    let part = OneBoundaryPart::compute(p);
    let beta = beta_map(p)?;
    let beta_image = beta.image_basis();
    let cylinder_reps = beta_image.quotient_representatives(&part.cylinders)?;
    let dims = Dims {
        w: part.w.dim(),
        fix: part.invariant.dim(),
        k: part.cylinders.dim(),
        rank_beta: Some(beta_image.dim()),
    };
    let betti = [
        1,
        2 * h - dims.w + 2 * g,
        2 + dims.k - beta_image.dim(),
        2 * g + dims.fix,
        1,
    ];

    let chi_fiber = 2 - 2 * h as i64;
    let mut generators = part.degree_one(g);
    generators.push(Generator {
        label: GeneratorLabel::EulerDual,
        coords: scalar(chi_fiber),
    });
    generators.push(Generator {
        label: GeneratorLabel::FiberClass,
        coords: scalar(1),
    });
    generators.extend(cylinders(&cylinder_reps));
    generators.extend(vertical(g));
    generators.extend(part.invariant.basis().iter().map(|v| Generator {
        label: GeneratorLabel::Invariant3Mfld,
        coords: v.clone(),
    }));
    generators.push(Generator {
        label: GeneratorLabel::FundamentalClass,
        coords: scalar(1),
    });

    let mut report = BettiReport {
        base: BaseKind::Closed,
        fiber_genus: h,
        base_genus: g,
        betti,
        dims,
        generators,
        validations: Vec::new(),
        coinvariant_span: part.w,
        invariant: part.invariant,
        cylinders: part.cylinders,
        beta: Some(beta),
    };
    report.validations = validate_report(&report);
    Ok(report)
}

/// Dispatches on the base type.
pub fn homology(p: &HolonomyProblem) -> Result<BettiReport, HomologyError> {
    match p.base() {
        BaseKind::Closed => homology_closed(p),
        BaseKind::OneBoundary => homology_bounded(p),
    }
}

/// Betti numbers of the product `F × base`, from the Künneth formula.
pub fn kunneth_betti(fiber_genus: usize, base: BaseKind, base_genus: usize) -> [usize; 5] {
    let fiber = [1, 2 * fiber_genus, 1];
    let base_betti = match base {
        BaseKind::Closed => [1, 2 * base_genus, 1],
        BaseKind::OneBoundary => [1, 2 * base_genus, 0],
    };
    let mut out = [0; 5];
    for (i, a) in fiber.iter().enumerate() {
        for (j, b) in base_betti.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}
