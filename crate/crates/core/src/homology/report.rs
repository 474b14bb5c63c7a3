use std::fmt;

use crate::symplectic::BaseKind;
use crate::{QMatrix, QSubspace, QVector, Rational};

/// Geometric kind of a homology generator of the total space.
///
/// | label               | degree | coordinates                                         |
/// |---------------------|--------|-----------------------------------------------------|
/// | `base_circle`       | 1      | unit vector in `Q^{2g}`: a lift of base loop `i`    |
/// | `coinvariant_class` | 1      | fiber class in `Q^{2h}`, representative mod `W`     |
/// | `euler_dual`        | 2      | `[χ(F)]`, the coefficient of its boundary image     |
/// | `fiber_class`       | 2      | `[1]`                                               |
/// | `cylinder_class`    | 2      | `(α_1, ..., α_{2g})` in `Q^{4gh}`                   |
/// | `vertical_3mfld`    | 3      | unit vector in `Q^{2g}`: fiber swept over loop `i`  |
/// | `invariant_3mfld`   | 3      | `α` in `Q^{2h}` fixed by all holonomy, `α ⊗ [S¹]`   |
/// | `fundamental_class` | 4      | `[1]`                                               |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorLabel {
    BaseCircle,
    CoinvariantClass,
    EulerDual,
    FiberClass,
    CylinderClass,
    Vertical3Mfld,
    Invariant3Mfld,
    FundamentalClass,
}

impl GeneratorLabel {
    pub const ALL: [GeneratorLabel; 8] = [
        GeneratorLabel::BaseCircle,
        GeneratorLabel::CoinvariantClass,
        GeneratorLabel::EulerDual,
        GeneratorLabel::FiberClass,
        GeneratorLabel::CylinderClass,
        GeneratorLabel::Vertical3Mfld,
        GeneratorLabel::Invariant3Mfld,
        GeneratorLabel::FundamentalClass,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GeneratorLabel::BaseCircle => "base_circle",
            GeneratorLabel::CoinvariantClass => "coinvariant_class",
            GeneratorLabel::EulerDual => "euler_dual",
            GeneratorLabel::FiberClass => "fiber_class",
            GeneratorLabel::CylinderClass => "cylinder_class",
            GeneratorLabel::Vertical3Mfld => "vertical_3mfld",
            GeneratorLabel::Invariant3Mfld => "invariant_3mfld",
            GeneratorLabel::FundamentalClass => "fundamental_class",
        }
    }

    pub fn degree(self) -> usize {
        match self {
            GeneratorLabel::BaseCircle | GeneratorLabel::CoinvariantClass => 1,
            GeneratorLabel::EulerDual | GeneratorLabel::FiberClass | GeneratorLabel::CylinderClass => 2,
            GeneratorLabel::Vertical3Mfld | GeneratorLabel::Invariant3Mfld => 3,
            GeneratorLabel::FundamentalClass => 4,
        }
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: GeneratorLabel,
    pub coords: QVector,
}

impl Generator {
    pub fn degree(&self) -> usize {
        self.label.degree()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dims {
    /// `dim Σ Im(M_i − I)`.
    pub w: usize,
    /// `dim ∩ Ker(M_i − I)`.
    pub fix: usize,
    /// Dimension of the cylinder space.
    pub k: usize,
    /// Rank of the boundary-loop map; closed base only.
    pub rank_beta: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not_applicable",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

impl Validation {
    fn new(name: &str, verdict: Verdict, detail: String) -> Self {
        Validation {
            name: name.to_string(),
            verdict,
            detail,
        }
    }
}

/// Rational homology of the total space of a bundle, with the intermediate
/// spaces it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiReport {
    pub base: BaseKind,
    pub fiber_genus: usize,
    pub base_genus: usize,
    pub betti: [usize; 5],
    pub dims: Dims,
    pub generators: Vec<Generator>,
    pub validations: Vec<Validation>,
    /// `W = Σ Im(M_i − I)` in `Q^{2h}`.
    pub coinvariant_span: QSubspace,
    /// `Fix = ∩ Ker(M_i − I)` in `Q^{2h}`.
    pub invariant: QSubspace,
    /// Cylinder space `K` in `Q^{4gh}`.
    pub cylinders: QSubspace,
    /// Boundary-loop map, `4gh × 2h`; closed base only.
    pub beta: Option<QMatrix>,
}

impl BettiReport {
    pub fn all_pass(&self) -> bool {
        self.validations.iter().all(|v| v.verdict != Verdict::Fail)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn generators_in_degree(&self, degree: usize) -> impl Iterator<Item = &Generator> {
        self.generators.iter().filter(move |g| g.degree() == degree)
    }
}

/// Cross-checks a report against identities that hold for every bundle.
///
/// Failures are reported as verdicts; nothing here returns an error.
pub fn validate_report(r: &BettiReport) -> Vec<Validation> {
    let h = r.fiber_genus as i64;
    let closed = r.base == BaseKind::Closed;
    let mut out = Vec::new();

    let chi = r.euler_characteristic();
    let expected = (2 - 2 * h) * r.base.euler_characteristic(r.base_genus);
    out.push(Validation::new(
        "euler_characteristic",
        Verdict::from_bool(chi == expected),
        format!("alternating sum {chi}, chi(F)*chi(base) = {expected}"),
    ));

    let b = r.betti;
    out.push(if closed {
        Validation::new(
            "poincare_duality",
            Verdict::from_bool(b[1] == b[3] && b[0] == b[4]),
            format!("b1 = {}, b3 = {}, b0 = {}, b4 = {}", b[1], b[3], b[0], b[4]),
        )
    } else {
        Validation::new(
            "poincare_duality",
            Verdict::NotApplicable,
            "total space has boundary".to_string(),
        )
    });

    let (w, fix) = (r.dims.w, r.dims.fix);
    out.push(Validation::new(
        "symplectic_duality",
        Verdict::from_bool(w + fix == 2 * r.fiber_genus),
        format!("dim W + dim Fix = {} + {} = {}, 2h = {}", w, fix, w + fix, 2 * r.fiber_genus),
    ));

    match (closed, &r.beta) {
        (false, _) => {
            for name in ["beta_kernel", "beta_image_in_K"] {
                out.push(Validation::new(
                    name,
                    Verdict::NotApplicable,
                    "one-boundary base has no boundary-loop map".to_string(),
                ));
            }
        }
        (true, None) => {
            for name in ["beta_kernel", "beta_image_in_K"] {
                out.push(Validation::new(name, Verdict::Fail, "boundary-loop map missing".to_string()));
            }
        }
        (true, Some(beta)) => {
            let kernel = beta.kernel_basis();
            let ok = kernel == r.invariant;
            out.push(Validation::new(
                "beta_kernel",
                Verdict::from_bool(ok),
                format!(
                    "dim Ker(B) = {}, dim Fix = {}, equal as subspaces: {ok}",
                    kernel.dim(),
                    r.invariant.dim()
                ),
            ));
            let outside = (0..beta.cols())
                .filter(|&j| !r.cylinders.contains(&beta.column(j)).unwrap_or(false))
                .count();
            out.push(Validation::new(
                "beta_image_in_K",
                Verdict::from_bool(outside == 0),
                format!("{} of {} columns satisfy the gluing condition", beta.cols() - outside, beta.cols()),
            ));
        }
    }

    let counts: Vec<usize> = (1..5).map(|d| r.generators_in_degree(d).count()).collect();
    let ok = counts.iter().zip(&b[1..]).all(|(c, b)| c == b);
    out.push(Validation::new(
        "generator_count",
        Verdict::from_bool(ok),
        format!("generators in degrees 1..4: {counts:?}, betti: {:?}", &b[1..]),
    ));
    out
}

pub(crate) fn unit(n: usize, i: usize) -> QVector {
    let mut v = vec![Rational::from_integer(0.into()); n];
    v[i] = Rational::from_integer(1.into());
    v
}

pub(crate) fn scalar(x: i64) -> QVector {
    vec![Rational::from_integer(x.into())]
}
