//! Coproximinal and co-Chebyshev tests.

use serde::Serialize;

use crate::analysis::SubspaceAnalysis;
use crate::error::Result;
use crate::subspace::{build_profile, SubspaceBasis};

/// Machine-readable reasons attached to a classification.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rationale {
    /// `m = n`: every vector is its own best coapproximation.
    FullSpace,
    /// Zero coordinates dropped; the reduced subspace decides coproximinality.
    SigmaReduction,
    /// Coproximinal iff `q = m`.
    RankTest,
    /// Empty zero set: best coapproximations are unique when they exist.
    UniquenessCorollary,
    /// Non-empty zero set: some target has several best coapproximations.
    NeverCoChebyshev,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub coproximinal: bool,
    pub co_chebyshev: bool,
    pub n: usize,
    pub m: usize,
    /// `dim span N` of the reduced subspace.
    pub q: usize,
    /// Number of component classes.
    pub d: usize,
    pub zero_set_size: usize,
    pub rationale: Vec<Rationale>,
}

pub fn classify(basis: &SubspaceBasis) -> Result<ClassificationReport> {
    let (n, m) = (basis.n(), basis.m());
    if m == n {
        let profile = build_profile(basis);
        return Ok(ClassificationReport {
            coproximinal: true,
            co_chebyshev: true,
            n,
            m,
            q: m,
            d: profile.d(),
            zero_set_size: 0,
            rationale: vec![Rationale::FullSpace],
        });
    }
    Ok(classify_analysis(&SubspaceAnalysis::new(basis.clone())?))
}

/// Same as [`classify`] for an already analysed subspace (no full-space shortcut).
pub fn classify_analysis(analysis: &SubspaceAnalysis) -> ClassificationReport {
    let basis = analysis.basis();
    let profile = analysis.profile();
    let zero_set_size = profile.zero_set().len();
    let q = analysis.norming().span_dim();
    let coproximinal = q == basis.m();
    let mut rationale = Vec::new();
    if zero_set_size > 0 {
        rationale.push(Rationale::SigmaReduction);
    }
    rationale.push(Rationale::RankTest);
    if coproximinal {
        rationale.push(if zero_set_size == 0 {
            Rationale::UniquenessCorollary
        } else {
            Rationale::NeverCoChebyshev
        });
    }
    ClassificationReport {
        coproximinal,
        co_chebyshev: coproximinal && zero_set_size == 0,
        n: basis.n(),
        m: basis.m(),
        q,
        d: profile.d(),
        zero_set_size,
        rationale,
    }
}
