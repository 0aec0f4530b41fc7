//! Exact best coapproximation in `ℓ₁ⁿ`.
//!
//! Given a subspace `Y = span{ã₁, …, ã_m}` of `ℓ₁ⁿ` and a target `b̃`, a best
//! coapproximation is a `y₀ ∈ Y` with `‖y₀ − y‖₁ ≤ ‖b̃ − y‖₁` for every `y ∈ Y`.
//! This crate decides whether one exists, computes it (or the polytope of
//! coefficient vectors when it is not unique), builds the induced norm-one
//! projection and classifies subspaces as coproximinal or co-Chebyshev.
//!
//! Everything is exact rational arithmetic. The pipeline is:
//!
//! 1. [`subspace`]: component classes and zero set of the basis, and the
//!    reduction that drops zero coordinates.
//! 2. [`norming`]: sign cells of the hyperplane arrangement in coefficient
//!    space and the unique minimal norming set.
//! 3. [`solver`]: the linear characterization (empty zero set) or the
//!    slack-feasibility polytope (non-empty zero set), the existence threshold
//!    and the norm-one projection.
//! 4. [`classify`]: coproximinality and co-Chebyshev tests.
//!
//! [`oracle`] re-checks answers from the definition alone, through
//! Birkhoff–James orthogonality in `ℓ₁`.
//!
//! ```
//! use coapprox::{SubspaceAnalysis, SubspaceBasis, Vector};
//!
//! let basis = SubspaceBasis::from_columns(&[
//!     Vector::from_ints(&[4, 2, 1, -1, -4, 4]),
//!     Vector::from_ints(&[-1, 3, 5, 2, 1, 6]),
//!     Vector::from_ints(&[1, 4, 2, 1, -1, 8]),
//! ])?;
//! let analysis = SubspaceAnalysis::new(basis)?;
//! let outcome = analysis.solve(&Vector::from_ints(&[5, 4, 0, 0, 1, 5]))?;
//! assert_eq!(outcome.vector(), Some(&Vector::from_ints(&[2, 3, 0, 0, -2, 6])));
//! # Ok::<(), coapprox::Error>(())
//! ```

pub mod analysis;
pub mod classify;
pub mod error;
pub mod exact;
pub mod io;
pub mod norming;
pub mod oracle;
pub mod solver;
pub mod subspace;

pub use analysis::SubspaceAnalysis;
pub use classify::{classify, ClassificationReport, Rationale};
pub use error::{Error, Result};
pub use exact::{Matrix, Rational, Vector};
pub use norming::{NormingSet, Sign, SignCell};
pub use solver::{CoapproxOutcome, ExistenceThreshold, NormOneProjection, OutcomeKind};
pub use subspace::{ComponentProfile, ReducedInstance, SubspaceBasis};
