//! Existence and computation of best coapproximations.
//!
//! With an empty zero set, `Σ αₖ ãₖ` is a best coapproximation to `b̃` iff
//! `x̃ₚ · (b̃ − Aα) = 0` for every norming representative `x̃ₚ`; the solution is
//! unique when it exists.
//!
//! With a non-empty zero set `Z` the test becomes
//! `|x̃ₚ · (σ(b̃) − σ(A)α)| ≤ Σ_{i∈Z} |bᵢ|` over the representatives of the
//! reduced subspace. For `β` in an open cell `p`, `Aβ` vanishes exactly on `Z`,
//! so the `ℓ₁` Birkhoff–James condition `Aβ ⊥ (b̃ − Aα)` reads as the inequality
//! for `p`; boundary `β` follow by closedness of orthogonality.

use num::{Signed, Zero};

use crate::analysis::SubspaceAnalysis;
use crate::error::{Error, Result};
use crate::exact::lp::{LinearProgram, LpOutcome};
use crate::exact::{solve_linear, solve_minimax_lp, Matrix, Rational, SystemStatus, Vector};
use crate::norming::NormingSet;
use crate::subspace::{ComponentProfile, SubspaceBasis};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OutcomeKind {
    NotExists,
    Unique,
    Polytope,
}

/// `|row · α − rhs| ≤ slack`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlackConstraint {
    pub row: Vector,
    pub rhs: Rational,
    pub slack: Rational,
}

impl SlackConstraint {
    pub fn satisfied_by(&self, alpha: &Vector) -> bool {
        (self.row.dot(alpha) - &self.rhs).abs() <= self.slack
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoapproxOutcome {
    NotExists,
    Unique {
        coefficients: Vector,
        vector: Vector,
    },
    /// Infinitely many coefficient vectors: exactly those meeting every constraint.
    Polytope {
        constraints: Vec<SlackConstraint>,
        witness: Vector,
        vector: Vector,
    },
}

impl CoapproxOutcome {
    pub fn kind(&self) -> OutcomeKind {
        match self {
            CoapproxOutcome::NotExists => OutcomeKind::NotExists,
            CoapproxOutcome::Unique { .. } => OutcomeKind::Unique,
            CoapproxOutcome::Polytope { .. } => OutcomeKind::Polytope,
        }
    }

    /// Unique coefficients or the polytope witness.
    pub fn coefficients(&self) -> Option<&Vector> {
        match self {
            CoapproxOutcome::NotExists => None,
            CoapproxOutcome::Unique { coefficients, .. } => Some(coefficients),
            CoapproxOutcome::Polytope { witness, .. } => Some(witness),
        }
    }

    /// `A·α` for the coefficients above.
    pub fn vector(&self) -> Option<&Vector> {
        match self {
            CoapproxOutcome::NotExists => None,
            CoapproxOutcome::Unique { vector, .. } | CoapproxOutcome::Polytope { vector, .. } => {
                Some(vector)
            }
        }
    }

    /// Whether `alpha` belongs to the reported solution set.
    pub fn contains(&self, alpha: &Vector) -> bool {
        match self {
            CoapproxOutcome::NotExists => false,
            CoapproxOutcome::Unique { coefficients, .. } => coefficients == alpha,
            CoapproxOutcome::Polytope { constraints, .. } => {
                constraints.iter().all(|c| c.satisfied_by(alpha))
            }
        }
    }
}

/// The `q × m` system over the spanning basis of the norming set: row `p` is
/// `(Σᵢ aᵢʲ xᵢᵖ)ⱼ`, right-hand side `Σᵢ bᵢ xᵢᵖ`.
pub fn assemble_system(basis: &SubspaceBasis, norming: &NormingSet, b: &Vector) -> (Matrix, Vector) {
    let a = basis.matrix();
    let reps = norming.basis_representatives();
    let rows = Matrix::from_rows(
        reps.iter()
            .map(|x| (0..a.cols()).map(|j| x.dot(&a.column(j))).collect())
            .collect(),
    );
    let rhs = reps.iter().map(|x| x.dot(b)).collect();
    (rows, rhs)
}

fn check_target(basis: &SubspaceBasis, b: &Vector) -> Result<()> {
    if b.len() != basis.n() {
        return Err(Error::Dimension(format!(
            "target has length {}, expected {}",
            b.len(),
            basis.n()
        )));
    }
    Ok(())
}

/// Linear characterization for a basis with empty zero set. `norming` must be
/// the norming set of this very basis.
pub fn solve_empty_zero_set(
    basis: &SubspaceBasis,
    norming: &NormingSet,
    b: &Vector,
) -> Result<CoapproxOutcome> {
    check_target(basis, b)?;
    if norming
        .representatives()
        .first()
        .is_some_and(|x| x.len() != basis.n())
    {
        return Err(Error::Dimension(
            "norming set does not belong to this basis (zero set not empty?)".into(),
        ));
    }
    let (rows, rhs) = assemble_system(basis, norming, b);
    let result = solve_linear(&rows, &rhs);
    match result.status {
        SystemStatus::NoSolution => Ok(CoapproxOutcome::NotExists),
        SystemStatus::UniqueSolution => {
            let coefficients = result.solution.expect("unique solution present");
            let vector = basis.combine(&coefficients);
            Ok(CoapproxOutcome::Unique {
                coefficients,
                vector,
            })
        }
        SystemStatus::AffineFamily => Err(Error::InternalInconsistency(format!(
            "characterization system has a {}-dimensional solution family; \
             best coapproximations are unique when the zero set is empty",
            result.nullspace_basis.len()
        ))),
    }
}

/// Full solver: any zero set. See [`SubspaceAnalysis::solve`].
pub fn solve_general(
    basis: &SubspaceBasis,
    _profile: &ComponentProfile,
    b: &Vector,
) -> Result<CoapproxOutcome> {
    SubspaceAnalysis::new(basis.clone())?.solve(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceThreshold {
    /// Smallest zero-set mass `Σ_{i∈Z}|yᵢ|` for which a target `y` agreeing with
    /// `b̃` off `Z` has a best coapproximation.
    pub delta0: Rational,
    pub minimizing_alpha: Vector,
    /// `‖ρ(b̃)‖₁`, an upper bound for `delta0`.
    pub rho_norm: Rational,
}

impl ExistenceThreshold {
    pub fn bound_holds(&self) -> bool {
        self.delta0 <= self.rho_norm
    }
}

/// `|row · α − rhs| ≤ slack` over every representative, as an LP feasible set.
fn slack_program(rows: &Matrix, rhs: &Vector, slack: &Rational) -> LinearProgram {
    let m = rows.cols();
    let mut lp = LinearProgram::new(m);
    for j in 0..m {
        lp.set_free(j);
    }
    for p in 0..rows.rows() {
        let row = rows.row(p).to_vec();
        lp.add_le(row.clone(), &rhs[p] + slack);
        lp.add_le(row.iter().map(|v| -v).collect(), slack - &rhs[p]);
    }
    lp
}

/// True when the feasible set pins every coordinate to a single value.
fn is_single_point(rows: &Matrix, rhs: &Vector, slack: &Rational) -> Result<bool> {
    let base = slack_program(rows, rhs, slack);
    for j in 0..rows.cols() {
        let mut extent = Vec::with_capacity(2);
        for direction in [1i64, -1] {
            let mut lp = base.clone();
            let mut objective = vec![Rational::zero(); rows.cols()];
            objective[j] = crate::exact::int(direction);
            lp.set_objective(objective);
            match lp.solve() {
                LpOutcome::Optimal { value, .. } => extent.push(value),
                other => {
                    return Err(Error::InternalInconsistency(format!(
                        "coordinate range program should be bounded and feasible, got {other:?}"
                    )))
                }
            }
        }
        // max αⱼ == min αⱼ  ⇔  extent[0] == -extent[1]
        if extent[0] != -extent[1].clone() {
            return Ok(false);
        }
    }
    Ok(true)
}

impl SubspaceAnalysis {
    /// Best coapproximation(s) to `b` out of the subspace.
    pub fn solve(&self, b: &Vector) -> Result<CoapproxOutcome> {
        let basis = self.basis();
        check_target(basis, b)?;
        if let Some(coefficients) = basis.coordinates_of(b) {
            return Ok(CoapproxOutcome::Unique {
                coefficients,
                vector: b.clone(),
            });
        }
        if !self.has_zero_set() {
            return solve_empty_zero_set(basis, self.norming(), b);
        }

        let rows = self.representative_rows();
        let rhs = self.representative_rhs(b);
        let slack = self.reduced().zero_set_mass(b);
        let optimum = solve_minimax_lp(&rows, &rhs)?;
        if optimum.t_star > slack {
            return Ok(CoapproxOutcome::NotExists);
        }
        let witness = optimum.alpha_star;
        let vector = basis.combine(&witness);
        let single = optimum.t_star == slack && is_single_point(&rows, &rhs, &slack)?;
        if single {
            return Ok(CoapproxOutcome::Unique {
                coefficients: witness,
                vector,
            });
        }
        let constraints = (0..rows.rows())
            .map(|p| SlackConstraint {
                row: rows.row_vector(p),
                rhs: rhs[p].clone(),
                slack: slack.clone(),
            })
            .collect();
        Ok(CoapproxOutcome::Polytope {
            constraints,
            witness,
            vector,
        })
    }

    /// `δ₀ = min_α max_p |x̃ₚ · (σ(b̃) − σ(A)α)|`. Only defined when the zero set
    /// is non-empty.
    pub fn existence_threshold(&self, b: &Vector) -> Result<ExistenceThreshold> {
        check_target(self.basis(), b)?;
        if !self.has_zero_set() {
            return Err(Error::EmptyZeroSet);
        }
        let optimum = solve_minimax_lp(&self.representative_rows(), &self.representative_rhs(b))?;
        let rho_norm = self.reduced().sigma(b).l1_norm();
        Ok(ExistenceThreshold {
            delta0: optimum.t_star,
            minimizing_alpha: optimum.alpha_star,
            rho_norm,
        })
    }
}

pub fn existence_threshold(
    basis: &SubspaceBasis,
    _profile: &ComponentProfile,
    b: &Vector,
) -> Result<ExistenceThreshold> {
    SubspaceAnalysis::new(basis.clone())?.existence_threshold(b)
}

/// The norm-one projection `P(ã + γb̃) = ã + γ·Σ αₖãₖ` from `span{b̃, Y}` onto `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormOneProjection {
    basis: SubspaceBasis,
    target: Vector,
    alpha: Vector,
    image: Vector,
}

impl NormOneProjection {
    pub fn target(&self) -> &Vector {
        &self.target
    }

    pub fn coefficients(&self) -> &Vector {
        &self.alpha
    }

    /// `P(b̃)`.
    pub fn image_of_target(&self) -> &Vector {
        &self.image
    }

    pub fn basis(&self) -> &SubspaceBasis {
        &self.basis
    }

    /// `P(Σ βₖãₖ + γb̃)`.
    pub fn apply(&self, beta: &Vector, gamma: &Rational) -> Vector {
        self.basis.combine(beta).add(&self.image.scale(gamma))
    }

    /// The argument `Σ βₖãₖ + γb̃` itself, for comparing norms.
    pub fn domain_point(&self, beta: &Vector, gamma: &Rational) -> Vector {
        self.basis.combine(beta).add(&self.target.scale(gamma))
    }
}

pub fn projection_map(
    basis: &SubspaceBasis,
    b: &Vector,
    outcome: &CoapproxOutcome,
) -> Result<NormOneProjection> {
    check_target(basis, b)?;
    let alpha = outcome.coefficients().ok_or(Error::NoCoapproximation)?.clone();
    let image = basis.combine(&alpha);
    Ok(NormOneProjection {
        basis: basis.clone(),
        target: b.clone(),
        alpha,
        image,
    })
}
