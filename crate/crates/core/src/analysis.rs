use crate::error::Result;
use crate::exact::{Matrix, Vector};
use crate::norming::{build_arrangement, enumerate_cells, minimal_norming_set, Arrangement, NormingSet};
use crate::subspace::{build_profile, reduce_sigma, ComponentProfile, ReducedInstance, SubspaceBasis};

/// Everything derived from a basis once: profile, reduction, arrangement and
/// the norming set of the reduced subspace. Targets are then solved against it.
#[derive(Clone, Debug)]
pub struct SubspaceAnalysis {
    basis: SubspaceBasis,
    profile: ComponentProfile,
    reduced: ReducedInstance,
    arrangement: Arrangement,
    norming: NormingSet,
}

impl SubspaceAnalysis {
    pub fn new(basis: SubspaceBasis) -> Result<Self> {
        let profile = build_profile(&basis);
        let reduced = reduce_sigma(&basis, &profile)?;
        let arrangement = build_arrangement(&reduced, &profile);
        let cells = enumerate_cells(&arrangement)?;
        let norming = minimal_norming_set(&arrangement, &cells, &reduced);
        Ok(SubspaceAnalysis {
            basis,
            profile,
            reduced,
            arrangement,
            norming,
        })
    }

    pub fn basis(&self) -> &SubspaceBasis {
        &self.basis
    }

    pub fn profile(&self) -> &ComponentProfile {
        &self.profile
    }

    pub fn reduced(&self) -> &ReducedInstance {
        &self.reduced
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    /// Norming set of the reduced subspace (equal to the subspace itself when
    /// the zero set is empty).
    pub fn norming(&self) -> &NormingSet {
        &self.norming
    }

    pub fn has_zero_set(&self) -> bool {
        !self.profile.zero_set().is_empty()
    }

    /// Rows `x̃ₚᵀ σ(A)` for every norming representative.
    pub fn representative_rows(&self) -> Matrix {
        self.norming.system_rows(self.reduced.basis().matrix())
    }

    /// Right-hand sides `x̃ₚ · σ(b̃)` for every norming representative.
    pub fn representative_rhs(&self, b: &Vector) -> Vector {
        let reduced_b = self.reduced.sigma(b);
        self.norming
            .representatives()
            .iter()
            .map(|x| x.dot(&reduced_b))
            .collect()
    }
}
