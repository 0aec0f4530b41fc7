//! Minimal norming set of a subspace with empty zero set.
//!
//! Each non-zero component class gives a hyperplane through the origin of the
//! coefficient space `ℝᵐ`. On every open cell of that arrangement the functional
//! `Σ βₖ ãₖ` has a fixed coordinate sign pattern, so it attains its `ℓ∞` norm
//! exactly at the `±1` vector carrying that pattern. One vector per antipodal
//! pair of cells gives the unique minimal norming set.

use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::lp::{LinearProgram, LpOutcome};
use crate::exact::{int, Matrix, Rational, Vector};
use crate::subspace::{ComponentProfile, ReducedInstance};

/// Largest number of distinct hyperplanes `enumerate_cells` accepts.
pub const MAX_HYPERPLANES: usize = 20;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn of(value: &Rational) -> Option<Sign> {
        if value.is_positive() {
            Some(Sign::Plus)
        } else if value.is_negative() {
            Some(Sign::Minus)
        } else {
            None
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Distinct hyperplanes `{β : normal·β = 0}` of the coefficient space, one per
/// component class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    normals: Vec<Vector>,
    /// For reduced coordinate `i`: (hyperplane index, sign of row_i relative to the normal).
    orientation: Vec<(usize, Sign)>,
}

impl Arrangement {
    pub fn normals(&self) -> &[Vector] {
        &self.normals
    }

    pub fn orientation(&self) -> &[(usize, Sign)] {
        &self.orientation
    }

    pub fn r(&self) -> usize {
        self.normals.len()
    }

    pub fn m(&self) -> usize {
        self.normals.first().map_or(0, Vector::len)
    }
}

/// Positive multiple of `v` with coprime integer entries.
fn primitive_positive_multiple(v: &Vector) -> Vector {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = scaled
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v.clone();
    }
    scaled
        .into_iter()
        .map(|x| Rational::from_integer(x / &gcd))
        .collect()
}

/// One hyperplane per component class; each normal is the primitive integer
/// positive multiple of the class representative's row.
pub fn build_arrangement(reduced: &ReducedInstance, profile: &ComponentProfile) -> Arrangement {
    let a = reduced.basis().matrix();
    let position_of = |original: usize| {
        reduced
            .kept_indices()
            .binary_search(&original)
            .expect("class members lie outside the zero set")
    };
    let mut normals = Vec::with_capacity(profile.d());
    let mut orientation = vec![(0, Sign::Plus); reduced.k()];
    for (t, class) in profile.classes().iter().enumerate() {
        let rep_row = a.row_vector(position_of(class.representative));
        let normal = primitive_positive_multiple(&rep_row);
        for (member, c) in &class.members {
            let sign = Sign::of(c).expect("class constants are non-zero");
            orientation[position_of(*member)] = (t, sign);
        }
        normals.push(normal);
    }
    Arrangement {
        normals,
        orientation,
    }
}

/// Non-empty open cell `{β : signᵗ·(normalᵗ·β) > 0 for all t}` with an interior point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCell {
    pub signs: Vec<Sign>,
    pub witness: Vector,
}

impl SignCell {
    /// True when the witness lies strictly inside the cell.
    pub fn witness_is_strict(&self, arrangement: &Arrangement) -> bool {
        arrangement
            .normals()
            .iter()
            .zip(&self.signs)
            .all(|(normal, s)| (normal.dot(&self.witness) * int(s.value())).is_positive())
    }

    /// Number of sign changes along the hyperplane order.
    pub fn sign_changes(&self) -> usize {
        self.signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Maximizes the smallest signed margin over the box `‖β‖∞ ≤ 1`. The open cell
/// is non-empty iff the optimum is positive; the optimizer is a strict witness.
fn cell_witness(normals: &[Vector], signs: &[Sign]) -> Option<Vector> {
    let m = normals[0].len();
    let mut lp = LinearProgram::new(m + 1);
    for k in 0..m {
        lp.set_free(k);
    }
    let mut objective = vec![Rational::zero(); m + 1];
    objective[m] = int(1);
    lp.set_objective(objective);
    for (normal, s) in normals.iter().zip(signs) {
        let flip = int(-s.value());
        let mut row: Vec<Rational> = normal.iter().map(|v| v * &flip).collect();
        row.push(int(1));
        lp.add_le(row, Rational::zero());
    }
    for k in 0..m {
        let mut up = vec![Rational::zero(); m + 1];
        up[k] = int(1);
        lp.add_le(up.clone(), int(1));
        up[k] = int(-1);
        lp.add_le(up, int(1));
    }
    match lp.solve() {
        LpOutcome::Optimal { value, mut point } if value.is_positive() => {
            point.truncate(m);
            Some(primitive_positive_multiple(&Vector::new(point)))
        }
        LpOutcome::Optimal { .. } => None,
        other => unreachable!("the margin program is feasible and bounded: {other:?}"),
    }
}

/// All non-empty open cells, one per antipodal pair (the one with `+` on
/// hyperplane 0), in lexicographic sign order with `+` before `−`.
pub fn enumerate_cells(arrangement: &Arrangement) -> Result<Vec<SignCell>> {
    let r = arrangement.r();
    if r > MAX_HYPERPLANES {
        return Err(Error::CapacityExceeded {
            what: "distinct hyperplanes",
            got: r,
            limit: MAX_HYPERPLANES,
        });
    }
    if r == 0 {
        return Ok(Vec::new());
    }
    let mut cells = Vec::new();
    let mut prefix = vec![Sign::Plus];
    descend(arrangement.normals(), &mut prefix, &mut cells);
    Ok(cells)
}

// Depth-first over sign prefixes; an empty prefix cell prunes its subtree.
fn descend(normals: &[Vector], prefix: &mut Vec<Sign>, out: &mut Vec<SignCell>) {
    let depth = prefix.len();
    if depth == normals.len() {
        if let Some(witness) = cell_witness(normals, prefix) {
            out.push(SignCell {
                signs: prefix.clone(),
                witness,
            });
        }
        return;
    }
    for sign in [Sign::Plus, Sign::Minus] {
        prefix.push(sign);
        if prefix.len() == normals.len() || cell_witness(&normals[..=depth], prefix).is_some() {
            descend(normals, prefix, out);
        }
        prefix.pop();
    }
}

/// The unique minimal norming set of a subspace with empty zero set, in the
/// reduced coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormingSet {
    representatives: Vec<Vector>,
    cells: Vec<SignCell>,
    span_dim: usize,
    spanning_basis: Vec<usize>,
}

impl NormingSet {
    /// One `±1` vector per antipodal pair; the first entry is always `+1`.
    pub fn representatives(&self) -> &[Vector] {
        &self.representatives
    }

    /// Source cell of each representative (same order).
    pub fn cells(&self) -> &[SignCell] {
        &self.cells
    }

    /// `q = dim span N`.
    pub fn span_dim(&self) -> usize {
        self.span_dim
    }

    /// Number of antipodal pairs.
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Indices of `q` representatives spanning `span N`, chosen greedily after
    /// ordering the cells by sign changes and then lexicographically.
    pub fn spanning_basis(&self) -> &[usize] {
        &self.spanning_basis
    }

    pub fn basis_representatives(&self) -> Vec<&Vector> {
        self.spanning_basis
            .iter()
            .map(|&i| &self.representatives[i])
            .collect()
    }

    /// Representatives re-embedded in `ℓ∞ⁿ` with zeros on the zero set.
    pub fn lifted(&self, reduced: &ReducedInstance) -> Vec<Vector> {
        self.representatives.iter().map(|x| reduced.lift(x)).collect()
    }

    /// Row `p` is `(Σᵢ aᵢʲ xᵢᵖ)ⱼ` for every representative `p`.
    pub fn system_rows(&self, reduced_basis: &Matrix) -> Matrix {
        let reps = Matrix::from_rows(
            self.representatives
                .iter()
                .map(|x| x.entries().to_vec())
                .collect(),
        );
        reps.mul(reduced_basis)
    }
}

pub fn minimal_norming_set(
    arrangement: &Arrangement,
    cells: &[SignCell],
    reduced: &ReducedInstance,
) -> NormingSet {
    assert_eq!(arrangement.orientation().len(), reduced.k());
    let representatives: Vec<Vector> = cells
        .iter()
        .map(|cell| {
            arrangement
                .orientation()
                .iter()
                .map(|&(t, o)| {
                    let s = if o == Sign::Plus { cell.signs[t] } else { cell.signs[t].flip() };
                    int(s.value())
                })
                .collect()
        })
        .collect();

    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by(|&a, &b| {
        (cells[a].sign_changes(), &cells[a].signs).cmp(&(cells[b].sign_changes(), &cells[b].signs))
    });
    let mut spanning_basis = Vec::new();
    let mut chosen: Vec<Vec<Rational>> = Vec::new();
    for idx in order {
        chosen.push(representatives[idx].entries().to_vec());
        if Matrix::from_rows(chosen.clone()).rank() == chosen.len() {
            spanning_basis.push(idx);
        } else {
            chosen.pop();
        }
    }
    let span_dim = spanning_basis.len();
    NormingSet {
        representatives,
        cells: cells.to_vec(),
        span_dim,
        spanning_basis,
    }
}
