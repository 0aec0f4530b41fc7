//! Component profile of a subspace basis and the coordinate maps that strip
//! identically-zero coordinates.
//!
//! Rows of the `n × m` basis matrix are the *components*. Two non-zero rows are
//! equivalent when one is a non-zero multiple of the other; zero rows form the
//! zero set. Both the partition and the zero set depend only on the subspace,
//! not on the chosen basis.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, Vector};

/// Checked basis of `Y ⊆ ℓ₁ⁿ`: column `k` of `matrix` is the `k`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    matrix: Matrix,
}

impl SubspaceBasis {
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::Dimension("the basis has no vectors".into()));
        }
        let n = columns[0].len();
        if let Some((k, c)) = columns.iter().enumerate().find(|(_, c)| c.len() != n) {
            return Err(Error::Dimension(format!(
                "basis vector {} has length {}, expected {n}",
                k + 1,
                c.len()
            )));
        }
        validate_basis(Matrix::from_columns(columns))
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of basis vectors.
    pub fn m(&self) -> usize {
        self.matrix.cols()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn column(&self, k: usize) -> Vector {
        self.matrix.column(k)
    }

    /// `Σ αₖ ãₖ`.
    pub fn combine(&self, alpha: &Vector) -> Vector {
        self.matrix.mul_vec(alpha)
    }

    /// Coefficients of `v` in this basis, if `v ∈ Y`.
    pub fn coordinates_of(&self, v: &Vector) -> Option<Vector> {
        let result = crate::exact::solve_linear(&self.matrix, v);
        result.solution
    }
}

/// Checks `1 ≤ m ≤ n` and that the columns are linearly independent.
pub fn validate_basis(matrix: Matrix) -> Result<SubspaceBasis> {
    let (n, m) = (matrix.rows(), matrix.cols());
    if n == 0 || m == 0 {
        return Err(Error::Dimension(format!("empty basis matrix ({n}x{m})")));
    }
    if m > n {
        return Err(Error::Dimension(format!(
            "{m} basis vectors cannot be independent in dimension {n}"
        )));
    }
    let rank = matrix.rank();
    if rank < m {
        return Err(Error::RankDeficient { rank, columns: m });
    }
    Ok(SubspaceBasis { matrix })
}

/// One equivalence class of non-zero components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentClass {
    /// Smallest row index in the class (0-based).
    pub representative: usize,
    /// `(row, c)` with `row_i = c · row_representative`; the representative
    /// itself is listed first with `c = 1`.
    pub members: Vec<(usize, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentProfile {
    n: usize,
    classes: Vec<ComponentClass>,
    zero_set: Vec<usize>,
}

impl ComponentProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Classes ordered by representative.
    pub fn classes(&self) -> &[ComponentClass] {
        &self.classes
    }

    /// Sorted 0-based indices of the zero rows.
    pub fn zero_set(&self) -> &[usize] {
        &self.zero_set
    }

    /// Number of non-equivalent non-zero components.
    pub fn d(&self) -> usize {
        self.classes.len()
    }

    pub fn is_zero_coordinate(&self, i: usize) -> bool {
        self.zero_set.binary_search(&i).is_ok()
    }

    /// Class index and proportionality constant of row `i`, `None` for zero rows.
    pub fn class_of(&self, i: usize) -> Option<(usize, &Rational)> {
        self.classes.iter().enumerate().find_map(|(idx, class)| {
            class
                .members
                .iter()
                .find(|(row, _)| *row == i)
                .map(|(_, c)| (idx, c))
        })
    }

    /// The partition as sorted member lists, for comparisons that ignore the constants.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .map(|c| {
                let mut rows: Vec<usize> = c.members.iter().map(|(r, _)| *r).collect();
                rows.sort_unstable();
                rows
            })
            .collect()
    }
}

/// `Some(c)` when `row = c · base` with `c ≠ 0`.
fn proportionality(row: &[Rational], base: &[Rational]) -> Option<Rational> {
    let pivot = base.iter().position(|v| !v.is_zero())?;
    let c = &row[pivot] / &base[pivot];
    if c.is_zero() {
        return None;
    }
    row.iter()
        .zip(base)
        .all(|(r, b)| *r == &c * b)
        .then_some(c)
}

pub fn build_profile(basis: &SubspaceBasis) -> ComponentProfile {
    let a = basis.matrix();
    let mut classes: Vec<ComponentClass> = Vec::new();
    let mut zero_set = Vec::new();
    for i in 0..a.rows() {
        let row = a.row(i);
        if row.iter().all(Zero::is_zero) {
            zero_set.push(i);
            continue;
        }
        let found = classes.iter_mut().find_map(|class| {
            proportionality(row, a.row(class.representative)).map(|c| (class, c))
        });
        match found {
            Some((class, c)) => class.members.push((i, c)),
            None => classes.push(ComponentClass {
                representative: i,
                members: vec![(i, Rational::one())],
            }),
        }
    }
    ComponentProfile {
        n: a.rows(),
        classes,
        zero_set,
    }
}

/// The basis restricted to the coordinates outside the zero set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedInstance {
    kept_indices: Vec<usize>,
    reduced_basis: SubspaceBasis,
    zero_set: Vec<usize>,
    n: usize,
}

impl ReducedInstance {
    /// Original 0-based indices of the surviving coordinates, in order.
    pub fn kept_indices(&self) -> &[usize] {
        &self.kept_indices
    }

    pub fn basis(&self) -> &SubspaceBasis {
        &self.reduced_basis
    }

    pub fn zero_set(&self) -> &[usize] {
        &self.zero_set
    }

    pub fn original_n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.kept_indices.len()
    }

    /// Drops the zero-set coordinates of an ambient vector.
    pub fn sigma(&self, v: &Vector) -> Vector {
        assert_eq!(v.len(), self.n, "sigma: vector length mismatch");
        self.kept_indices.iter().map(|&i| v[i].clone()).collect()
    }

    /// Re-embeds a reduced vector with zeros on the zero set.
    pub fn lift(&self, reduced: &Vector) -> Vector {
        assert_eq!(reduced.len(), self.k(), "lift: vector length mismatch");
        let mut out = Vector::zeros(self.n).into_entries();
        for (&i, v) in self.kept_indices.iter().zip(reduced.iter()) {
            out[i] = v.clone();
        }
        Vector::new(out)
    }

    /// `Σ_{i∈Z} |vᵢ|`, the mass a vector carries on the zero set.
    pub fn zero_set_mass(&self, v: &Vector) -> Rational {
        self.zero_set
            .iter()
            .fold(Rational::zero(), |acc, &i| acc + num::Signed::abs(&v[i]))
    }
}

pub fn reduce_sigma(basis: &SubspaceBasis, profile: &ComponentProfile) -> Result<ReducedInstance> {
    let n = basis.n();
    if profile.zero_set().len() == n {
        return Err(Error::ZeroSubspace);
    }
    let kept_indices: Vec<usize> = (0..n).filter(|&i| !profile.is_zero_coordinate(i)).collect();
    let reduced = basis.matrix().select_rows(&kept_indices);
    // Dropping zero rows keeps the column rank.
    let reduced_basis = validate_basis(reduced)?;
    Ok(ReducedInstance {
        kept_indices,
        reduced_basis,
        zero_set: profile.zero_set().to_vec(),
        n,
    })
}

/// Zeroes the zero-set coordinates.
pub fn apply_rho(v: &Vector, profile: &ComponentProfile) -> Vector {
    assert_eq!(v.len(), profile.n(), "rho: vector length mismatch");
    v.iter()
        .enumerate()
        .map(|(i, x)| {
            if profile.is_zero_coordinate(i) {
                Rational::zero()
            } else {
                x.clone()
            }
        })
        .collect()
}

/// Drops the zero-set coordinates.
pub fn apply_sigma(v: &Vector, profile: &ComponentProfile) -> Vector {
    assert_eq!(v.len(), profile.n(), "sigma: vector length mismatch");
    v.iter()
        .enumerate()
        .filter(|(i, _)| !profile.is_zero_coordinate(*i))
        .map(|(_, x)| x.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn basis(columns: &[&[i64]]) -> SubspaceBasis {
        let cols: Vec<Vector> = columns.iter().map(|c| Vector::from_ints(c)).collect();
        SubspaceBasis::from_columns(&cols).unwrap()
    }

    fn worked_l1_6() -> SubspaceBasis {
        basis(&[&[4, 2, 1, -1, -4, 4], &[-1, 3, 5, 2, 1, 6], &[1, 4, 2, 1, -1, 8]])
    }

    #[test]
    fn validate_examples() {
        let b = worked_l1_6();
        assert_eq!((b.n(), b.m()), (6, 3));

        let dup = Vector::from_ints(&[1, 2, 3]);
        let err = SubspaceBasis::from_columns(&[dup.clone(), dup]).unwrap_err();
        assert_eq!(err, Error::RankDeficient { rank: 1, columns: 2 });

        let single = basis(&[&[0, 1, 0]]);
        assert_eq!((single.n(), single.m()), (3, 1));
    }

    #[test]
    fn validate_dimension_errors() {
        let cols = vec![Vector::from_ints(&[1]), Vector::from_ints(&[2])];
        assert!(matches!(SubspaceBasis::from_columns(&cols), Err(Error::Dimension(_))));
        assert!(matches!(SubspaceBasis::from_columns(&[]), Err(Error::Dimension(_))));
        let ragged = vec![Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1, 0])];
        assert!(matches!(SubspaceBasis::from_columns(&ragged), Err(Error::Dimension(_))));
        let zero = vec![Vector::from_ints(&[0, 0])];
        assert!(matches!(
            SubspaceBasis::from_columns(&zero),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn profile_of_worked_basis() {
        let p = build_profile(&worked_l1_6());
        assert!(p.zero_set().is_empty());
        assert_eq!(p.d(), 4);
        assert_eq!(p.partition(), vec![vec![0, 4], vec![1, 5], vec![2], vec![3]]);
        assert_eq!(p.class_of(4), Some((0, &int(-1))));
        assert_eq!(p.class_of(5), Some((1, &int(2))));
        assert_eq!(p.class_of(0), Some((0, &int(1))));
    }

    #[test]
    fn profile_zero_sets() {
        let y1 = basis(&[&[1, 1, 2, 0, 4, -2, 0], &[1, 2, 2, 0, 4, -4, 0]]);
        assert_eq!(build_profile(&y1).zero_set(), &[3, 6]);

        let p = build_profile(&basis(&[&[1, 0, 1]]));
        assert_eq!(p.zero_set(), &[1]);
        assert_eq!(p.d(), 1);
        assert_eq!(p.partition(), vec![vec![0, 2]]);
    }

    #[test]
    fn sigma_reduction_examples() {
        let y1 = basis(&[&[1, 1, 2, 0, 4, -2, 0], &[1, 2, 2, 0, 4, -4, 0]]);
        let red = reduce_sigma(&y1, &build_profile(&y1)).unwrap();
        assert_eq!(red.basis(), &basis(&[&[1, 1, 2, 4, -2], &[1, 2, 2, 4, -4]]));
        assert_eq!(red.kept_indices(), &[0, 1, 2, 4, 5]);
        assert!(build_profile(red.basis()).zero_set().is_empty());

        let full = worked_l1_6();
        let red = reduce_sigma(&full, &build_profile(&full)).unwrap();
        assert_eq!(red.basis(), &full);
        assert_eq!(red.k(), 6);

        let one = basis(&[&[0, 5, 0]]);
        let red = reduce_sigma(&one, &build_profile(&one)).unwrap();
        assert_eq!(red.basis(), &basis(&[&[5]]));
        assert_eq!(red.lift(&Vector::from_ints(&[7])), Vector::from_ints(&[0, 7, 0]));
    }

    #[test]
    fn rho_examples() {
        let y1 = basis(&[&[1, 1, 2, 0, 4, -2, 0], &[1, 2, 2, 0, 4, -4, 0]]);
        let p = build_profile(&y1);
        let v = Vector::from_ints(&[5, 4, 0, 9, 1, 5, 8]);
        assert_eq!(apply_rho(&v, &p), Vector::from_ints(&[5, 4, 0, 0, 1, 5, 0]));
        assert_eq!(apply_rho(&Vector::zeros(7), &p), Vector::zeros(7));
        assert_eq!(apply_sigma(&v, &p), Vector::from_ints(&[5, 4, 0, 1, 5]));

        let full = build_profile(&worked_l1_6());
        let w = Vector::from_ints(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(apply_rho(&w, &full), w);
    }
}
