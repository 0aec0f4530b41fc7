use std::fmt;
use std::ops::Index;

use num::{Signed, Zero};

use super::rational::{format_rational, int, Rational};

/// Dense vector of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&v| int(v)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        Vector(vec![Rational::zero(); len])
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = int(1);
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    /// Sum of absolute values.
    pub fn l1_norm(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, v| acc + v.abs())
    }

    /// Largest absolute value (0 for the empty vector).
    pub fn linf_norm(&self) -> Rational {
        self.0
            .iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        dot(&self.0, &other.0)
    }

    pub fn scale(&self, factor: &Rational) -> Vector {
        Vector(self.0.iter().map(|v| v * factor).collect())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|v| -v).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl Index<usize> for Vector {
    type Output = Rational;

    fn index(&self, index: usize) -> &Rational {
        &self.0[index]
    }
}

impl From<Vec<Rational>> for Vector {
    fn from(entries: Vec<Rational>) -> Self {
        Vector(entries)
    }
}

impl FromIterator<Rational> for Vector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, int(1));
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    /// Builds the matrix whose k-th column is `columns[k]`.
    pub fn from_columns(columns: &[Vector]) -> Self {
        let rows = columns.first().map_or(0, Vector::len);
        assert!(columns.iter().all(|c| c.len() == rows), "ragged columns");
        let mut m = Self::zeros(rows, columns.len());
        for (j, column) in columns.iter().enumerate() {
            for (i, value) in column.iter().enumerate() {
                m.set(i, j, value.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.data[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_vector(&self, row: usize) -> Vector {
        Vector(self.row(row).to_vec())
    }

    pub fn column(&self, col: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, col).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v.entries())).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, indices: &[usize]) -> Matrix {
        Matrix::from_rows(indices.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.row_reduce(None).len()
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut a = self.clone();
        let n = self.rows;
        let mut det = int(1);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a.get(col, col).clone();
            det *= &p;
            for r in col + 1..n {
                let factor = a.get(r, col) / &p;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a.get(r, c) - &factor * a.get(col, c);
                    a.set(r, c, v);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns. When `rhs`
    /// is given it receives the same row operations.
    fn row_reduce(&mut self, mut rhs: Option<&mut Vec<Rational>>) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot, row);
            if let Some(b) = rhs.as_deref_mut() {
                b.swap(pivot, row);
            }
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            if let Some(b) = rhs.as_deref_mut() {
                b[row] = &b[row] * &inv;
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &factor * self.get(row, c);
                    self.set(r, c, v);
                }
                if let Some(b) = rhs.as_deref_mut() {
                    let v = &b[r] - &factor * &b[row];
                    b[r] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemStatus {
    NoSolution,
    UniqueSolution,
    AffineFamily,
}

/// Outcome of an exact linear solve. `solution` is a particular solution
/// (free variables set to zero) and `nullspace_basis` spans the homogeneous
/// solutions when the family is affine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystemResult {
    pub status: SystemStatus,
    pub solution: Option<Vector>,
    pub nullspace_basis: Vec<Vector>,
}

/// Exact Gauss-Jordan elimination over the rationals.
pub fn solve_linear(coeffs: &Matrix, rhs: &Vector) -> LinearSystemResult {
    assert_eq!(coeffs.rows(), rhs.len(), "right-hand side length mismatch");
    let mut a = coeffs.clone();
    let mut b = rhs.entries().to_vec();
    let pivots = a.row_reduce(Some(&mut b));
    let rank = pivots.len();
    if b[rank..].iter().any(|v| !v.is_zero()) {
        return LinearSystemResult {
            status: SystemStatus::NoSolution,
            solution: None,
            nullspace_basis: Vec::new(),
        };
    }
    let n = a.cols();
    let mut solution = Vector::zeros(n);
    for (row, &col) in pivots.iter().enumerate() {
        solution.0[col] = b[row].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let nullspace_basis: Vec<Vector> = free
        .iter()
        .map(|&f| {
            let mut v = Vector::zeros(n);
            v.0[f] = int(1);
            for (row, &col) in pivots.iter().enumerate() {
                v.0[col] = -a.get(row, f).clone();
            }
            v
        })
        .collect();
    let status = if nullspace_basis.is_empty() {
        SystemStatus::UniqueSolution
    } else {
        SystemStatus::AffineFamily
    };
    LinearSystemResult {
        status,
        solution: Some(solution),
        nullspace_basis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    fn worked_rows() -> Matrix {
        Matrix::from_int_rows(&[&[14, 14, 17], &[16, 10, 15], &[14, 0, 11], &[2, -18, -13]])
    }

    #[test]
    fn l1_norm_examples() {
        assert_eq!(Vector::from_ints(&[0, 0, 0]).l1_norm(), int(0));
        assert_eq!(Vector::from_ints(&[2, 3, 0, 0, -2, 6]).l1_norm(), int(13));
        assert_eq!(Vector::from_ints(&[1, -2]).l1_norm(), int(3));
    }

    #[test]
    fn worked_system_consistent_target() {
        let result = solve_linear(&worked_rows(), &Vector::from_ints(&[13, 13, 13, -5]));
        assert_eq!(result.status, SystemStatus::UniqueSolution);
        assert_eq!(
            result.solution.unwrap(),
            Vector::new(vec![frac(1, 7), frac(-3, 7), int(1)])
        );
        assert!(result.nullspace_basis.is_empty());
    }

    #[test]
    fn worked_system_inconsistent_target() {
        let result = solve_linear(&worked_rows(), &Vector::from_ints(&[11, 3, -3, -19]));
        assert_eq!(result.status, SystemStatus::NoSolution);
        assert!(result.solution.is_none());
    }

    #[test]
    fn identity_system() {
        let result = solve_linear(&Matrix::identity(2), &Vector::from_ints(&[5, 7]));
        assert_eq!(result.status, SystemStatus::UniqueSolution);
        assert_eq!(result.solution.unwrap(), Vector::from_ints(&[5, 7]));
    }

    #[test]
    fn underdetermined_system_reports_family() {
        let a = Matrix::from_int_rows(&[&[1, 1, 0]]);
        let result = solve_linear(&a, &Vector::from_ints(&[2]));
        assert_eq!(result.status, SystemStatus::AffineFamily);
        assert_eq!(result.nullspace_basis.len(), 2);
        for v in &result.nullspace_basis {
            assert!(a.mul_vec(v).is_zero());
        }
        assert_eq!(a.mul_vec(result.solution.as_ref().unwrap()), Vector::from_ints(&[2]));
    }

    #[test]
    fn rank_and_determinant() {
        assert_eq!(worked_rows().rank(), 3);
        let singular = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.rank(), 1);
        assert_eq!(singular.determinant(), int(0));
        let m = Matrix::from_int_rows(&[&[0, 2], &[3, 1]]);
        assert_eq!(m.determinant(), int(-6));
    }
}
