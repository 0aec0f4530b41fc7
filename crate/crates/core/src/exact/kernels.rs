use num::{Signed, Zero};

use super::linalg::{Matrix, Vector};
use super::lp::{LinearProgram, LpOutcome};
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Row limit of the min-max kernel.
pub const MAX_MINIMAX_ROWS: usize = 64;

/// Minimizer set of `λ ↦ ‖y + λz‖₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Minimizers {
    /// `z = θ`: the map is constant.
    AllReals,
    /// Closed interval `[lo, hi]` (a single point when `lo == hi`).
    Interval { lo: Rational, hi: Rational },
}

impl Minimizers {
    pub fn contains(&self, lambda: &Rational) -> bool {
        match self {
            Minimizers::AllReals => true,
            Minimizers::Interval { lo, hi } => lo <= lambda && lambda <= hi,
        }
    }

    /// Left endpoint, or 0 for the whole line.
    pub fn representative(&self) -> Rational {
        match self {
            Minimizers::AllReals => Rational::zero(),
            Minimizers::Interval { lo, .. } => lo.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineMinimum {
    pub min_value: Rational,
    pub minimizers: Minimizers,
}

/// Exact minimum of the convex piecewise-linear map `λ ↦ ‖y + λz‖₁`.
///
/// The breakpoints are `-yᵢ/zᵢ` with weights `|zᵢ|`; the minimizers are the
/// weighted medians. The slope starts at `-Σ|zᵢ|` and grows by `2|zᵢ|` when
/// crossing each breakpoint.
pub fn minimize_1d_l1(y: &Vector, z: &Vector) -> LineMinimum {
    assert_eq!(y.len(), z.len(), "minimize_1d_l1: length mismatch");
    let mut breaks: Vec<(Rational, Rational)> = y
        .iter()
        .zip(z.iter())
        .filter(|(_, zi)| !zi.is_zero())
        .map(|(yi, zi)| (-(yi / zi), zi.abs()))
        .collect();
    if breaks.is_empty() {
        return LineMinimum {
            min_value: y.l1_norm(),
            minimizers: Minimizers::AllReals,
        };
    }
    breaks.sort();
    // Merge coincident breakpoints.
    let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(breaks.len());
    for (point, weight) in breaks {
        match merged.last_mut() {
            Some((last, w)) if *last == point => *w += weight,
            _ => merged.push((point, weight)),
        }
    }
    let total: Rational = merged.iter().fold(Rational::zero(), |acc, (_, w)| acc + w);
    let mut slope = -total;
    let mut interval = None;
    for (k, (point, weight)) in merged.iter().enumerate() {
        slope += int(2) * weight;
        if slope.is_zero() {
            interval = Some((point.clone(), merged[k + 1].0.clone()));
            break;
        }
        if slope.is_positive() {
            interval = Some((point.clone(), point.clone()));
            break;
        }
    }
    let (lo, hi) = interval.expect("slope ends at +Σ|zᵢ| > 0");
    let min_value = y.add(&z.scale(&lo)).l1_norm();
    LineMinimum {
        min_value,
        minimizers: Minimizers::Interval { lo, hi },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimaxSolution {
    /// `min_α max_p |rhs_p − rows_p·α|`.
    pub t_star: Rational,
    pub alpha_star: Vector,
}

/// Exact optimum of `min_α max_p |rhs_p − rows_p·α|`, solved as the linear
/// program `min t` subject to `−t ≤ rhs_p − rows_p·α ≤ t`.
pub fn solve_minimax_lp(rows: &Matrix, rhs: &Vector) -> Result<MinimaxSolution> {
    let (q, m) = (rows.rows(), rows.cols());
    if q == 0 || m == 0 {
        return Err(Error::Dimension(format!(
            "min-max problem needs at least one row and one column, got {q}x{m}"
        )));
    }
    if rhs.len() != q {
        return Err(Error::Dimension(format!(
            "min-max right-hand side has length {}, expected {q}",
            rhs.len()
        )));
    }
    if q > MAX_MINIMAX_ROWS {
        return Err(Error::CapacityExceeded {
            what: "min-max rows",
            got: q,
            limit: MAX_MINIMAX_ROWS,
        });
    }
    // Variables: α₁..α_m (free), t (index m, non-negative).
    let mut lp = LinearProgram::new(m + 1);
    for j in 0..m {
        lp.set_free(j);
    }
    let mut objective = vec![Rational::zero(); m + 1];
    objective[m] = int(-1);
    lp.set_objective(objective);
    for p in 0..q {
        let mut upper: Vec<Rational> = rows.row(p).to_vec();
        upper.push(int(-1));
        lp.add_le(upper, rhs[p].clone());
        let mut lower: Vec<Rational> = rows.row(p).iter().map(|v| -v).collect();
        lower.push(int(-1));
        lp.add_le(lower, -rhs[p].clone());
    }
    match lp.solve() {
        LpOutcome::Optimal { value, mut point } => {
            point.truncate(m);
            Ok(MinimaxSolution {
                t_star: -value,
                alpha_star: Vector::new(point),
            })
        }
        other => Err(Error::InternalInconsistency(format!(
            "min-max program is always feasible and bounded, solver reported {other:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    fn interval(lo: i64, hi: i64) -> Minimizers {
        Minimizers::Interval {
            lo: int(lo),
            hi: int(hi),
        }
    }

    #[test]
    fn line_minimum_examples() {
        let y = Vector::from_ints(&[1, -2]);
        let flat = minimize_1d_l1(&y, &Vector::from_ints(&[0, 0]));
        assert_eq!(flat.min_value, int(3));
        assert_eq!(flat.minimizers, Minimizers::AllReals);

        let r = minimize_1d_l1(&y, &Vector::from_ints(&[1, 1]));
        assert_eq!(r.min_value, int(3));
        assert_eq!(r.minimizers, interval(-1, 2));

        let r = minimize_1d_l1(&Vector::from_ints(&[1, 1]), &Vector::from_ints(&[1, -1]));
        assert_eq!(r.min_value, int(2));
        assert_eq!(r.minimizers, interval(-1, 1));
    }

    #[test]
    fn line_minimum_single_point_and_merged_breaks() {
        // |1 + λ| + |2 + 2λ| + |λ|: breaks -1 (weight 3) and 0 (weight 1).
        let r = minimize_1d_l1(&Vector::from_ints(&[1, 2, 0]), &Vector::from_ints(&[1, 2, 1]));
        assert_eq!(r.minimizers, interval(-1, -1));
        assert_eq!(r.min_value, int(1));
        // |3 - 2λ| alone: minimizer 3/2.
        let r = minimize_1d_l1(&Vector::from_ints(&[3]), &Vector::from_ints(&[-2]));
        assert_eq!(
            r.minimizers,
            Minimizers::Interval {
                lo: frac(3, 2),
                hi: frac(3, 2)
            }
        );
        assert!(r.min_value.is_zero());
    }

    #[test]
    fn minimax_examples() {
        let s = solve_minimax_lp(&Matrix::identity(2), &Vector::from_ints(&[4, -6])).unwrap();
        assert_eq!(s.t_star, int(0));
        assert_eq!(s.alpha_star, Vector::from_ints(&[4, -6]));

        let s = solve_minimax_lp(&Matrix::from_int_rows(&[&[1], &[1]]), &Vector::from_ints(&[0, 2]))
            .unwrap();
        assert_eq!(s.t_star, int(1));
        assert_eq!(s.alpha_star, Vector::from_ints(&[1]));

        let s = solve_minimax_lp(&Matrix::from_int_rows(&[&[1], &[-1]]), &Vector::from_ints(&[1, 1]))
            .unwrap();
        assert_eq!(s.t_star, int(1));
        assert_eq!(s.alpha_star, Vector::from_ints(&[0]));
    }

    #[test]
    fn minimax_capacity_guard() {
        let rows = Matrix::from_rows(vec![vec![int(1)]; 65]);
        let err = solve_minimax_lp(&rows, &Vector::zeros(65)).unwrap_err();
        assert!(matches!(err, Error::CapacityExceeded { got: 65, .. }));
    }
}
