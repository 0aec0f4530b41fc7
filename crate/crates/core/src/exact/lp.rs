//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Only used internally by the min-max kernel, the sign-cell test and the
//! polytope-dimension checks. Problems are desk sized (tens of rows).

use num::{Signed, Zero};

use super::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, point: Vec<Rational> },
}

/// `maximize objective · x` subject to `row · x <= bound` for every row.
/// Variables are non-negative unless marked free.
#[derive(Clone, Debug)]
pub(crate) struct LinearProgram {
    free: Vec<bool>,
    objective: Vec<Rational>,
    rows: Vec<(Vec<Rational>, Rational)>,
}

impl LinearProgram {
    pub(crate) fn new(num_vars: usize) -> Self {
        LinearProgram {
            free: vec![false; num_vars],
            objective: vec![Rational::zero(); num_vars],
            rows: Vec::new(),
        }
    }

    pub(crate) fn set_free(&mut self, var: usize) {
        self.free[var] = true;
    }

    pub(crate) fn set_objective(&mut self, objective: Vec<Rational>) {
        assert_eq!(objective.len(), self.free.len());
        self.objective = objective;
    }

    pub(crate) fn add_le(&mut self, coeffs: Vec<Rational>, bound: Rational) {
        assert_eq!(coeffs.len(), self.free.len());
        self.rows.push((coeffs, bound));
    }

    pub(crate) fn solve(&self) -> LpOutcome {
        // Split each free variable into a difference of two non-negative ones.
        let mut columns: Vec<(usize, bool)> = Vec::new();
        for (var, &is_free) in self.free.iter().enumerate() {
            columns.push((var, false));
            if is_free {
                columns.push((var, true));
            }
        }
        let expand = |coeffs: &[Rational]| -> Vec<Rational> {
            columns
                .iter()
                .map(|&(var, negated)| {
                    if negated {
                        -coeffs[var].clone()
                    } else {
                        coeffs[var].clone()
                    }
                })
                .collect()
        };
        let rows: Vec<(Vec<Rational>, Rational)> = self
            .rows
            .iter()
            .map(|(c, b)| (expand(c), b.clone()))
            .collect();
        let objective = expand(&self.objective);
        match Tableau::optimize(&rows, &objective) {
            LpOutcome::Optimal { value, point } => {
                let mut x = vec![Rational::zero(); self.free.len()];
                for (&(var, negated), v) in columns.iter().zip(point) {
                    if negated {
                        x[var] -= v;
                    } else {
                        x[var] += v;
                    }
                }
                LpOutcome::Optimal { value, point: x }
            }
            other => other,
        }
    }
}

struct Tableau {
    // Row i reads: sum_j body[i][j] x_j = rhs[i], with basis[i] the basic column.
    body: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    forbidden: Option<usize>,
}

impl Tableau {
    fn optimize(rows: &[(Vec<Rational>, Rational)], objective: &[Rational]) -> LpOutcome {
        let n = objective.len();
        let m = rows.len();
        let needs_phase_one = rows.iter().any(|(_, b)| b.is_negative());
        let width = n + m + usize::from(needs_phase_one);
        let artificial = n + m;
        let mut body = Vec::with_capacity(m);
        for (i, (coeffs, _)) in rows.iter().enumerate() {
            let mut row = vec![Rational::zero(); width];
            row[..n].clone_from_slice(coeffs);
            row[n + i] = int(1);
            if needs_phase_one {
                row[artificial] = int(-1);
            }
            body.push(row);
        }
        let mut tab = Tableau {
            body,
            rhs: rows.iter().map(|(_, b)| b.clone()).collect(),
            basis: (n..n + m).collect(),
            forbidden: None,
        };

        if needs_phase_one {
            let mut worst = 0;
            for i in 1..m {
                if tab.rhs[i] < tab.rhs[worst] {
                    worst = i;
                }
            }
            tab.pivot(worst, artificial);
            let mut phase_one = vec![Rational::zero(); width];
            phase_one[artificial] = int(-1);
            match tab.run(&phase_one) {
                Some(value) if value.is_zero() => {}
                Some(_) => return LpOutcome::Infeasible,
                None => unreachable!("phase one objective is bounded by zero"),
            }
            if let Some(row) = tab.basis.iter().position(|&b| b == artificial) {
                if let Some(col) = (0..width)
                    .filter(|&c| c != artificial)
                    .find(|&c| !tab.body[row][c].is_zero())
                {
                    tab.pivot(row, col);
                }
            }
            tab.forbidden = Some(artificial);
        }

        let mut costs = vec![Rational::zero(); width];
        costs[..n].clone_from_slice(objective);
        match tab.run(&costs) {
            None => LpOutcome::Unbounded,
            Some(value) => {
                let mut point = vec![Rational::zero(); n];
                for (i, &b) in tab.basis.iter().enumerate() {
                    if b < n {
                        point[b] = tab.rhs[i].clone();
                    }
                }
                LpOutcome::Optimal { value, point }
            }
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.body[row][col].recip();
        for v in self.body[row].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        self.rhs[row] *= &inv;
        let pivot_row = self.body[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for r in 0..self.body.len() {
            if r == row || self.body[r][col].is_zero() {
                continue;
            }
            let factor = self.body[r][col].clone();
            for (v, p) in self.body[r].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            self.rhs[r] -= &factor * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    /// Runs primal simplex from the current feasible basis. Returns the optimal
    /// objective value or `None` when unbounded.
    fn run(&mut self, costs: &[Rational]) -> Option<Rational> {
        let width = costs.len();
        loop {
            let dual: Vec<&Rational> = self.basis.iter().map(|&b| &costs[b]).collect();
            let entering = (0..width).find(|&j| {
                if Some(j) == self.forbidden || self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = costs[j].clone();
                for (i, c) in dual.iter().enumerate() {
                    if !c.is_zero() && !self.body[i][j].is_zero() {
                        reduced -= *c * &self.body[i][j];
                    }
                }
                reduced.is_positive()
            });
            let Some(col) = entering else {
                let value = self
                    .basis
                    .iter()
                    .zip(&self.rhs)
                    .fold(Rational::zero(), |acc, (&b, r)| acc + &costs[b] * r);
                return Some(value);
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.body.len() {
                let a = &self.body[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let (row, _) = leave?;
            self.pivot(row, col);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn textbook_maximum() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18  -> (2, 6), value 36
        let mut lp = LinearProgram::new(2);
        lp.set_objective(ints(&[3, 5]));
        lp.add_le(ints(&[1, 0]), int(4));
        lp.add_le(ints(&[0, 2]), int(12));
        lp.add_le(ints(&[3, 2]), int(18));
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                value: int(36),
                point: ints(&[2, 6])
            }
        );
    }

    #[test]
    fn needs_phase_one() {
        // max -x - y, x + y >= 1 (as -x - y <= -1), x - y <= 1/2
        let mut lp = LinearProgram::new(2);
        lp.set_objective(ints(&[-1, -1]));
        lp.add_le(ints(&[-1, -1]), int(-1));
        lp.add_le(ints(&[1, -1]), frac(1, 2));
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(-1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.add_le(ints(&[1]), int(-1));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);

        let mut lp = LinearProgram::new(1);
        lp.set_free(0);
        lp.set_objective(ints(&[1]));
        lp.add_le(ints(&[-1]), int(3));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn free_variables_go_negative() {
        // max -x subject to x >= -5/2  -> x = -5/2
        let mut lp = LinearProgram::new(1);
        lp.set_free(0);
        lp.set_objective(ints(&[-1]));
        lp.add_le(ints(&[-1]), frac(5, 2));
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                value: frac(5, 2),
                point: vec![frac(-5, 2)]
            }
        );
    }

    #[test]
    fn degenerate_problem_terminates() {
        // Beale's example: cycles under the largest-coefficient rule.
        let mut lp = LinearProgram::new(4);
        lp.set_objective(ints(&[10, -57, -9, -24]));
        lp.add_le(vec![frac(1, 2), frac(-11, 2), frac(-5, 2), int(9)], int(0));
        lp.add_le(vec![frac(1, 2), frac(-3, 2), frac(-1, 2), int(1)], int(0));
        lp.add_le(ints(&[1, 0, 0, 0]), int(1));
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(1)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
