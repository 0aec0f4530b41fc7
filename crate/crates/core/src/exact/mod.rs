//! Exact rational arithmetic: vectors, matrices, linear solving and the two
//! small optimization kernels everything else is built on.

mod kernels;
mod linalg;
pub(crate) mod lp;
mod rational;

pub use kernels::{minimize_1d_l1, solve_minimax_lp, LineMinimum, MinimaxSolution, Minimizers, MAX_MINIMAX_ROWS};
pub use linalg::{solve_linear, LinearSystemResult, Matrix, SystemStatus, Vector};
pub use rational::{format_rational, frac, int, parse_rational, sign_of, ParseRationalError, Rational};
