//! Best coapproximations to two targets out of a three-dimensional subspace of ℓ₁⁶.
//!
//!     cargo run --example solve_worked_example

use coapprox::solver::assemble_system;
use coapprox::{CoapproxOutcome, SubspaceAnalysis, SubspaceBasis, Vector};

fn main() -> coapprox::Result<()> {
    let basis = SubspaceBasis::from_columns(&[
        Vector::from_ints(&[4, 2, 1, -1, -4, 4]),
        Vector::from_ints(&[-1, 3, 5, 2, 1, 6]),
        Vector::from_ints(&[1, 4, 2, 1, -1, 8]),
    ])?;
    let analysis = SubspaceAnalysis::new(basis)?;

    for b in [
        Vector::from_ints(&[1, 2, 3, 4, 5, 6]),
        Vector::from_ints(&[5, 4, 0, 0, 1, 5]),
    ] {
        let (rows, rhs) = assemble_system(analysis.basis(), analysis.norming(), &b);
        println!("target {b}");
        for p in 0..rows.rows() {
            println!("  {} · α = {}", rows.row_vector(p), rhs[p]);
        }
        match analysis.solve(&b)? {
            CoapproxOutcome::NotExists => println!("  no best coapproximation"),
            CoapproxOutcome::Unique { coefficients, vector } => {
                println!("  unique: α = {coefficients}, y₀ = {vector}")
            }
            CoapproxOutcome::Polytope { witness, .. } => println!("  many, e.g. α = {witness}"),
        }
    }
    Ok(())
}
