//! A subspace with a zero coordinate is never co-Chebyshev: a target vanishing
//! off the zero set has a whole polytope of best coapproximations.
//!
//!     cargo run --example zero_set_polytope

use coapprox::{CoapproxOutcome, SubspaceAnalysis, SubspaceBasis, Vector};

fn main() -> coapprox::Result<()> {
    let basis = SubspaceBasis::from_columns(&[
        Vector::from_ints(&[1, 1, 2, 0, 4, -2, 0]),
        Vector::from_ints(&[1, 2, 2, 0, 4, -4, 0]),
    ])?;
    let analysis = SubspaceAnalysis::new(basis)?;
    let b = Vector::from_ints(&[0, 0, 0, 3, 0, 0, -1]);

    if let CoapproxOutcome::Polytope { constraints, witness, .. } = analysis.solve(&b)? {
        println!("witness α = {witness}");
        for c in &constraints {
            println!("  |{} · α − {}| ≤ {}", c.row, c.rhs, c.slack);
        }
        let outcome = analysis.solve(&b)?;
        for alpha in [[0, 0], [1, -1], [0, 1], [1, 0]] {
            let alpha = Vector::from_ints(&alpha);
            let inside = outcome.contains(&alpha);
            println!(
                "α = {alpha}: {} (‖Aα‖₁ = {}, ‖b‖₁ = {})",
                if inside { "best coapproximation" } else { "not one" },
                analysis.basis().combine(&alpha).l1_norm(),
                b.l1_norm()
            );
        }
    }
    Ok(())
}
