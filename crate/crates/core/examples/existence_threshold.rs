//! With a zero coordinate, existence depends on how much mass the target puts
//! there: below δ₀ nothing, from δ₀ on a best coapproximation exists.
//!
//!     cargo run --example existence_threshold

use coapprox::exact::{format_rational, frac};
use coapprox::{Rational, SubspaceAnalysis, SubspaceBasis, Vector};

fn main() -> coapprox::Result<()> {
    let basis = SubspaceBasis::from_columns(&[
        Vector::from_ints(&[4, 2, 1, -1, -4, 4, 0]),
        Vector::from_ints(&[-1, 3, 5, 2, 1, 6, 0]),
        Vector::from_ints(&[1, 4, 2, 1, -1, 8, 0]),
    ])?;
    let analysis = SubspaceAnalysis::new(basis)?;
    let b = Vector::from_ints(&[1, 2, 3, 4, 5, 6, 0]);

    let threshold = analysis.existence_threshold(&b)?;
    println!(
        "δ₀ = {} at α = {}, bound ‖ρ(b)‖₁ = {}",
        format_rational(&threshold.delta0),
        threshold.minimizing_alpha,
        format_rational(&threshold.rho_norm)
    );

    let offsets = [frac(-1, 100), frac(0, 1), frac(1, 100)];
    for offset in offsets {
        let mass: Rational = &threshold.delta0 + offset;
        let mut y = b.clone().into_entries();
        y[6] = mass.clone();
        let outcome = analysis.solve(&Vector::new(y))?;
        println!("zero-coordinate mass {}: {:?}", format_rational(&mass), outcome.kind());
    }
    Ok(())
}
