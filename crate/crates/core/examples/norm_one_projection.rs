//! The norm-one projection from span{b, Y} onto Y induced by a best coapproximation.
//!
//!     cargo run --example norm_one_projection

use coapprox::exact::int;
use coapprox::solver::projection_map;
use coapprox::{SubspaceAnalysis, SubspaceBasis, Vector};

fn main() -> coapprox::Result<()> {
    let basis = SubspaceBasis::from_columns(&[
        Vector::from_ints(&[4, 2, 1, -1, -4, 4]),
        Vector::from_ints(&[-1, 3, 5, 2, 1, 6]),
        Vector::from_ints(&[1, 4, 2, 1, -1, 8]),
    ])?;
    let analysis = SubspaceAnalysis::new(basis)?;
    let b2 = Vector::from_ints(&[5, 4, 0, 0, 1, 5]);
    let outcome = analysis.solve(&b2)?;
    let p = projection_map(analysis.basis(), &b2, &outcome)?;
    println!("P(b2) = {}", p.image_of_target());

    for (beta, gamma) in [([1, 0, 0], 0), ([1, -1, 2], 3), ([0, 2, -1], -2)] {
        let beta = Vector::from_ints(&beta);
        let gamma = int(gamma);
        let x = p.domain_point(&beta, &gamma);
        let px = p.apply(&beta, &gamma);
        println!(
            "x = {x}: ‖P x‖₁ = {} ≤ {} = ‖x‖₁",
            px.l1_norm(),
            x.l1_norm()
        );
    }
    Ok(())
}
