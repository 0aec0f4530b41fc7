//! Checking candidate answers from the definition alone.
//!
//!     cargo run --example oracle_check

use coapprox::exact::{frac, int};
use coapprox::oracle::{bj_orthogonal_l1, brute_force_existence, verify_best_coapprox};
use coapprox::{SubspaceBasis, Vector};

fn main() -> coapprox::Result<()> {
    println!(
        "(1,1) ⊥ (1,-1): {}",
        bj_orthogonal_l1(&Vector::from_ints(&[1, 1]), &Vector::from_ints(&[1, -1]))
    );

    let basis = SubspaceBasis::from_columns(&[
        Vector::from_ints(&[4, 2, 1, -1, -4, 4]),
        Vector::from_ints(&[-1, 3, 5, 2, 1, 6]),
        Vector::from_ints(&[1, 4, 2, 1, -1, 8]),
    ])?;
    let b2 = Vector::from_ints(&[5, 4, 0, 0, 1, 5]);

    let good = Vector::new(vec![frac(1, 7), frac(-3, 7), int(1)]);
    let verdict = verify_best_coapprox(&basis, &b2, &good, 200)?;
    println!("α = {good}: {:?} after {} directions", verdict.verdict, verdict.checked);

    let bad = Vector::zeros(3);
    let verdict = verify_best_coapprox(&basis, &b2, &bad, 200)?;
    if let Some(cx) = verdict.counterexample {
        println!(
            "α = {bad}: refuted by β = {}: ‖Aβ − Aα‖₁ = {} > {} = ‖Aβ − b‖₁",
            cx.beta, cx.candidate_distance, cx.target_distance
        );
    }

    let b1 = Vector::from_ints(&[1, 2, 3, 4, 5, 6]);
    let report = brute_force_existence(&basis, &b1, &int(5), &frac(1, 2))?;
    println!(
        "b1: {} of {} grid points pass the sweep",
        report.candidates.len(),
        report.grid_points
    );
    Ok(())
}
