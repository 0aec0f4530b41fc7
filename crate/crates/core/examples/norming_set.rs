//! Sign cells of the coefficient-space arrangement and the minimal norming set.
//!
//!     cargo run --example norming_set

use coapprox::{SubspaceAnalysis, SubspaceBasis, Vector};

fn main() -> coapprox::Result<()> {
    let basis = SubspaceBasis::from_columns(&[
        Vector::from_ints(&[4, 2, 1, -1, -4, 4]),
        Vector::from_ints(&[-1, 3, 5, 2, 1, 6]),
        Vector::from_ints(&[1, 4, 2, 1, -1, 8]),
    ])?;
    let analysis = SubspaceAnalysis::new(basis)?;

    println!("component partition (0-based): {:?}", analysis.profile().partition());
    for (t, normal) in analysis.arrangement().normals().iter().enumerate() {
        println!("hyperplane {t}: {normal} · β = 0");
    }

    let norming = analysis.norming();
    println!("{} antipodal pairs, q = dim span N = {}", norming.len(), norming.span_dim());
    for (i, (x, cell)) in norming.representatives().iter().zip(norming.cells()).enumerate() {
        let signs: String = cell.signs.iter().map(|s| s.to_string()).collect();
        let mark = if norming.spanning_basis().contains(&i) { "*" } else { " " };
        println!("{mark} ±{x}  cell {signs}  witness β = {}", cell.witness);
    }
    println!("(* = member of the spanning basis used for the linear system)");
    Ok(())
}
