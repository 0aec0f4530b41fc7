//! Coproximinal and co-Chebyshev tests, with and without zero coordinates.
//!
//!     cargo run --example classify_subspaces

use coapprox::{classify, SubspaceBasis, Vector};

fn main() -> coapprox::Result<()> {
    let cases: [(&str, &[&[i64]]); 4] = [
        ("Y1 in l1^7", &[&[1, 1, 2, 0, 4, -2, 0], &[1, 2, 2, 0, 4, -4, 0]]),
        ("Y2 in l1^7", &[&[1, 0, 2, 3, -1, -2, 0], &[-1, 0, 1, 0, 1, -1, 0]]),
        ("Y3 in l1^5", &[&[1, 1, 2, 4, -2], &[1, 2, 2, 4, -4]]),
        (
            "worked example in l1^6",
            &[&[4, 2, 1, -1, -4, 4], &[-1, 3, 5, 2, 1, 6], &[1, 4, 2, 1, -1, 8]],
        ),
    ];
    for (name, columns) in cases {
        let cols: Vec<Vector> = columns.iter().map(|c| Vector::from_ints(c)).collect();
        let report = classify(&SubspaceBasis::from_columns(&cols)?)?;
        println!(
            "{name}: coproximinal={} co-Chebyshev={} (m={}, q={}, d={}, |Z|={}) {:?}",
            report.coproximinal,
            report.co_chebyshev,
            report.m,
            report.q,
            report.d,
            report.zero_set_size,
            report.rationale
        );
    }
    Ok(())
}
