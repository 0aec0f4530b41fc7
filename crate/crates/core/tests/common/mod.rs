#![allow(dead_code)]

use coapprox::exact::{frac, int, solve_linear, SystemStatus};
use coapprox::{Matrix, Rational, SubspaceBasis, Vector};
use num::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn basis(columns: &[&[i64]]) -> SubspaceBasis {
    let cols: Vec<Vector> = columns.iter().map(|c| Vector::from_ints(c)).collect();
    SubspaceBasis::from_columns(&cols).unwrap()
}

pub fn worked_basis() -> SubspaceBasis {
    basis(&[&[4, 2, 1, -1, -4, 4], &[-1, 3, 5, 2, 1, 6], &[1, 4, 2, 1, -1, 8]])
}

pub fn ints(v: &[i64]) -> Vector {
    Vector::from_ints(v)
}

pub fn small_rational(rng: &mut ChaCha8Rng, range: i64) -> Rational {
    if rng.gen_bool(0.75) {
        int(rng.gen_range(-range..=range))
    } else {
        frac(rng.gen_range(-range..=range), rng.gen_range(1..=4))
    }
}

/// Random full-rank `n × m` integer basis with entries in `[-range, range]`.
/// Rows are sometimes copied (scaled) or zeroed so that equivalence classes and
/// zero sets show up.
pub fn random_basis(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    range: i64,
    zero_rows: usize,
) -> SubspaceBasis {
    loop {
        let mut rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..m).map(|_| rng.gen_range(-range..=range)).collect())
            .collect();
        if n > 1 && rng.gen_bool(0.3) {
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let c = *[-2i64, -1, 1, 2].choose(rng).unwrap();
            let copied: Vec<i64> = rows[j].iter().map(|v| (v * c).clamp(-range, range)).collect();
            rows[i] = copied;
        }
        let mut positions: Vec<usize> = (0..n).collect();
        positions.shuffle(rng);
        for &i in positions.iter().take(zero_rows) {
            rows[i] = vec![0; m];
        }
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let matrix = Matrix::from_int_rows(&refs);
        if let Ok(b) = SubspaceBasis::from_columns(&matrix.columns()) {
            return b;
        }
    }
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vector {
    (0..n).map(|_| small_rational(rng, range)).collect()
}

/// Random invertible `m × m` rational matrix.
pub fn random_invertible(rng: &mut ChaCha8Rng, m: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..m)
            .map(|_| (0..m).map(|_| small_rational(rng, 3)).collect())
            .collect();
        let c = Matrix::from_rows(rows);
        if !c.determinant().is_zero() {
            return c;
        }
    }
}

pub fn recombine(basis: &SubspaceBasis, c: &Matrix) -> SubspaceBasis {
    SubspaceBasis::from_columns(&basis.matrix().mul(c).columns()).unwrap()
}

/// `min_α max_p |rhs_p − rows_p·α|` by enumerating active sets: every choice of
/// `m + 1` rows and signs whose equality system `s_p (rhs_p − rows_p·α) = t` has a
/// unique solution, kept when feasible. Requires `rank(rows) = m`.
pub fn minimax_by_enumeration(rows: &Matrix, rhs: &Vector) -> (Rational, Vector) {
    let (q, m) = (rows.rows(), rows.cols());
    let objective = |alpha: &Vector| -> Rational {
        (0..q)
            .map(|p| (&rhs[p] - rows.row_vector(p).dot(alpha)).abs())
            .max()
            .unwrap()
    };
    if q <= m {
        let r = solve_linear(rows, rhs);
        assert_eq!(r.status, SystemStatus::UniqueSolution);
        let alpha = r.solution.unwrap();
        return (objective(&alpha), alpha);
    }
    let mut best: Option<(Rational, Vector)> = None;
    let mut subset: Vec<usize> = (0..=m).collect();
    loop {
        // Flipping every sign only negates t, so the first sign stays +.
        for signs in 0u32..(1 << m) {
            let signs = signs << 1;
            // Unknowns (α, t): s_p rows_p·α + t = s_p rhs_p.
            let mut sys = Vec::with_capacity(m + 1);
            let mut rhs_s = Vec::with_capacity(m + 1);
            for (k, &p) in subset.iter().enumerate() {
                let s = if signs >> k & 1 == 1 { int(-1) } else { int(1) };
                let mut row: Vec<Rational> = rows.row(p).iter().map(|v| v * &s).collect();
                row.push(int(1));
                sys.push(row);
                rhs_s.push(&rhs[p] * &s);
            }
            let r = solve_linear(&Matrix::from_rows(sys), &Vector::new(rhs_s));
            if r.status != SystemStatus::UniqueSolution {
                continue;
            }
            let mut sol = r.solution.unwrap().into_entries();
            let t = sol.pop().unwrap().abs();
            let alpha = Vector::new(sol);
            if objective(&alpha) != t {
                continue;
            }
            if best.as_ref().map_or(true, |(b, _)| t < *b) {
                best = Some((t, alpha));
            }
        }
        // Next (m+1)-subset of 0..q in lexicographic order.
        let mut i = m + 1;
        loop {
            if i == 0 {
                return best.expect("a vertex exists when rows have full column rank");
            }
            i -= 1;
            if subset[i] < q - (m + 1 - i) {
                subset[i] += 1;
                for j in i + 1..=m {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Sign patterns (canonical: `+` on the first hyperplane) met by integer grid
/// points of `[-radius, radius]ᵐ` lying off every hyperplane.
pub fn grid_sign_patterns(normals: &[Vector], radius: i64) -> std::collections::BTreeSet<Vec<bool>> {
    let m = normals[0].len();
    let int_normals: Vec<Vec<i64>> = normals
        .iter()
        .map(|n| {
            n.iter()
                .map(|v| {
                    assert!(v.is_integer());
                    i64::try_from(v.to_integer()).unwrap()
                })
                .collect()
        })
        .collect();
    let width = (2 * radius + 1) as usize;
    let mut out = std::collections::BTreeSet::new();
    let mut beta = vec![0i64; m];
    for code in 0..width.pow(m as u32) {
        let mut c = code;
        for b in beta.iter_mut() {
            *b = (c % width) as i64 - radius;
            c /= width;
        }
        let values: Vec<i64> = int_normals
            .iter()
            .map(|n| n.iter().zip(&beta).map(|(a, b)| a * b).sum())
            .collect();
        if values.iter().any(|&v| v == 0) {
            continue;
        }
        let flip = values[0] < 0;
        // true = Minus, matching Plus < Minus ordering.
        out.insert(values.iter().map(|&v| (v < 0) != flip).collect());
    }
    out
}
