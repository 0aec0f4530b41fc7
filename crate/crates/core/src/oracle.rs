//! Independent checks from the definition: `y₀` is a best coapproximation to
//! `b̃` iff `Y ⊥_B (b̃ − y₀)`, tested through the `ℓ₁` Birkhoff–James criterion.
//! Nothing here touches the norming-set machinery.

use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, minimize_1d_l1, Minimizers, Rational, Vector};
use crate::subspace::SubspaceBasis;

pub const DEFAULT_SEED: u64 = 0x00c0_a001;

/// Largest grid `brute_force_existence` will scan.
pub const MAX_GRID_POINTS: usize = 1_000_000;

/// `y ⊥_B z` in `ℓ₁`: `|Σ_{yᵢ≠0} sgn(yᵢ) zᵢ| ≤ Σ_{yᵢ=0} |zᵢ|`.
pub fn bj_orthogonal_l1(y: &Vector, z: &Vector) -> bool {
    assert_eq!(y.len(), z.len(), "bj_orthogonal_l1: length mismatch");
    let mut signed = Rational::zero();
    let mut free = Rational::zero();
    for (yi, zi) in y.iter().zip(z.iter()) {
        if yi.is_positive() {
            signed += zi;
        } else if yi.is_negative() {
            signed -= zi;
        } else {
            free += zi.abs();
        }
    }
    signed.abs() <= free
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Confirmed,
    Refuted,
}

/// A `β` with `‖Aβ − Aα‖₁ > ‖Aβ − b̃‖₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub beta: Vector,
    /// `‖Aβ − Aα‖₁`
    pub candidate_distance: Rational,
    /// `‖Aβ − b̃‖₁`
    pub target_distance: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationVerdict {
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    pub seed: u64,
    /// Number of `β` directions tested before stopping.
    pub checked: usize,
}

impl VerificationVerdict {
    pub fn is_confirmed(&self) -> bool {
        self.verdict == Verdict::Confirmed
    }
}

/// Small integer directions of the deterministic sweep: `{−2..2}ᵐ` while that
/// has at most 5⁶ points, `{−1,0,1}ᵐ` up to 3¹⁰, then `±eⱼ` and `±eⱼ ± eₖ`.
/// For `m ≤ 3` the sweep adds [`cell_interior_points`], which makes it exhaustive.
pub fn sweep_directions(m: usize) -> Vec<Vector> {
    let range: Option<i64> = if m <= 6 {
        Some(2)
    } else if m <= 10 {
        Some(1)
    } else {
        None
    };
    let mut out = Vec::new();
    match range {
        Some(r) => {
            let width = (2 * r + 1) as usize;
            let total = width.pow(m as u32);
            for code in 0..total {
                let mut c = code;
                let mut beta = Vec::with_capacity(m);
                for _ in 0..m {
                    beta.push((c % width) as i64 - r);
                    c /= width;
                }
                if beta.iter().any(|&v| v != 0) {
                    out.push(Vector::from_ints(&beta));
                }
            }
        }
        None => {
            for j in 0..m {
                for sj in [1, -1] {
                    let mut beta = vec![0i64; m];
                    beta[j] = sj;
                    out.push(Vector::from_ints(&beta));
                    for k in j + 1..m {
                        for sk in [1, -1] {
                            beta[k] = sk;
                            out.push(Vector::from_ints(&beta));
                        }
                        beta[k] = 0;
                    }
                }
            }
        }
    }
    out
}

fn random_beta(rng: &mut ChaCha8Rng, m: usize) -> Vector {
    loop {
        let beta: Vector = (0..m)
            .map(|_| {
                let num: i64 = rng.gen_range(-20..=20);
                let den: i64 = rng.gen_range(1..=10);
                Rational::new(num.into(), den.into())
            })
            .collect();
        if !beta.is_zero() {
            return beta;
        }
    }
}

/// If `Aβ` is not orthogonal to the residual, turn the improving step into an
/// explicit violating point `β' = α − β/λ*`.
fn check_direction(
    basis: &SubspaceBasis,
    b: &Vector,
    image: &Vector,
    residual: &Vector,
    alpha: &Vector,
    beta: &Vector,
) -> Option<Counterexample> {
    let y = basis.combine(beta);
    if bj_orthogonal_l1(&y, residual) {
        return None;
    }
    let lambda = match minimize_1d_l1(&y, residual).minimizers {
        Minimizers::Interval { lo, hi } => {
            if lo.is_zero() {
                hi
            } else {
                lo
            }
        }
        Minimizers::AllReals => unreachable!("a zero residual is orthogonal to everything"),
    };
    let violating = alpha.sub(&beta.scale(&lambda.recip()));
    let point = basis.combine(&violating);
    let candidate_distance = point.sub(image).l1_norm();
    let target_distance = point.sub(b).l1_norm();
    debug_assert!(candidate_distance > target_distance);
    Some(Counterexample {
        beta: violating,
        candidate_distance,
        target_distance,
    })
}

fn check_lengths(basis: &SubspaceBasis, b: &Vector, alpha: &Vector) -> Result<()> {
    if b.len() != basis.n() || alpha.len() != basis.m() {
        return Err(Error::Dimension(format!(
            "expected target of length {} and coefficients of length {}, got {} and {}",
            basis.n(),
            basis.m(),
            b.len(),
            alpha.len()
        )));
    }
    Ok(())
}

/// Deterministic sweep plus `trials` random rational directions from the default seed.
pub fn verify_best_coapprox(
    basis: &SubspaceBasis,
    b: &Vector,
    alpha: &Vector,
    trials: usize,
) -> Result<VerificationVerdict> {
    verify_best_coapprox_seeded(basis, b, alpha, trials, DEFAULT_SEED)
}

pub fn verify_best_coapprox_seeded(
    basis: &SubspaceBasis,
    b: &Vector,
    alpha: &Vector,
    trials: usize,
    seed: u64,
) -> Result<VerificationVerdict> {
    check_lengths(basis, b, alpha)?;
    if trials == 0 {
        return Err(Error::InvalidInput("trials must be at least 1".into()));
    }
    let image = basis.combine(alpha);
    let residual = b.sub(&image);
    let mut checked = 0;
    let refuted = |cx, checked| VerificationVerdict {
        verdict: Verdict::Refuted,
        counterexample: Some(cx),
        seed,
        checked,
    };
    let sweep = Sweep::new(basis);
    for (beta, pattern) in &sweep.entries {
        checked += 1;
        if !orthogonal_to_patterns(std::slice::from_ref(pattern), &residual) {
            if let Some(cx) = check_direction(basis, b, &image, &residual, alpha, beta) {
                return Ok(refuted(cx, checked));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let beta = random_beta(&mut rng, basis.m());
        checked += 1;
        if let Some(cx) = check_direction(basis, b, &image, &residual, alpha, &beta) {
            return Ok(refuted(cx, checked));
        }
    }
    Ok(VerificationVerdict {
        verdict: Verdict::Confirmed,
        counterexample: None,
        seed,
        checked,
    })
}

/// Deterministic sweep only.
pub fn passes_sweep(basis: &SubspaceBasis, b: &Vector, alpha: &Vector) -> bool {
    let residual = b.sub(&basis.combine(alpha));
    orthogonal_to_patterns(&Sweep::new(basis).patterns(), &residual)
}

/// The deterministic directions, one per distinct sign pattern of `Aβ` (the
/// `ℓ₁` criterion only sees `sgn(Aβ)`).
struct Sweep {
    entries: Vec<(Vector, Vec<i8>)>,
}

impl Sweep {
    fn new(basis: &SubspaceBasis) -> Sweep {
        let rows = integer_rows(basis);
        let mut directions = sweep_directions(basis.m());
        if let Some(rows) = &rows {
            directions.extend(cell_interior_points(rows, basis.m()));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut entries = Vec::new();
        for beta in directions {
            let pattern: Vec<i8> = basis.combine(&beta).iter().map(sign_i8).collect();
            if seen.insert(pattern.clone()) {
                entries.push((beta, pattern));
            }
        }
        Sweep { entries }
    }

    fn patterns(&self) -> Vec<Vec<i8>> {
        self.entries.iter().map(|(_, p)| p.clone()).collect()
    }
}

/// Rows of `A` as integer vectors (each scaled by a positive factor), when the
/// entries stay small enough for exact `i128` ray arithmetic.
fn integer_rows(basis: &SubspaceBasis) -> Option<Vec<Vec<i128>>> {
    use num::{BigInt, Integer, ToPrimitive};
    let a = basis.matrix();
    (0..a.rows())
        .map(|i| {
            let row = a.row(i);
            let lcm = row.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| {
                    (x.numer() * (&lcm / x.denom()))
                        .to_i128()
                        .filter(|v| v.unsigned_abs() < 1 << 20)
                })
                .collect()
        })
        .collect()
}

fn primitive(v: Vec<i128>) -> Vec<i128> {
    use num::Integer;
    let g = v.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g == 0 {
        v
    } else {
        v.into_iter().map(|x| x / g).collect()
    }
}

/// An interior point of every open cell of `{β : (Aβ)ᵢ = 0}` for `m ≤ 3`.
///
/// The rows span `ℝᵐ`, so every closed cell is a pointed cone whose extreme
/// rays lie on intersections of `m − 1` hyperplanes. The sum of `m` linearly
/// independent extreme rays of a cell is interior to it, so summing every
/// independent `m`-subset of candidate rays hits every cell.
pub fn cell_interior_points(rows: &[Vec<i128>], m: usize) -> Vec<Vector> {
    let nonzero: Vec<&Vec<i128>> = rows.iter().filter(|r| r.iter().any(|&v| v != 0)).collect();
    let mut rays: Vec<Vec<i128>> = Vec::new();
    match m {
        1 => rays.push(vec![1]),
        2 => {
            for r in &nonzero {
                rays.push(vec![-r[1], r[0]]);
            }
        }
        3 => {
            for (i, a) in nonzero.iter().enumerate() {
                for b in &nonzero[i + 1..] {
                    rays.push(vec![
                        a[1] * b[2] - a[2] * b[1],
                        a[2] * b[0] - a[0] * b[2],
                        a[0] * b[1] - a[1] * b[0],
                    ]);
                }
            }
        }
        _ => return Vec::new(),
    }
    let mut rays: Vec<Vec<i128>> = rays
        .into_iter()
        .filter(|r| r.iter().any(|&v| v != 0))
        .map(primitive)
        .flat_map(|r| {
            let neg = r.iter().map(|v| -v).collect();
            [r, neg]
        })
        .collect();
    rays.sort_unstable();
    rays.dedup();

    let to_vector = |v: &[i128]| -> Vector {
        v.iter()
            .map(|&x| Rational::from_integer(num::BigInt::from(x)))
            .collect()
    };
    let mut out = Vec::new();
    let k = rays.len();
    match m {
        1 => out.extend(rays.iter().map(|r| to_vector(r))),
        2 => {
            for i in 0..k {
                for j in i + 1..k {
                    let (a, b) = (&rays[i], &rays[j]);
                    if a[0] * b[1] - a[1] * b[0] != 0 {
                        out.push(to_vector(&[a[0] + b[0], a[1] + b[1]]));
                    }
                }
            }
        }
        _ => {
            for i in 0..k {
                for j in i + 1..k {
                    for l in j + 1..k {
                        let (a, b, c) = (&rays[i], &rays[j], &rays[l]);
                        let det = a[0] * (b[1] * c[2] - b[2] * c[1])
                            - a[1] * (b[0] * c[2] - b[2] * c[0])
                            + a[2] * (b[0] * c[1] - b[1] * c[0]);
                        if det != 0 {
                            out.push(to_vector(&[
                                a[0] + b[0] + c[0],
                                a[1] + b[1] + c[1],
                                a[2] + b[2] + c[2],
                            ]));
                        }
                    }
                }
            }
        }
    }
    out
}

fn sign_i8(v: &Rational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

// Orthogonality is invariant under positive scaling of the residual, so clear
// denominators and run on machine integers when they fit.
fn orthogonal_to_patterns(patterns: &[Vec<i8>], residual: &Vector) -> bool {
    use num::{BigInt, Integer, ToPrimitive};
    let lcm = residual
        .iter()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let scaled: Option<Vec<i64>> = residual
        .iter()
        .map(|x| (x.numer() * (&lcm / x.denom())).to_i64())
        .collect();
    match scaled {
        Some(z) if z.iter().all(|v| v.unsigned_abs() < (1 << 40)) => patterns.iter().all(|p| {
            let (mut signed, mut free) = (0i64, 0i64);
            for (s, v) in p.iter().zip(&z) {
                match s {
                    0 => free += v.abs(),
                    s => signed += i64::from(*s) * v,
                }
            }
            signed.abs() <= free
        }),
        _ => patterns.iter().all(|p| {
            let y: Vector = p.iter().map(|&s| int(i64::from(s))).collect();
            bj_orthogonal_l1(&y, residual)
        }),
    }
}

// `D·(b − step·A·k)` with integer `D·b` and `D·step·A`, so grid points cost
// machine arithmetic only. `None` when the scaled entries are too large.
struct IntegerGrid {
    target: Vec<i64>,
    columns: Vec<Vec<i64>>,
}

impl IntegerGrid {
    const LIMIT: u64 = 1 << 24;

    fn new(basis: &SubspaceBasis, b: &Vector, step: &Rational) -> Option<IntegerGrid> {
        use num::{BigInt, Integer, ToPrimitive};
        let columns: Vec<Vector> = (0..basis.m()).map(|j| basis.column(j).scale(step)).collect();
        let lcm = b
            .iter()
            .chain(columns.iter().flat_map(|c| c.iter()))
            .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let scale = Rational::from_integer(lcm);
        let to_ints = |v: &Vector| -> Option<Vec<i64>> {
            v.iter()
                .map(|x| (x * &scale).to_integer().to_i64().filter(|i| i.unsigned_abs() < Self::LIMIT))
                .collect()
        };
        Some(IntegerGrid {
            target: to_ints(b)?,
            columns: columns.iter().map(to_ints).collect::<Option<_>>()?,
        })
    }

    fn passes(&self, patterns: &[Vec<i8>], k: &[i64]) -> bool {
        let mut residual = self.target.clone();
        for (col, &kj) in self.columns.iter().zip(k) {
            for (r, a) in residual.iter_mut().zip(col) {
                *r -= kj * a;
            }
        }
        patterns.iter().all(|p| {
            let (mut signed, mut free) = (0i64, 0i64);
            for (s, v) in p.iter().zip(&residual) {
                match s {
                    0 => free += v.abs(),
                    s => signed += i64::from(*s) * v,
                }
            }
            signed.abs() <= free
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceReport {
    pub exists: bool,
    /// Grid points passing the deterministic sweep, in scan order.
    pub candidates: Vec<Vector>,
    pub grid_points: usize,
}

/// Scans `α ∈ [−radius, radius]ᵐ ∩ step·ℤᵐ` (offset so the grid contains 0).
pub fn brute_force_existence(
    basis: &SubspaceBasis,
    b: &Vector,
    radius: &Rational,
    step: &Rational,
) -> Result<BruteForceReport> {
    let m = basis.m();
    if m > 3 {
        return Err(Error::CapacityExceeded {
            what: "brute-force dimension m",
            got: m,
            limit: 3,
        });
    }
    if !step.is_positive() {
        return Err(Error::InvalidInput("grid step must be positive".into()));
    }
    if radius.is_negative() {
        return Err(Error::InvalidInput("grid radius must be non-negative".into()));
    }
    if b.len() != basis.n() {
        return Err(Error::Dimension(format!(
            "target has length {}, expected {}",
            b.len(),
            basis.n()
        )));
    }
    let half = (radius / step).floor().to_integer();
    let half: i64 = i64::try_from(half)
        .ok()
        .filter(|h| *h <= 1_000_000)
        .ok_or(Error::CapacityExceeded {
            what: "grid points per axis",
            got: usize::MAX,
            limit: MAX_GRID_POINTS,
        })?;
    let width = (2 * half + 1) as usize;
    let grid_points = width.checked_pow(m as u32).unwrap_or(usize::MAX);
    if grid_points > MAX_GRID_POINTS {
        return Err(Error::CapacityExceeded {
            what: "grid points",
            got: grid_points,
            limit: MAX_GRID_POINTS,
        });
    }
    let axis: Vec<Rational> = (-half..=half).map(|k| step * int(k)).collect();
    let patterns = Sweep::new(basis).patterns();
    let scaled = IntegerGrid::new(basis, b, step);
    let mut candidates = Vec::new();
    let mut k = vec![0i64; m];
    for code in 0..grid_points {
        let mut c = code;
        for kj in k.iter_mut() {
            *kj = (c % width) as i64 - half;
            c /= width;
        }
        let passes = match &scaled {
            Some(grid) => grid.passes(&patterns, &k),
            None => {
                let alpha: Vector = k.iter().map(|&kj| axis[(kj + half) as usize].clone()).collect();
                orthogonal_to_patterns(&patterns, &b.sub(&basis.combine(&alpha)))
            }
        };
        if passes {
            candidates.push(k.iter().map(|&kj| axis[(kj + half) as usize].clone()).collect());
        }
    }
    Ok(BruteForceReport {
        exists: !candidates.is_empty(),
        candidates,
        grid_points,
    })
}

/// `‖y + λz‖₁ ≥ ‖y‖₁` for all `λ`, via the one-dimensional minimizer.
pub fn bj_orthogonal_by_minimization(y: &Vector, z: &Vector) -> bool {
    minimize_1d_l1(y, z).minimizers.contains(&Rational::zero())
}
