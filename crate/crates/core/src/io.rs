//! Problem files and JSON reports for the command-line front end.
//!
//! Rationals travel as strings (`"-3/7"`), coordinate and class indices in
//! reports are 1-based.

use std::fmt;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::analysis::SubspaceAnalysis;
use crate::classify::{classify, Rationale};
use crate::error::Error;
use crate::exact::{format_rational, parse_rational, Rational, Vector};
use crate::oracle::{brute_force_existence, verify_best_coapprox_seeded, Verdict, DEFAULT_SEED};
use crate::solver::{projection_map, CoapproxOutcome};
use crate::subspace::SubspaceBasis;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_TRIALS: usize = 200;
pub const DEFAULT_GRID_RADIUS: &str = "5";
pub const DEFAULT_GRID_STEP: &str = "1/2";

/// Failure of a command, carrying its process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable, malformed or inconsistent input (exit 2).
    Validation(String),
    /// A size guard tripped (exit 3).
    Capacity(String),
    /// The command does not apply to this input (exit 4).
    Precondition(String),
    /// A bug: results contradicted each other (exit 1).
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Precondition(_) => 4,
            CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "validation error: {m}"),
            CliError::Capacity(m) => write!(f, "capacity exceeded: {m}"),
            CliError::Precondition(m) => write!(f, "precondition failed: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let text = e.to_string();
        match e {
            Error::CapacityExceeded { .. } => CliError::Capacity(text),
            Error::EmptyZeroSet | Error::NoCoapproximation => CliError::Precondition(text),
            Error::InternalInconsistency(_) => CliError::Internal(text),
            Error::RankDeficient { .. }
            | Error::Dimension(_)
            | Error::ZeroSubspace
            | Error::InvalidInput(_) => CliError::Validation(text),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    n: usize,
    basis: Vec<Vec<String>>,
    #[serde(default)]
    targets: Vec<RawTarget>,
    #[serde(default)]
    options: RawOptions,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTarget {
    #[serde(default)]
    name: Option<String>,
    vector: Vec<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    trials: Option<usize>,
    seed: Option<u64>,
    grid_radius: Option<String>,
    grid_step: Option<String>,
}

/// Command-line overrides; `None` falls back to the file, then to the defaults.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub grid_radius: Option<String>,
    pub grid_step: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub trials: usize,
    pub seed: u64,
    pub grid_radius: Rational,
    pub grid_step: Rational,
}

/// A validated problem file.
#[derive(Clone, Debug)]
pub struct Problem {
    pub basis: SubspaceBasis,
    pub targets: Vec<(String, Vector)>,
    pub settings: Settings,
}

fn parse_field(field: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| CliError::Validation(format!("{field}: {e}")))
}

fn parse_vector(field: &str, n: usize, entries: &[String]) -> Result<Vector, CliError> {
    if entries.len() != n {
        return Err(CliError::Validation(format!(
            "{field}: expected {n} entries, got {}",
            entries.len()
        )));
    }
    entries
        .iter()
        .enumerate()
        .map(|(i, t)| parse_field(&format!("{field}[{}]", i + 1), t))
        .collect()
}

/// Parses and validates a problem document. Field names in diagnostics use
/// 1-based positions.
pub fn parse_problem(text: &str, overrides: &Overrides) -> Result<Problem, CliError> {
    let raw: RawProblem = serde_json::from_str(text)
        .map_err(|e| CliError::Validation(format!("problem file: {e}")))?;
    if raw.n == 0 {
        return Err(CliError::Validation("n: must be at least 1".into()));
    }
    if raw.basis.is_empty() {
        return Err(CliError::Validation("basis: at least one vector required".into()));
    }
    let columns = raw
        .basis
        .iter()
        .enumerate()
        .map(|(k, v)| parse_vector(&format!("basis[{}]", k + 1), raw.n, v))
        .collect::<Result<Vec<_>, _>>()?;
    let basis = SubspaceBasis::from_columns(&columns)
        .map_err(|e| CliError::Validation(format!("basis: {e}")))?;
    let targets = raw
        .targets
        .iter()
        .enumerate()
        .map(|(k, t)| {
            let name = t.name.clone().unwrap_or_else(|| format!("target{}", k + 1));
            parse_vector(&format!("targets[{}].vector", k + 1), raw.n, &t.vector).map(|v| (name, v))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let trials = overrides.trials.or(raw.options.trials).unwrap_or(DEFAULT_TRIALS);
    if trials == 0 {
        return Err(CliError::Validation("trials: must be at least 1".into()));
    }
    let radius_text = overrides
        .grid_radius
        .clone()
        .or(raw.options.grid_radius)
        .unwrap_or_else(|| DEFAULT_GRID_RADIUS.into());
    let step_text = overrides
        .grid_step
        .clone()
        .or(raw.options.grid_step)
        .unwrap_or_else(|| DEFAULT_GRID_STEP.into());
    let grid_radius = parse_field("grid_radius", &radius_text)?;
    let grid_step = parse_field("grid_step", &step_text)?;
    if grid_radius < Rational::from_integer(0.into()) {
        return Err(CliError::Validation("grid_radius: must be non-negative".into()));
    }
    if grid_step <= Rational::from_integer(0.into()) {
        return Err(CliError::Validation("grid_step: must be positive".into()));
    }
    Ok(Problem {
        basis,
        targets,
        settings: Settings {
            trials,
            seed: overrides.seed.or(raw.options.seed).unwrap_or(DEFAULT_SEED),
            grid_radius,
            grid_step,
        },
    })
}

pub fn load_problem(path: &std::path::Path, overrides: &Overrides) -> Result<Problem, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("input {}: {e}", path.display())))?;
    parse_problem(&text, overrides)
}

fn rat(v: &Rational) -> Value {
    Value::String(format_rational(v))
}

fn vec_json(v: &Vector) -> Value {
    Value::from(v.to_strings())
}

fn one_based(indices: &[usize]) -> Value {
    Value::from(indices.iter().map(|i| i + 1).collect::<Vec<_>>())
}

fn envelope(command: &str, rationale: &[&str], body: Value) -> Value {
    json!({
        "tool": "coapprox",
        "version": TOOL_VERSION,
        "command": command,
        "rationale": rationale,
        "result": body,
    })
}

fn require_targets(problem: &Problem) -> Result<(), CliError> {
    if problem.targets.is_empty() {
        return Err(CliError::Validation("targets: at least one target required".into()));
    }
    Ok(())
}

/// Component classes and zero set.
pub fn cmd_analyze(problem: &Problem) -> Result<Value, CliError> {
    let profile = crate::subspace::build_profile(&problem.basis);
    let classes: Vec<Value> = profile
        .classes()
        .iter()
        .map(|c| {
            json!({
                "representative": c.representative + 1,
                "members": c.members.iter().map(|(i, f)| json!({
                    "index": i + 1,
                    "factor": format_rational(f),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let partition: Vec<Value> = profile.partition().iter().map(|p| one_based(p)).collect();
    Ok(envelope(
        "analyze",
        &["component-classes", "zero-set"],
        json!({
            "n": problem.basis.n(),
            "m": problem.basis.m(),
            "d": profile.d(),
            "zero_set": one_based(profile.zero_set()),
            "classes": classes,
            "partition": partition,
        }),
    ))
}

/// Minimal norming set of the (reduced) subspace.
pub fn cmd_norming_set(problem: &Problem) -> Result<Value, CliError> {
    let analysis = SubspaceAnalysis::new(problem.basis.clone())?;
    let norming = analysis.norming();
    let lifted = norming.lifted(analysis.reduced());
    let in_basis = |i: usize| norming.spanning_basis().contains(&i);
    let representatives: Vec<Value> = norming
        .representatives()
        .iter()
        .zip(norming.cells())
        .enumerate()
        .map(|(i, (x, cell))| {
            let mut entry = json!({
                "signs": cell.signs.iter().map(|s| s.to_string()).collect::<String>(),
                "reduced": vec_json(x),
                "witness": vec_json(&cell.witness),
                "spanning": in_basis(i),
            });
            if !analysis.has_zero_set() {
                entry["ambient"] = vec_json(&lifted[i]);
            }
            entry
        })
        .collect();
    let mut tags = Vec::new();
    if analysis.has_zero_set() {
        tags.push("sigma-reduction");
    }
    tags.extend(["sign-cells", "minimal-norming-set"]);
    Ok(envelope(
        "norming-set",
        &tags,
        json!({
            "n": problem.basis.n(),
            "m": problem.basis.m(),
            "zero_set": one_based(analysis.profile().zero_set()),
            "kept_coordinates": one_based(analysis.reduced().kept_indices()),
            "hyperplanes": analysis.arrangement().normals().iter().map(vec_json).collect::<Vec<_>>(),
            "pairs": norming.len(),
            "q": norming.span_dim(),
            "spanning_basis": one_based(norming.spanning_basis()),
            "representatives": representatives,
        }),
    ))
}

fn outcome_kind_tag(outcome: &CoapproxOutcome) -> &'static str {
    match outcome {
        CoapproxOutcome::NotExists => "not-exists",
        CoapproxOutcome::Unique { .. } => "unique",
        CoapproxOutcome::Polytope { .. } => "polytope",
    }
}

/// Best coapproximation per target, with projection and oracle verdicts.
pub fn cmd_solve(problem: &Problem) -> Result<Value, CliError> {
    require_targets(problem)?;
    let analysis = SubspaceAnalysis::new(problem.basis.clone())?;
    let basis = analysis.basis();
    let settings = &problem.settings;
    let mut reports = Vec::with_capacity(problem.targets.len());
    for (name, b) in &problem.targets {
        let outcome = analysis.solve(b)?;
        let mut tags = Vec::new();
        if basis.coordinates_of(b).is_some() {
            tags.push("member-of-subspace");
        } else if analysis.has_zero_set() {
            tags.extend(["sigma-reduction", "slack-feasibility"]);
        } else {
            tags.push("linear-characterization");
        }
        let mut entry = json!({
            "name": name,
            "kind": outcome_kind_tag(&outcome),
        });
        match &outcome {
            CoapproxOutcome::NotExists => {
                if basis.m() <= 3 {
                    let report = brute_force_existence(
                        basis,
                        b,
                        &settings.grid_radius,
                        &settings.grid_step,
                    )?;
                    tags.push("brute-force-grid");
                    entry["brute_force"] = json!({
                        "grid_points": report.grid_points,
                        "passing_candidates": report.candidates.len(),
                        "corroborated": !report.exists,
                    });
                }
            }
            CoapproxOutcome::Unique { coefficients, vector }
            | CoapproxOutcome::Polytope {
                witness: coefficients,
                vector,
                ..
            } => {
                let key = if matches!(outcome, CoapproxOutcome::Unique { .. }) {
                    "coefficients"
                } else {
                    "witness"
                };
                entry[key] = vec_json(coefficients);
                entry["vector"] = vec_json(vector);
                if let CoapproxOutcome::Polytope { constraints, .. } = &outcome {
                    entry["constraints"] = constraints
                        .iter()
                        .map(|c| {
                            json!({
                                "row": vec_json(&c.row),
                                "rhs": rat(&c.rhs),
                                "slack": rat(&c.slack),
                            })
                        })
                        .collect();
                }
                let projection = projection_map(basis, b, &outcome)?;
                entry["projection_image"] = vec_json(projection.image_of_target());
                tags.push("norm-one-projection");
                let verdict = verify_best_coapprox_seeded(
                    basis,
                    b,
                    coefficients,
                    settings.trials,
                    settings.seed,
                )?;
                tags.push("birkhoff-james-oracle");
                let mut v = json!({
                    "verdict": match verdict.verdict {
                        Verdict::Confirmed => "confirmed",
                        Verdict::Refuted => "refuted",
                    },
                    "seed": verdict.seed,
                    "checked": verdict.checked,
                });
                if let Some(cx) = &verdict.counterexample {
                    v["counterexample"] = json!({
                        "beta": vec_json(&cx.beta),
                        "candidate_distance": rat(&cx.candidate_distance),
                        "target_distance": rat(&cx.target_distance),
                    });
                }
                entry["oracle"] = v;
            }
        }
        entry["rationale"] = Value::from(tags);
        reports.push(entry);
    }
    Ok(envelope("solve", &["best-coapproximation"], json!({ "targets": reports })))
}

pub fn cmd_classify(problem: &Problem) -> Result<Value, CliError> {
    let report = classify(&problem.basis)?;
    let tags: Vec<String> = report
        .rationale
        .iter()
        .map(|r| rationale_tag(*r))
        .collect();
    let tags: Vec<&str> = tags.iter().map(String::as_str).collect();
    let body = serde_json::to_value(&report).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(envelope("classify", &tags, body))
}

fn rationale_tag(r: Rationale) -> String {
    match serde_json::to_value(r) {
        Ok(Value::String(s)) => s,
        _ => unreachable!("unit variants serialize to strings"),
    }
}

/// δ₀ per target; requires a non-empty zero set.
pub fn cmd_threshold(problem: &Problem) -> Result<Value, CliError> {
    require_targets(problem)?;
    let analysis = SubspaceAnalysis::new(problem.basis.clone())?;
    if !analysis.has_zero_set() {
        return Err(Error::EmptyZeroSet.into());
    }
    let mut reports = Vec::with_capacity(problem.targets.len());
    for (name, b) in &problem.targets {
        let th = analysis.existence_threshold(b)?;
        let mass = analysis.reduced().zero_set_mass(b);
        reports.push(json!({
            "name": name,
            "delta0": rat(&th.delta0),
            "minimizing_alpha": vec_json(&th.minimizing_alpha),
            "rho_norm": rat(&th.rho_norm),
            "bound_holds": th.bound_holds(),
            "zero_set_mass": rat(&mass),
            "exists": mass >= th.delta0,
        }));
    }
    Ok(envelope(
        "threshold",
        &["sigma-reduction", "existence-threshold"],
        json!({
            "zero_set": one_based(analysis.profile().zero_set()),
            "targets": reports,
        }),
    ))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    NormingSet,
    Solve,
    Classify,
    Threshold,
}

pub fn run(command: Command, problem: &Problem) -> Result<Value, CliError> {
    match command {
        Command::Analyze => cmd_analyze(problem),
        Command::NormingSet => cmd_norming_set(problem),
        Command::Solve => cmd_solve(problem),
        Command::Classify => cmd_classify(problem),
        Command::Threshold => cmd_threshold(problem),
    }
}

/// Pretty JSON with a trailing newline.
pub fn render(report: &Value) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports are plain JSON");
    text.push('\n');
    text
}
