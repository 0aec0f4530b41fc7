use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use coapprox::io::{load_problem, render, run, Command, Overrides};

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Cmd {
    Analyze,
    NormingSet,
    Solve,
    Classify,
    Threshold,
}

/// Exact best coapproximation in l1^n.
#[derive(Debug, Parser)]
#[command(name = "coapprox", version)]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// Problem file (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Random directions per oracle check.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Brute-force grid radius, as a rational string.
    #[arg(long, allow_hyphen_values = true)]
    grid_radius: Option<String>,
    /// Brute-force grid step, as a rational string.
    #[arg(long)]
    grid_step: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command = match args.command {
        Cmd::Analyze => Command::Analyze,
        Cmd::NormingSet => Command::NormingSet,
        Cmd::Solve => Command::Solve,
        Cmd::Classify => Command::Classify,
        Cmd::Threshold => Command::Threshold,
    };
    let overrides = Overrides {
        trials: args.trials,
        seed: args.seed,
        grid_radius: args.grid_radius,
        grid_step: args.grid_step,
    };
    let result = load_problem(&args.input, &overrides).and_then(|p| run(command, &p));
    match result {
        Ok(report) => {
            let text = render(&report);
            match args.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
