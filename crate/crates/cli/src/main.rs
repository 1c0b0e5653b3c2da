use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tutte_core::{render_report, run_pipeline, Format, PipelineConfig};

#[derive(Parser)]
#[command(
    name = "tuttesolve",
    version,
    about = "Guess and prove algebraic solutions of functional equations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve Q(psi(x,y), g(x), x, y) = 0 where g(x) = psi(x, 0).
    Solve(SolveArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Markdown,
    Json,
}

#[derive(clap::Args)]
struct SolveArgs {
    /// Polynomial in psi, g, x, y, e.g. "y**2*psi**2+(x+x*g*y-y-y**2)*psi+y-x*g".
    #[arg(long)]
    equation: String,
    /// Initial truncation order K; doubled while guessing fails.
    #[arg(long, default_value_t = 24)]
    guess_order: usize,
    /// Largest order + degree of the minimized recurrence (MaxC).
    #[arg(long, default_value_t = 8)]
    max_complexity: usize,
    /// Index G of the coefficient to evaluate exactly.
    #[arg(long, default_value_t = 1000)]
    eval_at: u64,
    /// Also expand and guess the coefficient of y^m.
    #[arg(long, default_value_t = 0)]
    column: usize,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Certify the guessed equations (default).
    #[arg(long, overrides_with = "no_prove")]
    prove: bool,
    /// Skip certification; results are labelled conjectural.
    #[arg(long, overrides_with = "prove")]
    no_prove: bool,
    /// Degree ceiling in f and in x for guessed equations.
    #[arg(long, default_value_t = 16)]
    max_degree: u32,
    /// Also write the JSON report to this file.
    #[arg(long)]
    seed_report: Option<PathBuf>,
}

fn main() -> ExitCode {
    let Command::Solve(args) = Cli::parse().command;
    let cfg = PipelineConfig {
        equation: args.equation,
        guess_order: args.guess_order,
        max_complexity: args.max_complexity,
        eval_at: args.eval_at,
        column: args.column,
        prove: !args.no_prove,
        max_degree: args.max_degree,
    };
    let report = match run_pipeline(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error at stage {e}");
            return ExitCode::from(1);
        }
    };
    let format = match args.format {
        OutFormat::Text => Format::Text,
        OutFormat::Markdown => Format::Markdown,
        OutFormat::Json => Format::Json,
    };
    print!("{}", render_report(&report, format));
    if let Some(path) = args.seed_report {
        if let Err(e) = std::fs::write(&path, render_report(&report, Format::Json)) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    if report.is_proven() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
