use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stieltjes::{Method, PsiSource};

#[derive(Debug, Parser)]
#[command(
    name = "stieltjes",
    version,
    about = "Generalized Stieltjes constants γ_k(a)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one γ_k(a) with one method.
    Compute(ComputeArgs),
    /// Write a table of values over a (k, a, method) grid.
    Table(TableArgs),
    /// Compare all applicable methods on a fixed grid and report deviations.
    Validate(ValidateArgs),
}

fn positive(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(format!("expected a positive number, got {s}"))
    }
}

fn method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn psi_source(s: &str) -> Result<PsiSource, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_parser = positive)]
    pub a: f64,
    #[arg(long, value_parser = method)]
    pub method: Method,
    #[arg(long, value_parser = positive, default_value_t = 1e-10)]
    pub tol: f64,
    /// ψ(a) source for the γ₁ Stirling series.
    #[arg(long, value_parser = psi_source, default_value = "digamma_series_ref")]
    pub psi_source: PsiSource,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub k_max: usize,
    /// Comma-separated positive reals.
    #[arg(long)]
    pub a_list: String,
    /// Comma-separated method tags.
    #[arg(long)]
    pub methods: String,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, value_parser = positive, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, default_value_t = 4)]
    pub k_max: usize,
    /// Largest permitted pairwise deviation.
    #[arg(long, value_parser = positive, default_value_t = 1e-7)]
    pub tol: f64,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub report: Option<PathBuf>,
}
