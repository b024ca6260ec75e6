use std::collections::BTreeMap;
use std::fs;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use stieltjes::oracle::MAX_ORACLE_K;
use stieltjes::{Evaluator, Method, StieltjesQuery};

use crate::args::ValidateArgs;
use crate::{exit, CliError};

pub const A_GRID: [f64; 5] = [0.5, 1.0, 1.5, 2.0, 10.0];

/// Tolerance handed to each method; the validation tolerance only judges
/// deviations between them.
pub const METHOD_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub value: f64,
    pub err: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GridPoint {
    pub k: usize,
    pub a: f64,
    pub values: BTreeMap<String, Entry>,
    /// Largest pairwise |difference| among converged values.
    pub max_dev: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub grid: Vec<GridPoint>,
    pub tol: f64,
    pub pass: bool,
}

fn grid_point(ev: &Evaluator, k: usize, a: f64) -> Result<GridPoint, CliError> {
    let q = StieltjesQuery::new(k, a)?;
    let mut values = BTreeMap::new();
    let mut used = Vec::new();
    for m in Method::ALL.into_iter().filter(|m| m.supports(k)) {
        let v = ev.evaluate(m, q)?;
        let converged = v.converged && v.regime_ok();
        if converged {
            used.push(v.value);
        }
        values.insert(
            m.to_string(),
            Entry {
                value: v.value,
                err: v.err_estimate,
                converged,
            },
        );
    }
    let mut max_dev: f64 = 0.0;
    for (i, x) in used.iter().enumerate() {
        for y in &used[i + 1..] {
            max_dev = max_dev.max((x - y).abs());
        }
    }
    Ok(GridPoint {
        k,
        a,
        values,
        max_dev,
    })
}

/// Runs every applicable method on k ∈ 0..=k_max, a ∈ [`A_GRID`].
///
/// Values whose producer reports non-convergence are listed but do not
/// enter the deviation.
pub fn build_report(k_max: usize, tol: f64) -> Result<Report, CliError> {
    if k_max > MAX_ORACLE_K {
        return Err(CliError::Usage(format!(
            "--k-max must be at most {MAX_ORACLE_K}"
        )));
    }
    let ev = Evaluator::with_tol(METHOD_TOL)?;
    let points: Vec<(usize, f64)> = (0..=k_max)
        .flat_map(|k| A_GRID.into_iter().map(move |a| (k, a)))
        .collect();
    let grid = points
        .par_iter()
        .map(|&(k, a)| grid_point(&ev, k, a))
        .collect::<Result<Vec<_>, _>>()?;
    let pass = grid.iter().all(|g| g.max_dev <= tol);
    Ok(Report { grid, tol, pass })
}

pub fn run(args: &ValidateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = build_report(args.k_max, args.tol)?;
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    match &args.report {
        Some(path) => {
            fs::write(path, &text).map_err(|source| CliError::Output {
                path: path.clone(),
                source,
            })?;
            let worst = report.grid.iter().map(|g| g.max_dev).fold(0.0, f64::max);
            writeln!(
                out,
                "pass={} max_dev={worst:e} tol={:e} report={}",
                report.pass,
                report.tol,
                path.display()
            )?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(if report.pass {
        exit::OK
    } else {
        exit::VALIDATION_FAILED
    })
}
