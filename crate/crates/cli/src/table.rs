use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use stieltjes::oracle::MAX_ORACLE_K;
use stieltjes::{Evaluator, Method, StieltjesQuery};

use crate::args::{Format, TableArgs};
use crate::format;
use crate::{exit, CliError};

pub const CSV_HEADER: [&str; 7] = [
    "k",
    "a",
    "method",
    "value",
    "err_estimate",
    "work",
    "seconds",
];

/// A validated table request.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub tol: f64,
    pub k_max: usize,
    /// Sorted ascending, without duplicates.
    pub a_list: Vec<f64>,
    /// Sorted by tag, without duplicates.
    pub methods: Vec<Method>,
    pub output_path: PathBuf,
    pub format: Format,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl RunConfig {
    pub fn from_args(args: &TableArgs) -> Result<Self, CliError> {
        if args.k_max > MAX_ORACLE_K {
            return Err(usage(format!("--k-max must be at most {MAX_ORACLE_K}")));
        }
        let mut a_list = Vec::new();
        for s in args
            .a_list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            let a: f64 = s
                .parse()
                .map_err(|_| usage(format!("invalid value in --a-list: {s}")))?;
            if !(a > 0.0 && a.is_finite()) {
                return Err(usage(format!("--a-list values must be positive, got {s}")));
            }
            a_list.push(a);
        }
        if a_list.is_empty() {
            return Err(usage("--a-list is empty"));
        }
        a_list.sort_by(f64::total_cmp);
        a_list.dedup();
        let mut methods = Vec::new();
        for s in args
            .methods
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            methods.push(
                s.parse::<Method>()
                    .map_err(|e| usage(format!("{e}: {s}")))?,
            );
        }
        if methods.is_empty() {
            return Err(usage("--methods is empty"));
        }
        methods.sort();
        methods.dedup();
        Ok(Self {
            tol: args.tol,
            k_max: args.k_max,
            a_list,
            methods,
            output_path: args.out.clone(),
            format: args.format,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub k: usize,
    pub a: f64,
    #[serde(serialize_with = "method_tag")]
    pub method: Method,
    pub value: f64,
    pub err_estimate: f64,
    pub work: usize,
    pub seconds: f64,
}

fn method_tag<S: serde::Serializer>(m: &Method, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(m.as_str())
}

/// All applicable (k, a, method) rows in lexicographic order.
pub fn compute_rows(cfg: &RunConfig, ev: &Evaluator) -> Result<Vec<Row>, CliError> {
    let mut jobs = Vec::new();
    for k in 0..=cfg.k_max {
        for &a in &cfg.a_list {
            for &m in &cfg.methods {
                if m.supports(k) {
                    jobs.push((k, a, m));
                }
            }
        }
    }
    jobs.par_iter()
        .map(|&(k, a, method)| {
            let start = Instant::now();
            let v = ev.evaluate(method, StieltjesQuery::new(k, a)?)?;
            Ok(Row {
                k,
                a,
                method,
                value: v.value,
                err_estimate: v.err_estimate,
                work: v.work,
                seconds: start.elapsed().as_secs_f64(),
            })
        })
        .collect()
}

pub fn write_rows(rows: &[Row], format: Format, w: impl Write) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut wr = csv::Writer::from_writer(w);
            wr.write_record(CSV_HEADER)?;
            for r in rows {
                wr.write_record([
                    r.k.to_string(),
                    format::value(r.a),
                    r.method.to_string(),
                    format::value(r.value),
                    format::value(r.err_estimate),
                    r.work.to_string(),
                    format!("{:.6}", r.seconds),
                ])?;
            }
            wr.flush()?;
        }
        Format::Json => {
            let mut w = w;
            serde_json::to_writer_pretty(&mut w, rows)?;
            writeln!(w)?;
            w.flush()?;
        }
    }
    Ok(())
}

pub fn run(args: &TableArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = RunConfig::from_args(args)?;
    let ev = Evaluator::with_tol(cfg.tol)?;
    let rows = compute_rows(&cfg, &ev)?;
    let file = File::create(&cfg.output_path).map_err(|source| CliError::Output {
        path: cfg.output_path.clone(),
        source,
    })?;
    write_rows(&rows, cfg.format, BufWriter::new(file)).map_err(|e| match e {
        CliError::Io(source) => CliError::Output {
            path: cfg.output_path.clone(),
            source,
        },
        e => e,
    })?;
    writeln!(
        out,
        "wrote {} rows to {}",
        rows.len(),
        cfg.output_path.display()
    )?;
    Ok(exit::OK)
}
