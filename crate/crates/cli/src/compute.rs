use std::io::Write;

use serde::Serialize;
use stieltjes::{Evaluator, StieltjesQuery};

use crate::args::ComputeArgs;
use crate::format;
use crate::{exit, CliError};

#[derive(Debug, Serialize)]
struct ComputeOutput {
    k: usize,
    a: f64,
    method: String,
    value: f64,
    err_estimate: f64,
    work: usize,
    converged: bool,
    regime_ok: bool,
}

pub fn run(args: &ComputeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let ev = Evaluator::with_tol(args.tol)?.with_psi_source(args.psi_source);
    let v = ev.evaluate(args.method, StieltjesQuery::new(args.k, args.a)?)?;
    let regime_ok = v.regime_ok();
    if args.json {
        let o = ComputeOutput {
            k: args.k,
            a: args.a,
            method: v.method.to_string(),
            value: v.value,
            err_estimate: v.err_estimate,
            work: v.work,
            converged: v.converged,
            regime_ok,
        };
        writeln!(out, "{}", serde_json::to_string(&o)?)?;
    } else {
        writeln!(
            out,
            "value={} err_estimate={} method={} work={} converged={} regime_ok={}",
            format::value(v.value),
            format::value(v.err_estimate),
            v.method,
            v.work,
            v.converged,
            regime_ok,
        )?;
    }
    Ok(if v.converged {
        exit::OK
    } else {
        exit::NOT_CONVERGED
    })
}
