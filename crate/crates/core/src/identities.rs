//! Quantities derived from the Stieltjes constants: shifts, log-sum
//! differences, polygamma values, generalized harmonic numbers and the
//! right-hand sides of the sums over reciprocal powers of ζ zeros.

use core::f64::consts::PI;

use crate::combinatorics::{harmonic, HarmonicValue};
use crate::error::Error;
use crate::evaluate::Evaluator;
use crate::oracle::{hurwitz_zeta_int, zeta_int};
use crate::quadrature::integrate_unit_log;
use crate::sum::NeumaierSum;
use crate::value::{ComputedValue, Method, StieltjesQuery};

fn powi(x: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, _| acc * x)
}

/// γ_k(a+n) = γ_k(a) − Σ_{j<n} lnᵏ(a+j)/(a+j), with γ_k(a) from `sel`.
pub fn gamma_shift(
    k: usize,
    a: f64,
    n: usize,
    sel: Method,
    ev: &Evaluator,
) -> Result<ComputedValue, Error> {
    let base = ev.evaluate(sel, StieltjesQuery::new(k, a)?)?;
    let mut acc = NeumaierSum::new();
    acc.add(base.value);
    for j in 0..n {
        let x = a + j as f64;
        acc.add(-powi(libm::log(x), k) / x);
    }
    Ok(ComputedValue {
        value: acc.value(),
        ..base
    })
}

/// A truncated sum with a heuristic tail bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogSumDiff {
    pub value: f64,
    pub err_estimate: f64,
    pub terms: usize,
}

/// Σ_{n=0..N} [lnˡ(n+a)/(n+a) − lnˡ(n+b)/(n+b)], which tends to
/// γ_ℓ(a) − γ_ℓ(b).
///
/// The value includes the midpoint tail F(N+½+b) − F(N+½+a) with
/// F(x) = ln^{ℓ+1}x/(ℓ+1). `err_estimate` is the heuristic
/// |a−b|(ℓ+1)·max(1, lnˡN)/N².
pub fn gamma_diff(ell: usize, a: f64, b: f64, n: usize) -> Result<LogSumDiff, Error> {
    crate::error::check_positive("a", a)?;
    crate::error::check_positive("b", b)?;
    let f = |x: f64| powi(libm::log(x), ell) / x;
    let mut acc = NeumaierSum::new();
    for i in 0..=n {
        let x = i as f64;
        acc.add(f(x + a) - f(x + b));
    }
    let big_f = |x: f64| powi(libm::log(x), ell + 1) / (ell as f64 + 1.0);
    let mid = n as f64 + 0.5;
    acc.add(big_f(mid + b) - big_f(mid + a));
    let nf = (n.max(1)) as f64;
    let err_estimate =
        (a - b).abs() * (ell as f64 + 1.0) * powi(libm::log(nf), ell).max(1.0) / (nf * nf);
    Ok(LogSumDiff {
        value: acc.value(),
        err_estimate,
        terms: n + 1,
    })
}

/// ψ⁽ⁿ⁾(a) = (−1)^{n+1} n! ζ(n+1, a) for n ≥ 1.
pub fn polygamma(n: u32, a: f64) -> Result<f64, Error> {
    if n == 0 {
        return Err(Error::Domain {
            what: "polygamma order (use digamma for n = 0)",
            value: 0.0,
        });
    }
    let fact: f64 = (1..=n).map(f64::from).product();
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * fact * hurwitz_zeta_int(n + 1, a)?)
}

/// H_n^{(r)} three ways.
#[derive(Debug, Clone, PartialEq)]
pub struct GenHarmonic {
    pub exact: HarmonicValue,
    pub via_polygamma: f64,
    pub via_integral: f64,
    pub integral_err: f64,
    pub integral_converged: bool,
}

impl GenHarmonic {
    /// Largest pairwise deviation among the three routes.
    pub fn max_deviation(&self) -> f64 {
        let e = self.exact.to_f64();
        let p = self.via_polygamma;
        let i = self.via_integral;
        (e - p).abs().max((e - i).abs()).max((p - i).abs())
    }
}

/// Exact H_n^{(r)}, the polygamma difference
/// (−1)^{r−1}/(r−1)!·[ψ^{(r−1)}(n+1) − ψ^{(r−1)}(1)] (for r = 1 the
/// digamma difference via γ₀ from the Hermite integral), and the integral
/// (−1)^{r−1}/(r−1)!·∫₀¹ (tⁿ−1)/(t−1)·ln^{r−1}t dt.
pub fn gen_harmonic_check(n: usize, r: u32, ev: &Evaluator) -> Result<GenHarmonic, Error> {
    if r == 0 {
        return Err(Error::Domain {
            what: "r",
            value: 0.0,
        });
    }
    let exact = harmonic(n, r);
    let via_polygamma = if n == 0 {
        0.0
    } else if r == 1 {
        let g = |a: f64| -> Result<f64, Error> {
            Ok(ev
                .evaluate(Method::Hermite, StieltjesQuery::new(0, a)?)?
                .value)
        };
        g(1.0)? - g(n as f64 + 1.0)?
    } else {
        let fact: f64 = (1..r).map(f64::from).product();
        let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
        sign / fact * (polygamma(r - 1, n as f64 + 1.0)? - polygamma(r - 1, 1.0)?)
    };

    // t = 1 − u, ln t = ℓ; (tⁿ − 1)/(t − 1) = −expm1(nℓ)/u
    let nf = n as f64;
    let rm1 = (r - 1) as usize;
    let origin = if r == 1 { nf } else { 0.0 };
    let q = integrate_unit_log(
        |u, l| -libm::expm1(nf * l) / u * powi(l, rm1),
        origin,
        ev.quadrature(),
    )?;
    let fact: f64 = (1..r).map(f64::from).product();
    let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
    Ok(GenHarmonic {
        exact,
        via_polygamma,
        via_integral: sign / fact * q.value,
        integral_err: q.err_estimate / fact,
        integral_converged: q.converged,
    })
}

/// Right-hand sides of the zero sums, with γ, γ₁, γ₂ taken at a = 1 from
/// `sel`:
///
/// ```text
/// order 2: 1 − π²/8 + 2γ₁ + γ²
/// order 3: 1 − (7/8)ζ(3) + γ³ + 3γγ₁ + (3/2)γ₂
/// ```
pub fn zero_sum_rhs(order: u32, sel: Method, ev: &Evaluator) -> Result<f64, Error> {
    let g = |k: usize| -> Result<f64, Error> {
        Ok(ev.evaluate(sel, StieltjesQuery::new(k, 1.0)?)?.value)
    };
    match order {
        2 => {
            let (g0, g1) = (g(0)?, g(1)?);
            Ok([1.0, -PI * PI / 8.0, 2.0 * g1, g0 * g0]
                .into_iter()
                .collect::<NeumaierSum>()
                .value())
        }
        3 => {
            let (g0, g1, g2) = (g(0)?, g(1)?, g(2)?);
            Ok([
                1.0,
                -7.0 / 8.0 * zeta_int(3)?,
                g0 * g0 * g0,
                3.0 * g0 * g1,
                1.5 * g2,
            ]
            .into_iter()
            .collect::<NeumaierSum>()
            .value())
        }
        _ => Err(Error::UnsupportedZeroSum { order }),
    }
}
