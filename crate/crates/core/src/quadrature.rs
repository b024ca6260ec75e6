//! Panel quadrature for the two integrand families that occur here:
//!
//! * half-line integrands damped by 1/(e^{2πy} − 1), and
//! * unit-interval integrands h(ln(1−u))/u, mapped to the half line by
//!   u = 1 − e^{−v} so that du/u becomes dv/(eᵛ − 1).
//!
//! Both are integrated with fixed-order Gauss–Legendre rules on panels whose
//! widths grow geometrically from the origin. Refinement bisects every panel;
//! the error estimate is the difference between the last two levels.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::Error;
use crate::sum::NeumaierSum;

/// Nodes closer to the origin than this use the caller-supplied limit.
const ORIGIN_GUARD: f64 = 1e-12;
/// Hard cap on base panels when searching for the truncation point.
const MAX_BASE_PANELS: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub points_per_panel: usize,
    /// Ratio between successive base panel widths.
    pub panel_growth: f64,
    /// Absolute target for the difference between refinement levels.
    pub tol: f64,
    /// Upper bound on panels at the finest level.
    pub max_panels: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            points_per_panel: 32,
            panel_growth: 2.0,
            tol: 1e-12,
            max_panels: 64,
        }
    }
}

impl QuadratureSpec {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::Domain {
                what: "tol",
                value: self.tol,
            });
        }
        if self.points_per_panel < 2 {
            return Err(Error::Domain {
                what: "points_per_panel",
                value: self.points_per_panel as f64,
            });
        }
        if self.panel_growth.is_nan() || self.panel_growth <= 1.0 {
            return Err(Error::Domain {
                what: "panel_growth",
                value: self.panel_growth,
            });
        }
        if self.max_panels == 0 {
            return Err(Error::Domain {
                what: "max_panels",
                value: 0.0,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub err_estimate: f64,
    pub nodes_used: usize,
    pub converged: bool,
    /// Number of refinement levels evaluated (at least one).
    pub levels: usize,
}

/// Gauss–Legendre nodes and weights on [−1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one point");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = libm::cos(PI * (i as f64 + 0.75) / (nf + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// ∫_lo^hi f using the rule mapped onto [lo, hi].
    pub fn integrate<F: Fn(f64) -> f64>(&self, lo: f64, hi: f64, f: F) -> f64 {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let mut acc = NeumaierSum::new();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc.add(w * f(mid + half * x));
        }
        half * acc.value()
    }
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Geometric panel scheme on [0, ∞) for integrands decaying like e^{−rate·y}.
fn integrate_half_line<F: Fn(f64) -> f64>(
    f: F,
    origin_value: f64,
    rate: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult, Error> {
    spec.validate()?;
    let rule = GaussLegendre::new(spec.points_per_panel);
    let eval = |y: f64| if y < ORIGIN_GUARD { origin_value } else { f(y) };
    let on_panel = |lo: f64, hi: f64, splits: usize| -> f64 {
        let width = (hi - lo) / splits as f64;
        let mut acc = NeumaierSum::new();
        for s in 0..splits {
            let a = lo + width * s as f64;
            acc.add(rule.integrate(a, a + width, eval));
        }
        acc.value()
    };

    // Base layout: extend until past the e^{-rate·y} < tol/100 point and the
    // last panel is negligible.
    let y_trunc = libm::log(100.0 / spec.tol) / rate;
    let small = spec.tol / 100.0;
    let mut bounds = vec![0.0];
    let mut width = 1.0 / rate;
    let mut level0 = NeumaierSum::new();
    let mut truncated = false;
    while bounds.len() <= MAX_BASE_PANELS {
        let lo = *bounds.last().unwrap();
        let hi = lo + width;
        let part = on_panel(lo, hi, 1);
        level0.add(part);
        bounds.push(hi);
        width *= spec.panel_growth;
        if hi >= y_trunc && part.abs() <= small {
            truncated = true;
            break;
        }
    }
    let base = bounds.len() - 1;
    let mut nodes = base * rule.len();
    let mut prev = level0.value();
    let mut levels = 1;
    let mut err = f64::INFINITY;
    let mut splits = 1;
    while base * splits * 2 <= spec.max_panels.max(base * 2) {
        splits *= 2;
        let cur: f64 = bounds
            .windows(2)
            .map(|w| on_panel(w[0], w[1], splits))
            .collect::<NeumaierSum>()
            .value();
        nodes += base * splits * rule.len();
        levels += 1;
        err = (cur - prev).abs();
        prev = cur;
        if err <= spec.tol {
            break;
        }
    }
    let converged = truncated && err <= spec.tol && prev.is_finite();
    Ok(QuadratureResult {
        value: prev,
        err_estimate: err,
        nodes_used: nodes,
        converged,
        levels,
    })
}

/// ∫₀^∞ f(y) dy for f decaying like e^{−2πy} times polylogarithmic growth.
///
/// `origin_value` is f's limit at y → 0⁺; nodes are never placed at 0 but any
/// node within `1e-12` of it uses the limit.
pub fn integrate_boltzmann_tail<F: Fn(f64) -> f64>(
    f: F,
    origin_value: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult, Error> {
    integrate_half_line(f, origin_value, 2.0 * PI, spec)
}

/// ∫₀¹ g(u) du for g(u) = h(ln(1−u))/u.
///
/// `g` receives both `u` and `ln(1−u)`; the logarithm is exact (it is −v
/// under the substitution u = 1 − e^{−v}), so callers should build their
/// integrand from it rather than from `u` near u = 1. `origin_value` is the
/// limit of g at u → 0⁺.
pub fn integrate_unit_log<G: Fn(f64, f64) -> f64>(
    g: G,
    origin_value: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult, Error> {
    let mapped = |v: f64| {
        let u = -libm::expm1(-v);
        g(u, -v) * libm::exp(-v)
    };
    integrate_half_line(mapped, origin_value, 1.0, spec)
}
