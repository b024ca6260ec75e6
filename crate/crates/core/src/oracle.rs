//! Reference values that share no code path with the representations they
//! check:
//!
//! * γ_k(a) from the defining limit
//!   γ_k(a) = lim_{N→∞} [ Σ_{j=0..N} lnᵏ(j+a)/(j+a) − ln^{k+1}(N+a)/(k+1) ],
//!   evaluated on a doubling sequence of N and extrapolated;
//! * ζ(m) and ζ(m, a) at integer m ≥ 2 by direct summation with an
//!   integral tail;
//! * ψ(a) from the series −γ + Σ_{n≥0} [1/(n+1) − 1/(n+a)].
//!
//! The partial sums are accumulated in difference form,
//! S(N) = f(0) − F(0) + Σ_{j=1..N} [f(j) − (F(j) − F(j−1))] with
//! f(x) = lnᵏ(x+a)/(x+a) and F its antiderivative, so that the large
//! ln^{k+1}(N+a)/(k+1) is never subtracted from an equally large sum.

use alloc::vec::Vec;

use crate::error::{check_positive, Error};
use crate::sum::NeumaierSum;
use crate::value::{ComputedValue, Diagnostics, Method, OracleDiagnostics};

pub const MAX_ORACLE_K: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub n_base: usize,
    pub doublings: usize,
    /// Number of error terms eliminated by the extrapolation.
    pub richardson_depth: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            n_base: 2000,
            doublings: 8,
            richardson_depth: 8,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<(), Error> {
        for (what, v) in [
            ("n_base", self.n_base),
            ("doublings", self.doublings),
            ("richardson_depth", self.richardson_depth),
        ] {
            if v == 0 {
                return Err(Error::Domain { what, value: 0.0 });
            }
        }
        Ok(())
    }
}

/// Which reading of the limit relation to sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitForm {
    /// Σ_{j=0..N} lnᵏ(j+a)/(j+a): the Hurwitz-zeta definition.
    Shifted,
    /// Σ_{j=1..N} lnᵏ(j+a)/j: the relation with denominator j. Agrees with
    /// the shifted form only at a = 1 (and at k = 0 converges to γ for
    /// every a). Kept to document that discrepancy.
    DenominatorJ,
}

fn powi(x: f64, k: usize) -> f64 {
    let mut r = 1.0;
    for _ in 0..k {
        r *= x;
    }
    r
}

/// ln^{k+1}(x₁)/(k+1) − ln^{k+1}(x₀)/(k+1) for x₁ = x₀ + 1, without
/// cancellation.
fn antiderivative_step(k: usize, x0: f64) -> f64 {
    let l0 = libm::log(x0);
    let l1 = libm::log(x0 + 1.0);
    let dl = libm::log1p(1.0 / x0);
    let mut poly = 0.0;
    let mut p1 = 1.0;
    for i in 0..=k {
        poly += p1 * powi(l0, k - i);
        p1 *= l1;
    }
    dl * poly / (k as f64 + 1.0)
}

/// Partial sums S(N) at N = n_base·2^i, i = 0..=doublings, with the
/// trapezoid endpoint correction −f(N)/2 already applied for the shifted
/// form.
pub fn limit_partial_sums(
    k: usize,
    a: f64,
    cfg: &OracleConfig,
    form: LimitForm,
) -> Result<Vec<(usize, f64)>, Error> {
    check_positive("a", a)?;
    cfg.validate()?;
    let n_last = cfg.n_base << cfg.doublings;
    let la = libm::log(a);
    let mut acc = NeumaierSum::new();
    acc.add(-powi(la, k + 1) / (k as f64 + 1.0));
    if form == LimitForm::Shifted {
        acc.add(powi(la, k) / a);
    }
    let mut out = Vec::with_capacity(cfg.doublings + 1);
    let mut next = cfg.n_base;
    for j in 1..=n_last {
        let x = j as f64 + a;
        let lx = libm::log(x);
        let denom = match form {
            LimitForm::Shifted => x,
            LimitForm::DenominatorJ => j as f64,
        };
        acc.add(powi(lx, k) / denom - antiderivative_step(k, x - 1.0));
        if j == next {
            let mut s = acc.value();
            if form == LimitForm::Shifted {
                s -= 0.5 * powi(lx, k) / x;
            }
            out.push((j, s));
            next *= 2;
        }
    }
    Ok(out)
}

/// Error basis for the extrapolation: lnʲ(N+a)/(N+a)^p, highest log power
/// first within each p.
fn basis(k: usize, a: f64, n: usize, depth: usize, form: LimitForm) -> Vec<f64> {
    let x = n as f64 + a;
    let l = libm::log(x);
    let (p0, dp) = match form {
        LimitForm::Shifted => (2, 2),
        LimitForm::DenominatorJ => (1, 1),
    };
    let mut cols = Vec::with_capacity(depth);
    let mut p = p0;
    while cols.len() < depth {
        for j in (0..=k).rev() {
            if cols.len() == depth {
                break;
            }
            cols.push(powi(l, j) / libm::pow(x, p as f64));
        }
        p += dp;
    }
    cols
}

/// Solves the (d+1)×(d+1) system for the limit using the last d+1 points.
fn extrapolate(points: &[(usize, f64)], k: usize, a: f64, depth: usize, form: LimitForm) -> f64 {
    if depth == 0 {
        return points.last().map_or(f64::NAN, |p| p.1);
    }
    let used = &points[points.len() - (depth + 1)..];
    let dim = depth + 1;
    let mut m: Vec<Vec<f64>> = used
        .iter()
        .map(|&(n, s)| {
            let mut row = Vec::with_capacity(dim + 1);
            row.push(1.0);
            row.extend(basis(k, a, n, depth, form));
            row.push(s);
            row
        })
        .collect();
    // column scaling
    for c in 1..dim {
        let scale = m.iter().map(|r| r[c].abs()).fold(0.0, f64::max);
        if scale > 0.0 {
            for r in m.iter_mut() {
                r[c] /= scale;
            }
        }
    }
    solve_first(&mut m, dim)
}

/// Gaussian elimination with partial pivoting on an augmented matrix;
/// returns the first unknown.
fn solve_first(m: &mut [Vec<f64>], dim: usize) -> f64 {
    for col in 0..dim {
        let pivot = (col..dim)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap_or(col);
        m.swap(col, pivot);
        let p = m[col][col];
        if p == 0.0 {
            return f64::NAN;
        }
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest[..dim - col - 1].iter_mut() {
            let factor = row[col] / p;
            if factor != 0.0 {
                for (x, v) in row[col..=dim].iter_mut().zip(&pivot_row[col..=dim]) {
                    *x -= factor * v;
                }
            }
        }
    }
    let mut x = alloc::vec![0.0; dim];
    for r in (0..dim).rev() {
        let mut s = m[r][dim];
        for c in r + 1..dim {
            s -= m[r][c] * x[c];
        }
        x[r] = s / m[r][r];
    }
    x[0]
}

/// γ_k(a) by the limit relation, extrapolated over the doubling sequence.
///
/// `err_estimate` is the difference between the two deepest extrapolations.
pub fn gamma_limit_oracle(k: usize, a: f64, cfg: &OracleConfig) -> Result<ComputedValue, Error> {
    gamma_limit_with_form(k, a, cfg, LimitForm::Shifted)
}

pub fn gamma_limit_with_form(
    k: usize,
    a: f64,
    cfg: &OracleConfig,
    form: LimitForm,
) -> Result<ComputedValue, Error> {
    if k > MAX_ORACLE_K {
        return Err(Error::OutOfBudget {
            k,
            max: MAX_ORACLE_K,
        });
    }
    let points = limit_partial_sums(k, a, cfg, form)?;
    let depth = cfg.richardson_depth.min(points.len() - 1);
    let best = extrapolate(&points, k, a, depth, form);
    let prev = if depth >= 1 {
        extrapolate(&points, k, a, depth - 1, form)
    } else {
        best
    };
    let prev2 = if depth >= 2 {
        extrapolate(&points, k, a, depth - 2, form)
    } else {
        prev
    };
    let err = (best - prev).abs();
    let err_prev = (prev - prev2).abs();
    let scale = points.iter().map(|p| p.1.abs()).fold(1.0, f64::max);
    let noise = 1e3 * f64::EPSILON * scale;
    let low_confidence = err > err_prev && err > noise;
    let n_max = points.last().map_or(0, |p| p.0);
    Ok(ComputedValue {
        value: best,
        err_estimate: err,
        method: Method::Oracle,
        work: n_max,
        converged: best.is_finite() && !low_confidence,
        diagnostics: Diagnostics::Oracle(OracleDiagnostics {
            n_max,
            depth,
            low_confidence,
        }),
    })
}

/// Number of terms so that the first omitted Euler–Maclaurin correction
/// m·N^{−m−1}/12 falls below 1e−15. At least m terms are summed: the
/// correction series only behaves asymptotically once N exceeds m/(2π).
fn zeta_cutoff(m: u32, shift: f64) -> usize {
    let mf = m as f64;
    let n = libm::pow(mf / 12.0 * 1e15, 1.0 / (mf + 1.0)) - shift;
    (libm::ceil(n).max(mf)) as usize
}

/// ζ(m) for integer m ≥ 2.
pub fn zeta_int(m: u32) -> Result<f64, Error> {
    hurwitz_zeta_int(m, 1.0)
}

/// ζ(m, a) = Σ_{n≥0} (n+a)^{−m} for integer m ≥ 2, a > 0:
/// Σ_{n<N} (n+a)^{−m} + (N+a)^{1−m}/(m−1) + (N+a)^{−m}/2.
pub fn hurwitz_zeta_int(m: u32, a: f64) -> Result<f64, Error> {
    if m < 2 {
        return Err(Error::Domain {
            what: "m",
            value: m as f64,
        });
    }
    check_positive("a", a)?;
    let mf = m as f64;
    let n = zeta_cutoff(m, a);
    let mut acc = NeumaierSum::new();
    let x = n as f64 + a;
    acc.add(libm::pow(x, 1.0 - mf) / (mf - 1.0));
    acc.add(0.5 * libm::pow(x, -mf));
    for i in (0..n).rev() {
        acc.add(libm::pow(i as f64 + a, -mf));
    }
    Ok(acc.value())
}

const DIGAMMA_TERMS: usize = 100_000;

/// ψ(a) = −γ + Σ_{n=0..N} (a−1)/((n+1)(n+a)) + tail, with the tail
/// ln(1 + (a−1)/(N+3/2)) from the midpoint rule (leading behaviour (a−1)/N).
pub fn digamma_series_ref(a: f64, euler_gamma: f64) -> Result<f64, Error> {
    check_positive("a", a)?;
    let am1 = a - 1.0;
    let n = DIGAMMA_TERMS;
    let mut acc = NeumaierSum::new();
    acc.add(libm::log1p(am1 / (n as f64 + 1.5)));
    for i in (0..=n).rev() {
        let x = i as f64;
        acc.add(am1 / ((x + 1.0) * (x + a)));
    }
    acc.add(-euler_gamma);
    Ok(acc.value())
}

/// Holds a configuration and the Euler constant it produces, computed once.
#[derive(Debug, Clone)]
pub struct Oracle {
    cfg: OracleConfig,
    euler_gamma: f64,
}

impl Oracle {
    pub fn new(cfg: OracleConfig) -> Result<Self, Error> {
        let euler_gamma = gamma_limit_oracle(0, 1.0, &cfg)?.value;
        Ok(Self { cfg, euler_gamma })
    }

    pub fn config(&self) -> &OracleConfig {
        &self.cfg
    }

    /// γ = γ₀(1) as produced by this oracle.
    pub fn euler_gamma(&self) -> f64 {
        self.euler_gamma
    }

    pub fn gamma(&self, k: usize, a: f64) -> Result<ComputedValue, Error> {
        gamma_limit_oracle(k, a, &self.cfg)
    }

    pub fn digamma(&self, a: f64) -> Result<f64, Error> {
        digamma_series_ref(a, self.euler_gamma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER: f64 = 0.577_215_664_901_532_9;
    const LN2: f64 = core::f64::consts::LN_2;
    const ZETA2: f64 = 1.644_934_066_848_226_4;

    fn oracle() -> Oracle {
        Oracle::new(OracleConfig::default()).unwrap()
    }

    #[test]
    fn reproduces_euler_constant() {
        let o = oracle();
        assert!((o.euler_gamma() - 0.577_215_664_9).abs() < 1e-10);
        assert!((o.euler_gamma() - EULER).abs() < 1e-14);
        let d = o.digamma(1.0).unwrap();
        assert!((d + o.euler_gamma()).abs() < 1e-12);
    }

    #[test]
    fn oracle_examples() {
        let o = oracle();
        let g1 = o.gamma(1, 1.0).unwrap();
        assert!((g1.value + 0.072_815_845_5).abs() < 1e-10);
        let g = o.gamma(0, 0.5).unwrap();
        assert!((g.value - 1.963_510_026_0).abs() < 1e-10);
        assert!((g.value - (EULER + 2.0 * LN2)).abs() < 1e-13);
    }

    #[test]
    fn independent_configurations_agree() {
        let a = gamma_limit_oracle(1, 1.0, &OracleConfig::default()).unwrap();
        let cfg = OracleConfig {
            n_base: 3000,
            doublings: 7,
            richardson_depth: 7,
        };
        let b = gamma_limit_oracle(1, 1.0, &cfg).unwrap();
        assert!((a.value - b.value).abs() < 1e-12);
    }

    #[test]
    fn budget_cap() {
        let cfg = OracleConfig::default();
        assert_eq!(
            gamma_limit_oracle(9, 1.0, &cfg),
            Err(Error::OutOfBudget { k: 9, max: 8 })
        );
        assert!(gamma_limit_oracle(0, 0.0, &cfg).is_err());
    }

    #[test]
    fn denominator_j_reading_only_matches_at_one() {
        let cfg = OracleConfig::default();
        let shifted = gamma_limit_oracle(0, 1.0, &cfg).unwrap().value;
        let denom_j = gamma_limit_with_form(0, 1.0, &cfg, LimitForm::DenominatorJ)
            .unwrap()
            .value;
        assert!((shifted - denom_j).abs() < 1e-9);
        // at a = 1/2 the denominator-j sum still tends to γ, not −ψ(1/2)
        let denom_j = gamma_limit_with_form(0, 0.5, &cfg, LimitForm::DenominatorJ)
            .unwrap()
            .value;
        assert!((denom_j - EULER).abs() < 1e-9);
        assert!((denom_j - (EULER + 2.0 * LN2)).abs() > 1.0);
    }

    #[test]
    fn zeta_examples() {
        assert!((zeta_int(2).unwrap() - ZETA2).abs() < 1e-15);
        assert!((zeta_int(2).unwrap() - core::f64::consts::PI.powi(2) / 6.0).abs() < 1e-15);
        assert!((zeta_int(4).unwrap() - 1.082_323_233_711_138_2).abs() < 1e-15);
        assert_eq!(zeta_int(50).unwrap(), 1.0 + libm::pow(2.0, -50.0));
        assert!(zeta_int(1).is_err());
    }

    #[test]
    fn zeta_strictly_decreasing_to_one() {
        let mut prev = zeta_int(2).unwrap();
        // strict until 2^{-m} drops below the binary64 spacing at 1
        for m in 3..=52 {
            let z = zeta_int(m).unwrap();
            assert!(z < prev && z > 1.0, "m={m}");
            prev = z;
        }
        for m in 53..=80 {
            let z = zeta_int(m).unwrap();
            assert!(z <= prev && z >= 1.0, "m={m}");
            prev = z;
        }
    }

    #[test]
    fn hurwitz_examples() {
        let z2 = zeta_int(2).unwrap();
        assert_eq!(hurwitz_zeta_int(2, 1.0).unwrap(), z2);
        assert!((hurwitz_zeta_int(2, 2.0).unwrap() - (z2 - 1.0)).abs() < 1e-15);
        let z3 = zeta_int(3).unwrap();
        let h = hurwitz_zeta_int(3, 0.5).unwrap();
        assert!((h - 7.0 * z3).abs() < 1e-14);
        assert!((h - 8.414_398_322_1).abs() < 1e-10);
    }

    #[test]
    fn digamma_examples() {
        let o = oracle();
        assert!((o.digamma(2.0).unwrap() - (1.0 - EULER)).abs() < 1e-13);
        assert!((o.digamma(0.5).unwrap() + 1.963_510_026_0).abs() < 1e-10);
        // ψ(10) = −γ + H_9
        let h9 = 2.828_968_253_968_254;
        assert!((o.digamma(10.0).unwrap() - (h9 - EULER)).abs() < 1e-13);
    }
}
