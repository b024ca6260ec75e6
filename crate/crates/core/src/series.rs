//! Series representations of γ₀(a) and γ₁(a) built from Stirling numbers.
//!
//! With c = 2πa and t(n,j) = s(n,j)/n!:
//!
//! ```text
//! γ₀(a) = 1/(2a) − ln a − (1/(πa)) Σ_{n≥1} (1/n) Σ_k (−1)ⁿ(−1)ᵏ (2k+1)!/c^{2k+1} t(n,2k+1)
//! γ₀(a) ~ 1/(2a) − ln a + (1/(2π²a²)) Σ_{n≥0} (−1)ⁿ (2n+1)! ζ(2n+2)/c^{2n}
//! γ₁(a) = ln a/(2a) − ln²a/2 + ln a·(−ψ(a) − 1/(2a) + ln a)
//!       − (1/(πa)) Σ_{n≥1} (1/n) Σ_k (−1)ᵏ (2k+1)! H_{2k+1}/c^{2k+1} |t(n,2k+1)|
//! ```
//!
//! The first line is the n-outer ordering of a double sum. The k-outer
//! ordering is [`gamma0_stirling_kfirst`]; its outer series is only
//! asymptotic.

use core::f64::consts::PI;

use alloc::vec::Vec;

use crate::combinatorics::{harmonic, ScaledRows, StirlingTable};
use crate::error::{check_positive, Error};
use crate::oracle::zeta_int;
use crate::sum::NeumaierSum;
use crate::value::{ComputedValue, Diagnostics, Method, SeriesDiagnostics};

/// Row cap for [`gamma0_stirling_kfirst`], which streams rows instead of
/// using a stored table.
pub const KFIRST_MAX_N: usize = 1 << 26;

/// Hard cap on the number of asymptotic terms examined.
pub const ASYMPTOTIC_MAX_TERMS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSpec {
    /// Outer terms for the Stirling series; also bounded by the table.
    pub max_terms: usize,
    pub tol: f64,
}

impl Default for SeriesSpec {
    fn default() -> Self {
        Self {
            max_terms: 128,
            tol: 1e-10,
        }
    }
}

impl SeriesSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if self.max_terms == 0 {
            return Err(Error::Domain {
                what: "max_terms",
                value: 0.0,
            });
        }
        check_positive("series tol", self.tol)
    }
}

/// (2k+1)!/c^{2k+1}·|t(n,2k+1)| for k = 0..=⌊(n−1)/2⌋.
fn weighted_odd_columns(row: &[f64], c: f64) -> impl Iterator<Item = (usize, f64)> + '_ {
    let ln_c = libm::log(c);
    let mut w = 1.0;
    let mut ln_w = 0.0;
    (1..row.len())
        .map(move |j| {
            w *= j as f64 / c;
            ln_w += libm::log(j as f64) - ln_c;
            (j, row[j].abs(), w, ln_w)
        })
        .filter(|(j, ..)| j % 2 == 1)
        .map(|(j, t, w, ln_w)| {
            let u = if w.is_finite() && w > 0.0 {
                t * w
            } else if t == 0.0 {
                0.0
            } else {
                libm::exp(libm::log(t) + ln_w)
            };
            ((j - 1) / 2, u)
        })
}

fn series_value(
    method: Method,
    value: f64,
    last: f64,
    terms: usize,
    conditioning: f64,
    tol: f64,
) -> Result<ComputedValue, Error> {
    if !value.is_finite() {
        return Err(Error::NonFinite { what: "series sum" });
    }
    let err_estimate = terms as f64 * last;
    Ok(ComputedValue {
        value,
        err_estimate,
        method,
        work: terms,
        converged: err_estimate <= tol,
        diagnostics: Diagnostics::Series(SeriesDiagnostics {
            terms_used: terms,
            last_term: last,
            truncation_index: terms,
            regime_ok: true,
            conditioning,
        }),
    })
}

/// Outer term n of the γ₀ series, without the 1/(πa) factor.
fn gamma0_term(row: &[f64], n: usize, c: f64) -> (f64, f64) {
    let mut inner = NeumaierSum::new();
    let mut abs = 0.0;
    for (k, u) in weighted_odd_columns(row, c) {
        inner.add(if k % 2 == 0 { u } else { -u });
        abs += u;
    }
    (-inner.value() / n as f64, abs / n as f64)
}

/// The n-outer series for γ₀(a) truncated after `n_terms` outer terms.
///
/// `err_estimate` is N·|last outer term|: the outer terms decay like 1/n²,
/// so the tail is about N times the last term.
pub fn gamma0_stirling(
    a: f64,
    n_terms: usize,
    spec: &SeriesSpec,
    table: &StirlingTable,
) -> Result<ComputedValue, Error> {
    check_positive("a", a)?;
    table.scaled_row(n_terms)?;
    let c = 2.0 * PI * a;
    let pref = 1.0 / (PI * a);
    let mut sum = NeumaierSum::new();
    let mut cond = 1.0 / (2.0 * a) + libm::log(a).abs();
    let mut last = 0.0;
    for n in 1..=n_terms {
        let (term, abs) = gamma0_term(table.scaled_row(n)?, n, c);
        sum.add(term);
        cond += pref * abs;
        last = (pref * term).abs();
    }
    let value = 1.0 / (2.0 * a) - libm::log(a) - pref * sum.value();
    series_value(Method::Stirling, value, last, n_terms, cond, spec.tol)
}

/// [`gamma0_stirling`] with N grown until the error estimate meets
/// `spec.tol` or the term/table cap is reached.
pub fn gamma0_stirling_auto(
    a: f64,
    spec: &SeriesSpec,
    table: &StirlingTable,
) -> Result<ComputedValue, Error> {
    check_positive("a", a)?;
    spec.validate()?;
    let cap = spec.max_terms.min(table.n_max());
    let c = 2.0 * PI * a;
    let pref = 1.0 / (PI * a);
    let mut sum = NeumaierSum::new();
    let mut cond = 1.0 / (2.0 * a) + libm::log(a).abs();
    let mut last = 0.0;
    let mut n = 0;
    while n < cap {
        n += 1;
        let (term, abs) = gamma0_term(table.scaled_row(n)?, n, c);
        sum.add(term);
        cond += pref * abs;
        last = (pref * term).abs();
        if n as f64 * last <= spec.tol && n > 1 {
            break;
        }
    }
    let value = 1.0 / (2.0 * a) - libm::log(a) - pref * sum.value();
    series_value(Method::Stirling, value, last, n, cond, spec.tol)
}

/// Outer terms of the asymptotic series, including 1/(2π²a²), until
/// `stop(previous, next)` holds or the term cap is reached.
fn asymptotic_terms(
    a: f64,
    count: usize,
    stop: impl Fn(f64, f64) -> bool,
) -> Result<Vec<f64>, Error> {
    let c = 2.0 * PI * a;
    let mut out: Vec<f64> = Vec::with_capacity(count.min(64));
    // (2n+1)!/c^{2n}, built incrementally
    let mut w = 1.0 / (2.0 * PI * PI * a * a);
    for n in 0..count {
        if n > 0 {
            let m = 2.0 * n as f64;
            w *= m * (m + 1.0) / (c * c);
        }
        let z = zeta_int(2 * n as u32 + 2)?;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let t = sign * w * z;
        let done = !w.is_finite() || out.last().is_some_and(|p| stop(*p, t));
        out.push(t);
        if done {
            break;
        }
    }
    Ok(out)
}

/// The asymptotic series summed over terms 0..=`last_index`.
pub fn gamma0_asymptotic_truncated(a: f64, last_index: usize) -> Result<f64, Error> {
    check_positive("a", a)?;
    let terms = asymptotic_terms(a, last_index + 1, |_, _| false)?;
    let s: f64 = terms.iter().copied().collect::<NeumaierSum>().value();
    Ok(1.0 / (2.0 * a) - libm::log(a) + s)
}

/// The asymptotic series at optimal truncation: terms up to and including
/// the smallest one. `regime_ok` is false when the first term is already
/// the smallest.
pub fn gamma0_asymptotic(a: f64, spec: &SeriesSpec) -> Result<ComputedValue, Error> {
    check_positive("a", a)?;
    let terms = asymptotic_terms(a, ASYMPTOTIC_MAX_TERMS + 1, |p, t| t.abs() >= p.abs())?;
    let mut star = 0;
    while star + 1 < terms.len() && terms[star + 1].abs() < terms[star].abs() {
        star += 1;
    }
    let omitted = terms.get(star + 1).map_or(terms[star].abs(), |t| t.abs());
    let mut sum = NeumaierSum::new();
    let mut cond = 1.0 / (2.0 * a) + libm::log(a).abs();
    for t in &terms[..=star] {
        sum.add(*t);
        cond += t.abs();
    }
    let value = 1.0 / (2.0 * a) - libm::log(a) + sum.value();
    let regime_ok = star > 0;
    Ok(ComputedValue {
        value,
        err_estimate: omitted,
        method: Method::Asymptotic,
        work: star + 1,
        converged: regime_ok && omitted <= spec.tol && value.is_finite(),
        diagnostics: Diagnostics::Series(SeriesDiagnostics {
            terms_used: star + 1,
            last_term: terms[star].abs(),
            truncation_index: star,
            regime_ok,
            conditioning: cond,
        }),
    })
}

/// The k-outer ordering: outer k = 0..=K, each inner n-sum truncated at N.
///
/// Exploratory. The inner sums tend to ζ(2k+2), so the outer series is the
/// asymptotic series and diverges for large K. Rows are streamed, so N may
/// go far beyond the stored table.
pub fn gamma0_stirling_kfirst(
    a: f64,
    k_max: usize,
    n_terms: usize,
) -> Result<ComputedValue, Error> {
    check_positive("a", a)?;
    if n_terms > KFIRST_MAX_N {
        return Err(Error::Capacity {
            requested: n_terms,
            limit: KFIRST_MAX_N,
        });
    }
    let cols = 2 * k_max + 1;
    let mut inner: Vec<NeumaierSum> = (0..=k_max).map(|_| NeumaierSum::new()).collect();
    let mut rows = ScaledRows::new(cols);
    for n in 1..=n_terms {
        rows.advance();
        let row = rows.row();
        let inv = 1.0 / n as f64;
        for (k, acc) in inner.iter_mut().enumerate() {
            if let Some(t) = row.get(2 * k + 1) {
                acc.add(t.abs() * inv);
            }
        }
    }

    let c = 2.0 * PI * a;
    let pref = 1.0 / (PI * a);
    let mut w = 1.0 / c;
    let mut outer = NeumaierSum::new();
    let mut terms = Vec::with_capacity(k_max + 1);
    for (k, acc) in inner.iter().enumerate() {
        if k > 0 {
            let m = 2.0 * k as f64;
            w *= m * (m + 1.0) / (c * c);
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let t = pref * sign * w * acc.value();
        outer.add(t);
        terms.push(t.abs());
    }
    let mut star = 0;
    while star + 1 < terms.len() && terms[star + 1] < terms[star] {
        star += 1;
    }
    let value = 1.0 / (2.0 * a) - libm::log(a) + outer.value();
    let last = terms[k_max];
    let regime_ok = star == k_max;
    Ok(ComputedValue {
        value,
        err_estimate: last,
        method: Method::Stirling,
        work: n_terms * (k_max + 1),
        converged: regime_ok && value.is_finite(),
        diagnostics: Diagnostics::Series(SeriesDiagnostics {
            terms_used: k_max + 1,
            last_term: last,
            truncation_index: star,
            regime_ok,
            conditioning: terms.iter().sum(),
        }),
    })
}

/// The series for γ₁(a) with a supplied ψ(a), truncated after `n_terms`.
pub fn gamma1_stirling(
    a: f64,
    n_terms: usize,
    psi: f64,
    spec: &SeriesSpec,
    table: &StirlingTable,
) -> Result<ComputedValue, Error> {
    check_positive("a", a)?;
    table.scaled_row(n_terms)?;
    let harmonics: Vec<f64> = (0..=n_terms / 2)
        .map(|k| harmonic(2 * k + 1, 1).to_f64())
        .collect();
    let c = 2.0 * PI * a;
    let pref = 1.0 / (PI * a);
    let la = libm::log(a);
    let head = [
        la / (2.0 * a),
        -la * la / 2.0,
        la * (-psi - 1.0 / (2.0 * a) + la),
    ];
    let mut cond: f64 = head.iter().map(|x| x.abs()).sum();
    let mut sum = NeumaierSum::new();
    let mut last = 0.0;
    for n in 1..=n_terms {
        let mut inner = NeumaierSum::new();
        let mut abs = 0.0;
        for (k, u) in weighted_odd_columns(table.scaled_row(n)?, c) {
            let v = harmonics[k] * u;
            inner.add(if k % 2 == 0 { v } else { -v });
            abs += v;
        }
        let term = inner.value() / n as f64;
        sum.add(term);
        cond += pref * abs / n as f64;
        last = (pref * term).abs();
    }
    let value = head.iter().copied().collect::<NeumaierSum>().value() - pref * sum.value();
    series_value(Method::Stirling, value, last, n_terms, cond, spec.tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{digamma_series_ref, gamma_limit_oracle, OracleConfig};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    const EULER: f64 = 0.577_215_664_901_532_9;
    const GAMMA1: f64 = -0.072_815_845_483_676_72;

    fn table() -> StirlingTable {
        StirlingTable::default()
    }

    #[test]
    fn gamma0_stirling_examples() {
        let t = table();
        let spec = SeriesSpec::default();
        let v = gamma0_stirling(1.0, 0, &spec, &t).unwrap();
        assert_eq!(v.value, 0.5);
        for (a, want) in [(1.0, EULER), (2.0, EULER - 1.0)] {
            let v = gamma0_stirling_auto(a, &spec, &t).unwrap();
            let err = (v.value - want).abs();
            assert!(
                err <= 10.0 * v.err_estimate,
                "a={a} err={err} est={}",
                v.err_estimate
            );
            assert!(err < 5e-5, "a={a} err={err}");
        }
        assert!(gamma0_stirling(1.0, 129, &spec, &t).is_err());
    }

    #[test]
    fn gamma0_stirling_estimate_shrinks() {
        let t = table();
        let spec = SeriesSpec::default();
        for a in [1.0, 2.0] {
            let mut prev = f64::INFINITY;
            for n in [8, 16, 32, 64, 128] {
                let v = gamma0_stirling(a, n, &spec, &t).unwrap();
                assert!(v.err_estimate < prev);
                prev = v.err_estimate;
            }
        }
    }

    #[test]
    fn asymptotic_examples() {
        let spec = SeriesSpec::default();
        let v = gamma0_asymptotic(10.0, &spec).unwrap();
        assert!((v.value + 2.251_752_589_066_721).abs() < 1e-12);
        assert!(v.err_estimate < 1e-12 && v.regime_ok());
        let v = gamma0_asymptotic(2.0, &spec).unwrap();
        assert!((v.value - (EULER - 1.0)).abs() <= v.err_estimate);
        let v = gamma0_asymptotic(0.1, &spec).unwrap();
        assert!(!v.regime_ok());
        assert!(v.err_estimate > 1e-2);
        assert!(!v.converged);
    }

    #[test]
    fn optimal_truncation_beats_index_one() {
        let spec = SeriesSpec::default();
        for a in [2.0, 3.0, 10.0] {
            let truth = -digamma_series_ref(a, EULER).unwrap();
            let opt = (gamma0_asymptotic(a, &spec).unwrap().value - truth).abs();
            let one = (gamma0_asymptotic_truncated(a, 1).unwrap() - truth).abs();
            assert!(opt <= one, "a={a}");
        }
    }

    #[test]
    fn kfirst_examples() {
        let v = gamma0_stirling_kfirst(1.0, 0, 200_000).unwrap();
        assert!((v.value - (0.5 + 1.0 / 12.0)).abs() < 1e-6);
        let v = gamma0_stirling_kfirst(1.0, 12, 2000).unwrap();
        assert!(!v.regime_ok());
        assert!(gamma0_stirling_kfirst(1.0, 0, KFIRST_MAX_N + 1).is_err());
    }

    #[test]
    fn kfirst_matches_truncated_asymptotic_at_large_a() {
        let v = gamma0_stirling_kfirst(10.0, 3, 16_000_000).unwrap();
        let w = gamma0_asymptotic_truncated(10.0, 3).unwrap();
        assert!((v.value - w).abs() < 1e-10, "{}", v.value - w);
    }

    #[test]
    fn gamma1_examples() {
        let t = table();
        let spec = SeriesSpec::default();
        let cfg = OracleConfig::default();
        for (a, want, tol) in [(1.0, GAMMA1, 2e-4), (2.0, GAMMA1, 2e-5)] {
            let psi = digamma_series_ref(a, EULER).unwrap();
            let v = gamma1_stirling(a, 128, psi, &spec, &t).unwrap();
            assert!((v.value - want).abs() < tol, "a={a}: {}", v.value);
        }
        let psi = digamma_series_ref(0.5, EULER).unwrap();
        let v = gamma1_stirling(0.5, 128, psi, &spec, &t).unwrap();
        let want = gamma_limit_oracle(1, 0.5, &cfg).unwrap().value;
        assert!((v.value - want).abs() < 5e-4);
    }

    #[test]
    fn gamma1_signed_reading_is_far_off() {
        // s(2k+2,2)·s(n,2k+1)·(−1)ⁿ in place of the absolute values
        let t = table();
        let c = 2.0 * PI;
        let mut sum = NeumaierSum::new();
        for n in 1..=128 {
            let row = t.scaled_row(n).unwrap();
            for (k, u) in weighted_odd_columns(row, c) {
                let h = harmonic(2 * k + 1, 1).to_f64();
                // s(2k+2,2) > 0 and sign s(n,2k+1) = (−1)^{n+1}, so the
                // product with (−1)ⁿ is −|s(2k+2,2)||s(n,2k+1)|
                let sgn_k = if k % 2 == 0 { 1.0 } else { -1.0 };
                sum.add(-sgn_k * h * u / n as f64);
            }
        }
        let signed_value = -sum.value() / PI;
        assert!((signed_value - GAMMA1).abs() > 0.1);
    }

    fn bernoulli_even() -> [BigRational; 8] {
        let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        [
            q(1, 6),
            q(-1, 30),
            q(1, 42),
            q(-1, 30),
            q(5, 66),
            q(-691, 2730),
            q(7, 6),
            q(-3617, 510),
        ]
    }

    #[test]
    fn asymptotic_coefficients_match_bernoulli() {
        let b = bernoulli_even();
        for (n, bn) in b.iter().take(7).enumerate() {
            let fact: f64 = (1..=2 * n + 1).map(|i| i as f64).product();
            let lhs = fact * zeta_int(2 * n as u32 + 2).unwrap()
                / libm::pow(2.0 * PI, (2 * n + 2) as f64);
            let bn = crate::combinatorics::rational_to_f64(bn).abs();
            let rhs = bn / (2.0 * (2 * n + 2) as f64);
            assert!((lhs - rhs).abs() <= 1e-12 * rhs, "n={n}");
        }
    }
}
