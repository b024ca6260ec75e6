//! Stirling numbers of the first kind, harmonic numbers and the
//! exponential generating function Σ s(n,k) xⁿ/n! = lnᵏ(1+x)/k!.
//!
//! Signed convention throughout: s(n,k) has sign (−1)^{n+k}, so
//! Σ_k s(n,k) xᵏ = x(x−1)…(x−n+1).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub const DEFAULT_N_MAX: usize = 128;

/// Triangular table of s(n,k), exact and scaled by 1/n!.
///
/// Built once; read-only afterwards.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    n_max: usize,
    exact: Vec<Vec<BigInt>>,
    scaled: Vec<Vec<f64>>,
}

impl Default for StirlingTable {
    fn default() -> Self {
        Self::new(DEFAULT_N_MAX)
    }
}

impl StirlingTable {
    pub fn new(n_max: usize) -> Self {
        let mut exact: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        exact.push(vec![BigInt::one()]);
        for n in 0..n_max {
            let prev = &exact[n];
            let nn = BigInt::from(n);
            let mut row = vec![BigInt::zero(); n + 2];
            // s(n+1,k) = s(n,k-1) - n s(n,k)
            for (k, slot) in row.iter_mut().enumerate().skip(1) {
                let mut v = prev[k - 1].clone();
                if k <= n {
                    v -= &nn * &prev[k];
                }
                *slot = v;
            }
            exact.push(row);
        }

        let mut scaled: Vec<Vec<f64>> = Vec::with_capacity(n_max + 1);
        let mut rows = ScaledRows::new(usize::MAX);
        scaled.push(rows.row().to_vec());
        for _ in 0..n_max {
            rows.advance();
            scaled.push(rows.row().to_vec());
        }

        Self {
            n_max,
            exact,
            scaled,
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn check(&self, n: usize) -> Result<(), Error> {
        if n > self.n_max {
            Err(Error::Capacity {
                requested: n,
                limit: self.n_max,
            })
        } else {
            Ok(())
        }
    }

    /// s(n,k), zero for k > n.
    pub fn exact(&self, n: usize, k: usize) -> Result<BigInt, Error> {
        self.check(n)?;
        Ok(self.exact[n].get(k).cloned().unwrap_or_else(BigInt::zero))
    }

    /// t(n,k) = s(n,k)/n!, never forming n!.
    pub fn scaled(&self, n: usize, k: usize) -> Result<f64, Error> {
        self.check(n)?;
        Ok(self.scaled[n].get(k).copied().unwrap_or(0.0))
    }

    /// Row n of the scaled table, indices k = 0..=n.
    pub fn scaled_row(&self, n: usize) -> Result<&[f64], Error> {
        self.check(n)?;
        Ok(&self.scaled[n])
    }

    pub fn exact_row(&self, n: usize) -> Result<&[BigInt], Error> {
        self.check(n)?;
        Ok(&self.exact[n])
    }
}

/// Streams rows of t(n,k) = s(n,k)/n! for k ≤ `k_cols`, one n at a time.
///
/// Used where many rows but few columns are needed, so the triangle is
/// never stored.
#[derive(Debug, Clone)]
pub struct ScaledRows {
    n: usize,
    k_cols: usize,
    row: Vec<f64>,
}

impl ScaledRows {
    /// Starts at row 0 with t(0,0) = 1.
    pub fn new(k_cols: usize) -> Self {
        Self {
            n: 0,
            k_cols,
            row: vec![1.0],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// t(n, 0..=min(n, k_cols)) for the current n.
    pub fn row(&self) -> &[f64] {
        &self.row
    }

    /// t(n+1,k) = t(n,k−1)/(n+1) − n/(n+1)·t(n,k).
    pub fn advance(&mut self) {
        let n = self.n as f64;
        let inv = 1.0 / (n + 1.0);
        let ratio = n * inv;
        let len = (self.n + 2).min(self.k_cols.saturating_add(1));
        let mut next = vec![0.0; len];
        for (k, slot) in next.iter_mut().enumerate().skip(1) {
            let left = self.row.get(k - 1).copied().unwrap_or(0.0);
            let here = self.row.get(k).copied().unwrap_or(0.0);
            *slot = left * inv - ratio * here;
        }
        self.row = next;
        self.n += 1;
    }
}

/// Exact generalized harmonic number H_n^{(r)} = Σ_{k=1..n} 1/kʳ.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicValue {
    pub n: usize,
    pub r: u32,
    pub value: BigRational,
}

impl HarmonicValue {
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.value)
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn harmonic(n: usize, r: u32) -> HarmonicValue {
    let mut value = BigRational::zero();
    for k in 1..=n {
        value += BigRational::new(BigInt::one(), BigInt::from(k).pow(r));
    }
    HarmonicValue { n, r, value }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// s(m,k) for k ∈ 1..=4 via the harmonic-number closed forms, with m = n+1:
///
/// ```text
/// s(n+1,1) = (−1)ⁿ n!
/// s(n+1,2) = (−1)^{n+1} n! H_n
/// s(n+1,3) = (−1)ⁿ n!/2 [H_n² − H_n⁽²⁾]
/// s(n+1,4) = (−1)^{n+1} n!/6 [H_n³ − 3 H_n H_n⁽²⁾ + 2 H_n⁽³⁾]
/// ```
pub fn stirling_closed_form(m: usize, k: usize) -> Result<BigInt, Error> {
    if !(1..=4).contains(&k) {
        return Err(Error::UnsupportedOrder { k });
    }
    if m == 0 {
        return Err(Error::Domain {
            what: "m",
            value: 0.0,
        });
    }
    let n = m - 1;
    let h1 = harmonic(n, 1).value;
    let bracket = match k {
        1 => BigRational::one(),
        2 => h1,
        3 => {
            let h2 = harmonic(n, 2).value;
            (&h1 * &h1 - h2) / BigRational::from_integer(BigInt::from(2))
        }
        _ => {
            let h2 = harmonic(n, 2).value;
            let h3 = harmonic(n, 3).value;
            let three = BigRational::from_integer(BigInt::from(3));
            let two = BigRational::from_integer(BigInt::from(2));
            (&h1 * &h1 * &h1 - three * &h1 * h2 + two * h3)
                / BigRational::from_integer(BigInt::from(6))
        }
    };
    let value = bracket * BigRational::from_integer(factorial(n));
    debug_assert!(value.is_integer());
    let mut out = value.to_integer();
    // sign (−1)^{n+k+1}
    if (n + k + 1) % 2 == 1 {
        out = -out;
    }
    Ok(out)
}

/// Partial sum Σ_{n=0..N} s(n,k) xⁿ/n! and its limit lnᵏ(1+x)/k!.
///
/// Valid for x ∈ (−1, 1]; convergence at x = 1 is slow.
pub fn gf_partial(x: f64, k: usize, n_terms: usize) -> Result<(f64, f64), Error> {
    if x == -1.0 {
        return Err(Error::ExcludedPoint);
    }
    if !(x > -1.0 && x <= 1.0) {
        return Err(Error::Domain {
            what: "x",
            value: x,
        });
    }
    let mut rows = ScaledRows::new(k);
    let mut acc = crate::sum::NeumaierSum::new();
    let mut xn = 1.0;
    for n in 0..=n_terms {
        if n > 0 {
            rows.advance();
            xn *= x;
        }
        if let Some(t) = rows.row().get(k) {
            acc.add(t * xn);
        }
    }
    let kfact: f64 = (1..=k).map(|i| i as f64).product();
    let target = libm::pow(libm::log1p(x), k as f64) / kfact;
    Ok((acc.value(), target))
}

/// |s(n,k)| as a binary64 value.
pub fn stirling_abs_f64(v: &BigInt) -> f64 {
    v.abs().to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exact_examples() {
        let t = StirlingTable::default();
        assert_eq!(t.exact(3, 5).unwrap(), BigInt::zero());
        assert_eq!(t.exact(0, 0).unwrap(), BigInt::one());
        assert_eq!(t.exact(4, 2).unwrap(), BigInt::from(11));
        // s(4,k): -6, 11, -6, 1 for k = 1..4
        let row: Vec<i64> = (0..=4)
            .map(|k| t.exact(4, k).unwrap().to_i64().unwrap())
            .collect();
        assert_eq!(row, [0, -6, 11, -6, 1]);
    }

    #[test]
    fn capacity_is_enforced() {
        let t = StirlingTable::new(10);
        assert_eq!(
            t.exact(11, 2),
            Err(Error::Capacity {
                requested: 11,
                limit: 10
            })
        );
        assert!(t.scaled(11, 2).is_err());
        assert!(t.exact(10, 2).is_ok());
    }

    #[test]
    fn scaled_examples() {
        let t = StirlingTable::default();
        assert!((t.scaled(4, 2).unwrap() - 11.0 / 24.0).abs() < 1e-15);
        assert_eq!(t.scaled(2, 5).unwrap(), 0.0);
        assert_eq!(t.scaled(1, 1).unwrap(), 1.0);
    }

    #[test]
    fn structural_invariants() {
        let t = StirlingTable::new(40);
        assert_eq!(t.exact(0, 0).unwrap(), BigInt::one());
        for n in 1..=40 {
            assert_eq!(t.exact(n, n).unwrap(), BigInt::one());
            assert!(t.exact(n, 0).unwrap().is_zero());
            for k in 1..=n {
                let v = t.exact(n, k).unwrap();
                let expect_negative = (n + k) % 2 == 1;
                assert_eq!(v.is_negative(), expect_negative, "sign of s({n},{k})");
            }
            for k in n + 1..n + 4 {
                assert!(t.exact(n, k).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn row_sums() {
        let t = StirlingTable::new(20);
        let mut fact = BigInt::one();
        for n in 1..=20usize {
            fact *= BigInt::from(n);
            let row = t.exact_row(n).unwrap();
            let signed: BigInt = row.iter().sum();
            let unsigned: BigInt = row.iter().map(|v| v.abs()).sum();
            if n >= 2 {
                assert!(signed.is_zero(), "signed row sum n={n}");
            }
            assert_eq!(unsigned, fact, "unsigned row sum n={n}");
        }
    }

    #[test]
    fn scaled_matches_exact_and_own_recurrence() {
        let t = StirlingTable::default();
        let mut fact = 1.0f64;
        for n in 0..=20usize {
            if n > 0 {
                fact *= n as f64;
            }
            for k in 0..=n {
                let e = t.exact(n, k).unwrap().to_f64().unwrap();
                let s = t.scaled(n, k).unwrap();
                if e == 0.0 {
                    assert_eq!(s, 0.0);
                } else {
                    assert!(((s * fact - e) / e).abs() < 1e-12, "n={n} k={k}");
                }
            }
        }
        for n in 0..t.n_max() {
            for k in 1..=n + 1 {
                let lhs = t.scaled(n + 1, k).unwrap();
                let nf = n as f64;
                let rhs = t.scaled(n, k - 1).unwrap() / (nf + 1.0)
                    - nf / (nf + 1.0) * t.scaled(n, k).unwrap();
                assert!((lhs - rhs).abs() <= 1e-15 * rhs.abs(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(stirling_closed_form(2, 1).unwrap(), BigInt::from(-1));
        assert_eq!(stirling_closed_form(4, 2).unwrap(), BigInt::from(11));
        assert_eq!(stirling_closed_form(5, 3).unwrap(), BigInt::from(35));
        assert_eq!(
            stirling_closed_form(5, 5),
            Err(Error::UnsupportedOrder { k: 5 })
        );
        assert_eq!(
            stirling_closed_form(5, 0),
            Err(Error::UnsupportedOrder { k: 0 })
        );
    }

    #[test]
    fn closed_forms_agree_with_recurrence() {
        let t = StirlingTable::new(20);
        for m in 1..=20 {
            for k in 1..=4 {
                assert_eq!(
                    stirling_closed_form(m, k).unwrap(),
                    t.exact(m, k).unwrap(),
                    "s({m},{k})"
                );
            }
        }
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(4, 1).value, q(25, 12));
        assert_eq!(harmonic(0, 3).value, BigRational::zero());
        assert_eq!(harmonic(4, 2).value, q(205, 144));
        assert!((harmonic(4, 1).to_f64() - 25.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn harmonic_strictly_increasing() {
        for r in 1..=4 {
            let mut prev = harmonic(0, r).value;
            for n in 1..=15 {
                let h = harmonic(n, r).value;
                assert!(h > prev);
                prev = h;
            }
        }
    }

    #[test]
    fn generating_function_examples() {
        assert_eq!(gf_partial(0.0, 2, 10).unwrap(), (0.0, 0.0));
        let (p, t) = gf_partial(0.5, 1, 40).unwrap();
        assert!((t - 0.405_465_108_1).abs() < 1e-10);
        assert!((p - t).abs() < 1e-10);
        // At x = 1 the series alternates with terms ~H_n/n, so successive
        // partial sums straddle the target at a distance of about half a term.
        let (p, t) = gf_partial(1.0, 2, 2000).unwrap();
        let (q, _) = gf_partial(1.0, 2, 2001).unwrap();
        assert!((t - 0.240_226_507_0).abs() < 1e-10);
        assert!((p - t).abs() < 2.1e-3 && (q - t).abs() < 2.1e-3);
        assert!((p - t) * (q - t) < 0.0);
        assert_eq!(gf_partial(-1.0, 1, 10), Err(Error::ExcludedPoint));
        assert!(gf_partial(1.5, 1, 10).is_err());
    }

    #[test]
    fn generating_function_converges_inside_disc() {
        for k in 1..=6 {
            let (p, t) = gf_partial(0.5, k, 60).unwrap();
            assert!((p - t).abs() < 1e-12, "k={k}: {p} vs {t}");
            let (p, t) = gf_partial(-0.4, k, 80).unwrap();
            assert!((p - t).abs() < 1e-12, "k={k}: {p} vs {t}");
        }
    }
}
