//! Queries, results and method tags shared by every producer of γ_k(a).

use core::fmt;
use core::str::FromStr;

use crate::error::{check_positive, Error};

/// The five producers of γ_k(a).
///
/// Ordering follows the tag strings so that tables sorted by method are
/// lexicographic in their textual form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Asymptotic,
    Hermite,
    Oracle,
    Stirling,
    UIntegral,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Asymptotic,
        Method::Hermite,
        Method::Oracle,
        Method::Stirling,
        Method::UIntegral,
    ];

    pub const fn as_str(self) -> &'static str {
        match self {
            Method::Asymptotic => "asymptotic",
            Method::Hermite => "hermite",
            Method::Oracle => "oracle",
            Method::Stirling => "stirling",
            Method::UIntegral => "u_integral",
        }
    }

    /// Whether the method has a representation of γ_k for this k.
    pub const fn supports(self, k: usize) -> bool {
        match self {
            Method::Hermite | Method::UIntegral => true,
            Method::Oracle => k <= crate::oracle::MAX_ORACLE_K,
            Method::Stirling => k <= 1,
            Method::Asymptotic => k == 0,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or(Error::UnknownMethod)
    }
}

/// Identifies γ_k(a): Stieltjes index `k` and Hurwitz parameter `a > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StieltjesQuery {
    k: usize,
    a: f64,
}

impl StieltjesQuery {
    pub fn new(k: usize, a: f64) -> Result<Self, Error> {
        check_positive("a", a)?;
        Ok(Self { k, a })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn a(&self) -> f64 {
        self.a
    }
}

/// Work counters and flags for truncated series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesDiagnostics {
    pub terms_used: usize,
    /// Magnitude of the last included outer term.
    pub last_term: f64,
    /// Asymptotic series: index of the smallest term. Otherwise the last index.
    pub truncation_index: usize,
    /// Asymptotic series: terms decreased before truncation.
    pub regime_ok: bool,
    /// Sum of magnitudes of all contributions; compare with |value| to judge
    /// cancellation.
    pub conditioning: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleDiagnostics {
    /// Largest partial-sum index used.
    pub n_max: usize,
    /// Number of basis terms eliminated by the extrapolation.
    pub depth: usize,
    /// Successive extrapolation differences did not shrink.
    pub low_confidence: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Diagnostics {
    Quadrature { levels: usize },
    Series(SeriesDiagnostics),
    Oracle(OracleDiagnostics),
}

/// A value with its error estimate, producer and work counters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComputedValue {
    pub value: f64,
    pub err_estimate: f64,
    pub method: Method,
    /// Integrand evaluations or series terms.
    pub work: usize,
    pub converged: bool,
    pub diagnostics: Diagnostics,
}

impl ComputedValue {
    pub fn series(&self) -> Option<&SeriesDiagnostics> {
        match &self.diagnostics {
            Diagnostics::Series(s) => Some(s),
            _ => None,
        }
    }

    pub fn regime_ok(&self) -> bool {
        self.series().is_none_or(|s| s.regime_ok)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip_and_sort_lexicographically() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        let mut tags: [&str; 5] = Method::ALL.map(Method::as_str);
        tags.sort_unstable();
        assert_eq!(tags, Method::ALL.map(Method::as_str));
        assert_eq!("gauss".parse::<Method>(), Err(Error::UnknownMethod));
    }

    #[test]
    fn query_rejects_non_positive_a() {
        assert!(StieltjesQuery::new(0, 0.0).is_err());
        assert!(StieltjesQuery::new(0, -1.0).is_err());
        assert!(StieltjesQuery::new(0, f64::NAN).is_err());
        assert_eq!(StieltjesQuery::new(3, 0.5).unwrap().k(), 3);
    }
}
