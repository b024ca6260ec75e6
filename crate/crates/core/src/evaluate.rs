//! Dispatch from a method tag to the producer of γ_k(a).

use core::fmt;
use core::str::FromStr;

use crate::combinatorics::StirlingTable;
use crate::error::Error;
use crate::integral::{gamma0_u_integral, gamma_hermite, gamma_m_u_integral};
use crate::oracle::{Oracle, OracleConfig};
use crate::quadrature::QuadratureSpec;
use crate::series::{gamma0_asymptotic, gamma0_stirling_auto, gamma1_stirling, SeriesSpec};
use crate::value::{ComputedValue, Method, StieltjesQuery};

/// Where ψ(a) comes from when a series needs it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PsiSource {
    /// The direct series ψ(a) = −γ + Σ (a−1)/((n+1)(n+a)).
    #[default]
    SeriesRef,
    /// −γ₀(a) from a method.
    Method(Method),
}

impl fmt::Display for PsiSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PsiSource::SeriesRef => f.write_str("digamma_series_ref"),
            PsiSource::Method(m) => m.fmt(f),
        }
    }
}

impl FromStr for PsiSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "digamma_series_ref" {
            Ok(PsiSource::SeriesRef)
        } else {
            s.parse().map(PsiSource::Method)
        }
    }
}

/// Configuration and shared state for every method: the oracle, quadrature
/// and series settings and the Stirling table.
#[derive(Debug, Clone)]
pub struct Evaluator {
    oracle: Oracle,
    quad: QuadratureSpec,
    series: SeriesSpec,
    table: StirlingTable,
    psi_source: PsiSource,
}

impl Evaluator {
    pub fn new(
        oracle: OracleConfig,
        quad: QuadratureSpec,
        series: SeriesSpec,
    ) -> Result<Self, Error> {
        oracle.validate()?;
        quad.validate()?;
        series.validate()?;
        Ok(Self {
            oracle: Oracle::new(oracle)?,
            quad,
            table: StirlingTable::new(series.max_terms),
            series,
            psi_source: PsiSource::default(),
        })
    }

    /// Defaults with quadrature and series tolerance set to `tol`.
    pub fn with_tol(tol: f64) -> Result<Self, Error> {
        Self::new(
            OracleConfig::default(),
            QuadratureSpec::with_tol(tol),
            SeriesSpec {
                tol,
                ..SeriesSpec::default()
            },
        )
    }

    pub fn with_psi_source(mut self, source: PsiSource) -> Self {
        self.psi_source = source;
        self
    }

    pub fn oracle(&self) -> &Oracle {
        &self.oracle
    }

    pub fn quadrature(&self) -> &QuadratureSpec {
        &self.quad
    }

    pub fn series(&self) -> &SeriesSpec {
        &self.series
    }

    pub fn table(&self) -> &StirlingTable {
        &self.table
    }

    pub fn psi_source(&self) -> PsiSource {
        self.psi_source
    }

    pub fn evaluate(&self, method: Method, q: StieltjesQuery) -> Result<ComputedValue, Error> {
        let (k, a) = (q.k(), q.a());
        if !method.supports(k) {
            return Err(match method {
                Method::Oracle => Error::OutOfBudget {
                    k,
                    max: crate::oracle::MAX_ORACLE_K,
                },
                _ => Error::NotApplicable { method, k },
            });
        }
        match (method, k) {
            (Method::Oracle, _) => self.oracle.gamma(k, a),
            (Method::Hermite, _) => gamma_hermite(q, &self.quad),
            (Method::UIntegral, 0) => gamma0_u_integral(a, &self.quad),
            (Method::UIntegral, _) => gamma_m_u_integral(q, &self.quad),
            (Method::Asymptotic, _) => gamma0_asymptotic(a, &self.series),
            (Method::Stirling, 0) => gamma0_stirling_auto(a, &self.series, &self.table),
            (Method::Stirling, _) => {
                let psi = self.psi(self.psi_source, a)?;
                let n = self.series.max_terms.min(self.table.n_max());
                gamma1_stirling(a, n, psi, &self.series, &self.table)
            }
        }
    }

    /// ψ(a) from the given source.
    pub fn psi(&self, source: PsiSource, a: f64) -> Result<f64, Error> {
        match source {
            PsiSource::SeriesRef => self.oracle.digamma(a),
            PsiSource::Method(m) => Ok(-self.evaluate(m, StieltjesQuery::new(0, a)?)?.value),
        }
    }
}
