//! Generalized Stieltjes constants γ_k(a), the coefficients of the Laurent
//! expansion of the Hurwitz zeta function about s = 1:
//!
//! ```text
//! ζ(s, a) = 1/(s−1) + Σ_k (−1)ᵏ γ_k(a) (s−1)ᵏ / k!
//! ```
//!
//! Five independent producers are provided (a Hermite-type integral,
//! unit-interval integrals, Stirling-number series, an asymptotic series and
//! an extrapolated limit relation), together with the combinatorial and
//! quadrature machinery they share and a few derived identities.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod combinatorics;
pub mod error;
pub mod evaluate;
pub mod identities;
pub mod integral;
pub mod oracle;
pub mod quadrature;
pub mod series;
pub mod sum;
pub mod value;

pub use error::Error;
pub use evaluate::{Evaluator, PsiSource};
pub use value::{ComputedValue, Diagnostics, Method, SeriesDiagnostics, StieltjesQuery};
