//! Integral representations of γ_k(a).
//!
//! Hermite-type half-line integral, for k ≥ 0:
//!
//! ```text
//! γ_k(a) = lnᵏa/(2a) − ln^{k+1}a/(k+1)
//!        + (1/a) ∫₀^∞ [(y/a − i) lnᵏ(a − iy) + (y/a + i) lnᵏ(a + iy)]
//!                     / [(1 + y²/a²)(e^{2πy} − 1)] dy
//! ```
//!
//! Unit-interval integrals, with ℓ = ln(1−u):
//!
//! ```text
//! γ₀(a) = 1/(2a) − ln a
//!       + 1/(2πia) ∫₀¹ [1/(1 − ℓ/(2πia)) − 1/(1 + ℓ/(2πia))] du/u
//! γ_m(a) = lnᵐa/(2a) − ln^{m+1}a/(m+1)
//!       + 1/(2πi) ∫₀¹ [F(a − ℓ/(2πi)) − F(a + ℓ/(2πi))] du/u,   F(z) = lnᵐz / z
//! ```
//!
//! For real a the two bracket terms are complex conjugates. The production
//! path evaluates the real combination directly; [`IntegrandForm::Literal`]
//! evaluates both complex terms separately and takes the real part.
//! All logarithms use the principal branch; every argument lies in the open
//! right half-plane.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{check_positive, Error};
use crate::quadrature::{
    integrate_boltzmann_tail, integrate_unit_log, QuadratureResult, QuadratureSpec,
};
use crate::value::{ComputedValue, Diagnostics, Method, StieltjesQuery};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IntegrandForm {
    /// Real form from pairing the conjugate terms.
    #[default]
    Paired,
    /// Both complex terms evaluated separately.
    Literal,
}

fn powi(x: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, _| acc * x)
}

fn cpowi(z: Complex64, k: usize) -> Complex64 {
    (0..k).fold(Complex64::new(1.0, 0.0), |acc, _| acc * z)
}

/// Integrand of the half-line representation, including the 1/(e^{2πy}−1)
/// damping but not the outer 1/a.
#[derive(Debug, Clone, Copy)]
pub struct HermiteIntegrand {
    pub k: usize,
    pub a: f64,
}

impl HermiteIntegrand {
    fn damping(&self, y: f64) -> f64 {
        let r = y / self.a;
        (1.0 + r * r) * libm::expm1(2.0 * PI * y)
    }

    /// 2·Re[(y/a + i) lnᵏ(a + iy)] / [(1 + y²/a²)(e^{2πy} − 1)].
    pub fn eval(&self, y: f64) -> f64 {
        let l = cpowi(Complex64::new(self.a, y).ln(), self.k);
        let re = y / self.a * l.re - l.im;
        2.0 * re / self.damping(y)
    }

    /// Both bracket terms separately; the imaginary part cancels exactly.
    pub fn eval_literal(&self, y: f64) -> Complex64 {
        let r = y / self.a;
        let minus = Complex64::new(r, -1.0) * cpowi(Complex64::new(self.a, -y).ln(), self.k);
        let plus = Complex64::new(r, 1.0) * cpowi(Complex64::new(self.a, y).ln(), self.k);
        (minus + plus) / self.damping(y)
    }

    /// Limit at y → 0⁺: (lnᵏa − k lnᵏ⁻¹a)/(πa).
    pub fn origin_limit(&self) -> f64 {
        let la = libm::log(self.a);
        let lower = if self.k == 0 {
            0.0
        } else {
            self.k as f64 * powi(la, self.k - 1)
        };
        (powi(la, self.k) - lower) / (PI * self.a)
    }
}

fn to_value(method: Method, value: f64, scale: f64, r: &QuadratureResult) -> ComputedValue {
    ComputedValue {
        value,
        err_estimate: r.err_estimate * scale.abs(),
        method,
        work: r.nodes_used,
        converged: r.converged && value.is_finite(),
        diagnostics: Diagnostics::Quadrature { levels: r.levels },
    }
}

pub fn gamma_hermite(q: StieltjesQuery, spec: &QuadratureSpec) -> Result<ComputedValue, Error> {
    gamma_hermite_with(q, spec, IntegrandForm::Paired)
}

pub fn gamma_hermite_with(
    q: StieltjesQuery,
    spec: &QuadratureSpec,
    form: IntegrandForm,
) -> Result<ComputedValue, Error> {
    let (k, a) = (q.k(), q.a());
    let f = HermiteIntegrand { k, a };
    let r = match form {
        IntegrandForm::Paired => integrate_boltzmann_tail(|y| f.eval(y), f.origin_limit(), spec)?,
        IntegrandForm::Literal => {
            integrate_boltzmann_tail(|y| f.eval_literal(y).re, f.origin_limit(), spec)?
        }
    };
    let la = libm::log(a);
    let value = powi(la, k) / (2.0 * a) - powi(la, k + 1) / (k as f64 + 1.0) + r.value / a;
    Ok(to_value(Method::Hermite, value, 1.0 / a, &r))
}

/// Unit-interval integrand for γ₀(a), excluding the outer factor.
#[derive(Debug, Clone, Copy)]
pub struct Gamma0UIntegrand {
    pub a: f64,
}

impl Gamma0UIntegrand {
    /// w/(1+w²)/u with w = −ln(1−u)/(2πa); the outer factor is 1/(πa).
    pub fn eval(&self, u: f64, log1m_u: f64) -> f64 {
        let w = -log1m_u / (2.0 * PI * self.a);
        w / (1.0 + w * w) / u
    }

    /// [1/(1 − ℓ/(2πia)) − 1/(1 + ℓ/(2πia))]/u; the outer factor is 1/(2πia).
    pub fn eval_literal(&self, u: f64, log1m_u: f64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        let x = Complex64::new(log1m_u, 0.0) / Complex64::new(0.0, 2.0 * PI * self.a);
        (one / (one - x) - one / (one + x)) / u
    }

    /// Limit of [`Self::eval`] at u → 0⁺.
    pub fn origin_limit(&self) -> f64 {
        1.0 / (2.0 * PI * self.a)
    }
}

pub fn gamma0_u_integral(a: f64, spec: &QuadratureSpec) -> Result<ComputedValue, Error> {
    gamma0_u_integral_with(a, spec, IntegrandForm::Paired)
}

pub fn gamma0_u_integral_with(
    a: f64,
    spec: &QuadratureSpec,
    form: IntegrandForm,
) -> Result<ComputedValue, Error> {
    check_positive("a", a)?;
    let g = Gamma0UIntegrand { a };
    let (r, integral) = match form {
        IntegrandForm::Paired => {
            let r = integrate_unit_log(|u, l| g.eval(u, l), g.origin_limit(), spec)?;
            (r, r.value / (PI * a))
        }
        IntegrandForm::Literal => {
            // complex prefactor applied pointwise, rescaled to match Paired
            let pref = Complex64::new(1.0, 0.0) / Complex64::new(0.0, 2.0 * PI * a);
            let r = integrate_unit_log(
                |u, l| (pref * g.eval_literal(u, l)).re * PI * a,
                g.origin_limit(),
                spec,
            )?;
            (r, r.value / (PI * a))
        }
    };
    let value = 1.0 / (2.0 * a) - libm::log(a) + integral;
    Ok(to_value(Method::UIntegral, value, 1.0 / (PI * a), &r))
}

/// Unit-interval integrand for γ_m(a) with the 1/(2πi) prefactor folded in.
#[derive(Debug, Clone, Copy)]
pub struct GammaMUIntegrand {
    pub m: usize,
    pub a: f64,
}

impl GammaMUIntegrand {
    fn f(&self, z: Complex64) -> Complex64 {
        cpowi(z.ln(), self.m) / z
    }

    /// Im[F(a + iℓ/(2π))]/(πu).
    pub fn eval(&self, u: f64, log1m_u: f64) -> f64 {
        let z = Complex64::new(self.a, log1m_u / (2.0 * PI));
        self.f(z).im / (PI * u)
    }

    /// [F(a − ℓ/(2πi)) − F(a + ℓ/(2πi))]/(2πi·u).
    pub fn eval_literal(&self, u: f64, log1m_u: f64) -> Complex64 {
        let two_pi_i = Complex64::new(0.0, 2.0 * PI);
        let shift = Complex64::new(log1m_u, 0.0) / two_pi_i;
        let a = Complex64::new(self.a, 0.0);
        (self.f(a - shift) - self.f(a + shift)) / (two_pi_i * u)
    }

    /// Limit at u → 0⁺: (lnᵐa − m lnᵐ⁻¹a)/(2π²a²).
    pub fn origin_limit(&self) -> f64 {
        let la = libm::log(self.a);
        let lower = if self.m == 0 {
            0.0
        } else {
            self.m as f64 * powi(la, self.m - 1)
        };
        (powi(la, self.m) - lower) / (2.0 * PI * PI * self.a * self.a)
    }
}

pub fn gamma_m_u_integral(
    q: StieltjesQuery,
    spec: &QuadratureSpec,
) -> Result<ComputedValue, Error> {
    gamma_m_u_integral_with(q, spec, IntegrandForm::Paired)
}

pub fn gamma_m_u_integral_with(
    q: StieltjesQuery,
    spec: &QuadratureSpec,
    form: IntegrandForm,
) -> Result<ComputedValue, Error> {
    let (m, a) = (q.k(), q.a());
    if m == 0 {
        return Err(Error::Domain {
            what: "m (use the γ₀ integral for m = 0)",
            value: 0.0,
        });
    }
    let g = GammaMUIntegrand { m, a };
    let r = match form {
        IntegrandForm::Paired => integrate_unit_log(|u, l| g.eval(u, l), g.origin_limit(), spec)?,
        IntegrandForm::Literal => {
            integrate_unit_log(|u, l| g.eval_literal(u, l).re, g.origin_limit(), spec)?
        }
    };
    let la = libm::log(a);
    let value = powi(la, m) / (2.0 * a) - powi(la, m + 1) / (m as f64 + 1.0) + r.value;
    Ok(to_value(Method::UIntegral, value, 1.0, &r))
}
