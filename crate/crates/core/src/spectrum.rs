//! Energy spectrum of the harmonic oscillator on a circle.
//!
//! With curvature `λ = 1/R²` the levels are
//!
//! ```text
//! E_n(λ) = γ(λ)(n + ½) + (λ/2) n²,     γ(λ) = (λ + √(λ² + 4)) / 2
//! ```
//!
//! which reduces to the flat-line oscillator `n + ½` at `λ = 0`. The `λn²/2`
//! term makes the spacing grow with `n`.

use crate::error::{check_finite, Result};

/// The level family `E_n(λ)` at one fixed curvature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvedSpectrum {
    lambda: f64,
    gamma: f64,
}

impl CurvedSpectrum {
    /// Fails for negative or non-finite curvature.
    pub fn new(lambda: f64) -> Result<Self> {
        let lambda = check_finite("curvature lambda", lambda, 0.0, false)?;
        Ok(Self {
            lambda,
            gamma: gamma_unchecked(lambda),
        })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `dγ/dλ = (1 + λ/√(λ² + 4)) / 2`.
    pub fn gamma_prime(&self) -> f64 {
        0.5 * (1.0 + self.lambda / self.lambda.hypot(2.0))
    }

    pub fn energy(&self, n: u64) -> f64 {
        let n = n as f64;
        self.gamma * (n + 0.5) + 0.5 * self.lambda * n * n
    }

    /// `E_n − E_0 = γn + λn²/2`, evaluated without cancellation.
    pub fn excitation(&self, n: u64) -> f64 {
        let n = n as f64;
        self.gamma * n + 0.5 * self.lambda * n * n
    }

    pub fn energy_derivative(&self, n: u64) -> f64 {
        let n = n as f64;
        self.gamma_prime() * (n + 0.5) + 0.5 * n * n
    }

    /// `E_{n+1} − E_n = γ + λ(2n + 1)/2`.
    pub fn gap(&self, n: u64) -> f64 {
        self.gamma + 0.5 * self.lambda * (2.0 * n as f64 + 1.0)
    }

    /// Gap in units of the ground energy, `(E_{n+1} − E_n) / E_0`.
    pub fn gap_ratio(&self, n: u64) -> f64 {
        self.gap(n) / self.energy(0)
    }

    /// `E_n(self) − E_n(other)`, formed from the coefficient differences so that
    /// equal curvatures give an exact zero.
    pub fn energy_shift_from(&self, other: &CurvedSpectrum, n: u64) -> f64 {
        let n = n as f64;
        (self.gamma - other.gamma) * (n + 0.5) + 0.5 * (self.lambda - other.lambda) * n * n
    }
}

fn gamma_unchecked(lambda: f64) -> f64 {
    0.5 * (lambda + lambda.hypot(2.0))
}

pub fn gamma(lambda: f64) -> Result<f64> {
    Ok(CurvedSpectrum::new(lambda)?.gamma())
}

pub fn energy(n: u64, lambda: f64) -> Result<f64> {
    Ok(CurvedSpectrum::new(lambda)?.energy(n))
}

pub fn energy_derivative(n: u64, lambda: f64) -> Result<f64> {
    Ok(CurvedSpectrum::new(lambda)?.energy_derivative(n))
}

pub fn gap_ratio(n: u64, lambda: f64) -> Result<f64> {
    Ok(CurvedSpectrum::new(lambda)?.gap_ratio(n))
}
