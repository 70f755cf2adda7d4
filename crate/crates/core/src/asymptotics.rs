//! Limiting-case estimates of work, heat and efficiency when the two bath
//! curvatures differ by a small `ε`: `λ₁ = λ − ε`, `λ₂ = λ`.
//!
//! The large-curvature forms are written with the Jacobi theta function at
//! `z = 0`, `θ₃(q) = 1 + 2 Σ_{n≥1} q^{n²}`, at nomes `q = exp(−λ / 2T)`.

use serde::Serialize;

use crate::error::{check_finite, OttoError, Result};
use crate::numeric::CompensatedSum;
use crate::spectrum::CurvedSpectrum;
use crate::thermo::{gibbs_state, TruncationPolicy};

/// Series terms are dropped once the next one is below this fraction of the sum.
const SERIES_REL_TOL: f64 = 1e-16;

fn check_nome(q: f64) -> Result<f64> {
    if q.is_finite() && (0.0..1.0).contains(&q) {
        Ok(q)
    } else {
        Err(OttoError::domain(format!(
            "nome must satisfy 0 <= q < 1, got {q}"
        )))
    }
}

/// `Σ_{n≥1} weight(n) · exp(power(n) · ln_q)`, stopped by the relative rule.
///
/// Exponents grow like `n²`, so every term after the cut is smaller than the
/// first neglected one by a factor that is itself tiny.
fn nome_series(ln_q: f64, power: impl Fn(f64) -> f64, weight: impl Fn(f64) -> f64) -> f64 {
    let mut acc = CompensatedSum::default();
    let mut n = 1.0f64;
    loop {
        let base = (power(n) * ln_q).exp();
        let term = weight(n) * base;
        let current = acc.value();
        if base == 0.0 || (current > 0.0 && term < SERIES_REL_TOL * current) {
            break;
        }
        acc.add(term);
        n += 1.0;
    }
    acc.value()
}

/// `θ₃(q) = 1 + 2 Σ_{n≥1} q^{n²}` for `0 ≤ q < 1`.
pub fn theta3(q: f64) -> Result<f64> {
    let q = check_nome(q)?;
    if q == 0.0 {
        return Ok(1.0);
    }
    Ok(1.0 + 2.0 * nome_series(q.ln(), |n| n * n, |_| 1.0))
}

/// `dθ₃/dq = 2 Σ_{n≥1} n² q^{n² − 1}`.
pub fn theta3_prime(q: f64) -> Result<f64> {
    let q = check_nome(q)?;
    if q == 0.0 {
        return Ok(2.0);
    }
    Ok(2.0 * nome_series(q.ln(), |n| n * n - 1.0, |n| n * n))
}

/// `q θ₃′(q) / (θ₃(q) − 1) − 1`, taking the nome as `ln q`.
///
/// Numerator and denominator both behave like `2q` as `q → 0`. Dividing each
/// by `q` leaves series that start at 1, so the ratio stays accurate (and
/// tends to exactly 1) however small `q` gets, including past underflow.
fn theta_ratio_excess(ln_q: f64) -> f64 {
    let num = nome_series(ln_q, |n| n * n - 1.0, |n| n * n - 1.0);
    let den = nome_series(ln_q, |n| n * n - 1.0, |_| 1.0);
    num / den
}

/// Parameters for the limiting forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LimitParams {
    /// Curvature at the hot bath; the cold bath sits at `lambda − epsilon`.
    pub lambda: f64,
    pub epsilon: f64,
    /// `T_h − T_c`.
    pub theta_temp: f64,
    /// Reference temperature at which the expansion is taken.
    pub t_ref: f64,
}

impl LimitParams {
    pub fn validate(&self) -> Result<()> {
        check_finite("epsilon", self.epsilon, 0.0, true)?;
        check_finite("lambda", self.lambda, self.epsilon, false)?;
        check_finite("theta", self.theta_temp, 0.0, false)?;
        check_finite("t_ref", self.t_ref, 0.0, true)?;
        Ok(())
    }

    pub fn lambda_cold(&self) -> f64 {
        self.lambda - self.epsilon
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SmallCurvatureEstimate {
    pub w_approx: f64,
    pub q_hot_approx: f64,
    /// Two-level closed form.
    pub eta_s: f64,
    /// `w_approx / q_hot_approx` with all levels kept; diagnostic only.
    pub eta_many_level: f64,
}

/// Expansion to first order in `ε` and `θ` around `(λ, T_ref)`.
///
/// ```text
/// W   ≈ εθ/(Z T²) Σ E′_n E_n e^{−E_n/T}
/// Q_h ≈  θ/(Z T²) Σ E_n² e^{−E_n/T}
/// η_s ≈ (ε E′_0/E_0) (1 + (E_1 E′_1)/(E_0 E′_0) e^{−(E_1 − E_0)/T})
/// ```
pub fn small_curvature_estimate(
    params: &LimitParams,
    policy: &TruncationPolicy,
) -> Result<SmallCurvatureEstimate> {
    params.validate()?;
    let LimitParams {
        lambda,
        epsilon,
        theta_temp,
        t_ref,
    } = *params;
    let spectrum = CurvedSpectrum::new(lambda)?;
    // e^{−E_n/T} / Z is the thermal population at (λ, T_ref)
    let state = gibbs_state(lambda, t_ref, policy)?;

    let mut energy_slope = CompensatedSum::default();
    let mut energy_sq = CompensatedSum::default();
    for (n, p) in state.populations.iter().enumerate() {
        let e = spectrum.energy(n as u64);
        energy_slope.add(p * spectrum.energy_derivative(n as u64) * e);
        energy_sq.add(p * e * e);
    }
    let scale = theta_temp / (t_ref * t_ref);
    let w_approx = epsilon * scale * energy_slope.value();
    let q_hot_approx = scale * energy_sq.value();

    let (e0, e1) = (spectrum.energy(0), spectrum.energy(1));
    let (d0, d1) = (spectrum.energy_derivative(0), spectrum.energy_derivative(1));
    let boltzmann = (-spectrum.gap(0) / t_ref).exp();
    let eta_s = epsilon * d0 / e0 * (1.0 + (e1 * d1) / (e0 * d0) * boltzmann);

    Ok(SmallCurvatureEstimate {
        w_approx,
        q_hot_approx,
        eta_s,
        eta_many_level: epsilon * energy_slope.value() / energy_sq.value(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LargeCurvatureEstimate {
    pub w_approx: f64,
    pub q_hot_approx: f64,
    /// `ε / λ`, independent of temperature.
    pub eta_l: f64,
}

/// Leading order in `ε` for `γ ≈ λ`, where `E_n ≈ λ(n + 1)²/2`.
///
/// ```text
/// W   ≈ (ε/2) [R(q_h) − R(q_c)]
/// Q_h ≈ (λ/2) [R(q_h) − R(q_c)],     R(q) = q θ₃′(q) / (θ₃(q) − 1)
/// ```
pub fn large_curvature_estimate(
    lambda: f64,
    epsilon: f64,
    t_hot: f64,
    t_cold: f64,
) -> Result<LargeCurvatureEstimate> {
    check_finite("epsilon", epsilon, 0.0, true)?;
    check_finite("lambda", lambda, epsilon, false)?;
    check_finite("t_cold", t_cold, 0.0, true)?;
    check_finite("t_hot", t_hot, t_cold, true)?;

    let ln_q_hot = -lambda / (2.0 * t_hot);
    let ln_q_cold = -lambda / (2.0 * t_cold);
    // R(q) − 1 is formed directly; the bracket is a small difference of two
    // numbers near 1 at large λ
    let bracket = theta_ratio_excess(ln_q_hot) - theta_ratio_excess(ln_q_cold);

    Ok(LargeCurvatureEstimate {
        w_approx: 0.5 * epsilon * bracket,
        q_hot_approx: 0.5 * lambda * bracket,
        eta_l: epsilon / lambda,
    })
}

/// `(n + 1)²`: the large-curvature level shift `E_n(λ) − E_n(λ − ε)` in units
/// of `ε/2`.
pub fn large_gap_shift(n: u64) -> f64 {
    let m = n as f64 + 1.0;
    m * m
}
