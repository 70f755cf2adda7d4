//! Gibbs equilibrium of the curved oscillator.
//!
//! Level sums are infinite; they are cut at the first `N` for which the
//! neglected tail is provably below `rel_tol` times the partial sum. Every gap
//! is at least `γ`, so beyond the last kept level the weights are dominated by
//! a geometric series of ratio `exp(−γ/T)`:
//!
//! ```text
//! Σ_{n≥N} w_n ≤ w_N / (1 − exp(−γ/T))
//! ```
//!
//! The mean energy needs the same guarantee for `Σ e_n w_n`, with excitation
//! energies `e_n = E_n − E_0`. Once `e_N > T` the ratio of consecutive terms is
//! at most `r = (1 + γ/e_N) exp(−γ/T)`, so that tail is below `e_N w_N / (1 − r)`.
//!
//! Weights are taken relative to the ground level, `w_n = exp(−e_n/T)`,
//! so nothing underflows before it is negligible.

use serde::Serialize;

use crate::error::{check_finite, OttoError, Result};
use crate::numeric::{compensated_sum, CompensatedSum};
use crate::spectrum::CurvedSpectrum;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TruncationPolicy {
    /// Bound on neglected tail / partial sum.
    pub rel_tol: f64,
    /// Hard cap on the number of summed levels.
    pub n_max: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            n_max: 100_000,
        }
    }
}

impl TruncationPolicy {
    pub fn new(rel_tol: f64, n_max: usize) -> Result<Self> {
        let policy = Self { rel_tol, n_max };
        policy.validate()?;
        Ok(policy)
    }

    pub fn validate(&self) -> Result<()> {
        check_finite("rel_tol", self.rel_tol, 0.0, true)?;
        if self.n_max < 2 {
            return Err(OttoError::domain(format!(
                "n_max must be at least 2, got {}",
                self.n_max
            )));
        }
        Ok(())
    }
}

/// Truncated partition function, stored relative to the ground energy.
///
/// `Z = shifted_sum · exp(−ground_energy / T)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionFunction {
    pub ground_energy: f64,
    pub temperature: f64,
    pub shifted_sum: f64,
    pub n_levels: usize,
    /// Certified bound on (neglected tail) / (partial sum).
    pub tail_bound: f64,
}

impl PartitionFunction {
    pub fn value(&self) -> f64 {
        self.shifted_sum * (-self.ground_energy / self.temperature).exp()
    }

    pub fn ln_value(&self) -> f64 {
        self.shifted_sum.ln() - self.ground_energy / self.temperature
    }
}

/// Shifted Boltzmann weights together with the certificate that produced them.
struct Weights {
    weights: Vec<f64>,
    sum: f64,
    tail_bound: f64,
}

fn truncated_weights(
    spectrum: &CurvedSpectrum,
    temperature: f64,
    policy: &TruncationPolicy,
) -> Result<Weights> {
    policy.validate()?;
    let beta = 1.0 / temperature;
    // 1 − exp(−γ/T), accurate for both tiny and huge γ/T
    let geometric_denominator = -(-spectrum.gamma() * beta).exp_m1();

    let ground = spectrum.energy(0);
    let gamma = spectrum.gamma();

    let mut weights = vec![1.0];
    let mut acc = CompensatedSum::default();
    let mut moment = CompensatedSum::default();
    acc.add(1.0);
    let mut bound = f64::INFINITY;
    for next in 1..=policy.n_max as u64 {
        let e_next = spectrum.excitation(next);
        let w_next = (-e_next * beta).exp();
        bound = w_next / geometric_denominator / acc.value();
        let moment_ok = w_next == 0.0 || {
            let ratio_gap = geometric_denominator - gamma / e_next * (-gamma * beta).exp();
            e_next > temperature
                && ratio_gap > 0.0
                && e_next * w_next / ratio_gap
                    <= policy.rel_tol * (ground * acc.value() + moment.value())
        };
        if bound <= policy.rel_tol && moment_ok {
            return Ok(Weights {
                weights,
                sum: acc.value(),
                tail_bound: bound,
            });
        }
        if weights.len() == policy.n_max {
            break;
        }
        weights.push(w_next);
        acc.add(w_next);
        moment.add(e_next * w_next);
    }
    Err(OttoError::Truncation {
        levels: weights.len(),
        achieved_bound: bound,
        rel_tol: policy.rel_tol,
    })
}

fn check_temperature(temperature: f64) -> Result<f64> {
    check_finite("temperature", temperature, 0.0, true)
}

pub fn partition_function(
    lambda: f64,
    temperature: f64,
    policy: &TruncationPolicy,
) -> Result<PartitionFunction> {
    let spectrum = CurvedSpectrum::new(lambda)?;
    let temperature = check_temperature(temperature)?;
    let w = truncated_weights(&spectrum, temperature, policy)?;
    Ok(PartitionFunction {
        ground_energy: spectrum.energy(0),
        temperature,
        shifted_sum: w.sum,
        n_levels: w.weights.len(),
        tail_bound: w.tail_bound,
    })
}

/// Thermal populations over the truncated level set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GibbsState {
    pub lambda: f64,
    pub temperature: f64,
    pub n_levels: usize,
    /// `P_n` for `n = 0..n_levels`, renormalized to sum to one.
    pub populations: Vec<f64>,
    pub partition_function: PartitionFunction,
    /// `⟨H⟩ = Σ P_n E_n`.
    pub mean_energy: f64,
}

impl GibbsState {
    /// `P_n`, zero beyond the truncation level.
    pub fn population(&self, n: usize) -> f64 {
        self.populations.get(n).copied().unwrap_or(0.0)
    }

    pub fn spectrum(&self) -> CurvedSpectrum {
        CurvedSpectrum::new(self.lambda).expect("validated at construction")
    }
}

pub fn gibbs_state(lambda: f64, temperature: f64, policy: &TruncationPolicy) -> Result<GibbsState> {
    let spectrum = CurvedSpectrum::new(lambda)?;
    let temperature = check_temperature(temperature)?;
    let w = truncated_weights(&spectrum, temperature, policy)?;

    let mut populations: Vec<f64> = w.weights.iter().map(|x| x / w.sum).collect();
    let norm = compensated_sum(populations.iter().copied());
    for p in &mut populations {
        *p /= norm;
    }
    let excitation = compensated_sum(
        populations
            .iter()
            .enumerate()
            .map(|(n, p)| p * spectrum.excitation(n as u64)),
    );

    Ok(GibbsState {
        lambda,
        temperature,
        n_levels: populations.len(),
        populations,
        partition_function: PartitionFunction {
            ground_energy: spectrum.energy(0),
            temperature,
            shifted_sum: w.sum,
            n_levels: w.weights.len(),
            tail_bound: w.tail_bound,
        },
        mean_energy: spectrum.energy(0) + excitation,
    })
}
