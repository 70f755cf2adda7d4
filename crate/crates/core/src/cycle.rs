//! One quantum Otto cycle between a cold bath at curvature `λ₁` and a hot bath
//! at curvature `λ₂`.
//!
//! ```text
//!   A ──hot isochore──▶ B        A, B at λ₂;  B thermal at (T_h, λ₂)
//!   ▲                   │
//!   compression     expansion
//!   │                   ▼
//!   D ◀──cold isochore── C       C, D at λ₁;  D thermal at (T_c, λ₁)
//! ```
//!
//! The adiabats keep populations fixed, so A carries the cold thermal
//! populations on the λ₂ levels and C carries the hot ones on the λ₁ levels.
//!
//! Sign conventions: `q_hot > 0` is heat absorbed from the hot bath,
//! `q_cold_out > 0` is heat rejected into the cold bath, `work > 0` is work
//! extracted. The per-stroke works are defined so that they add up to the net
//! work.

use std::fmt;

use serde::Serialize;

use crate::error::{check_finite, OttoError, Result};
use crate::numeric::compensated_sum;
use crate::thermo::{gibbs_state, GibbsState, TruncationPolicy};

/// Values with magnitude at or below this are treated as zero when classifying.
pub const MODE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OttoParams {
    pub lambda_cold: f64,
    pub lambda_hot: f64,
    pub t_cold: f64,
    pub t_hot: f64,
    pub policy: TruncationPolicy,
}

impl OttoParams {
    /// Builds and validates a parameter set with the default truncation policy.
    ///
    /// `lambda_hot < lambda_cold` is allowed; that regime runs the cycle backwards.
    pub fn new(lambda_cold: f64, lambda_hot: f64, t_hot: f64, t_cold: f64) -> Result<Self> {
        let params = Self {
            lambda_cold,
            lambda_hot,
            t_cold,
            t_hot,
            policy: TruncationPolicy::default(),
        };
        params.validate()?;
        Ok(params)
    }

    pub fn with_policy(mut self, policy: TruncationPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_finite("lambda_cold", self.lambda_cold, 0.0, false)?;
        check_finite("lambda_hot", self.lambda_hot, 0.0, false)?;
        check_finite("t_cold", self.t_cold, 0.0, true)?;
        check_finite("t_hot", self.t_hot, 0.0, true)?;
        if self.t_hot <= self.t_cold {
            return Err(OttoError::domain(format!(
                "t_hot ({}) must exceed t_cold ({})",
                self.t_hot, self.t_cold
            )));
        }
        self.policy.validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Engine,
    Refrigerator,
    Dissipator,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Engine => "engine",
            Mode::Refrigerator => "refrigerator",
            Mode::Dissipator => "dissipator",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sign pattern of the three energy flows.
///
/// Engine: work out, heat in from the hot bath. Refrigerator: work in, heat
/// pumped out of the cold bath and dumped into the hot one. Anything else,
/// including exact ties, is a dissipator.
pub fn classify_mode(q_hot: f64, q_cold_absorbed: f64, work: f64) -> Mode {
    let pos = |x: f64| x > MODE_TOLERANCE;
    let neg = |x: f64| x < -MODE_TOLERANCE;
    if pos(work) && pos(q_hot) {
        Mode::Engine
    } else if neg(work) && neg(q_hot) && pos(q_cold_absorbed) {
        Mode::Refrigerator
    } else {
        Mode::Dissipator
    }
}

pub fn carnot_efficiency(t_hot: f64, t_cold: f64) -> Result<f64> {
    check_finite("t_cold", t_cold, 0.0, true)?;
    check_finite("t_hot", t_hot, 0.0, true)?;
    if t_hot <= t_cold {
        return Err(OttoError::domain(format!(
            "carnot efficiency needs t_hot > t_cold, got {t_hot} <= {t_cold}"
        )));
    }
    Ok(1.0 - t_cold / t_hot)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StrokeQuantities {
    /// Work released on B → C.
    pub w_expansion: f64,
    /// Work released on D → A (negative for an engine).
    pub w_compression: f64,
    pub q_hot: f64,
    pub q_cold_absorbed: f64,
    /// Net extracted work.
    pub work: f64,
    pub n_levels: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CycleOutcome {
    pub q_hot: f64,
    pub q_cold_out: f64,
    pub work: f64,
    /// `work / q_hot`, only in engine mode.
    pub efficiency: Option<f64>,
    /// `q_cold_absorbed / |work|`, only in refrigerator mode.
    pub cop: Option<f64>,
    pub mode: Mode,
    pub n_levels: usize,
}

impl CycleOutcome {
    pub fn q_cold_absorbed(&self) -> f64 {
        -self.q_cold_out
    }
}

/// The two thermal endpoint states of a cycle: B (hot) and D (cold).
pub(crate) struct Endpoints {
    pub hot: GibbsState,
    pub cold: GibbsState,
}

impl Endpoints {
    pub(crate) fn new(params: &OttoParams) -> Result<Self> {
        params.validate()?;
        Ok(Self {
            hot: gibbs_state(params.lambda_hot, params.t_hot, &params.policy)?,
            cold: gibbs_state(params.lambda_cold, params.t_cold, &params.policy)?,
        })
    }

    /// Common index range; the shorter population list is read as zero-padded.
    pub(crate) fn n_levels(&self) -> usize {
        self.hot.n_levels.max(self.cold.n_levels)
    }

    /// `P_n^B − P_n^A = P_n^th(T_h, λ₂) − P_n^th(T_c, λ₁)`.
    pub(crate) fn population_shift(&self, n: usize) -> f64 {
        self.hot.population(n) - self.cold.population(n)
    }
}

pub fn stroke_quantities(params: &OttoParams) -> Result<StrokeQuantities> {
    let ends = Endpoints::new(params)?;
    Ok(strokes_from(&ends))
}

pub(crate) fn strokes_from(ends: &Endpoints) -> StrokeQuantities {
    let hot = ends.hot.spectrum();
    let cold = ends.cold.spectrum();
    let levels = 0..ends.n_levels();

    // Populations on both sides sum to one, so every energy may be measured
    // from its own ground level. This removes the n = 0 term, whose
    // population difference is a cancellation of two numbers close to one.
    let q_hot = compensated_sum(
        levels
            .clone()
            .map(|n| hot.excitation(n as u64) * ends.population_shift(n)),
    );
    let q_cold_absorbed = compensated_sum(
        levels
            .clone()
            .map(|n| -cold.excitation(n as u64) * ends.population_shift(n)),
    );
    let work = compensated_sum(levels.clone().map(|n| {
        let m = n as u64;
        let shift = hot.energy_shift_from(&cold, m) - hot.energy_shift_from(&cold, 0);
        shift * ends.population_shift(n)
    }));

    let w_expansion = compensated_sum(
        levels
            .clone()
            .map(|n| ends.hot.population(n) * hot.energy_shift_from(&cold, n as u64)),
    );
    let w_compression = compensated_sum(
        levels.map(|n| ends.cold.population(n) * cold.energy_shift_from(&hot, n as u64)),
    );

    StrokeQuantities {
        w_expansion,
        w_compression,
        q_hot,
        q_cold_absorbed,
        work,
        n_levels: ends.n_levels(),
    }
}

pub(crate) fn outcome_from(strokes: &StrokeQuantities) -> CycleOutcome {
    let mode = classify_mode(strokes.q_hot, strokes.q_cold_absorbed, strokes.work);
    CycleOutcome {
        q_hot: strokes.q_hot,
        q_cold_out: -strokes.q_cold_absorbed,
        work: strokes.work,
        efficiency: (mode == Mode::Engine).then(|| strokes.work / strokes.q_hot),
        cop: (mode == Mode::Refrigerator).then(|| strokes.q_cold_absorbed / strokes.work.abs()),
        mode,
        n_levels: strokes.n_levels,
    }
}

pub fn run_cycle(params: &OttoParams) -> Result<CycleOutcome> {
    Ok(outcome_from(&stroke_quantities(params)?))
}
