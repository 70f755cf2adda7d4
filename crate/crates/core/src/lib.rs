//! Quantum Otto cycle whose working substance is a harmonic oscillator
//! confined to a circle of curvature `λ = 1/R²`.
//!
//! The crate is organized bottom-up:
//!
//! * [`spectrum`]: closed-form energy levels `E_n(λ)` and their curvature derivative.
//! * [`thermo`]: Gibbs populations, partition function and internal energy with a
//!   certified truncation of the infinite level sums.
//! * [`cycle`]: the four strokes of one Otto cycle, net work, efficiency and the
//!   engine / refrigerator / dissipator classification.
//! * [`asymptotics`]: small- and large-curvature estimates and the Jacobi `θ₃` series.
//! * [`sweep`]: parameter grids, figure datasets, transition and peak searches.
//! * `cli` (feature `cli`): the `curved-otto` command line front end.
//!
//! Natural units are used throughout: `m = ħ = ω = k_B = 1`.

pub mod asymptotics;
#[cfg(feature = "cli")]
pub mod cli;
pub mod cycle;
mod error;
mod numeric;
pub mod spectrum;
pub mod sweep;
pub mod thermo;

pub use asymptotics::{
    large_curvature_estimate, large_gap_shift, small_curvature_estimate, theta3, theta3_prime,
    LargeCurvatureEstimate, LimitParams, SmallCurvatureEstimate,
};
pub use cycle::{
    carnot_efficiency, classify_mode, run_cycle, stroke_quantities, CycleOutcome, Mode, OttoParams,
    StrokeQuantities,
};
pub use error::{OttoError, Result};
pub use spectrum::{energy, energy_derivative, gamma, gap_ratio, CurvedSpectrum};
pub use sweep::{
    figure_dataset, find_mode_transition, find_peak_work, sweep_grid, FigureId, SweepSpec,
    SweepTable,
};
pub use thermo::{
    gibbs_state, partition_function, GibbsState, PartitionFunction, TruncationPolicy,
};
