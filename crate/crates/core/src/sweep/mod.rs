//! Parameter grids over the cycle and its ingredients.
//!
//! A [`SweepSpec`] names one or two axes, pins every other parameter and lists
//! the quantities to evaluate. [`sweep_grid`] fills a [`SweepTable`] in
//! row-major order (last axis fastest). Rows are independent; with the
//! `parallel` feature they are computed on the rayon pool and collected back
//! in grid order, so the table does not depend on scheduling.

mod figures;
mod search;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use figures::{figure_dataset, figure_dataset_with_policy, FigureId};
pub use search::{
    find_mode_transition, find_peak_work, golden_section_max, PeakCandidate, PeakSearch,
    Transition, PEAK_PRESCAN_POINTS,
};

use crate::cycle::{outcome_from, strokes_from, Endpoints, Mode, OttoParams};
use crate::error::{OttoError, Result};
use crate::spectrum::CurvedSpectrum;
use crate::thermo::TruncationPolicy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Param {
    LambdaCold,
    LambdaHot,
    THot,
    TCold,
    LevelN,
}

impl Param {
    pub const ALL: [Param; 5] = [
        Param::LambdaCold,
        Param::LambdaHot,
        Param::THot,
        Param::TCold,
        Param::LevelN,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Param::LambdaCold => "lambda_cold",
            Param::LambdaHot => "lambda_hot",
            Param::THot => "t_hot",
            Param::TCold => "t_cold",
            Param::LevelN => "level_n",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = OttoError;

    fn from_str(s: &str) -> Result<Self> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| OttoError::domain(format!("unknown sweep parameter '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Work,
    QHot,
    QColdOut,
    Efficiency,
    Mode,
    /// `E_n(λ₂) − E_n(λ₁)`, the level shift over an adiabat.
    EnergyGapShift,
    /// `P_n^th(T_h, λ₂) − P_n^th(T_c, λ₁)`.
    PopulationShift,
    /// `(E_{n+1} − E_n) / E_0` at `lambda_hot`.
    GapRatio,
}

impl Quantity {
    pub const ALL: [Quantity; 8] = [
        Quantity::Work,
        Quantity::QHot,
        Quantity::QColdOut,
        Quantity::Efficiency,
        Quantity::Mode,
        Quantity::EnergyGapShift,
        Quantity::PopulationShift,
        Quantity::GapRatio,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Quantity::Work => "work",
            Quantity::QHot => "q_hot",
            Quantity::QColdOut => "q_cold_out",
            Quantity::Efficiency => "efficiency",
            Quantity::Mode => "mode",
            Quantity::EnergyGapShift => "energy_gap_shift",
            Quantity::PopulationShift => "population_shift",
            Quantity::GapRatio => "gap_ratio",
        }
    }

    fn needs_cycle(&self) -> bool {
        matches!(
            self,
            Quantity::Work
                | Quantity::QHot
                | Quantity::QColdOut
                | Quantity::Efficiency
                | Quantity::Mode
                | Quantity::PopulationShift
        )
    }

    fn required_params(&self) -> &'static [Param] {
        use Param::*;
        match self {
            Quantity::GapRatio => &[LambdaHot, LevelN],
            Quantity::EnergyGapShift => &[LambdaCold, LambdaHot, LevelN],
            Quantity::PopulationShift => &[LambdaCold, LambdaHot, THot, TCold, LevelN],
            _ => &[LambdaCold, LambdaHot, THot, TCold],
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = OttoError;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| OttoError::domain(format!("unknown sweep quantity '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisPoints {
    /// `count` evenly spaced points with both endpoints included exactly.
    Linspace { lo: f64, hi: f64, count: usize },
    /// An explicit curve family, in the given order.
    Values(Vec<f64>),
}

impl AxisPoints {
    pub fn points(&self) -> Vec<f64> {
        match self {
            AxisPoints::Linspace { lo, hi, count } => {
                let last = count.saturating_sub(1);
                (0..*count)
                    .map(|i| {
                        if i == last {
                            *hi
                        } else {
                            lo + (hi - lo) * i as f64 / last as f64
                        }
                    })
                    .collect()
            }
            AxisPoints::Values(v) => v.clone(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AxisPoints::Linspace { count, .. } => *count,
            AxisPoints::Values(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Axis {
    pub param: Param,
    pub points: AxisPoints,
}

impl Axis {
    pub fn linspace(param: Param, lo: f64, hi: f64, count: usize) -> Self {
        Self {
            param,
            points: AxisPoints::Linspace { lo, hi, count },
        }
    }

    pub fn values(param: Param, values: Vec<f64>) -> Self {
        Self {
            param,
            points: AxisPoints::Values(values),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSpec {
    pub axes: Vec<Axis>,
    pub fixed: BTreeMap<Param, f64>,
    pub quantities: Vec<Quantity>,
    pub policy: TruncationPolicy,
}

impl SweepSpec {
    pub fn new(axes: Vec<Axis>, fixed: BTreeMap<Param, f64>, quantities: Vec<Quantity>) -> Self {
        Self {
            axes,
            fixed,
            quantities,
            policy: TruncationPolicy::default(),
        }
    }

    pub fn with_policy(mut self, policy: TruncationPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn row_count(&self) -> usize {
        self.axes.iter().map(|a| a.points.len()).product()
    }

    pub fn columns(&self) -> Vec<String> {
        self.axes
            .iter()
            .map(|a| a.param.name().to_string())
            .chain(self.quantities.iter().map(|q| q.name().to_string()))
            .chain(std::iter::once(STATUS_COLUMN.to_string()))
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(OttoError::domain(msg));
        if self.axes.is_empty() || self.axes.len() > 2 {
            return invalid(format!(
                "a sweep needs 1 or 2 axes, got {}",
                self.axes.len()
            ));
        }
        if self.quantities.is_empty() {
            return invalid("a sweep needs at least one quantity".into());
        }
        self.policy.validate()?;
        for (i, axis) in self.axes.iter().enumerate() {
            if self.axes[..i].iter().any(|a| a.param == axis.param) {
                return invalid(format!("parameter {} used on two axes", axis.param));
            }
            if self.fixed.contains_key(&axis.param) {
                return invalid(format!("parameter {} is both swept and fixed", axis.param));
            }
            if axis.points.len() < 2 {
                return invalid(format!("axis {} needs at least 2 points", axis.param));
            }
            if let AxisPoints::Linspace { lo, hi, .. } = axis.points {
                if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                    return invalid(format!("axis {} needs finite lo < hi", axis.param));
                }
            }
        }
        for q in &self.quantities {
            for p in q.required_params() {
                if !self.fixed.contains_key(p) && !self.axes.iter().any(|a| a.param == *p) {
                    return invalid(format!("quantity {q} needs parameter {p}"));
                }
            }
        }
        for axis in &self.axes {
            for v in axis.points.points() {
                check_param(axis.param, v)?;
            }
        }
        for (p, v) in &self.fixed {
            check_param(*p, *v)?;
        }
        if self.quantities.iter().any(Quantity::needs_cycle) {
            for point in self.grid_points() {
                self.otto_params(&point)?;
            }
        }
        Ok(())
    }

    /// Every grid point as a full parameter assignment, in row order.
    fn grid_points(&self) -> Vec<BTreeMap<Param, f64>> {
        let axes: Vec<(Param, Vec<f64>)> = self
            .axes
            .iter()
            .map(|a| (a.param, a.points.points()))
            .collect();
        let mut rows = vec![self.fixed.clone()];
        for (param, values) in &axes {
            rows = rows
                .into_iter()
                .flat_map(|row| {
                    values.iter().map(move |v| {
                        let mut r = row.clone();
                        r.insert(*param, *v);
                        r
                    })
                })
                .collect();
        }
        rows
    }

    fn otto_params(&self, point: &BTreeMap<Param, f64>) -> Result<OttoParams> {
        Ok(OttoParams::new(
            point[&Param::LambdaCold],
            point[&Param::LambdaHot],
            point[&Param::THot],
            point[&Param::TCold],
        )?
        .with_policy(self.policy))
    }
}

fn check_param(param: Param, value: f64) -> Result<()> {
    let ok = match param {
        Param::LambdaCold | Param::LambdaHot => value.is_finite() && value >= 0.0,
        Param::THot | Param::TCold => value.is_finite() && value > 0.0,
        Param::LevelN => value.is_finite() && value >= 0.0 && value.fract() == 0.0,
    };
    if ok {
        Ok(())
    } else {
        Err(OttoError::domain(format!(
            "invalid value {value} for {param}"
        )))
    }
}

pub const STATUS_COLUMN: &str = "status";
pub const STATUS_OK: &str = "ok";

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Number(f64),
    /// Level indices.
    Integer(u64),
    Text(String),
    /// Efficiency outside engine mode, or any quantity on a failed row.
    NotApplicable,
}

impl Cell {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Number(x) => Some(*x),
            Cell::Integer(n) => Some(*n as f64),
            _ => None,
        }
    }

    pub fn as_text(&self) -> Option<&str> {
        match self {
            Cell::Text(s) => Some(s),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// The spec (including its truncation policy) that produced the table.
    pub spec: SweepSpec,
}

impl SweepTable {
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Numeric values of one column; non-numeric cells become `None`.
    pub fn column(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[i].as_f64()).collect())
    }

    pub fn column_text(&self, name: &str) -> Option<Vec<Option<&str>>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[i].as_text()).collect())
    }
}

fn evaluate_row(spec: &SweepSpec, point: &BTreeMap<Param, f64>) -> Vec<Cell> {
    let mut cells: Vec<Cell> = spec
        .axes
        .iter()
        .map(|a| match a.param {
            Param::LevelN => Cell::Integer(point[&a.param] as u64),
            _ => Cell::Number(point[&a.param]),
        })
        .collect();
    match evaluate_quantities(spec, point) {
        Ok(values) => {
            cells.extend(values);
            cells.push(Cell::Text(STATUS_OK.into()));
        }
        Err(err) => {
            cells.extend(spec.quantities.iter().map(|_| Cell::NotApplicable));
            cells.push(Cell::Text(status_of(&err).into()));
        }
    }
    cells
}

fn status_of(err: &OttoError) -> &'static str {
    match err {
        OttoError::Truncation { .. } => "truncation_failure",
        OttoError::Domain(_) => "domain_error",
        OttoError::Bracket { .. } => "bracket_error",
    }
}

fn evaluate_quantities(spec: &SweepSpec, point: &BTreeMap<Param, f64>) -> Result<Vec<Cell>> {
    let ends = if spec.quantities.iter().any(Quantity::needs_cycle) {
        Some(Endpoints::new(&spec.otto_params(point)?)?)
    } else {
        None
    };
    let outcome = ends.as_ref().map(|e| outcome_from(&strokes_from(e)));
    let level = point.get(&Param::LevelN).map(|n| *n as u64);
    let spectrum = |p: Param| CurvedSpectrum::new(point[&p]);

    spec.quantities
        .iter()
        .map(|q| {
            let out = outcome.as_ref();
            Ok(match q {
                Quantity::Work => Cell::Number(out.expect("cycle evaluated").work),
                Quantity::QHot => Cell::Number(out.expect("cycle evaluated").q_hot),
                Quantity::QColdOut => Cell::Number(out.expect("cycle evaluated").q_cold_out),
                Quantity::Efficiency => match out.expect("cycle evaluated").efficiency {
                    Some(eta) => Cell::Number(eta),
                    None => Cell::NotApplicable,
                },
                Quantity::Mode => Cell::Text(out.expect("cycle evaluated").mode.to_string()),
                Quantity::EnergyGapShift => {
                    let hot = spectrum(Param::LambdaHot)?;
                    let cold = spectrum(Param::LambdaCold)?;
                    Cell::Number(hot.energy_shift_from(&cold, level.expect("validated")))
                }
                Quantity::PopulationShift => {
                    let n = level.expect("validated") as usize;
                    Cell::Number(ends.as_ref().expect("cycle evaluated").population_shift(n))
                }
                Quantity::GapRatio => {
                    Cell::Number(spectrum(Param::LambdaHot)?.gap_ratio(level.expect("validated")))
                }
            })
        })
        .collect()
}

/// Evaluates every grid point of `spec`.
///
/// Invalid specs are rejected up front. Numerical failures at individual
/// points are recorded in the row's `status` column and do not abort the sweep.
pub fn sweep_grid(spec: &SweepSpec) -> Result<SweepTable> {
    spec.validate()?;
    let points = spec.grid_points();

    #[cfg(feature = "parallel")]
    let rows: Vec<Vec<Cell>> = {
        use rayon::prelude::*;
        points.par_iter().map(|p| evaluate_row(spec, p)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<Vec<Cell>> = points.iter().map(|p| evaluate_row(spec, p)).collect();

    Ok(SweepTable {
        columns: spec.columns(),
        rows,
        spec: spec.clone(),
    })
}

pub(crate) fn fixed(pairs: &[(Param, f64)]) -> BTreeMap<Param, f64> {
    pairs.iter().copied().collect()
}

/// The engine-mode rows' efficiencies, in row order.
pub fn engine_efficiencies(table: &SweepTable) -> Vec<f64> {
    let (Some(eta), Some(mode)) = (table.column("efficiency"), table.column_text("mode")) else {
        return Vec::new();
    };
    eta.into_iter()
        .zip(mode)
        .filter(|(_, m)| *m == Some(Mode::Engine.as_str()))
        .filter_map(|(e, _)| e)
        .collect()
}
