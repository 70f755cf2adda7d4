//! Datasets behind the standard figure set.
//!
//! All cycle figures use `T_h = 1`, `T_c = 0.1`, except fig8 which sweeps `T_h`.
//! Axis ranges are wide enough to contain the work peaks, the efficiency
//! plateau and the `q_hot` sign change near `λ₂ ≈ 7.2`.

use std::fmt;
use std::str::FromStr;

use super::{fixed, sweep_grid, Axis, Param, Quantity, SweepSpec, SweepTable};
use crate::error::{OttoError, Result};
use crate::thermo::TruncationPolicy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    /// Gap ratios versus curvature for `n = 0..3`.
    Fig2,
    /// Level shift over the adiabats versus `n` and `λ₂`, `λ₁ = 0.5`.
    Fig4,
    /// Population shift on the hot isochore versus `n` and `λ₂`, `λ₁ = 0.5`.
    Fig5,
    /// Work versus `λ₂` for a family of `λ₁`.
    Fig6,
    /// Work over the `(λ₁, λ₂)` plane.
    Fig7,
    /// Work versus `T_h` for a family of `λ₂`, `λ₁ = 0.1`.
    Fig8,
    /// Efficiency versus `λ₂` for a family of `λ₁`.
    Fig9,
    /// Efficiency over the `(λ₁, λ₂)` plane.
    Fig10,
    /// Heats versus `λ₂`, `λ₁ = 0.1`.
    Fig11,
}

impl FigureId {
    pub const ALL: [FigureId; 9] = [
        FigureId::Fig2,
        FigureId::Fig4,
        FigureId::Fig5,
        FigureId::Fig6,
        FigureId::Fig7,
        FigureId::Fig8,
        FigureId::Fig9,
        FigureId::Fig10,
        FigureId::Fig11,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FigureId::Fig2 => "fig2",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
            FigureId::Fig6 => "fig6",
            FigureId::Fig7 => "fig7",
            FigureId::Fig8 => "fig8",
            FigureId::Fig9 => "fig9",
            FigureId::Fig10 => "fig10",
            FigureId::Fig11 => "fig11",
        }
    }

    pub fn spec(&self) -> SweepSpec {
        use Param::*;
        let hot_cold = [(THot, 1.0), (TCold, 0.1)];
        let families = vec![0.1, 0.3, 0.5, 1.0];
        let (axes, fx, quantities) = match self {
            FigureId::Fig2 => (
                vec![
                    Axis::linspace(LevelN, 0.0, 3.0, 4),
                    Axis::linspace(LambdaHot, 0.0, 10.0, 101),
                ],
                fixed(&[]),
                vec![Quantity::GapRatio],
            ),
            FigureId::Fig4 => (
                vec![
                    Axis::linspace(LevelN, 0.0, 7.0, 8),
                    Axis::linspace(LambdaHot, 0.0, 5.0, 51),
                ],
                fixed(&[(LambdaCold, 0.5)]),
                vec![Quantity::EnergyGapShift],
            ),
            FigureId::Fig5 => (
                vec![
                    Axis::linspace(LevelN, 0.0, 7.0, 8),
                    Axis::linspace(LambdaHot, 0.5, 5.0, 46),
                ],
                fixed(&[(LambdaCold, 0.5), hot_cold[0], hot_cold[1]]),
                vec![Quantity::PopulationShift],
            ),
            FigureId::Fig6 => (
                vec![
                    Axis::values(LambdaCold, families),
                    Axis::linspace(LambdaHot, 0.01, 10.0, 400),
                ],
                fixed(&hot_cold),
                vec![Quantity::Work],
            ),
            FigureId::Fig7 => (
                vec![
                    Axis::linspace(LambdaCold, 0.1, 5.0, 50),
                    Axis::linspace(LambdaHot, 0.1, 5.0, 50),
                ],
                fixed(&hot_cold),
                vec![Quantity::Work],
            ),
            FigureId::Fig8 => (
                vec![
                    Axis::values(LambdaHot, vec![0.15, 0.2, 0.25]),
                    Axis::linspace(THot, 0.2, 3.0, 57),
                ],
                fixed(&[(LambdaCold, 0.1), (TCold, 0.1)]),
                vec![Quantity::Work],
            ),
            FigureId::Fig9 => (
                vec![
                    Axis::values(LambdaCold, families),
                    Axis::linspace(LambdaHot, 0.01, 10.0, 200),
                ],
                fixed(&hot_cold),
                vec![Quantity::Efficiency, Quantity::Mode],
            ),
            FigureId::Fig10 => (
                vec![
                    Axis::linspace(LambdaCold, 0.01, 10.0, 50),
                    Axis::linspace(LambdaHot, 0.01, 10.0, 50),
                ],
                fixed(&hot_cold),
                vec![Quantity::Efficiency, Quantity::Mode],
            ),
            FigureId::Fig11 => (
                vec![Axis::linspace(LambdaHot, 0.01, 10.0, 200)],
                fixed(&[(LambdaCold, 0.1), hot_cold[0], hot_cold[1]]),
                vec![
                    Quantity::QHot,
                    Quantity::QColdOut,
                    Quantity::Work,
                    Quantity::Mode,
                ],
            ),
        };
        SweepSpec::new(axes, fx, quantities)
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureId {
    type Err = OttoError;

    fn from_str(s: &str) -> Result<Self> {
        FigureId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                OttoError::domain(format!(
                    "unknown figure id '{s}' (expected one of fig2, fig4..fig11)"
                ))
            })
    }
}

pub fn figure_dataset(id: FigureId) -> Result<SweepTable> {
    figure_dataset_with_policy(id, TruncationPolicy::default())
}

pub fn figure_dataset_with_policy(id: FigureId, policy: TruncationPolicy) -> Result<SweepTable> {
    sweep_grid(&id.spec().with_policy(policy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::engine_efficiencies;

    fn rows_where<'a>(
        t: &'a SweepTable,
        col: &str,
        value: f64,
    ) -> impl Iterator<Item = &'a Vec<super::super::Cell>> {
        let i = t.column_index(col).unwrap();
        t.rows.iter().filter(move |r| r[i].as_f64() == Some(value))
    }

    #[test]
    fn ids_parse_and_unknown_is_rejected() {
        for id in FigureId::ALL {
            assert_eq!(id.name().parse::<FigureId>().unwrap(), id);
        }
        assert!(matches!(
            "fig3".parse::<FigureId>(),
            Err(OttoError::Domain(_))
        ));
        assert!("fig12".parse::<FigureId>().is_err());
    }

    #[test]
    fn every_figure_spec_is_valid() {
        for id in FigureId::ALL {
            id.spec().validate().unwrap();
        }
    }

    #[test]
    fn fig2_flat_gap_ratio() {
        let t = figure_dataset(FigureId::Fig2).unwrap();
        let flat: Vec<_> = rows_where(&t, "lambda_hot", 0.0).collect();
        assert_eq!(flat.len(), 4);
        for r in flat {
            assert_eq!(r[2].as_f64(), Some(2.0));
        }
    }

    #[test]
    fn fig4_zero_shift_at_equal_curvature() {
        let t = figure_dataset(FigureId::Fig4).unwrap();
        let rows: Vec<_> = rows_where(&t, "lambda_hot", 0.5).collect();
        assert_eq!(rows.len(), 8);
        for r in rows {
            assert_eq!(r[2].as_f64(), Some(0.0));
        }
        // sign follows λ₂ − λ₁ and magnitude grows with n
        let shift = t.column("energy_gap_shift").unwrap();
        let lam = t.column("lambda_hot").unwrap();
        for (s, l) in shift.iter().zip(&lam) {
            let (s, l) = (s.unwrap(), l.unwrap());
            assert_eq!(s > 0.0, l > 0.5);
        }
    }

    #[test]
    fn fig11_heat_changes_sign_near_seven() {
        let t = figure_dataset(FigureId::Fig11).unwrap();
        let lam = t.column("lambda_hot").unwrap();
        let q = t.column("q_hot").unwrap();
        let flips: Vec<f64> = (1..lam.len())
            .filter(|&i| lam[i].unwrap() > 1.0)
            .filter(|&i| q[i].unwrap().signum() != q[i - 1].unwrap().signum())
            .map(|i| lam[i].unwrap())
            .collect();
        assert_eq!(flips.len(), 1, "{flips:?}");
        assert!(flips[0] > 7.0 && flips[0] <= 7.5);
    }

    #[test]
    fn fig9_efficiency_rises_then_levels_off() {
        for l1 in [0.1, 0.3, 0.5, 1.0] {
            let spec = SweepSpec::new(
                vec![Axis::linspace(Param::LambdaHot, 0.01, 10.0, 50)],
                fixed(&[
                    (Param::LambdaCold, l1),
                    (Param::THot, 1.0),
                    (Param::TCold, 0.1),
                ]),
                vec![Quantity::Efficiency, Quantity::Mode],
            );
            let etas = engine_efficiencies(&sweep_grid(&spec).unwrap());
            assert!(etas.len() > 10);
            assert!(etas.windows(2).all(|w| w[1] >= w[0]), "l1={l1}");
            assert!(etas.iter().all(|&e| e <= 0.9 + 1e-12));
        }
    }

    #[test]
    fn parallel_and_serial_evaluation_agree() {
        let spec = FigureId::Fig7.spec();
        let a = sweep_grid(&spec).unwrap();
        let b = sweep_grid(&spec).unwrap();
        assert_eq!(a, b);
        let serial: Vec<_> = spec
            .grid_points()
            .iter()
            .map(|p| super::super::evaluate_row(&spec, p))
            .collect();
        for (x, y) in a.rows.iter().zip(&serial) {
            for (u, v) in x.iter().zip(y) {
                match (u.as_f64(), v.as_f64()) {
                    (Some(p), Some(q)) => assert_eq!(p.to_bits(), q.to_bits()),
                    _ => assert_eq!(u, v),
                }
            }
        }
    }
}
