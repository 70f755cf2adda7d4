//! One-dimensional searches along `λ₂` at fixed `λ₁`, `T_h`, `T_c`.

use serde::Serialize;

use crate::cycle::{run_cycle, OttoParams};
use crate::error::{check_finite, OttoError, Result};
use crate::thermo::TruncationPolicy;

/// Width at which the transition bisection stops.
///
/// Much tighter than needed for locating the root; it keeps the residual
/// `q_hot(λ₂*)` small relative to the heat flows at the bracket ends.
const BISECTION_TOL: f64 = 1e-12;
const BISECTION_MAX_ITER: usize = 200;

const GOLDEN_TOL: f64 = 1e-5;
pub const PEAK_PRESCAN_POINTS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Transition {
    /// `λ₂*` where `q_hot` changes sign.
    pub lambda_hot: f64,
    pub q_hot_at_root: f64,
    pub q_hot_lo: f64,
    pub q_hot_hi: f64,
    /// Final bracket width.
    pub bracket_width: f64,
    pub iterations: usize,
}

fn check_search(
    lambda_cold: f64,
    t_hot: f64,
    t_cold: f64,
    bracket: (f64, f64),
    policy: &TruncationPolicy,
) -> Result<()> {
    OttoParams::new(lambda_cold, lambda_cold, t_hot, t_cold)?
        .with_policy(*policy)
        .validate()?;
    let (lo, hi) = bracket;
    check_finite("bracket lo", lo, 0.0, false)?;
    check_finite("bracket hi", hi, lo, true)?;
    Ok(())
}

/// Bisection on `q_hot(λ₂) = 0`, where the engine turns into a refrigerator.
pub fn find_mode_transition(
    lambda_cold: f64,
    t_hot: f64,
    t_cold: f64,
    bracket: (f64, f64),
    policy: &TruncationPolicy,
) -> Result<Transition> {
    check_search(lambda_cold, t_hot, t_cold, bracket, policy)?;
    let q_hot = |lambda_hot: f64| -> Result<f64> {
        let p = OttoParams::new(lambda_cold, lambda_hot, t_hot, t_cold)?.with_policy(*policy);
        Ok(run_cycle(&p)?.q_hot)
    };

    let (mut lo, mut hi) = bracket;
    let (f_lo, f_hi) = (q_hot(lo)?, q_hot(hi)?);
    if f_lo == 0.0 || f_hi == 0.0 || f_lo.signum() == f_hi.signum() {
        return Err(OttoError::Bracket { lo, hi, f_lo, f_hi });
    }

    let mut f_left = f_lo;
    let mut iterations = 0;
    while hi - lo > BISECTION_TOL && iterations < BISECTION_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = q_hot(mid)?;
        iterations += 1;
        if f_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if f_mid.signum() == f_left.signum() {
            lo = mid;
            f_left = f_mid;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    Ok(Transition {
        lambda_hot: root,
        q_hot_at_root: q_hot(root)?,
        q_hot_lo: f_lo,
        q_hot_hi: f_hi,
        bracket_width: hi - lo,
        iterations,
    })
}

/// Golden-section maximization of a unimodal `f` on `[lo, hi]`.
///
/// Returns `(argmax, max)` once the bracket is narrower than `tol`.
pub fn golden_section_max<E>(
    f: impl Fn(f64) -> std::result::Result<f64, E>,
    lo: f64,
    hi: f64,
    tol: f64,
) -> std::result::Result<(f64, f64), E> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    let x = 0.5 * (a + b);
    Ok((x, f(x)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeakCandidate {
    pub lambda_hot: f64,
    pub work: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeakSearch {
    /// True when the pre-scan shows exactly one local maximum.
    pub unimodal: bool,
    /// Refined local maxima, highest work first.
    pub candidates: Vec<PeakCandidate>,
}

impl PeakSearch {
    /// The peak when the scan was unimodal.
    pub fn peak(&self) -> Option<PeakCandidate> {
        if self.unimodal {
            self.candidates.first().copied()
        } else {
            None
        }
    }

    /// The highest candidate regardless of unimodality.
    pub fn best(&self) -> PeakCandidate {
        self.candidates[0]
    }
}

/// Local maxima of `f` on a uniform pre-scan, each refined by golden section
/// between its scan neighbours. Sorted by value, highest first.
fn scan_maxima<E>(
    f: impl Fn(f64) -> std::result::Result<f64, E> + Copy,
    lo: f64,
    hi: f64,
) -> std::result::Result<Vec<PeakCandidate>, E> {
    let last = PEAK_PRESCAN_POINTS - 1;
    let xs: Vec<f64> = (0..PEAK_PRESCAN_POINTS)
        .map(|i| {
            if i == last {
                hi
            } else {
                lo + (hi - lo) * i as f64 / last as f64
            }
        })
        .collect();
    let ws = xs
        .iter()
        .map(|&x| f(x))
        .collect::<std::result::Result<Vec<f64>, E>>()?;

    let maxima = (0..=last).filter(|&i| {
        let left = i == 0 || ws[i] > ws[i - 1];
        let right = i == last || ws[i] > ws[i + 1];
        left && right
    });

    let mut candidates = Vec::new();
    for i in maxima {
        let a = xs[i.saturating_sub(1)];
        let b = xs[(i + 1).min(last)];
        let (x, w) = golden_section_max(f, a, b, GOLDEN_TOL)?;
        // golden section never lands on an endpoint; keep the scan point if it is higher
        candidates.push(if ws[i] > w {
            PeakCandidate {
                lambda_hot: xs[i],
                work: ws[i],
            }
        } else {
            PeakCandidate {
                lambda_hot: x,
                work: w,
            }
        });
    }
    candidates.sort_by(|p, q| q.work.total_cmp(&p.work));
    Ok(candidates)
}

/// Maximizes net work over `λ₂ ∈ [lo, hi]`.
///
/// A uniform pre-scan of [`PEAK_PRESCAN_POINTS`] points locates local maxima
/// (endpoints count when they beat their neighbour). Each one is refined by
/// golden section between its scan neighbours. When the scan finds more than
/// one, all are reported and `unimodal` is false.
pub fn find_peak_work(
    lambda_cold: f64,
    t_hot: f64,
    t_cold: f64,
    range: (f64, f64),
    policy: &TruncationPolicy,
) -> Result<PeakSearch> {
    check_search(lambda_cold, t_hot, t_cold, range, policy)?;
    let work = |lambda_hot: f64| -> Result<f64> {
        let p = OttoParams::new(lambda_cold, lambda_hot, t_hot, t_cold)?.with_policy(*policy);
        Ok(run_cycle(&p)?.work)
    };

    let candidates = scan_maxima(work, range.0, range.1)?;
    Ok(PeakSearch {
        unimodal: candidates.len() == 1,
        candidates,
    })
}
