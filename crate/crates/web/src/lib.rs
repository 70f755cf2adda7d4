//! Browser bindings for the curved Otto cycle.
//!
//! Three entry points back the demo page: a single cycle as JSON, a work and
//! efficiency curve over `λ₂`, and gap-ratio curves of the spectrum. Curves
//! come back as flat `Float64Array`s so the page can draw them without parsing.

use curved_otto::{run_cycle, CurvedSpectrum, OttoParams};
use wasm_bindgen::prelude::*;

/// Values per point in [`work_curve`]: `λ₂`, `W`, `η` (NaN outside engine mode), `q_hot`.
pub const WORK_STRIDE: usize = 4;

pub fn cycle_summary(
    lambda_cold: f64,
    lambda_hot: f64,
    t_hot: f64,
    t_cold: f64,
) -> Result<String, String> {
    let params =
        OttoParams::new(lambda_cold, lambda_hot, t_hot, t_cold).map_err(|e| e.to_string())?;
    let out = run_cycle(&params).map_err(|e| e.to_string())?;
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

fn grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..count)
            .map(|i| {
                if i == count - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (count - 1) as f64
                }
            })
            .collect(),
    }
}

pub fn work_points(
    lambda_cold: f64,
    t_hot: f64,
    t_cold: f64,
    lo: f64,
    hi: f64,
    count: usize,
) -> Result<Vec<f64>, String> {
    let mut out = Vec::with_capacity(count * WORK_STRIDE);
    for lambda_hot in grid(lo, hi, count) {
        let params =
            OttoParams::new(lambda_cold, lambda_hot, t_hot, t_cold).map_err(|e| e.to_string())?;
        let c = run_cycle(&params).map_err(|e| e.to_string())?;
        out.extend([
            lambda_hot,
            c.work,
            c.efficiency.unwrap_or(f64::NAN),
            c.q_hot,
        ]);
    }
    Ok(out)
}

/// Row-major `levels × count` table of `(E_{n+1} − E_n)/E_0` over `λ ∈ [0, lambda_max]`.
pub fn gap_ratio_points(levels: u32, lambda_max: f64, count: usize) -> Result<Vec<f64>, String> {
    let spectra = grid(0.0, lambda_max, count)
        .into_iter()
        .map(CurvedSpectrum::new)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    Ok((0..u64::from(levels))
        .flat_map(|n| spectra.iter().map(move |s| s.gap_ratio(n)))
        .collect())
}

#[wasm_bindgen]
pub fn cycle(
    lambda_cold: f64,
    lambda_hot: f64,
    t_hot: f64,
    t_cold: f64,
) -> Result<String, JsValue> {
    cycle_summary(lambda_cold, lambda_hot, t_hot, t_cold).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = workCurve)]
pub fn work_curve(
    lambda_cold: f64,
    t_hot: f64,
    t_cold: f64,
    lo: f64,
    hi: f64,
    count: usize,
) -> Result<Vec<f64>, JsValue> {
    work_points(lambda_cold, t_hot, t_cold, lo, hi, count).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = gapRatioCurves)]
pub fn gap_ratio_curves(levels: u32, lambda_max: f64, count: usize) -> Result<Vec<f64>, JsValue> {
    gap_ratio_points(levels, lambda_max, count).map_err(|e| JsValue::from_str(&e))
}
