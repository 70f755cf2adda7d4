use thiserror::Error;

pub type Result<T, E = OttoError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OttoError {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The level sum hit `n_max` before the tail bound met `rel_tol`.
    #[error(
        "truncation failure: {levels} levels summed, tail bound {achieved_bound:e} exceeds {rel_tol:e}"
    )]
    Truncation {
        levels: usize,
        achieved_bound: f64,
        rel_tol: f64,
    },

    /// The root search bracket does not contain a sign change.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
}

impl OttoError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        OttoError::Domain(msg.into())
    }
}

/// Rejects NaN, infinities and values below `min` (or `<= min` when `strict`).
pub(crate) fn check_finite(name: &str, value: f64, min: f64, strict: bool) -> Result<f64> {
    let ok = value.is_finite() && if strict { value > min } else { value >= min };
    if ok {
        Ok(value)
    } else {
        let rel = if strict { ">" } else { ">=" };
        Err(OttoError::domain(format!(
            "{name} must be finite and {rel} {min}, got {value}"
        )))
    }
}
