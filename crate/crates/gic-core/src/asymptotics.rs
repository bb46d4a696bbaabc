//! Closed-form asymptotics under coupled SNR/INR scaling.
//!
//! With the cross-link gain tied to the power as `a = P^(alpha - 1)`, the
//! sum-capacity grows like `d(alpha) log2 P` (the generalized degrees of
//! freedom) and the excess rate like `delta_slope(alpha) log2 P`. Both
//! admit exact piecewise closed forms; the convergence probe checks the
//! finite-power bounds against them.

use crate::error::{Error, Result};
use crate::excess::{delta_lower_simple_raw, delta_upper_simple};

/// The interference level `alpha >= 0` coupling INR to SNR via
/// `a = P^(alpha - 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferenceLevel {
    pub alpha: f64,
}

impl InterferenceLevel {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha >= 0.0) {
            return Err(Error::invalid(format!(
                "interference level must be finite and nonnegative, got {alpha}"
            )));
        }
        Ok(Self { alpha })
    }

    /// Cross-link gain at power `p`.
    pub fn gain_at(&self, p: f64) -> f64 {
        p.powf(self.alpha - 1.0)
    }
}

/// Generalized degrees of freedom of the symmetric channel:
/// piecewise `1 - alpha`, `alpha`, `1 - alpha/2`, `alpha/2`, `1` with
/// breakpoints at 1/2, 2/3, 1 and 2.
pub fn gdof(level: InterferenceLevel) -> f64 {
    let a = level.alpha;
    if a < 0.5 {
        1.0 - a
    } else if a < 2.0 / 3.0 {
        a
    } else if a < 1.0 {
        1.0 - a / 2.0
    } else if a < 2.0 {
        a / 2.0
    } else {
        1.0
    }
}

/// Asymptotic slope of the excess rate in `log2 P`:
/// `|1/2 - alpha|` below 2/3, `(1 - alpha)/2` up to 1, then zero.
/// Equals `gdof - 1/2` on `(0, 1)`.
pub fn delta_slope(level: InterferenceLevel) -> f64 {
    let a = level.alpha;
    if a < 2.0 / 3.0 {
        (0.5 - a).abs()
    } else if a < 1.0 {
        (1.0 - a) / 2.0
    } else {
        0.0
    }
}

/// Asymptotic fractional loss in total rate when operating at a corner
/// point: `delta_slope / gdof`, in closed form. Bounded in `[0, 1/2]`.
pub fn normalized_loss(level: InterferenceLevel) -> f64 {
    let a = level.alpha;
    if a < 0.5 {
        (1.0 - 2.0 * a) / (2.0 * (1.0 - a))
    } else if a < 2.0 / 3.0 {
        1.0 - 1.0 / (2.0 * a)
    } else if a < 1.0 {
        (1.0 - a) / (2.0 - a)
    } else {
        0.0
    }
}

/// One probe row: the simple bounds at `a = P^(alpha-1)`, normalized by
/// `log2 P`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeRow {
    pub p: f64,
    /// Clamped upper bound over `log2 P`.
    pub upper_norm: f64,
    /// Raw (unclamped) lower bound over `log2 P`, so convergence from below
    /// stays observable where the clamped bound is zero.
    pub lower_norm: f64,
}

/// Evaluates the normalized simple bounds along an ascending power list.
/// Both columns converge to [`delta_slope`]; for `alpha >= 1` the channel
/// is strong and the excess rate is exactly zero.
pub fn convergence_probe(level: InterferenceLevel, p_values: &[f64]) -> Result<Vec<ProbeRow>> {
    let alpha = level.alpha;
    if p_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid(
            "powers must be strictly ascending".to_string(),
        ));
    }
    if alpha >= 1.0 {
        for &p in p_values {
            if p <= 1.0 {
                return Err(Error::invalid(format!("powers must exceed 1, got {p}")));
            }
        }
        return Ok(p_values
            .iter()
            .map(|&p| ProbeRow {
                p,
                upper_norm: 0.0,
                lower_norm: 0.0,
            })
            .collect());
    }
    for &p in p_values {
        if p <= 2.551 {
            return Err(Error::invalid(format!(
                "powers must exceed 2.551 for the raw lower bound, got {p}"
            )));
        }
    }
    p_values
        .iter()
        .map(|&p| {
            let a = level.gain_at(p);
            let lp = p.log2();
            Ok(ProbeRow {
                p,
                upper_norm: delta_upper_simple(p, a)?.value / lp,
                lower_norm: delta_lower_simple_raw(p, a)? / lp,
            })
        })
        .collect()
}
