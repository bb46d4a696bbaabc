//! The excess rate `Delta`: sum-capacity minus the best total rate
//! available at the corner points.
//!
//! Closed-form upper/lower bounds exist for weak channels; for symmetric
//! channels they tighten further via the optimized sum-rate bounds. All
//! bounds clamp to zero from below, since the corner points lie inside the
//! capacity region by definition.

use rayon::prelude::*;

use crate::bound::BoundValue;
use crate::channel::{require_regime, require_symmetric_weak, ChannelParams, RegimeKind};
use crate::error::{Error, Result};
use crate::optim::GridSpec;
use crate::regions::{etw_sum_rate_terms, tt_sum_rate_terms};
use crate::sumrate::{
    activation_certificate, etkin_sum_upper, hk_sum_lower_half_bit, hk_sum_lower_optimized,
    kramer_sum_upper, tin_subclass, tin_sum_rate,
};

/// Every bound on `Delta` for one symmetric weak instance.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaReport {
    pub upper_simple: BoundValue,
    pub lower_simple: BoundValue,
    pub upper_improved: BoundValue,
    pub lower_improved: BoundValue,
    /// Bracket for the maximal total rate at the corner points.
    pub corner_total_lower: f64,
    pub corner_total_upper: f64,
    /// Fixed-gain large-power limits of the simple bounds.
    pub asymptotic_upper: f64,
    pub asymptotic_lower: f64,
}

/// Bracket for the maximal total rate `R1 + R2` over the two corner points
/// of a weak channel.
pub fn corner_total_bounds(params: &ChannelParams) -> Result<(f64, f64)> {
    require_regime(params, RegimeKind::Weak, "corner_total_bounds")?;
    let ChannelParams { p1, p2, a12, a21 } = *params;
    let lower = 0.5
        * (1.0 + p2 + a21 * p1)
            .log2()
            .max((1.0 + p1 + a12 * p2).log2());
    let cross = (1.0 + a21 * p1) * (1.0 + a12 * p2);
    let corrected = ((1.0 + p2 + a21 * p1).log2() + (1.0 + p1 / cross).log2())
        .max((1.0 + p1 + a12 * p2).log2() + (1.0 + p2 / cross).log2());
    let upper = 0.5 * corrected.min((1.0 + p1 + p2).log2());
    Ok((lower, upper))
}

/// Closed-form upper bound on `Delta` for a symmetric weak channel:
/// `(1/2) min{ log2((1+P)/(1+aP)),
///             log2(1 + P/(1+aP)^2 + aP [P + (1+aP)^2] / ((1+aP)(1+(a+1)P))) }`,
/// clamped at zero. Defined to be exactly zero at `a = 1`.
pub fn delta_upper_simple(p: f64, a: f64) -> Result<BoundValue> {
    if a == 1.0 {
        return Ok(BoundValue::valid(0.0).with_note("strong boundary"));
    }
    require_symmetric_weak(p, a, "delta_upper_simple")?;
    let ap = a * p;
    let m1 = ((1.0 + p) / (1.0 + ap)).log2();
    let m2 = (1.0
        + p / ((1.0 + ap) * (1.0 + ap))
        + ap * (p + (1.0 + ap) * (1.0 + ap)) / ((1.0 + ap) * (1.0 + (a + 1.0) * p)))
        .log2();
    let (value, tag) = if m1 <= m2 {
        (m1, "ratio")
    } else {
        (m2, "cross")
    };
    Ok(BoundValue::valid((0.5 * value).max(0.0)).with_term(tag))
}

/// Unclamped closed-form lower bound on `Delta` for a symmetric weak
/// channel; may be negative at moderate power. Used by the asymptotic
/// convergence probe.
pub fn delta_lower_simple_raw(p: f64, a: f64) -> Result<f64> {
    require_symmetric_weak(p, a, "delta_lower_simple_raw")?;
    let ap = a * p;
    let sum_lo = ((1.0 + (a + 1.0) * p).log2() + (1.0 + p / (1.0 + ap)).log2())
        .min(2.0 * (1.0 + ap + p / (1.0 + ap)).log2());
    let corner_hi = ((1.0 + (a + 1.0) * p).log2() + (1.0 + p / ((1.0 + ap) * (1.0 + ap))).log2())
        .min((1.0 + 2.0 * p).log2());
    Ok(0.5 * (sum_lo - corner_hi) - 1.0)
}

/// Clamped closed-form lower bound on `Delta`; valid only when the
/// half-bit sum-rate bound is active (symmetric power certificate).
pub fn delta_lower_simple(p: f64, a: f64) -> Result<BoundValue> {
    let raw = delta_lower_simple_raw(p, a)?;
    let bound = BoundValue::valid(raw.max(0.0));
    if activation_certificate(p).valid {
        Ok(bound)
    } else {
        Ok(bound.invalidate("power below the activation threshold"))
    }
}

/// Fixed-gain large-power limits: upper `(1/2) log2(1/a)`, lower
/// `max(0, (1/2) log2(1 + 1/a) - 1)`. They differ by at most one bit.
pub fn delta_asymptotic_bounds(a: f64) -> Result<(f64, f64)> {
    if !(a.is_finite() && a > 0.0 && a <= 1.0) {
        return Err(Error::invalid(format!(
            "delta_asymptotic_bounds needs a in (0,1], got {a}"
        )));
    }
    let upper = 0.5 * (1.0 / a).log2();
    let lower = (0.5 * (1.0 + 1.0 / a).log2() - 1.0).max(0.0);
    Ok((upper, lower))
}

/// Upper bound on `Delta` improved by the optimized sum-rate upper bounds
/// (still includes the simple closed form in its minimum).
pub fn delta_upper_improved(p: f64, a: f64, spec: Option<&GridSpec>) -> Result<BoundValue> {
    require_symmetric_weak(p, a, "delta_upper_improved")?;
    let params = ChannelParams::symmetric(p, a)?;
    let (ct_lower, _) = corner_total_bounds(&params)?;

    let etw = etw_sum_rate_terms(&params);
    let mut best = BoundValue::valid(etw[0].min(etw[1]).min(etw[2]) - ct_lower).with_term("etw");
    let etkin = etkin_sum_upper(p, a, spec)?;
    if etkin.value - ct_lower < best.value {
        best = BoundValue::valid(etkin.value - ct_lower).with_term("etkin");
    }
    let kramer = kramer_sum_upper(p, a)?;
    if kramer.value - ct_lower < best.value {
        best = BoundValue::valid(kramer.value - ct_lower).with_term("kramer");
    }
    let subclass = tin_subclass(p, a)?;
    if subclass.in_subclass {
        let ap = a * p;
        let exact_gap = 0.5 * (1.0 / (1.0 + ap) + p / ((1.0 + ap) * (1.0 + ap))).log2();
        if exact_gap < best.value {
            best = BoundValue::valid(exact_gap).with_term("tin_exact");
        }
    }
    let simple = delta_upper_simple(p, a)?;
    if simple.value < best.value {
        best = BoundValue::valid(simple.value).with_term("simple");
    }
    best.value = best.value.max(0.0);
    Ok(best)
}

/// Lower bound on `Delta` improved by the optimized Han-Kobayashi sum-rate
/// lower bound (includes the half-bit bound whenever it is valid).
pub fn delta_lower_improved(p: f64, a: f64, spec: Option<&GridSpec>) -> Result<BoundValue> {
    require_symmetric_weak(p, a, "delta_lower_improved")?;
    let params = ChannelParams::symmetric(p, a)?;
    let (_, ct_upper) = corner_total_bounds(&params)?;

    let hk = hk_sum_lower_optimized(p, a, spec)?;
    let mut best = BoundValue::valid(hk.value).with_term("hk_optimized");
    let half_bit = hk_sum_lower_half_bit(&params)?;
    if half_bit.valid && half_bit.value > best.value {
        best = BoundValue::valid(half_bit.value).with_term("hk_half_bit");
    }
    let tin = tin_sum_rate(p, a);
    if tin > best.value {
        best = BoundValue::valid(tin).with_term("tin");
    }
    best.value = (best.value - ct_upper).max(0.0);
    Ok(best)
}

/// Computes the full bound report for one symmetric weak instance.
pub fn delta_bounds_improved(p: f64, a: f64, spec: Option<&GridSpec>) -> Result<DeltaReport> {
    require_symmetric_weak(p, a, "delta_bounds_improved")?;
    let params = ChannelParams::symmetric(p, a)?;
    let (ct_lower, ct_upper) = corner_total_bounds(&params)?;
    let (asymptotic_upper, asymptotic_lower) = delta_asymptotic_bounds(a)?;
    Ok(DeltaReport {
        upper_simple: delta_upper_simple(p, a)?,
        lower_simple: delta_lower_simple(p, a)?,
        upper_improved: delta_upper_improved(p, a, spec)?,
        lower_improved: delta_lower_improved(p, a, spec)?,
        corner_total_lower: ct_lower,
        corner_total_upper: ct_upper,
        asymptotic_upper,
        asymptotic_lower,
    })
}

/// General (possibly asymmetric) closed-form upper bound on `Delta`.
pub fn delta_upper_simple_general(params: &ChannelParams) -> Result<BoundValue> {
    require_regime(params, RegimeKind::Weak, "delta_upper_simple_general")?;
    let sums = etw_sum_rate_terms(params);
    let (ct_lower, _) = corner_total_bounds(params)?;
    let value = sums[0].min(sums[1]).min(sums[2]) - ct_lower;
    Ok(BoundValue::valid(value.max(0.0)))
}

/// General (possibly asymmetric) closed-form lower bound on `Delta`.
/// Flagged invalid for asymmetric channels, where the sum-constraint
/// activation condition is unverified.
pub fn delta_lower_simple_general(params: &ChannelParams) -> Result<BoundValue> {
    require_regime(params, RegimeKind::Weak, "delta_lower_simple_general")?;
    let sums = tt_sum_rate_terms(params);
    let (_, ct_upper) = corner_total_bounds(params)?;
    let raw = sums[0].min(sums[1]).min(sums[2]) - 1.0 - ct_upper;
    let bound = BoundValue::valid(raw.max(0.0));
    if !params.is_symmetric() {
        return Ok(bound.invalidate("condition unverified"));
    }
    if activation_certificate(params.p1).valid {
        Ok(bound)
    } else {
        Ok(bound.invalidate("power below the activation threshold"))
    }
}

/// One row of a `Delta`-bound sweep over the cross-link gain.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaSweepRow {
    pub a: f64,
    pub report: DeltaReport,
}

/// Evaluates the full bound report over a gain grid, in parallel; the
/// output order follows the input grid.
pub fn delta_sweep(p: f64, gains: &[f64], spec: Option<&GridSpec>) -> Result<Vec<DeltaSweepRow>> {
    let spec = spec.copied();
    gains
        .par_iter()
        .map(|&a| {
            Ok(DeltaSweepRow {
                a,
                report: delta_bounds_improved(p, a, spec.as_ref())?,
            })
        })
        .collect()
}
