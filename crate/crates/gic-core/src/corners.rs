//! Interval bounds on the corner points of the capacity region.
//!
//! For weak channels the corner points are not known exactly; each corner's
//! unknown coordinate is bracketed between the conjectured corner rate and
//! the minimum of an ETW-based and a Kramer-based upper bound. Mixed and
//! one-sided channels get the sharper statements available for them.

use std::fmt;

use crate::bound::BoundValue;
use crate::channel::{
    classify, conjectured_corner_rates, half_log2_1p, require_regime, ChannelParams, RatePair,
    RegimeKind,
};
use crate::error::{Error, Result};

/// Smallest weak gain accepted; below this the channel is treated as
/// ill-conditioned rather than silently reclassified as one-sided.
const MIN_WEAK_GAIN: f64 = 1e-12;

/// Which of the two minimized upper-bound terms is binding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CornerTerm {
    Etw,
    Kramer,
}

impl CornerTerm {
    pub fn as_str(&self) -> &'static str {
        match self {
            CornerTerm::Etw => "etw",
            CornerTerm::Kramer => "kramer",
        }
    }
}

impl fmt::Display for CornerTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Interval bounds for both corner points of a weak channel.
///
/// `corner_at_c1` brackets `R2` at the corner where `R1 = C1`;
/// `corner_at_c2` brackets `R1` at the corner where `R2 = C2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerBounds {
    pub corner_at_c1: Interval,
    pub corner_at_c2: Interval,
    pub active_at_c1: CornerTerm,
    pub active_at_c2: CornerTerm,
}

fn check_weak_gains(params: &ChannelParams, op: &'static str) -> Result<()> {
    require_regime(params, RegimeKind::Weak, op)?;
    if params.a12 < MIN_WEAK_GAIN || params.a21 < MIN_WEAK_GAIN {
        return Err(Error::invalid(format!(
            "{op}: cross-link gains below {MIN_WEAK_GAIN:e} are rejected"
        )));
    }
    Ok(())
}

/// The two upper-bound minimands for the corner at `R1 = C1` (bounding `R2`),
/// given the conjectured rate `r2_star`.
fn corner_minimands(params: &ChannelParams, r2_star: f64) -> (f64, f64) {
    let ChannelParams { p1, p2, a12, a21 } = *params;
    let etw = r2_star + half_log2_1p(p2 / ((1.0 + a21 * p1) * (1.0 + a12 * p2)));
    let kramer = half_log2_1p(p2 / (1.0 + p1));
    (etw, kramer)
}

/// Corner-point interval bounds for a weak channel. Ties between the two
/// upper-bound terms are tagged `Kramer`.
pub fn weak_corner_bounds(params: &ChannelParams) -> Result<CornerBounds> {
    check_weak_gains(params, "weak_corner_bounds")?;
    let stars = conjectured_corner_rates(params);
    let (etw1, kramer1) = corner_minimands(params, stars.r2);
    let swapped = params.swapped();
    let (etw2, kramer2) = corner_minimands(&swapped, stars.r1);
    let pick = |etw: f64, kramer: f64| {
        if etw < kramer {
            (etw, CornerTerm::Etw)
        } else {
            (kramer, CornerTerm::Kramer)
        }
    };
    let (hi1, active1) = pick(etw1, kramer1);
    let (hi2, active2) = pick(etw2, kramer2);
    Ok(CornerBounds {
        corner_at_c1: Interval {
            lo: stars.r2,
            hi: hi1,
        },
        corner_at_c2: Interval {
            lo: stars.r1,
            hi: hi2,
        },
        active_at_c1: active1,
        active_at_c2: active2,
    })
}

/// Which user's rate is pinned near its single-user capacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstrainedUser {
    User1,
    User2,
}

/// Upper bound on the unconstrained user's rate when the other user
/// transmits within `epsilon > 0` of its single-user capacity.
///
/// Tightens to the corner interval's upper endpoint as `epsilon -> 0`: the
/// ETW minimand carries a `+ 2 epsilon` slack, the Kramer minimand a linear
/// slack with slope `1 + (1 + P_c)/(a P_o)`.
pub fn rate_tradeoff_bound(
    params: &ChannelParams,
    epsilon: f64,
    constrained: ConstrainedUser,
) -> Result<BoundValue> {
    check_weak_gains(params, "rate_tradeoff_bound")?;
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::invalid(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    let p = match constrained {
        ConstrainedUser::User1 => *params,
        ConstrainedUser::User2 => params.swapped(),
    };
    // Bounding the rate of the *other* user (user 2 of `p`).
    let star = conjectured_corner_rates(&p).r2;
    let (etw, kramer) = corner_minimands(&p, star);
    let etw = etw + 2.0 * epsilon;
    let kramer = kramer + (1.0 + (1.0 + p.p1) / (p.a21 * p.p2)) * epsilon;
    let bound = if etw < kramer {
        BoundValue::valid(etw).with_term("etw")
    } else {
        BoundValue::valid(kramer).with_term("kramer")
    };
    Ok(bound)
}

/// Closed-form SNR threshold above which the ETW term beats Kramer's term
/// as the corner upper bound of a symmetric weak channel:
/// `P > (2a^2 - a + 1 + sqrt(5a^2 - 2a + 1)) / (2a^2 (1 - a))`.
pub fn etw_kramer_threshold(a: f64) -> Result<f64> {
    if !(a.is_finite() && a > 0.0 && a < 1.0) {
        return Err(Error::invalid(format!(
            "threshold is defined for gains in (0,1), got {a}"
        )));
    }
    Ok((2.0 * a * a - a + 1.0 + (5.0 * a * a - 2.0 * a + 1.0).sqrt()) / (2.0 * a * a * (1.0 - a)))
}

/// Upper bound on the corner rate `Rc` of a symmetric weak channel:
/// the minimum of the ETW term and Kramer's term. The active tag follows
/// the threshold comparison (`Etw` iff `p` strictly exceeds it).
pub fn symmetric_corner_upper(p: f64, a: f64) -> Result<BoundValue> {
    if !(a.is_finite() && a > 0.0 && a < 1.0) || !(p.is_finite() && p > 0.0) {
        return Err(Error::invalid(format!(
            "symmetric_corner_upper needs p > 0 and a in (0,1), got p={p}, a={a}"
        )));
    }
    let etw = half_log2_1p(a * p / (1.0 + p)) + half_log2_1p(p / ((1.0 + a * p) * (1.0 + a * p)));
    let kramer = half_log2_1p(p / (1.0 + p));
    let active = if p > etw_kramer_threshold(a)? {
        CornerTerm::Etw
    } else {
        CornerTerm::Kramer
    };
    Ok(BoundValue::valid(etw.min(kramer)).with_term(active.as_str()))
}

/// The two ETW/Kramer corner terms of a symmetric weak channel, exposed for
/// threshold diagnostics.
pub fn symmetric_corner_terms(p: f64, a: f64) -> Result<(f64, f64)> {
    if !(a.is_finite() && a > 0.0 && a < 1.0) || !(p.is_finite() && p > 0.0) {
        return Err(Error::invalid(format!(
            "symmetric_corner_terms needs p > 0 and a in (0,1), got p={p}, a={a}"
        )));
    }
    Ok((
        half_log2_1p(a * p / (1.0 + p)) + half_log2_1p(p / ((1.0 + a * p) * (1.0 + a * p))),
        half_log2_1p(p / (1.0 + p)),
    ))
}

/// Threshold curve samples for gains `a` in `[0.01, 0.99]` with step 0.002,
/// as `(a, threshold in dB)` pairs.
pub fn threshold_curve() -> Vec<(f64, f64)> {
    let n = ((0.99 - 0.01) / 0.002f64).round() as usize + 1;
    (0..n)
        .map(|i| {
            let a = 0.01 + 0.002 * i as f64;
            let t = etw_kramer_threshold(a).expect("grid stays inside (0,1)");
            (a, 10.0 * t.log10())
        })
        .collect()
}

/// Corner report for a mixed (or degraded) channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedCornerReport {
    /// Bound on the weak-side user's rate at the sum-rate corner (the
    /// strong-gain user at its single-user capacity, within `epsilon`).
    pub near_strong_corner: BoundValue,
    /// Bound on the strong-gain user's rate at the opposite corner; the
    /// slack term vanishing with `epsilon` has no closed form, so the
    /// reported value is the `epsilon = 0` limit.
    pub near_weak_corner: BoundValue,
    /// True when the report was computed on the index-swapped channel
    /// (input had `a21 >= 1 > a12`).
    pub swapped: bool,
}

/// Corner bounds for a mixed channel with `a12 >= 1 > a21 > 0` (the mirrored
/// layout is handled by swapping user indices).
///
/// When `1 - a12 < (a12 a21 - 1) P1`, decoding both messages at receiver 1
/// forces `R2` strictly below the conjectured rate; otherwise the
/// conjectured rate is the bound.
pub fn mixed_corner_report(params: &ChannelParams, epsilon: f64) -> Result<MixedCornerReport> {
    let class = classify(params);
    if !matches!(class.kind, RegimeKind::Mixed | RegimeKind::Degraded) {
        return Err(Error::WrongRegime {
            op: "mixed_corner_report",
            required: "mixed",
            actual: class.kind.to_string(),
        });
    }
    if !(epsilon.is_finite() && epsilon >= 0.0) {
        return Err(Error::invalid(format!(
            "epsilon must be nonnegative, got {epsilon}"
        )));
    }
    let (p, swapped) = if params.a12 >= 1.0 {
        (*params, false)
    } else {
        (params.swapped(), true)
    };
    let ChannelParams { p1, p2, a12, a21 } = p;
    let near_strong_corner = if 1.0 - a12 < (a12 * a21 - 1.0) * p1 {
        BoundValue::valid(half_log2_1p(p2 / (1.0 + a21 * p1)) + epsilon)
            .with_term("decode_both")
            .with_note("strictly smaller than conjecture")
    } else {
        BoundValue::valid(conjectured_corner_rates(&p).r2 + epsilon)
            .with_term("conjecture")
            .with_note("matches conjecture")
    };
    let near_weak_corner =
        BoundValue::valid(half_log2_1p(p1 / (1.0 + p2))).with_note("asymptotic in epsilon");
    Ok(MixedCornerReport {
        near_strong_corner,
        near_weak_corner,
        swapped,
    })
}

/// Corner data for a one-sided weak channel (`a12 = 0`, `a21 = a`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneSidedCorners {
    /// The exactly known corner, achieved by treating interference as
    /// noise at receiver 2; it attains the sum-rate.
    pub exact: RatePair,
    /// Interval for `R1` at the other corner `(R1, C2)`; tight as `a -> 1`.
    pub r1_interval: Interval,
}

/// Corner points of a one-sided weak channel with gain `a` into receiver 2.
pub fn one_sided_corner_bounds(p1: f64, p2: f64, a: f64) -> Result<OneSidedCorners> {
    if !(p1.is_finite() && p1 > 0.0 && p2.is_finite() && p2 > 0.0) {
        return Err(Error::invalid(format!(
            "powers must be positive, got p1={p1}, p2={p2}"
        )));
    }
    if !(a.is_finite() && a > 0.0 && a < 1.0) {
        return Err(Error::invalid(format!(
            "one-sided weak channel needs a in (0,1), got {a}"
        )));
    }
    Ok(OneSidedCorners {
        exact: RatePair {
            r1: half_log2_1p(p1),
            r2: half_log2_1p(p2 / (1.0 + a * p1)),
        },
        r1_interval: Interval {
            lo: half_log2_1p(a * p1 / (1.0 + p2)),
            hi: half_log2_1p(p1 / (1.0 + p2)),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::single_user_capacity;

    fn sym(p: f64, a: f64) -> ChannelParams {
        ChannelParams::symmetric(p, a).unwrap()
    }

    #[test]
    fn weak_corner_reference_intervals() {
        let b = weak_corner_bounds(&sym(100.0, 0.5)).unwrap();
        assert!((b.corner_at_c1.lo - 0.290096628287).abs() < 1e-9);
        assert!((b.corner_at_c1.hi - 0.317310248570).abs() < 1e-9);
        assert_eq!(b.active_at_c1, CornerTerm::Etw);
        assert_eq!(b.corner_at_c1.lo, b.corner_at_c2.lo);

        let b = weak_corner_bounds(&sym(1000.0, 0.5)).unwrap();
        assert!((b.corner_at_c1.lo - 0.292241001392).abs() < 1e-9);
        assert!((b.corner_at_c1.hi - 0.295109174763).abs() < 1e-9);
    }

    #[test]
    fn interval_collapses_under_strong_products() {
        let b = weak_corner_bounds(&sym(1e6, 0.5)).unwrap();
        assert!(b.corner_at_c1.width() <= 0.001);
    }

    #[test]
    fn weak_corner_regime_checks() {
        assert!(weak_corner_bounds(&sym(10.0, 1.2)).is_err());
        assert!(weak_corner_bounds(&ChannelParams::new(10.0, 10.0, 1e-13, 0.5).unwrap()).is_err());
    }

    #[test]
    fn tradeoff_reference_value() {
        let b = rate_tradeoff_bound(&sym(100.0, 0.5), 0.01, ConstrainedUser::User1).unwrap();
        assert!((b.value - 0.337310248570).abs() < 1e-9);
        assert_eq!(b.active_term, Some("etw"));
    }

    #[test]
    fn tradeoff_tightens_to_corner_interval() {
        let params = sym(100.0, 0.5);
        let hi = weak_corner_bounds(&params).unwrap().corner_at_c1.hi;
        let mut prev = f64::INFINITY;
        for eps in [0.1, 0.01, 1e-4, 1e-8] {
            let b = rate_tradeoff_bound(&params, eps, ConstrainedUser::User1).unwrap();
            assert!(b.value >= hi);
            assert!(b.value <= prev);
            prev = b.value;
        }
        assert!((prev - hi).abs() < 1e-6);
        assert!(rate_tradeoff_bound(&params, 0.0, ConstrainedUser::User1).is_err());
    }

    #[test]
    fn tradeoff_active_term_crossover_at_small_gain() {
        // At P=100, a=0.1 Kramer dominates the eps->0 corner bound, but its
        // slack slope 1 + (1+P)/(aP) = 11.1 hands the minimum to the ETW
        // term once eps exceeds about 6.8e-4.
        let params = sym(100.0, 0.1);
        let b = rate_tradeoff_bound(&params, 1e-4, ConstrainedUser::User1).unwrap();
        assert_eq!(b.active_term, Some("kramer"));
        let b = rate_tradeoff_bound(&params, 1e-3, ConstrainedUser::User1).unwrap();
        assert_eq!(b.active_term, Some("etw"));
    }

    #[test]
    fn threshold_reference_values() {
        assert!((etw_kramer_threshold(0.2).unwrap() - 27.725424859374).abs() < 1e-9);
        assert!((etw_kramer_threshold(0.1).unwrap() - 102.330802540516).abs() < 1e-9);
        assert!((etw_kramer_threshold(0.5).unwrap() - 8.472135955000).abs() < 1e-9);
        assert!(etw_kramer_threshold(0.0).is_err());
        assert!(etw_kramer_threshold(1.0).is_err());
    }

    #[test]
    fn threshold_diverges_at_both_ends() {
        assert!(etw_kramer_threshold(1e-3).unwrap() > 1e4);
        assert!(etw_kramer_threshold(1.0 - 1e-4).unwrap() > 1e4);
    }

    #[test]
    fn symmetric_corner_example_values() {
        let b = symmetric_corner_upper(100.0, 0.1).unwrap();
        assert!((b.value - 0.496420104214).abs() < 1e-9);
        assert_eq!(b.active_term, Some("kramer"));
        let (etw, kramer) = symmetric_corner_terms(100.0, 0.1).unwrap();
        assert!((etw - 0.502621852858).abs() < 1e-9);
        assert!((kramer - 0.496420104214).abs() < 1e-9);

        let b = symmetric_corner_upper(100.0, 0.5).unwrap();
        assert!((b.value - 0.317310248570).abs() < 1e-9);
        assert_eq!(b.active_term, Some("etw"));

        // close to a = 1 the threshold blows up, so Kramer wins
        let b = symmetric_corner_upper(100.0, 0.999).unwrap();
        assert_eq!(b.active_term, Some("kramer"));
    }

    #[test]
    fn active_term_flips_at_threshold() {
        for a in [0.1, 0.3, 0.5, 0.7] {
            let t = etw_kramer_threshold(a).unwrap();
            let below = symmetric_corner_upper(t * (1.0 - 1e-6), a).unwrap();
            let above = symmetric_corner_upper(t * (1.0 + 1e-6), a).unwrap();
            assert_eq!(below.active_term, Some("kramer"));
            assert_eq!(above.active_term, Some("etw"));
            // the raw terms agree with the threshold rule on both sides
            let (e, k) = symmetric_corner_terms(t * (1.0 - 1e-6), a).unwrap();
            assert!(e > k);
            let (e, k) = symmetric_corner_terms(t * (1.0 + 1e-6), a).unwrap();
            assert!(e < k);
        }
    }

    #[test]
    fn threshold_curve_grid() {
        let curve = threshold_curve();
        assert_eq!(curve.len(), 491);
        assert!((curve[0].0 - 0.01).abs() < 1e-12);
        assert!((curve.last().unwrap().0 - 0.99).abs() < 1e-12);
        let at_02 = curve.iter().find(|(a, _)| (a - 0.2).abs() < 1e-9).unwrap();
        assert!((at_02.1 - 14.428782099219).abs() < 1e-6);
    }

    #[test]
    fn mixed_corner_branches() {
        // branch 1: decoding both messages is the binding constraint
        let params = ChannelParams::new(10.0, 10.0, 2.0, 0.5).unwrap();
        let r = mixed_corner_report(&params, 0.0).unwrap();
        assert!((r.near_strong_corner.value - 0.707518749639).abs() < 1e-9);
        assert_eq!(r.near_strong_corner.active_term, Some("decode_both"));
        assert!(!r.swapped);

        // boundary arithmetic: a12 a21 = 1 keeps branch 1 since 1 - a12 < 0
        assert_eq!(classify(&params).kind, RegimeKind::Degraded);

        // branch 2: conjecture is the bound
        let params = ChannelParams::new(10.0, 10.0, 1.0, 0.9).unwrap();
        let r = mixed_corner_report(&params, 0.0).unwrap();
        let star = conjectured_corner_rates(&params).r2;
        assert!((r.near_strong_corner.value - star).abs() < 1e-12);
        assert_eq!(r.near_strong_corner.active_term, Some("conjecture"));
    }

    #[test]
    fn mixed_corner_swapped_layout() {
        let params = ChannelParams::new(10.0, 10.0, 0.5, 2.0).unwrap();
        let r = mixed_corner_report(&params, 0.0).unwrap();
        assert!(r.swapped);
        assert!((r.near_strong_corner.value - 0.707518749639).abs() < 1e-9);
        assert!(mixed_corner_report(&sym(10.0, 0.5), 0.0).is_err());
    }

    #[test]
    fn mixed_branch1_sharper_than_conjecture() {
        // branch-1 condition holds strictly: 1 - 2 < (2 * 0.8 - 1) * 10
        let params = ChannelParams::new(10.0, 10.0, 2.0, 0.8).unwrap();
        let r = mixed_corner_report(&params, 0.0).unwrap();
        let star = conjectured_corner_rates(&params).r2;
        assert!(r.near_strong_corner.value < star);
    }

    #[test]
    fn one_sided_reference_values() {
        let c = one_sided_corner_bounds(100.0, 100.0, 0.5).unwrap();
        assert!((c.exact.r1 - 3.329105741376).abs() < 1e-9);
        assert!((c.exact.r2 - 0.782989698677).abs() < 1e-9);
        assert!((c.r1_interval.lo - 0.290096628287).abs() < 1e-9);
        assert!((c.r1_interval.hi - 0.496420104214).abs() < 1e-9);
        assert!(one_sided_corner_bounds(100.0, 100.0, 1.0).is_err());
    }

    #[test]
    fn one_sided_interval_tight_as_gain_approaches_one() {
        let c = one_sided_corner_bounds(100.0, 100.0, 1.0 - 1e-9).unwrap();
        assert!(c.r1_interval.width() < 1e-8);
    }

    #[test]
    fn one_sided_corner_continuity_into_weak_region() {
        // the exact one-sided corner stays inside the ETW region of the
        // nearly one-sided weak channel
        let c = one_sided_corner_bounds(100.0, 100.0, 0.5).unwrap();
        let nearly = ChannelParams::new(100.0, 100.0, 1e-6, 0.5).unwrap();
        let region = crate::regions::etw_region(&nearly).unwrap();
        assert!(region.contains(c.exact, 1e-4));
    }

    #[test]
    fn weak_corner_upper_below_capacity() {
        for (p, a) in [(5.0, 0.2), (50.0, 0.5), (500.0, 0.9), (100.0, 0.05)] {
            let b = weak_corner_bounds(&sym(p, a)).unwrap();
            let c = single_user_capacity(p).unwrap();
            assert!(b.corner_at_c1.lo <= b.corner_at_c1.hi);
            assert!(b.corner_at_c1.hi <= c);
        }
    }
}
