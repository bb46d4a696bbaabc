//! Channel parameters, regime classification and single-user rates.
//!
//! A two-user Gaussian interference channel in standard form is fully
//! described by the transmit powers `(P1, P2)` and the cross-link power
//! gains `(a12, a21)`; direct gains and noise variances are normalized
//! to 1. All rates are in bits per channel use (base-2 logarithms).

use std::fmt;

use crate::error::{Error, Result};

/// Standard-form parameters of a two-user Gaussian interference channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    /// Transmit power of user 1 (linear scale).
    pub p1: f64,
    /// Transmit power of user 2 (linear scale).
    pub p2: f64,
    /// Cross-link gain into receiver 1 (interference from user 2).
    pub a12: f64,
    /// Cross-link gain into receiver 2 (interference from user 1).
    pub a21: f64,
}

impl ChannelParams {
    /// Validates and builds a parameter set.
    ///
    /// Powers must be strictly positive and finite; cross-link gains must be
    /// nonnegative and finite. A channel with both gains equal to zero is two
    /// independent AWGN links and is rejected, since no interference regime
    /// applies to it.
    pub fn new(p1: f64, p2: f64, a12: f64, a21: f64) -> Result<Self> {
        for (name, v) in [("p1", p1), ("p2", p2), ("a12", a12), ("a21", a21)] {
            if !v.is_finite() {
                return Err(Error::invalid(format!("{name} must be finite, got {v}")));
            }
        }
        if p1 <= 0.0 || p2 <= 0.0 {
            return Err(Error::invalid(format!(
                "transmit powers must be positive, got p1={p1}, p2={p2}"
            )));
        }
        if a12 < 0.0 || a21 < 0.0 {
            return Err(Error::invalid(format!(
                "cross-link gains must be nonnegative, got a12={a12}, a21={a21}"
            )));
        }
        if a12 == 0.0 && a21 == 0.0 {
            return Err(Error::invalid(
                "both cross-link gains are zero; the channel has no interference".to_string(),
            ));
        }
        Ok(Self { p1, p2, a12, a21 })
    }

    /// Symmetric channel: equal powers and equal cross-link gains.
    pub fn symmetric(p: f64, a: f64) -> Result<Self> {
        Self::new(p, p, a, a)
    }

    pub fn is_symmetric(&self) -> bool {
        self.p1 == self.p2 && self.a12 == self.a21
    }

    /// Swaps the two users' roles (indices 1 and 2).
    pub fn swapped(&self) -> Self {
        Self {
            p1: self.p2,
            p2: self.p1,
            a12: self.a21,
            a21: self.a12,
        }
    }

    /// Regime classification of this channel.
    pub fn classify(&self) -> RegimeClass {
        classify(self)
    }
}

/// Interference regime of a two-user channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegimeKind {
    /// Both cross-link gains strictly between 0 and 1.
    Weak,
    /// Both gains at least 1.
    Strong,
    /// Gains at least `1 + P` of the interfered transmitter; capacity is
    /// unaffected by the interference.
    VeryStrong,
    /// Exactly one gain at least 1, the other in (0, 1).
    Mixed,
    /// Mixed shape with `a12 * a21 = 1`.
    Degraded,
    /// Exactly one gain zero, the other in (0, 1).
    OneSidedWeak,
    /// Exactly one gain zero, the other at least 1.
    OneSidedStrong,
}

impl fmt::Display for RegimeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RegimeKind::Weak => "weak",
            RegimeKind::Strong => "strong",
            RegimeKind::VeryStrong => "very strong",
            RegimeKind::Mixed => "mixed",
            RegimeKind::Degraded => "degraded",
            RegimeKind::OneSidedWeak => "one-sided weak",
            RegimeKind::OneSidedStrong => "one-sided strong",
        };
        f.write_str(s)
    }
}

/// Classification result: the regime kind plus a symmetry flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegimeClass {
    pub kind: RegimeKind,
    pub symmetric: bool,
}

impl RegimeClass {
    /// Human-readable description; notes the mixed lineage of degraded
    /// channels.
    pub fn description(&self) -> &'static str {
        match self.kind {
            RegimeKind::Weak => "weak interference (0 < a12, a21 < 1)",
            RegimeKind::Strong => "strong interference (a12, a21 >= 1)",
            RegimeKind::VeryStrong => "very strong interference; capacity unaffected",
            RegimeKind::Mixed => "mixed interference (one gain >= 1, the other in (0,1))",
            RegimeKind::Degraded => "degraded (mixed with a12 * a21 = 1)",
            RegimeKind::OneSidedWeak => "one-sided weak interference (one gain zero)",
            RegimeKind::OneSidedStrong => "one-sided strong interference (one gain zero)",
        }
    }
}

/// A pair of user rates in bits per channel use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePair {
    pub r1: f64,
    pub r2: f64,
}

impl RatePair {
    pub fn new(r1: f64, r2: f64) -> Result<Self> {
        if !(r1.is_finite() && r2.is_finite() && r1 >= 0.0 && r2 >= 0.0) {
            return Err(Error::invalid(format!(
                "rates must be finite and nonnegative, got ({r1}, {r2})"
            )));
        }
        Ok(Self { r1, r2 })
    }

    /// Swaps the two coordinates.
    pub fn swapped(&self) -> Self {
        Self {
            r1: self.r2,
            r2: self.r1,
        }
    }
}

/// `(1/2) log2(1 + x)`, the workhorse of every bound here.
#[inline]
pub(crate) fn half_log2_1p(x: f64) -> f64 {
    0.5 * (1.0 + x).log2()
}

/// Classifies a channel into its interference regime.
///
/// Total on valid parameters; very strong takes precedence over strong, and
/// degraded over mixed. Boundary gains classify by the non-strict
/// inequalities, so `a12 = a21 = 1` is strong.
pub fn classify(params: &ChannelParams) -> RegimeClass {
    let ChannelParams { p1, p2, a12, a21 } = *params;
    let symmetric = params.is_symmetric();
    let kind = if (a12 == 0.0) ^ (a21 == 0.0) {
        let g = if a12 == 0.0 { a21 } else { a12 };
        if g < 1.0 {
            RegimeKind::OneSidedWeak
        } else {
            RegimeKind::OneSidedStrong
        }
    } else if a12 >= 1.0 && a21 >= 1.0 {
        if a12 >= 1.0 + p1 && a21 >= 1.0 + p2 {
            RegimeKind::VeryStrong
        } else {
            RegimeKind::Strong
        }
    } else if a12 < 1.0 && a21 < 1.0 {
        RegimeKind::Weak
    } else if a12 * a21 == 1.0 {
        RegimeKind::Degraded
    } else {
        RegimeKind::Mixed
    };
    RegimeClass { kind, symmetric }
}

/// Capacity of a single-user AWGN channel with input power `p`:
/// `(1/2) log2(1 + p)` bits per channel use.
pub fn single_user_capacity(p: f64) -> Result<f64> {
    if !p.is_finite() || p < 0.0 {
        return Err(Error::invalid(format!(
            "power must be finite and nonnegative, got {p}"
        )));
    }
    Ok(half_log2_1p(p))
}

/// The conjectured corner rates `(R1*, R2*)`:
/// the largest rate one user can sustain while the other transmits at its
/// single-user capacity, assuming the loaded receiver decodes both messages.
///
/// `R1* = (1/2) log2(1 + a21 P1 / (1 + P2))`,
/// `R2* = (1/2) log2(1 + a12 P2 / (1 + P1))`.
pub fn conjectured_corner_rates(params: &ChannelParams) -> RatePair {
    let ChannelParams { p1, p2, a12, a21 } = *params;
    RatePair {
        r1: half_log2_1p(a21 * p1 / (1.0 + p2)),
        r2: half_log2_1p(a12 * p2 / (1.0 + p1)),
    }
}

pub(crate) fn require_regime(
    params: &ChannelParams,
    required: RegimeKind,
    op: &'static str,
) -> Result<()> {
    let class = classify(params);
    if class.kind != required {
        return Err(Error::WrongRegime {
            op,
            required: match required {
                RegimeKind::Weak => "weak",
                RegimeKind::Strong => "strong",
                RegimeKind::VeryStrong => "very strong",
                RegimeKind::Mixed => "mixed",
                RegimeKind::Degraded => "degraded",
                RegimeKind::OneSidedWeak => "one-sided weak",
                RegimeKind::OneSidedStrong => "one-sided strong",
            },
            actual: class.kind.to_string(),
        });
    }
    Ok(())
}

/// Validates a symmetric weak instance given as scalars.
pub(crate) fn require_symmetric_weak(p: f64, a: f64, op: &'static str) -> Result<()> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::invalid(format!(
            "{op}: power must be positive, got {p}"
        )));
    }
    if !(a.is_finite() && a > 0.0 && a < 1.0) {
        return Err(Error::WrongRegime {
            op,
            required: "weak symmetric",
            actual: format!("a = {a}"),
        });
    }
    Ok(())
}
