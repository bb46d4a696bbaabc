//! Upper and lower bounds on the sum-rate of weak channels.
//!
//! Upper bounds: the ETW closed form, Etkin's optimized genie bound and
//! Kramer's closed form. Lower bounds: the within-half-a-bit bound derived
//! from the Telatar-Tse outer region, the three-parameter Han-Kobayashi
//! bound, and plain treating-interference-as-noise (TIN). For a known
//! sub-class of weakly interfering symmetric channels TIN is exactly the
//! sum capacity.

use crate::bound::{clamp_roundoff, BoundValue};
use crate::channel::{
    half_log2_1p, require_regime, require_symmetric_weak, ChannelParams, RegimeKind,
};
use crate::error::{Error, Result};
use crate::optim::{optimize, Direction, GridSpec, OptimizationResult};
use crate::regions::{etw_sum_rate_terms, tt_sum_rate_terms};

/// Default grid for the three-parameter Han-Kobayashi maximization.
pub const DEFAULT_HK_GRID: GridSpec = GridSpec {
    points_per_axis: 41,
    refinement_rounds: 3,
    shrink_factor: 5.0,
};

/// Default grid for Etkin's two-parameter (per root sign) minimization.
pub const DEFAULT_ETKIN_GRID: GridSpec = GridSpec {
    points_per_axis: 61,
    refinement_rounds: 3,
    shrink_factor: 5.0,
};

const SUM_TERM_TAGS: [&str; 3] = ["rx1", "rx2", "cross"];

fn min3_tagged(terms: [f64; 3]) -> (f64, &'static str) {
    let mut best = (terms[0], SUM_TERM_TAGS[0]);
    for i in 1..3 {
        if terms[i] < best.0 {
            best = (terms[i], SUM_TERM_TAGS[i]);
        }
    }
    best
}

/// ETW upper bound on the sum-rate: the minimum of three closed-form terms.
pub fn etw_sum_upper(params: &ChannelParams) -> Result<BoundValue> {
    require_regime(params, RegimeKind::Weak, "etw_sum_upper")?;
    let (value, tag) = min3_tagged(etw_sum_rate_terms(params));
    Ok(BoundValue::valid(value).with_term(tag))
}

/// Sum-rate lower bound within half a bit per user of the Telatar-Tse outer
/// region: the minimum of that region's three sum constraints, minus one bit.
///
/// The bound needs one of the sum constraints to be active on the region
/// boundary. That is proved for symmetric channels with `P >= 2.551`
/// (see [`activation_certificate`]); for asymmetric channels the condition is
/// unverified and the value is flagged invalid, for diagnostics only.
pub fn hk_sum_lower_half_bit(params: &ChannelParams) -> Result<BoundValue> {
    require_regime(params, RegimeKind::Weak, "hk_sum_lower_half_bit")?;
    let (min_sum, tag) = min3_tagged(tt_sum_rate_terms(params));
    let value = min_sum - 1.0;
    let bound = BoundValue::valid(value).with_term(tag);
    if !params.is_symmetric() {
        return Ok(bound.invalidate("condition unverified"));
    }
    if activation_certificate(params.p1).valid {
        Ok(bound)
    } else {
        Ok(bound.invalidate("power below the activation threshold"))
    }
}

/// Certificate that a symmetric channel's power is large enough for the
/// half-bit sum-rate lower bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActivationCertificate {
    pub valid: bool,
    /// `P^4 + P^3 - 6 P^2 - 7 P - 2`; nonnegative iff `P >= 2.55003`.
    pub quartic_value: f64,
}

/// Evaluates the activation certificate at power `p`.
pub fn activation_certificate(p: f64) -> ActivationCertificate {
    let quartic_value = p * p * p * p + p * p * p - 6.0 * p * p - 7.0 * p - 2.0;
    ActivationCertificate {
        valid: quartic_value >= 0.0,
        quartic_value,
    }
}

/// Diagnostic margin `f_P(a)` behind the certificate: the gap between the
/// single-user cap and one third of the symmetric weighted-sum constraint.
/// `f_P(0) = 0`, and positivity on `(0, 1]` is what the certificate needs.
pub fn activation_margin(p: f64, a: f64) -> f64 {
    0.5 * (1.0 + p).log2()
        - ((1.0 + p + a * p).log2()
            + (1.0 + p / (1.0 + a * p)).log2()
            + (1.0 + a * p + p / (1.0 + a * p)).log2())
            / 6.0
}

/// Private/common power split and time-sharing parameters of the
/// Han-Kobayashi sum-rate expression.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HkSplit {
    /// User-1 private-power fraction in `[0, 1]`.
    pub u: f64,
    /// User-2 private-power fraction in `[0, 1]`.
    pub v: f64,
    /// Time/power-sharing parameter in `[0, 1/2]`.
    pub t: f64,
}

impl HkSplit {
    pub fn new(u: f64, v: f64, t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&u) || !(0.0..=1.0).contains(&v) || !(0.0..=0.5).contains(&t) {
            return Err(Error::invalid(format!(
                "split outside its box: u={u}, v={v}, t={t}"
            )));
        }
        Ok(Self { u, v, t })
    }
}

/// Achievable sum-rate of a symmetric weak channel for one Han-Kobayashi
/// split; maximize over the split to get the lower bound.
///
/// With `u = v = 1` and `t = 1/2` this reduces exactly to the TIN sum rate
/// `log2(1 + P / (1 + aP))`.
pub fn hk_rho(p: f64, a: f64, split: &HkSplit) -> f64 {
    let HkSplit { u, v, t } = *split;
    let q = 2.0 * t * p;
    let (ub, vb) = (1.0 - u, 1.0 - v);
    let d1 = 1.0 + u * q + a * v * q;
    let d2 = 1.0 + v * q + a * u * q;
    let direct = t * (1.0 + u * q / (1.0 + a * v * q)).log2()
        + t * (1.0 + v * q / (1.0 + a * u * q)).log2()
        + (1.0 - 2.0 * t) / 2.0 * (1.0 + 2.0 * (1.0 + 2.0 * t) * p).log2();
    let common = {
        let m1 = t / 2.0
            * ((1.0 + (ub * q + a * vb * q) / d1).log2()
                + (1.0 + (vb * q + a * ub * q) / d2).log2());
        let m2 = t * ((1.0 + ub * q / d1).log2() + (1.0 + vb * q / d2).log2());
        let m3 = t
            * ((1.0 + a * ub * q / (1.0 + a * u * q + v * q)).log2()
                + (1.0 + a * vb * q / d1).log2());
        m1.min(m2).min(m3)
    };
    direct + common
}

/// Maximizes the Han-Kobayashi sum-rate expression over its three
/// parameters on a deterministic refined grid (at least 11 points per axis).
pub fn hk_sum_lower_optimized(
    p: f64,
    a: f64,
    spec: Option<&GridSpec>,
) -> Result<OptimizationResult> {
    require_symmetric_weak(p, a, "hk_sum_lower_optimized")?;
    let spec = spec.copied().unwrap_or(DEFAULT_HK_GRID);
    if spec.points_per_axis < 11 {
        return Err(Error::invalid(format!(
            "hk_sum_lower_optimized needs at least 11 grid points per axis, got {}",
            spec.points_per_axis
        )));
    }
    optimize(
        |x| {
            Some(hk_rho(
                p,
                a,
                &HkSplit {
                    u: x[0],
                    v: x[1],
                    t: x[2],
                },
            ))
        },
        &[(0.0, 1.0), (0.0, 1.0), (0.0, 0.5)],
        Direction::Maximize,
        &spec,
    )
}

/// One point of Etkin's genie parameterization.
///
/// `rho = alpha sigma sqrt(a) +/- sqrt((1 - alpha^2)(1 - sigma^2 a))` and
/// `gamma = alpha^2 - 2 alpha rho sigma sqrt(a) + sigma^2 a`; combinations
/// where a square-root argument or a log argument goes negative are
/// infeasible and skipped by the optimizer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtkinParams {
    /// In `[-1, 1]`.
    pub alpha: f64,
    /// In `[0, 1/sqrt(a)]`.
    pub sigma: f64,
    /// Sign choice in the `rho` root.
    pub positive_root: bool,
}

impl EtkinParams {
    /// Derived `(rho, gamma)`, or `None` when infeasible.
    pub fn derived(&self, a: f64) -> Option<(f64, f64)> {
        let ra = a.sqrt();
        let radicand = (1.0 - self.alpha * self.alpha) * (1.0 - self.sigma * self.sigma * a);
        let radicand = clamp_roundoff(radicand);
        if radicand < 0.0 {
            return None;
        }
        let root = radicand.sqrt();
        let rho = self.alpha * self.sigma * ra + if self.positive_root { root } else { -root };
        if rho.abs() > 1.0 + 1e-12 {
            return None;
        }
        let rho = rho.clamp(-1.0, 1.0);
        let gamma = self.alpha * self.alpha - 2.0 * self.alpha * rho * self.sigma * ra
            + self.sigma * self.sigma * a;
        let gamma = clamp_roundoff(gamma);
        if gamma < 0.0 {
            return None;
        }
        Some((rho, gamma))
    }
}

/// Etkin's sum-rate upper bound at one parameter point, or `None` when the
/// point is infeasible.
pub fn etkin_objective(p: f64, a: f64, params: &EtkinParams) -> Option<f64> {
    let (rho, gamma) = params.derived(a)?;
    let (alpha, sigma) = (params.alpha, params.sigma);
    let ra = a.sqrt();
    let noise = (1.0 - rho * rho) * sigma * sigma;
    let signal = p * (1.0 + alpha * alpha) * gamma;
    if noise <= 0.0 {
        return None;
    }
    let first = 0.5 * (1.0 + signal / noise).log2();
    let second = (1.0 + alpha * alpha * p * gamma / noise).log2();
    let numer = (1.0 + p * (1.0 + a)) * (p * (1.0 + alpha * alpha) + sigma * sigma)
        - (p * (1.0 + alpha * ra) + rho * sigma).powi(2);
    let denom = signal + noise;
    if numer <= 0.0 || denom <= 0.0 {
        return None;
    }
    let value = first.min(second) + (numer / denom).log2();
    value.is_finite().then_some(value)
}

/// Minimizes Etkin's bound over `(alpha, sigma)` for both root signs.
///
/// The returned `argopt` is `[alpha, sigma, sign]` with `sign = +/-1`; on a
/// value tie between the signs the lexicographically smaller triple wins.
pub fn etkin_sum_upper(p: f64, a: f64, spec: Option<&GridSpec>) -> Result<OptimizationResult> {
    require_symmetric_weak(p, a, "etkin_sum_upper")?;
    let spec = spec.copied().unwrap_or(DEFAULT_ETKIN_GRID);
    if spec.points_per_axis < 11 {
        return Err(Error::invalid(format!(
            "etkin_sum_upper needs at least 11 grid points per axis, got {}",
            spec.points_per_axis
        )));
    }
    let bounds = [(-1.0, 1.0), (0.0, 1.0 / a.sqrt())];
    let mut best: Option<OptimizationResult> = None;
    let mut evals = 0usize;
    for positive_root in [false, true] {
        let run = optimize(
            |x| {
                etkin_objective(
                    p,
                    a,
                    &EtkinParams {
                        alpha: x[0],
                        sigma: x[1],
                        positive_root,
                    },
                )
            },
            &bounds,
            Direction::Minimize,
            &spec,
        );
        let mut run = match run {
            Ok(r) => r,
            Err(Error::AllInfeasible) => continue,
            Err(e) => return Err(e),
        };
        evals += run.grid_points;
        run.argopt.push(if positive_root { 1.0 } else { -1.0 });
        best = match best {
            None => Some(run),
            Some(b) => {
                if run.value < b.value || (run.value == b.value && run.argopt < b.argopt) {
                    Some(run)
                } else {
                    Some(b)
                }
            }
        };
    }
    let mut best = best.ok_or(Error::AllInfeasible)?;
    best.grid_points = evals;
    Ok(best)
}

/// Kramer's closed-form sum-rate upper bound for a symmetric channel with
/// gain `a` in `(0, 1]`:
/// `(1/2) log2(1 + 2P + B/2 - (1/2) sqrt(B^2 - 4 P^2 (1/a - 1)^2))` with
/// `B = 1/a^2 + 2P (1/a - 1) - 1`.
pub fn kramer_sum_upper(p: f64, a: f64) -> Result<BoundValue> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::invalid(format!("power must be positive, got {p}")));
    }
    if !(a.is_finite() && a > 0.0 && a <= 1.0) {
        return Err(Error::invalid(format!(
            "kramer_sum_upper needs a in (0,1], got {a}"
        )));
    }
    let b = 1.0 / (a * a) + 2.0 * p * (1.0 / a - 1.0) - 1.0;
    let discriminant = b * b - (2.0 * p * (1.0 / a - 1.0)).powi(2);
    let discriminant = if discriminant < 0.0 && discriminant > -1e-9 {
        0.0
    } else {
        discriminant
    };
    if discriminant < 0.0 {
        return Err(Error::invalid(format!(
            "negative discriminant {discriminant} in Kramer's bound"
        )));
    }
    Ok(BoundValue::valid(half_log2_1p(
        2.0 * p + b / 2.0 - 0.5 * discriminant.sqrt(),
    )))
}

/// TIN-exact sub-class check: for `0 < a < 1/4` and
/// `P <= (sqrt(a) - 2a) / (2 a^2)` the sum capacity is exactly the TIN rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TinSubclass {
    pub in_subclass: bool,
    /// Exact sum capacity `log2(1 + P/(1 + aP))` when in the sub-class.
    pub exact_sum: Option<BoundValue>,
}

/// The TIN sum rate `log2(1 + P/(1 + aP))`, achievable for any gain.
pub fn tin_sum_rate(p: f64, a: f64) -> f64 {
    (1.0 + p / (1.0 + a * p)).log2()
}

/// Detects membership in the TIN-exact sub-class.
pub fn tin_subclass(p: f64, a: f64) -> Result<TinSubclass> {
    if !(p.is_finite() && p > 0.0) || !(a.is_finite() && a > 0.0) {
        return Err(Error::invalid(format!(
            "tin_subclass needs p > 0 and a > 0, got p={p}, a={a}"
        )));
    }
    let in_subclass = a < 0.25 && p <= (a.sqrt() - 2.0 * a) / (2.0 * a * a);
    Ok(TinSubclass {
        in_subclass,
        exact_sum: in_subclass.then(|| {
            BoundValue::valid(tin_sum_rate(p, a))
                .with_term("tin")
                .with_note("exact")
        }),
    })
}

/// Best available sum-rate bracket for a symmetric weak channel.
#[derive(Debug, Clone, PartialEq)]
pub struct SumRateBounds {
    pub upper: BoundValue,
    pub lower: BoundValue,
    pub hk_optimized: OptimizationResult,
    pub etkin: OptimizationResult,
}

/// Combines every implemented bound: the upper is the minimum of the ETW,
/// Etkin and Kramer bounds (replaced by the exact TIN value inside the
/// sub-class); the lower is the maximum of the TIN rate, the optimized
/// Han-Kobayashi bound and, when its condition holds, the half-bit bound.
pub fn best_sum_bounds(p: f64, a: f64, spec: Option<&GridSpec>) -> Result<SumRateBounds> {
    require_symmetric_weak(p, a, "best_sum_bounds")?;
    let params = ChannelParams::symmetric(p, a)?;
    let etw = etw_sum_upper(&params)?;
    let etkin = etkin_sum_upper(p, a, spec)?;
    let kramer = kramer_sum_upper(p, a)?;
    let subclass = tin_subclass(p, a)?;

    let mut upper = BoundValue::valid(etw.value).with_term("etw");
    if etkin.value < upper.value {
        upper = BoundValue::valid(etkin.value).with_term("etkin");
    }
    if kramer.value < upper.value {
        upper = BoundValue::valid(kramer.value).with_term("kramer");
    }
    if let Some(exact) = subclass.exact_sum {
        if exact.value <= upper.value {
            upper = exact;
        }
    }

    let hk = hk_sum_lower_optimized(p, a, spec)?;
    let mut lower = BoundValue::valid(tin_sum_rate(p, a)).with_term("tin");
    if hk.value > lower.value {
        lower = BoundValue::valid(hk.value).with_term("hk_optimized");
    }
    let half_bit = hk_sum_lower_half_bit(&params)?;
    if half_bit.valid && half_bit.value > lower.value {
        lower = BoundValue::valid(half_bit.value).with_term("hk_half_bit");
    }
    Ok(SumRateBounds {
        upper,
        lower,
        hk_optimized: hk,
        etkin,
    })
}
