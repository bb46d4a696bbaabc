//! Outer bounds on the capacity region as half-plane intersections.
//!
//! Two polytope outer bounds are built for weak channels: the
//! Etkin-Tse-Wang (ETW) bound and the Telatar-Tse bound. Both consist of
//! per-user caps, three sum-rate constraints and two weighted-sum
//! constraints; they differ in one term of the weighted-sum constraints
//! and in the sum-rate terms. Kramer's outer bound is exposed through its
//! power-split parameterization rather than as a polytope.

use crate::channel::{half_log2_1p, require_regime, ChannelParams, RatePair, RegimeKind};
use crate::error::{Error, Result};

/// Default additive slack for membership queries, in bits.
pub const DEFAULT_MEMBERSHIP_TOL: f64 = 1e-9;

/// A half-plane constraint `c1 * R1 + c2 * R2 <= bound`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearRateConstraint {
    pub c1: f64,
    pub c2: f64,
    pub bound: f64,
    pub tag: &'static str,
}

impl LinearRateConstraint {
    fn new(c1: f64, c2: f64, bound: f64, tag: &'static str) -> Self {
        debug_assert!(c1 + c2 > 0.0);
        Self { c1, c2, bound, tag }
    }

    pub fn satisfied_by(&self, point: RatePair, tol: f64) -> bool {
        self.c1 * point.r1 + self.c2 * point.r2 <= self.bound + tol
    }
}

/// A closed convex rate region given by half-plane constraints
/// (nonnegativity of the rates is implicit).
#[derive(Debug, Clone, PartialEq)]
pub struct RateRegion {
    pub name: &'static str,
    pub constraints: Vec<LinearRateConstraint>,
}

impl RateRegion {
    /// True iff every constraint holds within additive tolerance `tol`.
    pub fn contains(&self, point: RatePair, tol: f64) -> bool {
        self.constraints.iter().all(|c| c.satisfied_by(point, tol))
    }

    /// Vertices of the region boundary from the `R2` axis to the `R1` axis,
    /// ordered by increasing `R1`. Intersects constraint lines pairwise
    /// (including the coordinate axes), keeps the feasible ones and drops
    /// the origin.
    pub fn boundary(&self) -> Vec<RatePair> {
        const TOL: f64 = 1e-9;
        let mut lines: Vec<(f64, f64, f64)> = self
            .constraints
            .iter()
            .map(|c| (c.c1, c.c2, c.bound))
            .collect();
        lines.push((1.0, 0.0, 0.0)); // R1 = 0
        lines.push((0.0, 1.0, 0.0)); // R2 = 0

        let mut pts: Vec<RatePair> = Vec::new();
        for i in 0..lines.len() {
            for j in (i + 1)..lines.len() {
                let (a1, b1, c1) = lines[i];
                let (a2, b2, c2) = lines[j];
                let det = a1 * b2 - a2 * b1;
                if det.abs() < 1e-12 {
                    continue;
                }
                let r1 = (c1 * b2 - c2 * b1) / det;
                let r2 = (a1 * c2 - a2 * c1) / det;
                if r1 < -TOL || r2 < -TOL {
                    continue;
                }
                if r1.abs() < TOL && r2.abs() < TOL {
                    continue; // origin
                }
                let p = RatePair {
                    r1: r1.max(0.0),
                    r2: r2.max(0.0),
                };
                if self.contains(p, TOL)
                    && !pts
                        .iter()
                        .any(|q| (q.r1 - p.r1).abs() < TOL && (q.r2 - p.r2).abs() < TOL)
                {
                    pts.push(p);
                }
            }
        }
        pts.sort_by(|a, b| {
            a.r1.partial_cmp(&b.r1)
                .unwrap()
                .then(b.r2.partial_cmp(&a.r2).unwrap())
        });
        pts
    }
}

fn sum_rate_terms(params: &ChannelParams) -> [f64; 3] {
    let ChannelParams { p1, p2, a12, a21 } = *params;
    [
        half_log2_1p(p1) + half_log2_1p(p2 / (1.0 + a21 * p1)),
        half_log2_1p(p2) + half_log2_1p(p1 / (1.0 + a12 * p2)),
        half_log2_1p(a12 * p2 + p1 / (1.0 + a21 * p1))
            + half_log2_1p(a21 * p1 + p2 / (1.0 + a12 * p2)),
    ]
}

pub(crate) fn etw_sum_rate_terms(params: &ChannelParams) -> [f64; 3] {
    sum_rate_terms(params)
}

fn tt_sum_terms(params: &ChannelParams) -> [f64; 3] {
    let ChannelParams { p1, p2, a12, a21 } = *params;
    [
        half_log2_1p(p1 + a12 * p2) + half_log2_1p(p2 / (1.0 + a12 * p2)),
        half_log2_1p(p2 + a21 * p1) + half_log2_1p(p1 / (1.0 + a21 * p1)),
        half_log2_1p(a12 * p2 + p1 / (1.0 + a21 * p1))
            + half_log2_1p(a21 * p1 + p2 / (1.0 + a12 * p2)),
    ]
}

pub(crate) fn tt_sum_rate_terms(params: &ChannelParams) -> [f64; 3] {
    tt_sum_terms(params)
}

/// ETW outer bound for a weak channel, as seven half-plane constraints.
///
/// The three sum-rate constraints are emitted individually; membership
/// effectively uses their minimum. The weighted-sum constraint is
/// `2 R1 + R2 <= (1/2)[log2(1 + P1 + a12 P2) + log2((1+P1)/(1+a21 P1)) +
/// log2(1 + a21 P1 + P2/(1 + a12 P2))]`, and `R1 + 2 R2` follows by
/// swapping the user indices.
pub fn etw_region(params: &ChannelParams) -> Result<RateRegion> {
    require_regime(params, RegimeKind::Weak, "etw_region")?;
    let ChannelParams { p1, p2, a12, a21 } = *params;
    let [s1, s2, s3] = sum_rate_terms(params);
    let two_r1_r2 = half_log2_1p(p1 + a12 * p2)
        + 0.5 * ((1.0 + p1) / (1.0 + a21 * p1)).log2()
        + half_log2_1p(a21 * p1 + p2 / (1.0 + a12 * p2));
    let r1_two_r2 = half_log2_1p(p2 + a21 * p1)
        + 0.5 * ((1.0 + p2) / (1.0 + a12 * p2)).log2()
        + half_log2_1p(a12 * p2 + p1 / (1.0 + a21 * p1));
    Ok(RateRegion {
        name: "etw",
        constraints: vec![
            LinearRateConstraint::new(1.0, 0.0, half_log2_1p(p1), "r1_cap"),
            LinearRateConstraint::new(0.0, 1.0, half_log2_1p(p2), "r2_cap"),
            LinearRateConstraint::new(1.0, 1.0, s1, "sum_rx1"),
            LinearRateConstraint::new(1.0, 1.0, s2, "sum_rx2"),
            LinearRateConstraint::new(1.0, 1.0, s3, "sum_cross"),
            LinearRateConstraint::new(2.0, 1.0, two_r1_r2, "2r1_r2"),
            LinearRateConstraint::new(1.0, 2.0, r1_two_r2, "r1_2r2"),
        ],
    })
}

/// Telatar-Tse outer bound for a weak channel (seven constraints).
///
/// Shifting any point of this region by half a bit per user lands inside
/// the Han-Kobayashi achievable region, which is what makes it the basis
/// of the within-half-a-bit sum-rate lower bound. Its weighted-sum
/// constraints use `log2(1 + P1/(1 + a21 P1))` where the ETW form uses the
/// ratio `log2((1+P1)/(1+a21 P1))`; both variants are exposed, tagged by
/// region name.
pub fn telatar_tse_region(params: &ChannelParams) -> Result<RateRegion> {
    require_regime(params, RegimeKind::Weak, "telatar_tse_region")?;
    let ChannelParams { p1, p2, a12, a21 } = *params;
    let [s1, s2, s3] = tt_sum_terms(params);
    let two_r1_r2 = half_log2_1p(p1 + a12 * p2)
        + half_log2_1p(p1 / (1.0 + a21 * p1))
        + half_log2_1p(a21 * p1 + p2 / (1.0 + a12 * p2));
    let r1_two_r2 = half_log2_1p(p2 + a21 * p1)
        + half_log2_1p(p2 / (1.0 + a12 * p2))
        + half_log2_1p(a12 * p2 + p1 / (1.0 + a21 * p1));
    Ok(RateRegion {
        name: "telatar_tse",
        constraints: vec![
            LinearRateConstraint::new(1.0, 0.0, half_log2_1p(p1), "r1_cap"),
            LinearRateConstraint::new(0.0, 1.0, half_log2_1p(p2), "r2_cap"),
            LinearRateConstraint::new(1.0, 1.0, s1, "sum_rx1"),
            LinearRateConstraint::new(1.0, 1.0, s2, "sum_rx2"),
            LinearRateConstraint::new(1.0, 1.0, s3, "sum_cross"),
            LinearRateConstraint::new(2.0, 1.0, two_r1_r2, "2r1_r2"),
            LinearRateConstraint::new(1.0, 2.0, r1_two_r2, "r1_2r2"),
        ],
    })
}

/// Membership check with tolerance (see [`RateRegion::contains`]).
pub fn region_contains(region: &RateRegion, point: RatePair, tol: f64) -> bool {
    region.contains(point, tol)
}

/// Power-split parameterization of Kramer's outer bound.
///
/// With `P' = P2 + P1 / a21`, the region component bounding user 1's rate is
/// swept by `beta` over `[P2 / ((1 + P1) P'), P2 / P']`:
/// `R1 <= (1/2) log2(1 + (1 - beta) P' / (beta P' + 1/a21))` and
/// `R2 <= (1/2) log2(1 + beta P')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KramerRegionParams {
    pub beta: f64,
    pub p_prime: f64,
}

impl KramerRegionParams {
    /// Legal `beta` interval for the given channel.
    pub fn beta_interval(params: &ChannelParams) -> Result<(f64, f64)> {
        if params.a21 <= 0.0 {
            return Err(Error::invalid(
                "Kramer bound requires a positive a21".to_string(),
            ));
        }
        let p_prime = params.p2 + params.p1 / params.a21;
        Ok((
            params.p2 / ((1.0 + params.p1) * p_prime),
            params.p2 / p_prime,
        ))
    }

    pub fn new(params: &ChannelParams, beta: f64) -> Result<Self> {
        let (lo, hi) = Self::beta_interval(params)?;
        if !(beta >= lo && beta <= hi) {
            return Err(Error::invalid(format!(
                "beta {beta} outside the legal interval [{lo}, {hi}]"
            )));
        }
        Ok(Self {
            beta,
            p_prime: params.p2 + params.p1 / params.a21,
        })
    }

    /// Boundary point of the swept component at this `beta`.
    pub fn boundary_point(&self, params: &ChannelParams) -> RatePair {
        RatePair {
            r1: half_log2_1p(
                (1.0 - self.beta) * self.p_prime / (self.beta * self.p_prime + 1.0 / params.a21),
            ),
            r2: half_log2_1p(self.beta * self.p_prime),
        }
    }
}

/// Kramer's bound on `R2` when `R1 = C1 - epsilon`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KramerR2Bound {
    /// The bound: `(1/2) log2(1 + P2/(1 + P1)) + delta(epsilon)`.
    pub value: f64,
    /// Value at `epsilon = 0`.
    pub at_zero: f64,
    /// `delta(epsilon) = (1/2) log2(1 + (2^(2 eps) - 1)(P2 + (1+P1)/a21) / (1+P1+P2))`.
    pub delta_eps: f64,
    /// Linear cap: `delta(epsilon) < (1 + (1+P1)/(a21 P2)) * epsilon`.
    pub delta_eps_cap: f64,
}

/// Evaluates Kramer's outer bound on `R2` along `R1 = C1 - epsilon`, by
/// substituting the `beta` that attains that `R1` on the region boundary.
pub fn kramer_r2_at_r1(params: &ChannelParams, epsilon: f64) -> Result<KramerR2Bound> {
    require_regime(params, RegimeKind::Weak, "kramer_r2_at_r1")?;
    if params.a21 == 0.0 {
        return Err(Error::invalid(
            "kramer_r2_at_r1 requires a21 > 0".to_string(),
        ));
    }
    if !(epsilon.is_finite() && epsilon >= 0.0) {
        return Err(Error::invalid(format!(
            "epsilon must be nonnegative, got {epsilon}"
        )));
    }
    let ChannelParams { p1, p2, a21, .. } = *params;
    let at_zero = half_log2_1p(p2 / (1.0 + p1));
    let growth = (2.0f64).powf(2.0 * epsilon) - 1.0;
    let delta_eps = half_log2_1p(growth * (p2 + (1.0 + p1) / a21) / (1.0 + p1 + p2));
    let slope = 1.0 + (1.0 + p1) / (a21 * p2);
    Ok(KramerR2Bound {
        value: at_zero + delta_eps,
        at_zero,
        delta_eps,
        delta_eps_cap: slope * epsilon,
    })
}

/// Boundary polyline of the Kramer power-split component, swept over a
/// uniform 1001-point `beta` grid and ordered by increasing `R1`.
pub fn kramer_boundary(params: &ChannelParams) -> Result<Vec<RatePair>> {
    const POINTS: usize = 1001;
    require_regime(params, RegimeKind::Weak, "kramer_boundary")?;
    let (lo, hi) = KramerRegionParams::beta_interval(params)?;
    let mut out = Vec::with_capacity(POINTS);
    // R1 decreases with beta, so walk beta downward.
    for i in (0..POINTS).rev() {
        let t = i as f64 / (POINTS - 1) as f64;
        let beta = lo * (1.0 - t) + hi * t;
        let kp = KramerRegionParams {
            beta,
            p_prime: params.p2 + params.p1 / params.a21,
        };
        out.push(kp.boundary_point(params));
    }
    Ok(out)
}

/// Membership in Kramer's outer bound (intersection of both user sweeps),
/// decided analytically per coordinate rather than via the grid.
pub fn kramer_region_contains(params: &ChannelParams, point: RatePair, tol: f64) -> Result<bool> {
    let c1 = half_log2_1p(params.p1);
    let c2 = half_log2_1p(params.p2);
    if point.r1 > c1 + tol || point.r2 > c2 + tol {
        return Ok(false);
    }
    let b1 = kramer_r2_at_r1(params, (c1 - point.r1).max(0.0))?;
    if point.r2 > b1.value + tol {
        return Ok(false);
    }
    let swapped = params.swapped();
    let b2 = kramer_r2_at_r1(&swapped, (c2 - point.r2).max(0.0))?;
    Ok(point.r1 <= b2.value + tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::single_user_capacity;

    fn sym(p: f64, a: f64) -> ChannelParams {
        ChannelParams::symmetric(p, a).unwrap()
    }

    fn bound_of<'r>(region: &'r RateRegion, tag: &str) -> &'r LinearRateConstraint {
        region
            .constraints
            .iter()
            .find(|c| c.tag == tag)
            .unwrap_or_else(|| panic!("missing constraint {tag}"))
    }

    #[test]
    fn etw_region_reference_values() {
        let region = etw_region(&sym(100.0, 0.5)).unwrap();
        assert_eq!(region.constraints.len(), 7);
        assert!((bound_of(&region, "r1_cap").bound - 3.329105741376).abs() < 1e-9);
        assert!((bound_of(&region, "sum_rx1").bound - 4.112095440053).abs() < 1e-9);
        assert!((bound_of(&region, "sum_cross").bound - 5.726852582537).abs() < 1e-9);
        assert!((bound_of(&region, "2r1_r2").bound - 6.975521731321).abs() < 1e-9);

        // symmetric channel: swap symmetry of the constraint values
        assert_eq!(
            bound_of(&region, "r1_cap").bound,
            bound_of(&region, "r2_cap").bound
        );
        assert_eq!(
            bound_of(&region, "2r1_r2").bound,
            bound_of(&region, "r1_2r2").bound
        );

        let region = etw_region(&sym(100.0, 0.1)).unwrap();
        assert!((bound_of(&region, "2r1_r2").bound - 7.160833335609).abs() < 1e-9);
        assert!((bound_of(&region, "sum_rx1").bound - 4.996597865232).abs() < 1e-9);
        assert!((bound_of(&region, "sum_cross").bound - 4.328470940754).abs() < 1e-9);
    }

    #[test]
    fn etw_region_rejects_non_weak() {
        assert!(etw_region(&sym(10.0, 1.5)).is_err());
        assert!(etw_region(&ChannelParams::new(10.0, 10.0, 0.0, 0.5).unwrap()).is_err());
    }

    #[test]
    fn telatar_tse_reference_values() {
        let region = telatar_tse_region(&sym(100.0, 0.5)).unwrap();
        assert!((bound_of(&region, "sum_rx1").bound - 4.402192068339).abs() < 1e-9);
        assert!((bound_of(&region, "sum_rx2").bound - 4.402192068339).abs() < 1e-9);
        assert!((bound_of(&region, "sum_cross").bound - 5.726852582537).abs() < 1e-9);
        // The printed weighted-sum form differs from the ETW one.
        assert!((bound_of(&region, "2r1_r2").bound - 7.265618359608).abs() < 1e-9);
    }

    #[test]
    fn membership_examples() {
        let region = etw_region(&sym(100.0, 0.5)).unwrap();
        let c1 = single_user_capacity(100.0).unwrap();
        let corner = RatePair {
            r1: c1,
            r2: 0.290096628287,
        };
        assert!(region.contains(corner, DEFAULT_MEMBERSHIP_TOL));
        assert!(!region.contains(RatePair { r1: 3.43, r2: 0.29 }, DEFAULT_MEMBERSHIP_TOL));
        assert!(region.contains(RatePair { r1: 0.0, r2: 0.0 }, 0.0));
    }

    #[test]
    fn boundary_is_monotone_and_feasible() {
        let region = etw_region(&sym(100.0, 0.5)).unwrap();
        let boundary = region.boundary();
        assert!(boundary.len() >= 4);
        for w in boundary.windows(2) {
            assert!(w[0].r1 <= w[1].r1 + 1e-12);
            assert!(w[0].r2 >= w[1].r2 - 1e-12);
        }
        for p in &boundary {
            assert!(region.contains(*p, 1e-6));
        }
        // endpoints on the axes
        assert!(boundary.first().unwrap().r1.abs() < 1e-9);
        assert!(boundary.last().unwrap().r2.abs() < 1e-9);
    }

    #[test]
    fn kramer_corner_values() {
        let b = kramer_r2_at_r1(&sym(100.0, 0.1), 0.0).unwrap();
        assert!((b.value - 0.496420104214).abs() < 1e-9);
        assert_eq!(b.delta_eps, 0.0);

        let b = kramer_r2_at_r1(&sym(100.0, 0.5), 0.01).unwrap();
        assert!((b.delta_eps - 0.014973024564).abs() < 1e-9);
        assert!((b.value - (0.496420104214 + 0.014973024564)).abs() < 1e-9);
        assert!(b.delta_eps < b.delta_eps_cap);
    }

    #[test]
    fn kramer_monotone_in_epsilon_and_capped() {
        let params = sym(50.0, 0.3);
        let mut prev = kramer_r2_at_r1(&params, 0.0).unwrap().value;
        for eps in [0.001, 0.01, 0.1, 0.5] {
            let b = kramer_r2_at_r1(&params, eps).unwrap();
            assert!(b.value >= prev);
            assert!(b.delta_eps < b.delta_eps_cap);
            prev = b.value;
        }
    }

    #[test]
    fn kramer_symmetric_corner_below_half_bit() {
        for p in [0.5, 2.0, 10.0, 1e4, 1e8] {
            let b = kramer_r2_at_r1(&sym(p, 0.5), 0.0).unwrap();
            assert!(b.value <= 0.5);
        }
    }

    #[test]
    fn kramer_boundary_sweep() {
        let params = sym(100.0, 0.5);
        let pts = kramer_boundary(&params).unwrap();
        assert_eq!(pts.len(), 1001);
        for w in pts.windows(2) {
            assert!(w[0].r1 <= w[1].r1 + 1e-12);
        }
        // beta at its lower endpoint reproduces (C1, Kramer corner bound)
        let last = pts.last().unwrap();
        assert!((last.r1 - single_user_capacity(100.0).unwrap()).abs() < 1e-9);
        assert!((last.r2 - kramer_r2_at_r1(&params, 0.0).unwrap().value).abs() < 1e-9);
    }

    #[test]
    fn kramer_membership() {
        let params = sym(100.0, 0.5);
        let c1 = single_user_capacity(100.0).unwrap();
        let corner = RatePair {
            r1: c1,
            r2: 0.290096628287,
        };
        assert!(kramer_region_contains(&params, corner, 1e-9).unwrap());
        let outside = RatePair { r1: c1, r2: 0.51 };
        assert!(!kramer_region_contains(&params, outside, 1e-9).unwrap());
    }

    #[test]
    fn beta_validation() {
        let params = sym(100.0, 0.5);
        let (lo, hi) = KramerRegionParams::beta_interval(&params).unwrap();
        assert!(KramerRegionParams::new(&params, lo).is_ok());
        assert!(KramerRegionParams::new(&params, hi).is_ok());
        assert!(KramerRegionParams::new(&params, hi * 1.01).is_err());
    }
}
