//! Capacity-region bounds for two-user Gaussian interference channels in
//! standard form.
//!
//! The crate computes, in closed form or by deterministic grid
//! optimization:
//!
//! - regime classification (weak / strong / very strong / mixed / degraded /
//!   one-sided) and the conjectured corner rates;
//! - the ETW and Telatar-Tse outer rate regions as half-plane polytopes,
//!   and Kramer's power-split outer bound;
//! - interval bounds on the corner points of weak, mixed and one-sided
//!   channels, with the ETW-vs-Kramer SNR threshold;
//! - sum-rate upper bounds (ETW, Etkin, Kramer, TIN-exact sub-class) and
//!   lower bounds (within-half-a-bit, three-parameter Han-Kobayashi, TIN);
//! - simple and improved bounds on the excess rate `Delta` between the
//!   sum-capacity and the best corner-point total rate;
//! - the generalized-degrees-of-freedom layer: `d(alpha)`,
//!   `delta_slope(alpha)`, normalized loss, and convergence probes.
//!
//! All rates are bits per channel use; logarithms are base 2 throughout.
//! Every function is pure, and the optimizers are deterministic for a fixed
//! [`optim::GridSpec`], so identical inputs always reproduce identical
//! outputs.

pub mod asymptotics;
pub mod bound;
pub mod channel;
pub mod corners;
pub mod error;
pub mod excess;
pub mod optim;
pub mod regions;
pub mod sumrate;
pub mod table1;

pub use asymptotics::{
    convergence_probe, delta_slope, gdof, normalized_loss, InterferenceLevel, ProbeRow,
};
pub use bound::BoundValue;
pub use channel::{
    classify, conjectured_corner_rates, single_user_capacity, ChannelParams, RatePair, RegimeClass,
    RegimeKind,
};
pub use corners::{
    etw_kramer_threshold, mixed_corner_report, one_sided_corner_bounds, rate_tradeoff_bound,
    symmetric_corner_terms, symmetric_corner_upper, threshold_curve, weak_corner_bounds,
    ConstrainedUser, CornerBounds, CornerTerm, Interval, MixedCornerReport, OneSidedCorners,
};
pub use error::{Error, Result};
pub use excess::{
    corner_total_bounds, delta_asymptotic_bounds, delta_bounds_improved, delta_lower_improved,
    delta_lower_simple, delta_lower_simple_general, delta_lower_simple_raw, delta_sweep,
    delta_upper_improved, delta_upper_simple, delta_upper_simple_general, DeltaReport,
    DeltaSweepRow,
};
pub use optim::{optimize, Direction, GridSpec, OptimizationResult};
pub use regions::{
    etw_region, kramer_boundary, kramer_r2_at_r1, kramer_region_contains, region_contains,
    telatar_tse_region, KramerR2Bound, KramerRegionParams, LinearRateConstraint, RateRegion,
    DEFAULT_MEMBERSHIP_TOL,
};
pub use sumrate::{
    activation_certificate, activation_margin, best_sum_bounds, etkin_sum_upper, etw_sum_upper,
    hk_rho, hk_sum_lower_half_bit, hk_sum_lower_optimized, kramer_sum_upper, tin_subclass,
    tin_sum_rate, ActivationCertificate, EtkinParams, HkSplit, SumRateBounds, TinSubclass,
    DEFAULT_ETKIN_GRID, DEFAULT_HK_GRID,
};
pub use table1::{table1, table1_row, Table1Row};
