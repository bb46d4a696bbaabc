//! Benchmark-only crate; see `benches/bounds.rs`.
//!
//! Shared fixtures for the benchmarks live here so the bench target stays
//! small.

use gic_core::ChannelParams;

/// The reference weak symmetric instance used across benchmarks.
pub fn reference_channel() -> ChannelParams {
    ChannelParams::symmetric(100.0, 0.5).expect("valid reference channel")
}
