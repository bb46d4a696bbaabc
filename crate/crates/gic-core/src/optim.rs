//! Deterministic coarse-to-fine grid search.
//!
//! The objectives optimized in this crate are cheap, low-dimensional (at
//! most three axes) and possibly partially infeasible, so an exhaustive
//! uniform grid with a few rounds of local refinement is both simple and
//! reproducible: for a fixed [`GridSpec`] two runs return bit-identical
//! results, regardless of evaluation order.

use crate::error::{Error, Result};

/// Grid resolution and refinement schedule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// Points per axis; must be odd and at least 3 so interval endpoints
    /// and midpoints are always sampled.
    pub points_per_axis: usize,
    /// Number of shrink-and-regrid rounds after the initial sweep.
    pub refinement_rounds: usize,
    /// Box shrink factor per refinement round (> 1).
    pub shrink_factor: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            points_per_axis: 41,
            refinement_rounds: 3,
            shrink_factor: 5.0,
        }
    }
}

impl GridSpec {
    pub fn new(points_per_axis: usize, refinement_rounds: usize) -> Self {
        Self {
            points_per_axis,
            refinement_rounds,
            ..Self::default()
        }
    }

    fn validate(&self, min_points: usize) -> Result<()> {
        if self.points_per_axis < min_points {
            return Err(Error::invalid(format!(
                "grid must have at least {min_points} points per axis, got {}",
                self.points_per_axis
            )));
        }
        if self.points_per_axis.is_multiple_of(2) {
            return Err(Error::invalid(format!(
                "grid points per axis must be odd, got {}",
                self.points_per_axis
            )));
        }
        if !(self.shrink_factor.is_finite() && self.shrink_factor > 1.0) {
            return Err(Error::invalid(format!(
                "shrink factor must exceed 1, got {}",
                self.shrink_factor
            )));
        }
        Ok(())
    }
}

/// Search direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

/// Outcome of a grid optimization.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    /// Best feasible objective value found.
    pub value: f64,
    /// Parameter vector attaining `value`; on ties, the lexicographically
    /// smallest vector among the evaluated optima.
    pub argopt: Vec<f64>,
    /// Total number of objective evaluations (feasible or not).
    pub grid_points: usize,
    /// Refinement rounds performed.
    pub refinement_rounds: usize,
}

#[inline]
fn lex_less(a: &[f64], b: &[f64]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x < y {
            return true;
        }
        if x > y {
            return false;
        }
    }
    false
}

/// Exhaustive uniform grid search with local refinement.
///
/// `objective` returns `None` for infeasible points, which are skipped.
/// Each refinement round re-grids a box shrunk by `shrink_factor` around
/// the incumbent, translated to stay inside the original box. The incumbent
/// is only replaced by a strictly better value or by an equal value at a
/// lexicographically smaller parameter vector, so results do not depend on
/// evaluation order.
pub fn optimize<F>(
    objective: F,
    bounds: &[(f64, f64)],
    direction: Direction,
    spec: &GridSpec,
) -> Result<OptimizationResult>
where
    F: Fn(&[f64]) -> Option<f64>,
{
    optimize_with_min_points(objective, bounds, direction, spec, 3)
}

pub(crate) fn optimize_with_min_points<F>(
    objective: F,
    bounds: &[(f64, f64)],
    direction: Direction,
    spec: &GridSpec,
    min_points: usize,
) -> Result<OptimizationResult>
where
    F: Fn(&[f64]) -> Option<f64>,
{
    spec.validate(min_points)?;
    if bounds.is_empty() {
        return Err(Error::invalid("empty search box".to_string()));
    }
    for &(lo, hi) in bounds {
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(Error::invalid(format!("bad axis interval [{lo}, {hi}]")));
        }
    }

    let dims = bounds.len();
    let n = spec.points_per_axis;
    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut evals = 0usize;
    let mut current: Vec<(f64, f64)> = bounds.to_vec();
    let mut point = vec![0.0; dims];

    for _round in 0..=spec.refinement_rounds {
        let mut idx = vec![0usize; dims];
        'grid: loop {
            for d in 0..dims {
                let (lo, hi) = current[d];
                let t = idx[d] as f64 / (n - 1) as f64;
                // endpoint-exact interpolation
                point[d] = lo * (1.0 - t) + hi * t;
            }
            evals += 1;
            if let Some(v) = objective(&point) {
                if v.is_finite() {
                    let replace = match &best {
                        None => true,
                        Some((bv, bx)) => match direction {
                            Direction::Minimize => v < *bv || (v == *bv && lex_less(&point, bx)),
                            Direction::Maximize => v > *bv || (v == *bv && lex_less(&point, bx)),
                        },
                    };
                    if replace {
                        best = Some((v, point.clone()));
                    }
                }
            }
            // odometer increment, last axis fastest
            for d in (0..dims).rev() {
                idx[d] += 1;
                if idx[d] < n {
                    continue 'grid;
                }
                idx[d] = 0;
                if d == 0 {
                    break 'grid;
                }
            }
        }

        let Some((_, argopt)) = &best else {
            return Err(Error::AllInfeasible);
        };

        // Shrink around the incumbent, clipped to the original box.
        for d in 0..dims {
            let width = (current[d].1 - current[d].0) / spec.shrink_factor;
            let lo = (argopt[d] - width / 2.0).max(bounds[d].0);
            let hi = (argopt[d] + width / 2.0).min(bounds[d].1);
            current[d] = (lo, hi);
        }
    }

    let (value, argopt) = best.expect("incumbent exists after first round");
    Ok(OptimizationResult {
        value,
        argopt,
        grid_points: evals,
        refinement_rounds: spec.refinement_rounds,
    })
}
