//! `gic`: bound reports and figure data for two-user Gaussian interference
//! channels in standard form.
//!
//! Exit codes: 0 on success, 2 on a domain error (invalid parameters or
//! unsupported regime), 1 on an internal/IO error.

mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gic_core as core;
use gic_core::{ChannelParams, ConstrainedUser, GridSpec, InterferenceLevel, RegimeKind};
use output::{write_rows, Format, ReportRow};

#[derive(Parser)]
#[command(
    name = "gic",
    version,
    about = "Capacity-region bounds for two-user Gaussian interference channels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Grid points per axis for the optimizers (odd, >= 11).
    #[arg(long, global = true)]
    grid: Option<usize>,

    /// Local refinement rounds for the optimizers.
    #[arg(long, global = true)]
    refine: Option<usize>,
}

#[derive(Args)]
struct ChannelArgs {
    /// Common transmit power for both users (linear).
    #[arg(long, conflicts_with = "p_db")]
    p: Option<f64>,

    /// Common transmit power in dB (converted as 10^(dB/10)).
    #[arg(long)]
    p_db: Option<f64>,

    /// Power of user 1 (linear); overrides --p / --p-db.
    #[arg(long)]
    p1: Option<f64>,

    /// Power of user 2 (linear); overrides --p / --p-db.
    #[arg(long)]
    p2: Option<f64>,

    /// Common cross-link gain.
    #[arg(long)]
    a: Option<f64>,

    /// Cross-link gain into receiver 1; overrides --a.
    #[arg(long)]
    a12: Option<f64>,

    /// Cross-link gain into receiver 2; overrides --a.
    #[arg(long)]
    a21: Option<f64>,
}

impl ChannelArgs {
    fn params(&self) -> Result<ChannelParams, CliError> {
        let common_p = match (self.p, self.p_db) {
            (Some(p), None) => Some(p),
            (None, Some(db)) => Some(10f64.powf(db / 10.0)),
            (None, None) => None,
            (Some(_), Some(_)) => unreachable!("clap conflict"),
        };
        let p1 = self.p1.or(common_p).ok_or_else(|| {
            CliError::Domain("missing power: pass --p, --p-db or --p1/--p2".to_string())
        })?;
        let p2 = self.p2.or(common_p).ok_or_else(|| {
            CliError::Domain("missing power: pass --p, --p-db or --p1/--p2".to_string())
        })?;
        let a12 = self
            .a12
            .or(self.a)
            .ok_or_else(|| CliError::Domain("missing gain: pass --a or --a12/--a21".to_string()))?;
        let a21 = self
            .a21
            .or(self.a)
            .ok_or_else(|| CliError::Domain("missing gain: pass --a or --a12/--a21".to_string()))?;
        Ok(ChannelParams::new(p1, p2, a12, a21)?)
    }

    /// Requires a symmetric instance and returns `(p, a)`.
    fn symmetric(&self) -> Result<(f64, f64), CliError> {
        let params = self.params()?;
        if !params.is_symmetric() {
            return Err(CliError::Domain(
                "this command needs a symmetric channel (equal powers and gains)".to_string(),
            ));
        }
        Ok((params.p1, params.a12))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify the interference regime.
    Classify(ChannelArgs),
    /// Corner-point bounds for the channel's regime.
    Corners {
        #[command(flatten)]
        channel: ChannelArgs,
        /// Rate slack from the single-user capacity; adds the epsilon-aware
        /// bounds for weak channels and enters the mixed-channel report.
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// Excess-rate bounds (simple, improved, asymptotic) for a symmetric
    /// weak channel.
    Delta(ChannelArgs),
    /// Sum-rate bounds; add --sweep-a for a gain sweep export.
    Sumrate {
        #[command(flatten)]
        channel: ChannelArgs,
        /// Sweep the gain as start:stop:step and emit one row per point.
        #[arg(long, value_name = "START:STOP:STEP")]
        sweep_a: Option<String>,
    },
    /// Closed-form asymptotics at an interference level.
    Asymptotics {
        /// Interference level coupling INR to SNR via a = P^(alpha-1).
        #[arg(long)]
        alpha: f64,
        /// Powers for the convergence probe (comma-separated, ascending).
        #[arg(long, value_delimiter = ',')]
        probe_p: Option<Vec<f64>>,
    },
    /// Gain-scan table of the improved excess-rate bound (dip and bump).
    Table1 {
        /// Powers in dB.
        #[arg(long, value_delimiter = ',', default_values_t = [27.0, 40.0, 60.0])]
        p_db: Vec<f64>,
    },
    /// Figure data exports (CSV-oriented).
    Figure {
        #[arg(value_enum)]
        which: FigureId,
        /// Power for fig2/fig4/fig5.
        #[arg(long)]
        p: Option<f64>,
        /// Gain for fig2.
        #[arg(long)]
        a: Option<f64>,
        /// Gain grid for fig4/fig5.
        #[arg(long, default_value_t = 0.005)]
        a_min: f64,
        #[arg(long, default_value_t = 0.995)]
        a_max: f64,
        #[arg(long, default_value_t = 0.005)]
        a_step: f64,
        /// Outer bound drawn by fig2.
        #[arg(long, value_enum, default_value_t = RegionId::Etw)]
        region: RegionId,
        /// Emit fig2's half-plane constraints (tag, c1, c2, bound) instead
        /// of the boundary polyline.
        #[arg(long)]
        constraints: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigureId {
    /// ETW-vs-Kramer SNR threshold curve over the gain.
    Fig1,
    /// Outer-bound boundary with the conjectured corner points.
    Fig2,
    /// GDOF and excess-rate slope over the interference level.
    Fig3,
    /// Excess-rate bound sweep over the gain (moderate power).
    Fig4,
    /// Excess-rate bound sweep over the gain (high power).
    Fig5,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RegionId {
    Etw,
    TelatarTse,
    Kramer,
}

#[derive(Debug)]
enum CliError {
    Domain(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(msg) => write!(f, "{msg}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<core::Error> for CliError {
    fn from(e: core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let spec = grid_spec(cli.grid, cli.refine);
    let rows = match cli.command {
        Command::Classify(channel) => cmd_classify(&channel)?,
        Command::Corners { channel, epsilon } => cmd_corners(&channel, epsilon)?,
        Command::Delta(channel) => cmd_delta(&channel, spec.as_ref())?,
        Command::Sumrate { channel, sweep_a } => cmd_sumrate(&channel, sweep_a, spec.as_ref())?,
        Command::Asymptotics { alpha, probe_p } => cmd_asymptotics(alpha, probe_p)?,
        Command::Table1 { p_db } => cmd_table1(&p_db, spec.as_ref())?,
        Command::Figure {
            which,
            p,
            a,
            a_min,
            a_max,
            a_step,
            region,
            constraints,
        } => cmd_figure(
            which,
            p,
            a,
            (a_min, a_max, a_step),
            region,
            constraints,
            spec.as_ref(),
        )?,
    };
    write_rows(&rows, cli.format, cli.out.as_deref())?;
    Ok(())
}

fn grid_spec(grid: Option<usize>, refine: Option<usize>) -> Option<GridSpec> {
    if grid.is_none() && refine.is_none() {
        return None;
    }
    let mut spec = GridSpec::default();
    if let Some(points) = grid {
        spec.points_per_axis = points;
    }
    if let Some(rounds) = refine {
        spec.refinement_rounds = rounds;
    }
    Some(spec)
}

fn channel_row(params: &ChannelParams) -> ReportRow {
    ReportRow::new()
        .real("p1", params.p1)
        .real("p2", params.p2)
        .real("a12", params.a12)
        .real("a21", params.a21)
}

fn cmd_classify(channel: &ChannelArgs) -> Result<Vec<ReportRow>, CliError> {
    let params = channel.params()?;
    let class = core::classify(&params);
    Ok(vec![channel_row(&params)
        .text("kind", kind_name(class.kind))
        .flag("symmetric", class.symmetric)
        .text("description", class.description())])
}

fn kind_name(kind: RegimeKind) -> &'static str {
    match kind {
        RegimeKind::Weak => "Weak",
        RegimeKind::Strong => "Strong",
        RegimeKind::VeryStrong => "VeryStrong",
        RegimeKind::Mixed => "Mixed",
        RegimeKind::Degraded => "Degraded",
        RegimeKind::OneSidedWeak => "OneSidedWeak",
        RegimeKind::OneSidedStrong => "OneSidedStrong",
    }
}

fn cmd_corners(channel: &ChannelArgs, epsilon: Option<f64>) -> Result<Vec<ReportRow>, CliError> {
    let params = channel.params()?;
    let class = core::classify(&params);
    let stars = core::conjectured_corner_rates(&params);
    let c1 = core::single_user_capacity(params.p1)?;
    let c2 = core::single_user_capacity(params.p2)?;
    let base = || {
        channel_row(&params)
            .text("regime", kind_name(class.kind))
            .real("c1", c1)
            .real("c2", c2)
            .real("r1_star", stars.r1)
            .real("r2_star", stars.r2)
    };
    let row = match class.kind {
        RegimeKind::Weak => {
            let b = core::weak_corner_bounds(&params)?;
            let mut row = base()
                .real("r2_at_c1_lo", b.corner_at_c1.lo)
                .real("r2_at_c1_hi", b.corner_at_c1.hi)
                .text("r2_at_c1_active", b.active_at_c1.as_str())
                .real("r1_at_c2_lo", b.corner_at_c2.lo)
                .real("r1_at_c2_hi", b.corner_at_c2.hi)
                .text("r1_at_c2_active", b.active_at_c2.as_str());
            if let Some(eps) = epsilon {
                let t1 = core::rate_tradeoff_bound(&params, eps, ConstrainedUser::User1)?;
                let t2 = core::rate_tradeoff_bound(&params, eps, ConstrainedUser::User2)?;
                row = row
                    .real("epsilon", eps)
                    .real("r2_tradeoff", t1.value)
                    .opt_text("r2_tradeoff_active", t1.active_term)
                    .real("r1_tradeoff", t2.value)
                    .opt_text("r1_tradeoff_active", t2.active_term);
            }
            row
        }
        RegimeKind::Mixed | RegimeKind::Degraded => {
            let report = core::mixed_corner_report(&params, epsilon.unwrap_or(0.0))?;
            base()
                .real("epsilon", epsilon.unwrap_or(0.0))
                .flag("swapped", report.swapped)
                .real("near_strong_corner", report.near_strong_corner.value)
                .opt_text("near_strong_active", report.near_strong_corner.active_term)
                .text("near_strong_note", report.near_strong_corner.note)
                .real("near_weak_corner", report.near_weak_corner.value)
                .text("near_weak_note", report.near_weak_corner.note)
        }
        RegimeKind::OneSidedWeak => {
            let (p, swapped) = if params.a12 == 0.0 {
                (params, false)
            } else {
                (params.swapped(), true)
            };
            let c = core::one_sided_corner_bounds(p.p1, p.p2, p.a21)?;
            base()
                .flag("swapped", swapped)
                .real("exact_r1", c.exact.r1)
                .real("exact_r2", c.exact.r2)
                .real("r1_at_c2_lo", c.r1_interval.lo)
                .real("r1_at_c2_hi", c.r1_interval.hi)
                .text(
                    "note",
                    "exact corner achieves the sum-rate; interval tight as a -> 1",
                )
        }
        RegimeKind::Strong | RegimeKind::VeryStrong => {
            // The strong-interference capacity region is the intersection of
            // the two multiple-access pentagons, so the corners are exact.
            let sum_rx1 = 0.5 * (1.0 + params.p1 + params.a12 * params.p2).log2();
            let sum_rx2 = 0.5 * (1.0 + params.p2 + params.a21 * params.p1).log2();
            base()
                .real("corner1_r1", c1)
                .real("corner1_r2", stars.r2.min(c2).min(sum_rx2 - c1))
                .real("corner2_r1", stars.r1.min(c1).min(sum_rx1 - c2))
                .real("corner2_r2", c2)
                .text("note", "exact corner points of the MAC-intersection region")
        }
        RegimeKind::OneSidedStrong => {
            return Err(CliError::Domain(
                "one-sided strong interference has no corner bounds implemented".to_string(),
            ))
        }
    };
    Ok(vec![row])
}

fn cmd_delta(channel: &ChannelArgs, spec: Option<&GridSpec>) -> Result<Vec<ReportRow>, CliError> {
    let (p, a) = channel.symmetric()?;
    let report = core::delta_bounds_improved(p, a, spec)?;
    Ok(vec![ReportRow::new()
        .real("p", p)
        .real("a", a)
        .real("lower_simple", report.lower_simple.value)
        .flag("lower_simple_valid", report.lower_simple.valid)
        .real("upper_simple", report.upper_simple.value)
        .real("lower_improved", report.lower_improved.value)
        .opt_text("lower_improved_active", report.lower_improved.active_term)
        .real("upper_improved", report.upper_improved.value)
        .opt_text("upper_improved_active", report.upper_improved.active_term)
        .real("corner_total_lower", report.corner_total_lower)
        .real("corner_total_upper", report.corner_total_upper)
        .real("asymptotic_lower", report.asymptotic_lower)
        .real("asymptotic_upper", report.asymptotic_upper)])
}

fn parse_sweep(s: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Domain(format!(
            "bad sweep '{s}', expected START:STOP:STEP"
        )));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| {
            p.parse::<f64>()
                .map_err(|_| CliError::Domain(format!("bad sweep number '{p}'")))
        })
        .collect::<Result<_, _>>()?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if step <= 0.0 || stop < start {
        return Err(CliError::Domain(format!("bad sweep range '{s}'")));
    }
    let n = ((stop - start) / step).round() as usize + 1;
    Ok((0..n)
        .map(|i| start + step * i as f64)
        .filter(|&a| a <= stop + 1e-12)
        .collect())
}

fn cmd_sumrate(
    channel: &ChannelArgs,
    sweep_a: Option<String>,
    spec: Option<&GridSpec>,
) -> Result<Vec<ReportRow>, CliError> {
    if let Some(sweep) = sweep_a {
        let (p, _) = match channel.symmetric() {
            Ok(pa) => pa,
            Err(_) => {
                let params = channel.params();
                match params {
                    Ok(pr) if pr.p1 == pr.p2 => (pr.p1, 0.0),
                    _ => {
                        return Err(CliError::Domain(
                            "sweeps need a symmetric power (--p or --p-db)".to_string(),
                        ))
                    }
                }
            }
        };
        let gains = parse_sweep(&sweep)?;
        let mut rows = Vec::with_capacity(gains.len());
        for a in gains {
            let b = core::best_sum_bounds(p, a, spec)?;
            rows.push(
                ReportRow::new()
                    .real("p", p)
                    .real("a", a)
                    .real("upper", b.upper.value)
                    .real("lower", b.lower.value)
                    .opt_text("active_term", b.upper.active_term),
            );
        }
        return Ok(rows);
    }

    let params = channel.params()?;
    if params.is_symmetric() {
        let (p, a) = (params.p1, params.a12);
        let etw = core::etw_sum_upper(&params)?;
        let etkin = core::etkin_sum_upper(p, a, spec)?;
        let kramer = core::kramer_sum_upper(p, a)?;
        let half_bit = core::hk_sum_lower_half_bit(&params)?;
        let hk = core::hk_sum_lower_optimized(p, a, spec)?;
        let subclass = core::tin_subclass(p, a)?;
        let best = core::best_sum_bounds(p, a, spec)?;
        Ok(vec![ReportRow::new()
            .real("p", p)
            .real("a", a)
            .real("etw_upper", etw.value)
            .opt_text("etw_active", etw.active_term)
            .real("etkin_upper", etkin.value)
            .real("kramer_upper", kramer.value)
            .real("tin_lower", core::tin_sum_rate(p, a))
            .real("hk_lower", hk.value)
            .real("hk_half_bit_lower", half_bit.value)
            .flag("hk_half_bit_valid", half_bit.valid)
            .flag("in_tin_subclass", subclass.in_subclass)
            .real("best_upper", best.upper.value)
            .opt_text("best_upper_active", best.upper.active_term)
            .real("best_lower", best.lower.value)
            .opt_text("best_lower_active", best.lower.active_term)])
    } else {
        let etw = core::etw_sum_upper(&params)?;
        let half_bit = core::hk_sum_lower_half_bit(&params)?;
        Ok(vec![channel_row(&params)
            .real("etw_upper", etw.value)
            .opt_text("etw_active", etw.active_term)
            .real("hk_half_bit_lower", half_bit.value)
            .flag("hk_half_bit_valid", half_bit.valid)
            .text("hk_half_bit_note", half_bit.note)])
    }
}

fn cmd_asymptotics(alpha: f64, probe_p: Option<Vec<f64>>) -> Result<Vec<ReportRow>, CliError> {
    let level = InterferenceLevel::new(alpha)?;
    match probe_p {
        None => Ok(vec![ReportRow::new()
            .real("alpha", alpha)
            .real("gdof", core::gdof(level))
            .real("delta_slope", core::delta_slope(level))
            .real("normalized_loss", core::normalized_loss(level))]),
        Some(powers) => {
            let rows = core::convergence_probe(level, &powers)?;
            let slope = core::delta_slope(level);
            Ok(rows
                .into_iter()
                .map(|r| {
                    ReportRow::new()
                        .real("alpha", alpha)
                        .real("p", r.p)
                        .real("upper_norm", r.upper_norm)
                        .real("lower_norm", r.lower_norm)
                        .real("delta_slope", slope)
                })
                .collect())
        }
    }
}

fn cmd_table1(p_db: &[f64], spec: Option<&GridSpec>) -> Result<Vec<ReportRow>, CliError> {
    let rows = core::table1(p_db, spec)?;
    Ok(rows
        .into_iter()
        .map(|r| {
            ReportRow::new()
                .real("p_db", r.p_db)
                .real("p", r.p)
                .real("a_min_asymptotic", r.a_min_asymptotic)
                .real("a_min", r.a_min)
                .real("norm_delta_min_asymptotic", r.norm_delta_min_asymptotic)
                .real("norm_delta_min", r.norm_delta_min)
                .real("a_max_asymptotic", r.a_max_asymptotic)
                .real("a_max", r.a_max)
                .real("norm_delta_max_asymptotic", r.norm_delta_max_asymptotic)
                .real("norm_delta_max", r.norm_delta_max)
        })
        .collect())
}

fn cmd_figure(
    which: FigureId,
    p: Option<f64>,
    a: Option<f64>,
    (a_min, a_max, a_step): (f64, f64, f64),
    region: RegionId,
    constraints: bool,
    spec: Option<&GridSpec>,
) -> Result<Vec<ReportRow>, CliError> {
    match which {
        FigureId::Fig1 => Ok(core::threshold_curve()
            .into_iter()
            .map(|(a, db)| ReportRow::new().real("a", a).real("p_threshold_db", db))
            .collect()),
        FigureId::Fig2 => {
            let params = ChannelParams::symmetric(p.unwrap_or(100.0), a.unwrap_or(0.5))?;
            fig2_rows(&params, region, constraints)
        }
        FigureId::Fig3 => {
            let n = (2.5 / 0.005f64).round() as usize + 1;
            Ok((0..n)
                .map(|i| {
                    let alpha = 0.005 * i as f64;
                    let level = InterferenceLevel::new(alpha).expect("grid is nonnegative");
                    ReportRow::new()
                        .real("alpha", alpha)
                        .real("gdof", core::gdof(level))
                        .real("delta_slope", core::delta_slope(level))
                })
                .collect())
        }
        FigureId::Fig4 | FigureId::Fig5 => {
            let default_p = if which == FigureId::Fig4 { 500.0 } else { 1e4 };
            let p = p.unwrap_or(default_p);
            if !(a_step > 0.0 && a_min > 0.0 && a_max < 1.0 && a_min <= a_max) {
                return Err(CliError::Domain(format!(
                    "bad gain grid [{a_min}, {a_max}] step {a_step}; need 0 < min <= max < 1"
                )));
            }
            let n = ((a_max - a_min) / a_step).round() as usize + 1;
            let gains: Vec<f64> = (0..n)
                .map(|i| a_min + a_step * i as f64)
                .filter(|&g| g < 1.0)
                .collect();
            let rows = core::delta_sweep(p, &gains, spec)?;
            Ok(rows
                .into_iter()
                .map(|row| {
                    ReportRow::new()
                        .real("a", row.a)
                        .real("lower_simple", row.report.lower_simple.value)
                        .real("upper_simple", row.report.upper_simple.value)
                        .real("lower_improved", row.report.lower_improved.value)
                        .real("upper_improved", row.report.upper_improved.value)
                        .real("asymptotic_lower", row.report.asymptotic_lower)
                        .real("asymptotic_upper", row.report.asymptotic_upper)
                })
                .collect())
        }
    }
}

fn fig2_rows(
    params: &ChannelParams,
    region: RegionId,
    constraints: bool,
) -> Result<Vec<ReportRow>, CliError> {
    if region == RegionId::Kramer {
        if constraints {
            return Err(CliError::Domain(
                "the Kramer bound is parametric; no half-plane constraint export".to_string(),
            ));
        }
        let pts = core::kramer_boundary(params)?;
        return Ok(pts
            .into_iter()
            .map(|pt| {
                ReportRow::new()
                    .text("kind", "boundary")
                    .real("r1", pt.r1)
                    .real("r2", pt.r2)
            })
            .collect());
    }
    let built = match region {
        RegionId::Etw => core::etw_region(params)?,
        RegionId::TelatarTse => core::telatar_tse_region(params)?,
        RegionId::Kramer => unreachable!(),
    };
    if constraints {
        return Ok(built
            .constraints
            .iter()
            .map(|c| {
                ReportRow::new()
                    .text("tag", c.tag)
                    .real("c1", c.c1)
                    .real("c2", c.c2)
                    .real("bound", c.bound)
            })
            .collect());
    }
    let mut rows: Vec<ReportRow> = built
        .boundary()
        .into_iter()
        .map(|pt| {
            ReportRow::new()
                .text("kind", "boundary")
                .real("r1", pt.r1)
                .real("r2", pt.r2)
        })
        .collect();
    let stars = core::conjectured_corner_rates(params);
    let c1 = core::single_user_capacity(params.p1)?;
    let c2 = core::single_user_capacity(params.p2)?;
    rows.push(
        ReportRow::new()
            .text("kind", "corner")
            .real("r1", c1)
            .real("r2", stars.r2),
    );
    rows.push(
        ReportRow::new()
            .text("kind", "corner")
            .real("r1", stars.r1)
            .real("r2", c2),
    );
    Ok(rows)
}
