//! `densecode` command line: pipelines, sweeps, optimization, verification
//! and Monte Carlo, emitting machine-readable tables.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 degenerate computation.

mod grid;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use densecode::channel::DampingParam;
use densecode::protocol::{
    find_capacity_threshold, find_min_chi1, optimal_reversal_strength, plan_b_success_prob,
    sweep, SweepAxes, SweepMode,
};
use densecode::trajectory::simulate_plan_b;

use grid::{AxisSpec, GridArg, QValue};
use output::{Format, Meta, OutputTarget, Row};

#[derive(Parser)]
#[command(name = "densecode", version, about = "Dense-coding capacity under amplitude damping, with optional weak/reversal measurement protection")]
struct Cli {
    /// Output format for tables and reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write output to a file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Unprotected pipeline: Bell state through the damping channel
    PlanA(PlanAArgs),
    /// Protected pipeline: weak filter, damping channel, reversal filter
    PlanB(PlanBArgs),
    /// Report the capacity threshold and the capacity minimum
    Optimize,
    /// Run the built-in consistency checks and report per-check results
    Verify(VerifyArgs),
    /// Monte Carlo estimate of the plan-B success probability and state
    Mc(McArgs),
}

#[derive(Args)]
struct PlanAArgs {
    /// Damping coefficient in [0, 1]
    #[arg(long)]
    d: Option<f64>,
    /// Grid over an axis, as axis=start:stop:steps (repeatable)
    #[arg(long, value_name = "AXIS=START:STOP:STEPS")]
    grid: Vec<GridArg>,
}

#[derive(Args)]
struct PlanBArgs {
    /// Damping coefficient in [0, 1]
    #[arg(long)]
    d: Option<f64>,
    /// Weak measurement strength in [0, 1]
    #[arg(long)]
    p: Option<f64>,
    /// Reversal strength in [0, 1], or `auto` for the per-point optimum
    #[arg(long)]
    q: Option<QValue>,
    /// Grid over an axis, as axis=start:stop:steps (repeatable)
    #[arg(long, value_name = "AXIS=START:STOP:STEPS")]
    grid: Vec<GridArg>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Corrupt a Kraus constant before checking (test hook)
    #[arg(long, hide = true)]
    corrupt_kraus: bool,
}

#[derive(Args)]
struct McArgs {
    /// Damping coefficient in [0, 1]
    #[arg(long)]
    d: f64,
    /// Weak measurement strength in [0, 1]
    #[arg(long)]
    p: f64,
    /// Reversal strength in [0, 1], or `auto` for the optimum
    #[arg(long)]
    q: QValue,
    /// Number of trajectories
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// RNG seed; a fixed seed reproduces the output byte for byte
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Failure that maps onto a process exit code.
enum CliError {
    Usage(String),
    Degenerate(String),
    VerificationFailed,
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Degenerate(_) => 3,
        }
    }

    fn message(&self) -> Option<&str> {
        match self {
            CliError::Usage(m) | CliError::Degenerate(m) | CliError::Io(m) => Some(m),
            CliError::VerificationFailed => None,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<densecode::Error> for CliError {
    fn from(e: densecode::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(msg) = e.message() {
                eprintln!("densecode: {msg}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut target = OutputTarget::create(cli.output.as_deref())?;
    match cli.command {
        Command::PlanA(args) => cmd_plan_a(args, cli.format, &mut target),
        Command::PlanB(args) => cmd_plan_b(args, cli.format, &mut target),
        Command::Optimize => cmd_optimize(cli.format, &mut target),
        Command::Verify(args) => cmd_verify(args, cli.format, &mut target),
        Command::Mc(args) => cmd_mc(args, cli.format, &mut target),
    }
}

fn cmd_plan_a(args: PlanAArgs, format: Format, target: &mut OutputTarget) -> Result<(), CliError> {
    let spec = AxisSpec::resolve("d", args.d, &args.grid)?
        .ok_or_else(|| CliError::Usage("plan-a needs --d or --grid d=start:stop:steps".into()))?;
    grid::reject_unknown_axes(&args.grid, &["d"])?;

    let axes = SweepAxes::plan_a(spec.values());
    let table = sweep(&axes, SweepMode::PlanA).map_err(CliError::from)?;
    let rows: Vec<Row> = table.rows.iter().map(Row::from_sweep).collect();

    let meta = Meta::new("plan-a", format)
        .with_grid("d", spec.describe())
        .with_grid("p", "0".into())
        .with_grid("q", "0".into());
    output::write_rows(target, format, &meta, &rows)?;
    Ok(())
}

fn cmd_plan_b(args: PlanBArgs, format: Format, target: &mut OutputTarget) -> Result<(), CliError> {
    let d_spec = AxisSpec::resolve("d", args.d, &args.grid)?
        .ok_or_else(|| CliError::Usage("plan-b needs --d or --grid d=start:stop:steps".into()))?;
    let p_spec = AxisSpec::resolve("p", args.p, &args.grid)?
        .ok_or_else(|| CliError::Usage("plan-b needs --p or --grid p=start:stop:steps".into()))?;
    grid::reject_unknown_axes(&args.grid, &["d", "p", "q"])?;

    let q_grid = AxisSpec::from_grids("q", &args.grid)?;
    let (mode, q_spec) = match (args.q, q_grid) {
        (Some(QValue::Auto), None) => (SweepMode::PlanBQStar, None),
        (Some(QValue::Value(v)), None) => (SweepMode::PlanB, Some(AxisSpec::single("q", v)?)),
        (None, Some(g)) => (SweepMode::PlanB, Some(g)),
        (None, None) => {
            return Err(CliError::Usage(
                "plan-b needs --q VALUE, --q auto, or --grid q=start:stop:steps".into(),
            ))
        }
        (Some(_), Some(_)) => {
            return Err(CliError::Usage("axis q specified both by --q and --grid".into()))
        }
    };

    let axes = match &q_spec {
        Some(spec) => SweepAxes {
            d: d_spec.values(),
            p: p_spec.values(),
            q: spec.values(),
        },
        None => SweepAxes::plan_b_auto(d_spec.values(), p_spec.values()),
    };
    let table = sweep(&axes, mode).map_err(CliError::from)?;
    let rows: Vec<Row> = table.rows.iter().map(Row::from_sweep).collect();

    let meta = Meta::new("plan-b", format)
        .with_grid("d", d_spec.describe())
        .with_grid("p", p_spec.describe())
        .with_grid("q", q_spec.map_or_else(|| "auto".into(), |s| s.describe()));
    output::write_rows(target, format, &meta, &rows)?;

    if rows.iter().all(|r| r.degenerate) {
        return Err(CliError::Degenerate(
            "every requested point has a vanishing post-selection probability".into(),
        ));
    }
    Ok(())
}

fn cmd_optimize(format: Format, target: &mut OutputTarget) -> Result<(), CliError> {
    let threshold = find_capacity_threshold::<f64>();
    let (d_star, chi_min) = find_min_chi1::<f64>();
    let meta = Meta::new("optimize", format);
    output::write_optimize(target, format, &meta, threshold, d_star, chi_min)?;
    Ok(())
}

fn cmd_verify(args: VerifyArgs, format: Format, target: &mut OutputTarget) -> Result<(), CliError> {
    let checks = verify::run_all(args.corrupt_kraus);
    let meta = Meta::new("verify", format);
    output::write_checks(target, format, &meta, &checks)?;
    if checks.iter().all(|c| c.pass) {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

fn cmd_mc(args: McArgs, format: Format, target: &mut OutputTarget) -> Result<(), CliError> {
    check_unit("d", args.d)?;
    check_unit("p", args.p)?;
    let d = DampingParam::new(args.d).map_err(CliError::from)?;
    let q = match args.q {
        QValue::Auto => optimal_reversal_strength(d, args.p).map_err(CliError::from)?.q_star,
        QValue::Value(v) => {
            check_unit("q", v)?;
            v
        }
    };

    let estimate = simulate_plan_b(d, args.p, q, args.trials, args.seed).map_err(CliError::from)?;
    let t_analytic = plan_b_success_prob(d, args.p, q);
    let sigma_distance = if estimate.t_stderr > 0.0 {
        Some((estimate.t_hat - t_analytic).abs() / estimate.t_stderr)
    } else {
        None
    };
    let state_max_dev = estimate.state_hat.as_ref().and_then(|state| {
        densecode::protocol::rho2_closed_form(d, args.p, q)
            .ok()
            .map(|(rho2, _)| state.mat().max_abs_diff(rho2.mat()))
    });

    let meta = Meta::new("mc", format).with_seed(args.seed);
    output::write_mc(
        target,
        format,
        &meta,
        output::McRecord {
            d: args.d,
            p: args.p,
            q,
            trials: estimate.trials,
            seed: estimate.seed,
            successes: estimate.successes,
            t_hat: estimate.t_hat,
            t_stderr: estimate.t_stderr,
            t_analytic,
            sigma_distance,
            state_max_dev,
        },
    )?;
    Ok(())
}

fn check_unit(name: &str, value: f64) -> Result<(), CliError> {
    if !value.is_finite() || !(0.0..=1.0).contains(&value) {
        return Err(CliError::Usage(format!("{name} = {value} is outside [0, 1]")));
    }
    Ok(())
}
