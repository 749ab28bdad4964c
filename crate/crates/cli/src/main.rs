//! `irsnoma`: sweep experiments over IRS-assisted NOMA scenarios and emit
//! plot-ready tables.
//!
//! Exit codes: 0 success, 2 configuration error, 3 numerical failure,
//! 4 validation-threshold breach (validate experiment only).

use clap::{Args, Parser, Subcommand, ValueEnum};
use irsnoma::config::{load_config, Loaded};
use irsnoma::emit::{emit, EmitError, Format};
use irsnoma::sweep::{run_sweep, Experiment};
use irsnoma_core::model::OrderingMode;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "irsnoma", version, about = "IRS-assisted NOMA downlink performance sweeps")]
struct Cli {
    #[command(subcommand)]
    experiment: ExperimentCmd,
}

#[derive(Subcommand)]
enum ExperimentCmd {
    /// Outage probability versus transmit SNR
    #[command(name = "outage-sweep")]
    OutageSweep(CommonArgs),
    /// Ergodic rate versus transmit SNR
    #[command(name = "ergodic-sweep")]
    ErgodicSweep(CommonArgs),
    /// Outage versus the reflector position on the unit-normalized path
    #[command(name = "distance-sweep")]
    DistanceSweep(CommonArgs),
    /// Two-user outage over a dynamic power-allocation grid
    #[command(name = "power-grid")]
    PowerGrid(CommonArgs),
    /// Energy efficiency versus transmit SNR
    #[command(name = "energy-sweep")]
    EnergySweep(CommonArgs),
    /// Cross-validate closed forms against Monte Carlo (z-scores)
    #[command(name = "validate")]
    Validate(CommonArgs),
}

impl ExperimentCmd {
    fn split(&self) -> (Experiment, &CommonArgs) {
        match self {
            ExperimentCmd::OutageSweep(a) => (Experiment::OutageSweep, a),
            ExperimentCmd::ErgodicSweep(a) => (Experiment::ErgodicSweep, a),
            ExperimentCmd::DistanceSweep(a) => (Experiment::DistanceSweep, a),
            ExperimentCmd::PowerGrid(a) => (Experiment::PowerGrid, a),
            ExperimentCmd::EnergySweep(a) => (Experiment::EnergySweep, a),
            ExperimentCmd::Validate(a) => (Experiment::Validate, a),
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Scenario file (TOML)
    #[arg(long)]
    config: PathBuf,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Override the Monte-Carlo trial count
    #[arg(long)]
    trials: Option<u64>,
    /// Override the master seed
    #[arg(long)]
    seed: Option<u64>,
    /// Override the user-ordering rule
    #[arg(long, value_enum)]
    ordering: Option<OrderingArg>,
    /// Override the Gauss-Laguerre order
    #[arg(long = "quad-u")]
    quad_u: Option<usize>,
    /// Override the Gauss-Chebyshev order
    #[arg(long = "quad-n")]
    quad_n: Option<usize>,
    /// Override the adaptive-integration relative tolerance
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderingArg {
    #[value(name = "per-column")]
    PerColumn,
    #[value(name = "effective-gain")]
    EffectiveGain,
}

fn apply_overrides(loaded: &mut Loaded, args: &CommonArgs) {
    if let Some(t) = args.trials {
        loaded.sweep.trials = t;
    }
    if let Some(s) = args.seed {
        loaded.sweep.seed = s;
    }
    if let Some(o) = args.ordering {
        loaded.network.ordering = match o {
            OrderingArg::PerColumn => OrderingMode::PerColumn,
            OrderingArg::EffectiveGain => OrderingMode::EffectiveGain,
        };
    }
    if let Some(u) = args.quad_u {
        loaded.sweep.quad_u = u;
    }
    if let Some(n) = args.quad_n {
        loaded.sweep.quad_n = n;
    }
    if let Some(t) = args.tol {
        loaded.sweep.tol = t;
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (experiment, args) = cli.experiment.split();

    let mut loaded = match load_config(&args.config) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    apply_overrides(&mut loaded, args);
    if loaded.sweep.trials == 0 {
        eprintln!("error: trials must be positive");
        return ExitCode::from(2);
    }

    let outcome = match run_sweep(&loaded, experiment) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    for w in &outcome.warnings {
        eprintln!("warning: {w}");
    }

    let format = match args.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    match emit(&outcome.rows, format, args.out.as_deref()) {
        Ok(()) => {}
        Err(e @ EmitError::Empty) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
        Err(e @ EmitError::Io { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if outcome.validate_breach {
        return ExitCode::from(4);
    }
    ExitCode::SUCCESS
}
