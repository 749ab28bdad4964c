//! Experiment orchestration behind the `irsnoma` binary: scenario files,
//! sweep execution and plot-ready CSV/JSON emission.

pub mod config;
pub mod emit;
pub mod sweep;

pub use config::{load_config, ConfigFileError, Loaded};
pub use emit::{emit, Format};
pub use sweep::{run_sweep, Experiment, Row, SweepOutcome};
