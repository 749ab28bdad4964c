//! Scenario files: a nested TOML document with strict keys. Every field has
//! a default, so an empty file yields the standard three-user evaluation
//! scenario; unknown keys are rejected outright.

use irsnoma_core::analytic::EnergyModel;
use irsnoma_core::model::{
    db_to_linear, dbm_to_watt, dbw_to_watt, ConfigError, NetworkConfig, OrderingMode, SicMode,
};
use serde::Deserialize;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid scenario: {0}")]
    Network(#[from] ConfigError),
    #[error("invalid sweep: {0}")]
    Sweep(String),
}

/// Benchmark scheme selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
pub enum Scheme {
    #[serde(rename = "irs-noma-ipsic")]
    IrsNomaIpsic,
    #[serde(rename = "irs-noma-psic")]
    IrsNomaPsic,
    #[serde(rename = "irs-oma")]
    IrsOma,
    #[serde(rename = "af")]
    Af,
    #[serde(rename = "df-fd")]
    DfFd,
    #[serde(rename = "df-hd")]
    DfHd,
}

impl Scheme {
    pub fn as_str(self) -> &'static str {
        match self {
            Scheme::IrsNomaIpsic => "irs-noma-ipsic",
            Scheme::IrsNomaPsic => "irs-noma-psic",
            Scheme::IrsOma => "irs-oma",
            Scheme::Af => "af",
            Scheme::DfFd => "df-fd",
            Scheme::DfHd => "df-hd",
        }
    }
}

/// Throughput mode feeding the energy-efficiency numerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum EnergyMode {
    #[serde(rename = "delay-limited")]
    DelayLimited,
    #[serde(rename = "delay-tolerant")]
    DelayTolerant,
}

/// Fully resolved sweep settings.
#[derive(Debug, Clone)]
pub struct SweepSettings {
    pub snr_grid_db: Vec<f64>,
    pub schemes: Vec<Scheme>,
    pub trials: u64,
    pub seed: u64,
    pub quad_u: usize,
    pub quad_n: usize,
    pub tol: f64,
    pub d_sr_grid: Vec<f64>,
    pub a_theta_grid: Vec<f64>,
}

/// Resolved energy-model settings (linear watts).
#[derive(Debug, Clone)]
pub struct EnergySettings {
    pub model: EnergyModel,
    pub mode: EnergyMode,
    /// interpret the swept SNR as the transmit power feeding the amplifier
    /// term instead of the fixed `p_s`
    pub ps_tracks_snr: bool,
}

/// Relaying-baseline knobs.
#[derive(Debug, Clone)]
pub struct BaselineSettings {
    pub loop_interference: f64,
}

/// Everything a run needs.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub network: NetworkConfig,
    pub sweep: SweepSettings,
    pub energy: EnergySettings,
    pub baseline: BaselineSettings,
}

/// Parse and validate a scenario file.
pub fn load_config(path: &Path) -> Result<Loaded, ConfigFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_config_str(&text)
}

pub fn load_config_str(text: &str) -> Result<Loaded, ConfigFileError> {
    let raw: RawFile = toml::from_str(text)?;
    raw.resolve()
}

// -- raw serde layer --------------------------------------------------------

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default)]
    network: RawNetwork,
    #[serde(default)]
    sweep: RawSweep,
    #[serde(default)]
    energy: RawEnergy,
    #[serde(default)]
    baseline: RawBaseline,
}

#[derive(Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct RawNetwork {
    num_users: usize,
    reflecting_elements: usize,
    partition: usize,
    group_size: usize,
    power_alloc: Vec<f64>,
    target_rates: Vec<f64>,
    /// defaults to the sum of the per-user target rates
    oma_target_rate: Option<f64>,
    pathloss_exponent: f64,
    d_sr: f64,
    d_rm: Vec<f64>,
    d_rd: f64,
    residual_interference_db: f64,
    sic: RawSic,
    ordering: RawOrdering,
}

impl Default for RawNetwork {
    fn default() -> Self {
        RawNetwork {
            num_users: 3,
            reflecting_elements: 1,
            partition: 1,
            group_size: 1,
            power_alloc: vec![0.5, 0.4, 0.1],
            target_rates: vec![0.6, 1.6, 2.0],
            oma_target_rate: None,
            pathloss_exponent: 2.0,
            d_sr: 0.5,
            d_rm: vec![0.5, 0.4, 0.3],
            d_rd: 0.5,
            residual_interference_db: -10.0,
            sic: RawSic::Psic,
            ordering: RawOrdering::PerColumn,
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
enum RawSic {
    #[serde(rename = "psic")]
    Psic,
    #[serde(rename = "ipsic")]
    Ipsic,
}

#[derive(Debug, Clone, Copy, Deserialize)]
enum RawOrdering {
    #[serde(rename = "per-column")]
    PerColumn,
    #[serde(rename = "effective-gain")]
    EffectiveGain,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Grid {
    Range { start: f64, stop: f64, step: f64 },
    List(Vec<f64>),
}

impl Grid {
    fn resolve(&self, what: &str) -> Result<Vec<f64>, ConfigFileError> {
        let v = match self {
            Grid::List(v) => v.clone(),
            Grid::Range { start, stop, step } => {
                if !(*step > 0.0) || stop < start {
                    return Err(ConfigFileError::Sweep(format!(
                        "{what}: need step > 0 and stop >= start"
                    )));
                }
                // end-inclusive fixed-step grid
                let n = ((stop - start) / step + 1.5).floor() as usize;
                (0..n).map(|i| start + i as f64 * step).filter(|x| *x <= stop + 1e-9).collect()
            }
        };
        if v.is_empty() {
            return Err(ConfigFileError::Sweep(format!("{what}: grid is empty")));
        }
        if v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ConfigFileError::Sweep(format!(
                "{what}: grid must be strictly increasing"
            )));
        }
        Ok(v)
    }
}

#[derive(Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct RawSweep {
    snr_db: Grid,
    schemes: Vec<Scheme>,
    trials: u64,
    seed: u64,
    quad_u: usize,
    quad_n: usize,
    tol: f64,
    d_sr_grid: Grid,
    a_theta_grid: Grid,
}

impl Default for RawSweep {
    fn default() -> Self {
        RawSweep {
            snr_db: Grid::Range { start: 10.0, stop: 40.0, step: 5.0 },
            schemes: vec![
                Scheme::IrsNomaPsic,
                Scheme::IrsOma,
                Scheme::Af,
                Scheme::DfFd,
                Scheme::DfHd,
            ],
            trials: 1_000_000,
            seed: 1,
            quad_u: 30,
            quad_n: 20,
            tol: 1e-8,
            d_sr_grid: Grid::Range { start: 0.1, stop: 0.9, step: 0.1 },
            a_theta_grid: Grid::Range { start: 0.05, stop: 0.95, step: 0.05 },
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct RawEnergy {
    kappa: f64,
    p_s_dbw: f64,
    p_bs_dbw: f64,
    p_element_dbm: f64,
    p_ue_dbm: f64,
    mode: EnergyMode,
    ps_tracks_snr: bool,
}

impl Default for RawEnergy {
    fn default() -> Self {
        RawEnergy {
            kappa: 1.2,
            p_s_dbw: 5.0,
            p_bs_dbw: 2.0,
            p_element_dbm: 10.0,
            p_ue_dbm: 10.0,
            mode: EnergyMode::DelayLimited,
            ps_tracks_snr: false,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct RawBaseline {
    loop_interference_db: f64,
}

impl Default for RawBaseline {
    fn default() -> Self {
        RawBaseline { loop_interference_db: -10.0 }
    }
}

impl RawFile {
    fn resolve(self) -> Result<Loaded, ConfigFileError> {
        let n = self.network;
        let network = NetworkConfig {
            num_users: n.num_users,
            reflecting_elements: n.reflecting_elements,
            partition: n.partition,
            group_size: n.group_size,
            oma_target_rate: n
                .oma_target_rate
                .unwrap_or_else(|| n.target_rates.iter().sum()),
            power_alloc: n.power_alloc,
            target_rates: n.target_rates,
            pathloss_exponent: n.pathloss_exponent,
            d_sr: n.d_sr,
            d_rm: n.d_rm,
            d_rd: n.d_rd,
            residual_interference: db_to_linear(n.residual_interference_db),
            sic: match n.sic {
                RawSic::Psic => SicMode::Psic,
                RawSic::Ipsic => SicMode::Ipsic,
            },
            ordering: match n.ordering {
                RawOrdering::PerColumn => OrderingMode::PerColumn,
                RawOrdering::EffectiveGain => OrderingMode::EffectiveGain,
            },
        };
        network.validate()?;

        let s = self.sweep;
        if s.schemes.is_empty() {
            return Err(ConfigFileError::Sweep("schemes: need at least one".into()));
        }
        if s.trials == 0 {
            return Err(ConfigFileError::Sweep("trials: must be positive".into()));
        }
        if !(s.tol > 0.0) {
            return Err(ConfigFileError::Sweep("tol: must be positive".into()));
        }
        let a_theta_grid = s.a_theta_grid.resolve("a_theta_grid")?;
        if a_theta_grid.iter().any(|&a| !(0.0..=1.0).contains(&a)) {
            return Err(ConfigFileError::Sweep("a_theta_grid: values must lie in [0, 1]".into()));
        }
        let sweep = SweepSettings {
            snr_grid_db: s.snr_db.resolve("snr_db")?,
            schemes: s.schemes,
            trials: s.trials,
            seed: s.seed,
            quad_u: s.quad_u,
            quad_n: s.quad_n,
            tol: s.tol,
            d_sr_grid: s.d_sr_grid.resolve("d_sr_grid")?,
            a_theta_grid,
        };

        let e = self.energy;
        let energy = EnergySettings {
            model: EnergyModel {
                kappa: e.kappa,
                p_s: dbw_to_watt(e.p_s_dbw),
                p_bs: dbw_to_watt(e.p_bs_dbw),
                p_element: dbm_to_watt(e.p_element_dbm),
                p_ue: vec![dbm_to_watt(e.p_ue_dbm); network.num_users],
            },
            mode: e.mode,
            ps_tracks_snr: e.ps_tracks_snr,
        };
        let baseline =
            BaselineSettings { loop_interference: db_to_linear(self.baseline.loop_interference_db) };
        Ok(Loaded { network, sweep, energy, baseline })
    }
}
