//! Scenario configuration, channel statistics, the 1-bit coding codebook,
//! random channel realizations, cascade gains, user ordering and SINRs.
//!
//! The downlink has `M` users served through an IRS of `K = P * Q` elements.
//! The surface is partitioned into `P` disjoint groups of `Q` elements
//! (codebook `V = I_P (x) 1_Q`); 1-bit coding activates the single group that
//! maximizes the served user's SINR. Channels are Rayleigh: each coefficient
//! is complex Gaussian with variance `d^-alpha` of its hop distance.
//!
//! The analysis works with the marginal distribution of every user's cascade
//! gain and applies i.i.d. order statistics across users. The sampler
//! therefore draws an independent BS->IRS vector per user, and the
//! `PerColumn` ordering mode ranks the variance-normalized gains (an i.i.d.
//! ensemble) before rescaling by the rank owner's variance, which is exactly
//! the ensemble the closed forms describe. `EffectiveGain` ordering instead
//! ranks each user's own best-group gain (the scheme a deployment would run);
//! the two coincide for `P = 1`.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Residual-interference handling at the SIC stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SicMode {
    /// perfect cancellation (`varpi = 0`)
    Psic,
    /// imperfect cancellation with residual power `|h_I|^2` (`varpi = 1`)
    Ipsic,
}

/// How ranked effective gains are formed for `P >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderingMode {
    /// order statistics inside each element group, then best group per rank
    /// (the structure the closed forms are derived under)
    #[default]
    PerColumn,
    /// each user keeps its own best group, users then ranked by that gain
    EffectiveGain,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("K must equal P*Q (got K={k}, P={p}, Q={q})")]
    Partition { k: usize, p: usize, q: usize },
    #[error("power allocation must be non-increasing: a[{0}] < a[{1}]")]
    PowerOrdering(usize, usize),
    #[error("power allocation must sum to 1 (got {0})")]
    PowerSum(f64),
    #[error("power allocation entries must be > 0")]
    PowerPositivity,
    #[error("{0} must be strictly positive")]
    NonPositive(&'static str),
    #[error("need one {what} per user: expected {expected}, got {got}")]
    PerUserLength { what: &'static str, expected: usize, got: usize },
    #[error("target rates must be non-negative")]
    NegativeRate,
    #[error("residual interference must be non-negative")]
    NegativeResidual,
}

/// Full scenario description. Distances are normalized, powers linear.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkConfig {
    /// number of NOMA users `M`
    pub num_users: usize,
    /// IRS elements `K = P * Q`
    pub reflecting_elements: usize,
    /// codebook columns `P`
    pub partition: usize,
    /// elements per group `Q`
    pub group_size: usize,
    /// power fractions `a_1 >= ... >= a_M`, summing to one
    pub power_alloc: Vec<f64>,
    /// per-user target rates, bits per channel use
    pub target_rates: Vec<f64>,
    /// orthogonal benchmark user's target rate
    pub oma_target_rate: f64,
    pub pathloss_exponent: f64,
    /// BS -> IRS distance
    pub d_sr: f64,
    /// IRS -> user distances
    pub d_rm: Vec<f64>,
    /// IRS -> orthogonal user distance
    pub d_rd: f64,
    /// mean residual interference power `Omega_I` (linear)
    pub residual_interference: f64,
    pub sic: SicMode,
    pub ordering: OrderingMode,
}

impl Default for NetworkConfig {
    /// The standard three-user evaluation scenario.
    fn default() -> Self {
        NetworkConfig {
            num_users: 3,
            reflecting_elements: 1,
            partition: 1,
            group_size: 1,
            power_alloc: vec![0.5, 0.4, 0.1],
            target_rates: vec![0.6, 1.6, 2.0],
            oma_target_rate: 4.2,
            pathloss_exponent: 2.0,
            d_sr: 0.5,
            d_rm: vec![0.5, 0.4, 0.3],
            d_rd: 0.5,
            residual_interference: 0.0,
            sic: SicMode::Psic,
            ordering: OrderingMode::PerColumn,
        }
    }
}

impl NetworkConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.validate_dynamic()?;
        for i in 1..self.power_alloc.len() {
            if self.power_alloc[i - 1] < self.power_alloc[i] {
                return Err(ConfigError::PowerOrdering(i - 1, i));
            }
        }
        Ok(())
    }

    /// Validation without the fairness ordering on `a`; dynamic power-grid
    /// sweeps legitimately cross that boundary.
    pub fn validate_dynamic(&self) -> Result<(), ConfigError> {
        let m = self.num_users;
        if m == 0 {
            return Err(ConfigError::NonPositive("num_users"));
        }
        if self.reflecting_elements != self.partition * self.group_size {
            return Err(ConfigError::Partition {
                k: self.reflecting_elements,
                p: self.partition,
                q: self.group_size,
            });
        }
        if self.partition == 0 || self.group_size == 0 {
            return Err(ConfigError::NonPositive("partition"));
        }
        if self.power_alloc.len() != m {
            return Err(ConfigError::PerUserLength {
                what: "power allocation entry",
                expected: m,
                got: self.power_alloc.len(),
            });
        }
        if self.target_rates.len() != m {
            return Err(ConfigError::PerUserLength {
                what: "target rate",
                expected: m,
                got: self.target_rates.len(),
            });
        }
        if self.d_rm.len() != m {
            return Err(ConfigError::PerUserLength {
                what: "distance",
                expected: m,
                got: self.d_rm.len(),
            });
        }
        if self.power_alloc.iter().any(|&a| a <= 0.0) {
            return Err(ConfigError::PowerPositivity);
        }
        let sum: f64 = self.power_alloc.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(ConfigError::PowerSum(sum));
        }
        if self.target_rates.iter().any(|&r| r < 0.0) {
            return Err(ConfigError::NegativeRate);
        }
        if self.oma_target_rate < 0.0 {
            return Err(ConfigError::NegativeRate);
        }
        if !(self.pathloss_exponent > 0.0) {
            return Err(ConfigError::NonPositive("pathloss_exponent"));
        }
        if !(self.d_sr > 0.0) || !(self.d_rd > 0.0) || self.d_rm.iter().any(|&d| !(d > 0.0)) {
            return Err(ConfigError::NonPositive("distance"));
        }
        if self.residual_interference < 0.0 {
            return Err(ConfigError::NegativeResidual);
        }
        Ok(())
    }

    /// `varpi`: 1 under ipSIC, 0 under pSIC.
    pub fn varpi(&self) -> f64 {
        match self.sic {
            SicMode::Ipsic => 1.0,
            SicMode::Psic => 0.0,
        }
    }

    /// Residual-interference power sum `sum_{i=q+1}^{M} a_i`.
    pub fn alloc_tail(&self, q: usize) -> f64 {
        self.power_alloc[q..].iter().sum()
    }
}

/// Linear channel variances derived from geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelStats {
    pub omega_sr: f64,
    pub omega_rm: Vec<f64>,
    pub omega_rd: f64,
}

/// `Omega = d^-alpha` per hop.
pub fn derive_stats(config: &NetworkConfig) -> ChannelStats {
    let a = config.pathloss_exponent;
    ChannelStats {
        omega_sr: config.d_sr.powf(-a),
        omega_rm: config.d_rm.iter().map(|d| d.powf(-a)).collect(),
        omega_rd: config.d_rd.powf(-a),
    }
}

/// SNR threshold `2^R - 1` of a target rate.
pub fn threshold(rate: f64) -> f64 {
    debug_assert!(rate >= 0.0);
    2f64.powf(rate) - 1.0
}

/// dB ratio to linear.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// dBW to watts.
pub fn dbw_to_watt(dbw: f64) -> f64 {
    10f64.powf(dbw / 10.0)
}

/// dBm to watts.
pub fn dbm_to_watt(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

/// The 1-bit coding column selectors: column `p` activates elements
/// `pQ..(p+1)Q` of the surface.
///
/// Under binary control every active element reflects at full amplitude, so
/// the reflection-amplitude coefficient of the continuous-surface model is
/// fixed at one and carries no field here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    pub partition: usize,
    pub group_size: usize,
}

impl Codebook {
    pub fn from_config(config: &NetworkConfig) -> Self {
        Codebook { partition: config.partition, group_size: config.group_size }
    }

    /// Element indices of column `p` (0-based).
    pub fn group(&self, p: usize) -> std::ops::Range<usize> {
        debug_assert!(p < self.partition);
        p * self.group_size..(p + 1) * self.group_size
    }
}

/// One Monte-Carlo realization.
///
/// Every user owns an independent BS->IRS vector (`h_sr[m]`) alongside its
/// IRS->user vector, matching the independence the order-statistics analysis
/// assumes across users; the orthogonal benchmark user has its own pair.
#[derive(Debug, Clone)]
pub struct ChannelDraw {
    /// per-user BS->IRS coefficients, `M x K`, `CN(0, Omega_sr)`
    pub h_sr: Vec<Vec<Complex64>>,
    /// per-user IRS->user coefficients, `M x K`, row `m` is `CN(0, Omega_rm)`
    pub h_rm: Vec<Vec<Complex64>>,
    /// orthogonal user's BS->IRS coefficients, `K`, `CN(0, Omega_sr)`
    pub h_sr_d: Vec<Complex64>,
    /// orthogonal user's IRS->user coefficients, `K`, `CN(0, Omega_rd)`
    pub h_rd: Vec<Complex64>,
    /// per-rank residual interference powers `|h_I|^2`, exponential with
    /// mean `Omega_I`
    pub residual: Vec<f64>,
}

/// Deterministic (seed, stream) -> generator map used to fan trials out over
/// independent chunks: chunk `i` of a run seeded `s` always sees the same
/// stream no matter where it executes.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn complex_gaussian(rng: &mut impl Rng, variance: f64) -> Complex64 {
    // Box-Muller pair; each component has variance/2
    let u1: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.gen();
    let r = (-variance * u1.ln()).sqrt();
    let th = 2.0 * std::f64::consts::PI * u2;
    Complex64::new(r * th.cos(), r * th.sin())
}

/// One independent channel realization. Reproducible: a cloned generator
/// state yields an identical draw.
pub fn sample_draw(
    config: &NetworkConfig,
    stats: &ChannelStats,
    rng: &mut impl Rng,
) -> ChannelDraw {
    let k = config.reflecting_elements;
    let m = config.num_users;
    let h_sr = (0..m)
        .map(|_| (0..k).map(|_| complex_gaussian(rng, stats.omega_sr)).collect())
        .collect();
    let h_rm = (0..m)
        .map(|u| (0..k).map(|_| complex_gaussian(rng, stats.omega_rm[u])).collect())
        .collect();
    let h_sr_d = (0..k).map(|_| complex_gaussian(rng, stats.omega_sr)).collect();
    let h_rd = (0..k).map(|_| complex_gaussian(rng, stats.omega_rd)).collect();
    let oi = config.residual_interference;
    let residual = (0..m)
        .map(|_| if oi == 0.0 { 0.0 } else { -oi * rng.gen::<f64>().max(f64::MIN_POSITIVE).ln() })
        .collect();
    ChannelDraw { h_sr, h_rm, h_sr_d, h_rd, residual }
}

/// Per-user-per-column cascade gains
/// `X[m][p] = |sum_{k in group p} h_sr[m][k] h_rm[m][k]|^2`.
pub fn cascade_gains(draw: &ChannelDraw, codebook: &Codebook) -> Vec<Vec<f64>> {
    draw.h_sr
        .iter()
        .zip(&draw.h_rm)
        .map(|(hs, hr)| column_gains(hs, hr, codebook))
        .collect()
}

/// Column gains of the orthogonal user.
pub fn cascade_gains_oma(draw: &ChannelDraw, codebook: &Codebook) -> Vec<f64> {
    column_gains(&draw.h_sr_d, &draw.h_rd, codebook)
}

fn column_gains(hs: &[Complex64], hr: &[Complex64], codebook: &Codebook) -> Vec<f64> {
    (0..codebook.partition)
        .map(|p| {
            let s: Complex64 = codebook.group(p).map(|k| hs[k] * hr[k]).sum();
            s.norm_sqr()
        })
        .collect()
}

/// Ranked effective gains `g[0] <= ... <= g[M-1]` (index `m-1` is rank `m`).
///
/// `PerColumn`: within each column the variance-normalized gains are sorted
/// across users and rank `m` takes the best column of its normalized order
/// statistic, rescaled by `Omega_sr * Omega_rm`. `EffectiveGain`: user `u`
/// keeps `max_p X[u][p]` and the raw values are sorted.
pub fn order_users(
    gains: &[Vec<f64>],
    stats: &ChannelStats,
    mode: OrderingMode,
) -> Vec<f64> {
    let m = gains.len();
    match mode {
        OrderingMode::PerColumn => {
            let p = gains[0].len();
            let uniform = stats.omega_rm.windows(2).all(|w| w[0] == w[1]);
            let mut ranked = vec![0.0f64; m];
            let mut col = vec![0.0f64; m];
            for pc in 0..p {
                for u in 0..m {
                    // identical variances need no normalization, and skipping
                    // it keeps the two ordering modes bit-identical there
                    col[u] = if uniform {
                        gains[u][pc]
                    } else {
                        gains[u][pc] / (stats.omega_sr * stats.omega_rm[u])
                    };
                }
                col.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
                for (rank, &c) in col.iter().enumerate() {
                    ranked[rank] = ranked[rank].max(c);
                }
            }
            if !uniform {
                for (rank, r) in ranked.iter_mut().enumerate() {
                    *r *= stats.omega_sr * stats.omega_rm[rank];
                }
            }
            ranked
        }
        OrderingMode::EffectiveGain => {
            let mut best: Vec<f64> = gains
                .iter()
                .map(|row| row.iter().copied().fold(0.0, f64::max))
                .collect();
            best.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
            best
        }
    }
}

/// SINR at the rank-`m` user decoding the rank-`q` user's signal (`q <= m`,
/// both 1-based). The last user decoding itself sees no intra-cell
/// interference; the first user performs no SIC, so its residual term is
/// forced to zero.
pub fn sinr_noma(
    gain: f64,
    q: usize,
    m: usize,
    rho: f64,
    residual: f64,
    config: &NetworkConfig,
) -> f64 {
    let big_m = config.num_users;
    assert!(q >= 1 && q <= m && m <= big_m, "decode index out of range");
    let res = if m == 1 { 0.0 } else { config.varpi() * rho * residual };
    let numer = rho * gain * config.power_alloc[q - 1];
    let denom = rho * gain * config.alloc_tail(q) + res + 1.0;
    numer / denom
}

/// Orthogonal user's SNR `rho * g_d`.
pub fn snr_oma(gain: f64, rho: f64) -> f64 {
    debug_assert!(rho > 0.0);
    rho * gain
}

/// `a_m > gamma_th_m * sum_{i>m} a_i` for every `m < M`: the SIC feasibility
/// condition the closed forms require.
pub fn feasible(config: &NetworkConfig) -> bool {
    (1..config.num_users).all(|m| {
        config.power_alloc[m - 1] > threshold(config.target_rates[m - 1]) * config.alloc_tail(m)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn stats_from_distances() {
        let mut cfg = NetworkConfig::default();
        cfg.d_sr = 0.5;
        let s = derive_stats(&cfg);
        assert_relative_eq!(s.omega_sr, 4.0);
        assert_relative_eq!(s.omega_rm[0], 4.0);
        assert_relative_eq!(s.omega_rm[1], 6.25);
        assert_relative_eq!(s.omega_rm[2], 100.0 / 9.0, max_relative = 1e-12);
        cfg.d_sr = 1.0;
        cfg.pathloss_exponent = 3.7;
        assert_relative_eq!(derive_stats(&cfg).omega_sr, 1.0);
    }

    #[test]
    fn thresholds() {
        assert_relative_eq!(threshold(0.6), 0.515_716_566_510_398, max_relative = 1e-12);
        assert_relative_eq!(threshold(2.0), 3.0);
        assert_eq!(threshold(0.0), 0.0);
    }

    #[test]
    fn default_config_is_valid_and_feasible() {
        let cfg = NetworkConfig::default();
        cfg.validate().unwrap();
        assert!(feasible(&cfg));
        // a_2 - gamma_2 a_3 = 0.4 - 2.0314*0.1 > 0
        assert!(0.4 - threshold(1.6) * 0.1 > 0.19);
    }

    #[test]
    fn validation_rejects_bad_configs() {
        let mut cfg = NetworkConfig::default();
        cfg.reflecting_elements = 3;
        cfg.partition = 2;
        cfg.group_size = 2;
        assert!(matches!(cfg.validate(), Err(ConfigError::Partition { .. })));

        let mut cfg = NetworkConfig::default();
        cfg.num_users = 2;
        cfg.power_alloc = vec![0.3, 0.7];
        cfg.target_rates = vec![0.5, 0.5];
        cfg.d_rm = vec![0.5, 0.4];
        assert!(matches!(cfg.validate(), Err(ConfigError::PowerOrdering(0, 1))));
        // the dynamic variant admits it
        cfg.validate_dynamic().unwrap();

        let mut cfg = NetworkConfig::default();
        cfg.power_alloc = vec![0.5, 0.4, 0.2];
        assert!(matches!(cfg.validate(), Err(ConfigError::PowerSum(_))));
    }

    #[test]
    fn draws_are_reproducible() {
        let cfg = NetworkConfig::default();
        let stats = derive_stats(&cfg);
        let mut r1 = stream_rng(42, 0);
        let mut r2 = stream_rng(42, 0);
        let d1 = sample_draw(&cfg, &stats, &mut r1);
        let d2 = sample_draw(&cfg, &stats, &mut r2);
        assert_eq!(d1.h_sr, d2.h_sr);
        assert_eq!(d1.h_rm, d2.h_rm);
        assert_eq!(d1.residual, d2.residual);
        // distinct streams differ
        let d3 = sample_draw(&cfg, &stats, &mut stream_rng(42, 1));
        assert_ne!(d1.h_sr, d3.h_sr);
    }

    #[test]
    fn zero_residual_mean_gives_exact_zeros() {
        let cfg = NetworkConfig::default();
        let stats = derive_stats(&cfg);
        let d = sample_draw(&cfg, &stats, &mut stream_rng(7, 0));
        assert!(d.residual.iter().all(|&r| r == 0.0));
        let mut cfg2 = cfg;
        cfg2.residual_interference = 0.1;
        let d = sample_draw(&cfg2, &stats, &mut stream_rng(7, 0));
        assert!(d.residual.iter().all(|&r| r > 0.0));
    }

    #[test]
    fn sample_moments_match_variances() {
        let cfg = NetworkConfig::default();
        let stats = derive_stats(&cfg);
        let mut rng = stream_rng(11, 0);
        let n = 100_000;
        let mut acc = 0.0;
        for _ in 0..n {
            let d = sample_draw(&cfg, &stats, &mut rng);
            acc += d.h_sr[0][0].norm_sqr();
        }
        let mean = acc / n as f64;
        // |h|^2 ~ Exp(mean Omega_sr): std error = Omega/sqrt(n)
        let se = stats.omega_sr / (n as f64).sqrt();
        assert!(
            (mean - stats.omega_sr).abs() < 3.0 * se,
            "mean {mean} vs {} (3se={})",
            stats.omega_sr,
            3.0 * se
        );
    }

    #[test]
    fn cascade_mean_is_q_omega_omega() {
        let mut cfg = NetworkConfig::default();
        cfg.reflecting_elements = 4;
        cfg.partition = 2;
        cfg.group_size = 2;
        let stats = derive_stats(&cfg);
        let cb = Codebook::from_config(&cfg);
        let mut rng = stream_rng(3, 0);
        let n = 100_000;
        let (mut acc, mut acc2) = (0.0, 0.0);
        for _ in 0..n {
            let d = sample_draw(&cfg, &stats, &mut rng);
            let x = cascade_gains(&d, &cb)[1][0];
            acc += x;
            acc2 += x * x;
        }
        let mean = acc / n as f64;
        let var = acc2 / n as f64 - mean * mean;
        let want = 2.0 * stats.omega_sr * stats.omega_rm[1];
        let se = (var / n as f64).sqrt();
        assert!((mean - want).abs() < 3.0 * se, "mean {mean} vs {want} (3se={})", 3.0 * se);
    }

    #[test]
    fn single_element_cascade_is_plain_product() {
        let cfg = NetworkConfig::default();
        let stats = derive_stats(&cfg);
        let cb = Codebook::from_config(&cfg);
        let d = sample_draw(&cfg, &stats, &mut stream_rng(5, 0));
        let x = cascade_gains(&d, &cb);
        for m in 0..3 {
            assert_relative_eq!(x[m][0], (d.h_sr[m][0] * d.h_rm[m][0]).norm_sqr());
        }
    }

    #[test]
    fn ordering_modes_coincide_for_single_column() {
        // common user distance: sorting raw and normalized gains agree
        let mut cfg = NetworkConfig::default();
        cfg.d_rm = vec![0.5, 0.5, 0.5];
        let stats = derive_stats(&cfg);
        let cb = Codebook::from_config(&cfg);
        let mut rng = stream_rng(9, 0);
        for _ in 0..200 {
            let d = sample_draw(&cfg, &stats, &mut rng);
            let x = cascade_gains(&d, &cb);
            let a = order_users(&x, &stats, OrderingMode::PerColumn);
            let b = order_users(&x, &stats, OrderingMode::EffectiveGain);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn ranked_gains_are_non_decreasing() {
        let mut cfg = NetworkConfig::default();
        cfg.reflecting_elements = 4;
        cfg.partition = 2;
        cfg.group_size = 2;
        let stats = derive_stats(&cfg);
        let cb = Codebook::from_config(&cfg);
        let mut rng = stream_rng(10, 0);
        for _ in 0..500 {
            let d = sample_draw(&cfg, &stats, &mut rng);
            let x = cascade_gains(&d, &cb);
            for mode in [OrderingMode::PerColumn, OrderingMode::EffectiveGain] {
                let g = order_users(&x, &stats, mode);
                assert!(g.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn single_user_ordering_is_best_column() {
        let mut cfg = NetworkConfig::default();
        cfg.num_users = 1;
        cfg.power_alloc = vec![1.0];
        cfg.target_rates = vec![0.6];
        cfg.d_rm = vec![0.5];
        cfg.reflecting_elements = 4;
        cfg.partition = 2;
        cfg.group_size = 2;
        let stats = derive_stats(&cfg);
        let cb = Codebook::from_config(&cfg);
        let d = sample_draw(&cfg, &stats, &mut stream_rng(13, 0));
        let x = cascade_gains(&d, &cb);
        let want = x[0].iter().copied().fold(0.0, f64::max);
        for mode in [OrderingMode::PerColumn, OrderingMode::EffectiveGain] {
            assert_relative_eq!(order_users(&x, &stats, mode)[0], want, max_relative = 1e-12);
        }
    }

    #[test]
    fn sinr_basics() {
        let mut cfg = NetworkConfig::default();
        cfg.sic = SicMode::Psic;
        // last user, unit gain, rho=10, a_M=0.1 -> SINR = 1
        assert_relative_eq!(sinr_noma(1.0, 3, 3, 10.0, 0.0, &cfg), 1.0);
        assert_eq!(sinr_noma(0.0, 1, 1, 10.0, 0.0, &cfg), 0.0);
        // q=1 denominator uses a2+a3 = 0.5
        let s = sinr_noma(2.0, 1, 2, 10.0, 0.0, &cfg);
        assert_relative_eq!(s, 10.0 * 2.0 * 0.5 / (10.0 * 2.0 * 0.5 + 1.0));
        // residual hurts (m >= 2, ipSIC), and is ignored for m = 1
        cfg.sic = SicMode::Ipsic;
        assert!(sinr_noma(2.0, 2, 2, 10.0, 0.5, &cfg) < sinr_noma(2.0, 2, 2, 10.0, 0.0, &cfg));
        assert_relative_eq!(
            sinr_noma(2.0, 1, 1, 10.0, 0.5, &cfg),
            sinr_noma(2.0, 1, 1, 10.0, 0.0, &cfg)
        );
        // monotone in gain
        assert!(sinr_noma(3.0, 2, 2, 10.0, 0.1, &cfg) > sinr_noma(2.0, 2, 2, 10.0, 0.1, &cfg));
        assert_eq!(snr_oma(0.0, 10.0), 0.0);
        assert_relative_eq!(snr_oma(2.0, 10.0), 20.0);
    }
}
