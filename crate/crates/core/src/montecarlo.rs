//! Seeded Monte-Carlo estimation of outage probability and ergodic rate for
//! the IRS schemes and for the conventional relaying baselines.
//!
//! Trials are partitioned into fixed-size chunks; chunk `i` draws from the
//! RNG stream `(seed, i)` and produces a tally that merges by plain addition
//! in chunk order. The estimate therefore depends only on
//! `(scenario, rho, trials, seed)` and not on scheduling, and a run split
//! over a thread pool is bit-identical to the single-thread reference.

use crate::exec;
use crate::model::{
    cascade_gains, cascade_gains_oma, derive_stats, order_users, sample_draw, sinr_noma,
    snr_oma, stream_rng, threshold, ChannelStats, Codebook, NetworkConfig,
};
use rand::Rng;

/// A point estimate with its uncertainty and provenance labels.
#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub ci95_lo: f64,
    pub ci95_hi: f64,
    pub trials: u64,
    pub seed: u64,
    pub scheme: String,
    /// 1-based rank for NOMA users, "d" for the orthogonal/baseline user
    pub user: String,
    pub metric: Metric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Outage,
    Ergodic,
}

impl Metric {
    pub fn as_str(self) -> &'static str {
        match self {
            Metric::Outage => "outage",
            Metric::Ergodic => "ergodic",
        }
    }
}

/// Conventional relaying benchmark.
#[derive(Debug, Clone, PartialEq)]
pub struct BaselineConfig {
    pub scheme: BaselineScheme,
    /// mean loop self-interference power (full-duplex DF only)
    pub loop_interference: f64,
    /// first-hop mean channel gain
    pub omega1: f64,
    /// second-hop mean channel gain
    pub omega2: f64,
    pub target_rate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaselineScheme {
    /// variable-gain amplify-and-forward
    AfVariableGain,
    /// full-duplex decode-and-forward with residual loop interference
    DfFullDuplex,
    /// half-duplex decode-and-forward (1/2 rate pre-log)
    DfHalfDuplex,
}

impl BaselineScheme {
    pub fn as_str(self) -> &'static str {
        match self {
            BaselineScheme::AfVariableGain => "af",
            BaselineScheme::DfFullDuplex => "df-fd",
            BaselineScheme::DfHalfDuplex => "df-hd",
        }
    }
}

/// Trials needed to estimate a probability `p` to ~10% relative precision
/// (binomial variance heuristic, `~100/p`).
pub fn trials_for_probability(p: f64) -> u64 {
    if p <= 0.0 {
        return u64::MAX;
    }
    ((100.0 / p).ceil() as u64).max(100)
}

// ---------------------------------------------------------------------------
// tallies
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Default, PartialEq)]
struct CountTally {
    hits: Vec<u64>,
    trials: u64,
}

impl CountTally {
    fn merge(mut self, other: &CountTally) -> CountTally {
        if self.hits.is_empty() {
            self.hits = vec![0; other.hits.len()];
        }
        for (a, b) in self.hits.iter_mut().zip(&other.hits) {
            *a += b;
        }
        self.trials += other.trials;
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
struct MeanTally {
    sum: Vec<f64>,
    sum_sq: Vec<f64>,
    trials: u64,
}

impl MeanTally {
    fn merge(mut self, other: &MeanTally) -> MeanTally {
        if self.sum.is_empty() {
            self.sum = vec![0.0; other.sum.len()];
            self.sum_sq = vec![0.0; other.sum.len()];
        }
        for i in 0..other.sum.len() {
            self.sum[i] += other.sum[i];
            self.sum_sq[i] += other.sum_sq[i];
        }
        self.trials += other.trials;
        self
    }
}

fn proportion_estimate(
    hits: u64,
    trials: u64,
    seed: u64,
    scheme: &str,
    user: String,
) -> McEstimate {
    let n = trials as f64;
    let p = hits as f64 / n;
    let se = (p * (1.0 - p) / n).sqrt();
    // Wilson interval for deep-tail proportions, normal otherwise
    let (lo, hi) = if p < 1e-3 {
        let z = 1.96f64;
        let z2 = z * z;
        let centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
        let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / (1.0 + z2 / n);
        ((centre - half).max(0.0), (centre + half).min(1.0))
    } else {
        ((p - 1.96 * se).max(0.0), (p + 1.96 * se).min(1.0))
    };
    McEstimate {
        value: p,
        std_error: se,
        ci95_lo: lo.min(p),
        ci95_hi: hi.max(p),
        trials,
        seed,
        scheme: scheme.to_string(),
        user,
        metric: Metric::Outage,
    }
}

fn mean_estimate(
    sum: f64,
    sum_sq: f64,
    trials: u64,
    seed: u64,
    scheme: &str,
    user: String,
) -> McEstimate {
    let n = trials as f64;
    let mean = sum / n;
    let var = (sum_sq / n - mean * mean).max(0.0);
    let se = (var / n).sqrt();
    McEstimate {
        value: mean,
        std_error: se,
        ci95_lo: mean - 1.96 * se,
        ci95_hi: mean + 1.96 * se,
        trials,
        seed,
        scheme: scheme.to_string(),
        user,
        metric: Metric::Ergodic,
    }
}

// ---------------------------------------------------------------------------
// IRS-NOMA
// ---------------------------------------------------------------------------

fn noma_scheme_label(config: &NetworkConfig) -> &'static str {
    match config.sic {
        crate::model::SicMode::Ipsic => "irs-noma-ipsic",
        crate::model::SicMode::Psic => "irs-noma-psic",
    }
}

fn noma_outage_chunk(
    config: &NetworkConfig,
    stats: &ChannelStats,
    rho: f64,
    seed: u64,
    chunk: u64,
    trials: u64,
) -> CountTally {
    let mut rng = stream_rng(seed, chunk);
    let cb = Codebook::from_config(config);
    let m_users = config.num_users;
    let psi: Vec<Option<f64>> =
        (1..=m_users).map(|m| crate::analytic::psi_star(config, rho, m)).collect();
    let varpi = config.varpi();
    let range = exec::chunk_range(chunk, trials);
    let mut hits = vec![0u64; m_users];
    for _ in range {
        let draw = sample_draw(config, stats, &mut rng);
        let gains = cascade_gains(&draw, &cb);
        let ranked = order_users(&gains, stats, config.ordering);
        for m in 1..=m_users {
            let out = match psi[m - 1] {
                None => true,
                Some(psi_m) => {
                    // union of decode failures q <= m collapses to one
                    // threshold on the rank gain
                    let lambda = if m == 1 {
                        1.0
                    } else {
                        varpi * rho * draw.residual[m - 1] + 1.0
                    };
                    ranked[m - 1] < psi_m * lambda
                }
            };
            if out {
                hits[m - 1] += 1;
            }
        }
    }
    CountTally { hits, trials: exec::chunk_len(chunk, trials) }
}

/// Per-user outage estimates for the configured NOMA scheme.
pub fn mc_outage_noma(
    config: &NetworkConfig,
    stats: &ChannelStats,
    rho: f64,
    trials: u64,
    seed: u64,
) -> Vec<McEstimate> {
    let tallies = exec::map_chunks(exec::chunk_count(trials), |c| {
        noma_outage_chunk(config, stats, rho, seed, c, trials)
    });
    finish_noma_outage(config, tallies, seed)
}

/// Single-thread reference path of [`mc_outage_noma`]; bit-identical output.
pub fn mc_outage_noma_serial(
    config: &NetworkConfig,
    stats: &ChannelStats,
    rho: f64,
    trials: u64,
    seed: u64,
) -> Vec<McEstimate> {
    let tallies = exec::map_chunks_serial(exec::chunk_count(trials), |c| {
        noma_outage_chunk(config, stats, rho, seed, c, trials)
    });
    finish_noma_outage(config, tallies, seed)
}

fn finish_noma_outage(
    config: &NetworkConfig,
    tallies: Vec<CountTally>,
    seed: u64,
) -> Vec<McEstimate> {
    let total = tallies.iter().fold(CountTally::default(), |acc, t| acc.merge(t));
    let scheme = noma_scheme_label(config);
    (0..config.num_users)
        .map(|m| {
            proportion_estimate(total.hits[m], total.trials, seed, scheme, (m + 1).to_string())
        })
        .collect()
}

fn noma_ergodic_chunk(
    config: &NetworkConfig,
    stats: &ChannelStats,
    rho: f64,
    seed: u64,
    chunk: u64,
    trials: u64,
) -> MeanTally {
    let mut rng = stream_rng(seed, chunk);
    let cb = Codebook::from_config(config);
    let m_users = config.num_users;
    let range = exec::chunk_range(chunk, trials);
    let n = range.end - range.start;
    let mut sum = vec![0.0f64; m_users];
    let mut sum_sq = vec![0.0f64; m_users];
    for _ in range {
        let draw = sample_draw(config, stats, &mut rng);
        let gains = cascade_gains(&draw, &cb);
        let ranked = order_users(&gains, stats, config.ordering);
        for m in 1..=m_users {
            let s = sinr_noma(ranked[m - 1], m, m, rho, draw.residual[m - 1], config);
            let rate = (1.0 + s).log2();
            sum[m - 1] += rate;
            sum_sq[m - 1] += rate * rate;
        }
    }
    MeanTally { sum, sum_sq, trials: n }
}

/// Per-user achievable-rate estimates `log2(1 + SINR_{m->m})`.
pub fn mc_ergodic_noma(
    config: &NetworkConfig,
    stats: &ChannelStats,
    rho: f64,
    trials: u64,
    seed: u64,
) -> Vec<McEstimate> {
    let tallies = exec::map_chunks(exec::chunk_count(trials), |c| {
        noma_ergodic_chunk(config, stats, rho, seed, c, trials)
    });
    finish_noma_ergodic(config, tallies, seed)
}

/// Single-thread reference path of [`mc_ergodic_noma`]; bit-identical output.
pub fn mc_ergodic_noma_serial(
    config: &NetworkConfig,
    stats: &ChannelStats,
    rho: f64,
    trials: u64,
    seed: u64,
) -> Vec<McEstimate> {
    let tallies = exec::map_chunks_serial(exec::chunk_count(trials), |c| {
        noma_ergodic_chunk(config, stats, rho, seed, c, trials)
    });
    finish_noma_ergodic(config, tallies, seed)
}

fn finish_noma_ergodic(
    config: &NetworkConfig,
    tallies: Vec<MeanTally>,
    seed: u64,
) -> Vec<McEstimate> {
    let total = tallies.iter().fold(MeanTally::default(), |acc, t| acc.merge(t));
    let scheme = noma_scheme_label(config);
    (0..config.num_users)
        .map(|m| {
            mean_estimate(
                total.sum[m],
                total.sum_sq[m],
                total.trials,
                seed,
                scheme,
                (m + 1).to_string(),
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// IRS-OMA
// ---------------------------------------------------------------------------

/// Outage or ergodic-rate estimate for the orthogonal benchmark user.
pub fn mc_oma(
    config: &NetworkConfig,
    stats: &ChannelStats,
    rho: f64,
    trials: u64,
    seed: u64,
    metric: Metric,
) -> McEstimate {
    let chunks = exec::chunk_count(trials);
    match metric {
        Metric::Outage => {
            let tallies = exec::map_chunks(chunks, |c| {
                oma_outage_chunk(config, stats, rho, seed, c, trials)
            });
            let total = tallies.iter().fold(CountTally::default(), |acc, t| acc.merge(t));
            proportion_estimate(total.hits[0], total.trials, seed, "irs-oma", "d".into())
        }
        Metric::Ergodic => {
            let tallies = exec::map_chunks(chunks, |c| {
                oma_ergodic_chunk(config, stats, rho, seed, c, trials)
            });
            let total = tallies.iter().fold(MeanTally::default(), |acc, t| acc.merge(t));
            mean_estimate(total.sum[0], total.sum_sq[0], total.trials, seed, "irs-oma", "d".into())
        }
    }
}

fn oma_outage_chunk(
    config: &NetworkConfig,
    stats: &ChannelStats,
    rho: f64,
    seed: u64,
    chunk: u64,
    trials: u64,
) -> CountTally {
    let mut rng = stream_rng(seed, chunk);
    let cb = Codebook::from_config(config);
    let gamma_th = threshold(config.oma_target_rate);
    let mut hits = 0u64;
    let range = exec::chunk_range(chunk, trials);
    let n = range.end - range.start;
    for _ in range {
        let draw = sample_draw(config, stats, &mut rng);
        let g = cascade_gains_oma(&draw, &cb).into_iter().fold(0.0, f64::max);
        if snr_oma(g, rho) <= gamma_th {
            hits += 1;
        }
    }
    CountTally { hits: vec![hits], trials: n }
}

fn oma_ergodic_chunk(
    config: &NetworkConfig,
    stats: &ChannelStats,
    rho: f64,
    seed: u64,
    chunk: u64,
    trials: u64,
) -> MeanTally {
    let mut rng = stream_rng(seed, chunk);
    let cb = Codebook::from_config(config);
    let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
    let range = exec::chunk_range(chunk, trials);
    let n = range.end - range.start;
    for _ in range {
        let draw = sample_draw(config, stats, &mut rng);
        let g = cascade_gains_oma(&draw, &cb).into_iter().fold(0.0, f64::max);
        let rate = (1.0 + snr_oma(g, rho)).log2();
        sum += rate;
        sum_sq += rate * rate;
    }
    MeanTally { sum: vec![sum], sum_sq: vec![sum_sq], trials: n }
}

// ---------------------------------------------------------------------------
// relaying baselines
// ---------------------------------------------------------------------------

impl BaselineConfig {
    /// Relay placed at the IRS position, serving the orthogonal user.
    pub fn for_scheme(scheme: BaselineScheme, config: &NetworkConfig) -> BaselineConfig {
        let stats = derive_stats(config);
        BaselineConfig {
            scheme,
            loop_interference: config.residual_interference.max(0.1),
            omega1: stats.omega_sr,
            omega2: stats.omega_rd,
            target_rate: config.oma_target_rate,
        }
    }

    /// Achievable rate of one trial.
    fn trial_rate(&self, rho: f64, rng: &mut impl Rng) -> f64 {
        let g1 = rho * exponential(rng, self.omega1);
        let g2 = rho * exponential(rng, self.omega2);
        match self.scheme {
            BaselineScheme::AfVariableGain => {
                let sinr = g1 * g2 / (g1 + g2 + 1.0);
                (1.0 + sinr).log2()
            }
            BaselineScheme::DfFullDuplex => {
                let g_li = exponential(rng, self.loop_interference);
                let sinr = (g1 / (rho * g_li + 1.0)).min(g2);
                (1.0 + sinr).log2()
            }
            BaselineScheme::DfHalfDuplex => {
                let sinr = g1.min(g2);
                0.5 * (1.0 + sinr).log2()
            }
        }
    }
}

fn exponential(rng: &mut impl Rng, mean: f64) -> f64 {
    -mean * rng.gen::<f64>().max(f64::MIN_POSITIVE).ln()
}

/// Outage or ergodic-rate estimate for a relaying baseline.
pub fn mc_baseline(
    baseline: &BaselineConfig,
    rho: f64,
    trials: u64,
    seed: u64,
    metric: Metric,
) -> McEstimate {
    let chunks = exec::chunk_count(trials);
    match metric {
        Metric::Outage => {
            let tallies = exec::map_chunks(chunks, |c| {
                let mut rng = stream_rng(seed, c);
                let mut hits = 0u64;
                let range = exec::chunk_range(c, trials);
                let n = range.end - range.start;
                for _ in range {
                    if baseline.trial_rate(rho, &mut rng) < baseline.target_rate {
                        hits += 1;
                    }
                }
                CountTally { hits: vec![hits], trials: n }
            });
            let total = tallies.iter().fold(CountTally::default(), |acc, t| acc.merge(t));
            proportion_estimate(
                total.hits[0],
                total.trials,
                seed,
                baseline.scheme.as_str(),
                "d".into(),
            )
        }
        Metric::Ergodic => {
            let tallies = exec::map_chunks(chunks, |c| {
                let mut rng = stream_rng(seed, c);
                let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
                let range = exec::chunk_range(c, trials);
                let n = range.end - range.start;
                for _ in range {
                    let r = baseline.trial_rate(rho, &mut rng);
                    sum += r;
                    sum_sq += r * r;
                }
                MeanTally { sum: vec![sum], sum_sq: vec![sum_sq], trials: n }
            });
            let total = tallies.iter().fold(MeanTally::default(), |acc, t| acc.merge(t));
            mean_estimate(
                total.sum[0],
                total.sum_sq[0],
                total.trials,
                seed,
                baseline.scheme.as_str(),
                "d".into(),
            )
        }
    }
}
