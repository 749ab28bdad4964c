//! Performance evaluation of IRS-assisted NOMA downlink networks under the
//! 1-bit coding scheme.
//!
//! The crate pairs closed-form and asymptotic evaluators (outage probability,
//! ergodic rate, throughput, energy efficiency) with a seeded, chunked
//! Monte-Carlo engine so that every analytical curve can be cross-validated
//! against simulation, plus conventional AF/DF relaying baselines.
//!
//! Layout:
//! - [`bessel`]: integer-order modified Bessel functions of the second kind,
//!   small-argument expansions, log-gamma.
//! - [`quadrature`]: Gauss-Laguerre and Gauss-Chebyshev rules, adaptive
//!   semi-infinite integration.
//! - [`model`]: scenario configuration, channel statistics, random draws,
//!   cascade gains, user ordering, SINRs.
//! - [`analytic`]: the closed-form/asymptotic evaluators and energy model.
//! - [`montecarlo`]: seeded Monte-Carlo estimators with confidence intervals.
//!
//! The `parallel` feature (on by default) runs Monte-Carlo chunks on a rayon
//! pool. Estimates are bit-identical with and without it: trials are split
//! into fixed-size chunks, each chunk draws from its own counter-derived RNG
//! stream, and per-chunk tallies are merged in chunk order.

pub mod analytic;
pub mod bessel;
pub mod exec;
pub mod model;
pub mod montecarlo;
pub mod quadrature;

pub use analytic::{EnergyModel, OutageMethod, OutageResult};
pub use model::{ChannelDraw, ChannelStats, Codebook, NetworkConfig, OrderingMode, SicMode};
pub use montecarlo::{BaselineConfig, BaselineScheme, McEstimate, Metric};
pub use quadrature::QuadratureRule;
