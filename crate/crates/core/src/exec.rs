//! Chunked execution of embarrassingly-parallel trial batches.
//!
//! Work is split into fixed-size chunks identified by index; the per-chunk
//! closure derives all of its randomness from that index. Results come back
//! in chunk order, so merging is scheduling-independent and the parallel and
//! serial paths produce bit-identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Trials per chunk. Part of the deterministic chunking policy: changing it
/// changes which RNG stream serves which trial.
pub const CHUNK_TRIALS: u64 = 1 << 16;

/// Number of chunks covering `trials`.
pub fn chunk_count(trials: u64) -> u64 {
    trials.div_ceil(CHUNK_TRIALS)
}

/// Trial range of chunk `index`.
pub fn chunk_range(index: u64, trials: u64) -> std::ops::Range<u64> {
    let lo = index * CHUNK_TRIALS;
    lo..trials.min(lo + CHUNK_TRIALS)
}

/// Trials handled by chunk `index`.
pub fn chunk_len(index: u64, trials: u64) -> u64 {
    let r = chunk_range(index, trials);
    r.end - r.start
}

/// Maps `f` over chunk indices on the rayon pool (with the `parallel`
/// feature) or sequentially (without), returning results in index order.
#[cfg(feature = "parallel")]
pub fn map_chunks<T: Send>(chunks: u64, f: impl Fn(u64) -> T + Send + Sync) -> Vec<T> {
    (0..chunks).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_chunks<T>(chunks: u64, f: impl Fn(u64) -> T + Send + Sync) -> Vec<T> {
    (0..chunks).map(f).collect()
}

/// Single-thread reference path; always available so the parallel path can be
/// checked against it within one build.
pub fn map_chunks_serial<T>(chunks: u64, f: impl Fn(u64) -> T) -> Vec<T> {
    (0..chunks).map(f).collect()
}
