//! Cycle-accurate occupancy model of a store-and-forward ingress reader
//! feeding a multi-cycle action pipeline.
//!
//! # Timing model
//!
//! The switch reads packets back to back in chunks of `chunk_bytes` per
//! clock cycle (80 B at 1 GHz sustains 640 Gb/s), so packet `i` needs
//! `r_i = ceil(size_i / chunk_bytes)` reader cycles. With `a_0 = 0` and
//! `a_i = a_{i-1} + r_i`, packet `i`'s chunks occupy reader cycles
//! `[a_{i-1}, a_i - 1]` and its parsed header reaches the action pipeline
//! at cycle `a_i` — store-and-forward, the whole packet lands before the
//! header is processed.
//!
//! The action pipeline is a single stateful action spanning `depth` clock
//! cycles: a header entering at cycle `e` occupies the pipeline during
//! `[e, e + depth - 1]`.
//!
//! Two admission policies are modeled:
//!
//! * **Non-blocking** ([`simulate_nonblocking`]): every header enters at its
//!   arrival cycle. When the previous header is still in flight the entry is
//!   counted as a *concurrency hazard* — the state read at the first stage
//!   would observe a value the in-flight packet has not yet written back.
//!   Arrivals are at least one cycle apart, so the immediate predecessor is
//!   the only possible occupant to collide with.
//! * **Blocking** ([`simulate_blocking`]): a lock admits one header at a
//!   time; later headers wait in an unbounded FIFO. Entry cycles follow
//!   `e_1 = a_1`, `e_i = max(a_i, e_{i-1} + depth)`. The reader never
//!   stalls; locking shows up as inflated completion time, never as loss.
//!
//! Both simulators are closed-form recurrences over the arrival sequence.
//! [`oracle`] holds a naive per-cycle reference implementation used to
//! cross-check them.

pub mod oracle;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trace::Trace;

/// Admission policy for the action pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
#[value(rename_all = "lower")]
pub enum Mode {
    /// Admit on arrival and count concurrency hazards.
    NonBlocking,
    /// Single-occupancy lock with FIFO waiting.
    Blocking,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::NonBlocking => "nonblocking",
            Mode::Blocking => "blocking",
        })
    }
}

/// Switch parameterization for one run.
///
/// Defaults follow the dimensioning of a 640 Gb/s RMT-style ASIC: 80-byte
/// read chunks, a 1 GHz clock, and 64-byte minimum frames.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    /// Bytes the ingress reads per clock cycle.
    pub chunk_bytes: u32,
    /// Clock cycles the stateful action occupies (pipeline depth D).
    pub depth: u32,
    pub mode: Mode,
    /// Clock cycles per second.
    pub clock_hz: u64,
    /// Minimum frame size, used by α scaling and normalization.
    pub min_packet_bytes: u32,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            chunk_bytes: 80,
            depth: 1,
            mode: Mode::NonBlocking,
            clock_hz: 1_000_000_000,
            min_packet_bytes: 64,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.chunk_bytes < 1 {
            return Err(Error::domain("chunk_bytes must be >= 1"));
        }
        if self.depth < 1 {
            return Err(Error::domain("depth must be >= 1"));
        }
        if self.clock_hz < 1 {
            return Err(Error::domain("clock_hz must be >= 1"));
        }
        if self.min_packet_bytes < 1 {
            return Err(Error::domain("min_packet_bytes must be >= 1"));
        }
        Ok(())
    }

    pub fn with_depth(mut self, depth: u32) -> Self {
        self.depth = depth;
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    /// Ingress line rate implied by the chunk size and clock, in Gb/s.
    pub fn line_rate_gbps(&self) -> f64 {
        u64::from(self.chunk_bytes) as f64 * 8.0 * self.clock_hz as f64 / 1e9
    }
}

/// Outputs of one simulation run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimResult {
    pub packet_count: u64,
    /// Wire bits carried by the whole trace.
    pub total_bits: u64,
    /// Entries that found the pipeline still occupied (0 under blocking).
    pub hazard_count: u64,
    /// Cycle at which the last header entered the pipeline.
    pub entry_cycles_last: u64,
    /// Cycles from 0 through the last pipeline exit:
    /// `entry_cycles_last + depth`.
    pub duration_cycles: u64,
    /// Hazard entries per simulated cycle.
    pub hazard_rate_time: f64,
    /// Hazard entries per packet.
    pub hazard_rate_packets: f64,
    pub mode: Mode,
    pub depth: u32,
    /// α the input trace was scaled with, if any.
    pub alpha: Option<f64>,
}

/// Clock cycles needed to read `size_bytes` in `chunk_bytes` chunks:
/// `ceil(size / chunk)`. 64 B fits one 80 B chunk; 1500 B takes 19.
pub fn read_cycles(size_bytes: u32, chunk_bytes: u32) -> u64 {
    debug_assert!(size_bytes >= 1 && chunk_bytes >= 1);
    (u64::from(size_bytes) + u64::from(chunk_bytes) - 1) / u64::from(chunk_bytes)
}

/// Cycle at which each packet's header becomes available to the pipeline:
/// the running sum `a_i = a_{i-1} + r_i` with `a_0 = 0`. Strictly
/// increasing, gaps of at least one cycle.
pub fn arrival_cycles(trace: &Trace, config: &SimConfig) -> Result<Vec<u64>> {
    config.validate()?;
    if trace.is_empty() {
        return Err(Error::domain("cannot simulate an empty trace"));
    }
    let mut cycle = 0u64;
    Ok(trace
        .sizes()
        .map(|size| {
            cycle += read_cycles(size, config.chunk_bytes);
            cycle
        })
        .collect())
}

/// Pipeline entry cycle of every packet under `config.mode`.
///
/// Non-blocking entries are exactly the arrival cycles; blocking entries
/// follow the lock recurrence `e_i = max(a_i, e_{i-1} + depth)`.
pub fn entry_cycles(trace: &Trace, config: &SimConfig) -> Result<Vec<u64>> {
    let arrivals = arrival_cycles(trace, config)?;
    Ok(match config.mode {
        Mode::NonBlocking => arrivals,
        Mode::Blocking => blocking_entries(&arrivals, u64::from(config.depth)),
    })
}

fn blocking_entries(arrivals: &[u64], depth: u64) -> Vec<u64> {
    let mut entries = Vec::with_capacity(arrivals.len());
    let mut prev: Option<u64> = None;
    for &a in arrivals {
        let e = match prev {
            None => a,
            Some(p) => a.max(p + depth),
        };
        entries.push(e);
        prev = Some(e);
    }
    entries
}

/// Hazards predicted directly from packet sizes:
/// `|{i >= 2 : size_i <= chunk_bytes * (depth - 1)}|`.
///
/// Packet `i` hazards exactly when its own read time is shorter than the
/// action (`r_i < depth`), so the hazard curve is the packet-size CDF read
/// at `chunk_bytes * (depth - 1)`.
pub fn hazard_closed_form(trace: &Trace, config: &SimConfig) -> u64 {
    let threshold = u64::from(config.chunk_bytes) * (u64::from(config.depth) - 1);
    trace
        .sizes()
        .skip(1)
        .filter(|&s| u64::from(s) <= threshold)
        .count() as u64
}

/// Runs the non-blocking model: every header enters at its arrival cycle,
/// and entries that find the pipeline occupied are counted as hazards.
pub fn simulate_nonblocking(trace: &Trace, config: &SimConfig) -> Result<SimResult> {
    if config.mode != Mode::NonBlocking {
        return Err(Error::domain(
            "simulate_nonblocking requires mode = nonblocking",
        ));
    }
    let arrivals = arrival_cycles(trace, config)?;
    let depth = u64::from(config.depth);
    let hazard_count = arrivals
        .windows(2)
        .filter(|w| w[1] < w[0] + depth)
        .count() as u64;
    debug_assert_eq!(hazard_count, hazard_closed_form(trace, config));
    Ok(build_result(trace, config, &arrivals, hazard_count))
}

/// Runs the blocking model: a lock holds each header out until its
/// predecessor leaves, so hazards cannot occur and delay accumulates
/// through the FIFO instead.
pub fn simulate_blocking(trace: &Trace, config: &SimConfig) -> Result<SimResult> {
    if config.mode != Mode::Blocking {
        return Err(Error::domain("simulate_blocking requires mode = blocking"));
    }
    let arrivals = arrival_cycles(trace, config)?;
    let entries = blocking_entries(&arrivals, u64::from(config.depth));
    Ok(build_result(trace, config, &entries, 0))
}

/// Dispatches to the simulator selected by `config.mode`.
pub fn simulate(trace: &Trace, config: &SimConfig) -> Result<SimResult> {
    match config.mode {
        Mode::NonBlocking => simulate_nonblocking(trace, config),
        Mode::Blocking => simulate_blocking(trace, config),
    }
}

fn build_result(
    trace: &Trace,
    config: &SimConfig,
    entries: &[u64],
    hazard_count: u64,
) -> SimResult {
    let entry_cycles_last = *entries.last().expect("entries are non-empty");
    let duration_cycles = entry_cycles_last + u64::from(config.depth);
    let packet_count = trace.len() as u64;
    SimResult {
        packet_count,
        total_bits: trace.total_bits(),
        hazard_count,
        entry_cycles_last,
        duration_cycles,
        hazard_rate_time: hazard_count as f64 / duration_cycles as f64,
        hazard_rate_packets: hazard_count as f64 / packet_count as f64,
        mode: config.mode,
        depth: config.depth,
        alpha: trace.alpha_applied,
    }
}
