//! Trace-driven, cycle-accurate simulation of multi-cycle stateful actions
//! in a programmable switch pipeline.
//!
//! An RMT-style switch at 640 Gb/s reads 80 bytes per 1 GHz clock cycle,
//! so a minimum-size packet arrives every cycle while a stateful action
//! (a read-modify-write on switch state) may need several cycles. Two
//! consecutive packets hitting the same action then race — a concurrency
//! hazard — unless the action is locked, which instead costs throughput.
//! This crate quantifies both effects over packet traces: ingest real
//! sizes from pcap or CSV ([`trace`]), resample synthetic traces from an
//! empirical CDF and compress the size distribution with an α factor
//! ([`trace::synth_trace`], [`trace::apply_alpha`]), simulate both
//! admission policies cycle-accurately ([`sim`]), and sweep the
//! (α × depth) grid into plot-ready tables ([`analysis`]).
//!
//! ```
//! use atomsim::sim::{simulate, Mode, SimConfig};
//! use atomsim::trace::{Trace, TraceSource};
//!
//! // Three packets; the middle one is full-size, the others minimal.
//! let trace = Trace::from_sizes([64, 1500, 64], TraceSource::Synthetic)?;
//!
//! // A 4-cycle action admitted without locking: the last packet enters
//! // one cycle after its small predecessor... which is still mid-action.
//! let config = SimConfig {
//!     depth: 4,
//!     ..SimConfig::default()
//! };
//! let result = simulate(&trace, &config)?;
//! assert_eq!(result.hazard_count, 1);
//!
//! // The same trace behind a lock: no hazards, longer completion.
//! let locked = simulate(&trace, &config.with_mode(Mode::Blocking))?;
//! assert_eq!(locked.hazard_count, 0);
//! assert!(locked.duration_cycles >= result.duration_cycles);
//! # Ok::<(), atomsim::Error>(())
//! ```
//!
//! The `atomsim` binary exposes the same pipeline as batch subcommands
//! (`ingest`, `synth`, `cdf`, `sim`, `sweep`), and the crate's `examples/`
//! directory walks through each capability end to end.

pub mod analysis;
pub mod cli;
mod error;
pub mod sim;
pub mod trace;

pub use error::{Error, Result};
