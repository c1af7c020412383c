//! Packet-size traces and the transforms that prepare them for simulation.
//!
//! The simulator never looks at payloads, flows, or timing: a trace is an
//! ordered list of wire sizes. Traces come from three places — libpcap
//! captures ([`parse_pcap_lengths`]), size CSV files ([`parse_size_csv`]),
//! and inverse-CDF synthesis ([`synth_trace`]) — and can be reshaped with
//! the α size-scaling transform ([`apply_alpha`]) before a run.
//!
//! Timestamps are accepted on ingest but always discarded: runs are driven
//! by the accelerated trace, packets back to back with no inter-packet gaps,
//! so only order and size survive ingestion.

mod alpha;
mod cdf;
mod pcap;

pub use alpha::{apply_alpha, scale_packet_size};
pub use cdf::{cdf_to_csv, empirical_cdf, parse_cdf_csv, synth_trace, validate_cdf, CdfPoint};
pub use pcap::parse_pcap_lengths;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest wire size a normalized trace may carry, in bytes.
pub const DEFAULT_MIN_PACKET_BYTES: u32 = 64;

/// Largest wire size a normalized trace may carry, in bytes (jumbo frame).
pub const DEFAULT_MAX_PACKET_BYTES: u32 = 9216;

/// One packet's wire size. The only per-packet attribute the model needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PacketRecord {
    pub size_bytes: u32,
}

/// Where a trace came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TraceSource {
    Pcap,
    Csv,
    Synthetic,
    Transformed,
}

/// An ordered sequence of packet sizes plus provenance.
///
/// A trace may be empty after ingestion (an empty capture is not an error);
/// emptiness is rejected at simulation time instead.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trace {
    pub records: Vec<PacketRecord>,
    pub source: TraceSource,
    /// Set when the trace is the output of [`apply_alpha`].
    pub alpha_applied: Option<f64>,
}

impl Trace {
    /// Builds a trace from raw sizes, rejecting zero-byte packets.
    pub fn from_sizes<I>(sizes: I, source: TraceSource) -> Result<Self>
    where
        I: IntoIterator<Item = u32>,
    {
        let records = sizes
            .into_iter()
            .enumerate()
            .map(|(i, size_bytes)| {
                if size_bytes == 0 {
                    Err(Error::domain(format!(
                        "record {}: packet size must be >= 1 byte",
                        i + 1
                    )))
                } else {
                    Ok(PacketRecord { size_bytes })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Trace {
            records,
            source,
            alpha_applied: None,
        })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Wire sizes in trace order.
    pub fn sizes(&self) -> impl Iterator<Item = u32> + '_ {
        self.records.iter().map(|r| r.size_bytes)
    }

    /// Total payload carried by the trace, in bits.
    pub fn total_bits(&self) -> u64 {
        self.sizes().map(|s| u64::from(s) * 8).sum()
    }

    /// Clamps every record into `[min_bytes, max_bytes]`.
    ///
    /// Raw ingestion accepts any size >= 1; simulation and α scaling expect
    /// sizes within the switch's frame bounds, so callers normalize first.
    pub fn normalized(&self, min_bytes: u32, max_bytes: u32) -> Trace {
        Trace {
            records: self
                .records
                .iter()
                .map(|r| PacketRecord {
                    size_bytes: r.size_bytes.clamp(min_bytes, max_bytes),
                })
                .collect(),
            source: self.source,
            alpha_applied: self.alpha_applied,
        }
    }

    /// Canonical on-disk form: one size per line, LF-terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.len() * 5);
        for size in self.sizes() {
            out.push_str(&size.to_string());
            out.push('\n');
        }
        out
    }

    /// (min, mean, max) of the record sizes; `None` for an empty trace.
    pub fn size_summary(&self) -> Option<(u32, f64, u32)> {
        if self.is_empty() {
            return None;
        }
        let min = self.sizes().min().unwrap();
        let max = self.sizes().max().unwrap();
        let sum: u64 = self.sizes().map(u64::from).sum();
        Some((min, sum as f64 / self.len() as f64, max))
    }
}

/// Parses a size CSV: one `<size>` or `<size>,<timestamp_ns>` per line,
/// `#` comments and blank lines skipped, LF or CRLF endings.
///
/// Timestamps are validated as integers and then dropped — the simulator
/// replays traces accelerated, with inter-packet gaps removed.
pub fn parse_size_csv(text: &str) -> Result<Trace> {
    let mut sizes = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (size_field, ts_field) = match line.split_once(',') {
            Some((s, t)) => (s.trim(), Some(t.trim())),
            None => (line, None),
        };
        let size: u32 = size_field.parse().map_err(|_| Error::ParseLine {
            line: line_no,
            reason: format!("expected integer size, got {size_field:?}"),
        })?;
        if let Some(ts) = ts_field {
            // Parsed only to reject malformed lines; the value is unused.
            ts.parse::<u64>().map_err(|_| Error::ParseLine {
                line: line_no,
                reason: format!("expected integer timestamp, got {ts:?}"),
            })?;
        }
        if size == 0 {
            return Err(Error::domain(format!(
                "line {line_no}: packet size must be >= 1 byte"
            )));
        }
        sizes.push(size);
    }
    Trace::from_sizes(sizes, TraceSource::Csv)
}
