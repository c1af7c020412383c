//! Empirical packet-size CDFs and inverse-CDF trace synthesis.
//!
//! The CDF of a captured trace is both an inspection artifact and the seed
//! for synthetic workloads: [`synth_trace`] draws sizes by inverse-transform
//! sampling so that arbitrarily long traces reproduce a measured (or
//! hand-written) size distribution. Sampling uses ChaCha8 seeded from a
//! user-supplied integer, so the same (cdf, n, seed) triple always yields
//! the same trace, on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trace::{Trace, TraceSource};

/// One step of a packet-size CDF: the fraction of packets with
/// `size <= size_bytes`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CdfPoint {
    pub size_bytes: u32,
    pub cum_fraction: f64,
}

/// Checks the CDF invariants: non-empty, sizes >= 1 and strictly
/// increasing, fractions in (0, 1] and strictly increasing, last exactly 1.
pub fn validate_cdf(cdf: &[CdfPoint]) -> Result<()> {
    if cdf.is_empty() {
        return Err(Error::domain("CDF must have at least one point"));
    }
    for (i, p) in cdf.iter().enumerate() {
        if p.size_bytes == 0 {
            return Err(Error::domain(format!("CDF point {i}: size must be >= 1")));
        }
        if !(p.cum_fraction > 0.0 && p.cum_fraction <= 1.0) {
            return Err(Error::domain(format!(
                "CDF point {i}: cumulative fraction {} outside (0, 1]",
                p.cum_fraction
            )));
        }
        if i > 0 {
            if p.size_bytes <= cdf[i - 1].size_bytes {
                return Err(Error::domain(format!(
                    "CDF point {i}: sizes must be strictly increasing"
                )));
            }
            if p.cum_fraction <= cdf[i - 1].cum_fraction {
                return Err(Error::domain(format!(
                    "CDF point {i}: fractions must be strictly increasing"
                )));
            }
        }
    }
    let last = cdf.last().unwrap();
    if last.cum_fraction != 1.0 {
        return Err(Error::domain(format!(
            "CDF must end at exactly 1.0, got {}",
            last.cum_fraction
        )));
    }
    Ok(())
}

/// Computes the empirical CDF of a trace: one point per distinct size in
/// ascending order. The final point is exactly 1.
pub fn empirical_cdf(trace: &Trace) -> Result<Vec<CdfPoint>> {
    if trace.is_empty() {
        return Err(Error::domain("cannot take the CDF of an empty trace"));
    }
    let mut sizes: Vec<u32> = trace.sizes().collect();
    sizes.sort_unstable();
    let total = sizes.len() as f64;
    let mut points = Vec::new();
    let mut seen = 0usize;
    let mut i = 0usize;
    while i < sizes.len() {
        let size = sizes[i];
        while i < sizes.len() && sizes[i] == size {
            i += 1;
        }
        seen = i;
        points.push(CdfPoint {
            size_bytes: size,
            cum_fraction: seen as f64 / total,
        });
    }
    debug_assert_eq!(seen, sizes.len());
    Ok(points)
}

/// Draws `n` packet sizes from `cdf` by inverse-transform sampling.
///
/// Each draw takes u uniform in (0, 1] and emits the smallest size whose
/// cumulative fraction is >= u. Deterministic for a fixed (cdf, n, seed).
pub fn synth_trace(cdf: &[CdfPoint], n: u64, seed: u64) -> Result<Trace> {
    validate_cdf(cdf)?;
    if n == 0 {
        return Err(Error::domain("synthetic trace length must be >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sizes = Vec::with_capacity(n as usize);
    for _ in 0..n {
        // random::<f64>() is uniform on [0, 1); flip it into (0, 1].
        let u = 1.0 - rng.random::<f64>();
        let idx = cdf.partition_point(|p| p.cum_fraction < u);
        sizes.push(cdf[idx].size_bytes);
    }
    Trace::from_sizes(sizes, TraceSource::Synthetic)
}

/// Renders a CDF in the export format: `size_bytes,cum_fraction` header,
/// one point per line, shortest-round-trip fraction formatting.
pub fn cdf_to_csv(cdf: &[CdfPoint]) -> String {
    let mut out = String::from("size_bytes,cum_fraction\n");
    for p in cdf {
        out.push_str(&format!("{},{}\n", p.size_bytes, p.cum_fraction));
    }
    out
}

/// Parses the [`cdf_to_csv`] format back into a validated point list.
pub fn parse_cdf_csv(text: &str) -> Result<Vec<CdfPoint>> {
    let mut points = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line_no == 1 && line == "size_bytes,cum_fraction" {
            continue;
        }
        let (size_field, frac_field) = line.split_once(',').ok_or(Error::ParseLine {
            line: line_no,
            reason: "expected `size_bytes,cum_fraction`".into(),
        })?;
        let size_bytes: u32 = size_field.trim().parse().map_err(|_| Error::ParseLine {
            line: line_no,
            reason: format!("expected integer size, got {:?}", size_field.trim()),
        })?;
        let cum_fraction: f64 = frac_field.trim().parse().map_err(|_| Error::ParseLine {
            line: line_no,
            reason: format!("expected fraction, got {:?}", frac_field.trim()),
        })?;
        points.push(CdfPoint {
            size_bytes,
            cum_fraction,
        });
    }
    validate_cdf(&points)?;
    Ok(points)
}
