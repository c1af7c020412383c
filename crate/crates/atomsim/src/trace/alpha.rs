//! The α size-scaling transform.
//!
//! α interpolates a trace between the worst case and the size mix it was
//! captured with: α = 0 collapses every packet to the minimum size, α = 1
//! keeps the original distribution, and intermediate values pull every
//! packet linearly toward the minimum.

use crate::error::{Error, Result};
use crate::trace::{PacketRecord, Trace, TraceSource};

/// Scales one wire size toward `min_size`:
/// `min_size + floor(alpha * (size - min_size))`.
///
/// The result is always within `[min_size, size]`; α = 0 maps everything to
/// `min_size`, α = 1 is the identity, and the map is non-decreasing in α.
pub fn scale_packet_size(size: u32, alpha: f64, min_size: u32) -> Result<u32> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::domain(format!(
            "alpha must be within [0, 1], got {alpha}"
        )));
    }
    if size < min_size {
        return Err(Error::domain(format!(
            "packet size {size} is below the minimum size {min_size}"
        )));
    }
    let gap = f64::from(size - min_size);
    let scaled = (alpha * gap).floor() as u32;
    Ok(min_size + scaled)
}

/// Applies [`scale_packet_size`] to every record, preserving order and
/// length, and tags the result with the α it was produced with.
pub fn apply_alpha(trace: &Trace, alpha: f64, min_size: u32) -> Result<Trace> {
    if trace.is_empty() {
        return Err(Error::domain("cannot scale an empty trace"));
    }
    let records = trace
        .records
        .iter()
        .map(|r| {
            scale_packet_size(r.size_bytes, alpha, min_size).map(|size_bytes| PacketRecord {
                size_bytes,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Trace {
        records,
        source: TraceSource::Transformed,
        alpha_applied: Some(alpha),
    })
}
