//! Parse packet sizes straight out of a pcap byte stream.
//!
//! Builds a three-record classic libpcap capture in memory — so the example
//! needs no fixture files — then parses it and prints the canonical
//! sizes-only CSV that `atomsim ingest` would write to disk.

use atomsim::trace::parse_pcap_lengths;

/// Classic little-endian global header: microsecond magic, version 2.4,
/// zone/sigfigs 0, snaplen 96, linktype 1 (Ethernet).
fn global_header(snaplen: u32) -> Vec<u8> {
    let mut h = Vec::with_capacity(24);
    h.extend_from_slice(&0xa1b2_c3d4u32.to_le_bytes());
    h.extend_from_slice(&2u16.to_le_bytes());
    h.extend_from_slice(&4u16.to_le_bytes());
    h.extend_from_slice(&0u32.to_le_bytes());
    h.extend_from_slice(&0u32.to_le_bytes());
    h.extend_from_slice(&snaplen.to_le_bytes());
    h.extend_from_slice(&1u32.to_le_bytes());
    h
}

/// One record header plus `incl_len` bytes of dummy payload. `orig_len`
/// is the wire length; `incl_len` is how much the capture actually kept.
fn record(ts_sec: u32, incl_len: u32, orig_len: u32) -> Vec<u8> {
    let mut r = Vec::with_capacity(16 + incl_len as usize);
    r.extend_from_slice(&ts_sec.to_le_bytes());
    r.extend_from_slice(&0u32.to_le_bytes());
    r.extend_from_slice(&incl_len.to_le_bytes());
    r.extend_from_slice(&orig_len.to_le_bytes());
    r.extend(std::iter::repeat_n(0xEEu8, incl_len as usize));
    r
}

fn main() -> Result<(), atomsim::Error> {
    let snaplen = 96;
    let mut capture = global_header(snaplen);
    capture.extend(record(1_700_000_000, 64, 64)); //  minimum frame, fully kept
    capture.extend(record(1_700_000_001, 96, 1500)); // full MTU, snap-truncated
    capture.extend(record(1_700_000_002, 96, 347)); //  mid-size, snap-truncated

    let trace = parse_pcap_lengths(&capture)?;
    println!("parsed {} bytes of pcap into {} records", capture.len(), trace.len());

    // The parser keeps orig_len — the true wire size — and never the
    // possibly snap-truncated incl_len, so the 1500 B packet survives.
    let (min, mean, max) = trace.size_summary().expect("capture is non-empty");
    println!("sizes: min {min} B, mean {mean:.2} B, max {max} B");

    println!("\ncanonical trace CSV:");
    print!("{}", trace.to_csv());
    Ok(())
}
