//! Hand-built classic libpcap fixtures shared by the integration tests.
//!
//! Every byte is written explicitly so the tests pin the file format
//! itself, not a writer library's interpretation of it.

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

/// Little-endian capture with microsecond timestamps.
pub const MAGIC_USEC: u32 = 0xa1b2_c3d4;
/// Little-endian capture with nanosecond timestamps.
pub const MAGIC_NSEC: u32 = 0xa1b2_3c4d;

fn push_u32(buf: &mut Vec<u8>, v: u32, big_endian: bool) {
    if big_endian {
        buf.extend_from_slice(&v.to_be_bytes());
    } else {
        buf.extend_from_slice(&v.to_le_bytes());
    }
}

fn push_u16(buf: &mut Vec<u8>, v: u16, big_endian: bool) {
    if big_endian {
        buf.extend_from_slice(&v.to_be_bytes());
    } else {
        buf.extend_from_slice(&v.to_le_bytes());
    }
}

/// 24-byte global header: magic, version 2.4, zone 0, sigfigs 0,
/// snaplen 0xffff, linktype 1. A big-endian writer stores the same magic
/// value in its own byte order, which is how readers detect swapping.
pub fn global_header(magic: u32, big_endian: bool) -> Vec<u8> {
    let mut h = Vec::with_capacity(24);
    push_u32(&mut h, magic, big_endian);
    push_u16(&mut h, 2, big_endian);
    push_u16(&mut h, 4, big_endian);
    push_u32(&mut h, 0, big_endian);
    push_u32(&mut h, 0, big_endian);
    push_u32(&mut h, 0xffff, big_endian);
    push_u32(&mut h, 1, big_endian);
    h
}

/// 16-byte record header followed by `incl_len` bytes of 0xAB payload.
pub fn record(incl_len: u32, orig_len: u32, big_endian: bool) -> Vec<u8> {
    let mut r = Vec::with_capacity(16 + incl_len as usize);
    push_u32(&mut r, 1_600_000_000, big_endian);
    push_u32(&mut r, 42, big_endian);
    push_u32(&mut r, incl_len, big_endian);
    push_u32(&mut r, orig_len, big_endian);
    r.extend(std::iter::repeat_n(0xABu8, incl_len as usize));
    r
}

/// Whole capture file: header plus `(incl_len, orig_len)` records.
pub fn pcap_file(magic: u32, big_endian: bool, records: &[(u32, u32)]) -> Vec<u8> {
    let mut f = global_header(magic, big_endian);
    for &(incl, orig) in records {
        f.extend(record(incl, orig, big_endian));
    }
    f
}
