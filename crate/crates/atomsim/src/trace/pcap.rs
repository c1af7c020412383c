//! Classic libpcap file parsing, lengths only.
//!
//! The simulator needs nothing but wire sizes, so this reader walks the
//! record headers, takes `orig_len` from each (the length on the wire, not
//! the captured slice), and skips every payload byte uninterpreted. pcapng
//! is out of scope.

use crate::error::{Error, Result};
use crate::trace::{Trace, TraceSource};

const GLOBAL_HEADER_LEN: usize = 24;
const RECORD_HEADER_LEN: usize = 16;

const MAGIC_USEC: u32 = 0xa1b2_c3d4;
const MAGIC_USEC_SWAPPED: u32 = 0xd4c3_b2a1;
const MAGIC_NSEC: u32 = 0xa1b2_3c4d;
const MAGIC_NSEC_SWAPPED: u32 = 0x4d3c_b2a1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Endian {
    Little,
    Big,
}

impl Endian {
    fn read_u32(self, bytes: &[u8]) -> u32 {
        let arr: [u8; 4] = bytes[..4].try_into().unwrap();
        match self {
            Endian::Little => u32::from_le_bytes(arr),
            Endian::Big => u32::from_be_bytes(arr),
        }
    }
}

/// Extracts the per-packet wire lengths from a classic libpcap stream.
///
/// All four magic variants are accepted (microsecond and nanosecond
/// timestamps, either byte order). Version, snaplen, and link type are
/// parsed but not constrained. A capture with zero records is a valid,
/// empty trace.
pub fn parse_pcap_lengths(data: &[u8]) -> Result<Trace> {
    if data.len() < GLOBAL_HEADER_LEN {
        return Err(Error::Format(format!(
            "global header needs {GLOBAL_HEADER_LEN} bytes, stream has {}",
            data.len()
        )));
    }
    let magic = u32::from_le_bytes(data[..4].try_into().unwrap());
    let endian = match magic {
        MAGIC_USEC | MAGIC_NSEC => Endian::Little,
        MAGIC_USEC_SWAPPED | MAGIC_NSEC_SWAPPED => Endian::Big,
        other => {
            return Err(Error::Format(format!("unrecognized magic {other:#010x}")));
        }
    };
    // version (2x u16), thiszone, sigfigs, snaplen, network: accepted as-is.

    let mut offset = GLOBAL_HEADER_LEN;
    let mut sizes = Vec::new();
    let mut record = 1usize;
    while offset < data.len() {
        let remaining = data.len() - offset;
        if remaining < RECORD_HEADER_LEN {
            return Err(Error::Truncated {
                record,
                reason: format!(
                    "stream ends {remaining} bytes into a {RECORD_HEADER_LEN}-byte record header"
                ),
            });
        }
        let header = &data[offset..offset + RECORD_HEADER_LEN];
        let incl_len = endian.read_u32(&header[8..12]) as usize;
        let orig_len = endian.read_u32(&header[12..16]);
        offset += RECORD_HEADER_LEN;

        if orig_len == 0 {
            return Err(Error::domain(format!(
                "pcap record {record}: orig_len must be >= 1"
            )));
        }
        if data.len() - offset < incl_len {
            return Err(Error::Truncated {
                record,
                reason: format!(
                    "payload needs {incl_len} bytes, stream has {}",
                    data.len() - offset
                ),
            });
        }
        offset += incl_len;
        sizes.push(orig_len);
        record += 1;
    }
    Trace::from_sizes(sizes, TraceSource::Pcap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn global_header(magic_le_value: u32, endian: Endian) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(&magic_le_value.to_le_bytes());
        let push32 = |out: &mut Vec<u8>, v: u32| match endian {
            Endian::Little => out.extend_from_slice(&v.to_le_bytes()),
            Endian::Big => out.extend_from_slice(&v.to_be_bytes()),
        };
        match endian {
            Endian::Little => {
                out.extend_from_slice(&2u16.to_le_bytes());
                out.extend_from_slice(&4u16.to_le_bytes());
            }
            Endian::Big => {
                out.extend_from_slice(&2u16.to_be_bytes());
                out.extend_from_slice(&4u16.to_be_bytes());
            }
        }
        push32(&mut out, 0); // thiszone
        push32(&mut out, 0); // sigfigs
        push32(&mut out, 262_144); // snaplen
        push32(&mut out, 1); // linktype: Ethernet
        out
    }

    fn record(endian: Endian, incl_len: u32, orig_len: u32) -> Vec<u8> {
        let mut out = Vec::new();
        let push32 = |out: &mut Vec<u8>, v: u32| match endian {
            Endian::Little => out.extend_from_slice(&v.to_le_bytes()),
            Endian::Big => out.extend_from_slice(&v.to_be_bytes()),
        };
        push32(&mut out, 1_700_000_000); // ts_sec
        push32(&mut out, 123_456); // ts_subsec
        push32(&mut out, incl_len);
        push32(&mut out, orig_len);
        out.extend(std::iter::repeat_n(0xab, incl_len as usize));
        out
    }

    #[test]
    fn single_record_uses_orig_len() {
        let mut data = global_header(MAGIC_USEC, Endian::Little);
        data.extend(record(Endian::Little, 60, 1500));
        let t = parse_pcap_lengths(&data).unwrap();
        assert_eq!(t.sizes().collect::<Vec<_>>(), vec![1500]);
        assert_eq!(t.source, TraceSource::Pcap);
    }

    #[test]
    fn byte_swapped_magic_parses() {
        // Written big-endian: reading the first word as LE sees the swap.
        let mut data = global_header(MAGIC_USEC_SWAPPED, Endian::Big);
        data.extend(record(Endian::Big, 64, 64));
        data.extend(record(Endian::Big, 64, 64));
        let t = parse_pcap_lengths(&data).unwrap();
        assert_eq!(t.sizes().collect::<Vec<_>>(), vec![64, 64]);
    }

    #[test]
    fn nanosecond_magics_parse() {
        let mut data = global_header(MAGIC_NSEC, Endian::Little);
        data.extend(record(Endian::Little, 0, 100));
        let t = parse_pcap_lengths(&data).unwrap();
        assert_eq!(t.sizes().collect::<Vec<_>>(), vec![100]);

        let mut data = global_header(MAGIC_NSEC_SWAPPED, Endian::Big);
        data.extend(record(Endian::Big, 4, 9000));
        let t = parse_pcap_lengths(&data).unwrap();
        assert_eq!(t.sizes().collect::<Vec<_>>(), vec![9000]);
    }

    #[test]
    fn snap_truncated_capture_reports_wire_length() {
        // incl_len != orig_len: the trace must carry the wire length.
        let mut data = global_header(MAGIC_USEC, Endian::Little);
        data.extend(record(Endian::Little, 96, 1518));
        let t = parse_pcap_lengths(&data).unwrap();
        assert_eq!(t.sizes().collect::<Vec<_>>(), vec![1518]);
    }

    #[test]
    fn bad_magic_is_a_format_error() {
        let mut data = global_header(MAGIC_USEC, Endian::Little);
        data[0] = 0x00;
        assert!(matches!(parse_pcap_lengths(&data), Err(Error::Format(_))));
    }

    #[test]
    fn stream_ending_mid_header_is_truncation_at_record_1() {
        let mut data = global_header(MAGIC_USEC, Endian::Little);
        data.extend_from_slice(&[0u8; 7]);
        match parse_pcap_lengths(&data) {
            Err(Error::Truncated { record, .. }) => assert_eq!(record, 1),
            other => panic!("expected truncation, got {other:?}"),
        }
    }

    #[test]
    fn stream_ending_mid_payload_carries_record_index() {
        let mut data = global_header(MAGIC_USEC, Endian::Little);
        data.extend(record(Endian::Little, 60, 1500));
        let mut second = record(Endian::Little, 60, 1500);
        second.truncate(RECORD_HEADER_LEN + 10);
        data.extend(second);
        match parse_pcap_lengths(&data) {
            Err(Error::Truncated { record, .. }) => assert_eq!(record, 2),
            other => panic!("expected truncation, got {other:?}"),
        }
    }

    #[test]
    fn zero_orig_len_is_a_domain_error() {
        let mut data = global_header(MAGIC_USEC, Endian::Little);
        data.extend(record(Endian::Little, 0, 0));
        assert!(matches!(parse_pcap_lengths(&data), Err(Error::Domain(_))));
    }

    #[test]
    fn header_only_capture_is_an_empty_trace() {
        let data = global_header(MAGIC_USEC, Endian::Little);
        let t = parse_pcap_lengths(&data).unwrap();
        assert!(t.is_empty());
    }

    #[test]
    fn short_global_header_is_a_format_error() {
        assert!(matches!(
            parse_pcap_lengths(&[0xd4, 0xc3, 0xb2]),
            Err(Error::Format(_))
        ));
    }
}
