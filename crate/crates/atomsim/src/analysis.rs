//! Plot-ready metrics and the (α × depth) experiment grid.
//!
//! One [`SweepRow`] per grid cell captures what a hazard/throughput plot
//! needs: the non-blocking hazard rates, the blocking completion-time
//! penalty as a ratio, and the absolute throughput the locked pipeline
//! sustains.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sim::{self, Mode, SimConfig, SimResult};
use crate::trace::{apply_alpha, Trace};

/// One (α, depth) cell of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub depth: u32,
    /// Non-blocking hazards per cycle.
    pub hazard_rate_time: f64,
    /// Non-blocking hazards per packet.
    pub hazard_rate_packets: f64,
    /// `duration_nonblocking / duration_blocking`, in (0, 1].
    pub relative_throughput: f64,
    /// Gb/s the blocking run sustains over its full duration.
    pub absolute_throughput_gbps: f64,
    pub duration_nonblocking: u64,
    pub duration_blocking: u64,
}

/// Completion-time ratio of a non-blocking/blocking pair run on the same
/// trace and depth. 1.0 exactly means the lock never delayed anyone.
pub fn relative_throughput(nb: &SimResult, blk: &SimResult) -> Result<f64> {
    if nb.mode != Mode::NonBlocking || blk.mode != Mode::Blocking {
        return Err(Error::domain(
            "relative_throughput takes a (nonblocking, blocking) result pair",
        ));
    }
    if nb.depth != blk.depth {
        return Err(Error::domain(format!(
            "depth mismatch: nonblocking ran at {}, blocking at {}",
            nb.depth, blk.depth
        )));
    }
    if nb.packet_count != blk.packet_count
        || nb.total_bits != blk.total_bits
        || nb.alpha != blk.alpha
    {
        return Err(Error::domain(
            "results do not come from the same trace",
        ));
    }
    Ok(nb.duration_cycles as f64 / blk.duration_cycles as f64)
}

/// Wire throughput of a run in Gb/s: total bits over wall-clock duration.
pub fn absolute_throughput_gbps(result: &SimResult, config: &SimConfig) -> f64 {
    result.total_bits as f64 * config.clock_hz as f64 / result.duration_cycles as f64 / 1e9
}

/// Runs both modes for every (α, depth) cell and collects one row each.
///
/// `trace` is α-scaled once per α (`config.min_packet_bytes` as the floor),
/// then simulated at every depth. Rows come back in cartesian order — α
/// outer, depth inner — regardless of which cells finished first; the α
/// slices are evaluated in parallel.
pub fn run_sweep(
    trace: &Trace,
    alphas: &[f64],
    depths: &[u32],
    config: &SimConfig,
) -> Result<Vec<SweepRow>> {
    config.validate()?;
    if trace.is_empty() {
        return Err(Error::domain("cannot sweep an empty trace"));
    }
    if alphas.is_empty() || depths.is_empty() {
        return Err(Error::domain(
            "sweep grid needs at least one alpha and one depth",
        ));
    }
    let slices: Vec<Vec<SweepRow>> = alphas
        .par_iter()
        .map(|&alpha| {
            let scaled = apply_alpha(trace, alpha, config.min_packet_bytes)?;
            depths
                .iter()
                .map(|&depth| sweep_cell(&scaled, alpha, depth, config))
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(slices.into_iter().flatten().collect())
}

fn sweep_cell(scaled: &Trace, alpha: f64, depth: u32, config: &SimConfig) -> Result<SweepRow> {
    let nb = sim::simulate_nonblocking(
        scaled,
        &config.with_depth(depth).with_mode(Mode::NonBlocking),
    )?;
    let blk = sim::simulate_blocking(scaled, &config.with_depth(depth).with_mode(Mode::Blocking))?;
    Ok(SweepRow {
        alpha,
        depth,
        hazard_rate_time: nb.hazard_rate_time,
        hazard_rate_packets: nb.hazard_rate_packets,
        relative_throughput: relative_throughput(&nb, &blk)?,
        absolute_throughput_gbps: absolute_throughput_gbps(&blk, config),
        duration_nonblocking: nb.duration_cycles,
        duration_blocking: blk.duration_cycles,
    })
}

/// Renders rows as CSV: fixed header, rationals with six fractional
/// digits, durations as integers. Byte-deterministic for equal rows.
pub fn sweep_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(
        "alpha,depth,hazard_rate_time,hazard_rate_packets,relative_throughput,\
         absolute_throughput_gbps,duration_nonblocking,duration_blocking\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{:.6},{},{:.6},{:.6},{:.6},{:.6},{},{}\n",
            r.alpha,
            r.depth,
            r.hazard_rate_time,
            r.hazard_rate_packets,
            r.relative_throughput,
            r.absolute_throughput_gbps,
            r.duration_nonblocking,
            r.duration_blocking,
        ));
    }
    out
}

/// Renders rows as a JSON array of objects with the CSV's field names.
pub fn sweep_to_json(rows: &[SweepRow]) -> String {
    let mut out =
        serde_json::to_string_pretty(rows).expect("SweepRow serialization cannot fail");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{simulate_blocking, simulate_nonblocking};
    use crate::trace::TraceSource;

    fn trace_of(sizes: &[u32]) -> Trace {
        Trace::from_sizes(sizes.iter().copied(), TraceSource::Csv).unwrap()
    }

    fn cfg(depth: u32, mode: Mode) -> SimConfig {
        SimConfig::default().with_depth(depth).with_mode(mode)
    }

    fn pair(sizes: &[u32], depth: u32) -> (SimResult, SimResult) {
        let t = trace_of(sizes);
        (
            simulate_nonblocking(&t, &cfg(depth, Mode::NonBlocking)).unwrap(),
            simulate_blocking(&t, &cfg(depth, Mode::Blocking)).unwrap(),
        )
    }

    #[test]
    fn relative_throughput_examples() {
        let (nb, blk) = pair(&[1500, 1500], 10);
        assert_eq!(nb.duration_cycles, 48);
        assert_eq!(blk.duration_cycles, 48);
        assert_eq!(relative_throughput(&nb, &blk).unwrap(), 1.0);

        let (nb, blk) = pair(&[64, 64, 64], 2);
        assert_eq!(relative_throughput(&nb, &blk).unwrap(), 5.0 / 7.0);

        let (nb, blk) = pair(&vec![64; 10_000], 4);
        let rel = relative_throughput(&nb, &blk).unwrap();
        assert!((rel - 0.25).abs() < 0.001, "got {rel}");
    }

    #[test]
    fn relative_throughput_rejects_mismatches() {
        let (nb, blk) = pair(&[64, 64], 2);
        assert!(relative_throughput(&blk, &nb).is_err());
        assert!(relative_throughput(&nb, &nb).is_err());
        let (_, blk3) = pair(&[64, 64], 3);
        assert!(relative_throughput(&nb, &blk3).is_err());
        let (_, blk_other) = pair(&[64, 1500], 2);
        assert!(relative_throughput(&nb, &blk_other).is_err());
    }

    #[test]
    fn absolute_throughput_anchors() {
        let config = cfg(3, Mode::NonBlocking);
        // 80 B packets sustain the full 640 Gb/s line rate (amortized).
        let nb = simulate_nonblocking(&trace_of(&vec![80; 50_000]), &config).unwrap();
        let gbps = absolute_throughput_gbps(&nb, &config);
        assert!((gbps - 640.0).abs() / 640.0 < 0.01, "got {gbps}");

        // 64 B packets waste a fifth of every chunk cycle.
        let nb = simulate_nonblocking(&trace_of(&vec![64; 50_000]), &config).unwrap();
        let gbps = absolute_throughput_gbps(&nb, &config);
        assert!((gbps - 512.0).abs() / 512.0 < 0.01, "got {gbps}");

        // Locked at depth 2: one 64 B packet per 2 cycles.
        let config = cfg(2, Mode::Blocking);
        let blk = simulate_blocking(&trace_of(&vec![64; 50_000]), &config).unwrap();
        let gbps = absolute_throughput_gbps(&blk, &config);
        assert!((gbps - 256.0).abs() / 256.0 < 0.01, "got {gbps}");
    }

    #[test]
    fn sweep_grid_shape_and_order() {
        let rows = run_sweep(
            &trace_of(&[64, 1500]),
            &[0.0, 1.0],
            &[1, 2],
            &SimConfig::default(),
        )
        .unwrap();
        assert_eq!(rows.len(), 4);
        let cells: Vec<(f64, u32)> = rows.iter().map(|r| (r.alpha, r.depth)).collect();
        assert_eq!(cells, vec![(0.0, 1), (0.0, 2), (1.0, 1), (1.0, 2)]);
    }

    #[test]
    fn alpha_zero_erases_size_information() {
        let a = run_sweep(
            &trace_of(&[64, 1500, 700]),
            &[0.0],
            &[1, 2, 5],
            &SimConfig::default(),
        )
        .unwrap();
        let b = run_sweep(
            &trace_of(&[1518, 1518, 1518]),
            &[0.0],
            &[1, 2, 5],
            &SimConfig::default(),
        )
        .unwrap();
        for (ra, rb) in a.iter().zip(&b) {
            assert_eq!(ra.hazard_rate_packets, rb.hazard_rate_packets);
            assert_eq!(ra.duration_nonblocking, rb.duration_nonblocking);
        }
    }

    #[test]
    fn baseline_cell_is_clean() {
        let rows = run_sweep(
            &trace_of(&[64, 700, 1500]),
            &[1.0],
            &[1],
            &SimConfig::default(),
        )
        .unwrap();
        assert_eq!(rows[0].hazard_rate_packets, 0.0);
        assert_eq!(rows[0].relative_throughput, 1.0);
    }

    #[test]
    fn sweep_rejects_degenerate_inputs() {
        let t = trace_of(&[64]);
        let c = SimConfig::default();
        assert!(run_sweep(&t, &[], &[1], &c).is_err());
        assert!(run_sweep(&t, &[0.5], &[], &c).is_err());
        assert!(run_sweep(&t, &[1.5], &[1], &c).is_err());
        let empty = Trace::from_sizes([], TraceSource::Csv).unwrap();
        assert!(run_sweep(&empty, &[0.5], &[1], &c).is_err());
    }

    #[test]
    fn sweep_monotonicity() {
        let sizes: Vec<u32> = (0..400).map(|i| 64 + (i * 37) % 1400).collect();
        let alphas = [0.0, 0.25, 0.5, 0.75, 1.0];
        let depths: Vec<u32> = (1..=19).collect();
        let rows = run_sweep(&trace_of(&sizes), &alphas, &depths, &SimConfig::default()).unwrap();

        for slice in rows.chunks(depths.len()) {
            for w in slice.windows(2) {
                assert!(w[0].hazard_rate_packets <= w[1].hazard_rate_packets);
                assert!(w[0].relative_throughput >= w[1].relative_throughput);
            }
        }
        for d_idx in 0..depths.len() {
            let column: Vec<f64> = rows
                .iter()
                .skip(d_idx)
                .step_by(depths.len())
                .map(|r| r.relative_throughput)
                .collect();
            for w in column.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
        for r in &rows {
            assert!(r.hazard_rate_time <= r.hazard_rate_packets);
            assert!(r.relative_throughput > 0.0 && r.relative_throughput <= 1.0);
        }
    }

    #[test]
    fn csv_rendering_is_exact() {
        let rows = run_sweep(
            &trace_of(&[64, 64, 64]),
            &[0.0],
            &[2],
            &SimConfig::default(),
        )
        .unwrap();
        let csv = sweep_to_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "alpha,depth,hazard_rate_time,hazard_rate_packets,relative_throughput,\
             absolute_throughput_gbps,duration_nonblocking,duration_blocking"
        );
        // Hand trace: hazards 2/5 cycles, 2/3 packets, durations 5 and 7,
        // blocking moves 3*64*8 bits in 7 ns.
        assert_eq!(
            lines.next().unwrap(),
            "0.000000,2,0.400000,0.666667,0.714286,219.428571,5,7"
        );
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn json_rendering_round_trips() {
        let rows = run_sweep(
            &trace_of(&[64, 1500]),
            &[0.0, 1.0],
            &[1, 2],
            &SimConfig::default(),
        )
        .unwrap();
        let parsed: Vec<SweepRow> = serde_json::from_str(&sweep_to_json(&rows)).unwrap();
        assert_eq!(parsed, rows);
    }
}
