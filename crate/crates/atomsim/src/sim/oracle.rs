//! Brute-force reference simulator.
//!
//! Walks the clock one cycle at a time, moving bytes through the reader and
//! headers through an explicit `depth`-slot pipeline, instead of using the
//! arrival/entry recurrences in the parent module. It is O(total cycles)
//! rather than O(packets), exists purely to cross-check the fast path, and
//! shares none of its arithmetic.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::sim::{Mode, SimConfig, SimResult};
use crate::trace::Trace;

/// Per-cycle state machine equivalent of [`crate::sim::simulate`].
pub fn oracle_simulate(trace: &Trace, config: &SimConfig) -> Result<SimResult> {
    let run = run(trace, config)?;
    let packet_count = trace.len() as u64;
    let entry_cycles_last = *run.entries.last().expect("trace is non-empty");
    debug_assert_eq!(run.last_exit, entry_cycles_last + u64::from(config.depth));
    Ok(SimResult {
        packet_count,
        total_bits: trace.total_bits(),
        hazard_count: run.hazards,
        entry_cycles_last,
        duration_cycles: run.last_exit,
        hazard_rate_time: run.hazards as f64 / run.last_exit as f64,
        hazard_rate_packets: run.hazards as f64 / packet_count as f64,
        mode: config.mode,
        depth: config.depth,
        alpha: trace.alpha_applied,
    })
}

/// Entry cycle of every packet, observed from the per-cycle walk.
pub fn oracle_entry_cycles(trace: &Trace, config: &SimConfig) -> Result<Vec<u64>> {
    Ok(run(trace, config)?.entries)
}

struct Run {
    entries: Vec<u64>,
    hazards: u64,
    /// First cycle at which the pipeline has drained the final packet.
    last_exit: u64,
}

fn run(trace: &Trace, config: &SimConfig) -> Result<Run> {
    config.validate()?;
    if trace.is_empty() {
        return Err(Error::domain("cannot simulate an empty trace"));
    }
    let sizes: Vec<u64> = trace.sizes().map(u64::from).collect();
    let n = sizes.len();
    let chunk = u64::from(config.chunk_bytes);
    let depth = config.depth as usize;

    // Slot s holds the packet admitted s cycles ago; leaving slot depth-1
    // is the write-back.
    let mut stages: VecDeque<Option<usize>> = std::iter::repeat_n(None, depth).collect();
    let mut in_flight = 0usize;
    let mut waiting: VecDeque<usize> = VecDeque::new();

    // Reader state: which packet is being read and how much of it is left.
    let mut reading = 0usize;
    let mut bytes_left = sizes[0];
    // A header fully read during cycle t is available to the pipeline at t+1.
    let mut parsed: Option<usize> = None;

    let mut entries = vec![0u64; n];
    let mut admitted = 0usize;
    let mut hazards = 0u64;
    let mut last_exit = 0u64;

    // Generous upper bound on how long the walk can take; only a bug in the
    // state machine itself could reach it.
    let budget: u64 =
        sizes.iter().map(|s| s.div_ceil(chunk)).sum::<u64>() + (n as u64 + 2) * depth as u64 + 4;

    for t in 0u64.. {
        assert!(t <= budget, "oracle failed to terminate by cycle {budget}");

        // Pipeline shifts by one slot; the occupant of the last slot exits.
        if let Some(Some(_)) = stages.pop_back() {
            in_flight -= 1;
            last_exit = t;
        }
        stages.push_front(None);

        // Header finished in the previous cycle joins the queue.
        if let Some(p) = parsed.take() {
            waiting.push_back(p);
        }

        // Admission.
        let may_enter = match config.mode {
            Mode::NonBlocking => !waiting.is_empty(),
            Mode::Blocking => !waiting.is_empty() && in_flight == 0,
        };
        if may_enter {
            let p = waiting.pop_front().expect("checked non-empty");
            if in_flight > 0 {
                hazards += 1;
            }
            debug_assert!(stages[0].is_none(), "two admissions in one cycle");
            stages[0] = Some(p);
            in_flight += 1;
            entries[p] = t;
            admitted += 1;
        }

        // Reader moves one chunk.
        if reading < n {
            bytes_left = bytes_left.saturating_sub(chunk);
            if bytes_left == 0 {
                parsed = Some(reading);
                reading += 1;
                if reading < n {
                    bytes_left = sizes[reading];
                }
            }
        }

        if admitted == n && in_flight == 0 {
            break;
        }
    }

    Ok(Run {
        entries,
        hazards,
        last_exit,
    })
}
