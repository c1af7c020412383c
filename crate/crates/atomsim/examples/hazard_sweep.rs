//! Hazard probability as the action pipeline deepens.
//!
//! Runs the non-blocking model on a bimodal backbone-like trace (half
//! 64 B, half 1500 B) and prints the hazard rate per depth. The regimes
//! to look for: depth 1 is always hazard-free; the minimum-size half of
//! the mix starts colliding at depth 2 and is fully hazardous from then
//! on; the full-MTU half stays clean through depth 19 because a 1500 B
//! packet takes 19 chunk cycles to arrive. Around depth 19 the hazard
//! rate per cycle sits near 5%.

use atomsim::sim::{hazard_closed_form, simulate_nonblocking, SimConfig};
use atomsim::trace::{synth_trace, CdfPoint};

fn main() -> Result<(), atomsim::Error> {
    let cdf = vec![
        CdfPoint { size_bytes: 64, cum_fraction: 0.5 },
        CdfPoint { size_bytes: 1500, cum_fraction: 1.0 },
    ];
    let trace = synth_trace(&cdf, 100_000, 1)?;
    println!("trace: {} packets, {} total bits", trace.len(), trace.total_bits());

    println!(
        "\n{:>5} {:>10} {:>16} {:>15}",
        "depth", "hazards", "hazards/packet", "hazards/cycle"
    );
    for depth in 1..=19 {
        let config = SimConfig { depth, ..SimConfig::default() };
        let r = simulate_nonblocking(&trace, &config)?;

        // The per-size closed form predicts the simulation exactly: a
        // packet hazards iff it spans at most depth-1 chunks.
        assert_eq!(r.hazard_count, hazard_closed_form(&trace, &config));

        println!(
            "{depth:>5} {:>10} {:>16.4} {:>15.4}",
            r.hazard_count, r.hazard_rate_packets, r.hazard_rate_time
        );
    }
    Ok(())
}
