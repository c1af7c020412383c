//! What single-occupancy locking costs, in throughput, as depth grows.
//!
//! For each α the same trace is run in both modes and compared:
//! `relative_throughput` is the completion-time ratio (1.0 = the lock was
//! free), and the absolute column is what the locked pipeline actually
//! moved. With full-size packets (α = 1) the lock costs nothing up to
//! depth 19; with a minimum-size flood (α = 0) throughput decays like 1/D.

use atomsim::analysis::{absolute_throughput_gbps, relative_throughput};
use atomsim::sim::{simulate_blocking, simulate_nonblocking, Mode, SimConfig};
use atomsim::trace::{apply_alpha, synth_trace, CdfPoint};

fn main() -> Result<(), atomsim::Error> {
    let cdf = vec![
        CdfPoint { size_bytes: 64, cum_fraction: 0.5 },
        CdfPoint { size_bytes: 1500, cum_fraction: 1.0 },
    ];
    let trace = synth_trace(&cdf, 100_000, 1)?;
    let alphas = [0.0, 0.2, 1.0];
    let base = SimConfig::default();

    print!("{:>5}", "depth");
    for a in alphas {
        print!("{:>12}", format!("rel a={a}"));
    }
    println!("{:>14}", "Gb/s at a=1");

    for depth in [1, 2, 4, 8, 10, 16, 19] {
        print!("{depth:>5}");
        let mut locked_gbps = 0.0;
        for alpha in alphas {
            let scaled = apply_alpha(&trace, alpha, base.min_packet_bytes)?;
            let nb = simulate_nonblocking(&scaled, &base.with_depth(depth))?;
            let blk =
                simulate_blocking(&scaled, &base.with_depth(depth).with_mode(Mode::Blocking))?;
            print!("{:>12.4}", relative_throughput(&nb, &blk)?);
            locked_gbps = absolute_throughput_gbps(&blk, &base);
        }
        println!("{locked_gbps:>14.2}");
    }

    println!("\nline rate: {:.0} Gb/s", base.line_rate_gbps());
    Ok(())
}
