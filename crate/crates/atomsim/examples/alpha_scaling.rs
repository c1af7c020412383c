//! Compress a size distribution toward the minimum frame with α.
//!
//! `scaled = min + floor(α · (size − min))`: α = 1 keeps the trace as
//! captured, α = 0 collapses every packet to the 64 B minimum, and values
//! in between shrink the inter-arrival gaps that protect a deep pipeline
//! from concurrency hazards.

use atomsim::trace::{apply_alpha, Trace, TraceSource};

fn main() -> Result<(), atomsim::Error> {
    let trace = Trace::from_sizes([64, 128, 320, 564, 1064, 1500], TraceSource::Csv)?;
    let alphas = [0.0, 0.2, 0.5, 0.8, 1.0];

    let scaled: Vec<Trace> = alphas
        .iter()
        .map(|&a| apply_alpha(&trace, a, 64))
        .collect::<Result<_, _>>()?;

    print!("{:>8}", "size");
    for a in alphas {
        print!("{:>8}", format!("a={a}"));
    }
    println!();

    for (i, size) in trace.sizes().enumerate() {
        print!("{size:>8}");
        for t in &scaled {
            print!("{:>8}", t.records[i].size_bytes);
        }
        println!();
    }

    // The transform tags its output so downstream results can carry the α.
    println!(
        "\nscaled traces remember their α: {:?}",
        scaled.iter().map(|t| t.alpha_applied).collect::<Vec<_>>()
    );
    Ok(())
}
