//! Command-line frontend: `ingest`, `synth`, `cdf`, `sim`, `sweep`.
//!
//! Every subcommand is a deterministic function of its input bytes and
//! flags; rerunning a command reproduces its output byte for byte. The
//! canonical on-disk trace format is the sizes-only CSV, so pcap parsing
//! happens once, at ingest.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::analysis::{run_sweep, sweep_to_csv, sweep_to_json};
use crate::error::{Error, Result};
use crate::sim::{simulate, Mode, SimConfig};
use crate::trace::{
    apply_alpha, cdf_to_csv, empirical_cdf, parse_cdf_csv, parse_pcap_lengths, parse_size_csv,
    synth_trace, Trace, DEFAULT_MAX_PACKET_BYTES,
};

#[derive(Parser, Debug)]
#[command(
    name = "atomsim",
    version,
    about = "Trace-driven hazard and throughput simulation for multi-cycle switch actions"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert a pcap or CSV capture into the canonical sizes-only CSV.
    Ingest {
        /// Capture to read (pcap record lengths or size CSV).
        input: PathBuf,
        /// Input format; inferred from the file extension when omitted.
        #[arg(long, value_enum)]
        format: Option<TraceFormat>,
        /// Where to write the canonical trace.
        #[arg(long)]
        out: PathBuf,
    },
    /// Sample a synthetic trace from an empirical size CDF.
    Synth {
        /// CDF file (`size_bytes,cum_fraction` CSV).
        cdf: PathBuf,
        /// Number of packets to draw.
        #[arg(long, short = 'n')]
        count: u64,
        /// RNG seed; equal seeds reproduce the trace bit for bit.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the sampled trace.
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the empirical size CDF of a trace.
    Cdf {
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<TraceFormat>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simulate one (depth, mode) point and print the result as JSON.
    Sim {
        trace: PathBuf,
        #[arg(long, value_enum)]
        format: Option<TraceFormat>,
        /// Action pipeline depth in clock cycles.
        #[arg(long, default_value_t = 1)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Mode::NonBlocking)]
        mode: Mode,
        /// Optional size-scaling factor in [0, 1] applied before simulation.
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        switch: SwitchArgs,
    },
    /// Run the full (alpha x depth) grid and write a sweep table.
    Sweep {
        trace: PathBuf,
        #[arg(long, value_enum)]
        format: Option<TraceFormat>,
        /// Comma-separated scaling factors.
        #[arg(long, default_value = "0,0.2,1")]
        alphas: AlphaList,
        /// Inclusive `a..b` range or comma-separated list of depths.
        #[arg(long, default_value = "1..19")]
        depths: DepthList,
        /// Output file (`.json` selects JSON, anything else CSV); stdout
        /// CSV when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        switch: SwitchArgs,
    },
}

/// Switch parameters shared by the simulating subcommands.
#[derive(Args, Debug, Clone)]
struct SwitchArgs {
    /// Bytes the ingress reads per clock cycle.
    #[arg(long, default_value_t = 80)]
    chunk_bytes: u32,
    /// Clock frequency in GHz.
    #[arg(long, default_value_t = 1.0)]
    clock_ghz: f64,
    /// Minimum frame size in bytes; traces are clamped to it before scaling.
    #[arg(long, default_value_t = 64)]
    min_size: u32,
}

impl SwitchArgs {
    fn config(&self, depth: u32, mode: Mode) -> Result<SimConfig> {
        if !self.clock_ghz.is_finite() || self.clock_ghz <= 0.0 {
            return Err(Error::domain("--clock-ghz must be a positive number"));
        }
        let config = SimConfig {
            chunk_bytes: self.chunk_bytes,
            depth,
            mode,
            clock_hz: (self.clock_ghz * 1e9).round() as u64,
            min_packet_bytes: self.min_size,
        };
        config.validate()?;
        Ok(config)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum TraceFormat {
    Pcap,
    Csv,
}

/// Comma-separated α values, e.g. `0,0.2,1`.
#[derive(Debug, Clone)]
struct AlphaList(Vec<f64>);

impl FromStr for AlphaList {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        s.split(',')
            .map(|part| {
                let a: f64 = part
                    .trim()
                    .parse()
                    .map_err(|_| format!("not a number: {part:?}"))?;
                if !(0.0..=1.0).contains(&a) {
                    return Err(format!("alpha {a} outside [0, 1]"));
                }
                Ok(a)
            })
            .collect::<std::result::Result<Vec<f64>, String>>()
            .map(AlphaList)
    }
}

/// Pipeline depths as an inclusive `a..b` range or a comma-separated list.
#[derive(Debug, Clone)]
struct DepthList(Vec<u32>);

impl FromStr for DepthList {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse_one = |part: &str| {
            let d: u32 = part
                .trim()
                .parse()
                .map_err(|_| format!("not a depth: {part:?}"))?;
            if d < 1 {
                return Err("depths start at 1".to_string());
            }
            Ok(d)
        };
        if let Some((lo, hi)) = s.split_once("..") {
            let lo = parse_one(lo)?;
            let hi = parse_one(hi)?;
            if hi < lo {
                return Err(format!("empty depth range {lo}..{hi}"));
            }
            Ok(DepthList((lo..=hi).collect()))
        } else {
            s.split(',')
                .map(parse_one)
                .collect::<std::result::Result<Vec<u32>, String>>()
                .map(DepthList)
        }
    }
}

/// Executes a parsed command line. Errors bubble up as one-line
/// diagnostics naming the offending file and position.
pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Ingest { input, format, out } => {
            let trace = load_trace(&input, format)?;
            write_output(&out, trace.to_csv().as_bytes())?;
            print!("{}", ingest_summary(&trace, &input, &out));
        }
        Command::Synth {
            cdf,
            count,
            seed,
            out,
        } => {
            let text = read_text(&cdf)?;
            let points = parse_cdf_csv(&text).map_err(|e| e.in_file(&cdf))?;
            let trace = synth_trace(&points, count, seed)?;
            write_output(&out, trace.to_csv().as_bytes())?;
            println!(
                "sampled {} packets from {} points (seed {seed}) -> {}",
                trace.len(),
                points.len(),
                out.display()
            );
        }
        Command::Cdf { input, format, out } => {
            let trace = load_trace(&input, format)?;
            let points = empirical_cdf(&trace)?;
            let csv = cdf_to_csv(&points);
            match out {
                Some(path) => {
                    write_output(&path, csv.as_bytes())?;
                    println!("wrote {} CDF points -> {}", points.len(), path.display());
                }
                None => print!("{csv}"),
            }
        }
        Command::Sim {
            trace,
            format,
            depth,
            mode,
            alpha,
            switch,
        } => {
            let config = switch.config(depth, mode)?;
            let input = prepare_trace(&trace, format, alpha, &config)?;
            let result = simulate(&input, &config)?;
            let json =
                serde_json::to_string(&result).expect("SimResult serialization cannot fail");
            println!("{json}");
        }
        Command::Sweep {
            trace,
            format,
            alphas,
            depths,
            out,
            switch,
        } => {
            let config = switch.config(1, Mode::NonBlocking)?;
            let input = prepare_trace(&trace, format, None, &config)?;
            let rows = run_sweep(&input, &alphas.0, &depths.0, &config)?;
            let (rendered, kind) = match &out {
                Some(path) if path.extension().is_some_and(|e| e == "json") => {
                    (sweep_to_json(&rows), "JSON")
                }
                _ => (sweep_to_csv(&rows), "CSV"),
            };
            match out {
                Some(path) => {
                    write_output(&path, rendered.as_bytes())?;
                    println!("wrote {} {kind} rows -> {}", rows.len(), path.display());
                }
                None => print!("{rendered}"),
            }
        }
    }
    Ok(())
}

/// Loads a trace and makes it simulation-ready: sizes clamped into
/// `[min_packet_bytes, 9216]`, then α-scaled if requested.
fn prepare_trace(
    path: &Path,
    format: Option<TraceFormat>,
    alpha: Option<f64>,
    config: &SimConfig,
) -> Result<Trace> {
    let raw = load_trace(path, format)?;
    let normalized = raw.normalized(config.min_packet_bytes, DEFAULT_MAX_PACKET_BYTES);
    match alpha {
        Some(a) => apply_alpha(&normalized, a, config.min_packet_bytes),
        None => Ok(normalized),
    }
}

fn load_trace(path: &Path, format: Option<TraceFormat>) -> Result<Trace> {
    let format = format.unwrap_or_else(|| sniff_format(path));
    match format {
        TraceFormat::Pcap => {
            let bytes = std::fs::read(path).map_err(|e| Error::from(e).in_file(path))?;
            parse_pcap_lengths(&bytes).map_err(|e| e.in_file(path))
        }
        TraceFormat::Csv => {
            let text = read_text(path)?;
            parse_size_csv(&text).map_err(|e| e.in_file(path))
        }
    }
}

fn sniff_format(path: &Path) -> TraceFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("pcap") | Some("cap") => TraceFormat::Pcap,
        _ => TraceFormat::Csv,
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::from(e).in_file(path))
}

/// Writes the fully rendered output in one shot, removing the file again
/// if the write itself fails — no partial outputs survive an error.
fn write_output(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Err(e) = std::fs::write(path, bytes) {
        let _ = std::fs::remove_file(path);
        return Err(Error::from(e).in_file(path));
    }
    Ok(())
}

fn ingest_summary(trace: &Trace, input: &Path, out: &Path) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "ingested {} records from {} -> {}",
        trace.len(),
        input.display(),
        out.display()
    );
    if let Some((min, mean, max)) = trace.size_summary() {
        let _ = writeln!(s, "sizes: min {min} B, mean {mean:.2} B, max {max} B");
    }
    s
}
