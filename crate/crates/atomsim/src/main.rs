use clap::Parser;

fn main() {
    let cli = atomsim::cli::Cli::parse();
    if let Err(err) = atomsim::cli::run(cli) {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
