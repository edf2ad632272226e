use clap::Parser;

fn main() {
    let cli = brandgauge::cli::Cli::parse();
    if let Err(e) = brandgauge::cli::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
