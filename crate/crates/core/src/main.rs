use clap::Parser;

use simplie::cli::{render, run, Cli, RunConfig};

fn main() {
    let config = RunConfig::from(Cli::parse());
    let report = run(&config);
    print!("{}", render(&report, config.format));
    std::process::exit(report.exit_code);
}
