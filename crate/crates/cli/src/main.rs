use std::process::ExitCode;

use clap::Parser;
use liecoh::args::Cli;
use liecoh::{run, Threads};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = Threads::parse(std::env::var("LIECOH_THREADS").ok().as_deref()).and_then(|t| run(&cli, t));
    match outcome {
        Ok(doc) => {
            print!("{doc}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
