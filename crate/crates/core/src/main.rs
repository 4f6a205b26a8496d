use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use theta_e6::report::{self, RunOptions, Status, Suite};

/// Runs the verification suites and emits a report.
#[derive(Parser)]
#[command(name = "theta-e6", version, about)]
struct Cli {
    /// suite to run: lattices|exterior|cohomology|weyl|hodge|lr|galois|all
    #[arg(long, default_value = "all")]
    suite: String,

    /// output format
    #[arg(long, default_value = "json", value_parser = ["json", "markdown"])]
    format: String,

    /// write the report to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,

    /// directory for caching enumerated group elements
    #[arg(long)]
    cache: Option<PathBuf>,

    /// cap for group enumerations
    #[arg(long, default_value_t = 1_000_000)]
    max_order: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let suite: Suite = match cli.suite.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let opts = RunOptions { cache: cli.cache, max_order: cli.max_order };
    let records = match report::run(suite, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cli.format.as_str() {
        "markdown" => report::emit_markdown(suite, &records),
        _ => report::emit_json(suite.name(), &records),
    };
    let write_result = match &cli.out {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => {
            print!("{rendered}");
            Ok(())
        }
    };
    if let Err(e) = write_result {
        eprintln!("error: i/o failure: {e}");
        return ExitCode::from(2);
    }
    if records.iter().any(|r| r.status == Status::Fail) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
