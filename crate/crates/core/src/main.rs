use std::io::Write;

use clap::Parser;
use xyalt::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let out = execute(&cli);
    if let Some(report) = &out.report {
        let json = serde_json::to_string_pretty(report).expect("report serializes");
        // A closed pipe is not an error here.
        let _ = writeln!(std::io::stdout().lock(), "{json}");
    }
    eprintln!("{}", out.summary);
    std::process::exit(out.status as i32);
}
