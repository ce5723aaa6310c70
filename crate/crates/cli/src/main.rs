use std::process::ExitCode;

use clap::Parser;
use hopfbrace::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "error": e.0 }));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
