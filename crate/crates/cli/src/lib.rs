//! JSON formats, run reports and the command-line front end for
//! `hopfbrace-core`.

pub mod commands;
pub mod parallel;
pub mod report;
pub mod schema;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use commands::{DualKind, Globals, Kind, LsaCommand, Route, SkewCommand};
use report::RunReport;
use schema::{parse_field, SchemaError};

#[derive(Debug, Parser)]
#[command(name = "hopfbrace", version, about = "Build and audit Hopf braces and their Yang-Baxter operators")]
pub struct Cli {
    /// Ground field override: Q or GF:p.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Artifact destination, or the JSON report for commands without one.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Audit a structure file.
    Check {
        #[arg(value_enum)]
        kind: Kind,
        path: PathBuf,
    },
    /// Build the braid operator of a cocommutative brace and audit it.
    Yb {
        path: PathBuf,
        #[arg(long, default_value_t = 3)]
        braid_arity: usize,
        /// Write the set-theoretic solution of a group-like brace here.
        #[arg(long)]
        export_set: Option<PathBuf>,
    },
    /// Brace to cocycle or matched pair and back, compared exactly.
    Roundtrip {
        #[arg(value_enum)]
        route: Route,
        path: PathBuf,
    },
    #[command(subcommand)]
    Skew(SkewCommand),
    #[command(subcommand)]
    Lsa(LsaCommand),
    /// Transpose every structure map.
    Dualize {
        #[arg(value_enum)]
        kind: DualKind,
        path: PathBuf,
    },
}

pub fn run(cli: &Cli) -> Result<RunReport, SchemaError> {
    let field = cli.field.as_deref().map(parse_field).transpose()?;
    let g = Globals { field, out: cli.out.clone() };
    match &cli.command {
        Command::Check { kind, path } => commands::cmd_check(*kind, path, &g),
        Command::Yb { path, braid_arity, export_set } => commands::cmd_yb(path, *braid_arity, export_set.as_deref(), &g),
        Command::Roundtrip { route, path } => commands::cmd_roundtrip(*route, path, &g),
        Command::Skew(sub) => commands::cmd_skew(sub, &g),
        Command::Lsa(sub) => commands::cmd_lsa(sub, &g),
        Command::Dualize { kind, path } => commands::cmd_dualize(*kind, path, &g),
    }
}
