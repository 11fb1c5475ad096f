//! `eqribbon`: slice, ribbon and equivariant checks on Alexander polynomials.
//!
//! Every subcommand prints one JSON document on stdout. Exit status is 0 for a
//! positive verdict, 1 for a negative one and 2 for usage or parse errors.

mod commands;
mod formats;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::commands::Outcome;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String, std::io::Error),
    Data(String),
    Core(eqribbon_core::Error),
}

impl From<eqribbon_core::Error> for CliError {
    fn from(e: eqribbon_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) => f.write_str(m),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn is_usage(&self) -> bool {
        matches!(self, CliError::Usage(_) | CliError::Io(..) | CliError::Core(eqribbon_core::Error::Parse { .. }))
    }
}

#[derive(Parser)]
#[command(name = "eqribbon", version, about = "Slice, ribbon and equivariant checks on Alexander polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a condition on a polynomial.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Build a witness.
    #[command(subcommand)]
    Witness(WitnessCmd),
    /// Boxes, crossings and Murasugi polynomial of a ribbon witness a(g,t).
    Realize {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Equivariant linking of a crossing list or box diagram.
    Linking {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        file: PathBuf,
    },
    /// Reidemeister torsion of a based chain complex.
    Torsion { file: PathBuf },
    /// Knot-table reports.
    #[command(subcommand)]
    Db(DbCmd),
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Δ(1) = ±1 and Δ is symmetric.
    Alexander {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Fox factorization Δ = p·p̄.
    Slice {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Murasugi conditions on Δ_{Z/q}(g,t).
    Murasugi {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Period-2 equivariant slice criterion.
    Eqslice2 {
        #[arg(allow_hyphen_values = true)]
        delta: String,
        #[arg(allow_hyphen_values = true)]
        delta_quot: String,
    },
    /// Period-2 equivariant ribbon criterion.
    Eqribbon2 {
        #[arg(allow_hyphen_values = true)]
        delta: String,
        #[arg(allow_hyphen_values = true)]
        delta_quot: String,
    },
}

#[derive(Subcommand)]
enum WitnessCmd {
    /// Ribbon witness for p ≡ ±t^k (mod q).
    Modq {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Period-2 slice witness from Fox witnesses p of Δ and q of Δ_quot.
    Slice2 {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
}

#[derive(Subcommand)]
enum DbCmd {
    /// Report on every row of a knot table.
    Run {
        table: PathBuf,
        #[arg(long)]
        threads: Option<usize>,
        /// Add per-knot wall-clock times (output is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
}

fn dispatch(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Check(c) => match c {
            CheckCmd::Alexander { poly } => commands::check_alexander(&poly),
            CheckCmd::Slice { poly } => commands::check_slice(&poly),
            CheckCmd::Murasugi { q, poly } => commands::check_murasugi_cmd(q, &poly),
            CheckCmd::Eqslice2 { delta, delta_quot } => commands::check_eqslice2(&delta, &delta_quot),
            CheckCmd::Eqribbon2 { delta, delta_quot } => commands::check_eqribbon2(&delta, &delta_quot),
        },
        Command::Witness(w) => match w {
            WitnessCmd::Modq { q, p } => commands::witness_modq(q, &p),
            WitnessCmd::Slice2 { p, q } => commands::witness_slice2(&p, &q),
        },
        Command::Realize { q, a } => commands::realize_cmd(q, &a),
        Command::Linking { q, file } => commands::linking_cmd(q, &file),
        Command::Torsion { file } => commands::torsion_cmd(&file),
        Command::Db(DbCmd::Run { table, threads, timing }) => {
            let records = formats::parse_table(&commands::read_text(&table)?)?;
            let r = report::run(&records, threads, timing)?;
            Ok(Outcome { body: r.body, ok: r.all_valid })
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Check(CheckCmd::Alexander { .. }) => "check alexander",
        Command::Check(CheckCmd::Slice { .. }) => "check slice",
        Command::Check(CheckCmd::Murasugi { .. }) => "check murasugi",
        Command::Check(CheckCmd::Eqslice2 { .. }) => "check eqslice2",
        Command::Check(CheckCmd::Eqribbon2 { .. }) => "check eqribbon2",
        Command::Witness(WitnessCmd::Modq { .. }) => "witness modq",
        Command::Witness(WitnessCmd::Slice2 { .. }) => "witness slice2",
        Command::Realize { .. } => "realize",
        Command::Linking { .. } => "linking",
        Command::Torsion { .. } => "torsion",
        Command::Db(_) => "db run",
    }
}

fn print(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match dispatch(cli.command) {
        Ok(out) => {
            print(&out.body);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) if e.is_usage() => {
            eprintln!("eqribbon: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            print(&json!({ "schema": "eqribbon.error/v1", "command": name, "verdict": "NO", "error": e.to_string() }));
            ExitCode::from(1)
        }
    }
}
