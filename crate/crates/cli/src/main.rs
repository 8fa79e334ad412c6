use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Debug, Parser)]
#[command(name = "revlogic", version, about = "Reversible logic circuit toolkit")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Quantum cost assigned to the TR gate
    #[arg(long, global = true, value_name = "N", default_value_t = revlogic::gate::DEFAULT_TR_COST)]
    tr_cost: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the gate catalog
    Gates,
    /// Run one input assignment through a netlist
    Simulate {
        /// Input bindings, e.g. A=1,B=0
        #[arg(short, long = "inputs", value_name = "K=V", value_delimiter = ',')]
        inputs: Vec<String>,
        file: PathBuf,
    },
    /// Print the truth table over the free inputs
    Table { file: PathBuf },
    /// Print the metrics report for a netlist
    Metrics {
        /// Also check equivalence against this function
        #[arg(long, value_name = "NAME")]
        spec: Option<String>,
        /// Label bindings from spec to circuit, e.g. Sum=Diff
        #[arg(long, value_name = "SPEC=CIRCUIT", value_delimiter = ',')]
        bind: Vec<String>,
        file: PathBuf,
    },
    /// Check a netlist against a reference function
    Verify {
        #[arg(long, value_name = "NAME")]
        spec: String,
        /// Label bindings from spec to circuit, e.g. Sum=Diff
        #[arg(long, value_name = "SPEC=CIRCUIT", value_delimiter = ',')]
        bind: Vec<String>,
        file: PathBuf,
    },
    /// Check strict and free-input parity preservation
    Parity { file: PathBuf },
    /// Compare the canonical circuits with the earlier designs
    Compare,
    /// Search for netlists matching a constraints file
    Search {
        constraints: PathBuf,
        /// Directory to write candidates and summary.txt into
        #[arg(short, long, value_name = "DIR")]
        output: Option<PathBuf>,
        /// Largest search space to attempt
        #[arg(long, value_name = "N", default_value_t = revlogic::reconstruct::DEFAULT_CEILING)]
        ceiling: u64,
        /// Worker threads (default: all cores)
        #[arg(long, value_name = "N")]
        workers: Option<usize>,
    },
    /// Write a canonical netlist
    Canon {
        /// One of HALF_ADDSUB_R, FULL_ADDSUB_R, PP_HALF_SUB, PP_FULL_SUB
        name: String,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(verdict) => verdict.into(),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
