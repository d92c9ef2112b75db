use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use twoq::ensemble::format::{to_json, write_edge_csv, write_scatter_csv};
use twoq::ensemble::report::report_csv;
use twoq::ensemble::{
    analyze_gate, edge_sweep, run_verification, scatter_study, Edge, MatrixSource,
    MonteCarloConfig, ScatterMode, DEFAULT_SEED,
};
use twoq::{Error, NamedGate};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "twoq",
    version,
    about = "Two-qubit gate invariants and operator entanglement"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one gate
    #[command(group(ArgGroup::new("input").required(true).args(["gate", "file"])))]
    #[command(group(ArgGroup::new("format").args(["json", "csv"])))]
    Analyze {
        /// IDENTITY, CNOT, DCNOT, SWAP or SQRT_SWAP
        #[arg(long)]
        gate: Option<String>,
        /// JSON file with a "matrix" key holding 4x4 [re, im] entries
        #[arg(long)]
        file: Option<PathBuf>,
        /// Also estimate the entangling power from this many random product states
        #[arg(long)]
        mc_samples: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Sweep a chamber or polyhedron edge
    Edge {
        #[arg(long)]
        name: String,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// K_Sch vs L scatter over random gates
    Scatter {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// chamber or haar
        #[arg(long, default_value = "chamber")]
        mode: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the independent formula routes
    Verify {
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn output(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn json(value: &impl serde::Serialize) -> Result<String, Error> {
    to_json(value).map_err(|e| Error::Parse(e.to_string()))
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Analyze {
            gate,
            file,
            mc_samples,
            seed,
            json: _,
            csv,
        } => {
            let source = match (gate, file) {
                (Some(name), _) => MatrixSource::Named(name.parse::<NamedGate>()?),
                (None, Some(path)) => MatrixSource::File(path),
                (None, None) => unreachable!("clap enforces one input"),
            };
            let mc = mc_samples.map(|samples| MonteCarloConfig {
                samples: samples.max(1),
                seed,
            });
            let report = analyze_gate(&source, mc)?;
            if csv {
                print!("{}", report_csv(&report));
            } else {
                println!("{}", json(&report)?);
            }
            Ok(0)
        }
        Command::Edge { name, steps, out } => {
            let edge: Edge = name.parse()?;
            let records = edge_sweep(&edge.spec(), steps)?;
            let mut w = output(out.as_ref())?;
            write_edge_csv(&mut w, &records)?;
            w.flush()?;
            Ok(0)
        }
        Command::Scatter { n, seed, mode, out } => {
            let mode: ScatterMode = mode.parse()?;
            let study = scatter_study(n, seed, mode)?;
            if let Some(warning) = &study.warning {
                eprintln!("warning: {warning}");
            }
            let mut w = output(out.as_ref())?;
            write_scatter_csv(&mut w, &study)?;
            w.flush()?;
            Ok(0)
        }
        Command::Verify { n, seed } => {
            let summary = run_verification(n, seed)?;
            println!("{}", json(&summary)?);
            Ok(if summary.passed {
                0
            } else {
                EXIT_VERIFY_FAILED
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
