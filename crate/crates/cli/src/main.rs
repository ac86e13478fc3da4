use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nabelian::corpus::load_corpus;
use nabelian::error::{Error, Result};
use nabelian::format::{parse_algebra, AlgebraFile};
use nabelian::report::{self, Report, DEFAULT_CAP, DEFAULT_SAMPLES, DEFAULT_SEED};

/// Decide whether proj Λ is n-abelian for a bound quiver algebra Λ.
///
/// Every command prints a JSON report. Exit status: 0 consistent, 1 a check
/// failed, 2 invalid input.
#[derive(Parser, Debug)]
#[command(name = "nabelian", version)]
struct Cli {
    /// Include wall-clock timings (makes output non-reproducible).
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse an algebra file and its module blocks.
    Validate { file: PathBuf },
    /// Global and dominant dimension, projective dimensions of simples.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// The n-abelian verdict.
    Detect {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Sampled consistency checks at a given n.
    Check {
        file: PathBuf,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Minimal projective resolution of a module.
    Resolve {
        file: PathBuf,
        /// A module block name, or S(v), P(v), I(v).
        #[arg(long)]
        module: String,
        #[arg(long)]
        length: usize,
    },
    /// Transpose of a module over the opposite algebra.
    Transpose {
        file: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// n-cokernel of a map between projectives.
    Ncokernel {
        file: PathBuf,
        /// `P(i+..)->P(j+..): [[entry,...],...]`
        #[arg(long)]
        map: String,
        #[arg(short)]
        n: usize,
    },
    /// Verdict, expectations and every sampled check.
    Selftest {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
}

/// A path on disk, or the name of a bundled corpus entry.
fn load(path: &Path) -> Result<(String, AlgebraFile)> {
    let id = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    if !path.exists() {
        if let Ok(entry) = load_corpus(&path.to_string_lossy()) {
            return Ok((id, entry.parse()));
        }
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    Ok((id, parse_algebra(&text)?))
}

fn resolve_cap(flag: Option<usize>) -> Result<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("NABELIAN_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Precondition(format!("NABELIAN_CAP must be an integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Validate { file } => {
            let (id, f) = load(file)?;
            Ok(report::validate_report(&id, &f))
        }
        Command::Invariants { file, cap } => {
            let (id, f) = load(file)?;
            Ok(report::invariants_report(&id, &f, resolve_cap(*cap)?))
        }
        Command::Detect { file, cap } => {
            let (id, f) = load(file)?;
            Ok(report::detect_report(&id, &f, resolve_cap(*cap)?))
        }
        Command::Check { file, n, seed, samples, cap } => {
            let (id, f) = load(file)?;
            report::check_report(&id, &f, *n, *seed, *samples, resolve_cap(*cap)?)
        }
        Command::Resolve { file, module, length } => {
            let (id, f) = load(file)?;
            report::resolve_report(&id, &f, module, *length)
        }
        Command::Transpose { file, module } => {
            let (id, f) = load(file)?;
            report::transpose_report(&id, &f, module)
        }
        Command::Ncokernel { file, map, n } => {
            let (id, f) = load(file)?;
            report::ncokernel_report(&id, &f, map, *n)
        }
        Command::Selftest { file, seed, samples, cap } => {
            let (id, f) = load(file)?;
            Ok(report::selftest_report(&id, &f, *seed, *samples, resolve_cap(*cap)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            // a closed pipe is not an error of ours
            let _ = writeln!(std::io::stdout(), "{}", report.to_json(cli.timings));
            ExitCode::from(report.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
