//! Command-line front end for `fcomplex`: the `.cx` file format, the
//! subcommands, and the verification suite.

pub mod commands;
pub mod error;
pub mod format;
pub mod records;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use fcomplex::FieldSpec;

pub use error::CliError;
pub use records::Report;

#[derive(Debug, Parser)]
#[command(name = "fcx", version, about = "f-ideals, complement duals, and Cohen-Macaulay tests for simplicial complexes")]
pub struct Cli {
    /// Coefficient field: `q` or `gf:<p>`.
    #[arg(long, global = true, default_value = "q")]
    pub field: FieldSpec,
    /// Emit one JSON record per line instead of text.
    #[arg(long, global = true)]
    pub records: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summary: vertex count, facets, dimension, purity, f-vector.
    Info { file: PathBuf },
    /// The f-vector.
    Fvector { file: PathBuf },
    /// Newton, Alexander, or homogeneous-complement dual.
    Dual(DualArgs),
    /// Decide one of the f-ideal predicates.
    Check {
        #[arg(value_enum)]
        predicate: CheckKind,
        file: PathBuf,
    },
    /// Cohen-Macaulayness by Reisner's criterion.
    Cm { file: PathBuf },
    /// Graded Betti numbers of an ideal attached to the complex.
    Betti(IdealArgs),
    /// Whether that ideal has a linear resolution.
    Linear(IdealArgs),
    /// Minimal primes of that ideal.
    MinimalPrimes(IdealArgs),
    /// Whether all minimal primes have one height.
    Unmixed(IdealArgs),
    /// Search for a shelling order.
    Shellable {
        file: PathBuf,
        #[arg(long, default_value_t = fcomplex::homalg::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// List or classify all pure complexes with given parameters.
    Enumerate(EnumerateArgs),
    /// Replay the worked examples and property checks.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("which").required(true).multiple(false)))]
pub struct DualArgs {
    pub file: PathBuf,
    /// Complement every facet.
    #[arg(long, group = "which")]
    pub newton: bool,
    /// Complements of the minimal nonfaces.
    #[arg(long, group = "which")]
    pub alexander: bool,
    /// The d-subsets that are not facets.
    #[arg(long, group = "which")]
    pub hcomp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    FIdeal,
    Lu,
    WellDistributed,
    Strong,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdealKind {
    /// Generated by the facets.
    FacetIdeal,
    /// Generated by the minimal nonfaces.
    StanleyReisner,
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    pub file: PathBuf,
    #[arg(long = "as", value_enum, default_value = "facet-ideal")]
    pub ideal: IdealKind,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: u32,
    /// Facet size.
    #[arg(long)]
    pub d: u32,
    /// Number of facets.
    #[arg(long)]
    pub facets: u32,
    /// Work modulo relabeling of the vertices.
    #[arg(long)]
    pub iso: bool,
    /// Tally f, well-distributed and strong verdicts.
    #[arg(long)]
    pub classify: bool,
    /// Also tally Cohen-Macaulay complexes (with --classify).
    #[arg(long)]
    pub cm: bool,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum VerifyTarget {
    /// Every example and property check.
    Paper {
        /// Run a single named check.
        #[arg(long)]
        only: Option<String>,
        /// Read the fixtures from DIR instead of the built-in copies.
        #[arg(long, value_name = "DIR")]
        fixtures: Option<PathBuf>,
        /// List check names and exit.
        #[arg(long)]
        list: bool,
    },
}

/// Parses `argv` (including the program name), runs the command, writes
/// output, and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let (reports, outcome) = commands::execute(&cli);
    let mut body = String::new();
    for report in &reports {
        if cli.records {
            body.push_str(&report.to_record());
            body.push('\n');
        } else {
            body.push_str(&report.to_text());
        }
    }
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &body).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => stdout.write_all(body.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    };
    match outcome.and(written) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
