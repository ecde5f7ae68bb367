//! `strictmono`: construct, verify, search and certify from the command line.
//!
//! Every command prints one JSON document (keys sorted) to stdout or `--out`.
//! Exit status: 0 success, 1 verification failed, 2 malformed input.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Default seed for randomized workflows when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 20_240_229;

#[derive(Parser)]
#[command(name = "strictmono", version, about = "Extremal constructions for strictly monotone point sets")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an extremal object.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Check an object read from `--in`.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Exhaustive or randomized searches.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Algebraic certificates.
    #[command(subcommand)]
    Certify(CertifyCmd),
    /// Closed-form counts for pillage games.
    #[command(subcommand)]
    Pillage(PillageCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Args)]
struct Common {
    /// Output file; stdout when absent.
    #[arg(long = "out", global = true)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
}

#[derive(Args, Clone)]
pub struct ProfileArgs {
    /// Dimension.
    #[arg(long)]
    pub n: Option<usize>,
    /// Uniform length cap.
    #[arg(long)]
    pub ell: Option<u64>,
    /// Length profile as inline JSON or a path to a JSON file.
    #[arg(long)]
    pub profile: Option<String>,
}

#[derive(Subcommand)]
pub enum ConstructCmd {
    /// Integer set with bounded non-strict runs.
    Nonstrict(ProfileArgs),
    /// Largest set with bounded strict runs.
    Strict(ProfileArgs),
    /// Longest sequence with bounded strict subsequences.
    Sequence(ProfileArgs),
    /// Real sequence of length `a*b` with increasing runs `<= a`, decreasing runs `<= b`.
    Es {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// The `(l, l)` sequence with every entry repeated `l` times.
    RepeatedEs {
        #[arg(long)]
        ell: u64,
    },
    /// Internally stable allocation set with its chain-depth power function.
    PillageStable {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
pub enum VerifyCmd {
    /// Longest runs against a profile (explicit, uniform, or embedded in the input).
    GoodSet {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        profile: ProfileArgs,
    },
    /// Intersecting, minimal, and per-coordinate value bound for flats. A point set
    /// is minimalized first.
    Flats {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Cross-intersecting property and size bound for a pair family.
    Pairs {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Internal stability and the no-run-of-4 condition for a game.
    Stability {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Power-function axioms on a game's allocation set.
    Axioms {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum SearchCmd {
    /// Longest monotone run in every direction of a point set.
    Longest {
        #[arg(long = "in")]
        input: PathBuf,
        /// Use non-strict directions instead of strict ones.
        #[arg(long)]
        nonstrict: bool,
    },
    /// Largest cross-intersecting pair family on a small grid.
    MaxPairs {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        #[arg(long, default_value_t = 64)]
        t_cap: usize,
        #[arg(long, default_value_t = 50_000_000)]
        node_budget: u64,
    },
    /// Random sets one point larger than the extremal size; none should be good.
    RandomGood {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long, default_value_t = crate::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Coordinates are drawn from `0..grid`.
        #[arg(long, default_value_t = 12)]
        grid: i64,
        /// Set size; defaults to the extremal size plus one.
        #[arg(long)]
        size: Option<usize>,
    },
}

#[derive(Subcommand)]
pub enum CertifyCmd {
    /// Linear independence of the wedge vectors of a pair family (`--in`, or the
    /// cube family of `--d`).
    Exterior {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        d: Option<usize>,
    },
}

#[derive(Subcommand)]
pub enum PillageCmd {
    /// Size bound for stable sets.
    Bound {
        #[arg(long)]
        n: usize,
    },
    /// Number of unordered pairs of disjoint nonempty coalitions.
    Pairs {
        #[arg(long)]
        n: usize,
    },
}

/// Result of a command: its JSON report and whether the check passed.
pub struct Outcome {
    pub report: Value,
    pub pass: bool,
}

/// Errors that make a request malformed (exit status 2).
#[derive(Debug)]
pub struct Malformed(pub String);

impl From<strictmono::Error> for Malformed {
    fn from(e: strictmono::Error) -> Self {
        Malformed(e.to_string())
    }
}

impl From<std::io::Error> for Malformed {
    fn from(e: std::io::Error) -> Self {
        Malformed(e.to_string())
    }
}

impl From<serde_json::Error> for Malformed {
    fn from(e: serde_json::Error) -> Self {
        Malformed(e.to_string())
    }
}

fn main() -> ExitCode {
    let Cli { common, command } = Cli::parse();
    let (report, code) = match commands::run(command) {
        Ok(Outcome { report, pass }) => (report, if pass { 0 } else { 1 }),
        Err(Malformed(msg)) => {
            eprintln!("error: {msg}");
            (json!({ "error": msg }), 2)
        }
    };
    let Format::Json = common.format;
    let text = serde_json::to_string_pretty(&report).expect("JSON values serialize") + "\n";
    let written = match &common.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
