//! `permpat`: tables, verification, recurrence guessing and brute-force
//! counts from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use permpat::engines::{build_table, GridFamily};
use permpat::guesser::{guess_with, parse_sequence, GuessConfig, DEFAULT_HOLDOUT};
use permpat::perm::{expand_at_one, Family, Oracle, Pattern};

#[derive(Parser)]
#[command(name = "permpat", version, about = "Exact enumeration of permutations by pattern occurrences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an engine grid.
    Table(TableArgs),
    /// Check engines against brute force, closed forms and functional equations.
    Verify(VerifyArgs),
    /// Fit a recurrence with polynomial coefficients to a sequence.
    Guess(GuessArgs),
    /// Coefficients of the distribution of pattern occurrences over S_n.
    Genpoly(GenpolyArgs),
    /// Count permutations by exhaustive enumeration.
    Bruteforce(BruteArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Oracle,
    ClosedForms,
    FunctionalEq,
    All,
}

#[derive(Args)]
struct TableArgs {
    /// One of abc, abc-one, abc-two, cab, cab-one, abcd, abcd-I1, abcd-I2, abc+bac.
    #[arg(long)]
    family: GridFamily,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// plain or json.
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct GuessArgs {
    #[arg(long, conflicts_with = "file", requires = "column")]
    family: Option<GridFamily>,
    /// Grid index defining the sequence, e.g. `I=1` or `I1=1,I2=1`.
    #[arg(long, requires = "family")]
    column: Option<String>,
    /// Last n taken from the grid.
    #[arg(long, default_value_t = 24)]
    n_max: usize,
    /// Decimal integers separated by whitespace or commas, starting at n = 0.
    #[arg(long, required_unless_present = "family")]
    file: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    max_order: usize,
    #[arg(long, default_value_t = 2)]
    max_degree: usize,
    #[arg(long, default_value_t = DEFAULT_HOLDOUT)]
    holdout: usize,
    /// plain or json.
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct GenpolyArgs {
    /// Pattern as letters (abc) or digits (123).
    #[arg(long)]
    pattern: Pattern,
    #[arg(long)]
    n: usize,
    /// Print the coefficients of the expansion in powers of (q - 1).
    #[arg(long)]
    at_one: bool,
}

#[derive(Args)]
struct BruteArgs {
    /// abc, cab, abcd or abc+bac.
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Occurrence counts, comma separated (two for abc+bac).
    #[arg(long, value_delimiter = ',', default_value = "0")]
    r: Vec<u64>,
    /// Letter thresholds, comma separated (two for abcd).
    #[arg(long, value_delimiter = ',')]
    thresholds: Vec<usize>,
}

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Table(args) => table(args),
        Command::Verify(args) => verify::run(args.suite, args.n_max, json_or_plain(args.format)?),
        Command::Guess(args) => guess(args),
        Command::Genpoly(args) => genpoly(args),
        Command::Bruteforce(args) => bruteforce(args),
    }
}

fn json_or_plain(format: Format) -> Result<bool> {
    if format == Format::Csv {
        bail!("csv output is only available for tables");
    }
    Ok(format == Format::Json)
}

fn table(args: TableArgs) -> Result<Outcome> {
    let grid = build_table(args.family, args.n_max);
    let text = match args.format {
        Format::Plain => grid.to_plain(),
        Format::Csv => grid.to_csv(),
        Format::Json => grid.to_json() + "\n",
    };
    print!("{text}");
    Ok(Outcome::Ok)
}

/// Parses `I=1` or `I1=1,I2=1` into the index expected by `family`.
fn parse_column(family: GridFamily, spec: &str) -> Result<Vec<usize>> {
    let keys: &[&str] = if family.index_arity() == 2 { &["I1", "I2"] } else { &["I"] };
    let mut index = vec![None; keys.len()];
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part.split_once('=').with_context(|| format!("column entry {part:?} is not KEY=VALUE"))?;
        let slot = keys
            .iter()
            .position(|k| k.eq_ignore_ascii_case(key.trim()))
            .with_context(|| format!("{family} columns are indexed by {}", keys.join(",")))?;
        let value = value.trim().parse().with_context(|| format!("bad column value {value:?}"))?;
        if index[slot].replace(value).is_some() {
            bail!("{} given twice", keys[slot]);
        }
    }
    index
        .into_iter()
        .zip(keys)
        .map(|(v, k)| v.with_context(|| format!("column is missing {k}")))
        .collect()
}

fn guess(args: GuessArgs) -> Result<Outcome> {
    let (start, seq) = match (&args.family, &args.file) {
        (Some(family), _) => {
            let index = parse_column(*family, args.column.as_deref().unwrap_or_default())?;
            let (start, seq) = build_table(*family, args.n_max).column(&index)?;
            (start as i64, seq)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            (0, parse_sequence(&text)?)
        }
        (None, None) => bail!("either --family with --column, or --file, is required"),
    };
    let json = json_or_plain(args.format)?;
    let config = GuessConfig { max_order: args.max_order, max_degree: args.max_degree, holdout: args.holdout };
    let report = guess_with(&seq, start, config, Oracle::from_env()?.exec)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        match &report.found {
            Some(rec) => println!("{rec}"),
            None => println!("no recurrence found within bounds"),
        }
    }
    Ok(Outcome::Ok)
}

fn join(values: &[BigInt]) -> String {
    values.iter().map(BigInt::to_string).collect::<Vec<_>>().join(" ")
}

fn genpoly(args: GenpolyArgs) -> Result<Outcome> {
    let poly = Oracle::from_env()?.gen_poly(args.n, &args.pattern)?;
    let coeffs = if args.at_one { expand_at_one(&poly)? } else { poly.univariate_coeffs()? };
    println!("{}", join(&coeffs));
    Ok(Outcome::Ok)
}

fn bruteforce(args: BruteArgs) -> Result<Outcome> {
    let count = Oracle::from_env()?.brute_count(args.n, args.family, &args.r, &args.thresholds)?;
    println!("{count}");
    Ok(Outcome::Ok)
}
