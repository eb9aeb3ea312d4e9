//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain errors (and failed cross-checks or an
//! absent `first` result), 2 usage errors, 3 for `witness --verify` when
//! verification fails — distinct so the literal-variant failure is
//! scriptable.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::counting::{count_middle_divisors, list_middle_divisors};
use crate::error::Result;
use crate::oeis::{crosscheck, emit_bfile, parse_bfile};
use crate::sieve::{
    find_records, first_with_count_at_least, write_counts_csv, write_records_csv, SieveConfig,
    DEFAULT_SEGMENT_SIZE,
};
use crate::witness::{
    build_witness, check_witness_index, exact_witness_count, verify_witness, witness_index_cap,
    WitnessVariant,
};

#[derive(Parser)]
#[command(
    name = "middiv",
    version,
    about = "Middle divisors of n (OEIS A067742): counting, sieving, records, and unboundedness witnesses",
    after_help = "Numbers print as decimal strings at any size; certificates and reports are \
                  JSON, bulk streams are CSV. The witness index cap (default 10000) can be \
                  raised with the MIDDIV_MAX_I environment variable."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the middle divisors of n (exact, any n below 2^63)
    Count {
        n: BigUint,
    },
    /// List the middle divisors of n in increasing order
    List {
        n: BigUint,
    },
    /// Build the unboundedness witness n(i) and print its certificate
    Witness {
        /// Witness index (1 or larger)
        i: u64,
        /// Exponent form: the proof-consistent square or the printed literal
        #[arg(long, value_enum, default_value_t = VariantArg::Squared)]
        variant: VariantArg,
        /// Check every claimed divisor and print a verification report
        /// (exit code 3 if verification fails)
        #[arg(long)]
        verify: bool,
        /// Also compute the true middle-divisor count of n(i) by factored
        /// enumeration (cost grows steeply with i)
        #[arg(long)]
        exact: bool,
    },
    /// Stream n,count CSV for all n up to the limit
    Sieve {
        limit: u64,
        #[arg(long, default_value_t = DEFAULT_SEGMENT_SIZE)]
        segment_size: u64,
        /// Emit only rows with a nonzero count
        #[arg(long)]
        nonzero: bool,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sieve segments to compute in parallel; output is identical to
        /// a single-threaded run
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Print the record table (least n attaining each new maximum) as CSV
    Records {
        limit: u64,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Least n with at least k middle divisors (exit 1 if none in range)
    First {
        k: u64,
        #[arg(long)]
        limit: u64,
    },
    /// Compare a b-file against computed counts (exit 1 on mismatches)
    Crosscheck {
        bfile: PathBuf,
        #[arg(long)]
        limit: u64,
    },
    /// Print b-file lines "n a(n)" for n in [start, end]
    EmitBfile {
        start: u64,
        end: u64,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Squared,
    Literal,
}

impl From<VariantArg> for WitnessVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Squared => WitnessVariant::Squared,
            VariantArg::Literal => WitnessVariant::Literal,
        }
    }
}

/// Parses `argv` and runs the selected command, returning the process exit
/// code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Count { n } => {
            println!("{}", count_middle_divisors(&n)?);
            Ok(0)
        }
        Command::List { n } => {
            let divisors = list_middle_divisors(&n)?;
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            for d in divisors {
                writeln!(out, "{d}")?;
            }
            out.flush()?;
            Ok(0)
        }
        Command::Witness {
            i,
            variant,
            verify,
            exact,
        } => {
            check_witness_index(i, witness_index_cap())?;
            let cert = build_witness(i, variant.into());
            let exact_count = exact.then(|| exact_witness_count(&cert));
            let (mut value, code) = if verify {
                let report = verify_witness(&cert);
                let code = if report.overall_pass { 0 } else { 3 };
                (serde_json::to_value(&report).expect("report serializes"), code)
            } else {
                (serde_json::to_value(&cert).expect("certificate serializes"), 0)
            };
            if let Some(count) = exact_count {
                value["exact_count"] = count.into();
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("valid JSON value")
            );
            Ok(code)
        }
        Command::Sieve {
            limit,
            segment_size,
            nonzero,
            out,
            threads,
        } => {
            let cfg = SieveConfig::with_segment_size(limit, segment_size);
            with_output(out, |w| write_counts_csv(&cfg, threads, nonzero, w))?;
            Ok(0)
        }
        Command::Records { limit, out } => {
            let table = find_records(&SieveConfig::new(limit), 1)?;
            with_output(out, |w| write_records_csv(&table, w))?;
            Ok(0)
        }
        Command::First { k, limit } => {
            match first_with_count_at_least(k, &SieveConfig::new(limit), 1)? {
                Some(n) => {
                    println!("{n}");
                    Ok(0)
                }
                None => {
                    eprintln!("no n <= {limit} has at least {k} middle divisors");
                    Ok(1)
                }
            }
        }
        Command::Crosscheck { bfile, limit } => {
            let entries = parse_bfile(BufReader::new(File::open(&bfile)?))?;
            let report = crosscheck(&entries, limit)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::EmitBfile { start, end, out } => {
            with_output(out, |w| emit_bfile(start, end, w))?;
            Ok(0)
        }
    }
}

fn with_output(path: Option<PathBuf>, write: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    match path {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            write(&mut out)?;
            out.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            write(&mut out)?;
            out.flush()?;
        }
    }
    Ok(())
}
