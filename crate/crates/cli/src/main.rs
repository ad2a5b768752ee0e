//! Command-line front end: compute inner edit distances of NFAs given in the
//! Grail text format, generate benchmark automata, and time the algorithms.

use std::fs::File;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use langdist::bench::{run_bench, write_csv, BenchConfig, Family};
use langdist::oracle::brute_inner_distance;
use langdist::{parse_nfa, serialize_nfa, Algorithm, DistanceOptions, Error, Nfa};

#[derive(Parser, Debug)]
#[command(
    name = "langdist",
    version,
    about = "Inner edit distance of regular languages"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the inner edit distance of the language of an NFA.
    Compute {
        /// detect, correct, first, next or best.
        #[arg(long, default_value = "best")]
        algo: Algorithm,
        /// Drop the [i,a] -> [i+1] substitution and insertion edges of the
        /// input-altering transducer.
        #[arg(long)]
        prune_diagonals: bool,
        /// Give up after this many seconds (exit code 4).
        #[arg(long, value_name = "SECS")]
        timeout: Option<f64>,
        /// Grail-format NFA, or `-` for standard input.
        file: PathBuf,
    },
    /// Brute-force distance over all accepted words up to a length.
    Oracle {
        /// Longest word to enumerate.
        #[arg(long, value_name = "N")]
        max_len: usize,
        /// Grail-format NFA, or `-` for standard input.
        file: PathBuf,
    },
    /// Print a benchmark automaton in Grail format.
    Gen {
        /// `a` or `b`.
        #[arg(long)]
        family: Family,
        /// Family parameter, at least 2.
        #[arg(long)]
        n: usize,
    },
    /// Time algorithms over a benchmark family and write CSV.
    Bench {
        /// `a` or `b`.
        #[arg(long)]
        family: Family,
        /// Comma-separated sizes, e.g. `5,8,13,21`.
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        /// Comma-separated algorithm names.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "detect,correct,first,next,best"
        )]
        algos: Vec<Algorithm>,
        /// Per-cell limit in seconds.
        #[arg(long, value_name = "SECS", default_value_t = 60.0)]
        timeout: f64,
        /// Same as for `compute`.
        #[arg(long)]
        prune_diagonals: bool,
        /// Output file for the results.
        #[arg(long, value_name = "PATH")]
        csv: PathBuf,
    },
}

/// Failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::FamilyTooSmall(_) => 2,
            Error::TwoWordsRequired => 3,
            Error::Timeout => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

fn seconds(secs: f64) -> Result<Duration, Failure> {
    Duration::try_from_secs_f64(secs).map_err(|e| usage(format!("invalid timeout {secs}: {e}")))
}

fn read_nfa(path: &Path) -> Result<Nfa, Failure> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text)
    } else {
        File::open(path).and_then(|mut f| f.read_to_string(&mut text))
    };
    read.map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_nfa(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute {
            algo,
            prune_diagonals,
            timeout,
            file,
        } => {
            let a = read_nfa(&file)?;
            let deadline = timeout
                .map(seconds)
                .transpose()?
                .map(|d| Instant::now() + d);
            let opts = DistanceOptions {
                prune_diagonals,
                deadline,
            };
            println!("{}", algo.run(&a, &opts)?);
        }
        Command::Oracle { max_len, file } => {
            let a = read_nfa(&file)?;
            println!("{}", brute_inner_distance(&a, max_len)?);
        }
        Command::Gen { family, n } => {
            print!("{}", serialize_nfa(&family.generate(n)?));
        }
        Command::Bench {
            family,
            n_list,
            algos,
            timeout,
            prune_diagonals,
            csv,
        } => {
            let cfg = BenchConfig {
                timeout: seconds(timeout)?,
                prune_diagonals,
            };
            let records = run_bench(family, &n_list, &algos, &cfg)?;
            let out = File::create(&csv).map_err(|e| usage(format!("{}: {e}", csv.display())))?;
            write_csv(&records, out).map_err(|e| Failure {
                code: 1,
                message: format!("{}: {e}", csv.display()),
            })?;
            for r in &records {
                let result = r.result.map_or("timeout".to_string(), |d| d.to_string());
                println!(
                    "{}{:<4} {:>6} states  {:<8} {:>8}  {:.6}s",
                    r.family,
                    r.n,
                    r.states,
                    r.algorithm.name(),
                    result,
                    r.wall_time.as_secs_f64()
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("langdist: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
