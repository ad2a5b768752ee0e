//! Timing harness over the benchmark families.
//!
//! Cells run sequentially. Each cell runs once as warm-up and once
//! measured, both under the same timeout.

use std::fmt;
use std::io;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::distance::{Algorithm, DistanceOptions, DistanceResult};
use crate::error::{Error, Result};
use crate::families::{gen_family_a, gen_family_b};
use crate::nfa::Nfa;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    A,
    B,
}

impl Family {
    pub fn generate(self, n: usize) -> Result<Nfa> {
        match self {
            Family::A => gen_family_a(n),
            Family::B => gen_family_b(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "a",
            Family::B => "b",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Family::A),
            "b" => Ok(Family::B),
            _ => Err(format!("unknown family `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub family: Family,
    pub n: usize,
    pub states: usize,
    pub algorithm: Algorithm,
    /// `None` iff the cell timed out.
    pub result: Option<DistanceResult>,
    /// Capped at the timeout for timed-out cells.
    pub wall_time: Duration,
    pub timed_out: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct BenchConfig {
    pub timeout: Duration,
    pub prune_diagonals: bool,
}

/// Times `alg` on `a`. Errors other than a timeout are returned.
pub fn time_cell(
    a: &Nfa,
    alg: Algorithm,
    cfg: &BenchConfig,
) -> Result<(Option<DistanceResult>, Duration)> {
    let run = || {
        let opts = DistanceOptions {
            prune_diagonals: cfg.prune_diagonals,
            deadline: Some(Instant::now() + cfg.timeout),
        };
        let start = Instant::now();
        let r = alg.run(a, &opts);
        (r, start.elapsed())
    };
    match run().0 {
        Err(Error::Timeout) => return Ok((None, cfg.timeout)),
        Err(e) => return Err(e),
        Ok(_) => {}
    }
    match run() {
        (Ok(r), t) => Ok((Some(r), t)),
        (Err(Error::Timeout), _) => Ok((None, cfg.timeout)),
        (Err(e), _) => Err(e),
    }
}

pub fn run_bench(
    family: Family,
    ns: &[usize],
    algos: &[Algorithm],
    cfg: &BenchConfig,
) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::new();
    for &n in ns {
        let a = family.generate(n)?;
        for &alg in algos {
            let (result, wall_time) = time_cell(&a, alg, cfg)?;
            records.push(BenchRecord {
                family,
                n,
                states: a.num_states(),
                algorithm: alg,
                result,
                wall_time,
                timed_out: result.is_none(),
            });
        }
    }
    Ok(records)
}

pub const CSV_HEADER: [&str; 7] = [
    "family",
    "n",
    "states",
    "algorithm",
    "result",
    "wall_time_s",
    "timed_out",
];

pub fn write_csv<W: io::Write>(records: &[BenchRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.family.to_string(),
            r.n.to_string(),
            r.states.to_string(),
            r.algorithm.to_string(),
            r.result.map(|d| d.to_string()).unwrap_or_default(),
            format!("{:.6}", r.wall_time.as_secs_f64()),
            r.timed_out.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
