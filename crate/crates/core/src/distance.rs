//! Inner edit distance of the language of an NFA.
//!
//! Four methods, from slowest to fastest:
//!
//! * [`dist_err_detect`]: binary search for the largest `k` such that the
//!   language is error-detecting for the `k`-error channel.
//! * [`dist_err_correct`]: the same with error-correction; only pins the
//!   distance down to one of two consecutive values.
//! * [`dist_first_inp_alter`]: binary search on emptiness of
//!   `t̂_k(L) ∩ L` for the input-altering transducer `t̂_k`.
//! * [`dist_next_inp_alter`]: one product with `t̂_{D-1}` and the smallest
//!   error counter over reachable final triples.
//! * [`dist_best_inp_alter`]: grows the product one error level at a time
//!   and stops at the first level with a final triple.
//!
//! `D` is the working bound, the distance between two shortest words of
//! the language.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::edit::edit_distance_words;
use crate::error::{Error, Result};
use crate::nfa::Nfa;
use crate::product::range_intersection_nfa;
use crate::transducer::channel::{build_channel_transducer, iat};
use crate::transducer::compose::{correct_product, detect_product, prepare};
use crate::transducer::functional::check_functional;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DistanceResult {
    Exact(usize),
    /// Two consecutive values, one of which is the distance.
    Pair(usize, usize),
}

impl DistanceResult {
    pub fn contains(self, d: usize) -> bool {
        match self {
            DistanceResult::Exact(x) => x == d,
            DistanceResult::Pair(x, y) => x == d || y == d,
        }
    }

    pub fn exact(self) -> Option<usize> {
        match self {
            DistanceResult::Exact(x) => Some(x),
            DistanceResult::Pair(..) => None,
        }
    }
}

impl fmt::Display for DistanceResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceResult::Exact(d) => write!(f, "{d}"),
            DistanceResult::Pair(a, b) => write!(f, "{a} {b}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Algorithm {
    Detect,
    Correct,
    First,
    Next,
    Best,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Detect,
        Algorithm::Correct,
        Algorithm::First,
        Algorithm::Next,
        Algorithm::Best,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Detect => "detect",
            Algorithm::Correct => "correct",
            Algorithm::First => "first",
            Algorithm::Next => "next",
            Algorithm::Best => "best",
        }
    }

    pub fn run(self, a: &Nfa, opts: &DistanceOptions) -> Result<DistanceResult> {
        let exact = DistanceResult::Exact;
        match self {
            Algorithm::Detect => dist_err_detect_with(a, opts).map(exact),
            Algorithm::Correct => dist_err_correct_with(a, opts),
            Algorithm::First => dist_first_inp_alter_with(a, opts).map(exact),
            Algorithm::Next => dist_next_inp_alter_with(a, opts).map(exact),
            Algorithm::Best => dist_best_inp_alter_with(a, opts).map(exact),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DistanceOptions {
    /// Use the input-altering transducer without the `[i,a] → [i+1]`
    /// substitution and insertion edges. Only affects `first`, `next` and
    /// `best`.
    pub prune_diagonals: bool,
    pub deadline: Option<Instant>,
}

impl DistanceOptions {
    fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}

/// Edit distance of the two shortest words; an upper bound on the inner
/// distance.
pub fn working_bound(a: &Nfa) -> Result<usize> {
    if !a.accepts_at_least_two_words() {
        return Err(Error::TwoWordsRequired);
    }
    let (u, v) = a.shortest_two_words()?;
    Ok(edit_distance_words(&u, &v))
}

/// Returns `min` once `min > max`, keeping `holds(min - 1)` true throughout.
fn binary_search(
    mut min: usize,
    mut max: usize,
    opts: &DistanceOptions,
    mut holds: impl FnMut(u32) -> Result<bool>,
) -> Result<usize> {
    while min <= max {
        opts.check_deadline()?;
        let k = (min + max) / 2;
        if holds(k as u32)? {
            min = k + 1;
        } else {
            max = k - 1;
        }
    }
    Ok(min)
}

pub fn dist_err_detect(a: &Nfa) -> Result<usize> {
    dist_err_detect_with(a, &DistanceOptions::default())
}

pub fn dist_err_detect_with(a: &Nfa, opts: &DistanceOptions) -> Result<usize> {
    let bound = working_bound(a)?;
    let a = prepare(a);
    binary_search(1, bound - 1, opts, |k| {
        let t = build_channel_transducer(k, a.alphabet())?;
        check_functional(&detect_product(&t, &a)?, opts.deadline)
    })
}

pub fn dist_err_correct(a: &Nfa) -> Result<DistanceResult> {
    dist_err_correct_with(a, &DistanceOptions::default())
}

pub fn dist_err_correct_with(a: &Nfa, opts: &DistanceOptions) -> Result<DistanceResult> {
    let bound = working_bound(a)?;
    let a = prepare(a);
    let min = binary_search(1, (bound - 1) / 2, opts, |k| {
        let t = build_channel_transducer(k, a.alphabet())?;
        check_functional(&correct_product(&t, &a)?, opts.deadline)
    })?;
    Ok(DistanceResult::Pair(2 * min - 1, 2 * min))
}

pub fn dist_first_inp_alter(a: &Nfa) -> Result<usize> {
    dist_first_inp_alter_with(a, &DistanceOptions::default())
}

pub fn dist_first_inp_alter_with(a: &Nfa, opts: &DistanceOptions) -> Result<usize> {
    let bound = working_bound(a)?;
    let a = prepare(a);
    binary_search(1, bound - 1, opts, |k| {
        let t = iat(k, a.alphabet(), opts.prune_diagonals)?;
        Ok(!range_intersection_nfa(&t, &a)?.has_accepting_path())
    })
}

pub fn dist_next_inp_alter(a: &Nfa) -> Result<usize> {
    dist_next_inp_alter_with(a, &DistanceOptions::default())
}

/// If no final triple is reachable, no two words are within `D - 1` errors
/// of each other and the distance is `D` itself.
pub fn dist_next_inp_alter_with(a: &Nfa, opts: &DistanceOptions) -> Result<usize> {
    let bound = working_bound(a)?;
    if bound == 1 {
        return Ok(1);
    }
    let a = prepare(a);
    opts.check_deadline()?;
    let t = iat(bound as u32 - 1, a.alphabet(), opts.prune_diagonals)?;
    let p = range_intersection_nfa(&t, &a)?;
    opts.check_deadline()?;
    let mut seen = vec![false; p.num_states()];
    let mut queue = std::collections::VecDeque::from([0]);
    seen[0] = true;
    let mut best = bound;
    while let Some(id) = queue.pop_front() {
        if p.is_final(id) {
            best = best.min(p.states()[id].counter.counter as usize);
        }
        for &(_, next) in p.out(id) {
            if !seen[next] {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    Ok(best)
}

pub fn dist_best_inp_alter(a: &Nfa) -> Result<usize> {
    dist_best_inp_alter_with(a, &DistanceOptions::default())
}

pub fn dist_best_inp_alter_with(a: &Nfa, opts: &DistanceOptions) -> Result<usize> {
    if !a.accepts_at_least_two_words() {
        return Err(Error::TwoWordsRequired);
    }
    let a = prepare(a);
    let t = iat(1, a.alphabet(), opts.prune_diagonals)?;
    let mut p = range_intersection_nfa(&t, &a)?;
    let mut cap: Option<usize> = None;
    while !p.has_final_state() {
        opts.check_deadline()?;
        let k = p.level() as usize;
        if k >= a.num_states() {
            let cap = match cap {
                Some(c) => c,
                None => *cap.insert(working_bound(&a)?),
            };
            if k >= cap {
                return Err(Error::Internal(format!(
                    "no final triple up to level {k}, above the working bound {cap}"
                )));
            }
        }
        p.extend();
    }
    Ok(p.level() as usize)
}
