//! Exhaustive reference implementations for small instances.
//!
//! Everything here is exponential and meant for tests and the `oracle`
//! subcommand only.

use std::collections::{BTreeSet, HashSet};

use crate::alphabet::{Symbol, Word};
use crate::edit::edit_distance_words;
use crate::error::{Error, Result};
use crate::nfa::{Nfa, StateId};
use crate::transducer::Transducer;

/// Words in length-lexicographic order, complete up to `truncation_bound`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordSet {
    pub words: Vec<Word>,
    pub truncation_bound: usize,
}

impl WordSet {
    fn from_set(set: BTreeSet<(usize, Word)>, truncation_bound: usize) -> Self {
        WordSet {
            words: set.into_iter().map(|(_, w)| w).collect(),
            truncation_bound,
        }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &[Symbol]) -> bool {
        self.words.iter().any(|x| x == w)
    }
}

/// All accepted words of length at most `max_len`, by breadth-first
/// expansion of epsilon-closed state sets.
pub fn enumerate_language(a: &Nfa, max_len: usize) -> WordSet {
    let a = a.trim();
    let mut words = Vec::new();
    let mut level: Vec<(Word, Vec<StateId>)> = vec![(Vec::new(), a.epsilon_closure(&[a.start()]))];
    for len in 0..=max_len {
        let mut next = Vec::new();
        for (w, set) in level {
            if set.iter().any(|&q| a.is_final(q)) {
                words.push(w.clone());
            }
            if len == max_len {
                continue;
            }
            for sym in a.alphabet().symbols() {
                let stepped = a.epsilon_closure(&a.step(&set, sym));
                if !stepped.is_empty() {
                    let mut w2 = w.clone();
                    w2.push(sym);
                    next.push((w2, stepped));
                }
            }
        }
        level = next;
    }
    WordSet {
        words,
        truncation_bound: max_len,
    }
}

/// Minimum distance between two distinct enumerated words. Exact for
/// finite languages whose words all fit within `max_len`, an upper bound
/// otherwise.
pub fn brute_inner_distance(a: &Nfa, max_len: usize) -> Result<usize> {
    let ws = enumerate_language(a, max_len).words;
    if ws.len() < 2 {
        return Err(Error::TwoWordsRequired);
    }
    let mut best = usize::MAX;
    for (i, u) in ws.iter().enumerate() {
        for v in &ws[i + 1..] {
            // Distance is at least the length difference.
            if u.len().abs_diff(v.len()) < best {
                best = best.min(edit_distance_words(u, v));
            }
        }
    }
    Ok(best)
}

/// Every `y` with `(x, y)` in the relation and `|y| ≤ max_out_len`.
/// Explores configurations `(state, consumed input, output so far)`, each
/// at most once, so the search is finite and complete up to the bound.
pub fn brute_outputs(t: &Transducer, x: &[Symbol], max_out_len: usize) -> WordSet {
    let mut seen: HashSet<(StateId, usize, Word)> = HashSet::new();
    let mut found = BTreeSet::new();
    let start = (t.start(), 0, Vec::new());
    seen.insert(start.clone());
    let mut stack = vec![start];
    while let Some((q, pos, out)) = stack.pop() {
        if pos == x.len() && t.is_final(q) {
            found.insert((out.len(), out.clone()));
        }
        for e in t.out(q) {
            let pos2 = match e.input {
                None => pos,
                Some(s) if pos < x.len() && x[pos] == s => pos + 1,
                Some(_) => continue,
            };
            let mut out2 = out.clone();
            if let Some(y) = e.output {
                if out.len() == max_out_len {
                    continue;
                }
                out2.push(y);
            }
            let cfg = (e.target, pos2, out2);
            if seen.insert(cfg.clone()) {
                stack.push(cfg);
            }
        }
    }
    WordSet::from_set(found, max_out_len)
}

/// An input with two distinct outputs, if one exists among inputs of
/// length at most `max_in_len` and outputs of length at most
/// `max_in_len + |Q|`.
pub fn functionality_witness(t: &Transducer, max_in_len: usize) -> Option<(Word, Word, Word)> {
    let out_bound = max_in_len + t.num_states();
    let symbols: Vec<Symbol> = t.input_alphabet().symbols().collect();
    let mut level: Vec<Word> = vec![Vec::new()];
    for len in 0..=max_in_len {
        for x in &level {
            let outs = brute_outputs(t, x, out_bound);
            if outs.len() > 1 {
                let mut it = outs.words.into_iter();
                let (y1, y2) = (it.next().unwrap(), it.next().unwrap());
                return Some((x.clone(), y1, y2));
            }
        }
        if len < max_in_len {
            level = level
                .iter()
                .flat_map(|x| {
                    symbols.iter().map(move |&s| {
                        let mut x2 = x.clone();
                        x2.push(s);
                        x2
                    })
                })
                .collect();
        }
    }
    None
}

/// No input of length at most `max_in_len` has two outputs. A `false`
/// answer is definitive.
pub fn brute_is_functional(t: &Transducer, max_in_len: usize) -> bool {
    functionality_witness(t, max_in_len).is_none()
}
