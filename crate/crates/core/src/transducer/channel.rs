//! The two error-counting transducers over an alphabet `Σ` with bound `k`.
//!
//! [`build_channel_transducer`] realizes the channel that allows up to `k`
//! substitutions, insertions and deletions. It is input-preserving: every word
//! is a possible output of itself.
//!
//! [`build_iat_transducer`] is its input-altering counterpart: `v ∈ t(u)`
//! implies `1 ≤ d(u, v) ≤ k`, and every pair of distinct words within distance
//! `k` is related in at least one direction. A language `L` therefore has
//! inner distance greater than `k` iff `t(L) ∩ L = ∅`. Its states are
//!
//! * `[i]` for `0 ≤ i ≤ k`: `i` errors so far;
//! * `[i,a]` for `1 ≤ i ≤ k`: the output so far is a proper prefix of the
//!   input, and `a` is the first input symbol past that prefix (it was
//!   deleted).
//!
//! All states except `[0]` are final. Tracking the pending symbol `a` keeps
//! the machine from re-emitting `a` right after deleting it, which is what
//! makes it input-altering.

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use crate::nfa::StateId;

use super::{CounterInfo, CounterState, Edge, Transducer};

/// Chain `[0] → … → [k]`, all final, with `σ/σ` loops on every state and
/// substitution, deletion and insertion edges from `[i]` to `[i+1]`.
pub fn build_channel_transducer(k: u32, sigma: &Alphabet) -> Result<Transducer> {
    if k == 0 {
        return Err(Error::ZeroBound);
    }
    let k = k as usize;
    let mut adj = vec![Vec::new(); k + 1];
    for (i, out) in adj.iter_mut().enumerate() {
        for s in sigma.symbols() {
            out.push(edge(Some(s), Some(s), i));
            if i < k {
                for t in sigma.symbols().filter(|&t| t != s) {
                    out.push(edge(Some(s), Some(t), i + 1));
                }
                out.push(edge(Some(s), None, i + 1));
                out.push(edge(None, Some(s), i + 1));
            }
        }
    }
    let counters = CounterInfo {
        states: (0..=k as u32).map(CounterState::plain).collect(),
        bound: k as u32,
        diagonals_pruned: false,
    };
    Ok(Transducer::from_parts(
        sigma.clone(),
        sigma.clone(),
        adj,
        0,
        vec![true; k + 1],
        Some(counters),
    ))
}

/// The input-altering transducer with error bound `k`.
pub fn build_iat_transducer(k: u32, sigma: &Alphabet) -> Result<Transducer> {
    iat(k, sigma, false)
}

/// [`build_iat_transducer`] without the substitution and insertion edges
/// `[i,a] → [i+1]`. Each path using one of them can be rerouted through
/// `[i]` states with the same projections and no larger weight, so the
/// minimum counter over any language is unchanged.
pub fn build_pruned_iat_transducer(k: u32, sigma: &Alphabet) -> Result<Transducer> {
    iat(k, sigma, true)
}

/// State numbering of the input-altering transducer: `[i]` is `i`, and
/// `[i,a]` follows all plain states, grouped by counter.
#[derive(Clone, Copy, Debug)]
pub struct IatLayout {
    pub k: usize,
    pub r: usize,
}

impl IatLayout {
    pub fn num_states(self) -> usize {
        1 + self.k + self.k * self.r
    }

    pub fn plain(self, i: usize) -> StateId {
        debug_assert!(i <= self.k);
        i
    }

    pub fn pending(self, i: usize, a: Symbol) -> StateId {
        debug_assert!(1 <= i && i <= self.k);
        self.k + 1 + (i - 1) * self.r + a.index()
    }
}

pub(crate) fn iat(k: u32, sigma: &Alphabet, prune: bool) -> Result<Transducer> {
    if k == 0 {
        return Err(Error::ZeroBound);
    }
    let layout = IatLayout {
        k: k as usize,
        r: sigma.len(),
    };
    let k = layout.k;
    let n = layout.num_states();
    let mut adj = vec![Vec::new(); n];
    let mut states = vec![CounterState::plain(0); n];

    for i in 0..=k {
        let src = layout.plain(i);
        states[src] = CounterState::plain(i as u32);
        let out = &mut adj[src];
        for s in sigma.symbols() {
            out.push(edge(Some(s), Some(s), src));
            if i < k {
                for t in sigma.symbols().filter(|&t| t != s) {
                    out.push(edge(Some(s), Some(t), layout.plain(i + 1)));
                }
                if i == 0 {
                    out.push(edge(Some(s), None, layout.pending(1, s)));
                } else {
                    out.push(edge(None, Some(s), layout.plain(i + 1)));
                    out.push(edge(Some(s), None, layout.plain(i + 1)));
                }
            }
        }
    }
    for i in 1..=k {
        for a in sigma.symbols() {
            let src = layout.pending(i, a);
            states[src] = CounterState::with_pending(i as u32, a);
            let out = &mut adj[src];
            for s in sigma.symbols() {
                if s != a {
                    out.push(edge(Some(s), Some(s), layout.plain(i)));
                }
                if i < k {
                    out.push(edge(Some(s), None, layout.pending(i + 1, a)));
                    if !prune {
                        for t in sigma.symbols().filter(|&t| t != s && t != a) {
                            out.push(edge(Some(s), Some(t), layout.plain(i + 1)));
                        }
                        if s != a {
                            out.push(edge(None, Some(s), layout.plain(i + 1)));
                        }
                    }
                }
            }
        }
    }
    let mut finals = vec![true; n];
    finals[layout.plain(0)] = false;
    Ok(Transducer::from_parts(
        sigma.clone(),
        sigma.clone(),
        adj,
        0,
        finals,
        Some(CounterInfo {
            states,
            bound: k as u32,
            diagonals_pruned: prune,
        }),
    ))
}

fn edge(input: Option<Symbol>, output: Option<Symbol>, target: StateId) -> Edge {
    Edge {
        input,
        output,
        target,
    }
}
