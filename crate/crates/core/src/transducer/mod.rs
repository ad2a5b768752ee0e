//! Standard-form finite transducers.
//!
//! Every transition reads at most one input symbol and writes at most one
//! output symbol. The channel and input-altering constructions live in
//! [`channel`], the automaton products in [`compose`] and the functionality
//! test in [`functional`].

pub mod channel;
pub mod compose;
pub mod functional;

use std::fmt;

use crate::alphabet::{Alphabet, Label, Symbol};
use crate::error::{Error, Result};
use crate::nfa::StateId;

/// A transition `--input/output--> target`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub input: Label,
    pub output: Label,
    pub target: StateId,
}

/// Error counter of a channel state `[i]`, or of an input-altering state
/// `[i]` / `[i,a]` where `a` is the pending deleted symbol.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CounterState {
    pub counter: u32,
    pub pending: Option<Symbol>,
}

impl CounterState {
    pub fn plain(counter: u32) -> Self {
        CounterState {
            counter,
            pending: None,
        }
    }

    pub fn with_pending(counter: u32, sym: Symbol) -> Self {
        debug_assert!(counter >= 1);
        CounterState {
            counter,
            pending: Some(sym),
        }
    }
}

impl fmt::Display for CounterState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pending {
            None => write!(f, "[{}]", self.counter),
            Some(a) => write!(f, "[{},{}]", self.counter, a.0),
        }
    }
}

/// Metadata carried by transducers built from the error-counter constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterInfo {
    pub states: Vec<CounterState>,
    /// The largest error counter `k`.
    pub bound: u32,
    /// Whether the `[i,a] -> [i+1]` substitution and insertion edges were left out.
    pub diagonals_pruned: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transducer {
    input_alphabet: Alphabet,
    output_alphabet: Alphabet,
    adj: Vec<Vec<Edge>>,
    start: StateId,
    finals: Vec<bool>,
    num_transitions: usize,
    counters: Option<CounterInfo>,
}

impl Transducer {
    pub fn new<F, T>(
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        num_states: usize,
        start: StateId,
        finals: F,
        transitions: T,
    ) -> Result<Self>
    where
        F: IntoIterator<Item = StateId>,
        T: IntoIterator<Item = (StateId, Label, Label, StateId)>,
    {
        let check = |state: StateId| {
            if state < num_states {
                Ok(state)
            } else {
                Err(Error::StateOutOfRange { state, num_states })
            }
        };
        let check_label = |sigma: &Alphabet, label: Label| match label {
            Some(sym) if !sigma.contains(sym) => Err(Error::SymbolOutOfRange(sym.0)),
            _ => Ok(label),
        };
        check(start)?;
        let mut final_flags = vec![false; num_states];
        for f in finals {
            final_flags[check(f)?] = true;
        }
        let mut adj = vec![Vec::new(); num_states];
        for (src, input, output, dst) in transitions {
            adj[check(src)?].push(Edge {
                input: check_label(&input_alphabet, input)?,
                output: check_label(&output_alphabet, output)?,
                target: check(dst)?,
            });
        }
        Ok(Self::from_parts(
            input_alphabet,
            output_alphabet,
            adj,
            start,
            final_flags,
            None,
        ))
    }

    pub(crate) fn from_parts(
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        mut adj: Vec<Vec<Edge>>,
        start: StateId,
        finals: Vec<bool>,
        counters: Option<CounterInfo>,
    ) -> Self {
        let mut num_transitions = 0;
        for out in &mut adj {
            out.sort_unstable();
            out.dedup();
            num_transitions += out.len();
        }
        Transducer {
            input_alphabet,
            output_alphabet,
            adj,
            start,
            finals,
            num_transitions,
            counters,
        }
    }

    /// Single final state with a `σ/σ` loop for every symbol.
    pub fn identity(sigma: &Alphabet) -> Self {
        let loops = sigma
            .symbols()
            .map(|s| Edge {
                input: Some(s),
                output: Some(s),
                target: 0,
            })
            .collect();
        Self::from_parts(
            sigma.clone(),
            sigma.clone(),
            vec![loops],
            0,
            vec![true],
            None,
        )
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output_alphabet
    }

    pub fn num_states(&self) -> usize {
        self.adj.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.num_transitions
    }

    pub fn size(&self) -> usize {
        self.num_states() + self.num_transitions
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.finals[state]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter_map(|(q, &f)| f.then_some(q))
    }

    pub fn out(&self, state: StateId) -> &[Edge] {
        &self.adj[state]
    }

    /// All transitions as `(source, input, output, target)`.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Label, Label, StateId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(q, out)| out.iter().map(move |e| (q, e.input, e.output, e.target)))
    }

    pub fn counters(&self) -> Option<&CounterInfo> {
        self.counters.as_ref()
    }

    pub fn counter(&self, state: StateId) -> Option<CounterState> {
        self.counters.as_ref().map(|c| c.states[state])
    }

    /// Swaps input and output on every transition; `R(t⁻¹) = R(t)⁻¹`.
    pub fn invert(&self) -> Transducer {
        let adj = self
            .adj
            .iter()
            .map(|out| {
                out.iter()
                    .map(|e| Edge {
                        input: e.output,
                        output: e.input,
                        target: e.target,
                    })
                    .collect()
            })
            .collect();
        Self::from_parts(
            self.output_alphabet.clone(),
            self.input_alphabet.clone(),
            adj,
            self.start,
            self.finals.clone(),
            self.counters.clone(),
        )
    }

    /// Restriction to states on some accepting path, renumbered in order.
    pub fn trim(&self) -> Transducer {
        let n = self.num_states();
        let mut reach = vec![false; n];
        reach[self.start] = true;
        let mut stack = vec![self.start];
        while let Some(q) = stack.pop() {
            for e in &self.adj[q] {
                if !reach[e.target] {
                    reach[e.target] = true;
                    stack.push(e.target);
                }
            }
        }
        let mut rev = vec![Vec::new(); n];
        for (q, _, _, r) in self.transitions() {
            rev[r].push(q);
        }
        let mut coreach = self.finals.clone();
        let mut stack: Vec<StateId> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if !coreach[p] {
                    coreach[p] = true;
                    stack.push(p);
                }
            }
        }
        let keep: Vec<bool> = (0..n).map(|q| reach[q] && coreach[q]).collect();
        if !keep[self.start] {
            let counters = self.counters.as_ref().map(|c| CounterInfo {
                states: vec![c.states[self.start]],
                ..c.clone()
            });
            return Self::from_parts(
                self.input_alphabet.clone(),
                self.output_alphabet.clone(),
                vec![Vec::new()],
                0,
                vec![false],
                counters,
            );
        }
        let mut map = vec![usize::MAX; n];
        let mut next = 0;
        for q in 0..n {
            if keep[q] {
                map[q] = next;
                next += 1;
            }
        }
        let mut adj = vec![Vec::new(); next];
        let mut finals = vec![false; next];
        for q in (0..n).filter(|&q| keep[q]) {
            finals[map[q]] = self.finals[q];
            adj[map[q]] = self.adj[q]
                .iter()
                .filter(|e| keep[e.target])
                .map(|e| Edge {
                    target: map[e.target],
                    ..*e
                })
                .collect();
        }
        let counters = self.counters.as_ref().map(|c| CounterInfo {
            states: (0..n).filter(|&q| keep[q]).map(|q| c.states[q]).collect(),
            ..c.clone()
        });
        Self::from_parts(
            self.input_alphabet.clone(),
            self.output_alphabet.clone(),
            adj,
            map[self.start],
            finals,
            counters,
        )
    }
}
