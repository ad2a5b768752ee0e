//! Restricting a transducer to a language on one or both tapes.
//!
//! The automaton side is read through `A^ε`: an empty label on the
//! transducer leaves the automaton in place. Automata with empty-labeled
//! transitions are made epsilon-free first.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::hash::Hash;

use crate::alphabet::Label;
use crate::error::{Error, Result};
use crate::nfa::{Nfa, StateId};

use super::{Edge, Transducer};

/// Targets of `q` on `label` in `A^ε`.
pub(crate) fn moves(a: &Nfa, q: StateId, label: Label) -> impl Iterator<Item = StateId> + '_ {
    let (stay, sym) = match label {
        None => (Some(q), None),
        Some(s) => (None, Some(s)),
    };
    stay.into_iter().chain(
        a.out(q)
            .iter()
            .filter(move |(l, _)| sym.is_some() && *l == sym)
            .map(|&(_, r)| r),
    )
}

pub(crate) fn prepare(a: &Nfa) -> Nfa {
    a.trim().remove_epsilon()
}

/// Worklist-driven product: only states reachable from the start exist.
struct Builder<K> {
    index: HashMap<K, StateId>,
    keys: Vec<K>,
    adj: Vec<Vec<Edge>>,
}

impl<K: Copy + Eq + Hash> Builder<K> {
    fn new(start: K) -> Self {
        let mut b = Builder {
            index: HashMap::new(),
            keys: Vec::new(),
            adj: Vec::new(),
        };
        b.intern(start);
        b
    }

    fn intern(&mut self, key: K) -> StateId {
        match self.index.entry(key) {
            Entry::Occupied(e) => *e.get(),
            Entry::Vacant(e) => {
                let id = self.keys.len();
                e.insert(id);
                self.keys.push(key);
                self.adj.push(Vec::new());
                id
            }
        }
    }
}

/// `(t ↓ A ↑ A)`: realizes `R(t) ∩ (L(A) × Σ*) ∩ (Σ* × L(A))`. States are
/// triples `(p, q, q')`; the result is trimmed.
pub fn detect_product(t: &Transducer, a: &Nfa) -> Result<Transducer> {
    check_alphabets(t, a)?;
    let a = prepare(a);
    let start = (t.start(), a.start(), a.start());
    let mut b = Builder::new(start);
    let mut head = 0;
    while head < b.keys.len() {
        let (p, q, q2) = b.keys[head];
        for e in t.out(p) {
            for r in moves(&a, q, e.input) {
                for r2 in moves(&a, q2, e.output) {
                    let target = b.intern((e.target, r, r2));
                    b.adj[head].push(Edge { target, ..*e });
                }
            }
        }
        head += 1;
    }
    let finals = b
        .keys
        .iter()
        .map(|&(p, q, q2)| t.is_final(p) && a.is_final(q) && a.is_final(q2))
        .collect();
    Ok(Transducer::from_parts(
        t.input_alphabet().clone(),
        t.output_alphabet().clone(),
        b.adj,
        0,
        finals,
        None,
    )
    .trim())
}

/// `(t⁻¹ ↑ A)`: realizes `R(t)⁻¹ ∩ (Σ* × L(A))`. States are pairs `(p, q)`
/// with `p` from the inverse of `t`; the result is trimmed.
pub fn correct_product(t: &Transducer, a: &Nfa) -> Result<Transducer> {
    check_alphabets(t, a)?;
    let a = prepare(a);
    let inv = t.invert();
    let mut b = Builder::new((inv.start(), a.start()));
    let mut head = 0;
    while head < b.keys.len() {
        let (p, q) = b.keys[head];
        for e in inv.out(p) {
            for r in moves(&a, q, e.output) {
                let target = b.intern((e.target, r));
                b.adj[head].push(Edge { target, ..*e });
            }
        }
        head += 1;
    }
    let finals = b
        .keys
        .iter()
        .map(|&(p, q)| inv.is_final(p) && a.is_final(q))
        .collect();
    Ok(Transducer::from_parts(
        inv.input_alphabet().clone(),
        inv.output_alphabet().clone(),
        b.adj,
        0,
        finals,
        None,
    )
    .trim())
}

pub(crate) fn check_alphabets(t: &Transducer, a: &Nfa) -> Result<()> {
    if t.input_alphabet() != a.alphabet() || t.output_alphabet() != a.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}
