//! The NFA accepting `t(L(A)) ∩ L(A)` for an error-counting transducer `t`,
//! and its level-by-level growth.
//!
//! States are triples `(φ, q, q')` with `φ` a transducer state and `q`, `q'`
//! states of `A`. A transition `(φ, q, q') --y--> (ψ, r, r')` exists iff
//! `φ --x/y--> ψ`, `q --x--> r` and `q' --y--> r'` in `A^ε`. Only triples
//! reachable from `([0], s, s)` are ever created, so every state of a
//! [`ProductNfa`] is reachable.
//!
//! A product at level `k` contains every reachable triple whose error counter
//! is at most `k`. [`ProductNfa::extend`] moves it to level `k + 1` by firing
//! the error edges out of the counter-`k` frontier and closing the new level
//! under non-error edges. Nothing is ever added into a lower level.

use std::collections::HashMap;

use crate::alphabet::{Alphabet, Label, Symbol};
use crate::error::{Error, Result};
use crate::nfa::{Nfa, StateId};
use crate::transducer::compose::{check_alphabets, moves, prepare};
use crate::transducer::{CounterState, Transducer};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ProductState {
    pub counter: CounterState,
    /// State of `A` on the input tape.
    pub left: StateId,
    /// State of `A` on the output tape.
    pub right: StateId,
}

#[derive(Clone, Debug)]
pub struct ProductNfa {
    source: Nfa,
    states: Vec<ProductState>,
    adj: Vec<Vec<(Label, StateId)>>,
    index: HashMap<ProductState, StateId>,
    finals: Vec<bool>,
    num_finals: usize,
    num_transitions: usize,
    level: u32,
    frontier: Vec<StateId>,
    diagonals_pruned: bool,
}

/// Builds the product of an error-counting transducer with `A^ε` on both
/// tapes. Final triples are those whose three components are final. The
/// level of the result is the transducer's error bound.
pub fn range_intersection_nfa(t: &Transducer, a: &Nfa) -> Result<ProductNfa> {
    check_alphabets(t, a)?;
    let info = t.counters().ok_or(Error::MissingCounters)?;
    let a = prepare(a);
    let mut p = ProductNfa::empty(a, info.bound, info.diagonals_pruned);
    let start_phi = t.start();
    let state_of = |phi: StateId, left, right| ProductState {
        counter: info.states[phi],
        left,
        right,
    };
    // Transducer state ids run parallel to product ids.
    let mut phis = Vec::new();
    let s = p.source.start();
    let (id, _) = p.intern(state_of(start_phi, s, s));
    phis.push(start_phi);
    let mut head = id;
    while head < p.states.len() {
        let ProductState { left, right, .. } = p.states[head];
        let phi = phis[head];
        for e in t.out(phi) {
            let lefts: Vec<StateId> = moves(&p.source, left, e.input).collect();
            let rights: Vec<StateId> = moves(&p.source, right, e.output).collect();
            for &r in &lefts {
                for &r2 in &rights {
                    let (target, fresh) = p.intern(state_of(e.target, r, r2));
                    if fresh {
                        phis.push(e.target);
                    }
                    p.add_transition(head, e.output, target);
                }
            }
        }
        head += 1;
    }
    for (id, &phi) in phis.iter().enumerate() {
        let st = p.states[id];
        if t.is_final(phi) && p.source.is_final(st.left) && p.source.is_final(st.right) {
            p.set_final(id, true);
        }
    }
    p.frontier = (0..p.states.len())
        .filter(|&id| p.states[id].counter.counter == p.level)
        .collect();
    Ok(p)
}

impl ProductNfa {
    fn empty(source: Nfa, level: u32, diagonals_pruned: bool) -> Self {
        ProductNfa {
            source,
            states: Vec::new(),
            adj: Vec::new(),
            index: HashMap::new(),
            finals: Vec::new(),
            num_finals: 0,
            num_transitions: 0,
            level,
            frontier: Vec::new(),
            diagonals_pruned,
        }
    }

    fn intern(&mut self, st: ProductState) -> (StateId, bool) {
        if let Some(&id) = self.index.get(&st) {
            return (id, false);
        }
        let id = self.states.len();
        self.index.insert(st, id);
        self.states.push(st);
        self.adj.push(Vec::new());
        self.finals.push(false);
        (id, true)
    }

    fn add_transition(&mut self, from: StateId, label: Label, to: StateId) {
        self.adj[from].push((label, to));
        self.num_transitions += 1;
    }

    fn set_final(&mut self, id: StateId, value: bool) {
        if self.finals[id] != value {
            self.finals[id] = value;
            if value {
                self.num_finals += 1;
            } else {
                self.num_finals -= 1;
            }
        }
    }

    /// Current error bound `k`.
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.num_transitions
    }

    pub fn states(&self) -> &[ProductState] {
        &self.states
    }

    pub fn out(&self, id: StateId) -> &[(Label, StateId)] {
        &self.adj[id]
    }

    pub fn is_final(&self, id: StateId) -> bool {
        self.finals[id]
    }

    /// Triples at the current level.
    pub fn frontier(&self) -> &[StateId] {
        &self.frontier
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.source.alphabet()
    }

    /// The epsilon-free, trimmed automaton this product was built from.
    pub fn source(&self) -> &Nfa {
        &self.source
    }

    /// Reachability from the start triple to a final triple; labels are ignored.
    pub fn has_accepting_path(&self) -> bool {
        if self.num_finals == 0 || self.states.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.states.len()];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(id) = stack.pop() {
            if self.finals[id] {
                return true;
            }
            for &(_, next) in &self.adj[id] {
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        false
    }

    /// Constant-time emptiness test. Sound because every triple is reachable
    /// by construction.
    pub fn has_final_state(&self) -> bool {
        self.num_finals > 0
    }

    /// Smallest error counter over final triples.
    pub fn min_final_counter(&self) -> Option<u32> {
        (0..self.states.len())
            .filter(|&id| self.finals[id])
            .map(|id| self.states[id].counter.counter)
            .min()
    }

    /// The automaton view, over output labels.
    pub fn to_nfa(&self) -> Nfa {
        Nfa::from_parts(
            self.source.alphabet().clone(),
            self.adj.clone(),
            0,
            self.finals.clone(),
        )
    }

    /// Grows the product from level `k` to `k + 1`. Finals of level `k` are
    /// demoted; the new finals are the counter-`k+1` triples over `F × F`.
    pub fn extend(&mut self) {
        let k = self.level;
        let next_level = k + 1;
        for id in 0..self.states.len() {
            self.set_final(id, false);
        }
        let frontier = std::mem::take(&mut self.frontier);
        let mut fresh: Vec<StateId> = Vec::new();
        let plain = CounterState::plain(next_level);

        for &id in &frontier {
            let ProductState {
                counter,
                left: q,
                right: q2,
            } = self.states[id];
            debug_assert_eq!(counter.counter, k);
            match counter.pending {
                None => {
                    if k == 0 {
                        // From [0]: substitutions into [1], deletions into [1,a].
                        self.fire_substitutions(id, q, q2, None, plain, &mut fresh);
                        for (sym, r) in self.left_moves(q) {
                            let st = CounterState::with_pending(1, sym);
                            self.link(id, None, st, r, q2, &mut fresh);
                        }
                        continue;
                    }
                    self.fire_substitutions(id, q, q2, None, plain, &mut fresh);
                    for (sym, r2) in self.left_moves(q2) {
                        self.link(id, Some(sym), plain, q, r2, &mut fresh);
                    }
                    for (_, r) in self.left_moves(q) {
                        self.link(id, None, plain, r, q2, &mut fresh);
                    }
                }
                Some(a) => {
                    if !self.diagonals_pruned {
                        self.fire_substitutions(id, q, q2, Some(a), plain, &mut fresh);
                        for (sym, r2) in self.left_moves(q2) {
                            if sym != a {
                                self.link(id, Some(sym), plain, q, r2, &mut fresh);
                            }
                        }
                    }
                    let st = CounterState::with_pending(next_level, a);
                    for (_, r) in self.left_moves(q) {
                        self.link(id, None, st, r, q2, &mut fresh);
                    }
                }
            }
        }

        // Close the new level under non-error edges.
        let mut head = 0;
        while head < fresh.len() {
            let id = fresh[head];
            let ProductState {
                counter,
                left: q,
                right: q2,
            } = self.states[id];
            for i in 0..self.source.out(q).len() {
                let (sigma, r) = self.source.out(q)[i];
                let sigma = sigma.expect("epsilon-free source");
                if counter.pending == Some(sigma) {
                    continue;
                }
                for j in 0..self.source.out(q2).len() {
                    let (tau, r2) = self.source.out(q2)[j];
                    if tau == Some(sigma) {
                        self.link(id, tau, plain, r, r2, &mut fresh);
                    }
                }
            }
            head += 1;
        }

        for &id in &fresh {
            let st = self.states[id];
            if self.source.is_final(st.left) && self.source.is_final(st.right) {
                self.set_final(id, true);
            }
        }
        self.level = next_level;
        self.frontier = fresh;
    }

    fn left_moves(&self, q: StateId) -> Vec<(Symbol, StateId)> {
        self.source
            .out(q)
            .iter()
            .map(|&(l, r)| (l.expect("epsilon-free source"), r))
            .collect()
    }

    /// `σ/τ` edges with `σ ≠ τ`, and `τ ≠ a` when a symbol is pending.
    fn fire_substitutions(
        &mut self,
        id: StateId,
        q: StateId,
        q2: StateId,
        pending: Option<Symbol>,
        target: CounterState,
        fresh: &mut Vec<StateId>,
    ) {
        for (sigma, r) in self.left_moves(q) {
            for (tau, r2) in self.left_moves(q2) {
                if sigma != tau && pending != Some(tau) {
                    self.link(id, Some(tau), target, r, r2, fresh);
                }
            }
        }
    }

    fn link(
        &mut self,
        from: StateId,
        label: Label,
        counter: CounterState,
        left: StateId,
        right: StateId,
        fresh: &mut Vec<StateId>,
    ) {
        let (to, is_new) = self.intern(ProductState {
            counter,
            left,
            right,
        });
        if is_new {
            fresh.push(to);
        }
        self.add_transition(from, label, to);
    }
}
