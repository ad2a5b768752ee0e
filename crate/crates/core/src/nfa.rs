//! Nondeterministic finite automata with optional empty-labeled transitions.
//!
//! States are dense indices `0..num_states`. Every operation here is a pure
//! function returning a new automaton; an [`Nfa`] is never mutated once built
//! outside this crate.

use crate::alphabet::{Alphabet, Label, Symbol, Word};
use crate::error::{Error, Result};

pub type StateId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    adj: Vec<Vec<(Label, StateId)>>,
    start: StateId,
    finals: Vec<bool>,
    num_transitions: usize,
}

impl Nfa {
    /// Builds an automaton, validating every state and symbol reference.
    /// Duplicate transitions collapse into one.
    pub fn new<F, T>(
        alphabet: Alphabet,
        num_states: usize,
        start: StateId,
        finals: F,
        transitions: T,
    ) -> Result<Self>
    where
        F: IntoIterator<Item = StateId>,
        T: IntoIterator<Item = (StateId, Label, StateId)>,
    {
        let check = |state: StateId| {
            if state < num_states {
                Ok(state)
            } else {
                Err(Error::StateOutOfRange { state, num_states })
            }
        };
        check(start)?;
        let mut final_flags = vec![false; num_states];
        for f in finals {
            final_flags[check(f)?] = true;
        }
        let mut adj = vec![Vec::new(); num_states];
        for (src, label, dst) in transitions {
            check(src)?;
            check(dst)?;
            if let Some(sym) = label {
                if !alphabet.contains(sym) {
                    return Err(Error::SymbolOutOfRange(sym.0));
                }
            }
            adj[src].push((label, dst));
        }
        Ok(Self::from_parts(alphabet, adj, start, final_flags))
    }

    pub(crate) fn from_parts(
        alphabet: Alphabet,
        mut adj: Vec<Vec<(Label, StateId)>>,
        start: StateId,
        finals: Vec<bool>,
    ) -> Self {
        let mut num_transitions = 0;
        for out in &mut adj {
            out.sort_unstable();
            out.dedup();
            num_transitions += out.len();
        }
        Nfa {
            alphabet,
            adj,
            start,
            finals,
            num_transitions,
        }
    }

    /// Trie automaton accepting exactly `words`.
    pub fn from_words<W: AsRef<[Symbol]>>(alphabet: Alphabet, words: &[W]) -> Result<Self> {
        let mut adj: Vec<Vec<(Label, StateId)>> = vec![Vec::new()];
        let mut finals = vec![false];
        for w in words {
            let mut state = 0;
            for &sym in w.as_ref() {
                if !alphabet.contains(sym) {
                    return Err(Error::SymbolOutOfRange(sym.0));
                }
                state = match adj[state].iter().find(|(l, _)| *l == Some(sym)) {
                    Some(&(_, next)) => next,
                    None => {
                        let next = adj.len();
                        adj.push(Vec::new());
                        finals.push(false);
                        adj[state].push((Some(sym), next));
                        next
                    }
                };
            }
            finals[state] = true;
        }
        Ok(Self::from_parts(alphabet, adj, 0, finals))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.adj.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.num_transitions
    }

    /// States plus transitions.
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

    /// Outgoing transitions of `state`, sorted by (label, target).
    pub fn out(&self, state: StateId) -> &[(Label, StateId)] {
        &self.adj[state]
    }

    /// All transitions sorted by (source, label, target).
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Label, StateId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(q, out)| out.iter().map(move |&(l, r)| (q, l, r)))
    }

    pub fn is_epsilon_free(&self) -> bool {
        self.transitions().all(|(_, l, _)| l.is_some())
    }

    fn reverse_adj(&self) -> Vec<Vec<StateId>> {
        let mut rev = vec![Vec::new(); self.num_states()];
        for (q, _, r) in self.transitions() {
            rev[r].push(q);
        }
        rev
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        seen[self.start] = true;
        let mut stack = vec![self.start];
        while let Some(q) = stack.pop() {
            for &(_, r) in &self.adj[q] {
                if !seen[r] {
                    seen[r] = true;
                    stack.push(r);
                }
            }
        }
        seen
    }

    fn coreachable(&self) -> Vec<bool> {
        let rev = self.reverse_adj();
        let mut seen = self.finals.clone();
        let mut stack: Vec<StateId> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Keeps only states lying on some accepting path, renumbered densely in
    /// their original order. An empty language yields a lone start state.
    pub fn trim(&self) -> Nfa {
        let reach = self.reachable();
        let coreach = self.coreachable();
        if !coreach[self.start] {
            return Nfa::from_parts(self.alphabet.clone(), vec![Vec::new()], 0, vec![false]);
        }
        let mut map = vec![usize::MAX; self.num_states()];
        let mut next = 0;
        for q in 0..self.num_states() {
            if reach[q] && coreach[q] {
                map[q] = next;
                next += 1;
            }
        }
        let mut adj = vec![Vec::new(); next];
        let mut finals = vec![false; next];
        for q in 0..self.num_states() {
            if map[q] == usize::MAX {
                continue;
            }
            finals[map[q]] = self.finals[q];
            for &(l, r) in &self.adj[q] {
                if map[r] != usize::MAX {
                    adj[map[q]].push((l, map[r]));
                }
            }
        }
        Nfa::from_parts(self.alphabet.clone(), adj, map[self.start], finals)
    }

    /// Whether some final state is reachable from the start; labels are ignored.
    pub fn has_accepting_path(&self) -> bool {
        let reach = self.reachable();
        self.finals().any(|f| reach[f])
    }

    /// Whether the language has at least two words. Linear in the size of the
    /// automaton: an infinite language is detected through a strongly
    /// connected component carrying a symbol, and a finite one has two words
    /// iff its words differ in length or in some position.
    pub fn accepts_at_least_two_words(&self) -> bool {
        let t = self.trim();
        if t.finals().next().is_none() {
            return false;
        }
        let comp = t.scc();
        let num_comp = comp.iter().copied().max().map_or(0, |m| m + 1);
        if t.transitions()
            .any(|(q, l, r)| l.is_some() && comp[q] == comp[r])
        {
            return true;
        }
        // Tarjan numbers components in reverse topological order.
        let mut members = vec![Vec::new(); num_comp];
        for q in 0..t.num_states() {
            members[comp[q]].push(q);
        }
        let mut lo = vec![usize::MAX; num_comp];
        let mut hi = vec![0usize; num_comp];
        lo[comp[t.start]] = 0;
        for c in (0..num_comp).rev() {
            if lo[c] == usize::MAX {
                continue;
            }
            if lo[c] != hi[c] {
                return true;
            }
            for &q in &members[c] {
                for &(l, r) in &t.adj[q] {
                    let d = comp[r];
                    if d == c {
                        continue;
                    }
                    let step = usize::from(l.is_some());
                    lo[d] = lo[d].min(lo[c] + step);
                    hi[d] = hi[d].max(hi[c] + step);
                }
            }
        }
        let mut final_len = None;
        for f in t.finals() {
            let len = lo[comp[f]];
            if *final_len.get_or_insert(len) != len {
                return true;
            }
        }
        let mut at_position: Vec<Option<Symbol>> = vec![None; t.num_states() + 1];
        for (q, l, _) in t.transitions() {
            if let Some(sym) = l {
                let slot = &mut at_position[lo[comp[q]]];
                if *slot.get_or_insert(sym) != sym {
                    return true;
                }
            }
        }
        false
    }

    /// Strongly connected components (iterative Tarjan).
    fn scc(&self) -> Vec<usize> {
        let n = self.num_states();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut comp = vec![usize::MAX; n];
        let mut stack = Vec::new();
        let mut counter = 0;
        let mut num_comp = 0;
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut call: Vec<(StateId, usize)> = vec![(root, 0)];
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (q, ref mut i)) = call.last_mut() {
                if let Some(&(_, r)) = self.adj[q].get(*i) {
                    *i += 1;
                    if index[r] == usize::MAX {
                        index[r] = counter;
                        low[r] = counter;
                        counter += 1;
                        stack.push(r);
                        on_stack[r] = true;
                        call.push((r, 0));
                    } else if on_stack[r] {
                        low[q] = low[q].min(index[r]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[q]);
                }
                if low[q] == index[q] {
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        comp[w] = num_comp;
                        if w == q {
                            break;
                        }
                    }
                    num_comp += 1;
                }
            }
        }
        comp
    }

    /// States reachable from `states` through empty-labeled transitions,
    /// sorted ascending.
    pub fn epsilon_closure(&self, states: &[StateId]) -> Vec<StateId> {
        let mut seen = vec![false; self.num_states()];
        let mut stack = Vec::new();
        for &q in states {
            if !seen[q] {
                seen[q] = true;
                stack.push(q);
            }
        }
        let mut out = stack.clone();
        while let Some(q) = stack.pop() {
            for &(l, r) in &self.adj[q] {
                if l.is_none() && !seen[r] {
                    seen[r] = true;
                    stack.push(r);
                    out.push(r);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Symbol successors of a state set, before closure.
    pub fn step(&self, states: &[StateId], sym: Symbol) -> Vec<StateId> {
        let mut out: Vec<StateId> = states
            .iter()
            .flat_map(|&q| self.adj[q].iter())
            .filter(|(l, _)| *l == Some(sym))
            .map(|&(_, r)| r)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The first two words of the language in length-lexicographic order
    /// (alphabet order breaks ties), searched up to length `2·|Q|+1` of the
    /// trimmed automaton.
    pub fn shortest_two_words(&self) -> Result<(Word, Word)> {
        let t = self.trim();
        let bound = 2 * t.num_states() + 1;
        let lengths = t.exact_lengths(bound);
        let feasible = |set: &[StateId], len: usize| set.iter().any(|&q| lengths[q].contains(len));
        let start = t.epsilon_closure(&[t.start]);
        let mut found = Vec::new();
        for len in 0..=bound {
            if feasible(&start, len) {
                let mut prefix = Vec::new();
                t.lex_words(&start, len, &mut prefix, &feasible, &mut found);
                if found.len() >= 2 {
                    let second = found.pop().unwrap();
                    let first = found.pop().unwrap();
                    return Ok((first, second));
                }
            }
        }
        Err(Error::TwoWordsRequired)
    }

    fn lex_words(
        &self,
        set: &[StateId],
        remaining: usize,
        prefix: &mut Word,
        feasible: &impl Fn(&[StateId], usize) -> bool,
        found: &mut Vec<Word>,
    ) {
        if remaining == 0 {
            found.push(prefix.clone());
            return;
        }
        for sym in self.alphabet.symbols() {
            let next = self.epsilon_closure(&self.step(set, sym));
            if feasible(&next, remaining - 1) {
                prefix.push(sym);
                self.lex_words(&next, remaining - 1, prefix, feasible, found);
                prefix.pop();
                if found.len() >= 2 {
                    return;
                }
            }
        }
    }

    /// For each state, the set of lengths `≤ bound` of words leading from it
    /// to a final state.
    fn exact_lengths(&self, bound: usize) -> Vec<LengthSet> {
        let mut sets: Vec<LengthSet> = (0..self.num_states())
            .map(|q| {
                let mut s = LengthSet::new(bound);
                if self.finals[q] {
                    s.insert(0);
                }
                s
            })
            .collect();
        let mut changed = true;
        while changed {
            changed = false;
            for q in 0..self.num_states() {
                for &(l, r) in &self.adj[q] {
                    let incoming = if l.is_some() {
                        sets[r].shifted()
                    } else {
                        sets[r].clone()
                    };
                    changed |= sets[q].union_with(&incoming);
                }
            }
        }
        sets
    }

    /// `A^ε`: the automaton with an empty-labeled self-loop added on every state.
    pub fn augment_with_identity_loops(&self) -> Nfa {
        let mut adj = self.adj.clone();
        for (q, out) in adj.iter_mut().enumerate() {
            out.push((None, q));
        }
        Nfa::from_parts(self.alphabet.clone(), adj, self.start, self.finals.clone())
    }

    /// Equivalent automaton without empty-labeled transitions, trimmed.
    /// Returns a clone when the input is already epsilon-free.
    pub fn remove_epsilon(&self) -> Nfa {
        if self.is_epsilon_free() {
            return self.clone();
        }
        let n = self.num_states();
        let mut adj = vec![Vec::new(); n];
        let mut finals = vec![false; n];
        for q in 0..n {
            for p in self.epsilon_closure(&[q]) {
                finals[q] |= self.finals[p];
                for &(l, r) in &self.adj[p] {
                    if l.is_some() {
                        adj[q].push((l, r));
                    }
                }
            }
        }
        Nfa::from_parts(self.alphabet.clone(), adj, self.start, finals).trim()
    }
}

/// Fixed-capacity bitset over `0..=bound`.
#[derive(Clone, Debug)]
struct LengthSet {
    bits: Vec<u64>,
    bound: usize,
}

impl LengthSet {
    fn new(bound: usize) -> Self {
        LengthSet {
            bits: vec![0; bound / 64 + 1],
            bound,
        }
    }

    fn insert(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        i <= self.bound && self.bits[i / 64] & (1 << (i % 64)) != 0
    }

    /// `{i + 1 : i ∈ self}` truncated at the bound.
    fn shifted(&self) -> Self {
        let mut out = LengthSet::new(self.bound);
        let mut carry = 0;
        for (dst, &src) in out.bits.iter_mut().zip(&self.bits) {
            *dst = (src << 1) | carry;
            carry = src >> 63;
        }
        let spill = (self.bound + 1) % 64;
        if spill != 0 {
            *out.bits.last_mut().unwrap() &= (1u64 << spill) - 1;
        }
        out
    }

    fn union_with(&mut self, other: &Self) -> bool {
        let mut changed = false;
        for (a, &b) in self.bits.iter_mut().zip(&other.bits) {
            let merged = *a | b;
            changed |= merged != *a;
            *a = merged;
        }
        changed
    }
}
