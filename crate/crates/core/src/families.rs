//! Benchmark automata over `{0, 1}`.
//!
//! `A_n` accepts `0^{n-1}(10^{n-1})*` with `n` states and has inner distance
//! `n`, the worst case for its size. `B_n` accepts the Levenshtein code of
//! length `n`: words `b_1…b_n` with `Σ i·b_i ≡ 0 (mod n+1)`, inner distance
//! 2, using `n² + n + 1` states.

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use crate::nfa::Nfa;

const ZERO: Option<Symbol> = Some(Symbol(0));
const ONE: Option<Symbol> = Some(Symbol(1));

pub fn gen_family_a(n: usize) -> Result<Nfa> {
    if n < 2 {
        return Err(Error::FamilyTooSmall(n));
    }
    let chain = (0..n - 1).map(|i| (i, ZERO, i + 1));
    Nfa::new(
        Alphabet::binary(),
        n,
        0,
        [n - 1],
        chain.chain([(n - 1, ONE, 0)]),
    )
}

/// State `[i,s]` (`i` symbols read, weighted sum `s` mod `n+1`) is
/// `i·(n+1) + s`; the single final state `[n,0]` is `n·(n+1)`. Dead states
/// at the last level are kept, so the automaton is not trim.
pub fn gen_family_b(n: usize) -> Result<Nfa> {
    if n < 2 {
        return Err(Error::FamilyTooSmall(n));
    }
    let m = n + 1;
    let id = |i: usize, s: usize| i * m + s;
    let last = n * m;
    let mut transitions = Vec::new();
    for i in 0..n {
        for s in 0..m {
            for (label, s2) in [(ZERO, s), (ONE, (s + i + 1) % m)] {
                if i + 1 < n {
                    transitions.push((id(i, s), label, id(i + 1, s2)));
                } else if s2 == 0 {
                    transitions.push((id(i, s), label, last));
                }
            }
        }
    }
    Nfa::new(Alphabet::binary(), last + 1, 0, [last], transitions)
}
