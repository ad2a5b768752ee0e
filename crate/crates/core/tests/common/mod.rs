//! Helpers shared by the integration test targets.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use langdist::oracle::enumerate_language;
use langdist::transducer::{CounterState, Transducer};
use langdist::{
    build_channel_transducer, correct_product, detect_product, gen_family_a, gen_family_b,
    Alphabet, EditOp, EditString, Label, Nfa, Symbol, Word,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ab() -> Alphabet {
    Alphabet::from_chars("ab").unwrap()
}

pub fn finite(sigma: &Alphabet, words: &[&str]) -> Nfa {
    let ws: Vec<Word> = words.iter().map(|w| sigma.word(w).unwrap()).collect();
    Nfa::from_words(sigma.clone(), &ws).unwrap()
}

/// All words over `sigma` of length at most `max_len`, shortest first.
pub fn all_words(sigma: &Alphabet, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut level = vec![Vec::new()];
    for _ in 0..max_len {
        level = level
            .iter()
            .flat_map(|w: &Word| {
                sigma.symbols().map(move |s| {
                    let mut w2 = w.clone();
                    w2.push(s);
                    w2
                })
            })
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// Random acyclic NFA: edges only go from lower to higher state ids, a
/// tenth of them empty-labeled. Trimmed; `None` if it accepts fewer than
/// two words.
pub fn random_acyclic_nfa(rng: &mut ChaCha8Rng) -> Option<Nfa> {
    let r = rng.gen_range(2..=3);
    let sigma = Alphabet::from_chars(&"abc"[..r]).unwrap();
    let n = rng.gen_range(2..=8);
    let mut transitions = Vec::new();
    for p in 0..n - 1 {
        let out_degree = rng.gen_range(1..=3);
        for _ in 0..out_degree {
            let q = rng.gen_range(p + 1..n);
            let label = if rng.gen_bool(0.1) {
                None
            } else {
                Some(Symbol(rng.gen_range(0..r as u32)))
            };
            transitions.push((p, label, q));
        }
    }
    let mut finals = vec![n - 1];
    for q in 0..n - 1 {
        if rng.gen_bool(0.3) {
            finals.push(q);
        }
    }
    let a = Nfa::new(sigma, n, 0, finals, transitions).unwrap().trim();
    (a.num_states() <= 8 && enumerate_language(&a, a.num_states()).len() >= 2).then_some(a)
}

pub fn random_acyclic_corpus(seed: u64, count: usize) -> Vec<Nfa> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        if let Some(a) = random_acyclic_nfa(&mut rng) {
            out.push(a);
        }
    }
    out
}

/// Random transducer over `{a, b}` with `n` states. Empty/empty transitions
/// are excluded.
pub fn random_transducer(rng: &mut ChaCha8Rng, n: usize) -> Transducer {
    let sigma = ab();
    let labels: [Label; 3] = [None, Some(Symbol(0)), Some(Symbol(1))];
    let m = rng.gen_range(n..=2 * n + 2);
    let mut transitions = Vec::new();
    while transitions.len() < m {
        let input = *labels.choose(rng).unwrap();
        let output = *labels.choose(rng).unwrap();
        if input.is_none() && output.is_none() {
            continue;
        }
        transitions.push((rng.gen_range(0..n), input, output, rng.gen_range(0..n)));
    }
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    Transducer::new(sigma.clone(), sigma, n, 0, finals, transitions).unwrap()
}

/// Labeled suite for functionality testing: constructions from the crate
/// plus seeded random 4-state transducers.
pub fn curated_transducers() -> Vec<(String, Transducer)> {
    let sigma = ab();
    let mut out: Vec<(String, Transducer)> =
        vec![("identity".into(), Transducer::identity(&sigma))];
    for k in 1..=2 {
        out.push((
            format!("channel({k})"),
            build_channel_transducer(k, &sigma).unwrap(),
        ));
        out.push((
            format!("iat({k})"),
            langdist::build_iat_transducer(k, &sigma).unwrap(),
        ));
    }
    let mut langs: Vec<(String, Nfa)> = vec![
        ("{ab}".into(), finite(&sigma, &["ab"])),
        ("{a,b}".into(), finite(&sigma, &["a", "b"])),
        ("{aa,bb}".into(), finite(&sigma, &["aa", "bb"])),
        ("{ab,ba}".into(), finite(&sigma, &["ab", "ba"])),
        ("{a,aaa}".into(), finite(&sigma, &["a", "aaa"])),
        (
            "{aab,bba,abab}".into(),
            finite(&sigma, &["aab", "bba", "abab"]),
        ),
    ];
    for n in 2..=3 {
        langs.push((format!("A_{n}"), gen_family_a(n).unwrap()));
    }
    langs.push(("B_3".into(), gen_family_b(3).unwrap()));
    for (name, a) in &langs {
        let (alphabet, name) = (a.alphabet(), name.clone());
        for k in 1..=2 {
            let t = build_channel_transducer(k, alphabet).unwrap();
            out.push((
                format!("detect({name},{k})"),
                detect_product(&t, a).unwrap(),
            ));
            out.push((
                format!("correct({name},{k})"),
                correct_product(&t, a).unwrap(),
            ));
        }
    }
    let mut rng = rng(0x7d5);
    for i in 0..100 {
        out.push((format!("random#{i}"), random_transducer(&mut rng, 4)));
    }
    out
}

/// States reachable at the end of a path reading `u` and writing `v`.
pub fn end_states(t: &Transducer, u: &[Symbol], v: &[Symbol]) -> BTreeSet<usize> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([(t.start(), 0, 0)]);
    seen.insert((t.start(), 0, 0));
    let mut ends = BTreeSet::new();
    while let Some((q, i, j)) = queue.pop_front() {
        if i == u.len() && j == v.len() {
            ends.insert(q);
        }
        for e in t.out(q) {
            let i2 = match e.input {
                None => i,
                Some(s) if i < u.len() && u[i] == s => i + 1,
                Some(_) => continue,
            };
            let j2 = match e.output {
                None => j,
                Some(s) if j < v.len() && v[j] == s => j + 1,
                Some(_) => continue,
            };
            if seen.insert((e.target, i2, j2)) {
                queue.push_back((e.target, i2, j2));
            }
        }
    }
    ends
}

/// `(u, v)` is in the relation of `t`.
pub fn relates(t: &Transducer, u: &[Symbol], v: &[Symbol]) -> bool {
    end_states(t, u, v).into_iter().any(|q| t.is_final(q))
}

/// Labels of all accepting paths with at most `max_edges` edges, paired
/// with the counter of the final state.
pub fn accepting_path_labels(t: &Transducer, max_edges: usize) -> Vec<(EditString, CounterState)> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<EditOp>)> = vec![(t.start(), Vec::new())];
    while let Some((q, ops)) = stack.pop() {
        if t.is_final(q) {
            out.push((EditString::from(ops.clone()), t.counter(q).unwrap()));
        }
        if ops.len() == max_edges {
            continue;
        }
        for e in t.out(q) {
            let mut ops2 = ops.clone();
            ops2.push(EditOp::new(e.input, e.output).unwrap());
            stack.push((e.target, ops2));
        }
    }
    out
}
