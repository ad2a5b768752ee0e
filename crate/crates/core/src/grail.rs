//! Grail-style NFA text format.
//!
//! One item per line:
//!
//! ```text
//! (START) |- q0
//! q0 a q1
//! q1 @epsilon q2
//! q2 -| (FINAL)
//! ```
//!
//! State names and symbol tokens are arbitrary whitespace-free tokens,
//! numbered in order of first appearance. `@epsilon` labels an empty
//! transition. Blank lines and lines starting with `#` are ignored.

use std::collections::HashMap;
use std::fmt::Write;

use crate::alphabet::{Alphabet, Label, Symbol};
use crate::error::{ParseError, ParseErrorKind, Result};
use crate::nfa::{Nfa, StateId};

pub const EPSILON: &str = "@epsilon";
const START: &str = "(START)";
const FINAL: &str = "(FINAL)";

struct Interner {
    index: HashMap<String, usize>,
    names: Vec<String>,
}

impl Interner {
    fn new() -> Self {
        Interner {
            index: HashMap::new(),
            names: Vec::new(),
        }
    }

    fn get(&mut self, name: &str) -> usize {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len();
        self.index.insert(name.to_string(), id);
        self.names.push(name.to_string());
        id
    }
}

pub fn parse_nfa(text: &str) -> Result<Nfa> {
    let mut states = Interner::new();
    let mut symbols = Interner::new();
    let mut start: Option<StateId> = None;
    let mut finals = Vec::new();
    let mut transitions: Vec<(StateId, Option<usize>, StateId)> = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let [a, b, c] = tokens[..] else {
            return Err(err(ParseErrorKind::Arity(tokens.len())).into());
        };
        let reserved = |t: &str| t == START || t == FINAL || t == "|-" || t == "-|";
        match (a, b, c) {
            (START, "|-", q) if !reserved(q) => {
                if start.is_some() {
                    return Err(err(ParseErrorKind::DuplicateStart).into());
                }
                start = Some(states.get(q));
            }
            (q, "-|", FINAL) if !reserved(q) => finals.push(states.get(q)),
            (p, x, q) if !reserved(p) && !reserved(x) && !reserved(q) => {
                let p = states.get(p);
                let label = (x != EPSILON).then(|| symbols.get(x));
                let q = states.get(q);
                transitions.push((p, label, q));
            }
            _ => return Err(err(ParseErrorKind::Malformed(trimmed.to_string())).into()),
        }
    }

    let start = start.ok_or(ParseError {
        line: last_line,
        kind: ParseErrorKind::MissingStart,
    })?;
    if symbols.names.is_empty() {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::EmptyAlphabet,
        }
        .into());
    }
    let alphabet = Alphabet::new(symbols.names)?;
    let transitions = transitions
        .into_iter()
        .map(|(p, x, q)| (p, x.map(|s| Symbol(s as u32)), q));
    Nfa::new(alphabet, states.names.len(), start, finals, transitions)
}

/// Deterministic output: start line, transitions by `(source, label,
/// target)`, then finals. States are written as their numeric ids.
pub fn serialize_nfa(a: &Nfa) -> String {
    let mut out = String::new();
    let label = |l: Label| match l {
        None => EPSILON,
        Some(s) => a.alphabet().token(s),
    };
    writeln!(out, "{START} |- {}", a.start()).unwrap();
    for (p, x, q) in a.transitions() {
        writeln!(out, "{p} {} {q}", label(x)).unwrap();
    }
    for f in a.finals() {
        writeln!(out, "{f} -| {FINAL}").unwrap();
    }
    out
}
