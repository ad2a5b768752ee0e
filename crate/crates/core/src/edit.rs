//! Edit operations, edit strings and word-to-word edit distance.
//!
//! Edit strings only appear in tests, oracles and witnesses; the distance
//! algorithms never enumerate alignments.

use std::fmt;

use crate::alphabet::{Alphabet, Label, Symbol, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EditKind {
    Match,
    Substitution,
    Insertion,
    Deletion,
}

/// A basic edit operation `(x/y)`; at most one side is empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct EditOp {
    input: Label,
    output: Label,
}

impl EditOp {
    pub fn new(input: Label, output: Label) -> Result<Self> {
        if input.is_none() && output.is_none() {
            return Err(Error::EmptyEditOp);
        }
        Ok(EditOp { input, output })
    }

    pub fn keep(sym: Symbol) -> Self {
        EditOp {
            input: Some(sym),
            output: Some(sym),
        }
    }

    pub fn substitute(from: Symbol, to: Symbol) -> Self {
        EditOp {
            input: Some(from),
            output: Some(to),
        }
    }

    pub fn insert(sym: Symbol) -> Self {
        EditOp {
            input: None,
            output: Some(sym),
        }
    }

    pub fn delete(sym: Symbol) -> Self {
        EditOp {
            input: Some(sym),
            output: None,
        }
    }

    pub fn input(self) -> Label {
        self.input
    }

    pub fn output(self) -> Label {
        self.output
    }

    pub fn kind(self) -> EditKind {
        match (self.input, self.output) {
            (Some(x), Some(y)) if x == y => EditKind::Match,
            (Some(_), Some(_)) => EditKind::Substitution,
            (None, Some(_)) => EditKind::Insertion,
            (Some(_), None) => EditKind::Deletion,
            (None, None) => unreachable!("rejected by EditOp::new"),
        }
    }

    pub fn is_error(self) -> bool {
        self.input != self.output
    }

    pub fn inverse(self) -> Self {
        EditOp {
            input: self.output,
            output: self.input,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct EditString {
    ops: Vec<EditOp>,
}

impl From<Vec<EditOp>> for EditString {
    fn from(ops: Vec<EditOp>) -> Self {
        EditString { ops }
    }
}

impl FromIterator<EditOp> for EditString {
    fn from_iter<I: IntoIterator<Item = EditOp>>(iter: I) -> Self {
        EditString {
            ops: iter.into_iter().collect(),
        }
    }
}

impl EditString {
    /// Parses the `(x/y)(x/y)…` notation over single-character symbols, with
    /// `ε` or `e` for the empty side.
    pub fn parse(sigma: &Alphabet, text: &str) -> Result<Self> {
        let side = |s: &str| -> Result<Label> {
            match s {
                "ε" | "e" | "" => Ok(None),
                tok => sigma
                    .symbol(tok)
                    .map(Some)
                    .ok_or_else(|| Error::UnknownSymbol(tok.to_string())),
            }
        };
        text.split(')')
            .map(str::trim)
            .filter(|chunk| !chunk.is_empty())
            .map(|chunk| {
                let body = chunk
                    .strip_prefix('(')
                    .ok_or_else(|| Error::UnknownSymbol(chunk.to_string()))?;
                let (x, y) = body
                    .split_once('/')
                    .ok_or_else(|| Error::UnknownSymbol(body.to_string()))?;
                EditOp::new(side(x.trim())?, side(y.trim())?)
            })
            .collect()
    }

    pub fn ops(&self) -> &[EditOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Number of error operations.
    pub fn weight(&self) -> usize {
        self.ops.iter().filter(|op| op.is_error()).count()
    }

    /// `(inp(h), out(h))`.
    pub fn projections(&self) -> (Word, Word) {
        let input = self.ops.iter().filter_map(|op| op.input).collect();
        let output = self.ops.iter().filter_map(|op| op.output).collect();
        (input, output)
    }

    pub fn inverse(&self) -> Self {
        self.ops.iter().map(|op| op.inverse()).collect()
    }

    fn first_error(&self) -> Option<usize> {
        self.ops.iter().position(|op| op.is_error())
    }

    /// Reducedness: the first error is not an insertion, and when it is a
    /// deletion `(a/ε)`, the first non-deletion after it does not output `a`.
    pub fn is_reduced(&self) -> Result<bool> {
        let first = self.first_error().ok_or(Error::ZeroWeight)?;
        let op = self.ops[first];
        Ok(match op.kind() {
            EditKind::Insertion => false,
            EditKind::Deletion => self.ops[first + 1..]
                .iter()
                .find(|o| o.kind() != EditKind::Deletion)
                .is_none_or(|next| next.output != op.input),
            _ => true,
        })
    }

    /// Rewrites the string into reduced form, preserving both projections up
    /// to order and never increasing the weight. A leading insertion inverts
    /// the whole string, so the result may realize `(out, inp)` instead of
    /// `(inp, out)`. For a string realizing the edit distance of its
    /// projections the weight is unchanged.
    pub fn reduce(&self) -> Result<EditString> {
        let (input, output) = self.projections();
        if input == output {
            return Err(Error::EqualProjections);
        }
        let cap = self.ops.len() * self.ops.len() + 2;
        let mut g = self.clone();
        for _ in 0..cap {
            let first = g.first_error().ok_or(Error::ZeroWeight)?;
            match g.ops[first].kind() {
                EditKind::Substitution => return Ok(g),
                EditKind::Insertion => {
                    g = g.inverse();
                    continue;
                }
                EditKind::Deletion => {}
                EditKind::Match => unreachable!("first error is an error"),
            }
            let deleted = g.ops[first].input;
            let mut next = first + 1;
            while next < g.ops.len() && g.ops[next].kind() == EditKind::Deletion {
                next += 1;
            }
            match g.ops.get(next) {
                Some(op) if op.output == deleted => {
                    // (a/ε)(dels)(x/a) -> (a/a)(dels)(x/ε)
                    let x = op.input;
                    g.ops[first] = EditOp {
                        input: deleted,
                        output: deleted,
                    };
                    match x {
                        Some(_) => {
                            g.ops[next] = EditOp {
                                input: x,
                                output: None,
                            }
                        }
                        None => {
                            g.ops.remove(next);
                        }
                    }
                }
                _ => return Ok(g),
            }
        }
        Err(Error::ReductionDiverged(cap))
    }

    pub fn display<'a>(&'a self, sigma: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayEdit { h: self, sigma }
    }
}

struct DisplayEdit<'a> {
    h: &'a EditString,
    sigma: &'a Alphabet,
}

impl fmt::Display for DisplayEdit<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.h.ops {
            write!(
                f,
                "({}/{})",
                self.sigma.render_label(op.input),
                self.sigma.render_label(op.output)
            )?;
        }
        Ok(())
    }
}

fn distance_table(u: &[Symbol], v: &[Symbol]) -> Vec<Vec<usize>> {
    let mut table = vec![vec![0; v.len() + 1]; u.len() + 1];
    for (i, row) in table.iter_mut().enumerate() {
        row[0] = i;
    }
    for (j, cell) in table[0].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=u.len() {
        for j in 1..=v.len() {
            let diag = table[i - 1][j - 1] + usize::from(u[i - 1] != v[j - 1]);
            table[i][j] = diag.min(table[i - 1][j] + 1).min(table[i][j - 1] + 1);
        }
    }
    table
}

/// Unit-cost Levenshtein distance.
pub fn edit_distance_words(u: &[Symbol], v: &[Symbol]) -> usize {
    // Two-row variant of the table above.
    let mut prev: Vec<usize> = (0..=v.len()).collect();
    let mut cur = vec![0; v.len() + 1];
    for (i, &a) in u.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &b) in v.iter().enumerate() {
            let diag = prev[j] + usize::from(a != b);
            cur[j + 1] = diag.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[v.len()]
}

/// An edit string realizing `edit_distance_words(u, v)`. The traceback
/// prefers match/substitution, then deletion, then insertion.
pub fn optimal_edit_string(u: &[Symbol], v: &[Symbol]) -> EditString {
    let table = distance_table(u, v);
    let (mut i, mut j) = (u.len(), v.len());
    let mut ops = Vec::with_capacity(i.max(j));
    while i > 0 || j > 0 {
        let here = table[i][j];
        if i > 0 && j > 0 && here == table[i - 1][j - 1] + usize::from(u[i - 1] != v[j - 1]) {
            ops.push(EditOp::substitute(u[i - 1], v[j - 1]));
            i -= 1;
            j -= 1;
        } else if i > 0 && here == table[i - 1][j] + 1 {
            ops.push(EditOp::delete(u[i - 1]));
            i -= 1;
        } else {
            ops.push(EditOp::insert(v[j - 1]));
            j -= 1;
        }
    }
    ops.reverse();
    EditString { ops }
}
