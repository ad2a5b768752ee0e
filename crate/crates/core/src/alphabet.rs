//! Symbols, words and alphabets.
//!
//! Symbols are dense indices into an [`Alphabet`]; the alphabet owns the
//! printable tokens. Tokens may be longer than one character.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol in its alphabet.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symbol(pub u32);

impl Symbol {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A transition label: a symbol, or `None` for the empty word.
pub type Label = Option<Symbol>;

pub type Word = Vec<Symbol>;

/// Nonempty ordered set of symbol tokens. Iteration follows insertion order.
#[derive(Clone, Debug)]
pub struct Alphabet {
    tokens: Vec<String>,
    index: HashMap<String, Symbol>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.tokens == other.tokens
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Alphabet {
            tokens: Vec::new(),
            index: HashMap::new(),
        };
        for tok in tokens {
            let tok = tok.into();
            if out.index.contains_key(&tok) {
                return Err(Error::DuplicateSymbol(tok));
            }
            out.index
                .insert(tok.clone(), Symbol(out.tokens.len() as u32));
            out.tokens.push(tok);
        }
        if out.tokens.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(out)
    }

    /// One symbol per character, e.g. `Alphabet::from_chars("ab")`.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Self::new(chars.chars().map(String::from))
    }

    /// The binary alphabet `{0, 1}` used by the benchmark families.
    pub fn binary() -> Self {
        Self::from_chars("01").expect("static alphabet")
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.tokens.len() as u32).map(Symbol)
    }

    pub fn token(&self, sym: Symbol) -> &str {
        &self.tokens[sym.index()]
    }

    pub fn symbol(&self, token: &str) -> Option<Symbol> {
        self.index.get(token).copied()
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        sym.index() < self.tokens.len()
    }

    /// Reads a word one character per symbol.
    pub fn word(&self, text: &str) -> Result<Word> {
        let mut buf = [0u8; 4];
        text.chars()
            .map(|c| {
                let tok: &str = c.encode_utf8(&mut buf);
                self.symbol(tok)
                    .ok_or_else(|| Error::UnknownSymbol(tok.to_string()))
            })
            .collect()
    }

    /// Concatenates the tokens of `word`.
    pub fn render(&self, word: &[Symbol]) -> String {
        word.iter().map(|&s| self.token(s)).collect()
    }

    /// Printable form of a label, `ε` for the empty label.
    pub fn render_label(&self, label: Label) -> &str {
        match label {
            Some(s) => self.token(s),
            None => "ε",
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.tokens.join(","))
    }
}
