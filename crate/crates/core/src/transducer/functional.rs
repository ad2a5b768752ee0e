//! Deciding whether a transducer realizes a partial function.
//!
//! Square construction: pairs of states `(p, q)` of the trimmed transducer
//! move together on a common input symbol, or one at a time on an empty
//! input. Each square state records the delay between the two outputs, i.e.
//! the suffix by which one branch is ahead of the other. The transducer is
//! functional iff every square state that is both accessible and
//! co-accessible has a single delay, and every such final pair has delay
//! zero. Runs in time quadratic in the size of the transducer.

use std::collections::HashMap;
use std::time::Instant;

use crate::alphabet::{Label, Symbol};
use crate::error::{Error, Result};

use super::Transducer;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
struct Delay {
    /// Whether the first branch's output is ahead. False when balanced.
    first_leads: bool,
    ahead: Vec<Symbol>,
}

impl Delay {
    /// Appends one output symbol per branch and cancels the common prefix.
    /// `None` when the two outputs have diverged.
    fn advance(&self, first: Label, second: Label) -> Option<Delay> {
        let (mut f, mut s) = if self.first_leads {
            (self.ahead.clone(), Vec::new())
        } else {
            (Vec::new(), self.ahead.clone())
        };
        f.extend(first);
        s.extend(second);
        let common = f.iter().zip(&s).take_while(|(x, y)| x == y).count();
        if common < f.len() && common < s.len() {
            return None;
        }
        Some(if f.len() > common {
            Delay {
                first_leads: true,
                ahead: f.split_off(common),
            }
        } else {
            Delay {
                first_leads: false,
                ahead: s.split_off(common),
            }
        })
    }

    fn is_zero(&self) -> bool {
        self.ahead.is_empty()
    }
}

pub fn is_functional(t: &Transducer) -> bool {
    check_functional(t, None).expect("no deadline was set")
}

/// [`is_functional`] with a cooperative deadline.
pub fn check_functional(t: &Transducer, deadline: Option<Instant>) -> Result<bool> {
    let t = t.trim();
    let n = t.num_states();
    let max_delay = n * n;

    let mut index: HashMap<(usize, usize), u32> = HashMap::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut delays: Vec<Delay> = Vec::new();
    let mut bad: Vec<bool> = Vec::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();

    let start = (t.start(), t.start());
    index.insert(start, 0);
    pairs.push(start);
    delays.push(Delay::default());
    bad.push(false);

    let mut head = 0;
    while head < pairs.len() {
        if head % 4096 == 0 {
            if let Some(d) = deadline {
                if Instant::now() >= d {
                    return Err(Error::Timeout);
                }
            }
        }
        let (p, q) = pairs[head];
        let mut moves: Vec<((usize, usize), Label, Label)> = Vec::new();
        for e1 in t.out(p) {
            match e1.input {
                Some(_) => {
                    for e2 in t.out(q).iter().filter(|e2| e2.input == e1.input) {
                        moves.push(((e1.target, e2.target), e1.output, e2.output));
                    }
                }
                None => moves.push(((e1.target, q), e1.output, None)),
            }
        }
        for e2 in t.out(q).iter().filter(|e2| e2.input.is_none()) {
            moves.push(((p, e2.target), None, e2.output));
        }
        for (target, o1, o2) in moves {
            let next = if bad[head] {
                None
            } else {
                delays[head]
                    .advance(o1, o2)
                    .filter(|d| d.ahead.len() <= max_delay)
            };
            let id = match index.get(&target) {
                Some(&id) => {
                    let id = id as usize;
                    if next.as_ref() != Some(&delays[id]) {
                        bad[id] = true;
                    }
                    id
                }
                None => {
                    let id = pairs.len();
                    index.insert(target, id as u32);
                    pairs.push(target);
                    bad.push(next.is_none());
                    delays.push(next.unwrap_or_default());
                    id
                }
            };
            edges.push((head as u32, id as u32));
        }
        head += 1;
    }

    // Co-accessibility in the square, from pairs of final states.
    let m = pairs.len();
    let mut rev_start = vec![0u32; m + 1];
    for &(_, dst) in &edges {
        rev_start[dst as usize + 1] += 1;
    }
    for i in 0..m {
        rev_start[i + 1] += rev_start[i];
    }
    let mut fill = rev_start.clone();
    let mut rev = vec![0u32; edges.len()];
    for &(src, dst) in &edges {
        rev[fill[dst as usize] as usize] = src;
        fill[dst as usize] += 1;
    }
    let mut useful = vec![false; m];
    let mut stack: Vec<usize> = Vec::new();
    for (id, &(p, q)) in pairs.iter().enumerate() {
        if t.is_final(p) && t.is_final(q) {
            useful[id] = true;
            stack.push(id);
        }
    }
    while let Some(id) = stack.pop() {
        for &src in &rev[rev_start[id] as usize..rev_start[id + 1] as usize] {
            if !useful[src as usize] {
                useful[src as usize] = true;
                stack.push(src as usize);
            }
        }
    }

    for id in 0..m {
        if !useful[id] {
            continue;
        }
        if bad[id] {
            return Ok(false);
        }
        let (p, q) = pairs[id];
        if t.is_final(p) && t.is_final(q) && !delays[id].is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
