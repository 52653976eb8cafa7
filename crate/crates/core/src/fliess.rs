//! Noncommutative series and the Fliess composition.
//!
//! `c õ d` is computed word by word from the left:
//! `∅ õ d = ∅`, `(x0 c) õ d = x0 (c õ d)`,
//! `(x1 c) õ d = x1 (c õ d) + x0 (d ⧢ (c õ d))`,
//! and extended linearly in `c`. The full composition is `c ∘ d = c õ d + d`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Rational;
use crate::words::{format_word_lincomb, parse_word_lincomb, shuffle, BinaryWord, Letter};

/// Whether a series is a polynomial known exactly or a series known up to a
/// word length.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Truncation {
    Exact,
    Truncated(usize),
}

impl Truncation {
    /// The coarser of two truncations.
    pub fn meet(self, other: Truncation) -> Truncation {
        match (self, other) {
            (Truncation::Exact, t) | (t, Truncation::Exact) => t,
            (Truncation::Truncated(a), Truncation::Truncated(b)) => Truncation::Truncated(a.min(b)),
        }
    }

    pub fn keeps(self, length: usize) -> bool {
        match self {
            Truncation::Exact => true,
            Truncation::Truncated(l) => length <= l,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NCSeries {
    body: LinComb<BinaryWord>,
    truncation: Truncation,
}

impl NCSeries {
    pub fn exact(body: LinComb<BinaryWord>) -> Self {
        Self {
            body,
            truncation: Truncation::Exact,
        }
    }

    /// Keeps only the words of length at most `max_len`.
    pub fn truncated(body: LinComb<BinaryWord>, max_len: usize) -> Self {
        Self {
            body: body.filter(|w| w.len() <= max_len),
            truncation: Truncation::Truncated(max_len),
        }
    }

    pub fn zero() -> Self {
        Self::exact(LinComb::zero())
    }

    pub fn parse(text: &str, truncation: Truncation) -> Result<Self> {
        let body = parse_word_lincomb(text)?;
        Ok(match truncation {
            Truncation::Exact => Self::exact(body),
            Truncation::Truncated(l) => Self::truncated(body, l),
        })
    }

    pub fn body(&self) -> &LinComb<BinaryWord> {
        &self.body
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    /// Coefficient of `w`; fails when `w` lies beyond the truncation.
    pub fn coeff(&self, w: &BinaryWord) -> Result<Rational> {
        match self.truncation {
            Truncation::Truncated(l) if w.len() > l => Err(Error::Truncation {
                truncation: l,
                needed: w.len(),
            }),
            _ => Ok(self.body.coeff(w)),
        }
    }

    /// Re-truncates at `max_len` (no-op if already coarser).
    pub fn truncate(&self, max_len: usize) -> Self {
        let t = self.truncation.meet(Truncation::Truncated(max_len));
        Self {
            body: self.body.filter(|w| t.keeps(w.len())),
            truncation: t,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let t = self.truncation.meet(other.truncation);
        Self {
            body: (&self.body + &other.body).filter(|w| t.keeps(w.len())),
            truncation: t,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            body: self.body.scale(c),
            truncation: self.truncation,
        }
    }
}

impl fmt::Display for NCSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word_lincomb(&self.body))?;
        if let Truncation::Truncated(l) = self.truncation {
            write!(f, " + O(len>{l})")?;
        }
        Ok(())
    }
}

struct Reducer<'a> {
    d: &'a LinComb<BinaryWord>,
    limit: Truncation,
    memo: HashMap<BinaryWord, LinComb<BinaryWord>>,
}

impl Reducer<'_> {
    /// `c õ d` for a single word, memoized on suffixes.
    fn word(&mut self, c: &BinaryWord) -> LinComb<BinaryWord> {
        if let Some(hit) = self.memo.get(c) {
            return hit.clone();
        }
        let out = match c.first() {
            None => LinComb::basis(BinaryWord::empty()),
            Some(letter) => {
                let rest = self.word(&c.tail());
                let mut out = rest.map_basis(|w| w.prepend(letter));
                if letter == Letter::X1 {
                    for (u, cu) in &rest {
                        for (v, cv) in self.d {
                            if !self.limit.keeps(u.len() + v.len() + 1) {
                                continue;
                            }
                            let coeff = cu * cv;
                            for (w, m) in shuffle(u, v) {
                                out.add_term(w.prepend(Letter::X0), &coeff * m);
                            }
                        }
                    }
                }
                out.filter(|w| self.limit.keeps(w.len()))
            }
        };
        self.memo.insert(c.clone(), out.clone());
        out
    }
}

/// The reduced composition `c õ d`.
pub fn reduced_compose(c: &NCSeries, d: &NCSeries) -> NCSeries {
    let limit = c.truncation.meet(d.truncation);
    let mut reducer = Reducer {
        d: &d.body,
        limit,
        memo: HashMap::new(),
    };
    let mut out = LinComb::zero();
    for (w, coeff) in &c.body {
        if !limit.keeps(w.len()) {
            continue;
        }
        out += reducer.word(w).scale(coeff);
    }
    NCSeries {
        body: out,
        truncation: limit,
    }
}

/// The composition `c ∘ d = c õ d + d`.
pub fn compose(c: &NCSeries, d: &NCSeries) -> NCSeries {
    reduced_compose(c, d).add(d)
}
