//! The prelie product on the span of binary words:
//! `∅ • d = 0`, `(x0 c) • d = x0 (c • d)`, `(x1 c) • d = x1 (c • d) + x0 (c ⧢ d)`.

use crate::algebra::{self, ComPrelieBasis};
use crate::error::Result;
use crate::linalg::span_rank;
use crate::lincomb::LinComb;
use crate::words::{prepend_lc, shuffle, words_of_degree, BinaryWord, Letter};

impl ComPrelieBasis for BinaryWord {
    fn prelie(a: &Self, b: &Self) -> LinComb<Self> {
        prelie_words(a, b)
    }

    fn shuffle(a: &Self, b: &Self) -> LinComb<Self> {
        shuffle(a, b)
    }
}

/// `c • d` on words.
pub fn prelie_words(c: &BinaryWord, d: &BinaryWord) -> LinComb<BinaryWord> {
    match c.first() {
        None => LinComb::zero(),
        Some(Letter::X0) => prepend_lc(Letter::X0, &prelie_words(&c.tail(), d)),
        Some(Letter::X1) => {
            let rest = c.tail();
            prepend_lc(Letter::X1, &prelie_words(&rest, d))
                + prepend_lc(Letter::X0, &shuffle(&rest, d))
        }
    }
}

/// Bilinear `•` on word combinations.
pub fn prelie(u: &LinComb<BinaryWord>, v: &LinComb<BinaryWord>) -> LinComb<BinaryWord> {
    algebra::prelie(u, v)
}

/// All products `u • v` of words with `deg u + deg v = n`.
pub fn products_of_degree(n: usize) -> Vec<LinComb<BinaryWord>> {
    let mut out = Vec::new();
    for i in 1..n {
        let left = words_of_degree(i).unwrap_or_default();
        let right = words_of_degree(n - i).unwrap_or_default();
        for u in &left {
            for v in &right {
                out.push(prelie_words(u, v));
            }
        }
    }
    out
}

/// Rank of the span of all products landing in degree `n`.
pub fn generator_complement_rank(n: usize) -> Result<usize> {
    words_of_degree(n)?;
    Ok(span_rank(&products_of_degree(n)))
}

/// Dimension of `span(x1^(n-1)) + (products in degree n)`.
pub fn generators_plus_products_rank(n: usize) -> Result<usize> {
    words_of_degree(n)?;
    let mut family = products_of_degree(n);
    family.push(LinComb::basis(BinaryWord::x1_pow(n - 1)));
    Ok(span_rank(&family))
}
