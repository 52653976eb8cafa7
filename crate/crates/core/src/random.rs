//! Seeded random instances for property checks. Everything draws from a
//! [`ChaCha8Rng`], so a seed fixes every instance on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::admissible::{admissible_words, PosWord};
use crate::fliess::NCSeries;
use crate::lincomb::LinComb;
use crate::ptree::{Census, PartitionedTree};
use crate::rtree::{rt_enumerate, RootedTree};
use crate::scalar::{ratio, Rational};
use crate::words::{BinaryWord, Letter};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero coefficient `p/q` with `|p| <= 3`, `q <= 3`.
pub fn coefficient(rng: &mut Rng8) -> Rational {
    let p = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    ratio(p, rng.gen_range(1..=3))
}

pub fn word(rng: &mut Rng8, max_len: usize) -> BinaryWord {
    let n = rng.gen_range(0..=max_len);
    BinaryWord::new(
        (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Letter::X1
                } else {
                    Letter::X0
                }
            })
            .collect(),
    )
}

/// Up to `terms` words of length at most `max_len`, with random coefficients.
pub fn word_lincomb(rng: &mut Rng8, max_len: usize, terms: usize) -> LinComb<BinaryWord> {
    let mut out = LinComb::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let w = word(rng, max_len);
        out.add_term(w, coefficient(rng));
    }
    out
}

/// A random polynomial series.
pub fn polynomial(rng: &mut Rng8, max_len: usize, terms: usize) -> NCSeries {
    NCSeries::exact(word_lincomb(rng, max_len, terms))
}

/// Uniform draws, per vertex count, among isomorphism classes with at most
/// `max_vertices` vertices.
pub struct PTreeSampler {
    pools: Vec<Vec<PartitionedTree>>,
}

impl PTreeSampler {
    pub fn new(max_vertices: usize, decorations: u32) -> Self {
        let mut census = Census::new(decorations.max(1)).expect("d >= 1");
        let pools = (1..=max_vertices.max(1))
            .map(|n| census.trees(n).expect("n >= 1").to_vec())
            .collect();
        Self { pools }
    }

    pub fn sample(&self, rng: &mut Rng8) -> PartitionedTree {
        let pool = self.pools.choose(rng).expect("nonempty");
        pool.choose(rng).expect("nonempty").clone()
    }
}

pub struct RTreeSampler {
    pools: Vec<Vec<RootedTree>>,
}

impl RTreeSampler {
    pub fn new(max_vertices: usize, max_decoration: u32) -> Self {
        let pools = (1..=max_vertices.max(1))
            .map(|n| rt_enumerate(n, max_decoration.max(1)))
            .collect();
        Self { pools }
    }

    pub fn sample(&self, rng: &mut Rng8) -> RootedTree {
        let pool = self.pools.choose(rng).expect("nonempty");
        pool.choose(rng).expect("nonempty").clone()
    }

    /// Between zero and `max_len` trees.
    pub fn forest(&self, rng: &mut Rng8, max_len: usize) -> Vec<RootedTree> {
        (0..rng.gen_range(0..=max_len))
            .map(|_| self.sample(rng))
            .collect()
    }
}

/// A nonempty word over `1..=max_letter`.
pub fn posword(rng: &mut Rng8, max_len: usize, max_letter: u32) -> PosWord {
    let n = rng.gen_range(1..=max_len.max(1));
    PosWord::new(
        (0..n)
            .map(|_| rng.gen_range(1..=max_letter.max(1)))
            .collect(),
    )
    .expect("positive letters")
}

/// An admissible word of weight between 1 and `max_weight`.
pub fn admissible(rng: &mut Rng8, max_weight: usize) -> PosWord {
    let n = rng.gen_range(1..=max_weight.max(1));
    admissible_words(n)
        .choose(rng)
        .expect("every weight has admissible words")
        .clone()
}
