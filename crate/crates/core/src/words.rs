//! Binary words over `{x0, x1}`, the shuffle product and the degree gradation.
//!
//! Text form: `e` is the empty word, otherwise a string of `0`/`1`
//! (`011` = x0 x1 x1). Words are ordered by length, then lexicographically
//! with x0 < x1.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lincomb::{JsonBasis, LinComb};
use crate::scalar::Rational;
use crate::text::{parse_lincomb, Cursor};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    X0,
    X1,
}

impl Letter {
    fn digit(self) -> char {
        match self {
            Letter::X0 => '0',
            Letter::X1 => '1',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BinaryWord(Vec<Letter>);

/// Length and degree `|c| + 1 + #x0(c)` of a word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WordDegree {
    pub length: usize,
    pub degree: usize,
}

impl BinaryWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn x0() -> Self {
        Self(vec![Letter::X0])
    }

    pub fn x1() -> Self {
        Self(vec![Letter::X1])
    }

    /// `x1^n`.
    pub fn x1_pow(n: usize) -> Self {
        Self(vec![Letter::X1; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    /// The word without its first letter.
    pub fn tail(&self) -> BinaryWord {
        Self(self.0.get(1..).unwrap_or_default().to_vec())
    }

    pub fn prepend(&self, letter: Letter) -> BinaryWord {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Self(v)
    }

    pub fn count_x0(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::X0).count()
    }

    pub fn degree(&self) -> usize {
        self.0.len() + 1 + self.count_x0()
    }

    pub fn word_degree(&self) -> WordDegree {
        WordDegree {
            length: self.len(),
            degree: self.degree(),
        }
    }

    /// The subword on the positions whose bit is set in `mask`.
    pub fn restrict(&self, mask: u64) -> BinaryWord {
        Self(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &l)| l)
                .collect(),
        )
    }

    pub fn is_x1_power(&self) -> bool {
        self.0.iter().all(|&l| l == Letter::X1)
    }
}

impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            write!(f, "{}", l.digit())?;
        }
        Ok(())
    }
}

impl JsonBasis for BinaryWord {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

pub(crate) fn parse_word_at(cur: &mut Cursor<'_>) -> Result<BinaryWord> {
    if cur.eat(b'e') {
        return Ok(BinaryWord::empty());
    }
    let start = cur.pos();
    let digits = cur.take_while(|c| c == b'0' || c == b'1');
    if digits.is_empty() {
        return Err(Error::parse(
            start,
            "expected a word ('e' or a string of 0/1)",
        ));
    }
    Ok(BinaryWord(
        digits
            .bytes()
            .map(|b| if b == b'0' { Letter::X0 } else { Letter::X1 })
            .collect(),
    ))
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s.trim());
        let w = parse_word_at(&mut cur)?;
        cur.finish()?;
        Ok(w)
    }
}

/// Parses a linear combination of words such as `1*1 + 2*01 - 1/2*e`.
pub fn parse_word_lincomb(s: &str) -> Result<LinComb<BinaryWord>> {
    parse_lincomb(s, false, parse_word_at)
}

/// Text form of a word combination that reparses to the same value
/// (the zero combination is `0*e`, since `0` alone is the word x0).
pub fn format_word_lincomb(x: &LinComb<BinaryWord>) -> String {
    if x.is_zero() {
        "0*e".to_string()
    } else {
        x.to_string()
    }
}

/// All interleavings of two sequences with multiplicity, computed over the
/// shuffle lattice from the back: `S(i, j) = u_i S(i+1, j) + v_j S(i, j+1)`.
pub fn shuffle_sequences<T: Ord + Clone>(u: &[T], v: &[T]) -> BTreeMap<Vec<T>, BigInt> {
    let (n, m) = (u.len(), v.len());
    // row[j] holds S(i, j) for the current i; rows are reversed sequences so
    // prepending is a push.
    let mut next: Vec<BTreeMap<Vec<T>, BigInt>> = (0..=m)
        .map(|j| {
            let mut s = v[j..].to_vec();
            s.reverse();
            BTreeMap::from([(s, BigInt::from(1))])
        })
        .collect();
    for i in (0..n).rev() {
        let mut row: Vec<BTreeMap<Vec<T>, BigInt>> = vec![BTreeMap::new(); m + 1];
        let mut s = u[i..].to_vec();
        s.reverse();
        row[m].insert(s, BigInt::from(1));
        for j in (0..m).rev() {
            let mut cell: BTreeMap<Vec<T>, BigInt> = BTreeMap::new();
            for (w, c) in &next[j] {
                let mut w = w.clone();
                w.push(u[i].clone());
                *cell.entry(w).or_default() += c;
            }
            for (w, c) in &row[j + 1] {
                let mut w = w.clone();
                w.push(v[j].clone());
                *cell.entry(w).or_default() += c;
            }
            row[j] = cell;
        }
        next = row;
    }
    next.swap_remove(0)
        .into_iter()
        .map(|(mut w, c)| {
            w.reverse();
            (w, c)
        })
        .collect()
}

/// `u ⧢ v`.
pub fn shuffle(u: &BinaryWord, v: &BinaryWord) -> LinComb<BinaryWord> {
    shuffle_sequences(&u.0, &v.0)
        .into_iter()
        .map(|(w, c)| (BinaryWord(w), Rational::from_integer(c)))
        .collect()
}

/// Bilinear shuffle of word combinations.
pub fn shuffle_lc(a: &LinComb<BinaryWord>, b: &LinComb<BinaryWord>) -> LinComb<BinaryWord> {
    a.bilinear(b, shuffle)
}

/// Left concatenation by a letter, extended linearly.
pub fn prepend_lc(letter: Letter, x: &LinComb<BinaryWord>) -> LinComb<BinaryWord> {
    x.map_basis(|w| w.prepend(letter))
}

pub fn words_of_length(n: usize) -> Vec<BinaryWord> {
    let mut out: Vec<BinaryWord> = (0..1u64 << n)
        .map(|bits| {
            BinaryWord(
                (0..n)
                    .map(|i| {
                        if bits >> (n - 1 - i) & 1 == 1 {
                            Letter::X1
                        } else {
                            Letter::X0
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    out.sort();
    out
}

/// All words of degree exactly `k`, in canonical order.
pub fn words_of_degree(k: usize) -> Result<Vec<BinaryWord>> {
    if k < 1 {
        return Err(Error::Domain("word degrees start at 1".into()));
    }
    // degree = n + 1 + #x0 with #x0 <= n, so the length lies in [(k-1)/2, k-1].
    let mut out = Vec::new();
    for n in (k - 1).div_ceil(2)..k {
        out.extend(words_of_length(n).into_iter().filter(|w| w.degree() == k));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn shuffle_of_letter_with_three_letters() {
        // a ⧢ bcd with a = x0 and bcd = x1 x1 x0: the four positions of a.
        let out = shuffle(&w("0"), &w("110"));
        let expected: LinComb<BinaryWord> = ["0110", "1010", "1100", "1100"]
            .iter()
            .map(|s| (w(s), rat(1)))
            .collect();
        assert_eq!(out, expected);
        assert_eq!(out.mass(), rat(4));
    }

    #[test]
    fn shuffle_with_distinct_symbols() {
        // the displayed identities with distinct letters, using integer letters
        let s = shuffle_sequences(&[1, 2, 3], &[4]);
        let keys: Vec<Vec<i32>> = s.keys().cloned().collect();
        assert_eq!(
            keys,
            vec![
                vec![1, 2, 3, 4],
                vec![1, 2, 4, 3],
                vec![1, 4, 2, 3],
                vec![4, 1, 2, 3]
            ]
        );
        let s = shuffle_sequences(&[1, 2], &[3, 4]);
        assert_eq!(s.len(), 6);
        assert!(s.values().all(|c| c == &BigInt::from(1)));
        let s = shuffle_sequences(&[1], &[2, 3, 4]);
        let keys: Vec<Vec<i32>> = s.keys().cloned().collect();
        assert_eq!(
            keys,
            vec![
                vec![1, 2, 3, 4],
                vec![2, 1, 3, 4],
                vec![2, 3, 1, 4],
                vec![2, 3, 4, 1]
            ]
        );
    }

    #[test]
    fn shuffle_unit_and_square() {
        assert_eq!(
            shuffle(&BinaryWord::empty(), &w("0110")),
            LinComb::basis(w("0110"))
        );
        assert_eq!(shuffle(&w("1"), &w("1")), LinComb::term(w("11"), rat(2)));
    }

    #[test]
    fn degrees() {
        assert_eq!(
            BinaryWord::empty().word_degree(),
            WordDegree {
                length: 0,
                degree: 1
            }
        );
        assert_eq!(
            w("0").word_degree(),
            WordDegree {
                length: 1,
                degree: 3
            }
        );
        assert_eq!(
            w("101").word_degree(),
            WordDegree {
                length: 3,
                degree: 5
            }
        );
    }

    #[test]
    fn words_by_degree() {
        assert_eq!(words_of_degree(1).unwrap(), vec![BinaryWord::empty()]);
        assert_eq!(words_of_degree(3).unwrap(), vec![w("0"), w("11")]);
        assert_eq!(words_of_degree(6).unwrap().len(), 8);
        assert!(words_of_degree(0).is_err());
        let fib: Vec<usize> = (1..=12)
            .map(|k| words_of_degree(k).unwrap().len())
            .collect();
        assert_eq!(fib, vec![1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]);
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![w("1"), w("00"), BinaryWord::empty(), w("0"), w("01")];
        v.sort();
        let s: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(s, ["e", "0", "1", "00", "01"]);
    }

    #[test]
    fn text_forms() {
        assert_eq!(w("01").letters(), &[Letter::X0, Letter::X1]);
        assert!("012".parse::<BinaryWord>().is_err());
        assert!("".parse::<BinaryWord>().is_err());
        let x = parse_word_lincomb("1*1 + 2*01").unwrap();
        assert_eq!(x.coeff(&w("1")), rat(1));
        assert_eq!(x.coeff(&w("01")), rat(2));
        let y = parse_word_lincomb("-1/2*e + 0 - 11").unwrap();
        assert_eq!(y.to_string(), "-1/2*e + 0 - 11");
        assert_eq!(parse_word_lincomb(&y.to_string()).unwrap(), y);
        assert!(parse_word_lincomb("0*e").unwrap().is_zero());
        assert_eq!(format_word_lincomb(&LinComb::zero()), "0*e");
        assert!(parse_word_lincomb("1 +").is_err());
    }

    fn arb_word(max: usize) -> impl Strategy<Value = BinaryWord> {
        proptest::collection::vec(prop_oneof![Just(Letter::X0), Just(Letter::X1)], 0..=max)
            .prop_map(BinaryWord::new)
    }

    proptest! {
        #[test]
        fn shuffle_commutative_associative(u in arb_word(3), v in arb_word(3), x in arb_word(3)) {
            prop_assert_eq!(shuffle(&u, &v), shuffle(&v, &u));
            let left = shuffle_lc(&shuffle(&u, &v), &LinComb::basis(x.clone()));
            let right = shuffle_lc(&LinComb::basis(u.clone()), &shuffle(&v, &x));
            prop_assert_eq!(left, right);
        }

        #[test]
        fn shuffle_mass_and_degree(u in arb_word(6), v in arb_word(6)) {
            let s = shuffle(&u, &v);
            let mass = crate::scalar::binomial((u.len() + v.len()) as i64, u.len() as i64);
            prop_assert_eq!(s.mass(), Rational::from_integer(mass));
            for (t, _) in &s {
                prop_assert_eq!(t.degree(), u.degree() + v.degree() - 1);
            }
        }

        #[test]
        fn word_text_round_trip(u in arb_word(8)) {
            prop_assert_eq!(u.to_string().parse::<BinaryWord>().unwrap(), u);
        }
    }
}
