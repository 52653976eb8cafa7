//! Words over positive integers: the dendriform (Zinbiel) half-shuffles and
//! the basis `m_w` of the word algebra indexed by admissible words.
//!
//! A word `a_1..a_k` is admissible when `a_1, .., a_(k−1) >= 2`. For such a
//! word `m_w = x1^(a_1−1) • (x1^(a_2−1) • (.. • x1^(a_k−1)))`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::lincomb::{JsonBasis, LinComb};
use crate::prelie_words::prelie;
use crate::scalar::{binomial, Rational};
use crate::text::{parse_lincomb, Cursor};
use crate::words::{shuffle_sequences, words_of_degree, BinaryWord};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PosWord(Vec<u32>);

impl PosWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Domain("letters are positive".into()));
        }
        Ok(Self(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn is_admissible(&self) -> bool {
        match self.0.split_last() {
            Some((_, init)) => init.iter().all(|&a| a >= 2),
            None => false,
        }
    }

    fn concat(&self, other: &PosWord) -> PosWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PosWord(v)
    }

    fn bump_last(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        if let Some(last) = v.last_mut() {
            *last += 1;
        }
        v
    }
}

impl fmt::Display for PosWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl JsonBasis for PosWord {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

pub(crate) fn parse_posword_at(cur: &mut Cursor<'_>) -> Result<PosWord> {
    let mut letters = vec![cur.positive_integer()?];
    while cur.eat(b',') {
        letters.push(cur.positive_integer()?);
    }
    Ok(PosWord(letters))
}

impl FromStr for PosWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s.trim());
        let w = parse_posword_at(&mut cur)?;
        cur.finish()?;
        Ok(w)
    }
}

/// Parses combinations such as `3,1 - 1/2*2,2`.
pub fn parse_posword_lincomb(s: &str) -> Result<LinComb<PosWord>> {
    parse_lincomb(s, true, parse_posword_at)
}

fn nonempty(u: &PosWord, v: &PosWord) -> Result<()> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::Domain("dendriform operands must be nonempty".into()));
    }
    Ok(())
}

/// `(prefix ⧢ other) · last` over integer sequences.
fn shuffle_then_append(prefix: &[u32], other: &[u32], last: u32) -> LinComb<PosWord> {
    shuffle_sequences(prefix, other)
        .into_iter()
        .map(|(mut w, m)| {
            w.push(last);
            (PosWord(w), Rational::from_integer(m))
        })
        .collect()
}

/// `u ≺ v = (a_1..a_(k−1) ⧢ v⁺) · a_k`, with `v⁺` the word `v` whose last
/// letter is increased by one.
pub fn dendriform_left(u: &PosWord, v: &PosWord) -> Result<LinComb<PosWord>> {
    nonempty(u, v)?;
    let (last, init) = u.0.split_last().expect("nonempty");
    Ok(shuffle_then_append(init, &v.bump_last(), *last))
}

/// `u ≻ v = (u⁺ ⧢ b_1..b_(l−1)) · b_l`.
pub fn dendriform_right(u: &PosWord, v: &PosWord) -> Result<LinComb<PosWord>> {
    nonempty(u, v)?;
    let (last, init) = v.0.split_last().expect("nonempty");
    Ok(shuffle_then_append(&u.bump_last(), init, *last))
}

/// `u ⋆ v = u ≺ v + u ≻ v`.
pub fn dendriform_star(u: &PosWord, v: &PosWord) -> Result<LinComb<PosWord>> {
    Ok(dendriform_left(u, v)? + dendriform_right(u, v)?)
}

fn lift(
    op: fn(&PosWord, &PosWord) -> Result<LinComb<PosWord>>,
) -> impl Fn(&LinComb<PosWord>, &LinComb<PosWord>) -> Result<LinComb<PosWord>> {
    move |x, y| {
        let mut out = LinComb::zero();
        for (u, a) in x {
            for (v, b) in y {
                out += op(u, v)?.scale(&(a * b));
            }
        }
        Ok(out)
    }
}

pub fn dendriform_left_lc(x: &LinComb<PosWord>, y: &LinComb<PosWord>) -> Result<LinComb<PosWord>> {
    lift(dendriform_left)(x, y)
}

pub fn dendriform_right_lc(x: &LinComb<PosWord>, y: &LinComb<PosWord>) -> Result<LinComb<PosWord>> {
    lift(dendriform_right)(x, y)
}

pub fn dendriform_star_lc(x: &LinComb<PosWord>, y: &LinComb<PosWord>) -> Result<LinComb<PosWord>> {
    lift(dendriform_star)(x, y)
}

/// Residuals of the three dendriform axioms:
/// `(x≺y)≺z − x≺(y⋆z)`, `(x≻y)≺z − x≻(y≺z)`, `(x⋆y)≻z − x≻(y≻z)`.
pub fn dendriform_residuals(
    x: &PosWord,
    y: &PosWord,
    z: &PosWord,
) -> Result<[LinComb<PosWord>; 3]> {
    let b = |w: &PosWord| LinComb::basis(w.clone());
    let (x, y, z) = (b(x), b(y), b(z));
    let left = dendriform_left_lc(&dendriform_left_lc(&x, &y)?, &z)?
        - dendriform_left_lc(&x, &dendriform_star_lc(&y, &z)?)?;
    let middle = dendriform_left_lc(&dendriform_right_lc(&x, &y)?, &z)?
        - dendriform_right_lc(&x, &dendriform_left_lc(&y, &z)?)?;
    let right = dendriform_right_lc(&dendriform_star_lc(&x, &y)?, &z)?
        - dendriform_right_lc(&x, &dendriform_right_lc(&y, &z)?)?;
    Ok([left, middle, right])
}

/// `m_w` in the word algebra (defined for every word; zero when a non-final
/// letter equals 1).
pub fn m_eval(w: &PosWord) -> LinComb<BinaryWord> {
    let Some((last, init)) = w.0.split_last() else {
        return LinComb::zero();
    };
    let power = |a: u32| LinComb::basis(BinaryWord::x1_pow(a as usize - 1));
    init.iter()
        .rev()
        .fold(power(*last), |acc, &a| prelie(&power(a), &acc))
}

pub fn m_eval_lc(x: &LinComb<PosWord>) -> LinComb<BinaryWord> {
    x.apply(m_eval)
}

/// `m_u • m_v` expressed in the `m` basis:
/// `Σ_{i<k} m_(a_1..a_(i−1) (a_i − 1) (a_(i+1)..a_k ⋆ v)) + m_(uv)`,
/// keeping admissible words only.
pub fn m_prelie(u: &PosWord, v: &PosWord) -> Result<LinComb<PosWord>> {
    if !u.is_admissible() || !v.is_admissible() {
        return Err(Error::Domain(
            "m-basis product needs admissible words".into(),
        ));
    }
    let a = &u.0;
    let mut out = LinComb::basis(u.concat(v));
    for i in 0..a.len() - 1 {
        let mut prefix = a[..i].to_vec();
        prefix.push(a[i] - 1);
        let prefix = PosWord(prefix);
        let tail = PosWord(a[i + 1..].to_vec());
        for (w, c) in dendriform_star(&tail, v)? {
            out.add_term(prefix.concat(&w), c);
        }
    }
    Ok(out.filter(PosWord::is_admissible))
}

pub fn m_prelie_lc(x: &LinComb<PosWord>, y: &LinComb<PosWord>) -> Result<LinComb<PosWord>> {
    lift(m_prelie)(x, y)
}

/// Admissible words of weight `n`, in canonical order.
pub fn admissible_words(n: usize) -> Vec<PosWord> {
    let mut out = Vec::new();
    fn go(left: usize, stack: &mut Vec<u32>, out: &mut Vec<PosWord>) {
        if left == 0 {
            return;
        }
        stack.push(left as u32);
        out.push(PosWord(stack.clone()));
        stack.pop();
        for a in 2..left {
            stack.push(a as u32);
            go(left - a, stack, out);
            stack.pop();
        }
    }
    go(n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Admissible words of weight `n` with `k` letters.
pub fn admissible_words_bigraded(n: usize, k: usize) -> Vec<PosWord> {
    admissible_words(n)
        .into_iter()
        .filter(|w| w.len() == k)
        .collect()
}

/// `binom(n − k, k − 1)`: the number of admissible words of weight `n` and length `k`.
pub fn adm_dimension(n: usize, k: usize) -> Result<u64> {
    if n < 1 || k < 1 {
        return Err(Error::Domain("need n >= 1 and k >= 1".into()));
    }
    let b = binomial(n as i64 - k as i64, k as i64 - 1);
    Ok(b.try_into().expect("fits in u64"))
}

struct ChangeOfBasis {
    rows: Vec<BinaryWord>,
    cols: Vec<PosWord>,
    inverse: Matrix,
}

fn change_of_basis(n: usize) -> Result<Arc<ChangeOfBasis>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ChangeOfBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&n) {
        return Ok(hit.clone());
    }
    let rows = words_of_degree(n)?;
    let cols = admissible_words(n);
    if rows.len() != cols.len() {
        return Err(Error::Fault(format!(
            "{} words but {} admissible words in degree {n}",
            rows.len(),
            cols.len()
        )));
    }
    let images: Vec<LinComb<BinaryWord>> = cols.iter().map(m_eval).collect();
    let matrix = Matrix::from_rows(
        rows.iter()
            .map(|r| images.iter().map(|img| img.coeff(r)).collect())
            .collect(),
    );
    let inverse = matrix
        .inverse()
        .ok_or_else(|| Error::Fault(format!("m-basis is singular in degree {n}")))?;
    let entry = Arc::new(ChangeOfBasis {
        rows,
        cols,
        inverse,
    });
    cache.lock().expect("cache lock").insert(n, entry.clone());
    Ok(entry)
}

/// Coordinates of a degree-`n` homogeneous element in the `m` basis.
pub fn to_m_basis(x: &LinComb<BinaryWord>, n: usize) -> Result<LinComb<PosWord>> {
    if let Some((w, _)) = x.iter().find(|(w, _)| w.degree() != n) {
        return Err(Error::Domain(format!(
            "word {w} has degree {} not {n}",
            w.degree()
        )));
    }
    let basis = change_of_basis(n)?;
    let rhs: Vec<Rational> = basis.rows.iter().map(|r| x.coeff(r)).collect();
    let coords = basis.inverse.mul_vec(&rhs);
    Ok(basis.cols.iter().cloned().zip(coords).collect())
}
