//! The coordinate Hopf algebra `H = S(V)` of the composition group.
//!
//! `V` is spanned by the coordinate functions `X_c` (coefficient of the word
//! `c`); a [`CoordMonomial`] is a product of them. The reduced coproduct
//! `δ̃(x) = Δ(x) − 1⊗x` is computed on `V` by recursion on the first letter:
//!
//! * `δ̃(X_∅) = X_∅ ⊗ 1`
//! * `δ̃(X_{x1 c}) = (θ1 ⊗ Id) δ̃(X_c)`
//! * `δ̃(X_{x0 c}) = (θ0 ⊗ Id) δ̃(X_c) + (θ1 ⊗ m)(δ̃ ⊗ Id) Δ_⧢(X_c)`
//!
//! where `θi(X_c) = X_{xi c}` and `Δ_⧢` is the unshuffle coproduct. The
//! pairing convention is `Δ(X_c)(f, g) = X_c(f ∘ g)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fliess::NCSeries;
use crate::linalg::columns_of;
use crate::lincomb::{JsonBasis, LinComb};
use crate::scalar::Rational;
use crate::text::{parse_lincomb, Cursor};
use crate::words::{parse_word_at, words_of_degree, BinaryWord, Letter};

/// A product `X_{c1} ... X_{cn}` of coordinate functions; the empty product
/// is the unit of `H`. Factors are kept sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct CoordMonomial(Vec<BinaryWord>);

impl CoordMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn x(c: BinaryWord) -> Self {
        Self(vec![c])
    }

    pub fn from_factors(mut factors: Vec<BinaryWord>) -> Self {
        factors.sort();
        Self(factors)
    }

    pub fn factors(&self) -> &[BinaryWord] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(BinaryWord::degree).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Self::from_factors(v)
    }
}

impl fmt::Display for CoordMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            write!(f, "X_{}", self.0[i])?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            first = false;
            i = j;
        }
        Ok(())
    }
}

impl JsonBasis for CoordMonomial {
    fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|w| Value::String(w.to_string()))
                .collect(),
        )
    }
}

fn parse_monomial_at(cur: &mut Cursor<'_>) -> Result<CoordMonomial> {
    if cur.eat(b'1') {
        return Ok(CoordMonomial::one());
    }
    let mut factors = Vec::new();
    loop {
        cur.expect(b'X')?;
        cur.expect(b'_')?;
        let w = parse_word_at(cur)?;
        let mut power = 1;
        if cur.eat(b'^') {
            power = cur.positive_integer()?;
        }
        for _ in 0..power {
            factors.push(w.clone());
        }
        let save = cur.pos();
        cur.skip_ws();
        if cur.eat(b'*') {
            cur.skip_ws();
            if cur.peek() == Some(b'X') {
                continue;
            }
        }
        cur.reset(save);
        break;
    }
    Ok(CoordMonomial::from_factors(factors))
}

impl FromStr for CoordMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s.trim());
        let m = parse_monomial_at(&mut cur)?;
        cur.finish()?;
        Ok(m)
    }
}

/// Parses combinations such as `2*X_1*X_e^2 - 1/3*X_01 + 1`.
pub fn parse_monomial_lincomb(s: &str) -> Result<LinComb<CoordMonomial>> {
    parse_lincomb(s, true, parse_monomial_at)
}

/// Prints a two-slot tensor as `lhs (x) rhs` terms.
pub fn format_tensor<A, B>(x: &LinComb<(A, B)>) -> String
where
    A: Ord + Clone + fmt::Display,
    B: Ord + Clone + fmt::Display,
{
    x.format_terms(|(a, b)| format!("{a} (x) {b}"))
}

/// `X_c` as a monomial, for tensors whose slots are restricted to `V`.
fn v(c: &BinaryWord) -> CoordMonomial {
    CoordMonomial::x(c.clone())
}

/// The unshuffle coproduct `Δ_⧢(X_c) = Σ_I X_{c|I} ⊗ X_{c|I^c}` over all
/// subsets `I` of letter positions.
pub fn delta_shuffle(c: &BinaryWord) -> LinComb<(BinaryWord, BinaryWord)> {
    let n = c.len();
    assert!(n < 64, "word too long for subset enumeration");
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut out = LinComb::zero();
    for mask in 0..=full {
        out.add_term(
            (c.restrict(mask), c.restrict(!mask & full)),
            Rational::one(),
        );
    }
    out
}

type ReducedCoproduct = LinComb<(BinaryWord, CoordMonomial)>;

fn reduced_cache() -> &'static Mutex<HashMap<BinaryWord, Arc<ReducedCoproduct>>> {
    static CACHE: OnceLock<Mutex<HashMap<BinaryWord, Arc<ReducedCoproduct>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `δ̃(X_c) ∈ V ⊗ H`.
pub fn reduced_coproduct(c: &BinaryWord) -> Arc<ReducedCoproduct> {
    if let Some(hit) = reduced_cache().lock().expect("cache poisoned").get(c) {
        return Arc::clone(hit);
    }
    let out = match c.first() {
        None => LinComb::basis((BinaryWord::empty(), CoordMonomial::one())),
        Some(Letter::X1) => {
            reduced_coproduct(&c.tail()).map_basis(|(a, b)| (a.prepend(Letter::X1), b.clone()))
        }
        Some(Letter::X0) => {
            let rest = c.tail();
            let mut out =
                reduced_coproduct(&rest).map_basis(|(a, b)| (a.prepend(Letter::X0), b.clone()));
            for ((left, right), k) in delta_shuffle(&rest) {
                let right = v(&right);
                for ((a, b), coeff) in reduced_coproduct(&left).iter() {
                    out.add_term((a.prepend(Letter::X1), b.mul(&right)), coeff * &k);
                }
            }
            out
        }
    };
    let out = Arc::new(out);
    reduced_cache()
        .lock()
        .expect("cache poisoned")
        .insert(c.clone(), Arc::clone(&out));
    out
}

/// `Δ(X_c) = δ̃(X_c) + 1 ⊗ X_c`.
pub fn coproduct(c: &BinaryWord) -> LinComb<(CoordMonomial, CoordMonomial)> {
    let mut out = reduced_coproduct(c).map_basis(|(a, b)| (v(a), b.clone()));
    out.add_term((CoordMonomial::one(), v(c)), Rational::one());
    out
}

/// Multiplication in `H ⊗ H`.
pub fn tensor_mul(
    x: &LinComb<(CoordMonomial, CoordMonomial)>,
    y: &LinComb<(CoordMonomial, CoordMonomial)>,
) -> LinComb<(CoordMonomial, CoordMonomial)> {
    x.bilinear(y, |(a, b), (c, d)| LinComb::basis((a.mul(c), b.mul(d))))
}

/// `Δ` extended multiplicatively to a monomial.
pub fn coproduct_monomial(m: &CoordMonomial) -> LinComb<(CoordMonomial, CoordMonomial)> {
    m.factors().iter().fold(
        LinComb::basis((CoordMonomial::one(), CoordMonomial::one())),
        |acc, c| tensor_mul(&acc, &coproduct(c)),
    )
}

/// `Δ` extended linearly.
pub fn coproduct_lc(x: &LinComb<CoordMonomial>) -> LinComb<(CoordMonomial, CoordMonomial)> {
    x.apply(coproduct_monomial)
}

/// The counit: `ε(1) = 1`, `ε(X_c) = 0`.
pub fn counit(m: &CoordMonomial) -> Rational {
    if m.is_one() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Value of a monomial on a series: the product of the coefficients.
pub fn eval_monomial(m: &CoordMonomial, f: &NCSeries) -> Result<Rational> {
    m.factors()
        .iter()
        .try_fold(Rational::one(), |acc, c| Ok(acc * f.coeff(c)?))
}

/// Value of an element of `H ⊗ H` on a pair of series.
pub fn eval_tensor(
    x: &LinComb<(CoordMonomial, CoordMonomial)>,
    f: &NCSeries,
    g: &NCSeries,
) -> Result<Rational> {
    x.iter().try_fold(Rational::zero(), |acc, ((a, b), c)| {
        Ok(acc + c * eval_monomial(a, f)? * eval_monomial(b, g)?)
    })
}

/// The prelie coproduct `δ(X_c) ∈ V ⊗ V`:
/// `δ(X_∅) = 0`, `δ θ0 = (θ0 ⊗ Id) δ + (θ1 ⊗ Id) Δ_⧢`, `δ θ1 = (θ1 ⊗ Id) δ`.
pub fn prelie_coproduct(c: &BinaryWord) -> LinComb<(BinaryWord, BinaryWord)> {
    match c.first() {
        None => LinComb::zero(),
        Some(Letter::X1) => {
            prelie_coproduct(&c.tail()).map_basis(|(a, b)| (a.prepend(Letter::X1), b.clone()))
        }
        Some(Letter::X0) => {
            let rest = c.tail();
            let mut out =
                prelie_coproduct(&rest).map_basis(|(a, b)| (a.prepend(Letter::X0), b.clone()));
            out += delta_shuffle(&rest).map_basis(|(a, b)| (a.prepend(Letter::X1), b.clone()));
            out
        }
    }
}

/// `δ` extended linearly to `V`.
pub fn prelie_coproduct_lc(x: &LinComb<BinaryWord>) -> LinComb<(BinaryWord, BinaryWord)> {
    x.apply(prelie_coproduct)
}

/// A basis of `ker δ ∩ V_k`, by exact elimination on the matrix of `δ`.
pub fn kernel_prelie_coproduct(k: usize) -> Result<Vec<LinComb<BinaryWord>>> {
    let words = words_of_degree(k)?;
    let images: Vec<_> = words.iter().map(prelie_coproduct).collect();
    let (_, matrix) = columns_of(&images);
    let matrix = if matrix.rows() == 0 {
        crate::linalg::Matrix::zeros(0, words.len())
    } else {
        matrix
    };
    Ok(matrix
        .nullspace()
        .into_iter()
        .map(|vec| words.iter().cloned().zip(vec).collect())
        .collect())
}

/// All monomials of degree `k` (a basis of `H_k`).
pub fn monomials_of_degree(k: usize) -> Vec<CoordMonomial> {
    let pool: Vec<BinaryWord> = (1..=k)
        .flat_map(|d| words_of_degree(d).unwrap_or_default())
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn go(
        pool: &[BinaryWord],
        start: usize,
        left: usize,
        stack: &mut Vec<BinaryWord>,
        out: &mut Vec<CoordMonomial>,
    ) {
        if left == 0 {
            out.push(CoordMonomial::from_factors(stack.clone()));
            return;
        }
        for i in start..pool.len() {
            let d = pool[i].degree();
            if d <= left {
                stack.push(pool[i].clone());
                go(pool, i, left - d, stack, out);
                stack.pop();
            }
        }
    }
    go(&pool, 0, k, &mut stack, &mut out);
    out.sort();
    out
}

/// `(Δ ⊗ Id)Δ(X_c) − (Id ⊗ Δ)Δ(X_c)`; zero when `Δ` is coassociative on `X_c`.
pub fn coassociativity_residual(
    c: &BinaryWord,
) -> LinComb<(CoordMonomial, CoordMonomial, CoordMonomial)> {
    let delta = coproduct(c);
    let mut out = LinComb::zero();
    for ((a, b), k) in &delta {
        for ((a1, a2), k1) in &coproduct_monomial(a) {
            out.add_term((a1.clone(), a2.clone(), b.clone()), k * k1);
        }
        for ((b1, b2), k2) in &coproduct_monomial(b) {
            out.add_term((a.clone(), b1.clone(), b2.clone()), -(k * k2));
        }
    }
    out
}

/// `A − (23)·A` with `A = (δ ⊗ Id)δ(X_c) − (Id ⊗ δ)δ(X_c)`; zero when the
/// right prelie coalgebra axiom holds on `X_c`.
pub fn right_prelie_coalgebra_residual(
    c: &BinaryWord,
) -> LinComb<(BinaryWord, BinaryWord, BinaryWord)> {
    let mut a = LinComb::zero();
    for ((x, y), k) in &prelie_coproduct(c) {
        for ((x1, x2), k1) in &prelie_coproduct(x) {
            a.add_term((x1.clone(), x2.clone(), y.clone()), k * k1);
        }
        for ((y1, y2), k2) in &prelie_coproduct(y) {
            a.add_term((x.clone(), y1.clone(), y2.clone()), -(k * k2));
        }
    }
    let swapped = a.map_basis(|(x, y, z)| (x.clone(), z.clone(), y.clone()));
    a - swapped
}

/// True when every term of `Δ(X_c)` is bihomogeneous with degrees adding up
/// to `deg(c)`.
pub fn coproduct_is_graded(c: &BinaryWord) -> bool {
    let n = c.degree();
    coproduct(c)
        .iter()
        .all(|((a, b), _)| a.degree() + b.degree() == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fliess::{compose, Truncation};
    use crate::scalar::rat;
    use crate::series::{series_fh, series_fibonacci_fv};

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn m(s: &str) -> CoordMonomial {
        s.parse().unwrap()
    }

    fn tensor(pairs: &[(&str, &str, i64)]) -> LinComb<(CoordMonomial, CoordMonomial)> {
        pairs
            .iter()
            .map(|(a, b, c)| ((m(a), m(b)), rat(*c)))
            .collect()
    }

    #[test]
    fn unshuffle_examples() {
        let e = BinaryWord::empty();
        assert_eq!(delta_shuffle(&e), LinComb::basis((e.clone(), e.clone())));
        let out = delta_shuffle(&w("1"));
        assert_eq!(
            out,
            [((w("1"), e.clone()), rat(1)), ((e.clone(), w("1")), rat(1))]
                .into_iter()
                .collect()
        );
        let out = delta_shuffle(&w("01"));
        let expected: LinComb<_> = [
            ((w("01"), e.clone()), rat(1)),
            ((w("0"), w("1")), rat(1)),
            ((w("1"), w("0")), rat(1)),
            ((e.clone(), w("01")), rat(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(out, expected);
        assert_eq!(delta_shuffle(&w("11")).coeff(&(w("1"), w("1"))), rat(2));
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(
            coproduct(&w("0")),
            tensor(&[("X_0", "1", 1), ("1", "X_0", 1), ("X_1", "X_e", 1)])
        );
        assert_eq!(
            coproduct(&w("00")),
            tensor(&[
                ("X_00", "1", 1),
                ("1", "X_00", 1),
                ("X_01", "X_e", 1),
                ("X_10", "X_e", 1),
                ("X_11", "X_e^2", 1),
                ("X_1", "X_0", 1),
            ])
        );
        assert_eq!(
            coproduct(&w("01")),
            tensor(&[
                ("X_01", "1", 1),
                ("1", "X_01", 1),
                ("X_11", "X_e", 1),
                ("X_1", "X_1", 1)
            ])
        );
        assert_eq!(
            coproduct(&w("10")),
            tensor(&[("X_10", "1", 1), ("1", "X_10", 1), ("X_11", "X_e", 1)])
        );
        for n in 0..=5 {
            let c = BinaryWord::x1_pow(n);
            let expected = tensor(&[(&format!("X_{c}"), "1", 1), ("1", &format!("X_{c}"), 1)]);
            if n == 0 {
                assert_eq!(coproduct(&c), expected);
            } else {
                assert_eq!(coproduct(&c), expected);
                assert_eq!(
                    *reduced_coproduct(&c),
                    LinComb::basis((c.clone(), CoordMonomial::one()))
                );
            }
        }
    }

    #[test]
    fn monomial_coproducts() {
        assert_eq!(
            coproduct_monomial(&CoordMonomial::one()),
            tensor(&[("1", "1", 1)])
        );
        let square = coproduct_monomial(&m("X_e^2"));
        assert_eq!(
            square,
            tensor(&[("X_e^2", "1", 1), ("X_e", "X_e", 2), ("1", "X_e^2", 1)])
        );
        let prod = coproduct_monomial(&m("X_1*X_e"));
        assert_eq!(
            prod,
            tensor_mul(&coproduct(&w("1")), &coproduct(&BinaryWord::empty()))
        );
        assert_eq!(prod.len(), 4);
    }

    #[test]
    fn evaluation() {
        let f = NCSeries::parse("3*e + 01", Truncation::Exact).unwrap();
        assert_eq!(eval_monomial(&m("X_01"), &f).unwrap(), rat(1));
        assert_eq!(eval_monomial(&CoordMonomial::one(), &f).unwrap(), rat(1));
        assert_eq!(eval_monomial(&m("X_e^2"), &f).unwrap(), rat(9));
        let t = f.truncate(1);
        assert!(eval_monomial(&m("X_01"), &t).is_err());
    }

    #[test]
    fn duality_on_a_fixed_pair() {
        let f = NCSeries::parse("2*e - 1 + 1/2*01 + 10", Truncation::Exact).unwrap();
        let g = NCSeries::parse("e + 3*0 - 11", Truncation::Exact).unwrap();
        let fg = compose(&f, &g);
        for len in 0..=4 {
            for c in crate::words::words_of_length(len) {
                let lhs = eval_tensor(&coproduct(&c), &f, &g).unwrap();
                assert_eq!(lhs, fg.coeff(&c).unwrap(), "word {c}");
            }
        }
    }

    #[test]
    fn prelie_coproduct_examples() {
        let e = BinaryWord::empty();
        assert!(prelie_coproduct(&e).is_zero());
        assert_eq!(
            prelie_coproduct(&w("0")),
            LinComb::basis((w("1"), e.clone()))
        );
        let expected: LinComb<_> = [
            ((w("01"), e.clone()), rat(1)),
            ((w("10"), e.clone()), rat(1)),
            ((w("1"), w("0")), rat(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(prelie_coproduct(&w("00")), expected);
        let expected: LinComb<_> = [((w("11"), e.clone()), rat(1)), ((w("1"), w("1")), rat(1))]
            .into_iter()
            .collect();
        assert_eq!(prelie_coproduct(&w("01")), expected);
        assert_eq!(
            prelie_coproduct(&w("10")),
            LinComb::basis((w("11"), e.clone()))
        );
    }

    #[test]
    fn prelie_coproduct_is_projected_reduced_coproduct() {
        for len in 0..=5 {
            for c in crate::words::words_of_length(len) {
                let projected: LinComb<_> = reduced_coproduct(&c)
                    .iter()
                    .filter(|((_, b), _)| b.factors().len() == 1)
                    .map(|((a, b), k)| ((a.clone(), b.factors()[0].clone()), k.clone()))
                    .collect();
                assert_eq!(projected, prelie_coproduct(&c), "word {c}");
            }
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(
            kernel_prelie_coproduct(1).unwrap(),
            vec![LinComb::basis(BinaryWord::empty())]
        );
        assert_eq!(
            kernel_prelie_coproduct(3).unwrap(),
            vec![LinComb::basis(w("11"))]
        );
        assert_eq!(
            kernel_prelie_coproduct(4).unwrap(),
            vec![LinComb::basis(w("111"))]
        );
        assert!(kernel_prelie_coproduct(0).is_err());
    }

    #[test]
    fn structural_identities_small() {
        for len in 0..=4 {
            for c in crate::words::words_of_length(len) {
                assert!(
                    coassociativity_residual(&c).is_zero(),
                    "coassociativity at {c}"
                );
                assert!(
                    right_prelie_coalgebra_residual(&c).is_zero(),
                    "prelie coalgebra at {c}"
                );
                assert!(coproduct_is_graded(&c));
            }
        }
    }

    #[test]
    fn monomial_counts_match_series() {
        let fh = series_fh(8);
        let fv = series_fibonacci_fv(8);
        for k in 1..=8 {
            assert_eq!(rat(monomials_of_degree(k).len() as i64), *fh.coeff(k));
            assert_eq!(rat(words_of_degree(k).unwrap().len() as i64), *fv.coeff(k));
        }
    }

    #[test]
    fn monomial_text() {
        assert_eq!(m("X_e*X_1*X_e").to_string(), "X_e^2*X_1");
        assert_eq!(m("1").to_string(), "1");
        let x = parse_monomial_lincomb("2*X_1*X_e - 1/2*1 + X_01^3").unwrap();
        assert_eq!(parse_monomial_lincomb(&x.to_string()).unwrap(), x);
        assert!(parse_monomial_lincomb("0").unwrap().is_zero());
        assert!("X_2".parse::<CoordMonomial>().is_err());
        let t = coproduct(&w("0"));
        assert_eq!(format_tensor(&t), "1 (x) X_0 + X_0 (x) 1 + X_1 (x) X_e");
    }
}
