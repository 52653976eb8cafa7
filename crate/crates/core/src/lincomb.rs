//! Finite formal linear combinations over a totally ordered basis.
//!
//! Every algebra element in this crate is a [`LinComb`]: words, coordinate
//! monomials, tensors (tuples of basis elements), trees. Zero coefficients
//! are never stored, so structural equality is equality of elements.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::scalar::{format_rational, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `b` with coefficient one.
    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, coeff);
        out
    }

    /// Adds `coeff * b` in place, pruning the entry if it cancels.
    pub fn add_term(&mut self, b: B, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect(),
        }
    }

    /// Keeps only the terms whose basis element satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    /// Relabels basis elements; images that collide are summed.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Linear extension of a map defined on basis elements.
    pub fn apply<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (image, x) in f(b).terms {
                out.add_term(image, x * c);
            }
        }
        out
    }

    /// Bilinear extension of a map defined on pairs of basis elements.
    pub fn bilinear<C: Ord + Clone, D: Ord + Clone>(
        &self,
        other: &LinComb<C>,
        mut f: impl FnMut(&B, &C) -> LinComb<D>,
    ) -> LinComb<D> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let weight = ca * cb;
                for (image, x) in f(a, b).terms {
                    out.add_term(image, x * &weight);
                }
            }
        }
        out
    }

    /// `self ⊗ other` as a combination of pairs.
    pub fn tensor<C: Ord + Clone>(&self, other: &LinComb<C>) -> LinComb<(B, C)> {
        self.bilinear(other, |a, b| LinComb::basis((a.clone(), b.clone())))
    }

    pub fn to_json(&self) -> Value
    where
        B: JsonBasis,
    {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(b, c)| json!({ "coeff": format_rational(c), "basis": b.to_json() }))
            .collect();
        json!({ "terms": terms })
    }
}

/// Basis types that know their JSON encoding.
pub trait JsonBasis {
    fn to_json(&self) -> Value;
}

impl<A: JsonBasis, B: JsonBasis> JsonBasis for (A, B) {
    fn to_json(&self) -> Value {
        json!([self.0.to_json(), self.1.to_json()])
    }
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: Ord> IntoIterator for LinComb<B> {
    type Item = (B, Rational);
    type IntoIter = btree_map::IntoIter<B, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> AddAssign for LinComb<B> {
    fn add_assign(&mut self, rhs: LinComb<B>) {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
    }
}

impl<B: Ord + Clone> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), -c.clone());
        }
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self += rhs;
        self
    }
}

impl<B: Ord + Clone> Add<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self -= &rhs;
        self
    }
}

impl<B: Ord + Clone> Sub<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        Self {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        -self.clone()
    }
}

impl<B: Ord + Clone> Mul<&Rational> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: &Rational) -> LinComb<B> {
        self.scale(rhs)
    }
}

impl<B: Ord + Clone> Mul<Rational> for LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: Rational) -> LinComb<B> {
        self.scale(&rhs)
    }
}

/// Prints `c*b` terms joined by ` + ` / ` - `, unit coefficients omitted;
/// the zero combination prints as `0`.
impl<B: Ord + Clone + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_terms(|b| b.to_string()))
    }
}

impl<B: Ord + Clone> LinComb<B> {
    /// Text form with a caller-supplied basis printer, same layout as `Display`.
    pub fn format_terms(&self, mut basis: impl FnMut(&B) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !magnitude.is_one() {
                out.push_str(&format_rational(&magnitude));
                out.push('*');
            }
            out.push_str(&basis(b));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use proptest::prelude::*;

    fn lc(pairs: &[(u8, i64)]) -> LinComb<u8> {
        pairs.iter().map(|&(b, c)| (b, rat(c))).collect()
    }

    #[test]
    fn cancellation_prunes() {
        let sum = lc(&[(1, 1)]) + lc(&[(1, -1)]);
        assert!(sum.is_zero());
        assert_eq!(sum.len(), 0);
    }

    #[test]
    fn disjoint_supports() {
        let sum = lc(&[(1, 1)]) + lc(&[(2, 2)]);
        assert_eq!(sum.coeff(&1), rat(1));
        assert_eq!(sum.coeff(&2), rat(2));
        assert_eq!(sum.len(), 2);
    }

    #[test]
    fn rational_coefficients_add() {
        let a = LinComb::term(7u8, ratio(1, 2));
        let b = LinComb::term(7u8, ratio(1, 3));
        assert_eq!((a + b).coeff(&7), ratio(5, 6));
    }

    #[test]
    fn display() {
        let x: LinComb<u8> = [(1, rat(1)), (2, rat(-2)), (3, ratio(1, 2))]
            .into_iter()
            .collect();
        assert_eq!(x.to_string(), "1 - 2*2 + 1/2*3");
        assert_eq!(LinComb::<u8>::zero().to_string(), "0");
    }

    fn arb_lc() -> impl Strategy<Value = LinComb<u8>> {
        proptest::collection::vec((0u8..6, -5i64..6, 1i64..4), 0..6)
            .prop_map(|v| v.into_iter().map(|(b, n, d)| (b, ratio(n, d))).collect())
    }

    proptest! {
        #[test]
        fn additive_group(a in arb_lc(), b in arb_lc(), c in arb_lc()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a + &LinComb::zero(), a.clone());
            prop_assert!((&a + &(-&a)).is_zero());
        }

        #[test]
        fn scaling_distributes(a in arb_lc(), b in arb_lc(), n in -4i64..5, m in -4i64..5) {
            let (p, q) = (rat(n), rat(m));
            prop_assert_eq!((&a + &b).scale(&p), a.scale(&p) + b.scale(&p));
            prop_assert_eq!(a.scale(&(&p + &q)), a.scale(&p) + a.scale(&q));
            prop_assert_eq!(a.scale(&p).scale(&q), a.scale(&(&p * &q)));
        }
    }
}
