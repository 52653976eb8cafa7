//! Dense truncated power series in one or two commuting variables.
//!
//! Only used for the generating-function side of the dimension and census
//! checks, where orders stay small.

use num_traits::{One, Zero};

use crate::scalar::{rat, Rational};

/// `Σ_{k=0}^{order} c_k X^k`; coefficients beyond `order` are unknown.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries1 {
    coeffs: Vec<Rational>,
}

impl PowerSeries1 {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Builds from explicit coefficients `c_0..c_order`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least its constant term"
        );
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `X^k`. Panics when `k` exceeds the truncation order.
    pub fn coeff(&self, k: usize) -> &Rational {
        assert!(
            k <= self.order(),
            "coefficient {k} beyond truncation order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplicative inverse; `None` when the constant term vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let a0 = self.coeffs[0].clone();
        if a0.is_zero() {
            return None;
        }
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = a0.recip();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &inv.coeffs[n - k];
            }
            inv.coeffs[n] = -acc / &a0;
        }
        Some(inv)
    }

    /// `∏_{k≥1} (1 - X^k)^{-exponents[k]}` truncated at `order`
    /// (`exponents[0]` is ignored). Uses the logarithmic-derivative
    /// recurrence `n f_n = Σ_j c_j f_{n-j}` with `c_j = Σ_{k | j} k a_k`,
    /// so integrality of the result is a real check rather than a given.
    pub fn euler_product(exponents: &[Rational], order: usize) -> Self {
        let a = |k: usize| exponents.get(k).cloned().unwrap_or_else(Rational::zero);
        let c: Vec<Rational> = (0..=order)
            .map(|j| {
                if j == 0 {
                    return Rational::zero();
                }
                (1..=j)
                    .filter(|k| j % k == 0)
                    .fold(Rational::zero(), |acc, k| acc + rat(k as i64) * a(k))
            })
            .collect();
        let mut out = Self::one(order);
        for n in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=n {
                acc += &c[j] * &out.coeffs[n - j];
            }
            out.coeffs[n] = acc / rat(n as i64);
        }
        out
    }
}

/// `Σ c_{i,j} X^i Y^j` for `i <= order_x`, `j <= order_y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries2 {
    coeffs: Vec<Vec<Rational>>,
}

impl PowerSeries2 {
    pub fn zero(order_x: usize, order_y: usize) -> Self {
        Self {
            coeffs: vec![vec![Rational::zero(); order_y + 1]; order_x + 1],
        }
    }

    pub fn order_x(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn order_y(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        assert!(
            i <= self.order_x() && j <= self.order_y(),
            "coefficient ({i},{j}) beyond truncation"
        );
        &self.coeffs[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.coeffs[i][j] = value;
    }

    pub fn mul(&self, other: &Self) -> Self {
        let ox = self.order_x().min(other.order_x());
        let oy = self.order_y().min(other.order_y());
        let mut out = Self::zero(ox, oy);
        for i in 0..=ox {
            for j in 0..=oy {
                let a = &self.coeffs[i][j];
                if a.is_zero() {
                    continue;
                }
                for p in 0..=ox - i {
                    for q in 0..=oy - j {
                        out.coeffs[i + p][j + q] += a * &other.coeffs[p][q];
                    }
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> Option<Self> {
        let a0 = self.coeffs[0][0].clone();
        if a0.is_zero() {
            return None;
        }
        let (ox, oy) = (self.order_x(), self.order_y());
        let mut inv = Self::zero(ox, oy);
        for i in 0..=ox {
            for j in 0..=oy {
                if i == 0 && j == 0 {
                    inv.coeffs[0][0] = a0.recip();
                    continue;
                }
                let mut acc = Rational::zero();
                for p in 0..=i {
                    for q in 0..=j {
                        if p == 0 && q == 0 {
                            continue;
                        }
                        acc += &self.coeffs[p][q] * &inv.coeffs[i - p][j - q];
                    }
                }
                inv.coeffs[i][j] = -acc / &a0;
            }
        }
        Some(inv)
    }
}

/// Generating function of the degree gradation of the coordinate space:
/// `X / (1 - X - X^2)`, coefficients `c_0..c_order`.
pub fn series_fibonacci_fv(order: usize) -> PowerSeries1 {
    let mut denom = PowerSeries1::one(order);
    if order >= 1 {
        denom.coeffs[1] = rat(-1);
    }
    if order >= 2 {
        denom.coeffs[2] = rat(-1);
    }
    let mut x = PowerSeries1::zero(order);
    if order >= 1 {
        x.coeffs[1] = rat(1);
    }
    x.mul(&denom.inverse().expect("unit constant term"))
}

/// Hilbert series of the symmetric algebra on the graded coordinate space:
/// `∏_k (1 - X^k)^{-p_k}` with `p_k` from [`series_fibonacci_fv`].
pub fn series_fh(order: usize) -> PowerSeries1 {
    let fv = series_fibonacci_fv(order);
    PowerSeries1::euler_product(fv.coeffs(), order)
}

/// Bigraded series `X / (1 - XY - X^2 Y)` (X tracks degree, Y tracks length).
pub fn series_bigraded_v(order_x: usize, order_y: usize) -> PowerSeries2 {
    let mut denom = PowerSeries2::zero(order_x, order_y);
    denom.set(0, 0, rat(1));
    if order_y >= 1 {
        if order_x >= 1 {
            denom.set(1, 1, rat(-1));
        }
        if order_x >= 2 {
            denom.set(2, 1, rat(-1));
        }
    }
    let mut x = PowerSeries2::zero(order_x, order_y);
    if order_x >= 1 {
        x.set(1, 0, rat(1));
    }
    x.mul(&denom.inverse().expect("unit constant term"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::binomial;
    use num_bigint::BigInt;

    fn ints(s: &PowerSeries1) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c.to_integer()).unwrap())
            .collect()
    }

    #[test]
    fn fibonacci_dimensions() {
        assert_eq!(
            ints(&series_fibonacci_fv(10)),
            vec![0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
        );
        assert_eq!(ints(&series_fibonacci_fv(1)), vec![0, 1]);
    }

    #[test]
    fn symmetric_algebra_dimensions() {
        assert_eq!(
            ints(&series_fh(10)),
            vec![1, 1, 2, 4, 8, 15, 30, 56, 108, 203, 384]
        );
        assert_eq!(ints(&series_fh(0)), vec![1]);
        assert_eq!(ints(&series_fh(2)), vec![1, 1, 2]);
    }

    #[test]
    fn bigraded_coefficients() {
        let g = series_bigraded_v(12, 8);
        assert_eq!(g.coeff(3, 1), &rat(1));
        assert_eq!(g.coeff(1, 0), &rat(1));
        assert_eq!(g.coeff(2, 2), &rat(0));
        for k in 0..=12i64 {
            for n in 0..=8i64 {
                let expected = binomial(n, k - n - 1);
                assert_eq!(
                    g.coeff(k as usize, n as usize),
                    &Rational::from_integer(expected),
                    "X^{k} Y^{n}"
                );
            }
        }
        // Summing over degree recovers all 2^n words of length n (degree ≤ 2n+1 ≤ 17).
        let g = series_bigraded_v(17, 8);
        for n in 0..=8 {
            let total = (0..=17).fold(Rational::zero(), |acc, k| acc + g.coeff(k, n));
            assert_eq!(total, Rational::from_integer(BigInt::from(1u64 << n)));
        }
    }

    #[test]
    fn euler_product_of_constant_one_is_partitions() {
        let ones = vec![rat(1); 11];
        let p = PowerSeries1::euler_product(&ones, 10);
        assert_eq!(ints(&p), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn inverse_round_trip() {
        let s = PowerSeries1::from_coeffs(vec![rat(2), rat(3), rat(-1), rat(5)]);
        assert_eq!(s.mul(&s.inverse().unwrap()), PowerSeries1::one(3));
        assert!(PowerSeries1::zero(3).inverse().is_none());
    }
}
