//! Rooted trees decorated by positive integers, with grafting as prelie
//! product and a binomial shuffle that makes them Com-Prelie.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::ComPrelieBasis;
use crate::error::{Error, Result};
use crate::lincomb::{JsonBasis, LinComb};
use crate::scalar::{binomial, rat_from_int};
use crate::text::{parse_lincomb, Cursor};

/// `B_n(t_1 ... t_k)`: a root decorated `n` with children `t_i` (kept sorted).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootedTree {
    decoration: u32,
    children: Vec<RootedTree>,
}

impl RootedTree {
    pub fn new(decoration: u32, mut children: Vec<RootedTree>) -> Result<Self> {
        if decoration == 0 {
            return Err(Error::Domain("decorations are positive".into()));
        }
        children.sort();
        Ok(Self {
            decoration,
            children,
        })
    }

    /// Panicking shorthand for [`RootedTree::new`].
    pub fn b(decoration: u32, children: Vec<RootedTree>) -> Self {
        Self::new(decoration, children).expect("positive decoration")
    }

    pub fn vertex(decoration: u32) -> Self {
        Self::b(decoration, Vec::new())
    }

    /// `l(a_1 ... a_k) = B_{a_1}(B_{a_2}(... B_{a_k}))`.
    pub fn ladder(decorations: &[u32]) -> Result<Self> {
        let (last, init) = decorations
            .split_last()
            .ok_or_else(|| Error::Domain("empty ladder".into()))?;
        init.iter()
            .rev()
            .try_fold(Self::new(*last, Vec::new())?, |acc, &d| {
                Self::new(d, vec![acc])
            })
    }

    pub fn decoration(&self) -> u32 {
        self.decoration
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn vertex_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(RootedTree::vertex_count)
            .sum::<usize>()
    }

    /// Sum of decorations.
    pub fn degree(&self) -> usize {
        self.decoration as usize + self.children.iter().map(RootedTree::degree).sum::<usize>()
    }

    fn graft_at(&self, target: usize, counter: &mut usize, t: &RootedTree) -> RootedTree {
        let me = *counter;
        *counter += 1;
        let mut children: Vec<RootedTree> = self
            .children
            .iter()
            .map(|c| c.graft_at(target, counter, t))
            .collect();
        if me == target {
            children.push(t.clone());
        }
        children.sort();
        RootedTree {
            decoration: self.decoration,
            children,
        }
    }

    /// `self • t`: the root of `t` attached below each vertex in turn.
    pub fn prelie(&self, t: &RootedTree) -> LinComb<RootedTree> {
        (0..self.vertex_count())
            .map(|s| (self.graft_at(s, &mut 0, t), rat_from_int(1.into())))
            .collect()
    }

    /// `B_p(S) ⧢ B_q(T) = C(p+q−k−l−2, p−k−1) B_{p+q−1}(S T)`.
    pub fn shuffle(&self, other: &RootedTree) -> LinComb<RootedTree> {
        let (p, q) = (self.decoration as i64, other.decoration as i64);
        let (k, l) = (self.children.len() as i64, other.children.len() as i64);
        let c = binomial(p + q - k - l - 2, p - k - 1);
        let mut children = self.children.clone();
        children.extend(other.children.iter().cloned());
        LinComb::term(RootedTree::b((p + q - 1) as u32, children), rat_from_int(c))
    }
}

impl ComPrelieBasis for RootedTree {
    fn prelie(a: &Self, b: &Self) -> LinComb<Self> {
        a.prelie(b)
    }

    fn shuffle(a: &Self, b: &Self) -> LinComb<Self> {
        a.shuffle(b)
    }
}

/// All trees with `n` vertices and decorations in `1..=max_decoration`.
pub fn rt_enumerate(n: usize, max_decoration: u32) -> Vec<RootedTree> {
    enumerate_by(n, &|_| 1, max_decoration)
}

/// All trees whose decorations sum to `degree`.
pub fn rt_of_degree(degree: usize) -> Vec<RootedTree> {
    enumerate_by(degree, &|d| d as usize, degree as u32)
}

/// Trees of total `size`, each vertex decorated `d` contributing `cost(d)`.
fn enumerate_by(size: usize, cost: &dyn Fn(u32) -> usize, max_decoration: u32) -> Vec<RootedTree> {
    let mut by_size: Vec<Vec<RootedTree>> = vec![Vec::new()];
    for m in 1..=size {
        let mut level = Vec::new();
        for d in 1..=max_decoration {
            let c = cost(d);
            if c > m {
                continue;
            }
            for children in forests(&by_size, m - c) {
                level.push(RootedTree::b(d, children));
            }
        }
        level.sort();
        by_size.push(level);
    }
    by_size.pop().unwrap_or_default()
}

/// Multisets of trees (from `pools[size]`) with sizes summing to `total`.
fn forests(pools: &[Vec<RootedTree>], total: usize) -> Vec<Vec<RootedTree>> {
    fn go(
        pools: &[Vec<RootedTree>],
        left: usize,
        min: (usize, usize),
        stack: &mut Vec<RootedTree>,
        out: &mut Vec<Vec<RootedTree>>,
    ) {
        if left == 0 {
            out.push(stack.clone());
            return;
        }
        for size in min.0..=left {
            let start = if size == min.0 { min.1 } else { 0 };
            for i in start..pools[size].len() {
                stack.push(pools[size][i].clone());
                go(pools, left - size, (size, i), stack, out);
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(pools, total, (1, 0), &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decoration)?;
        if !self.children.is_empty() {
            write!(f, "(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl JsonBasis for RootedTree {
    fn to_json(&self) -> Value {
        json!({ "d": self.decoration, "children": self.children.iter().map(JsonBasis::to_json).collect::<Vec<_>>() })
    }
}

pub(crate) fn parse_rtree_at(cur: &mut Cursor<'_>) -> Result<RootedTree> {
    if cur.eat(b'l') {
        cur.expect(b':')?;
        let mut decorations = vec![cur.positive_integer()?];
        while cur.eat(b',') {
            decorations.push(cur.positive_integer()?);
        }
        return RootedTree::ladder(&decorations);
    }
    let decoration = cur.positive_integer()?;
    let mut children = Vec::new();
    if cur.eat(b'(') {
        loop {
            cur.skip_ws();
            children.push(parse_rtree_at(cur)?);
            cur.skip_ws();
            if cur.eat(b')') {
                break;
            }
            cur.expect(b',')?;
        }
    }
    RootedTree::new(decoration, children)
}

impl FromStr for RootedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s.trim());
        let t = parse_rtree_at(&mut cur)?;
        cur.finish()?;
        Ok(t)
    }
}

/// Parses combinations such as `2(1) - 1/2*l:3,1`.
pub fn parse_rtree_lincomb(s: &str) -> Result<LinComb<RootedTree>> {
    parse_lincomb(s, true, parse_rtree_at)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{com_prelie_residual, prelie_residual, shuffle_residuals};
    use crate::scalar::rat;
    use crate::series::PowerSeries1;

    fn t(s: &str) -> RootedTree {
        s.parse().unwrap()
    }

    fn one(x: &RootedTree) -> LinComb<RootedTree> {
        LinComb::basis(x.clone())
    }

    #[test]
    fn grammar() {
        assert_eq!(t("2(1)"), RootedTree::b(2, vec![RootedTree::vertex(1)]));
        assert_eq!(t("l:2,1"), t("2(1)"));
        assert_eq!(t("l:3,2,1"), t("3(2(1))"));
        assert_eq!(t("1(3,2(1))").to_string(), "1(2(1),3)");
        for bad in ["", "0", "2()", "2(1", "l:", "2(1,)"] {
            assert!(bad.parse::<RootedTree>().is_err(), "{bad}");
        }
        let x = parse_rtree_lincomb("2(1) - 1/2*l:3,1").unwrap();
        assert_eq!(parse_rtree_lincomb(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn grafting_example() {
        // B_a(B_b) • B_c(B_d) with a..d = 4,3,2,1
        let lhs = t("4(3)").prelie(&t("2(1)"));
        let rhs = parse_rtree_lincomb("4(3,2(1)) + 4(3(2(1)))").unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(t("3").prelie(&t("5")), one(&t("3(5)")));
        let x = t("2(1(1),1)");
        assert_eq!(x.prelie(&t("1")).mass(), rat(x.vertex_count() as i64));
    }

    #[test]
    fn binomial_shuffle() {
        assert_eq!(t("2(1)").shuffle(&t("2(1)")), one(&t("3(1,1)")));
        assert!(t("1(2)").shuffle(&t("4")).is_zero());
        for p in 1..5u32 {
            for q in 1..5u32 {
                let expected = binomial((p + q - 2) as i64, (p - 1) as i64);
                assert_eq!(
                    RootedTree::vertex(p).shuffle(&RootedTree::vertex(q)),
                    LinComb::term(RootedTree::vertex(p + q - 1), rat_from_int(expected))
                );
            }
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(rt_enumerate(1, 3).len(), 3);
        assert_eq!(rt_enumerate(3, 1).len(), 2);
        assert_eq!(rt_enumerate(4, 1).len(), 4);
        // 8 ladders and 6 cherries
        assert_eq!(rt_enumerate(3, 2).len(), 14);
        // t_n = Σ_{d<=n} [X^(n-d)] ∏ (1 − X^k)^(−t_k)
        let mut t = vec![rat(0)];
        for n in 1..=8 {
            let prod = PowerSeries1::euler_product(&t, n - 1);
            t.push((0..n).fold(rat(0), |acc, j| acc + prod.coeff(j)));
        }
        for n in 1..=8 {
            assert_eq!(rat(rt_of_degree(n).len() as i64), t[n], "degree {n}");
        }
        assert!(rt_of_degree(6).iter().all(|x| x.degree() == 6));
    }

    #[test]
    fn prelie_and_shuffle_axioms() {
        let pool: Vec<RootedTree> = (1..=2).flat_map(|n| rt_enumerate(n, 3)).collect();
        for x in &pool {
            for y in &pool {
                for z in &pool {
                    let (x, y, z) = (one(x), one(y), one(z));
                    assert!(prelie_residual(&x, &y, &z).is_zero());
                    let (assoc, comm) = shuffle_residuals(&x, &y, &z);
                    assert!(assoc.is_zero() && comm.is_zero());
                }
            }
        }
    }

    #[test]
    fn com_prelie_fails_at_the_unit() {
        // (1 ⧢ 1) • 1 = 1(1), while both right-hand terms carry 1(1) ⧢ 1 = 0.
        let v = one(&t("1"));
        assert_eq!(com_prelie_residual(&v, &v, &v), one(&t("1(1)")));
        // away from p − k − 1 = q − l − 1 = 0 the binomial recursion closes
        assert!(com_prelie_residual(&one(&t("3")), &one(&t("2")), &one(&t("1"))).is_zero());
    }
}
