//! Decorated partitioned trees and the free Com-Prelie algebra they span.
//!
//! A partitioned tree is stored in canonical form as its root block: a sorted
//! list of [`PNode`]s. Each node carries a decoration and a sorted list of
//! child blocks, and every child block is itself a [`PartitionedTree`] (its
//! members being the roots of that block). Because blocks only ever group
//! siblings or roots, this nesting captures the isomorphism class exactly and
//! the derived order is a total order on classes.
//!
//! Vertices are numbered in preorder: a node, then the vertices of its child
//! blocks in order.
//!
//! Text form: a tree is `{node node ...}`; a node is `d` or `d({..}{..})`
//! with one `{..}` per child block. The two-vertex ladder with root 2 and
//! leaf 1 is `{2({1})}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::algebra::{og_product, shuffle_all, ComPrelieBasis};
use crate::error::{Error, Result};
use crate::lincomb::{JsonBasis, LinComb};
use crate::scalar::{as_integer, rat, ratio, Rational};
use crate::series::PowerSeries1;
use crate::text::{parse_lincomb, Cursor};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PNode {
    decoration: u32,
    blocks: Vec<PartitionedTree>,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartitionedTree {
    roots: Vec<PNode>,
}

impl PNode {
    pub fn new(decoration: u32, mut blocks: Vec<PartitionedTree>) -> Self {
        blocks.sort();
        Self { decoration, blocks }
    }

    pub fn decoration(&self) -> u32 {
        self.decoration
    }

    /// Child blocks, each seen as the partitioned tree hanging from this node.
    pub fn blocks(&self) -> &[PartitionedTree] {
        &self.blocks
    }

    pub fn vertex_count(&self) -> usize {
        1 + self
            .blocks
            .iter()
            .map(PartitionedTree::vertex_count)
            .sum::<usize>()
    }

    fn canonicalize(&mut self) {
        for b in &mut self.blocks {
            b.canonicalize();
        }
        self.blocks.sort();
    }
}

/// A multiset of partitioned trees.
pub type PTForest = Vec<PartitionedTree>;

impl PartitionedTree {
    /// Builds from a root block; fails on an empty one.
    pub fn new(roots: Vec<PNode>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidStructure(
                "a partitioned tree needs at least one root".into(),
            ));
        }
        let mut t = Self { roots };
        t.canonicalize();
        Ok(t)
    }

    pub fn vertex(decoration: u32) -> Self {
        Self {
            roots: vec![PNode::new(decoration, Vec::new())],
        }
    }

    /// `(d1 • F1) ⧢ ... ⧢ (dk • Fk)`: one root per entry, the root with
    /// decoration `di` carrying the trees of `Fi` as its child blocks.
    pub fn from_root_forests(parts: &[(u32, PTForest)]) -> Result<Self> {
        Self::new(
            parts
                .iter()
                .map(|(d, f)| PNode::new(*d, f.clone()))
                .collect(),
        )
    }

    pub fn roots(&self) -> &[PNode] {
        &self.roots
    }

    pub fn vertex_count(&self) -> usize {
        self.roots.iter().map(PNode::vertex_count).sum()
    }

    pub fn block_count(&self) -> usize {
        1 + self
            .roots
            .iter()
            .flat_map(|r| &r.blocks)
            .map(PartitionedTree::block_count)
            .sum::<usize>()
    }

    /// Decorations in preorder.
    pub fn decorations(&self) -> Vec<u32> {
        let mut out = Vec::new();
        fn walk(t: &PartitionedTree, out: &mut Vec<u32>) {
            for r in &t.roots {
                out.push(r.decoration);
                for b in &r.blocks {
                    walk(b, out);
                }
            }
        }
        walk(self, &mut out);
        out
    }

    fn canonicalize(&mut self) {
        for r in &mut self.roots {
            r.canonicalize();
        }
        self.roots.sort();
    }

    /// Canonical class of a raw partitioned forest given by parent pointers,
    /// decorations and block labels (all indexed by vertex).
    pub fn from_parts(
        parents: &[Option<usize>],
        decorations: &[u32],
        blocks: &[usize],
    ) -> Result<Self> {
        let n = parents.len();
        if n == 0 || decorations.len() != n || blocks.len() != n {
            return Err(Error::InvalidStructure(
                "parents, decorations and blocks must have one equal nonzero length".into(),
            ));
        }
        for (v, p) in parents.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(Error::InvalidVertex {
                        vertex: p,
                        count: n,
                    });
                }
            }
            let mut seen = 0;
            let mut cur = v;
            while let Some(p) = parents[cur] {
                cur = p;
                seen += 1;
                if seen > n {
                    return Err(Error::InvalidStructure(format!(
                        "vertex {v} lies on a cycle"
                    )));
                }
            }
        }
        let mut block_parent: HashMap<usize, Option<usize>> = HashMap::new();
        for v in 0..n {
            match block_parent.insert(blocks[v], parents[v]) {
                Some(q) if q != parents[v] => {
                    return Err(Error::InvalidStructure(format!(
                        "block {} mixes vertices with different parents",
                        blocks[v]
                    )));
                }
                _ => {}
            }
        }
        let root_blocks: Vec<usize> = block_parent
            .iter()
            .filter(|(_, p)| p.is_none())
            .map(|(b, _)| *b)
            .collect();
        if root_blocks.len() != 1 {
            return Err(Error::InvalidStructure(
                "all roots must lie in a single block".into(),
            ));
        }
        fn build(
            v: usize,
            parents: &[Option<usize>],
            decorations: &[u32],
            blocks: &[usize],
        ) -> PNode {
            let mut groups: Vec<(usize, Vec<PNode>)> = Vec::new();
            for c in (0..parents.len()).filter(|&c| parents[c] == Some(v)) {
                let node = build(c, parents, decorations, blocks);
                match groups.iter_mut().find(|(b, _)| *b == blocks[c]) {
                    Some((_, g)) => g.push(node),
                    None => groups.push((blocks[c], vec![node])),
                }
            }
            let mut children: Vec<PartitionedTree> = groups
                .into_iter()
                .map(|(_, mut g)| {
                    g.sort();
                    PartitionedTree { roots: g }
                })
                .collect();
            children.sort();
            PNode {
                decoration: decorations[v],
                blocks: children,
            }
        }
        let mut roots: Vec<PNode> = (0..n)
            .filter(|&v| parents[v].is_none())
            .map(|v| build(v, parents, decorations, blocks))
            .collect();
        roots.sort();
        Ok(Self { roots })
    }

    /// Parent pointers, decorations and block labels in preorder; the inverse
    /// of [`PartitionedTree::from_parts`] up to relabelling.
    pub fn to_parts(&self) -> (Vec<Option<usize>>, Vec<u32>, Vec<usize>) {
        let mut parents = Vec::new();
        let mut decorations = Vec::new();
        let mut blocks = Vec::new();
        let mut next_block = 0;
        fn walk(
            t: &PartitionedTree,
            parent: Option<usize>,
            parents: &mut Vec<Option<usize>>,
            decorations: &mut Vec<u32>,
            blocks: &mut Vec<usize>,
            next_block: &mut usize,
        ) {
            let block = *next_block;
            *next_block += 1;
            for r in &t.roots {
                let me = parents.len();
                parents.push(parent);
                decorations.push(r.decoration);
                blocks.push(block);
                for b in &r.blocks {
                    walk(b, Some(me), parents, decorations, blocks, next_block);
                }
            }
        }
        walk(
            self,
            None,
            &mut parents,
            &mut decorations,
            &mut blocks,
            &mut next_block,
        );
        (parents, decorations, blocks)
    }

    /// `t •_s t2`: all roots of `t2` become one new child block of vertex `s`.
    pub fn graft(&self, s: usize, t2: &PartitionedTree) -> Result<PartitionedTree> {
        self.graft_many(&[(s, t2)])
    }

    /// Grafts each `(s, t')` at once, with `s` numbering vertices of `self`.
    pub fn graft_many(&self, assignments: &[(usize, &PartitionedTree)]) -> Result<PartitionedTree> {
        let n = self.vertex_count();
        let mut per_vertex: Vec<Vec<&PartitionedTree>> = vec![Vec::new(); n];
        for &(s, t) in assignments {
            if s >= n {
                return Err(Error::InvalidVertex {
                    vertex: s,
                    count: n,
                });
            }
            per_vertex[s].push(t);
        }
        fn tree(
            t: &PartitionedTree,
            counter: &mut usize,
            extra: &[Vec<&PartitionedTree>],
        ) -> PartitionedTree {
            let mut roots: Vec<PNode> = t.roots.iter().map(|r| node(r, counter, extra)).collect();
            roots.sort();
            PartitionedTree { roots }
        }
        fn node(r: &PNode, counter: &mut usize, extra: &[Vec<&PartitionedTree>]) -> PNode {
            let me = *counter;
            *counter += 1;
            let mut blocks: Vec<PartitionedTree> =
                r.blocks.iter().map(|b| tree(b, counter, extra)).collect();
            blocks.extend(extra[me].iter().map(|t| (*t).clone()));
            blocks.sort();
            PNode {
                decoration: r.decoration,
                blocks,
            }
        }
        let mut counter = 0;
        Ok(tree(self, &mut counter, &per_vertex))
    }

    /// `t ⧢ t2`: the union of both forests with the two root blocks merged.
    pub fn shuffle(&self, other: &PartitionedTree) -> PartitionedTree {
        let mut roots = self.roots.clone();
        roots.extend(other.roots.iter().cloned());
        roots.sort();
        PartitionedTree { roots }
    }

    /// `t • t2 = Σ_s t •_s t2`.
    pub fn prelie(&self, other: &PartitionedTree) -> LinComb<PartitionedTree> {
        self.multigraft(std::slice::from_ref(other))
    }

    /// `t • t1...tk`: the sum over all `k`-tuples of target vertices.
    pub fn multigraft(&self, forest: &[PartitionedTree]) -> LinComb<PartitionedTree> {
        let n = self.vertex_count();
        let k = forest.len();
        let mut out = LinComb::zero();
        let mut targets = vec![0usize; k];
        loop {
            let assignments: Vec<(usize, &PartitionedTree)> =
                targets.iter().copied().zip(forest.iter()).collect();
            out.add_term(
                self.graft_many(&assignments).expect("targets in range"),
                Rational::one(),
            );
            let mut i = 0;
            while i < k {
                targets[i] += 1;
                if targets[i] < n {
                    break;
                }
                targets[i] = 0;
                i += 1;
            }
            if i == k {
                return out;
            }
        }
    }

    /// The root decomposition: one `(d_i, [t_i1, ..])` per root.
    pub fn root_decomposition(&self) -> Vec<(u32, PTForest)> {
        self.roots
            .iter()
            .map(|r| (r.decoration, r.blocks.clone()))
            .collect()
    }
}

impl ComPrelieBasis for PartitionedTree {
    fn prelie(a: &Self, b: &Self) -> LinComb<Self> {
        a.prelie(b)
    }

    fn shuffle(a: &Self, b: &Self) -> LinComb<Self> {
        LinComb::basis(a.shuffle(b))
    }
}

/// Multilinear extension of [`PartitionedTree::multigraft`].
pub fn multigraft_lc(
    t: &LinComb<PartitionedTree>,
    forest: &[LinComb<PartitionedTree>],
) -> LinComb<PartitionedTree> {
    let mut out = LinComb::zero();
    let mut chosen: Vec<PartitionedTree> = Vec::with_capacity(forest.len());
    fn go(
        t: &LinComb<PartitionedTree>,
        forest: &[LinComb<PartitionedTree>],
        coeff: Rational,
        chosen: &mut Vec<PartitionedTree>,
        out: &mut LinComb<PartitionedTree>,
    ) {
        if chosen.len() == forest.len() {
            for (base, c) in t {
                *out += base.multigraft(chosen).scale(&(c * &coeff));
            }
            return;
        }
        for (tree, c) in &forest[chosen.len()] {
            chosen.push(tree.clone());
            go(t, forest, &coeff * c, chosen, out);
            chosen.pop();
        }
    }
    go(t, forest, Rational::one(), &mut chosen, &mut out);
    out
}

impl fmt::Display for PartitionedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for PNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decoration)?;
        if !self.blocks.is_empty() {
            write!(f, "(")?;
            for b in &self.blocks {
                write!(f, "{b}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl JsonBasis for PartitionedTree {
    fn to_json(&self) -> Value {
        Value::Array(
            self.roots
                .iter()
                .map(|r| json!({ "d": r.decoration, "blocks": r.blocks.iter().map(JsonBasis::to_json).collect::<Vec<_>>() }))
                .collect(),
        )
    }
}

pub(crate) fn parse_ptree_at(cur: &mut Cursor<'_>) -> Result<PartitionedTree> {
    cur.expect(b'{')?;
    let mut roots = Vec::new();
    loop {
        cur.skip_ws();
        if cur.eat(b'}') {
            break;
        }
        if !roots.is_empty() {
            cur.eat(b',');
            cur.skip_ws();
        }
        roots.push(parse_pnode_at(cur)?);
    }
    if roots.is_empty() {
        return Err(cur.error("empty block"));
    }
    roots.sort();
    Ok(PartitionedTree { roots })
}

fn parse_pnode_at(cur: &mut Cursor<'_>) -> Result<PNode> {
    let decoration = cur.positive_integer()?;
    let mut blocks = Vec::new();
    if cur.eat(b'(') {
        loop {
            cur.skip_ws();
            if cur.eat(b')') {
                break;
            }
            blocks.push(parse_ptree_at(cur)?);
        }
        if blocks.is_empty() {
            return Err(cur.error("empty child list"));
        }
    }
    blocks.sort();
    Ok(PNode { decoration, blocks })
}

impl FromStr for PartitionedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s.trim());
        let t = parse_ptree_at(&mut cur)?;
        cur.finish()?;
        Ok(t)
    }
}

/// Parses combinations such as `2*{1} - 1/2*{2({1})}`.
pub fn parse_ptree_lincomb(s: &str) -> Result<LinComb<PartitionedTree>> {
    parse_lincomb(s, true, parse_ptree_at)
}

/// Evaluation of trees in a Com-Prelie algebra `A` once each decoration has an
/// image: every root `d` with child blocks `t_1..t_k` goes to
/// `image(d) • φ(t_1)...φ(t_k)` and the roots are multiplied with `⧢`.
pub struct FreeEval<'a, B: ComPrelieBasis> {
    images: &'a dyn Fn(u32) -> Option<LinComb<B>>,
    memo: HashMap<PartitionedTree, LinComb<B>>,
}

impl<'a, B: ComPrelieBasis> FreeEval<'a, B> {
    pub fn new(images: &'a dyn Fn(u32) -> Option<LinComb<B>>) -> Self {
        Self {
            images,
            memo: HashMap::new(),
        }
    }

    pub fn eval(&mut self, t: &PartitionedTree) -> Result<LinComb<B>> {
        if let Some(hit) = self.memo.get(t) {
            return Ok(hit.clone());
        }
        let mut factors = Vec::with_capacity(t.roots.len());
        for r in &t.roots {
            let image = (self.images)(r.decoration).ok_or(Error::MissingImage(r.decoration))?;
            let args = r
                .blocks
                .iter()
                .map(|b| self.eval(b))
                .collect::<Result<Vec<_>>>()?;
            factors.push(og_product(&image, &args));
        }
        let out = shuffle_all(&factors).expect("a tree has a root");
        self.memo.insert(t.clone(), out.clone());
        Ok(out)
    }

    pub fn eval_lc(&mut self, x: &LinComb<PartitionedTree>) -> Result<LinComb<B>> {
        let mut out = LinComb::zero();
        for (t, c) in x {
            out += self.eval(t)?.scale(c);
        }
        Ok(out)
    }
}

/// One-shot [`FreeEval`].
pub fn free_eval<B: ComPrelieBasis>(
    t: &PartitionedTree,
    images: &dyn Fn(u32) -> Option<LinComb<B>>,
) -> Result<LinComb<B>> {
    FreeEval::new(images).eval(t)
}

/// Isomorphism classes by vertex count for decorations `1..=d`, built from
/// multisets of smaller classes and memoized across sizes.
pub struct Census {
    d: u32,
    nodes: Vec<Vec<PNode>>,
    trees: Vec<Vec<PartitionedTree>>,
}

fn multisets<T: Clone>(pools: &[Vec<T>], total: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(
        pools: &[Vec<T>],
        left: usize,
        min: (usize, usize),
        stack: &mut Vec<T>,
        out: &mut Vec<Vec<T>>,
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

impl Census {
    pub fn new(d: u32) -> Result<Self> {
        if d < 1 {
            return Err(Error::Domain("need at least one decoration".into()));
        }
        Ok(Self {
            d,
            nodes: vec![Vec::new()],
            trees: vec![Vec::new()],
        })
    }

    fn extend_to(&mut self, n: usize) {
        while self.trees.len() <= n {
            let m = self.trees.len();
            let mut nodes = Vec::new();
            for forest in multisets(&self.trees, m - 1) {
                for d in 1..=self.d {
                    nodes.push(PNode::new(d, forest.clone()));
                }
            }
            nodes.sort();
            self.nodes.push(nodes);
            let mut trees: Vec<PartitionedTree> = multisets(&self.nodes, m)
                .into_iter()
                .map(|mut roots| {
                    roots.sort();
                    PartitionedTree { roots }
                })
                .collect();
            trees.sort();
            self.trees.push(trees);
        }
    }

    /// All classes with `n` vertices, in canonical order.
    pub fn trees(&mut self, n: usize) -> Result<&[PartitionedTree]> {
        if n < 1 {
            return Err(Error::Domain("trees have at least one vertex".into()));
        }
        self.extend_to(n);
        Ok(&self.trees[n])
    }

    /// Classes with `n` vertices and a single root.
    pub fn single_root(&mut self, n: usize) -> Result<&[PNode]> {
        self.trees(n)?;
        Ok(&self.nodes[n])
    }
}

/// All classes with `n` vertices decorated by `1..=d`.
pub fn pt_enumerate(n: usize, d: u32) -> Result<Vec<PartitionedTree>> {
    Ok(Census::new(d)?.trees(n)?.to_vec())
}

/// `(f_1..f_nmax, t_1..t_nmax)`: all trees and single-root trees by vertex
/// count, from `F = ∏ (1 − X^k)^(−t_k)` and `T = dX ∏ (1 − X^k)^(−f_k)`.
pub fn pt_counts_by_series(nmax: usize, d: u32) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    if nmax < 1 || d < 1 {
        return Err(Error::Domain("need nmax >= 1 and d >= 1".into()));
    }
    let mut f = vec![rat(1)];
    let mut t = vec![rat(0)];
    for n in 1..=nmax {
        let mut exps = f.clone();
        exps[0] = rat(0);
        let prod = PowerSeries1::euler_product(&exps, n - 1);
        t.push(rat(d as i64) * prod.coeff(n - 1));
        let prod = PowerSeries1::euler_product(&t, n);
        f.push(prod.coeff(n).clone());
    }
    let ints = |v: &[Rational]| -> Result<Vec<BigInt>> {
        v[1..]
            .iter()
            .map(|c| {
                as_integer(c)
                    .ok_or_else(|| Error::Fault(format!("non-integer census coefficient {c}")))
            })
            .collect()
    };
    Ok((ints(&f)?, ints(&t)?))
}

/// Closed forms of `f_1..f_5` as polynomials in the number of decorations.
pub fn census_polynomial(n: usize, d: i64) -> Option<Rational> {
    let d = rat(d);
    let p = |coeffs: &[i64]| coeffs.iter().fold(rat(0), |acc, &c| acc * &d + rat(c));
    Some(match n {
        1 => d.clone(),
        2 => &d * p(&[3, 1]) * ratio(1, 2),
        3 => &d * p(&[19, 9, 2]) * ratio(1, 6),
        4 => &d * p(&[63, 34, 13, 2]) * ratio(1, 8),
        5 => &d * p(&[644, 400, 175, 35, 6]) * ratio(1, 30),
        _ => return None,
    })
}

/// `δ(t) = (1/k) Σ_{i,j} t/t_ij ⊗ t_ij`, where `k` is the number of roots and
/// `t_ij` runs over the child blocks of root `i`.
pub fn rigidity_coproduct(t: &PartitionedTree) -> LinComb<(PartitionedTree, PartitionedTree)> {
    let k = t.roots.len() as i64;
    let weight = ratio(1, k);
    let mut out = LinComb::zero();
    for (i, r) in t.roots.iter().enumerate() {
        for j in 0..r.blocks.len() {
            let mut cut = r.clone();
            let removed = cut.blocks.remove(j);
            let mut roots = t.roots.clone();
            roots[i] = cut;
            roots.sort();
            out.add_term((PartitionedTree { roots }, removed), weight.clone());
        }
    }
    out
}

pub fn rigidity_coproduct_lc(
    x: &LinComb<PartitionedTree>,
) -> LinComb<(PartitionedTree, PartitionedTree)> {
    x.apply(rigidity_coproduct)
}

/// `(δ ⊗ Id)δ(x) − (23)·(δ ⊗ Id)δ(x)`.
pub fn rigidity_symmetry_residual(
    x: &LinComb<PartitionedTree>,
) -> LinComb<(PartitionedTree, PartitionedTree, PartitionedTree)> {
    let mut a = LinComb::zero();
    for ((u, v), c) in &rigidity_coproduct_lc(x) {
        for ((u1, u2), c1) in &rigidity_coproduct(u) {
            a.add_term((u1.clone(), u2.clone(), v.clone()), c * c1);
        }
    }
    let swapped = a.map_basis(|(p, q, r)| (p.clone(), r.clone(), q.clone()));
    a - swapped
}

/// `δ(x • y) − x ⊗ y − Σ (x1 • y) ⊗ x2 − Σ x1 ⊗ (x2 • y)`.
pub fn rigidity_derivation_residual(
    x: &LinComb<PartitionedTree>,
    y: &LinComb<PartitionedTree>,
) -> LinComb<(PartitionedTree, PartitionedTree)> {
    let prelie = |a: &LinComb<PartitionedTree>, b: &LinComb<PartitionedTree>| {
        a.bilinear(b, PartitionedTree::prelie)
    };
    let mut out = rigidity_coproduct_lc(&prelie(x, y)) - x.tensor(y);
    for ((x1, x2), c) in &rigidity_coproduct_lc(x) {
        let left = prelie(&LinComb::basis(x1.clone()), y);
        let right = prelie(&LinComb::basis(x2.clone()), y);
        out -= &left.tensor(&LinComb::basis(x2.clone())).scale(c);
        out -= &LinComb::basis(x1.clone()).tensor(&right).scale(c);
    }
    out
}

/// The kernel elements of the rigidity coproduct for undecorated trees
/// (decoration 1). `B(F1, .., Fk)` has one root per forest `Fi`.
pub mod kernel_elements {
    use super::*;

    fn b(forests: &[&[&PartitionedTree]]) -> PartitionedTree {
        let parts: Vec<(u32, PTForest)> = forests
            .iter()
            .map(|f| (1, f.iter().map(|t| (*t).clone()).collect()))
            .collect();
        PartitionedTree::from_root_forests(&parts).expect("nonempty")
    }

    fn sum(terms: &[(i64, PartitionedTree)]) -> LinComb<PartitionedTree> {
        terms.iter().map(|(c, t)| (t.clone(), rat(*c))).collect()
    }

    /// `B(t1 t2, 1) − B(t1, t2)`.
    pub fn x(t1: &PartitionedTree, t2: &PartitionedTree) -> LinComb<PartitionedTree> {
        sum(&[(1, b(&[&[t1, t2], &[]])), (-1, b(&[&[t1], &[t2]]))])
    }

    pub fn y(
        t1: &PartitionedTree,
        t2: &PartitionedTree,
        t3: &PartitionedTree,
    ) -> LinComb<PartitionedTree> {
        sum(&[
            (1, b(&[&[t1, t2, t3], &[], &[]])),
            (-1, b(&[&[t1, t2], &[t3], &[]])),
            (-1, b(&[&[t1, t3], &[t2], &[]])),
            (-1, b(&[&[t2, t3], &[t1], &[]])),
            (2, b(&[&[t1], &[t2], &[t3]])),
        ])
    }

    pub fn z(
        t1: &PartitionedTree,
        t2: &PartitionedTree,
        t3: &PartitionedTree,
        t4: &PartitionedTree,
    ) -> LinComb<PartitionedTree> {
        sum(&[
            (1, b(&[&[t1, t2, t3, t4], &[]])),
            (-1, b(&[&[t1, t2, t3], &[t4]])),
            (-1, b(&[&[t1, t2, t4], &[t3]])),
            (-1, b(&[&[t1, t3, t4], &[t2]])),
            (-1, b(&[&[t2, t3, t4], &[t1]])),
            (1, b(&[&[t1, t2], &[t3, t4]])),
            (1, b(&[&[t1, t3], &[t2, t4]])),
            (1, b(&[&[t1, t4], &[t2, t3]])),
        ])
    }

    pub fn t(
        t1: &PartitionedTree,
        t2: &PartitionedTree,
        t3: &PartitionedTree,
        t4: &PartitionedTree,
    ) -> LinComb<PartitionedTree> {
        sum(&[
            (1, b(&[&[t1, t2], &[t3, t4], &[], &[]])),
            (1, b(&[&[t1, t3], &[t2, t4], &[], &[]])),
            (1, b(&[&[t1, t4], &[t2, t3], &[], &[]])),
            (-1, b(&[&[t1, t2], &[t3], &[t4], &[]])),
            (-1, b(&[&[t1, t3], &[t2], &[t4], &[]])),
            (-1, b(&[&[t1, t4], &[t2], &[t3], &[]])),
            (-1, b(&[&[t2, t3], &[t1], &[t4], &[]])),
            (-1, b(&[&[t2, t4], &[t1], &[t3], &[]])),
            (-1, b(&[&[t3, t4], &[t1], &[t2], &[]])),
            (3, b(&[&[t1], &[t2], &[t3], &[t4]])),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{com_prelie_residual, og_product, prelie_residual, shuffle_residuals};

    fn pt(s: &str) -> PartitionedTree {
        s.parse().unwrap()
    }

    fn one(t: &PartitionedTree) -> LinComb<PartitionedTree> {
        LinComb::basis(t.clone())
    }

    #[test]
    fn text_round_trip_and_canonical_order() {
        let t = pt("{2({1})}");
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.to_string(), "{2({1})}");
        assert_eq!(pt("{1 2({1}{1 1})}"), pt("{2({1 1}{1}), 1}"));
        assert!("{}".parse::<PartitionedTree>().is_err());
        assert!("{1()}".parse::<PartitionedTree>().is_err());
        assert!("{0}".parse::<PartitionedTree>().is_err());
        let x = parse_ptree_lincomb("2*{1} - 1/2*{2({1})}").unwrap();
        assert_eq!(parse_ptree_lincomb(&x.to_string()).unwrap(), x);
        assert!(parse_ptree_lincomb("0").unwrap().is_zero());
    }

    #[test]
    fn raw_parts() {
        // root 0 with children 1, 2 in one block; same tree listed in another order
        let a =
            PartitionedTree::from_parts(&[None, Some(0), Some(0)], &[1, 2, 3], &[0, 1, 1]).unwrap();
        let b =
            PartitionedTree::from_parts(&[Some(2), Some(2), None], &[3, 2, 1], &[5, 5, 7]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, pt("{1({2 3})}"));
        let (p, d, bl) = a.to_parts();
        assert_eq!(PartitionedTree::from_parts(&p, &d, &bl).unwrap(), a);
        assert_eq!(
            PartitionedTree::from_parts(&[None], &[4], &[0]).unwrap(),
            PartitionedTree::vertex(4)
        );
        // block spanning two parents
        let err = PartitionedTree::from_parts(&[None, Some(0), Some(1)], &[1, 1, 1], &[0, 1, 1]);
        assert!(matches!(err, Err(Error::InvalidStructure(_))));
        // roots in two blocks
        let err = PartitionedTree::from_parts(&[None, None], &[1, 1], &[0, 1]);
        assert!(matches!(err, Err(Error::InvalidStructure(_))));
        let err = PartitionedTree::from_parts(&[Some(1), Some(0)], &[1, 1], &[0, 0]);
        assert!(err.is_err());
    }

    #[test]
    fn grafting() {
        let v = PartitionedTree::vertex(1);
        assert_eq!(v.graft(0, &v).unwrap(), pt("{1({1})}"));
        assert!(v.graft(1, &v).is_err());
        let three = pt("{1({1 1})}");
        let outs: Vec<_> = (0..3).map(|s| three.graft(s, &v).unwrap()).collect();
        assert_eq!(outs[1], outs[2]);
        assert_ne!(outs[0], outs[1]);
        let two_roots = pt("{1 1}");
        let g = v.graft(0, &two_roots).unwrap();
        assert_eq!(g, pt("{1({1 1})}"));
        assert_eq!(g.block_count(), 2);
    }

    #[test]
    fn shuffles_and_products() {
        let v = PartitionedTree::vertex(1);
        assert_eq!(v.shuffle(&v), pt("{1 1}"));
        assert_eq!(v.shuffle(&v).shuffle(&v), pt("{1 1 1}"));
        let a = pt("{1({1}) 2}");
        let b = pt("{2({1 1})}");
        assert_eq!(
            a.shuffle(&b).block_count(),
            a.block_count() + b.block_count() - 1
        );
        assert_eq!(v.prelie(&v), one(&pt("{1({1})}")));
        let p = pt("{1({1 1})}").prelie(&v);
        assert_eq!(p.mass(), rat(3));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn multigrafts() {
        let v = PartitionedTree::vertex(1);
        let a = pt("{2}");
        let b = pt("{1({1})}");
        assert_eq!(
            v.multigraft(&[a.clone(), b.clone()]),
            one(&pt("{1({1({1})}{2})}"))
        );
        let t = pt("{1({1}) 2}");
        let forest = [a.clone(), b.clone(), v.clone()];
        assert_eq!(t.multigraft(&forest).mass(), rat(27));
        assert_eq!(t.multigraft(&forest[..1]), t.prelie(&a));
        let lhs = multigraft_lc(&one(&t), &[one(&a), one(&b)]);
        assert_eq!(lhs, og_product(&one(&t), &[one(&a), one(&b)]));
        let lhs = multigraft_lc(&one(&t), &[one(&a), one(&b), one(&v)]);
        assert_eq!(lhs, og_product(&one(&t), &[one(&a), one(&b), one(&v)]));
    }

    #[test]
    fn axioms_on_small_trees() {
        let mut census = Census::new(2).unwrap();
        let pool: Vec<PartitionedTree> = (1..=2)
            .flat_map(|n| census.trees(n).unwrap().to_vec())
            .collect();
        for x in &pool {
            for y in &pool {
                for z in &pool {
                    let (x, y, z) = (one(x), one(y), one(z));
                    assert!(prelie_residual(&x, &y, &z).is_zero());
                    assert!(com_prelie_residual(&x, &y, &z).is_zero());
                    let (assoc, comm) = shuffle_residuals(&x, &y, &z);
                    assert!(assoc.is_zero() && comm.is_zero());
                }
            }
        }
    }

    #[test]
    fn free_evaluation() {
        let images = |d: u32| Some(one(&PartitionedTree::vertex(d)));
        let mut census = Census::new(2).unwrap();
        for n in 1..=4 {
            for t in census.trees(n).unwrap().to_vec() {
                assert_eq!(free_eval(&t, &images).unwrap(), one(&t), "{t}");
            }
        }
        let partial = |d: u32| (d == 1).then(|| one(&PartitionedTree::vertex(1)));
        assert_eq!(free_eval(&pt("{2}"), &partial), Err(Error::MissingImage(2)));
    }

    #[test]
    fn census_counts() {
        let mut c1 = Census::new(1).unwrap();
        let counts: Vec<usize> = (1..=7).map(|n| c1.trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 134, 444]);
        let mut c2 = Census::new(2).unwrap();
        let counts: Vec<usize> = (1..=5).map(|n| c2.trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 7, 32, 167, 952]);
        for d in 1..=4u32 {
            assert_eq!(
                pt_enumerate(2, d).unwrap().len() as u32,
                d * (3 * d + 1) / 2
            );
        }
        assert!(pt_enumerate(0, 1).is_err());
        assert!(pt_enumerate(1, 0).is_err());
    }

    #[test]
    fn census_series() {
        let (f, t) = pt_counts_by_series(10, 1).unwrap();
        let f: Vec<String> = f.iter().map(ToString::to_string).collect();
        assert_eq!(
            f,
            ["1", "2", "5", "14", "42", "134", "444", "1518", "5318", "18989"]
        );
        assert_eq!(t[0], BigInt::from(1));
        assert_eq!(t[2], BigInt::from(3));
        let (f, _) = pt_counts_by_series(10, 2).unwrap();
        assert_eq!(f[9], BigInt::from(10702333));
        for d in 1..=3 {
            let (f, _) = pt_counts_by_series(5, d).unwrap();
            for n in 1..=5 {
                assert_eq!(
                    census_polynomial(n, d as i64).unwrap(),
                    Rational::from_integer(f[n - 1].clone())
                );
            }
        }
    }

    #[test]
    fn rigidity_examples() {
        let v = PartitionedTree::vertex(1);
        assert!(rigidity_coproduct(&v).is_zero());
        let ladder = pt("{2({1})}");
        assert_eq!(
            rigidity_coproduct(&ladder),
            LinComb::basis((PartitionedTree::vertex(2), v.clone()))
        );
        let t1 = pt("{1({1})}");
        let t2 = pt("{1 1}");
        let t3 = v.clone();
        let t4 = pt("{1({1 1})}");
        assert!(rigidity_coproduct_lc(&kernel_elements::x(&t1, &t2)).is_zero());
        assert!(rigidity_coproduct_lc(&kernel_elements::y(&t1, &t2, &t3)).is_zero());
        assert!(rigidity_coproduct_lc(&kernel_elements::z(&t1, &t2, &t3, &t4)).is_zero());
        assert!(rigidity_coproduct_lc(&kernel_elements::t(&t1, &t2, &t3, &t4)).is_zero());
    }

    #[test]
    fn rigidity_properties() {
        let mut census = Census::new(2).unwrap();
        let pool: Vec<PartitionedTree> = (1..=3)
            .flat_map(|n| census.trees(n).unwrap().to_vec())
            .collect();
        for x in &pool {
            assert!(rigidity_symmetry_residual(&one(x)).is_zero(), "{x}");
            for y in pool.iter().take(9) {
                assert!(
                    rigidity_derivation_residual(&one(x), &one(y)).is_zero(),
                    "{x} {y}"
                );
            }
        }
    }
}
