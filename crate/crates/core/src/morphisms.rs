//! The morphisms between the tree algebras and words:
//! `φ_PL` on decorated rooted trees, `ψ` from rooted trees to partitioned trees
//! decorated by {1, 2}, and `φ_CPL` from those partitioned trees onto words.
//! They form a commuting triangle `φ_PL = φ_CPL ∘ ψ`.

use crate::algebra;
use crate::error::Result;
use crate::lincomb::LinComb;
use crate::ptree::{multigraft_lc, FreeEval, PartitionedTree};
use crate::rtree::RootedTree;
use crate::scalar::{factorial, Rational};
use crate::words::{prepend_lc, shuffle_lc, BinaryWord, Letter};

/// `φ_PL(B_n(t_1..t_k)) = x0 w_1 ⧢ .. ⧢ x0 w_k ⧢ x1^(n−1−k)` with
/// `w_i = φ_PL(t_i)`, and zero when `k ≥ n`.
pub fn phi_pl(t: &RootedTree) -> LinComb<BinaryWord> {
    let n = t.decoration() as usize;
    let k = t.children().len();
    if k >= n {
        return LinComb::zero();
    }
    let mut out = LinComb::basis(BinaryWord::x1_pow(n - 1 - k));
    for c in t.children() {
        let image = prepend_lc(Letter::X0, &phi_pl(c));
        if image.is_zero() {
            return image;
        }
        out = shuffle_lc(&out, &image);
    }
    out
}

pub fn phi_pl_lc(x: &LinComb<RootedTree>) -> LinComb<BinaryWord> {
    x.apply(phi_pl)
}

/// Image of the generator `n` under `ψ`: `(1/(n−1)!) 2^⧢(n−1)`, and the
/// single vertex 1 for `n = 1`.
pub fn psi_generator(n: u32) -> LinComb<PartitionedTree> {
    if n == 1 {
        return LinComb::basis(PartitionedTree::vertex(1));
    }
    let roots = vec![(2, Vec::new()); (n - 1) as usize];
    let tree = PartitionedTree::from_root_forests(&roots).expect("n >= 2");
    LinComb::term(tree, Rational::new(1.into(), factorial((n - 1) as u64)))
}

/// `ψ(B_n(t_1..t_k)) = ψ(n) • ψ(t_1)..ψ(t_k)`.
pub fn psi(t: &RootedTree) -> LinComb<PartitionedTree> {
    let args: Vec<LinComb<PartitionedTree>> = t.children().iter().map(psi).collect();
    multigraft_lc(&psi_generator(t.decoration()), &args)
}

pub fn psi_lc(x: &LinComb<RootedTree>) -> LinComb<PartitionedTree> {
    x.apply(psi)
}

fn cpl_images(d: u32) -> Option<LinComb<BinaryWord>> {
    match d {
        1 => Some(LinComb::basis(BinaryWord::empty())),
        2 => Some(LinComb::basis(BinaryWord::x1())),
        _ => None,
    }
}

/// Evaluator for `φ_CPL` (1 ↦ ∅, 2 ↦ x1); reuse it to share the memo.
pub fn phi_cpl_evaluator() -> FreeEval<'static, BinaryWord> {
    FreeEval::new(&cpl_images)
}

/// `φ_CPL`; fails with a missing-image error on decorations other than 1, 2.
pub fn phi_cpl(x: &LinComb<PartitionedTree>) -> Result<LinComb<BinaryWord>> {
    phi_cpl_evaluator().eval_lc(x)
}

fn pt(t: &PartitionedTree) -> LinComb<PartitionedTree> {
    LinComb::basis(t.clone())
}

/// `φ_CPL(d • t_1..t_k)` for a single vertex `d`; the first two relations
/// (`d = 1`, `k ≥ 1` and `d = 2`, `k ≥ 2`) say this vanishes.
pub fn cpl_relation_graft(d: u32, forest: &[PartitionedTree]) -> Result<LinComb<BinaryWord>> {
    phi_cpl(&PartitionedTree::vertex(d).multigraft(forest))
}

/// `φ_CPL(1 ⧢ t − t)`.
pub fn cpl_relation_unit(t: &PartitionedTree) -> Result<LinComb<BinaryWord>> {
    let unit = PartitionedTree::vertex(1);
    phi_cpl(&(pt(&unit.shuffle(t)) - pt(t)))
}

/// `φ_CPL((2•t)⧢(2•t′) − 2•((2•t)⧢t′ + t⧢(2•t′)))`.
pub fn cpl_relation_four(t: &PartitionedTree, t2: &PartitionedTree) -> Result<LinComb<BinaryWord>> {
    let two = pt(&PartitionedTree::vertex(2));
    let a = algebra::prelie(&two, &pt(t));
    let b = algebra::prelie(&two, &pt(t2));
    let inner = algebra::shuffle(&a, &pt(t2)) + algebra::shuffle(&pt(t), &b);
    let x = algebra::shuffle(&a, &b) - algebra::prelie(&two, &inner);
    phi_cpl(&x)
}

/// `φ_CPL(2 • t) − x0 φ_CPL(t)`.
pub fn cpl_rule_two_graft(t: &PartitionedTree) -> Result<LinComb<BinaryWord>> {
    let lhs = phi_cpl(&PartitionedTree::vertex(2).prelie(t))?;
    Ok(lhs - prepend_lc(Letter::X0, &phi_cpl(&pt(t))?))
}

/// `φ_PL(B_{n+1}(B_i(S) B_j(T))) − φ_PL(B_n(B_{i+1}(S B_j(T)))) − φ_PL(B_n(B_{j+1}(B_i(S) T)))`.
pub fn pl_relation(
    n: u32,
    i: u32,
    j: u32,
    s: &[RootedTree],
    t: &[RootedTree],
) -> LinComb<BinaryWord> {
    let bi = RootedTree::b(i, s.to_vec());
    let bj = RootedTree::b(j, t.to_vec());
    let first = RootedTree::b(n + 1, vec![bi.clone(), bj.clone()]);
    let mut s_plus = s.to_vec();
    s_plus.push(bj);
    let second = RootedTree::b(n, vec![RootedTree::b(i + 1, s_plus)]);
    let mut t_plus = t.to_vec();
    t_plus.push(bi);
    let third = RootedTree::b(n, vec![RootedTree::b(j + 1, t_plus)]);
    phi_pl(&first) - phi_pl(&second) - phi_pl(&third)
}

/// `φ(x•y) − φ(x)•φ(y)` and `φ(x⧢y) − φ(x)⧢φ(y)` for `φ = φ_PL`.
pub fn pl_morphism_residuals(
    x: &RootedTree,
    y: &RootedTree,
) -> (LinComb<BinaryWord>, LinComb<BinaryWord>) {
    let (px, py) = (phi_pl(x), phi_pl(y));
    let prelie = phi_pl_lc(&x.prelie(y)) - algebra::prelie(&px, &py);
    let shuffle = phi_pl_lc(&x.shuffle(y)) - algebra::shuffle(&px, &py);
    (prelie, shuffle)
}

/// Same residuals for `φ_CPL`.
pub fn cpl_morphism_residuals(
    x: &PartitionedTree,
    y: &PartitionedTree,
) -> Result<(LinComb<BinaryWord>, LinComb<BinaryWord>)> {
    let mut eval = phi_cpl_evaluator();
    let (px, py) = (eval.eval(x)?, eval.eval(y)?);
    let prelie = eval.eval_lc(&x.prelie(y))? - algebra::prelie(&px, &py);
    let shuffle = eval.eval(&x.shuffle(y))? - algebra::shuffle(&px, &py);
    Ok((prelie, shuffle))
}

/// `φ_CPL(ψ(t)) − φ_PL(t)`.
pub fn triangle_residual(t: &RootedTree) -> Result<LinComb<BinaryWord>> {
    Ok(phi_cpl(&psi(t))? - phi_pl(t))
}

/// `ψ(x ⧢ y)` against `ψ(x) ⧢ ψ(y)`.
pub fn psi_shuffle_pair(
    x: &RootedTree,
    y: &RootedTree,
) -> (LinComb<PartitionedTree>, LinComb<PartitionedTree>) {
    (psi_lc(&x.shuffle(y)), algebra::shuffle(&psi(x), &psi(y)))
}
