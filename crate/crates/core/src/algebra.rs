//! Generic Com-Prelie machinery over a basis: bilinear extensions, the
//! Oudom–Guin extension of `•` to several right arguments, and axiom residuals.

use crate::lincomb::LinComb;

/// A basis carrying a prelie product `•` and a commutative product `⧢`.
pub trait ComPrelieBasis: Ord + Clone {
    fn prelie(a: &Self, b: &Self) -> LinComb<Self>;
    fn shuffle(a: &Self, b: &Self) -> LinComb<Self>;
}

pub fn prelie<B: ComPrelieBasis>(x: &LinComb<B>, y: &LinComb<B>) -> LinComb<B> {
    x.bilinear(y, B::prelie)
}

pub fn shuffle<B: ComPrelieBasis>(x: &LinComb<B>, y: &LinComb<B>) -> LinComb<B> {
    x.bilinear(y, B::shuffle)
}

/// `⧢` of a nonempty list; `None` for the empty list (the unit may not exist).
pub fn shuffle_all<B: ComPrelieBasis>(xs: &[LinComb<B>]) -> Option<LinComb<B>> {
    let (first, rest) = xs.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, x| shuffle(&acc, x)))
}

/// `a • (b1 ... bk)` in the symmetric algebra, by
/// `a • b1..bk = (a • b1..b(k-1)) • bk − Σ_{i<k} a • b1..(bi • bk)..b(k-1)`,
/// with `a • () = a`.
pub fn og_product<B: ComPrelieBasis>(a: &LinComb<B>, args: &[LinComb<B>]) -> LinComb<B> {
    let Some((last, init)) = args.split_last() else {
        return a.clone();
    };
    let mut out = prelie(&og_product(a, init), last);
    for i in 0..init.len() {
        let mut inner = init.to_vec();
        inner[i] = prelie(&init[i], last);
        out -= &og_product(a, &inner);
    }
    out
}

/// `((x•y)•z − x•(y•z)) − ((x•z)•y − x•(z•y))`.
pub fn prelie_residual<B: ComPrelieBasis>(
    x: &LinComb<B>,
    y: &LinComb<B>,
    z: &LinComb<B>,
) -> LinComb<B> {
    let left = prelie(&prelie(x, y), z) - prelie(x, &prelie(y, z));
    let right = prelie(&prelie(x, z), y) - prelie(x, &prelie(z, y));
    left - right
}

/// `(x⧢y)•z − (x•z)⧢y − x⧢(y•z)`.
pub fn com_prelie_residual<B: ComPrelieBasis>(
    x: &LinComb<B>,
    y: &LinComb<B>,
    z: &LinComb<B>,
) -> LinComb<B> {
    prelie(&shuffle(x, y), z) - shuffle(&prelie(x, z), y) - shuffle(x, &prelie(y, z))
}

/// `(x⧢y)⧢z − x⧢(y⧢z)` plus the commutator `x⧢y − y⧢x`, kept apart.
pub fn shuffle_residuals<B: ComPrelieBasis>(
    x: &LinComb<B>,
    y: &LinComb<B>,
    z: &LinComb<B>,
) -> (LinComb<B>, LinComb<B>) {
    let assoc = shuffle(&shuffle(x, y), z) - shuffle(x, &shuffle(y, z));
    let comm = shuffle(x, y) - shuffle(y, x);
    (assoc, comm)
}
