//! Exact computations around the Fliess composition of noncommutative
//! series: the coordinate Hopf algebra, the dual Com-Prelie algebra of
//! binary words, free Com-Prelie algebras of partitioned trees, the
//! presentation morphisms from trees onto words, and the admissible-word
//! basis with its dendriform structure.
//!
//! All arithmetic is over arbitrary precision rationals.

pub mod admissible;
pub mod algebra;
pub mod error;
pub mod expr;
pub mod fliess;
pub mod hopf;
pub mod linalg;
pub mod lincomb;
pub mod morphisms;
pub mod prelie_words;
pub mod ptree;
pub mod random;
pub mod rtree;
pub mod scalar;
pub mod series;
mod text;
pub mod verify;
pub mod words;

pub use admissible::PosWord;
pub use error::{Error, Result};
pub use expr::{Expr, Sort};
pub use fliess::{NCSeries, Truncation};
pub use hopf::CoordMonomial;
pub use lincomb::{JsonBasis, LinComb};
pub use ptree::{PNode, PartitionedTree};
pub use rtree::RootedTree;
pub use scalar::Rational;
pub use words::{BinaryWord, Letter, WordDegree};
