//! Sort-tagged values for front ends: parse a combination by sort name,
//! print it back canonically, or export it as JSON.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::admissible::{parse_posword_lincomb, PosWord};
use crate::error::{Error, Result};
use crate::fliess::{NCSeries, Truncation};
use crate::hopf::{parse_monomial_lincomb, CoordMonomial};
use crate::lincomb::LinComb;
use crate::ptree::{parse_ptree_lincomb, PartitionedTree};
use crate::rtree::{parse_rtree_lincomb, RootedTree};
use crate::words::{format_word_lincomb, parse_word_lincomb, BinaryWord};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sort {
    Word,
    Series,
    Monomial,
    PTree,
    RTree,
    PosWord,
}

impl Sort {
    pub const ALL: [Sort; 6] = [
        Sort::Word,
        Sort::Series,
        Sort::Monomial,
        Sort::PTree,
        Sort::RTree,
        Sort::PosWord,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sort::Word => "word",
            Sort::Series => "series",
            Sort::Monomial => "monomial",
            Sort::PTree => "ptree",
            Sort::RTree => "rtree",
            Sort::PosWord => "posword",
        }
    }
}

impl FromStr for Sort {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Sort::ALL
            .into_iter()
            .find(|sort| sort.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown sort '{s}'")))
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Words(LinComb<BinaryWord>),
    Series(NCSeries),
    Monomials(LinComb<CoordMonomial>),
    PTrees(LinComb<PartitionedTree>),
    RTrees(LinComb<RootedTree>),
    PosWords(LinComb<PosWord>),
}

fn mismatch(want: Sort, got: Sort) -> Error {
    Error::Domain(format!("expected a {want} expression, got a {got}"))
}

impl Expr {
    /// `truncation` only matters for series.
    pub fn parse(sort: Sort, text: &str, truncation: Truncation) -> Result<Self> {
        Ok(match sort {
            Sort::Word => Expr::Words(parse_word_lincomb(text)?),
            Sort::Series => Expr::Series(NCSeries::parse(text, truncation)?),
            Sort::Monomial => Expr::Monomials(parse_monomial_lincomb(text)?),
            Sort::PTree => Expr::PTrees(parse_ptree_lincomb(text)?),
            Sort::RTree => Expr::RTrees(parse_rtree_lincomb(text)?),
            Sort::PosWord => Expr::PosWords(parse_posword_lincomb(text)?),
        })
    }

    pub fn sort(&self) -> Sort {
        match self {
            Expr::Words(_) => Sort::Word,
            Expr::Series(_) => Sort::Series,
            Expr::Monomials(_) => Sort::Monomial,
            Expr::PTrees(_) => Sort::PTree,
            Expr::RTrees(_) => Sort::RTree,
            Expr::PosWords(_) => Sort::PosWord,
        }
    }

    pub fn into_words(self) -> Result<LinComb<BinaryWord>> {
        match self {
            Expr::Words(x) => Ok(x),
            other => Err(mismatch(Sort::Word, other.sort())),
        }
    }

    pub fn into_ptrees(self) -> Result<LinComb<PartitionedTree>> {
        match self {
            Expr::PTrees(x) => Ok(x),
            other => Err(mismatch(Sort::PTree, other.sort())),
        }
    }

    pub fn into_rtrees(self) -> Result<LinComb<RootedTree>> {
        match self {
            Expr::RTrees(x) => Ok(x),
            other => Err(mismatch(Sort::RTree, other.sort())),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Expr::Words(x) => x.to_json(),
            Expr::Series(s) => {
                let mut v = s.body().to_json();
                let t = match s.truncation() {
                    Truncation::Exact => Value::Null,
                    Truncation::Truncated(l) => json!(l),
                };
                v["truncation"] = t;
                v
            }
            Expr::Monomials(x) => x.to_json(),
            Expr::PTrees(x) => x.to_json(),
            Expr::RTrees(x) => x.to_json(),
            Expr::PosWords(x) => x.to_json(),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Words(x) => f.write_str(&format_word_lincomb(x)),
            Expr::Series(s) => write!(f, "{s}"),
            Expr::Monomials(x) => write!(f, "{x}"),
            Expr::PTrees(x) => write!(f, "{x}"),
            Expr::RTrees(x) => write!(f, "{x}"),
            Expr::PosWords(x) => write!(f, "{x}"),
        }
    }
}
