//! Exact-arithmetic engine for the calculus of skew divided differences over
//! finite crystallographic Weyl groups.
//!
//! The library is layered bottom-up:
//!
//! * [`rootsys`] — root systems with integer symmetric form, Cartan integers,
//!   reflections and the coefficient/orthogonality classification of roots;
//! * [`weylgroup`] — Weyl group elements as integer matrices, words, lengths,
//!   Bruhat and weak order, covers, reflection orderings;
//! * [`braided`] — the braided vector space on positive roots, braidings,
//!   symmetrizers, coproduct, the duality pairing, the bar antipode and the
//!   four derivative operators;
//! * [`skewcalc`] — skew elements `x_{w/v}` along all computation routes,
//!   monomial factorization of short intervals, `c`-invariants and the
//!   equality criterion;
//! * [`chaincomb`] — saturated chains and the staged-deletion subsequence
//!   maps between sets of reduced words;
//! * [`interval2`] — shuffle elements and the theorems on Bruhat intervals of
//!   length two;
//! * [`coinvariant`] — the classical shadow: divided differences and skew
//!   divided differences acting on the coinvariant algebra;
//! * [`verify`] — batch verification suites producing machine-readable
//!   reports.

pub mod braided;
pub mod chaincomb;
pub mod coinvariant;
pub mod interval2;
pub mod rootsys;
pub mod skewcalc;
pub mod verify;
pub mod weylgroup;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unrecognized Cartan type `{0}`")]
    InvalidCartanType(String),
    #[error("rank {rank} is out of range for family {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("simple root index {0} is out of range (rank {1})")]
    SimpleOutOfRange(usize, usize),
    #[error("simple root {0} does not lie in the support of the given root")]
    NotInSupport(usize),
    #[error("operation requires a simply laced root system, got {0}")]
    NotSimplyLaced(String),
    #[error("expected v \u{2264} w in Bruhat order")]
    NotBruhatComparable,
    #[error("word {0:?} is not a reduced word of the given element")]
    NotReducedWordOf(Vec<usize>),
    #[error("braiding position {0} needs words of length at least {1}")]
    BraidingOutOfRange(usize, usize),
    #[error("expected root {0:?} to be minimal in the ascent-descent set")]
    NotMinimal(Vec<i64>),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
