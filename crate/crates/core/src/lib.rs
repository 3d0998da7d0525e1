//! Exact homological algebra over finite-dimensional commutative local algebras.
//!
//! Everything is computed with exact arithmetic over a prime field or the
//! rationals. Results about unbounded objects (Ext and Tor in infinitely many
//! degrees) carry a [`derived::Certificate`] saying how far they are known.

pub mod algebra;
pub mod cplx;
pub mod derived;
pub mod exact;
pub mod fgmod;
pub mod resolve;
pub mod sdc;
pub mod verdict;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not commutative: {0}")]
    NotCommutative(String),
    #[error("not associative: {0}")]
    NotAssociative(String),
    #[error("unit axiom fails: {0}")]
    NoUnit(String),
    #[error("not local: {0}")]
    NotLocal(String),
    #[error("not Artinian: {0}")]
    NotArtinian(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("modules or complexes live over different algebras")]
    AlgebraMismatch,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("rank budget of {budget} exceeded in degree {degree}")]
    RankBudgetExceeded { budget: usize, degree: i64 },
    #[error("requested degree {requested} lies outside the certified window ({limit})")]
    WindowExceeded { requested: i64, limit: i64 },
    #[error("the complex has zero homology")]
    ZeroComplex,
    #[error("not semidualizing: {0}")]
    NotSemidualizing(String),
    #[error("not a module (amplitude {0})")]
    NotModule(i64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
