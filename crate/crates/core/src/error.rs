use thiserror::Error;

use crate::extension::StuckState;
use crate::moment::Simplex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty simplex")]
    EmptySimplex,

    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error(
        "simplex {simplex} has {len} vertices, more than d+1 = {max} allowed in dimension {d}"
    )]
    SimplexTooLarge {
        simplex: Simplex,
        len: usize,
        max: usize,
        d: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("antisymmetry violated: cycle through {0} in the height digraph")]
    AntisymmetryViolated(Simplex),

    #[error("simplices {0} and {1} overlap")]
    Overlap(Simplex, Simplex),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0} is not below the triangulation")]
    NotBelow(Simplex),

    #[error("budget of {budget} search nodes exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    /// The greedy extension ran out of candidates; impossible for `d ≤ 4`.
    #[error("{0}")]
    GreedyStuck(Box<StuckState>),
}
