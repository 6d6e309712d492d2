use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced while parsing graph descriptions or evaluating invariants.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed graph description: {0}")]
    Malformed(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge between vertices {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("edge references unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {0} has nonzero genus; only genus-zero plumbings are supported")]
    NonzeroGenus(usize),
    #[error("intersection matrix is singular")]
    SingularMatrix,
    #[error("intersection form is not negative definite")]
    NotNegativeDefinite,
    #[error("cycle is not in the dual lattice: pairing with E_{vertex} equals {pairing}")]
    NotInLprime { vertex: usize, pairing: String },
    #[error("graph is not rational")]
    NotRational,
    #[error("discriminant group order {order} exceeds enumeration cap {cap}")]
    EnumerationCapExceeded { order: String, cap: u64 },
    #[error("invalid Seifert pair ({alpha},{omega}): need 0 < omega < alpha and gcd = 1")]
    InvalidSeifertPair { alpha: i64, omega: i64 },
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("cover link is not an integral homology sphere (|H| = {0})")]
    CoverNotIntegralHomologySphere(String),
}
