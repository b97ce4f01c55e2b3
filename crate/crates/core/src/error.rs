use thiserror::Error;

use crate::parse::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("formula contains the delta operator where a classical formula is required")]
    DeltaPresent,

    #[error("variable `{0}` is not in the signature")]
    UnboundVariable(String),

    #[error("{vars} variables exceed the enumeration cap of {cap}")]
    CapacityExceeded { vars: usize, cap: usize },

    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("case `{case}` does not determine the status of `{var}`")]
    NotDeterminate { case: String, var: String },

    /// The case is false or neither-valued at its only non-false valuation,
    /// so no single point can positively satisfy it.
    #[error("case `{case}` is not designated at its canonical valuation")]
    NotRealizable { case: String },

    #[error("unknown witness case `{0}`")]
    UnknownWitness(String),

    #[error("{0} arguments have no representation formula for the strong polarity")]
    StrongUnrepresented(&'static str),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("invalid case model: {0}")]
    InvalidModel(String),

    #[error("invalid capacity: {0}")]
    InvalidCapacity(String),
}
