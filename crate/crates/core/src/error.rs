use thiserror::Error;

/// Errors raised by the exact and numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported root system {name} (supported: A1-A4, B2-B4, C2-C4, D4, G2, F4)")]
    UnsupportedSystem { name: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("degenerate circle subgroup: the coweight is zero")]
    DegenerateSubgroup,

    #[error("degenerate coadjoint orbit: the base coweight is zero")]
    DegenerateOrbit,

    #[error("invalid weights: {0:?} contains a weight >= 0")]
    InvalidWeights(Vec<i64>),

    #[error("coweight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("empty family: max length measure needs at least one loop")]
    EmptyFamily,

    #[error("correction exponent {exponent} is not strictly below the leading exponent {leading}")]
    EnergyBoundViolation { exponent: f64, leading: f64 },

    #[error("invalid loop: {0}")]
    InvalidLoop(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
