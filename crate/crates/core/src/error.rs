//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("orbit {orbit} is not valid for pair {pair}")]
    InvalidOrbit { pair: String, orbit: String },

    #[error("support label is not in the support set of {pair}: {label}")]
    InvalidSupport { pair: String, label: String },

    #[error("diagram is not Richardson-shaped: {0}")]
    NotRichardsonShaped(String),

    #[error("division by non-unit")]
    NonUnit,

    #[error("exponent {exponent} out of range (order {order})")]
    OutOfRange { exponent: usize, order: usize },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("brute force bound exceeded: rank {rank} > bound {bound}")]
    BruteForceBound { rank: u32, bound: u32 },

    #[error("character datum of inadmissible order: {0}")]
    InadmissibleCharacter(String),

    #[error("{0}")]
    Unsupported(String),
}
