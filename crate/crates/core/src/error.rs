use thiserror::Error;

use crate::ring::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid descriptor at `{path}`: {reason}")]
    Descriptor { path: String, reason: String },

    #[error("{what} would have {size} elements, above the cap of {cap}")]
    SizeCap { what: &'static str, size: u128, cap: usize },

    #[error("element {index} is out of range for a carrier of size {size}")]
    OutOfRange { index: usize, size: usize },

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("tables do not define a ring: {0}")]
    NotARing(AxiomReport),

    #[error("operands belong to different rings or sides")]
    Mismatch,

    #[error("the given set is not a {0} ideal")]
    NotAnIdeal(&'static str),

    #[error("the given set is not a submodule")]
    NotASubmodule,

    #[error("ideal enumeration needs a ring of at most {cap} elements, got {size}")]
    IdealCap { size: usize, cap: usize },

    #[error("homomorphism enumeration would explore more than {cap} candidates")]
    HomCap { cap: usize },
}
