use thiserror::Error;

use crate::polygon::PairedArc;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// Torsion machinery (crossing of two diameters, distance, perps,
    /// Ptolemy conditions) is only defined for odd m.
    #[error("unsupported for even m = {m}: crossings, perps and Ptolemy diagrams require odd m")]
    EvenLevel { m: u32 },

    #[error("{0:?} is not an m-arc of this model")]
    NotAnMArc(PairedArc),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("arc universe has {size} arcs, above the cap of {cap}; {hint}")]
    CapExceeded {
        size: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("set is not a Ptolemy diagram ({} violating pair(s))", .0.len())]
    NotPtolemy(Vec<(PairedArc, PairedArc, Vec<PairedArc>)>),

    #[error("double-perp fixpoint fails for a Ptolemy diagram: {0}")]
    FixpointFailure(String),

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
