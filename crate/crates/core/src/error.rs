//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("squarefree power index must be at least 1")]
    ZeroPowerIndex,

    #[error("power index {k} out of range 1..={nu}")]
    PowerOutOfRange { k: usize, nu: usize },

    #[error("{what} cap exceeded: {actual} > {cap}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        actual: usize,
    },

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("not a matching: {0}")]
    NotAMatching(String),

    #[error("complement graph is not chordal")]
    NotCochordal,

    #[error("generator ordering is not a linear quotients order")]
    InadmissibleOrder,

    #[error("homology of the void complex is undefined")]
    VoidComplex,

    #[error("invalid construction parameters: {0}")]
    BadParameters(String),

    #[error("{0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
