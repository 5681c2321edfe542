use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("edge multiplicity: label {label} appears {count} times")]
    EdgeMultiplicity { label: u32, count: usize },

    #[error("non-planar diagram: {faces} faces, expected {expected}")]
    NonPlanar { faces: usize, expected: usize },

    #[error("inconsistent orientation at edge {0}")]
    Orientation(u32),

    #[error("not a knot: diagram has {0} components")]
    NotAKnot(usize),

    #[error("invalid edge {0}")]
    InvalidEdge(u32),

    #[error("{what} exceeds cap: {size} > {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degenerate theory: {0}")]
    Degenerate(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
