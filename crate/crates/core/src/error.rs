use thiserror::Error;

use crate::complex::{FaceId, ValidationReport};

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown face id {0}")]
    UnknownFace(usize),
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("invalid complex:\n{0}")]
    Invalid(ValidationReport),
    #[error("face set is not upward closed (face {0} has a superface outside the set)")]
    NotUpwardClosed(FaceId),
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("operation requires a simplicial complex")]
    NotSimplicial,
    #[error("integer coefficients rejected: {0}")]
    FieldRequired(&'static str),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("complex is not Cohen-Macaulay: {0}")]
    NotCohenMacaulay(String),
    #[error("complex is not a homology ball")]
    NotABall,
    #[error("complex is not a homology sphere")]
    NotASphere,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("hyperplane {0} intersects itself")]
    SelfIntersectingHyperplane(usize),
    #[error("simplicial complex is not flag: clique {0:?} spans no face")]
    NotFlag(Vec<usize>),
    #[error("cubical complex is not certified CAT(0)")]
    NotCertified,
    #[error("face lattice has no unique top element")]
    NoUniqueTop,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
