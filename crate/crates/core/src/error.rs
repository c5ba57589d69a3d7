use thiserror::Error;

use crate::ring::AxiomViolation;

/// Errors raised by element-level operations on a realized ring.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("element index {elem} is outside the ring of order {order}")]
    OutOfRange { elem: usize, order: usize },

    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("invalid element literal `{literal}`: {reason}")]
    BadLiteral { literal: String, reason: String },

    #[error("{0}")]
    Domain(String),
}

/// Errors raised while validating or realizing a ring descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("ring order {} exceeds the order cap {cap}", order.map(|o| o.to_string()).unwrap_or_else(|| "(overflow)".into()))]
    OrderCap { order: Option<usize>, cap: usize },

    #[error("parameter {param} = {label} is not central in the base ring")]
    NonCentral { param: &'static str, label: String },

    #[error("parameter {param} = {label} is not a unit of the base ring")]
    NotAUnit { param: &'static str, label: String },

    #[error("{label} is not an idempotent")]
    NotIdempotent { label: String },

    #[error("corner by {label} is the zero ring")]
    TrivialCorner { label: String },

    #[error("map is not a unital ring endomorphism: {0}")]
    NotEndomorphism(String),

    #[error("embedding is not an injective unital ring homomorphism: {0}")]
    NotEmbedding(String),

    #[error(
        "additive exponent {exponent} of the algebra does not divide the scalar modulus {modulus}"
    )]
    ExponentMismatch { exponent: usize, modulus: usize },

    #[error("bad multiplication/addition table: {0}")]
    BadTable(String),

    #[error("ring axioms fail: {0}")]
    Axioms(AxiomViolation),

    #[error("ring axioms were not checked: order {order} exceeds axiom-check cap {cap}")]
    Unchecked { order: usize, cap: usize },

    #[error("subring is not closed under multiplication: {0}")]
    NotClosed(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Element(#[from] RingError),
}
