use std::fmt;

/// The error type for fallible operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two maps that must share a boundary set do not.
    DomainMismatch { expected: usize, got: usize, context: &'static str },
    /// Composition was attempted across mismatched middle objects.
    BoundaryMismatch { context: &'static str },
    /// A square claimed to be a pullback fails the canonical comparison test.
    NotPullback { detail: String },
    /// A vector or entry is indexed by the wrong set or lies outside its carrier.
    IndexMismatch { expected: usize, got: usize, context: &'static str },
    /// Checked arithmetic left the carrier.
    Overflow { context: &'static str },
    /// An enumeration would produce more values than the configured bound.
    ResourceLimit { limit: usize },
    /// Input data does not have the shape the operation requires.
    ShapeMismatch { detail: String },
    /// A morphism of the arrow model failed validation.
    InvalidMorphism { detail: String },
    /// The morphism is not in the W class.
    NotInW,
    /// A JSON document does not match its schema.
    SchemaViolation { path: String, message: String },
    /// Constructing a function whose entries leave the codomain.
    InvalidFunction { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DomainMismatch { expected, got, context } => {
                write!(f, "domain mismatch in {context}: expected size {expected}, got {got}")
            }
            Error::BoundaryMismatch { context } => {
                write!(f, "boundary mismatch: {context}")
            }
            Error::NotPullback { detail } => write!(f, "not a pullback square: {detail}"),
            Error::IndexMismatch { expected, got, context } => {
                write!(f, "index mismatch in {context}: expected {expected}, got {got}")
            }
            Error::Overflow { context } => write!(f, "arithmetic overflow in {context}"),
            Error::ResourceLimit { limit } => {
                write!(f, "enumeration exceeds the configured bound of {limit} classes")
            }
            Error::ShapeMismatch { detail } => write!(f, "shape mismatch: {detail}"),
            Error::InvalidMorphism { detail } => write!(f, "invalid morphism: {detail}"),
            Error::NotInW => write!(f, "morphism is not in the W class"),
            Error::SchemaViolation { path, message } => {
                write!(f, "schema violation at {path}: {message}")
            }
            Error::InvalidFunction { detail } => write!(f, "invalid function: {detail}"),
        }
    }
}

impl std::error::Error for Error {}

/// Machine-parseable code for the CLI error record.
impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DomainMismatch { .. } => "DomainMismatch",
            Error::BoundaryMismatch { .. } => "BoundaryMismatch",
            Error::NotPullback { .. } => "NotPullback",
            Error::IndexMismatch { .. } => "IndexMismatch",
            Error::Overflow { .. } => "Overflow",
            Error::ResourceLimit { .. } => "ResourceLimit",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::InvalidMorphism { .. } => "InvalidMorphism",
            Error::NotInW => "NotInW",
            Error::SchemaViolation { .. } => "SchemaViolation",
            Error::InvalidFunction { .. } => "InvalidFunction",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
