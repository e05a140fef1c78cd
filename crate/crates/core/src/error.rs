use std::fmt;

use thiserror::Error;

/// Text input that does not follow the tree, expression or rational grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn shifted(mut self, offset: usize) -> Self {
        self.position += offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("decorated and undecorated trees cannot be grafted together")]
    DecorationMismatch,
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit: {needed} basis elements exceed the cap of {cap}")]
    ResourceLimit { needed: usize, cap: usize },
    #[error("alpha is not an endomorphism of the bracket: witness pair ({0}, {1})")]
    NotEndomorphism(usize, usize),
    #[error("invalid Hom-Lie morphism: {0}")]
    MorphismInvalid(String),
    #[error("invalid algebra description: {0}")]
    Algebra(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
