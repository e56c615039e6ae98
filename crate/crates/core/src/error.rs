use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient rank mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("denominator generator {generator} is not in the numerator lattice")]
    NotContained { generator: usize },

    #[error("{context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: String,
        found: String,
    },

    #[error("invalid surface signature: {0}")]
    InvalidSignature(String),

    #[error("diagram rejected: {}", .0.join("; "))]
    InvalidDiagram(Vec<String>),

    #[error("class {0} is not in L_gamma ∩ (L_alpha + L_beta)")]
    NotInSum(String),

    #[error("missing input: {0}")]
    Missing(String),

    #[error(
        "the gamma-basis w2 formula requires (alpha, beta) to be asserted in standard position"
    )]
    StandardPositionNotAsserted,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
