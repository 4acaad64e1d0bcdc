use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A link parameter violated its range constraint.
    #[error("invalid {field}: {message}")]
    InvalidParam {
        field: &'static str,
        message: String,
    },

    /// 64-bit arithmetic overflowed; the input is out of supported range.
    #[error("integer overflow during {context}")]
    Overflow { context: &'static str },

    /// An image table did not describe a bijection on its strand set.
    #[error("strand images do not form a permutation")]
    NotBijective,

    /// `terminal_count` was asked for a state that is not terminal.
    #[error("reduction state has no zero twist exponent; not terminal")]
    NotTerminal,

    /// A state produced by the engine violated its own invariants.
    #[error("internal invariant violated: {context}")]
    Invariant { context: &'static str },

    /// Two applicable closed forms disagreed; this indicates a bug.
    #[error("closed forms disagree: {message}")]
    FormulaMismatch { message: String },

    /// The request is valid but outside supported resource limits.
    #[error("{message}")]
    Unsupported { message: String },
}
