use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("incomplete table: no entry for word {word}")]
    Incomplete { word: String },

    #[error("not normalized: value at the empty word is {value}, expected 1")]
    Normalization { value: String },

    #[error("signature error: {0}")]
    Signature(String),

    /// A moment beyond the stored degree bound was needed.
    #[error("truncation: moment of {word} needed but table degree is {degree}")]
    Truncation { word: String, degree: usize },

    #[error("signature is not star-closed; involution unsupported")]
    UnsupportedInvolution,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
