use crate::word::{Alphabet, Letter};

/// Errors raised by word, ring and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown letter `{letter}` at byte {position} for alphabet {alphabet}")]
    UnknownLetter {
        letter: String,
        position: usize,
        alphabet: Alphabet,
    },

    #[error("zero exponent at byte {position}")]
    ZeroExponent { position: usize },

    #[error("word mixes subscripted and unsubscripted letters (byte {position})")]
    MixedAlphabets { position: usize },

    #[error("alphabet mismatch: expected {expected}, found {found}")]
    AlphabetMismatch { expected: Alphabet, found: Alphabet },

    #[error("letter {letter} does not belong to alphabet {alphabet}")]
    LetterOutsideAlphabet { letter: Letter, alphabet: Alphabet },

    #[error("coefficient {coeff} is not an integer")]
    NonIntegerCoefficient { coeff: String },

    #[error("invalid coefficient `{0}`")]
    InvalidCoefficient(String),

    #[error("parameter k must be a positive integer")]
    InvalidK,

    #[error("argument `{0}` must be a nontrivial word")]
    TrivialArgument(&'static str),

    #[error("word `{word}` is not of the form t^x1 u^y1 t^x2 ... u^yn t^xn: {reason}")]
    ShapeViolation { word: String, reason: &'static str },

    #[error("pattern assignment is missing variable `{0}`")]
    MissingVariable(char),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("target word must not be the identity")]
    IdentityTarget,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed ring element JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
