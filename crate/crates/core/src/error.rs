use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must have at least 2 letters, got {0}")]
    AlphabetTooSmall(u32),

    #[error("letter {letter} is outside the alphabet of size {size}")]
    InvalidLetter { letter: u32, size: u32 },

    #[error("cannot parse word `{text}`: {reason}")]
    Parse { text: String, reason: String },

    #[error("words are over different alphabets (sizes {left} and {right})")]
    MismatchedAlphabet { left: u32, right: u32 },

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("word is periodic (period {period})")]
    NotPrimitive { word: String, period: String },

    #[error("order policy `{policy}` violates the Nyldon-like condition: f = {f}, g = {g}, fg = {fg}")]
    PolicyViolation {
        policy: String,
        f: String,
        g: String,
        fg: String,
    },

    #[error("Melançon membership disagrees with the definition for {word} under `{policy}`")]
    OracleMismatch { policy: String, word: String },

    #[error("unknown order policy `{0}`")]
    UnknownPolicy(String),

    #[error("policy `{expected}` required, got `{actual}`")]
    PolicyMismatch { expected: String, actual: String },

    #[error("word of length {len} exceeds the set's length bound {max_len}")]
    WordTooLong { len: usize, max_len: usize },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("outside the closed-form regime: {0}")]
    OutOfRegime(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("mixed codeword lengths: {0} and {1}")]
    MixedLengths(usize, usize),

    #[error("malformed set file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
