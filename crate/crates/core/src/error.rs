use thiserror::Error;

/// Library-wide error type.
///
/// The three variants map onto the CLI exit codes: invalid input (2),
/// window-bounded indeterminacy (3), and property violations that would
/// falsify a verified identity (4).
#[derive(Debug, Error)]
pub enum WittError {
    /// The input itself is malformed or outside the documented domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested window is too small (or too large) to decide the answer;
    /// the result is indeterminate rather than wrong.
    #[error("indeterminate within window: {0}")]
    Indeterminate(String),

    /// An internal cross-check failed; this would falsify a verified identity
    /// and is never expected on valid inputs.
    #[error("property violation: {0}")]
    PropertyViolation(String),
}

impl WittError {
    /// CLI exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            WittError::InvalidInput(_) => 2,
            WittError::Indeterminate(_) => 3,
            WittError::PropertyViolation(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, WittError>;
