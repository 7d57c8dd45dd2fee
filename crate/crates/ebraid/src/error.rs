use thiserror::Error;

pub type Result<T> = std::result::Result<T, AppError>;

#[derive(Debug, Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] ebraid_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },
    #[error("invalid polynomial: {0}")]
    Polynomial(String),
    #[error("methods disagree:\n{0}")]
    MethodDisagreement(String),
    #[error("{0}")]
    PropertyFailure(String),
}

impl AppError {
    /// 1 property failure, 2 input error, 3 method disagreement, 4 resource cap.
    pub fn exit_code(&self) -> i32 {
        use ebraid_core::Error as E;
        match self {
            AppError::Core(E::TooManyCrossings { .. } | E::TooManyStrands { .. }) => 4,
            AppError::Core(E::DifferentialNotSquareZero { .. } | E::SignSystemInconsistent(_)) => 1,
            AppError::Core(_) => 2,
            AppError::Io(_) | AppError::Json(_) | AppError::Corpus { .. } | AppError::Polynomial(_) => 2,
            AppError::MethodDisagreement(_) => 3,
            AppError::PropertyFailure(_) => 1,
        }
    }
}
