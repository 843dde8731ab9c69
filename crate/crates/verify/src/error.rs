use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("theorem requires p >= 3")]
    PrimeTwo,
    #[error("hypotheses fail: {0}")]
    Hypothesis(String),
    #[error("G' = gamma_3(G); no reduction is defined")]
    Degenerate,
    #[error("input has the wrong shape: {0}")]
    Shape(String),
    /// A search that the theory says must succeed came up empty.
    #[error("search exhausted without a qualifying candidate: {0}")]
    SearchExhausted(String),
    /// A constructed object failed its re-verification.
    #[error("verification failed: {0}")]
    Contradiction(String),
    #[error("unexpected isomorphism type: {0}")]
    UnexpectedType(String),
    #[error(transparent)]
    Core(#[from] pgroup_core::Error),
}

pub type Result<T, E = VerifyError> = std::result::Result<T, E>;
