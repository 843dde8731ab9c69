use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("unknown generator {index} (presentation has {count})")]
    UnknownGenerator { index: usize, count: usize },
    #[error("commutator needs at least two arguments, got {0}")]
    CommutatorArity(usize),
    #[error("word has length {found}, presentation has {expected} generators")]
    WordLength { expected: usize, found: usize },
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("subgroup is not contained in the ambient subgroup")]
    NotContained,
    #[error("subgroup is not normal in the ambient subgroup")]
    NotNormal,
    #[error("enumeration of {order} elements exceeds the cap of {cap} (set {var})")]
    EnumerationCap { order: String, cap: u64, var: &'static str },
    #[error("presentation would need {needed} generators, cap is {cap} (set {var})")]
    GeneratorCap { needed: usize, cap: usize, var: &'static str },
    #[error("missing definition for generator {0} of weight > 1")]
    MissingDefinition(usize),
    #[error("inconsistent input presentation: {0}")]
    InconsistentInput(String),
    #[error("serialization: {0}")]
    Serialization(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
