use thiserror::Error;

/// Errors surfaced by the symbolic engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoreError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("zero q-factorial: base annihilates ({0})_b")]
    ZeroQFactorial(i64),
    #[error("inadmissible mode index {index} for {kind}")]
    InadmissibleIndex { kind: &'static str, index: i64 },
    #[error("root height {height} exceeds truncation cap {cap}")]
    HeightOverflow { height: i64, cap: i64 },
    #[error("truncation overflow: {0}")]
    TruncationOverflow(String),
    #[error("cannot multiply two tensors that both carry the formal Cartan symbol")]
    DoubleCartanSymbol,
    #[error("weight {0} is not a root")]
    NotARoot(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
