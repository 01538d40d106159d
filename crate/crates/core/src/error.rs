use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown sequence `{0}` (expected one of F, L, J, j, P, Q)")]
    UnknownSequence(String),
    #[error("recurrence coefficient q must be nonzero")]
    ZeroQ,
    #[error("index argument must be nonnegative, got {0}")]
    NegativeArgument(i64),
    #[error("binomial sums need a nonnegative upper limit, got {0}")]
    NegativeLimit(i64),
    #[error("zero weight raised to a negative power (upper limit {0})")]
    SingularWeight(i64),
    #[error("sequences `{0}` and `{1}` do not share a recurrence relation")]
    MismatchedRecurrence(String, String),
    #[error("unknown variant {0} (expected 1, 2 or 3)")]
    UnknownVariant(u8),
    #[error("assignment is missing symbol `{0}`")]
    MissingSymbol(String),
    #[error("assignment violates constraint `{0}`")]
    ConstraintViolated(String),
    #[error("upper limit `{symbol}` must be nonnegative, got {value}")]
    LimitSign { symbol: String, value: i64 },
    #[error("unknown identity ids: {}", .0.join(", "))]
    UnknownIdentity(Vec<String>),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("sequence `{0}` is not bound")]
    UnboundSequence(char),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("template parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
