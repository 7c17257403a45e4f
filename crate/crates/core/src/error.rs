use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("EMPTY_ZEROSET: operation needs at least one zero")]
    EmptyZeroSet,
    #[error("NONPOSITIVE_RADIUS: radius must be a positive finite magnitude")]
    NonpositiveRadius,
    #[error("non-finite log value {0}")]
    NonFiniteLog(f64),
    #[error("UNSORTED: zero entries must have strictly increasing log_radius")]
    Unsorted,
    #[error("DUPLICATE_RADIUS: two zero entries share a log_radius")]
    DuplicateRadius,
    #[error("invalid zero entry: {0}")]
    InvalidEntry(String),
    #[error("LOG_LOG_UNDEFINED: log M(r) <= 1 at the query radius")]
    LogLogUndefined,
    #[error("CUTOFF_TOO_LOW: a dropped zero has r_m < 2|z|")]
    CutoffTooLow,
    #[error("EMPTY_POINTS: point set must be nonempty")]
    EmptyPoints,
    #[error("NONPOSITIVE_H: Cartan parameter h must be positive")]
    NonpositiveH,
    #[error("POINT_COUNT_EXCEEDED: constructive Cartan cover limited to {max} points, got {got}")]
    PointCountExceeded { max: usize, got: usize },
    #[error("ETA_OUT_OF_RANGE: eta must lie in (0, 1/2)")]
    EtaOutOfRange,
    #[error("PRECONDITION_FAIL: {0}")]
    PreconditionFail(String),
    #[error("NOT_FOUND: {context} (best achieved: {achieved})")]
    NotFound { context: String, achieved: f64 },
    #[error("RULE_NOT_DECREASING: epsilon rule must be strictly decreasing in (0, 1)")]
    RuleNotDecreasing,
    #[error("INDEX_OUT_OF_RANGE: term index {0} outside the representable prefix")]
    IndexOutOfRange(usize),
    #[error("PSI_BELOW_IDENTITY: psi(r) < r at log r = {0}")]
    PsiBelowIdentity(f64),
    #[error("PARSE_ERROR at line {line}: {reason}")]
    ParseError { line: usize, reason: String },
    #[error("ESCAPE_RADIUS_TOO_SMALL: escape radius must exceed twice the largest zero radius")]
    EscapeRadiusTooSmall,
    #[error("BUDGET_UNSATISFIABLE: truncation budget must be positive")]
    BudgetUnsatisfiable,
}
