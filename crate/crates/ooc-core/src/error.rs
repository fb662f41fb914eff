use std::fmt;

/// Errors produced by code construction and verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A codeword needs at least one '1' chip.
    EmptyPositions,
    /// A chip position fell outside `[0, n)`.
    PositionOutOfRange { position: u32, n: u32 },
    /// The same chip position was given twice.
    DuplicatePosition { position: u32 },
    /// A bitstring could not be parsed into a codeword.
    InvalidBitstring(String),
    /// The requested weight cannot be realized at this length.
    WeightOutOfRange { omega: u32, n: u32 },
    /// A correlation order must lie in `[1, omega - 1]`.
    LambdaOutOfRange { lambda: u32, omega: u32 },
    /// A cyclic gap must lie in `[1, n - 1]`.
    GapOutOfRange { gap: u32, n: u32 },
    /// Two codewords of different lengths cannot be compared.
    LengthMismatch { left: u32, right: u32 },
    /// The capacity bound needs `n > omega > lambda >= 1`.
    BoundDomain { n: u64, omega: u64, lambda: u64 },
    /// The minimal-length formula is only defined for correlation limit 1.
    UnsupportedLambda { lambda: u64 },
    /// Exact integer arithmetic overflowed a fixed-width result.
    Overflow(&'static str),
    /// A runtime budget expired before the stage finished.
    BudgetExceeded { stage: &'static str },
    /// An exhaustive search was refused because the instance is too large.
    InstanceTooLarge { n: u32, limit: u32 },
    /// A precondition on a plain argument was violated.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyPositions => write!(f, "codeword has no '1' positions"),
            Error::PositionOutOfRange { position, n } => {
                write!(f, "position {position} is outside [0, {n})")
            }
            Error::DuplicatePosition { position } => {
                write!(f, "position {position} appears more than once")
            }
            Error::InvalidBitstring(reason) => write!(f, "invalid bitstring: {reason}"),
            Error::WeightOutOfRange { omega, n } => {
                write!(f, "weight {omega} is not in [2, n] for length {n}")
            }
            Error::LambdaOutOfRange { lambda, omega } => {
                write!(
                    f,
                    "correlation order {lambda} is not in [1, {}] for weight {omega}",
                    omega.saturating_sub(1)
                )
            }
            Error::GapOutOfRange { gap, n } => {
                write!(f, "gap {gap} is outside [1, {}] for length {n}", n.saturating_sub(1))
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "codeword lengths differ: {left} vs {right}")
            }
            Error::BoundDomain { n, omega, lambda } => {
                write!(
                    f,
                    "capacity bound requires n > omega > lambda >= 1, got n={n}, omega={omega}, lambda={lambda}"
                )
            }
            Error::UnsupportedLambda { lambda } => {
                write!(f, "minimal code length is only defined for lambda = 1, got {lambda}")
            }
            Error::Overflow(what) => write!(f, "integer overflow computing {what}"),
            Error::BudgetExceeded { stage } => {
                write!(f, "runtime budget exceeded during {stage}")
            }
            Error::InstanceTooLarge { n, limit } => {
                write!(f, "exhaustive search refused for n={n} (limit {limit}); raise the guard to force")
            }
            Error::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
        }
    }
}

impl std::error::Error for Error {}
