use alloc::string::String;
use core::fmt;

/// Errors reported by this crate.
///
/// `InvariantViolation` is special: it flags a situation that the library's
/// own guarantees say cannot happen (for example, a deficiency-reducing
/// projection that the theory promises always exists was not found). Callers
/// that script over the CLI can rely on it being mapped to a distinct exit
/// code so that genuine findings are distinguishable from usage errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The operation requires a nonempty class.
    EmptyClass,
    /// The operation requires a proper subset of the cube.
    FullCube,
    /// Cube dimension outside the supported range.
    DimensionOutOfRange { n: u32, max: u32 },
    /// Two values that must live in the same cube do not.
    DimensionMismatch { expected: u32, found: u32 },
    /// A coordinate outside 1..=n.
    CoordOutOfRange { coord: u32, n: u32 },
    /// A parameter violated a documented precondition.
    BadParameter { name: &'static str, reason: &'static str },
    /// The input class is not maximum although the operation requires it.
    NotMaximum { reason: &'static str },
    /// The input class is not maximal although the operation requires it.
    NotMaximal,
    /// The input collection is not complete although the operation requires it.
    NotComplete,
    /// The requested exhaustive sweep exceeds the supported budget.
    BudgetExceeded { what: &'static str },
    /// Text format error.
    Parse { line: usize, msg: String },
    /// A guarantee of the underlying theory failed on this input.
    InvariantViolation { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyClass => write!(f, "precondition violated: class must be nonempty"),
            Error::FullCube => write!(f, "precondition violated: class must not be the full cube"),
            Error::DimensionOutOfRange { n, max } => {
                write!(f, "cube dimension {n} out of range (supported: 0..={max})")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected n={expected}, found n={found}")
            }
            Error::CoordOutOfRange { coord, n } => {
                write!(f, "coordinate {coord} out of range 1..={n}")
            }
            Error::BadParameter { name, reason } => {
                write!(f, "precondition violated: {name} {reason}")
            }
            Error::NotMaximum { reason } => {
                write!(f, "precondition violated: class is not maximum ({reason})")
            }
            Error::NotMaximal => write!(f, "precondition violated: class is not maximal"),
            Error::NotComplete => {
                write!(f, "precondition violated: collection is not complete")
            }
            Error::BudgetExceeded { what } => {
                write!(f, "search budget exceeded: {what}")
            }
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::InvariantViolation { what } => {
                write!(f, "invariant violation (this contradicts a guarantee): {what}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
