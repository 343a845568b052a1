//! Error type shared by the whole crate.

use alloc::string::String;
use core::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the kernel.
///
/// The split matters to callers: `DimensionMismatch`, `EmptyMatrix`,
/// `DegenerateCode`, `InvalidParameter` and `UndefinedDistance` are misuse of
/// the API or of a construction's parameter range; `EnumerationLimit` and
/// `BudgetExceeded` mean the requested computation is larger than the
/// configured caps; `TheoremViolation` means an internal consistency check
/// between two independently computed quantities failed, which indicates a
/// bug and is never silently ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two vectors that must have equal length do not.
    DimensionMismatch { left: usize, right: usize },
    /// A matrix was constructed with no rows, no columns, or ragged rows.
    EmptyMatrix,
    /// The operation needs a nonzero matrix / nontrivial code.
    DegenerateCode,
    /// Minimum distance of the trivial code `{0}` is undefined (by the usual
    /// convention it is `+infinity`; callers that want the convention must
    /// opt in explicitly).
    UndefinedDistance,
    /// Full enumeration of the code would exceed the configured cap.
    EnumerationLimit { required: u128, cap: u128 },
    /// A non-enumeration resource budget (profile width, identity-suite rank,
    /// Gray-linearity set size, graph vertex count, ...) was exceeded.
    BudgetExceeded {
        what: &'static str,
        required: u128,
        limit: u128,
    },
    /// The code type `4^{k1} 2^{k2}` is too large for exact 128-bit counting.
    TypeTooLarge { k1: usize, k2: usize },
    /// A construction or query was called outside its parameter range.
    InvalidParameter { what: String },
    /// Two quantities that a proved identity forces to agree did not agree.
    TheoremViolation { what: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::EmptyMatrix => write!(f, "matrix must have at least one row and one column"),
            Error::DegenerateCode => write!(f, "operation requires a nonzero matrix"),
            Error::UndefinedDistance => {
                write!(f, "minimum distance of the trivial code is undefined")
            }
            Error::EnumerationLimit { required, cap } => write!(
                f,
                "enumeration of {required} codewords exceeds the cap of {cap}"
            ),
            Error::BudgetExceeded {
                what,
                required,
                limit,
            } => write!(f, "{what}: {required} exceeds the limit of {limit}"),
            Error::TypeTooLarge { k1, k2 } => write!(
                f,
                "code type 4^{k1} 2^{k2} is too large for exact 128-bit counting"
            ),
            Error::InvalidParameter { what } => write!(f, "invalid parameter: {what}"),
            Error::TheoremViolation { what } => {
                write!(f, "internal consistency check failed: {what}")
            }
        }
    }
}

impl core::error::Error for Error {}
