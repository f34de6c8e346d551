use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, NcmError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NcmError {
    /// A group or degree-table label that could not be parsed.
    InvalidLabel(String),
    /// The requested group exists but is not realized by this crate.
    OutsideEnvelope { group: String, limit: &'static str },
    /// A computation was refused because its predicted size exceeds a guard.
    SizeGuard {
        what: &'static str,
        predicted: String,
        limit: u64,
    },
    /// Malformed arguments: wrong composition sums, mismatched tuples, etc.
    Usage(String),
    /// An invariant that must hold on every valid input failed.
    Consistency(String),
}

impl fmt::Display for NcmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NcmError::InvalidLabel(label) => write!(f, "unrecognized group label `{label}`"),
            NcmError::OutsideEnvelope { group, limit } => {
                write!(f, "group {group} is outside the supported range ({limit})")
            }
            NcmError::SizeGuard {
                what,
                predicted,
                limit,
            } => write!(
                f,
                "size guard: {what} would have {predicted} entries, limit is {limit}"
            ),
            NcmError::Usage(msg) => write!(f, "usage error: {msg}"),
            NcmError::Consistency(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl core::error::Error for NcmError {}
