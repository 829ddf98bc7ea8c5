use thiserror::Error;

use crate::demolition::LineRef;
use crate::partition::{Frame, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("partition ({partition}) does not fit in the {frame} frame")]
    DoesNotFit { partition: Partition, frame: Frame },

    #[error("partition ({partition}) has more than {rows} rows")]
    TooManyRows { partition: Partition, rows: usize },

    #[error("shortness is undefined on the empty frame {0}")]
    EmptyFrame(Frame),

    #[error("the empty partition has no corners")]
    NoCorners,

    #[error("({lam}) and rotated ({mu}) overlap in the {frame} frame")]
    Overlap {
        lam: Partition,
        mu: Partition,
        frame: Frame,
    },

    #[error("inner shape ({inner}) is not contained in outer shape ({outer})")]
    NotContained { inner: Partition, outer: Partition },

    #[error("malformed filling: {0}")]
    MalformedFilling(String),

    #[error("{line} is outside the {frame} frame")]
    LineOutOfRange { line: LineRef, frame: Frame },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
