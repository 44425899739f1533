use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("arithmetic overflow in exact integer computation")]
    Overflow,

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not connected")]
    NotConnected,

    #[error("off-diagonal entries of M^2 take more than two values: {0:?}")]
    MoreThanTwoValues(Vec<i64>),

    #[error("children are undefined when b = a")]
    ChildrenUndefined,

    #[error("graph is disconnected; diameter is infinite")]
    InfiniteDiameter,

    #[error(
        "certification conflict at eigenvalue {eigenvalue}: clustered multiplicity {clustered}, \
         exact multiplicity {certified}"
    )]
    CertificationConflict {
        eigenvalue: i64,
        clustered: usize,
        certified: usize,
    },

    #[error("prediction inconsistency: {0}")]
    PredictionInconsistency(String),

    #[error("inconsistent parameters: {0}")]
    InconsistentParameters(String),

    #[error("precondition violation: {0}")]
    PreconditionViolation(String),

    #[error("construction error: {0}")]
    Construction(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("chain broken at step {step}: {reason}")]
    ChainBroken { step: usize, reason: String },

    #[error("unsupported size: n = {n} exceeds the supported bound {max}")]
    UnsupportedSize { n: usize, max: usize },
}
