use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quaternion does not have unit norm: {0}")]
    NonUnitNorm(String),
    #[error("unsupported field value: {0}")]
    UnsupportedField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("malformed cycle notation: {0}")]
    MalformedCycles(String),
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("closure cap of {0} elements exceeded")]
    CapExceeded(usize),
    #[error("mixed element kinds in one group")]
    MixedTags,
    #[error("subgroup precondition failed: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("action is not transitive")]
    NotTransitive,
    #[error("partition is not a block system: {0}")]
    BlocksNotPreserved(String),
    #[error("action is not faithful: kernel has order {0}")]
    UnfaithfulAction(usize),
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("wreath elements have different base groups")]
    BaseMismatch,
    #[error("coset image is not a rotation of the target ordering")]
    NotARotation,
    #[error("singular matrix mod {0}")]
    SingularMatrix(u8),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
