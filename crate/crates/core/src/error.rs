use thiserror::Error;

use crate::setcore::PointSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopoError {
    #[error("family must contain both the empty set and the whole ground set")]
    MissingEmptyOrFull,
    #[error("family is not closed under union: {0:?} ∪ {1:?} is missing")]
    NotClosedUnderUnion(PointSet, PointSet),
    #[error("family is not closed under intersection: {0:?} ∩ {1:?} is missing")]
    NotClosedUnderIntersection(PointSet, PointSet),
    #[error("point {point} lies outside a ground set of size {ground}")]
    OutOfRangePoint { point: usize, ground: usize },
    #[error("ground set of size {size} exceeds the limit of {max}")]
    GroundTooLarge { size: usize, max: usize },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("malformed symbolic set: {0}")]
    MalformedShape(String),
    #[error("bad truncation size: {0}")]
    BadSize(String),
    #[error("topology index must be 1 or 2, got {0}")]
    BadIndex(usize),
    #[error("unknown check id `{0}`")]
    UnknownCheckId(String),
    #[error("malformed mining goal: {0}")]
    MalformedGoal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = TopoError> = std::result::Result<T, E>;
