use thiserror::Error;

use crate::pointset::PointSet;

/// A reason a family of sets fails to be a topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingEmptySet,
    MissingFullSet,
    NotClosedUnderUnion(PointSet, PointSet),
    NotClosedUnderIntersection(PointSet, PointSet),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::MissingEmptySet => write!(f, "missing the empty set"),
            Violation::MissingFullSet => write!(f, "missing the full set"),
            Violation::NotClosedUnderUnion(a, b) => {
                write!(f, "not closed under union: {a} ∪ {b} is absent")
            }
            Violation::NotClosedUnderIntersection(a, b) => {
                write!(f, "not closed under intersection: {a} ∩ {b} is absent")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("point count {0} outside 1..=64")]
    InvalidPointCount(usize),
    #[error("point {point} out of range for a space of {n} points")]
    PointOutOfRange { point: usize, n: usize },
    #[error("not a topology: {}", join(.0))]
    InvalidTopology(Vec<Violation>),
    #[error("relation is not reflexive at point {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {0} ≤ {1} ≤ {2} but not {0} ≤ {2}")]
    NotTransitive(usize, usize, usize),
    #[error("relation matrix is not square of size {0}")]
    MalformedMatrix(usize),
    #[error("subspace must be nonempty")]
    EmptySubset,
    #[error("set of {0} point(s) is too small; at least 2 are required")]
    SetTooSmall(usize),
    #[error("n = {n} exceeds the limit {max} for this operation")]
    TooLarge { n: usize, max: usize },
    #[error("topology would have more than {0} open sets")]
    TooManyOpens(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("construction claim violated: {0}")]
    ClaimViolated(String),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
