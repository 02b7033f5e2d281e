use thiserror::Error;

use crate::solvers::ParameterKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} is not a member of the given set")]
    VertexNotInSet { vertex: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{kind} is undefined: {reason}")]
    InfeasibleParameter { kind: ParameterKind, reason: String },
    #[error("no {kind} set contains the required vertices: {reason}")]
    RequiredSetInfeasible { kind: ParameterKind, reason: String },
    #[error("parameter {0} requires k >= 1")]
    InvalidK(ParameterKind),
    #[error("oracle is limited to {max} vertices, got {0}", max = crate::oracle::ORACLE_MAX_ORDER)]
    GraphTooLargeForOracle(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("demand owned by vertex {0} is empty")]
    EmptyDemand(usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParameters(String),
    #[error("exhaustive scan is limited to order {max}, got {0}", max = crate::verifier::EXHAUSTIVE_MAX_ORDER)]
    OrderTooLargeForExhaustive(usize),
    #[error("random scan: {0}")]
    InvalidScan(String),
    #[error("theorems {new} and {old} are not both applicable")]
    PairNotApplicable {
        new: crate::verifier::TheoremId,
        old: crate::verifier::TheoremId,
    },
}
