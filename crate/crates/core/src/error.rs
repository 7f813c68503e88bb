use serde::Serialize;
use thiserror::Error;

use crate::planner::Violation;

/// Which end of a requested motion an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Endpoint {
    Source,
    Target,
}

impl std::fmt::Display for Endpoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Endpoint::Source => f.write_str("source"),
            Endpoint::Target => f.write_str("target"),
        }
    }
}

/// Every failure the library reports.
///
/// Errors serialize to JSON as an object whose `code` field is the
/// SCREAMING_SNAKE_CASE variant name, followed by the variant's fields.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "code", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Error {
    #[error("dimension mismatch: {left} coordinates vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("a point needs at least 2 coordinates, got {len}")]
    TooFewCoordinates { len: usize },

    #[error("coordinate {index} is {value}, outside [0,1]")]
    CoordinateOutOfRange { index: usize, value: String },

    #[error("malformed rational {text:?}: expected p/q or an integer")]
    MalformedRational { text: String },

    #[error("parameter {value} lies outside [0,1]")]
    ParameterOutOfRange { value: String },

    #[error("malformed dipath: {reason}")]
    MalformedDipath { reason: String },

    #[error("dipath decreases coordinate {coordinate} along segment {segment}")]
    NotMonotone { segment: usize, coordinate: usize },

    #[error("{endpoint} point is not on the cube boundary")]
    NotOnBoundary { endpoint: Endpoint },

    #[error("coordinate {coordinate} of the source exceeds the target")]
    NotOrdered { coordinate: usize },

    #[error(
        "pair is not reachable on the sphere: identity staircase leaves the boundary at \
         coordinate {}, reversal staircase at coordinate {}",
        identity.coordinate,
        reversal.coordinate
    )]
    NotReachable {
        identity: Violation,
        reversal: Violation,
    },

    #[error("invalid planner order: {reason}")]
    InvalidOrder { reason: String },

    #[error("invalid parameter: {reason}")]
    InvalidParameter { reason: String },

    #[error("{coords:?} is not a vertex of the grid")]
    NotAVertex { coords: Vec<u32> },

    #[error("path enumeration exceeded the cap of {cap} (reached {reached})")]
    PathExplosion { cap: usize, reached: usize },
}

impl Error {
    /// The machine-readable code, as it appears in the serialized form.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
            Error::TooFewCoordinates { .. } => "TOO_FEW_COORDINATES",
            Error::CoordinateOutOfRange { .. } => "COORDINATE_OUT_OF_RANGE",
            Error::MalformedRational { .. } => "MALFORMED_RATIONAL",
            Error::ParameterOutOfRange { .. } => "PARAMETER_OUT_OF_RANGE",
            Error::MalformedDipath { .. } => "MALFORMED_DIPATH",
            Error::NotMonotone { .. } => "NOT_MONOTONE",
            Error::NotOnBoundary { .. } => "NOT_ON_BOUNDARY",
            Error::NotOrdered { .. } => "NOT_ORDERED",
            Error::NotReachable { .. } => "NOT_REACHABLE",
            Error::InvalidOrder { .. } => "INVALID_ORDER",
            Error::InvalidParameter { .. } => "INVALID_PARAMETER",
            Error::NotAVertex { .. } => "NOT_A_VERTEX",
            Error::PathExplosion { .. } => "PATH_EXPLOSION",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
