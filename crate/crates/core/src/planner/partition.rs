use std::fmt;

use serde::Serialize;

use crate::dipath::Dipath;
use crate::error::{Endpoint, Error, Result};
use crate::point::Point;

use super::staircase::{first_violation, staircase};
use super::PlannerOrder;

/// The part of the two-piece partition of the reachability relation a pair
/// falls in.
///
/// `A1` holds the pairs whose identity staircase stays on the boundary;
/// `A2` holds the rest, and for every one of them the reversal staircase
/// stays on the boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PartitionLabel {
    A1,
    A2,
}

impl PartitionLabel {
    /// The staircase order that serves this part.
    pub fn order(self, n: usize) -> PlannerOrder {
        match self {
            PartitionLabel::A1 => PlannerOrder::identity(n),
            PartitionLabel::A2 => PlannerOrder::reversal(n),
        }
    }
}

impl fmt::Display for PartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionLabel::A1 => f.write_str("A1"),
            PartitionLabel::A2 => f.write_str("A2"),
        }
    }
}

/// Decides which part `(x, y)` belongs to, or why it is not reachable.
///
/// The errors are the diagnostics for unreachable pairs: `NotOnBoundary`,
/// `NotOrdered`, or `NotReachable` carrying the point where each staircase
/// enters the open cube. `DimensionMismatch` signals malformed input.
pub fn classify(x: &Point, y: &Point) -> Result<PartitionLabel> {
    x.check_same_len(y)?;
    if !x.is_on_boundary() {
        return Err(Error::NotOnBoundary {
            endpoint: Endpoint::Source,
        });
    }
    if !y.is_on_boundary() {
        return Err(Error::NotOnBoundary {
            endpoint: Endpoint::Target,
        });
    }
    if let Some(coordinate) = x.first_decrease(y) {
        return Err(Error::NotOrdered { coordinate });
    }
    let n = x.dimension();
    let Some(identity) = first_violation(x, y, &PlannerOrder::identity(n)) else {
        return Ok(PartitionLabel::A1);
    };
    match first_violation(x, y, &PlannerOrder::reversal(n)) {
        None => Ok(PartitionLabel::A2),
        Some(reversal) => Err(Error::NotReachable { identity, reversal }),
    }
}

/// Whether some directed path on the cube boundary runs from `x` to `y`.
///
/// Only a dimension mismatch is an error; every other failure is `false`.
pub fn is_reachable(x: &Point, y: &Point) -> Result<bool> {
    match classify(x, y) {
        Ok(_) => Ok(true),
        Err(e @ Error::DimensionMismatch { .. }) => Err(e),
        Err(_) => Ok(false),
    }
}

/// A directed path on the boundary from `x` to `y`: the identity staircase
/// on `A1`, the reversal staircase on `A2`.
pub fn plan(x: &Point, y: &Point) -> Result<Dipath> {
    let label = classify(x, y)?;
    let path = staircase(x, y, &label.order(x.dimension()))?;
    debug_assert!(path.stays_on_boundary());
    Ok(path)
}
