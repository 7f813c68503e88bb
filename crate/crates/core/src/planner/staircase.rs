use serde::Serialize;

use crate::dipath::Dipath;
use crate::error::{Endpoint, Error, Result};
use crate::point::{CoordClass, Point};

use super::PlannerOrder;

/// Where a staircase enters the open cube: at step `step` of the order,
/// while raising coordinate `coordinate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Violation {
    pub coordinate: usize,
    pub step: usize,
}

fn check_order_len(x: &Point, order: &PlannerOrder) -> Result<()> {
    if order.len() != x.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: order.len(),
        });
    }
    Ok(())
}

fn check_ordered(x: &Point, y: &Point) -> Result<()> {
    x.check_same_len(y)?;
    match x.first_decrease(y) {
        Some(coordinate) => Err(Error::NotOrdered { coordinate }),
        None => Ok(()),
    }
}

/// The monotone path from `x` to `y` that raises one coordinate at a time,
/// in the sequence given by `order`.
///
/// The result has `n + 2` waypoints over `n + 1` equal stages; waypoint
/// `k + 1` differs from waypoint `k` only in coordinate `order[k]`. Stages
/// where that coordinate does not change are kept, so the parametrization
/// depends only on `n`. Works anywhere in the cube, boundary or not.
pub fn staircase(x: &Point, y: &Point, order: &PlannerOrder) -> Result<Dipath> {
    check_ordered(x, y)?;
    check_order_len(x, order)?;
    let mut waypoints = Vec::with_capacity(x.len() + 1);
    let mut current = x.clone();
    waypoints.push(current.clone());
    for &c in order.as_slice() {
        current = current.with_coord(c, y.coords()[c].clone());
        waypoints.push(current.clone());
    }
    Dipath::uniform(waypoints)
}

/// The first step at which the staircase for `order` leaves the boundary,
/// or `None` if it never does.
///
/// Step `k` raises coordinate `c = order[k]`; coordinates already raised sit
/// at their `y` values and the rest at their `x` values. The segment is off
/// the boundary iff `x_c < y_c` and every other coordinate is interior, which
/// for the identity order reads: exists `j` with `x_j < y_j`, `y_i` interior
/// for `i < j`, `x_i` interior for `i > j`. The reversal order swaps the roles
/// of `x` and `y` in the last two clauses.
pub fn violation(x: &Point, y: &Point, order: &PlannerOrder) -> Result<Option<Violation>> {
    check_ordered(x, y)?;
    check_order_len(x, order)?;
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
    Ok(first_violation(x, y, order))
}

/// Same as [`violation`] without the precondition checks.
pub(crate) fn first_violation(x: &Point, y: &Point, order: &PlannerOrder) -> Option<Violation> {
    let perm = order.as_slice();
    let interior = |p: &Point, c: usize| p.class(c) == CoordClass::Interior;
    (0..perm.len())
        .find(|&k| {
            let j = perm[k];
            x.coords()[j] < y.coords()[j]
                && perm[..k].iter().all(|&i| interior(y, i))
                && perm[k + 1..].iter().all(|&i| interior(x, i))
        })
        .map(|step| Violation {
            coordinate: perm[step],
            step,
        })
}

/// Whether the staircase for `order` leaves the cube boundary.
pub fn violates(x: &Point, y: &Point, order: &PlannerOrder) -> Result<bool> {
    violation(x, y, order).map(|v| v.is_some())
}
