//! Staircase motion planners and the two-piece partition they induce.
//!
//! On directed `R^(n+1)` a staircase, raising the coordinates one at a time,
//! is a global planner. On the cube boundary it can dive into the open cube.
//! The identity and reversal staircases never both do so for a reachable
//! pair, which gives a partition into two parts each served by one of them.

mod homotopy;
mod order;
mod partition;
mod staircase;

pub use homotopy::contract_homotopy;
pub use order::PlannerOrder;
pub use partition::{classify, is_reachable, plan, PartitionLabel};
pub use staircase::{staircase, violates, violation, Violation};
