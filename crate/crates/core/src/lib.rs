//! Exact motion planning on directed cube-boundary spheres.
//!
//! The directed `n`-sphere is the boundary of `[0,1]^(n+1)` where a path is
//! directed when every coordinate is non-decreasing along it. This crate
//! decides which pairs of points are joined by a directed path, plans such a
//! path with one of two staircase planners, and checks all of it against a
//! brute-force grid oracle.
//!
//! ```
//! use dispheres::{classify, is_reachable, plan, PartitionLabel, Point};
//!
//! let x: Point = "0,1/3,1/2".parse()?;
//! let y: Point = "1,1,1/2".parse()?;
//! assert!(is_reachable(&x, &y)?);
//! assert_eq!(classify(&x, &y)?, PartitionLabel::A2);
//!
//! let path = plan(&x, &y)?;
//! assert!(path.stays_on_boundary());
//! assert_eq!(path.start(), &x);
//! assert_eq!(path.end(), &y);
//!
//! // Raising coordinate 0 while the others stay at 1/2 crosses the open cube.
//! let a: Point = "0,1/2,1/2".parse()?;
//! let b: Point = "1,1/2,1/2".parse()?;
//! assert!(!is_reachable(&a, &b)?);
//! # Ok::<(), dispheres::Error>(())
//! ```
//!
//! All decisions use exact rationals. Floating point appears only in
//! [`rational::to_f64`], for plot output.
//!
//! The guide in `book/` walks through the constructions chapter by chapter;
//! its code blocks are compiled and run as doctests of this crate.

pub mod dipath;
pub mod error;
pub mod oracle;
pub mod planner;
pub mod point;
pub mod rational;
pub mod sample;

pub use dipath::Dipath;
pub use error::{Endpoint, Error, Result};
pub use oracle::{GridGraph, LatticeDipath};
pub use planner::{
    classify, contract_homotopy, is_reachable, plan, staircase, violates, violation,
    PartitionLabel, PlannerOrder, Violation,
};
pub use point::{CoordClass, CoordPattern, Point};
pub use rational::Rational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/points.md")]
    mod points {}
    #[doc = include_str!("../../../book/src/dipaths.md")]
    mod dipaths {}
    #[doc = include_str!("../../../book/src/staircases.md")]
    mod staircases {}
    #[doc = include_str!("../../../book/src/reachability.md")]
    mod reachability {}
    #[doc = include_str!("../../../book/src/homotopy.md")]
    mod homotopy {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
