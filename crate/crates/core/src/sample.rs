//! Seeded generators for boundary points, ordered pairs and monotone paths.
//!
//! The distributions deliberately put mass on the cases the pattern
//! conditions care about: coordinates pinned at 0 or 1, equal source and
//! target coordinates, and small denominators that make interior values
//! collide.

use rand::Rng;

use crate::dipath::Dipath;
use crate::planner::is_reachable;
use crate::point::{CoordClass, Point};
use crate::rational::{self, Rational};

/// Largest denominator used for random interior values.
pub const MAX_DENOMINATOR: i64 = 12;

/// A rational strictly inside `(lo, 1)`; `lo` must be below 1.
pub fn interior_above<R: Rng + ?Sized>(rng: &mut R, lo: &Rational) -> Rational {
    for _ in 0..16 {
        let q = rng.gen_range(2..=MAX_DENOMINATOR);
        let p = rng.gen_range(1..q);
        let r = rational::ratio(p, q);
        if r > *lo {
            return r;
        }
    }
    (lo + rational::one()) / rational::ratio(2, 1)
}

fn pin_one<R: Rng + ?Sized>(rng: &mut R, coords: &mut [Rational], value: Rational) {
    let c = rng.gen_range(0..coords.len());
    coords[c] = value;
}

/// A random point of the boundary of `[0,1]^(n+1)`.
pub fn boundary_point<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Point {
    let mut coords: Vec<Rational> = (0..=n)
        .map(|_| match rng.gen_range(0..4) {
            0 => rational::zero(),
            1 => rational::one(),
            _ => interior_above(rng, &rational::zero()),
        })
        .collect();
    if !coords.iter().any(|c| CoordClass::of(c).is_pinned()) {
        let v = if rng.gen_bool(0.5) {
            rational::zero()
        } else {
            rational::one()
        };
        pin_one(rng, &mut coords, v);
    }
    Point::new(coords).expect("coordinates in [0,1]")
}

/// A random pair of boundary points with `x <= y` coordinatewise. Not
/// necessarily reachable.
pub fn ordered_boundary_pair<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (Point, Point) {
    let x = boundary_point(rng, n);
    let mut y: Vec<Rational> = x
        .coords()
        .iter()
        .map(|xi| {
            if *xi == rational::one() {
                return rational::one();
            }
            match rng.gen_range(0..4) {
                0 => xi.clone(),
                1 => rational::one(),
                _ => interior_above(rng, xi),
            }
        })
        .collect();
    if !y.iter().any(|c| CoordClass::of(c).is_pinned()) {
        pin_one(rng, &mut y, rational::one());
    }
    (x, Point::new(y).expect("coordinates in [0,1]"))
}

/// A random reachable pair, by rejection from [`ordered_boundary_pair`].
pub fn reachable_pair<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (Point, Point) {
    loop {
        let (x, y) = ordered_boundary_pair(rng, n);
        if is_reachable(&x, &y).expect("same dimension") {
            return (x, y);
        }
    }
}

/// A random monotone polygonal path in `[0,1]^(n+1)` with `segments`
/// segments and strictly increasing random stages.
pub fn monotone_dipath<R: Rng + ?Sized>(rng: &mut R, n: usize, segments: usize) -> Dipath {
    let denom = 4 * MAX_DENOMINATOR;
    let columns: Vec<Vec<i64>> = (0..=n)
        .map(|_| {
            let mut c: Vec<i64> = (0..=segments).map(|_| rng.gen_range(0..=denom)).collect();
            c.sort_unstable();
            c
        })
        .collect();
    let waypoints = (0..=segments)
        .map(|k| {
            Point::new(
                columns
                    .iter()
                    .map(|c| rational::ratio(c[k], denom))
                    .collect(),
            )
            .expect("coordinates in [0,1]")
        })
        .collect();
    if segments == 0 {
        return Dipath::uniform(waypoints).expect("single waypoint");
    }
    let mut cuts: Vec<i64> = Vec::with_capacity(segments + 1);
    cuts.push(0);
    let stage_denom = 100 * segments as i64;
    while cuts.len() < segments {
        let c = rng.gen_range(1..stage_denom);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.push(stage_denom);
    cuts.sort_unstable();
    let stages = cuts
        .into_iter()
        .map(|c| rational::ratio(c, stage_denom))
        .collect();
    Dipath::new(waypoints, stages).expect("monotone by construction")
}
