//! Piecewise-linear directed paths with an explicit parametrization.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::Point;
use crate::rational::{self, Rational};

/// A coordinatewise non-decreasing polygonal path.
///
/// Segment `j` joins `waypoints[j]` to `waypoints[j + 1]` and is traversed
/// while the parameter runs over `[stages[j], stages[j + 1]]`. Stages start
/// at 0, end at 1 and never decrease. A stage of zero length is allowed only
/// for a segment whose endpoints coincide, so the path stays continuous.
/// A single-waypoint path has no stages and is constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDipath")]
pub struct Dipath {
    waypoints: Vec<Point>,
    #[serde(serialize_with = "serialize_stages")]
    stages: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawDipath {
    waypoints: Vec<Point>,
    stages: Vec<String>,
}

impl TryFrom<RawDipath> for Dipath {
    type Error = Error;

    fn try_from(raw: RawDipath) -> Result<Self> {
        let stages = raw
            .stages
            .iter()
            .map(|s| rational::parse(s))
            .collect::<Result<Vec<_>>>()?;
        Dipath::new(raw.waypoints, stages)
    }
}

fn serialize_stages<S: serde::Serializer>(
    stages: &[Rational],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(stages.iter().map(rational::format))
}

impl Dipath {
    pub fn new(waypoints: Vec<Point>, stages: Vec<Rational>) -> Result<Self> {
        let malformed = |reason: String| Err(Error::MalformedDipath { reason });
        let Some(first) = waypoints.first() else {
            return malformed("a dipath needs at least one waypoint".into());
        };
        for w in &waypoints[1..] {
            first.check_same_len(w)?;
        }
        let expected_stages = if waypoints.len() == 1 {
            0
        } else {
            waypoints.len()
        };
        if stages.len() != expected_stages {
            return malformed(format!(
                "{} waypoints need {} stage boundaries, got {}",
                waypoints.len(),
                expected_stages,
                stages.len()
            ));
        }
        if let (Some(s0), Some(sk)) = (stages.first(), stages.last()) {
            if !s0.is_zero() || !sk.is_one() {
                return malformed("stages must start at 0 and end at 1".into());
            }
        }
        for (j, pair) in waypoints.windows(2).enumerate() {
            if stages[j] > stages[j + 1] {
                return malformed(format!("stage boundary {} decreases", j + 1));
            }
            if let Some(coordinate) = pair[0].first_decrease(&pair[1]) {
                return Err(Error::NotMonotone {
                    segment: j,
                    coordinate,
                });
            }
            if stages[j] == stages[j + 1] && pair[0] != pair[1] {
                return malformed(format!(
                    "segment {j} has a zero-length stage but distinct endpoints"
                ));
            }
        }
        Ok(Dipath { waypoints, stages })
    }

    /// Waypoints traversed over equal-length stages.
    pub fn uniform(waypoints: Vec<Point>) -> Result<Self> {
        let segments = waypoints.len().saturating_sub(1);
        let stages = if segments == 0 {
            Vec::new()
        } else {
            (0..=segments)
                .map(|k| rational::ratio(k as i64, segments as i64))
                .collect()
        };
        Dipath::new(waypoints, stages)
    }

    pub fn constant(point: Point) -> Self {
        Dipath {
            waypoints: vec![point],
            stages: Vec::new(),
        }
    }

    pub fn waypoints(&self) -> &[Point] {
        &self.waypoints
    }

    pub fn stages(&self) -> &[Rational] {
        &self.stages
    }

    pub fn start(&self) -> &Point {
        &self.waypoints[0]
    }

    pub fn end(&self) -> &Point {
        self.waypoints.last().expect("non-empty by construction")
    }

    /// Number of coordinates of every waypoint.
    pub fn len(&self) -> usize {
        self.start().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn segment_count(&self) -> usize {
        self.waypoints.len() - 1
    }

    /// The point at parameter `s`, by linear interpolation inside the stage
    /// containing `s`.
    pub fn evaluate(&self, s: &Rational) -> Result<Point> {
        if !rational::in_unit_interval(s) {
            return Err(Error::ParameterOutOfRange {
                value: rational::format(s),
            });
        }
        Ok(self.evaluate_unchecked(s))
    }

    pub(crate) fn evaluate_unchecked(&self, s: &Rational) -> Point {
        if self.waypoints.len() == 1 {
            return self.waypoints[0].clone();
        }
        // First segment whose stage has positive length and ends at or after s.
        // Zero-length stages are skipped; they sit on a single point.
        let j = (0..self.segment_count())
            .find(|&j| self.stages[j] < self.stages[j + 1] && *s <= self.stages[j + 1])
            .expect("stages end at 1");
        let (lo, hi) = (&self.stages[j], &self.stages[j + 1]);
        let lambda = (s - lo) / (hi - lo);
        self.waypoints[j].lerp(&self.waypoints[j + 1], &lambda)
    }

    /// True iff the whole image lies in the cube boundary.
    ///
    /// A segment `a + λ(b − a)`, `λ ∈ [0,1]`, lies in the boundary exactly
    /// when some coordinate is constant along it with value 0 or 1. If one
    /// is, every point is on a face. Conversely the segment is covered by
    /// the finitely many closed sets `{λ : coordinate i ∈ {0,1}}`, so one of
    /// them contains an open interval; coordinate `i` is affine in `λ`, so
    /// being 0 (or 1) on an interval forces it to be that constant on all of
    /// `[0,1]`. The test is exact for segments in any direction.
    pub fn stays_on_boundary(&self) -> bool {
        self.waypoints.iter().all(Point::is_on_boundary)
            && self
                .waypoints
                .windows(2)
                .all(|w| segment_on_boundary(&w[0], &w[1]))
    }

    /// Index of the first segment that leaves the boundary.
    pub fn first_segment_off_boundary(&self) -> Option<usize> {
        self.waypoints
            .windows(2)
            .position(|w| !segment_on_boundary(&w[0], &w[1]))
    }

    /// Restriction to `[lo, hi]`, still parametrized by the original
    /// parameter: the waypoints are `γ(lo)`, every interior breakpoint, `γ(hi)`.
    pub(crate) fn restricted_breakpoints(
        &self,
        lo: &Rational,
        hi: &Rational,
    ) -> (Vec<Point>, Vec<Rational>) {
        let mut points = vec![self.evaluate_unchecked(lo)];
        let mut params = vec![lo.clone()];
        if lo == hi {
            return (points, params);
        }
        for (w, s) in self.waypoints.iter().zip(&self.stages) {
            if s > lo && s < hi {
                points.push(w.clone());
                params.push(s.clone());
            }
        }
        points.push(self.evaluate_unchecked(hi));
        params.push(hi.clone());
        (points, params)
    }

    /// Largest coordinate speed over all segments: `max |Δw_i| / Δs`.
    pub fn max_speed(&self) -> Rational {
        self.waypoints
            .windows(2)
            .zip(self.stages.windows(2))
            .filter(|(_, s)| s[0] < s[1])
            .map(|(w, s)| {
                let gap = w[0].sup_distance(&w[1]).expect("equal lengths");
                gap / (&s[1] - &s[0])
            })
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

fn segment_on_boundary(a: &Point, b: &Point) -> bool {
    if a == b {
        return a.is_on_boundary();
    }
    a.coords()
        .iter()
        .zip(b.coords())
        .any(|(u, v)| u == v && (u.is_zero() || u.is_one()))
}
