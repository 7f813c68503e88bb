use num_traits::{One, Zero};

use crate::dipath::Dipath;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

use super::{staircase, PlannerOrder};

/// Deforms the staircase section into `γ` as `t` runs from 0 to 1, inside
/// the space of directed paths of the cube with the same endpoints.
///
/// The output follows `γ` on `[0, t/2]`, then the staircase from `γ(t/2)` to
/// `γ(1 − t/2)` squeezed onto `[t/2, 1 − t/2]`, then `γ` on `[1 − t/2, 1]`.
/// Its waypoints are exactly the breakpoints of those three pieces. At
/// `t = 0` the result is the staircase for `order`, and at `t = 1` it is `γ`
/// itself (the middle piece is empty there).
pub fn contract_homotopy(gamma: &Dipath, t: &Rational, order: &PlannerOrder) -> Result<Dipath> {
    if !rational::in_unit_interval(t) {
        return Err(Error::ParameterOutOfRange {
            value: rational::format(t),
        });
    }
    if order.len() != gamma.len() {
        return Err(Error::DimensionMismatch {
            left: gamma.len(),
            right: order.len(),
        });
    }
    if t.is_one() {
        return Ok(gamma.clone());
    }

    let half = t / Rational::from_integer(2.into());
    let upper = Rational::one() - &half;
    let (mut points, mut params) = gamma.restricted_breakpoints(&Rational::zero(), &half);
    let (tail_points, tail_params) = gamma.restricted_breakpoints(&upper, &Rational::one());

    let from = points.last().expect("restriction is non-empty");
    let to = &tail_points[0];
    let section = staircase(from, to, order)?;
    let steps = section.segment_count() as i64;
    let width = &upper - &half;
    for (k, w) in section.waypoints().iter().enumerate().skip(1) {
        points.push(w.clone());
        params.push(&half + &width * rational::ratio(k as i64, steps));
    }

    points.extend(tail_points.into_iter().skip(1));
    params.extend(tail_params.into_iter().skip(1));
    Dipath::new(points, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Point;
    use crate::rational::ratio;

    fn p(s: &str) -> Point {
        s.parse().unwrap()
    }

    fn diagonal() -> Dipath {
        Dipath::uniform(vec![p("0,0"), p("1/2,1/2"), p("1,1")]).unwrap()
    }

    #[test]
    fn endpoints_of_the_deformation() {
        let g = diagonal();
        let id = PlannerOrder::identity(1);
        assert_eq!(contract_homotopy(&g, &ratio(1, 1), &id).unwrap(), g);
        assert_eq!(
            contract_homotopy(&g, &ratio(0, 1), &id).unwrap(),
            staircase(g.start(), g.end(), &id).unwrap()
        );
    }

    #[test]
    fn halfway_breakpoints() {
        let h = contract_homotopy(&diagonal(), &ratio(1, 2), &PlannerOrder::identity(1)).unwrap();
        let pts: Vec<String> = h.waypoints().iter().map(|w| w.to_string()).collect();
        assert_eq!(
            pts,
            ["(0, 0)", "(1/4, 1/4)", "(3/4, 1/4)", "(3/4, 3/4)", "(1, 1)"]
        );
        assert_eq!(
            h.stages(),
            &[
                ratio(0, 1),
                ratio(1, 4),
                ratio(1, 2),
                ratio(3, 4),
                ratio(1, 1)
            ]
        );
    }

    #[test]
    fn constant_path_stays_constant() {
        let x = p("1/3,2/3");
        let g = Dipath::constant(x.clone());
        for t in [ratio(0, 1), ratio(1, 3), ratio(1, 1)] {
            let h = contract_homotopy(&g, &t, &PlannerOrder::reversal(1)).unwrap();
            assert!(h.waypoints().iter().all(|w| *w == x));
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        let g = diagonal();
        assert!(matches!(
            contract_homotopy(&g, &ratio(3, 2), &PlannerOrder::identity(1)),
            Err(Error::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            contract_homotopy(&g, &ratio(1, 2), &PlannerOrder::identity(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
