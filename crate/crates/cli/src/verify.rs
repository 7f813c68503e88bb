//! The `verify` pipeline: every analytic claim checked against the grid
//! oracle or against exact geometry, with counters per check.

use std::fmt;

use dispheres::oracle::{expected_vertex_count, GridGraph, DEFAULT_PATH_CAP};
use dispheres::rational::{self, ratio, Rational};
use dispheres::{
    contract_homotopy, is_reachable, plan, sample, staircase, violates, CoordClass, Dipath, Error,
    PartitionLabel, PlannerOrder, Point,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::output::SCHEMA;

pub const PATH_CAP_ENV: &str = "DISPHERES_GUARDRAIL_PATHS";

/// Largest grid the all-pairs checks will visit.
pub const MAX_GRID_VERTICES: usize = 20_000;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: usize,
    pub m: u32,
    pub samples: usize,
    pub seed: u64,
    pub verbosity: u8,
}

#[derive(Debug)]
pub enum VerifyError {
    Parameter(Error),
    GridTooLarge { vertices: u128 },
    PathCap(Error),
    BadCapValue(String),
}

impl VerifyError {
    /// Name of the guardrail that stopped the run.
    pub fn guardrail(&self) -> &'static str {
        match self {
            VerifyError::Parameter(_) => "parameters",
            VerifyError::GridTooLarge { .. } => "grid-vertices",
            VerifyError::PathCap(_) | VerifyError::BadCapValue(_) => PATH_CAP_ENV,
        }
    }
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::Parameter(e) => write!(f, "parameter error: {e}"),
            VerifyError::GridTooLarge { vertices } => write!(
                f,
                "grid-vertices guardrail: {vertices} vertices exceed {MAX_GRID_VERTICES}"
            ),
            VerifyError::PathCap(e) => write!(f, "{PATH_CAP_ENV} guardrail: {e}"),
            VerifyError::BadCapValue(v) => {
                write!(f, "{PATH_CAP_ENV} must be a positive integer, got {v:?}")
            }
        }
    }
}

impl std::error::Error for VerifyError {}

/// Enumeration cap, overridable through the environment.
pub fn path_cap_from_env() -> Result<usize, VerifyError> {
    match std::env::var(PATH_CAP_ENV) {
        Err(_) => Ok(DEFAULT_PATH_CAP),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or(VerifyError::BadCapValue(v)),
    }
}

#[derive(Debug)]
pub struct Check {
    name: &'static str,
    passed: bool,
    counters: Vec<(&'static str, Value)>,
}

impl Check {
    fn new(name: &'static str, passed: bool, counters: Vec<(&'static str, Value)>) -> Self {
        Check {
            name,
            passed,
            counters,
        }
    }
}

#[derive(Debug)]
pub struct Report {
    vertices: usize,
    checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self, config: &RunConfig) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let counters: Map<String, Value> = c
                    .counters
                    .iter()
                    .map(|(k, v)| ((*k).to_owned(), v.clone()))
                    .collect();
                json!({ "name": c.name, "passed": c.passed, "counters": counters })
            })
            .collect();
        json!({
            "schema": SCHEMA,
            "config": {
                "n": config.n,
                "m": config.m,
                "samples": config.samples,
                "seed": config.seed,
            },
            "vertices": self.vertices,
            "checks": checks,
            "passed": self.passed(),
        })
    }

    pub fn write_csv(&self) {
        println!("check,passed,counter,value");
        for c in &self.checks {
            for (k, v) in &c.counters {
                println!("{},{},{k},{v}", c.name, c.passed);
            }
        }
    }
}

fn progress(config: &RunConfig, what: &str) {
    if config.verbosity > 0 {
        eprintln!("verify: {what}");
    }
}

pub fn run(config: &RunConfig, path_cap: usize) -> Result<Report, VerifyError> {
    let (n, m) = (config.n, config.m);
    if n == 0 || m == 0 {
        return Err(VerifyError::Parameter(Error::InvalidParameter {
            reason: format!("need n >= 1 and m >= 1, got n = {n}, m = {m}"),
        }));
    }
    let expected = expected_vertex_count(n, m);
    if expected > MAX_GRID_VERTICES as u128 {
        return Err(VerifyError::GridTooLarge { vertices: expected });
    }
    progress(config, "building grid");
    let grid = GridGraph::build(n, m).map_err(VerifyError::Parameter)?;
    let mut checks = vec![
        vertex_count(&grid),
        acyclicity(&grid),
        edge_midpoints(&grid),
    ];
    progress(config, "comparing the reachability decision with BFS");
    checks.push(oracle_agreement(&grid));
    checks.push(planner_routes(&grid));

    progress(config, "sampling boundary pairs");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let pairs: Vec<(Point, Point)> = (0..config.samples)
        .map(|_| sample::ordered_boundary_pair(&mut rng, n))
        .collect();
    checks.push(condition_geometry(&pairs));
    checks.push(disjointness(&pairs));
    let reachable: Vec<(Point, Point)> = (0..config.samples)
        .map(|_| sample::reachable_pair(&mut rng, n))
        .collect();
    checks.push(partition_soundness(&reachable));

    progress(config, "counting dihomotopy classes");
    checks.push(dihomotopy(&grid, path_cap)?);
    if n == 2 && m >= 2 {
        checks.push(halfsquare(&grid)?);
    }

    progress(config, "checking the contraction homotopy");
    let paths: Vec<Dipath> = (0..config.samples.div_ceil(10))
        .map(|i| sample::monotone_dipath(&mut rng, n, 1 + i % 4))
        .collect();
    checks.push(homotopy(&paths, n));

    Ok(Report {
        vertices: grid.vertex_count(),
        checks,
    })
}

fn vertex_count(g: &GridGraph) -> Check {
    let expected = expected_vertex_count(g.dimension(), g.resolution());
    Check::new(
        "vertex_count",
        g.vertex_count() as u128 == expected,
        vec![
            ("vertices", json!(g.vertex_count())),
            ("expected", json!(expected as u64)),
            ("edges", json!(g.edge_count())),
        ],
    )
}

fn acyclicity(g: &GridGraph) -> Check {
    let returning = (0..g.vertex_count()).filter(|&v| g.returns_to(v)).count();
    Check::new(
        "acyclicity",
        g.is_acyclic() && returning == 0,
        vec![
            ("edges", json!(g.edge_count())),
            ("returning_vertices", json!(returning)),
        ],
    )
}

fn edge_midpoints(g: &GridGraph) -> Check {
    let two = ratio(2, 1);
    let off = g
        .edges()
        .filter(|&(u, _, v)| {
            let mid: Vec<Rational> = g
                .point(u)
                .coords()
                .iter()
                .zip(g.point(v).coords())
                .map(|(a, b)| (a + b) / &two)
                .collect();
            !Point::new(mid).expect("midpoint in cube").is_on_boundary()
        })
        .count();
    Check::new(
        "edge_midpoints_on_boundary",
        off == 0,
        vec![
            ("edges", json!(g.edge_count())),
            ("off_boundary", json!(off)),
        ],
    )
}

fn oracle_agreement(g: &GridGraph) -> Check {
    let points: Vec<Point> = (0..g.vertex_count()).map(|v| g.point(v)).collect();
    let (mut pairs, mut reachable, mut mismatches) = (0u64, 0u64, 0u64);
    for source in 0..g.vertex_count() {
        let reached = g.reachable_from(source);
        for (target, &oracle) in reached.iter().enumerate() {
            pairs += 1;
            reachable += u64::from(oracle);
            let decided = is_reachable(&points[source], &points[target]).expect("same dimension");
            mismatches += u64::from(decided != oracle);
        }
    }
    Check::new(
        "oracle_agreement",
        mismatches == 0,
        vec![
            ("pairs", json!(pairs)),
            ("reachable", json!(reachable)),
            ("mismatches", json!(mismatches)),
        ],
    )
}

fn lattice(p: &Point, m: u32) -> Option<Vec<u32>> {
    p.coords()
        .iter()
        .map(|c| {
            let scaled = c * ratio(i64::from(m), 1);
            scaled
                .is_integer()
                .then(|| u32::try_from(scaled.to_integer()).ok())
                .flatten()
        })
        .collect()
}

/// Planned routes between grid points walk along grid edges.
fn planner_routes(g: &GridGraph) -> Check {
    let m = g.resolution();
    let (mut routes, mut failures) = (0u64, 0u64);
    for source in 0..g.vertex_count() {
        let reached = g.reachable_from(source);
        for target in (0..g.vertex_count()).filter(|&t| reached[t]) {
            routes += 1;
            let ok = plan(&g.point(source), &g.point(target))
                .ok()
                .is_some_and(|path| route_on_grid(g, &path, m));
            failures += u64::from(!ok);
        }
    }
    Check::new(
        "planner_oracle_consistency",
        failures == 0,
        vec![("routes", json!(routes)), ("failures", json!(failures))],
    )
}

fn route_on_grid(g: &GridGraph, path: &Dipath, m: u32) -> bool {
    path.waypoints().windows(2).all(|w| {
        let (Some(mut u), Some(v)) = (lattice(&w[0], m), lattice(&w[1], m)) else {
            return false;
        };
        while u != v {
            let Some(axis) = (0..u.len()).find(|&i| u[i] < v[i]) else {
                return false;
            };
            let Some(from) = g.vertex_id(&u) else {
                return false;
            };
            u[axis] += 1;
            match g.vertex_id(&u) {
                Some(to) if g.successors(from).contains(&(axis, to)) => {}
                _ => return false,
            }
        }
        true
    })
}

fn condition_geometry(pairs: &[(Point, Point)]) -> Check {
    let mut disagreements = 0u64;
    for (x, y) in pairs {
        let n = x.dimension();
        for order in [PlannerOrder::identity(n), PlannerOrder::reversal(n)] {
            let predicted = violates(x, y, &order).expect("sampled pairs are valid");
            let leaves = !staircase(x, y, &order)
                .expect("ordered pair")
                .stays_on_boundary();
            disagreements += u64::from(predicted != leaves);
        }
    }
    Check::new(
        "condition_geometry_agreement",
        disagreements == 0,
        vec![
            ("pairs", json!(pairs.len())),
            ("disagreements", json!(disagreements)),
        ],
    )
}

fn crossing_pattern(x: &Point, y: &Point) -> bool {
    let pinned: Vec<usize> = (0..x.len())
        .filter(|&i| x.class(i).is_pinned() || y.class(i).is_pinned())
        .collect();
    matches!(pinned.as_slice(), [j] if x.class(*j) == CoordClass::Zero && y.class(*j) == CoordClass::One)
}

fn disjointness(pairs: &[(Point, Point)]) -> Check {
    let (mut both, mut counterexamples) = (0u64, 0u64);
    for (x, y) in pairs {
        let n = x.dimension();
        let first = violates(x, y, &PlannerOrder::identity(n)).expect("valid pair");
        let second = violates(x, y, &PlannerOrder::reversal(n)).expect("valid pair");
        if first && second {
            both += 1;
            let bad = is_reachable(x, y).expect("same dimension") || !crossing_pattern(x, y);
            counterexamples += u64::from(bad);
        }
    }
    Check::new(
        "disjointness",
        counterexamples == 0,
        vec![
            ("pairs", json!(pairs.len())),
            ("both_conditions", json!(both)),
            ("counterexamples", json!(counterexamples)),
        ],
    )
}

fn partition_soundness(pairs: &[(Point, Point)]) -> Check {
    let (mut a1, mut a2, mut failures) = (0u64, 0u64, 0u64);
    for (x, y) in pairs {
        match dispheres::classify(x, y) {
            Ok(PartitionLabel::A1) => a1 += 1,
            Ok(PartitionLabel::A2) => a2 += 1,
            Err(_) => {}
        }
        let ok = plan(x, y).is_ok_and(|p| {
            p.stays_on_boundary()
                && p.evaluate(&rational::zero()).as_ref() == Ok(x)
                && p.evaluate(&rational::one()).as_ref() == Ok(y)
        });
        failures += u64::from(!ok);
    }
    Check::new(
        "partition_soundness",
        failures == 0,
        vec![
            ("pairs", json!(pairs.len())),
            ("a1", json!(a1)),
            ("a2", json!(a2)),
            ("failures", json!(failures)),
        ],
    )
}

/// Two classes for the square corner pair (n = 1) or the mid-height slice
/// pair (n >= 2), one class for a constant pair.
fn dihomotopy(g: &GridGraph, cap: usize) -> Result<Check, VerifyError> {
    let (n, m) = (g.dimension(), g.resolution());
    if n >= 2 && m < 2 {
        return Ok(Check::new(
            "dihomotopy_classes",
            true,
            vec![("skipped", json!("no interior slice at m = 1"))],
        ));
    }
    let mid = m / 2;
    let mut x = vec![mid; n + 1];
    let mut y = vec![mid; n + 1];
    x[0] = 0;
    x[1] = 0;
    y[0] = m;
    y[1] = m;
    let count = |a: &[u32], b: &[u32]| {
        g.dihomotopy_classes(a, b, cap)
            .map_err(VerifyError::PathCap)
    };
    let classes = count(&x, &y)?;
    let constant = count(&x, &x)?;
    Ok(Check::new(
        "dihomotopy_classes",
        classes == 2 && constant == 1,
        vec![
            ("source", json!(x)),
            ("target", json!(y)),
            ("classes", json!(classes)),
            ("constant_pair_classes", json!(constant)),
        ],
    ))
}

fn halfsquare(g: &GridGraph) -> Result<Check, VerifyError> {
    let m = g.resolution();
    let ok = g
        .verify_halfsquare_confinement(1, m / 2)
        .map_err(|e| match e {
            Error::PathExplosion { .. } => VerifyError::PathCap(e),
            other => VerifyError::Parameter(other),
        })?;
    Ok(Check::new(
        "halfsquare_confinement",
        ok,
        vec![("t_index", json!(1)), ("x_index", json!(m / 2))],
    ))
}

fn homotopy(paths: &[Dipath], n: usize) -> Check {
    let times: Vec<Rational> = (0..=10).map(|k| ratio(k, 10)).collect();
    let mut failures = 0u64;
    for gamma in paths {
        let bound = gamma.max_speed() * ratio(n as i64 + 2, 2);
        for order in [PlannerOrder::identity(n), PlannerOrder::reversal(n)] {
            let family: Vec<Dipath> = times
                .iter()
                .map(|t| contract_homotopy(gamma, t, &order).expect("valid arguments"))
                .collect();
            let section = staircase(gamma.start(), gamma.end(), &order).expect("monotone path");
            let ends_ok = family[0] == section && family[10] == *gamma;
            let fixed = family
                .iter()
                .all(|h| h.start() == gamma.start() && h.end() == gamma.end());
            let lipschitz = (0..10).all(|k| {
                sup_distance(&family[k], &family[k + 1]) <= &bound * (&times[k + 1] - &times[k])
            });
            failures += u64::from(!(ends_ok && fixed && lipschitz));
        }
    }
    Check::new(
        "contraction_homotopy",
        failures == 0,
        vec![("paths", json!(paths.len())), ("failures", json!(failures))],
    )
}

fn sup_distance(a: &Dipath, b: &Dipath) -> Rational {
    let mut params: Vec<Rational> = (0..=32).map(|k| ratio(k, 32)).collect();
    params.extend(a.stages().iter().cloned());
    params.extend(b.stages().iter().cloned());
    params
        .iter()
        .map(|s| {
            a.evaluate(s)
                .and_then(|p| p.sup_distance(&b.evaluate(s)?))
                .expect("parameters in [0,1]")
        })
        .max()
        .unwrap_or_else(rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(n: usize, m: u32) -> RunConfig {
        RunConfig {
            n,
            m,
            samples: 50,
            seed: 3,
            verbosity: 0,
        }
    }

    #[test]
    fn small_runs_pass() {
        for (n, m) in [(1, 4), (2, 2), (3, 1)] {
            let report = run(&config(n, m), DEFAULT_PATH_CAP).unwrap();
            assert!(report.passed(), "{:#?}", report);
        }
    }

    #[test]
    fn zero_dimension_is_a_parameter_error() {
        assert!(matches!(
            run(&config(0, 2), DEFAULT_PATH_CAP),
            Err(VerifyError::Parameter(_))
        ));
    }

    #[test]
    fn tiny_cap_trips_the_guardrail() {
        let err = run(&config(1, 2), 1).unwrap_err();
        assert_eq!(err.guardrail(), PATH_CAP_ENV);
    }

    #[test]
    fn huge_grid_is_refused() {
        assert!(matches!(
            run(&config(5, 9), DEFAULT_PATH_CAP),
            Err(VerifyError::GridTooLarge { .. })
        ));
    }
}
