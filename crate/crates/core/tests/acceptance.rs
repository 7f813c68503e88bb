//! Acceptance suite. Runs every criterion at its pinned tolerance (all exact)
//! and prints one PASS/FAIL line per criterion. Exits nonzero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dispheres::oracle::{expected_vertex_count, GridGraph, DEFAULT_PATH_CAP};
use dispheres::rational::{self, ratio, Rational};
use dispheres::sample;
use dispheres::{
    contract_homotopy, is_reachable, plan, staircase, violates, CoordClass, Dipath, PlannerOrder,
    Point,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_d7c2;
const RANDOM_PAIRS_PER_DIMENSION: usize = 100_000;
const HOMOTOPY_PATHS: usize = 1_000;
const CRITERION_1_BUDGET: Duration = Duration::from_secs(120);
const CRITERION_6_BUDGET: Duration = Duration::from_secs(30);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn rng_for(criterion: u64, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ (criterion << 32) ^ n as u64)
}

/// Criterion 1: The pattern-based reachability decision agrees with BFS on every
/// vertex pair of every grid with n in 1..=3, m in 1..=4.
fn gamma_decision_vs_oracle() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0u64;
    let mut mismatches = Vec::new();
    for n in 1..=3 {
        for m in 1..=4u32 {
            let g = GridGraph::build(n, m).expect("valid grid");
            let points: Vec<Point> = (0..g.vertex_count()).map(|v| g.point(v)).collect();
            for source in 0..g.vertex_count() {
                let reached = g.reachable_from(source);
                for (target, &oracle) in reached.iter().enumerate() {
                    pairs += 1;
                    let analytic = is_reachable(&points[source], &points[target]).unwrap();
                    if analytic != oracle {
                        mismatches.push(format!(
                            "n={n} m={m} {} -> {}: oracle {oracle}, decision {analytic}",
                            points[source], points[target]
                        ));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches.is_empty() && elapsed < CRITERION_1_BUDGET,
        format!(
            "{pairs} pairs, {} mismatches{}, {:.1?}",
            mismatches.len(),
            mismatches
                .first()
                .map(|m| format!(" (first: {m})"))
                .unwrap_or_default(),
            elapsed
        ),
    )
}

fn sampled_pairs(criterion: u64, n: usize) -> Vec<(Point, Point)> {
    let mut rng = rng_for(criterion, n);
    (0..RANDOM_PAIRS_PER_DIMENSION)
        .map(|_| sample::ordered_boundary_pair(&mut rng, n))
        .collect()
}

/// Criterion 2: The staircase conditions hold exactly when the staircase leaves the boundary.
fn condition_geometry_equivalence() -> Outcome {
    let mut checked = 0u64;
    let mut disagreements = 0u64;
    for n in 1..=5 {
        for (x, y) in sampled_pairs(2, n) {
            for order in [PlannerOrder::identity(n), PlannerOrder::reversal(n)] {
                checked += 1;
                let predicted = violates(&x, &y, &order).unwrap();
                let actual = !staircase(&x, &y, &order).unwrap().stays_on_boundary();
                if predicted != actual {
                    disagreements += 1;
                }
            }
        }
    }
    outcome(
        disagreements == 0,
        format!("{checked} (pair, order) checks, {disagreements} disagreements"),
    )
}

/// Every source/target relation a single coordinate can have, realized with
/// the values 0, 1/3, 2/3, 1.
fn coordinate_relations() -> [(Rational, Rational); 7] {
    let (z, a, b, o) = (ratio(0, 1), ratio(1, 3), ratio(2, 3), ratio(1, 1));
    [
        (z.clone(), z.clone()),
        (z.clone(), a.clone()),
        (z, o.clone()),
        (a.clone(), a.clone()),
        (a.clone(), b),
        (a, o.clone()),
        (o.clone(), o),
    ]
}

fn exhaustive_pattern_pairs(n: usize) -> Vec<(Point, Point)> {
    let relations = coordinate_relations();
    let len = n + 1;
    let total = relations.len().pow(len as u32);
    (0..total)
        .filter_map(|mut code| {
            let (mut xs, mut ys) = (Vec::with_capacity(len), Vec::with_capacity(len));
            for _ in 0..len {
                let (a, b) = &relations[code % relations.len()];
                code /= relations.len();
                xs.push(a.clone());
                ys.push(b.clone());
            }
            let x = Point::new(xs).unwrap();
            let y = Point::new(ys).unwrap();
            (x.is_on_boundary() && y.is_on_boundary()).then_some((x, y))
        })
        .collect()
}

/// `(−⋯−0−⋯−, −⋯−1−⋯−)` with the pinned slot shared.
fn is_crossing_pattern(x: &Point, y: &Point) -> bool {
    let xp = x.pattern();
    let yp = y.pattern();
    let pinned: Vec<usize> = (0..x.len())
        .filter(|&i| xp.classes()[i].is_pinned() || yp.classes()[i].is_pinned())
        .collect();
    pinned.len() == 1 && {
        let j = pinned[0];
        xp.classes()[j] == CoordClass::Zero && yp.classes()[j] == CoordClass::One
    }
}

/// Criterion 3: No reachable pair violates both conditions; every pair that does is
/// rejected and has the crossing pattern.
fn disjointness() -> Outcome {
    let mut checked = 0u64;
    let mut both = 0u64;
    let mut counterexamples = Vec::new();
    let mut check = |x: &Point, y: &Point| {
        checked += 1;
        let n = x.dimension();
        let u1 = violates(x, y, &PlannerOrder::identity(n)).unwrap();
        let u2 = violates(x, y, &PlannerOrder::reversal(n)).unwrap();
        if u1 && u2 {
            both += 1;
            if is_reachable(x, y).unwrap() || !is_crossing_pattern(x, y) {
                counterexamples.push(format!("{x} -> {y}"));
            }
        }
    };
    for n in 1..=5 {
        for (x, y) in sampled_pairs(2, n) {
            check(&x, &y);
        }
    }
    for n in 1..=4 {
        for (x, y) in exhaustive_pattern_pairs(n) {
            check(&x, &y);
        }
    }
    outcome(
        counterexamples.is_empty() && both > 0,
        format!(
            "{checked} pairs, {both} satisfy both conditions, {} counterexamples",
            counterexamples.len()
        ),
    )
}

/// Criterion 4: `plan` returns a monotone boundary dipath with exact endpoints.
fn partition_soundness() -> Outcome {
    let mut checked = 0u64;
    let mut failures = 0u64;
    for n in 1..=5 {
        let mut rng = rng_for(4, n);
        for _ in 0..RANDOM_PAIRS_PER_DIMENSION {
            let (x, y) = sample::reachable_pair(&mut rng, n);
            checked += 1;
            let ok = match plan(&x, &y) {
                Ok(path) => {
                    path.stays_on_boundary()
                        && path.evaluate(&rational::zero()).unwrap() == x
                        && path.evaluate(&rational::one()).unwrap() == y
                        && path
                            .waypoints()
                            .windows(2)
                            .all(|w| w[0].coordinatewise_leq(&w[1]).unwrap())
                }
                Err(_) => false,
            };
            if !ok {
                failures += 1;
            }
        }
    }
    outcome(
        failures == 0,
        format!("{checked} reachable pairs, {failures} failures"),
    )
}

/// Criterion 5: One staircase alone cannot serve the sphere; the half-squares trap
/// the two families and their limits disagree.
fn single_planner_insufficiency() -> Outcome {
    let half = ratio(1, 2);
    let pt = |c: [&Rational; 3]| Point::new(c.into_iter().cloned().collect()).unwrap();
    let (zero, one) = (rational::zero(), rational::one());
    let dotted_source = pt([&zero, &half, &half]);
    let solid_source = pt([&half, &zero, &half]);
    let target = pt([&one, &one, &half]);

    let identity_fails = !staircase(&dotted_source, &target, &PlannerOrder::identity(2))
        .unwrap()
        .stays_on_boundary();
    let reversal_fails = !staircase(&solid_source, &target, &PlannerOrder::reversal(2))
        .unwrap()
        .stays_on_boundary();
    let both_reachable = is_reachable(&dotted_source, &target).unwrap()
        && is_reachable(&solid_source, &target).unwrap();

    let confined = [2u32, 4].into_iter().all(|m| {
        let g = GridGraph::build(2, m).unwrap();
        g.verify_halfsquare_confinement(m / 2, m / 2).unwrap()
    });

    // The corner each planned route turns at is where it converges as t -> 0.
    let solid_corner = plan(&solid_source, &target).unwrap().waypoints()[1].clone();
    let dotted_corner = plan(&dotted_source, &target).unwrap().waypoints()[2].clone();
    let squared = solid_corner.squared_distance(&dotted_corner).unwrap();
    let distance_ok = squared == ratio(2, 1)
        && solid_corner == pt([&one, &zero, &half])
        && dotted_corner == pt([&zero, &one, &half]);

    outcome(
        identity_fails && reversal_fails && both_reachable && confined && distance_ok,
        format!(
            "identity fails on (0,t,x): {identity_fails}, reversal fails on (t,0,x): \
             {reversal_fails}, confinement m=2,4: {confined}, limit corners {solid_corner} \
             vs {dotted_corner} squared distance {squared}"
        ),
    )
}

/// Criterion 6: Two dihomotopy classes for the square corner pair and the slice pair.
fn fiber_disconnectedness() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut record = |what: String, got: usize, want: usize| {
        if got != want {
            failures.push(format!("{what}: {got} classes, expected {want}"));
        }
    };
    for m in 1..=4u32 {
        let g = GridGraph::build(1, m).unwrap();
        let classes = g
            .dihomotopy_classes(&[0, 0], &[m, m], DEFAULT_PATH_CAP)
            .unwrap();
        record(format!("n=1 m={m} corner pair"), classes, 2);
        for v in 0..g.vertex_count() {
            let p = g.vertex(v).to_vec();
            let classes = g.dihomotopy_classes(&p, &p, DEFAULT_PATH_CAP).unwrap();
            record(format!("n=1 m={m} x=y={p:?}"), classes, 1);
        }
    }
    for m in [2u32, 4] {
        let g = GridGraph::build(2, m).unwrap();
        for k in 1..m {
            let classes = g
                .dihomotopy_classes(&[0, 0, k], &[m, m, k], DEFAULT_PATH_CAP)
                .unwrap();
            record(format!("n=2 m={m} slice z={k}/{m}"), classes, 2);
        }
        for v in 0..g.vertex_count() {
            let p = g.vertex(v).to_vec();
            let classes = g.dihomotopy_classes(&p, &p, DEFAULT_PATH_CAP).unwrap();
            record(format!("n=2 m={m} x=y={p:?}"), classes, 1);
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && elapsed < CRITERION_6_BUDGET,
        format!(
            "{} failures{}, {:.1?}",
            failures.len(),
            failures
                .first()
                .map(|f| format!(" (first: {f})"))
                .unwrap_or_default(),
            elapsed
        ),
    )
}

/// Dense parameter samples plus every breakpoint of both paths.
fn comparison_parameters(a: &Dipath, b: &Dipath) -> Vec<Rational> {
    let mut params: Vec<Rational> = (0..=64).map(|k| ratio(k, 64)).collect();
    params.extend(a.stages().iter().cloned());
    params.extend(b.stages().iter().cloned());
    params.sort();
    params.dedup();
    params
}

fn sup_distance(a: &Dipath, b: &Dipath) -> Rational {
    comparison_parameters(a, b)
        .iter()
        .map(|s| {
            a.evaluate(s)
                .unwrap()
                .sup_distance(&b.evaluate(s).unwrap())
                .unwrap()
        })
        .max()
        .unwrap()
}

/// Criterion 7: The contraction homotopy on directed R^2: exact ends, fixed
/// endpoints, monotone outputs, Lipschitz-in-t with constant (n+2)L/2.
fn lemma_homotopy() -> Outcome {
    let n = 1;
    let mut rng = rng_for(7, n);
    let times: Vec<Rational> = (0..=10).map(|k| ratio(k, 10)).collect();
    let mut failures = Vec::new();
    for i in 0..HOMOTOPY_PATHS {
        let segments = 1 + i % 5;
        let gamma = sample::monotone_dipath(&mut rng, n, segments);
        let bound = gamma.max_speed() * ratio(n as i64 + 2, 2);
        for order in [PlannerOrder::identity(n), PlannerOrder::reversal(n)] {
            let family: Vec<Dipath> = times
                .iter()
                .map(|t| contract_homotopy(&gamma, t, &order).unwrap())
                .collect();
            let section = staircase(gamma.start(), gamma.end(), &order).unwrap();
            if family[0] != section {
                failures.push(format!("path {i}: H(γ,0) differs from the staircase"));
            }
            if family[10] != gamma {
                failures.push(format!("path {i}: H(γ,1) differs from γ"));
            }
            for (t, h) in times.iter().zip(&family) {
                let monotone = h
                    .waypoints()
                    .windows(2)
                    .all(|w| w[0].coordinatewise_leq(&w[1]).unwrap());
                if h.start() != gamma.start() || h.end() != gamma.end() || !monotone {
                    failures.push(format!("path {i}: bad endpoints or monotonicity at t={t}"));
                }
            }
            // neighbouring times suffice: the bound is additive along the chain
            for (a, b) in (0..times.len()).zip(1..times.len()) {
                let gap = &times[b] - &times[a];
                if sup_distance(&family[a], &family[b]) > &bound * &gap {
                    failures.push(format!(
                        "path {i}: continuity bound fails between t={} and t={}",
                        times[a], times[b]
                    ));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{HOMOTOPY_PATHS} paths x 2 orders x 11 times, {} failures{}",
            failures.len(),
            failures
                .first()
                .map(|f| format!(" (first: {f})"))
                .unwrap_or_default()
        ),
    )
}

/// Criterion 8: Vertex counts and acyclicity of the grids.
fn structural_counts() -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=3 {
        for m in 1..=4u32 {
            let g = GridGraph::build(n, m).unwrap();
            if g.vertex_count() as u128 != expected_vertex_count(n, m) {
                failures.push(format!("n={n} m={m}: {} vertices", g.vertex_count()));
            }
            if !g.is_acyclic() || (0..g.vertex_count()).any(|v| g.returns_to(v)) {
                failures.push(format!("n={n} m={m}: cycle found"));
            }
        }
    }
    outcome(failures.is_empty(), format!("{} failures", failures.len()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        (
            "1 reachability decision vs grid oracle",
            gamma_decision_vs_oracle,
        ),
        (
            "2 condition/geometry equivalence",
            condition_geometry_equivalence,
        ),
        ("3 disjointness of the two conditions", disjointness),
        ("4 partition soundness", partition_soundness),
        (
            "5 single-planner insufficiency",
            single_planner_insufficiency,
        ),
        ("6 fiber disconnectedness", fiber_disconnectedness),
        ("7 contraction homotopy", lemma_homotopy),
        ("8 structural counts", structural_counts),
    ];
    let mut all_passed = true;
    for (name, run) in criteria {
        let result = run();
        all_passed &= result.passed;
        println!(
            "{} criterion {name}: {}",
            if result.passed { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
