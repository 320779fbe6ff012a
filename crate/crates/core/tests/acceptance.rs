//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every tolerance is exact.

mod common;

use std::time::{Duration, Instant};

use common::{angular_next, p, r};
use rayon::prelude::*;
use windmill_core::axioms::{check_suite, dyadic_counterexample, DyadicPoint};
use windmill_core::engine::{analyze, default_max_steps};
use windmill_core::formula::{all_witnesses, f0, pi_first_points, pi_flags_holding, turning_flags, Closure};
use windmill_core::io::{emit_trace, gen_points, to_json};
use windmill_core::{check_witness, halving_start, run, trace_to_witness, wm_eval};
use windmill_core::{OddSplit, Point, PointSet, Rational, Sign, Stop, Trace};

const SEEDS: u64 = 200;
const SIZES: std::ops::RangeInclusive<usize> = 2..=12;

fn corpus_set(n: usize, seed: u64) -> PointSet {
    gen_points(n, seed, 100.max(n as u64)).expect("general-position corpus")
}

fn corpus_start(set: &PointSet, split: OddSplit) -> Stop {
    if set.len() == 2 {
        Stop::new(0, 1, Sign::Positive).unwrap()
    } else {
        halving_start(set, split).unwrap()
    }
}

fn corpus_run(n: usize, seed: u64, split: OddSplit) -> (PointSet, Stop, Trace) {
    let set = corpus_set(n, seed);
    let start = corpus_start(&set, split);
    let trace = run(&set, &start, default_max_steps(n)).unwrap();
    (set, start, trace)
}

fn corpus() -> Vec<(usize, u64)> {
    SIZES.flat_map(|n| (0..SEEDS).map(move |s| (n, s))).collect()
}

struct Verdict {
    ok: bool,
    detail: String,
    elapsed: Duration,
}

fn report(id: usize, title: &str, v: &Verdict) -> bool {
    let tag = if v.ok { "PASS" } else { "FAIL" };
    println!("{tag} criterion {id}: {title} ({}) [{:.1}s]", v.detail, v.elapsed.as_secs_f64());
    v.ok
}

/// Return within n(n-1) steps with every point a pivot.
fn closure_and_coverage() -> Verdict {
    let t = Instant::now();
    let failures: Vec<String> = corpus()
        .into_par_iter()
        .filter_map(|(n, seed)| {
            let (_, _, trace) = corpus_run(n, seed, OddSplit::SouthSmaller);
            let closed = trace.first_return.is_some_and(|k| k <= n * (n - 1));
            let covered = trace.pivots_seen.len() == n;
            (!(closed && covered)).then(|| format!("n={n} seed={seed}"))
        })
        .collect();
    let runs = corpus().len();
    Verdict {
        ok: failures.is_empty(),
        detail: format!("{runs} runs, {} failures{}", failures.len(), first(&failures)),
        elapsed: t.elapsed(),
    }
}

/// North-minus-South count straight from cross products.
fn recount_delta(set: &PointSet, stop: &Stop) -> i64 {
    let pts = set.points();
    let (a, b) = (&pts[stop.pivot], &pts[stop.other]);
    let south_positive = stop.south == Sign::Positive;
    let mut delta = 0;
    for (i, c) in pts.iter().enumerate() {
        if i == stop.pivot || i == stop.other {
            continue;
        }
        let cross = &(&(&b.x - &a.x) * &(&c.y - &a.y)) - &(&(&b.y - &a.y) * &(&c.x - &a.x));
        let positive = cross > Rational::zero();
        delta += if positive == south_positive { -1 } else { 1 };
    }
    delta
}

/// Delta classes by parity and odd split, with the East/West correlation.
fn delta_range() -> Verdict {
    let t = Instant::now();
    let jobs: Vec<(usize, u64, OddSplit, [i64; 2])> = corpus()
        .into_iter()
        .flat_map(|(n, seed)| {
            if n % 2 == 0 {
                vec![(n, seed, OddSplit::SouthSmaller, [0, 2])]
            } else {
                vec![(n, seed, OddSplit::SouthSmaller, [1, 3]), (n, seed, OddSplit::SouthLarger, [-1, 1])]
            }
        })
        .collect();
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|&(n, seed, split, class)| {
            let (set, _, trace) = corpus_run(n, seed, split);
            let recounted = trace.stops.iter().map(|s| recount_delta(&set, s)).collect::<Vec<_>>();
            let in_class = recounted.iter().all(|d| class.contains(d));
            let report = analyze(&trace, n);
            (!(in_class && recounted == trace.deltas && report.ok()))
                .then(|| format!("n={n} seed={seed} {split:?}: {:?}", report.violations))
        })
        .collect();
    Verdict {
        ok: failures.is_empty(),
        detail: format!("{} runs, {} failures{}", jobs.len(), failures.len(), first(&failures)),
        elapsed: t.elapsed(),
    }
}

/// Engine, first-point formula and angular comparator agree at every
/// transition. For two points there is no third point to name, so only
/// the engine and the comparator take part.
fn oracle_equivalence() -> Verdict {
    let t = Instant::now();
    let results: Vec<(usize, Vec<String>)> = corpus()
        .into_par_iter()
        .map(|(n, seed)| {
            let (set, start, trace) = corpus_run(n, seed, OddSplit::SouthSmaller);
            let turn = trace.rotation.sign();
            let mut bad = Vec::new();
            for (step, w) in trace.stops.windows(2).enumerate() {
                let (a, b, engine) = (w[0].pivot, w[0].other, w[1].pivot);
                let angular = angular_next(set.points(), a, b, turn.as_i8());
                if angular != engine {
                    bad.push(format!("n={n} seed={seed} step={step}: angular {angular} vs engine {engine}"));
                }
                if n < 3 {
                    continue;
                }
                let p = if step == 0 { f0(start.other + 1, start.pivot + 1, n) - 1 } else { trace.stops[step - 1].other };
                let first = pi_first_points(&set, a, b, p, turning_flags(&set, a, b, p, turn)).unwrap();
                let admissible = turning_flags(&set, a, b, p, turn);
                let holding = pi_flags_holding(&set, a, b, p, engine).unwrap().into_iter().filter(|&f| admissible(f)).count();
                if first != [engine] || holding != 2 {
                    bad.push(format!("n={n} seed={seed} step={step}: formula {first:?} vs engine {engine}"));
                }
            }
            (trace.stops.len() - 1, bad)
        })
        .collect();
    let transitions: usize = results.iter().map(|(k, _)| k).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, b)| b).collect();
    Verdict {
        ok: failures.is_empty(),
        detail: format!("{transitions} transitions, {} disagreements{}", failures.len(), first(&failures)),
        elapsed: t.elapsed(),
    }
}

/// Exhaustive witnesses for triangles, constructed ones for larger sets.
fn witness_checks() -> Verdict {
    let t = Instant::now();
    let mut failures = Vec::new();
    for seed in 0..50 {
        let set = corpus_set(3, seed);
        let found = all_witnesses(&set, Closure::Return).unwrap();
        if found.is_empty() || !found.iter().all(|w| check_witness(&set, w).unwrap()) {
            failures.push(format!("triangle seed={seed}"));
        }
    }
    let larger: Vec<String> = (4..=10usize)
        .flat_map(|n| (0..100u64).map(move |s| (n, s)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|(n, seed)| {
            let (set, _, trace) = corpus_run(n, seed, OddSplit::SouthSmaller);
            let w = trace_to_witness(&set, &trace).unwrap();
            (!check_witness(&set, &w).unwrap()).then(|| format!("n={n} seed={seed}"))
        })
        .collect();
    failures.extend(larger);
    Verdict {
        ok: failures.is_empty(),
        detail: format!("50 triangles, 700 constructed, {} failures{}", failures.len(), first(&failures)),
        elapsed: t.elapsed(),
    }
}

fn axiom_suite() -> (Verdict, String) {
    let t = Instant::now();
    let suite = check_suite(0, 10_000, None).unwrap();
    let elapsed = t.elapsed();
    let engaged = suite.checks.iter().map(|c| c.engaged).min().unwrap_or(0);
    let ok = suite.ok() && elapsed < Duration::from_secs(60);
    let detail = format!(
        "{} checks x 10000 trials, {} violations, least engaged {engaged}",
        suite.checks.len(),
        suite.violation_count()
    );
    (Verdict { ok, detail, elapsed }, to_json(&suite))
}

/// Meeting point of lines `ab` and `cd` by Cramer's rule.
fn cramer(a: &Point, b: &Point, c: &Point, d: &Point) -> Point {
    // a + s(b - a) = c + t(d - c)
    let (ux, uy) = (&b.x - &a.x, &b.y - &a.y);
    let (vx, vy) = (&d.x - &c.x, &d.y - &c.y);
    let (wx, wy) = (&c.x - &a.x, &c.y - &a.y);
    let det = &(&ux * &(-&vy)) - &(&uy * &(-&vx));
    let s = &(&(&wx * &(-&vy)) - &(&wy * &(-&vx))) / &det;
    Point::new(&a.x + &(&s * &ux), &a.y + &(&s * &uy))
}

fn dyadic() -> Verdict {
    let t = Instant::now();
    let cert = dyadic_counterexample();
    let expected = cramer(&p(0, 0), &p(2, 2), &p(0, 1), &p(2, 0));
    let ok = cert.verify()
        && cert.a == p(0, 0)
        && cert.b == p(2, 2)
        && cert.anchors == [p(0, 1), p(2, 0)]
        && expected == Point::new(r(2, 3), r(2, 3))
        && cert.intersection == expected
        && DyadicPoint::new(expected.clone()).is_none();
    Verdict { ok, detail: format!("intersection {}", cert.intersection), elapsed: t.elapsed() }
}

fn artifacts() -> Vec<String> {
    let mut out: Vec<String> = corpus()
        .into_par_iter()
        .map(|(n, seed)| {
            let (set, _, trace) = corpus_run(n, seed, OddSplit::SouthSmaller);
            emit_trace(&trace, &set)
        })
        .collect();
    out.extend((3..=10).map(|n| to_json(&wm_eval(corpus_set(n, 1).points()).unwrap())));
    out.push(to_json(&dyadic_counterexample()));
    out
}

fn determinism(suite_json: &str) -> Verdict {
    let t = Instant::now();
    let first_pass = artifacts();
    let second_pass = artifacts();
    let suite_again = to_json(&check_suite(0, 10_000, None).unwrap());
    let same = first_pass.iter().zip(&second_pass).filter(|(a, b)| a == b).count();
    let ok = same == first_pass.len() && first_pass.len() == second_pass.len() && suite_json == suite_again;
    Verdict {
        ok,
        detail: format!("{same}/{} artifacts identical, suite identical: {}", first_pass.len(), suite_json == suite_again),
        elapsed: t.elapsed(),
    }
}

fn first(failures: &[String]) -> String {
    failures.first().map_or(String::new(), |f| format!("; first: {f}"))
}

fn main() {
    let mut ok = true;
    ok &= report(1, "closure within n(n-1) steps and full pivot coverage, n=2..12", &closure_and_coverage());
    ok &= report(2, "delta classes and East/West correlation", &delta_range());
    ok &= report(3, "engine, formula and angular comparator agree", &oracle_equivalence());
    ok &= report(4, "witnesses found and checked", &witness_checks());
    let (suite, suite_json) = axiom_suite();
    ok &= report(5, "axiom suite clean in under a minute", &suite);
    ok &= report(6, "dyadic side-gap certificate", &dyadic());
    ok &= report(7, "byte-identical JSON on rerun", &determinism(&suite_json));
    if !ok {
        std::process::exit(1);
    }
}
