//! Sampled checks of two axiom systems over the rational plane.
//!
//! The betweenness system `A1`..`A6` speaks about points and strict
//! betweenness only (`A6` is Pasch's axiom). The incidence system
//! `J1`..`J8` has points, lines, incidence and the side relation; `J8` is
//! checked on its collinear branch only.
//!
//! In `J8` a superscript bit keeps the two-line side relation when it is
//! `1` and negates it when it is `0`, the reverse of the convention in
//! [`crate::formula`].
//!
//! Every universally quantified variable is drawn from a seeded [`Sampler`];
//! existential witnesses are constructed (Pasch's crossing point by exact
//! line intersection, the line through two points by [`LineRep::through`]).
//! Trials whose premise fails are counted but cannot violate anything.

mod dyadic;
mod line;
mod sampler;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use dyadic::{dyadic_counterexample, DyadicPoint, SideGapCertificate};
pub use line::{different_sides, incident, same_parity, LineRep};
pub use sampler::Sampler;

use crate::kernel::{between, collinear, line_intersection, separates, z_from_d, Point, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomName {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    J1,
    J2,
    J3,
    J4,
    J5,
    J6,
    J7,
    J8,
}

impl AxiomName {
    pub const ALL: [AxiomName; 14] = [
        AxiomName::A1,
        AxiomName::A2,
        AxiomName::A3,
        AxiomName::A4,
        AxiomName::A5,
        AxiomName::A6,
        AxiomName::J1,
        AxiomName::J2,
        AxiomName::J3,
        AxiomName::J4,
        AxiomName::J5,
        AxiomName::J6,
        AxiomName::J7,
        AxiomName::J8,
    ];

    /// One-line statement, for reports.
    pub fn statement(self) -> &'static str {
        match self {
            AxiomName::A1 => "Z(abc) -> Z(cba)",
            AxiomName::A2 => "Z(abc) -> not Z(acb)",
            AxiomName::A3 => "Z(acb) and Z(abd) -> Z(cbd)",
            AxiomName::A4 => "Z(cab) and Z(abd) -> Z(cbd)",
            AxiomName::A5 => "c != d and Z(abc) and Z(abd) -> Z(bcd) or Z(bdc)",
            AxiomName::A6 => "Pasch: a line entering triangle abc through side ac leaves through ab or bc",
            AxiomName::J1 => "two distinct points lie on exactly one line",
            AxiomName::J2 => "every line carries four distinct points",
            AxiomName::J3 => "some three points lie on no common line",
            AxiomName::J4 => "D(agb) -> not I(ag)",
            AxiomName::J5 => "D(agb) -> D(bga)",
            AxiomName::J6 => "not I(cg) and D(agb) -> D(agc) or D(bgc)",
            AxiomName::J7 => "not (D(agb) and D(bgc) and D(cga))",
            AxiomName::J8 => "four collinear points split into pairs in exactly one separating way",
        }
    }

    fn stream(self) -> u64 {
        AxiomName::ALL.iter().position(|&n| n == self).expect("listed") as u64
    }
}

impl fmt::Display for AxiomName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for AxiomName {
    type Err = AxiomError;
    fn from_str(s: &str) -> Result<Self, AxiomError> {
        AxiomName::ALL
            .into_iter()
            .find(|n| n.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| AxiomError::UnknownAxiom(s.to_string()))
    }
}

impl Serialize for AxiomName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AxiomName {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AxiomError {
    #[error("unknown axiom `{0}` (expected A1..A6 or J1..J8)")]
    UnknownAxiom(String),
    #[error("at least one trial is required")]
    NoTrials,
}

/// Name of the check that compares betweenness with its definition from
/// incidence and sides.
pub const DEFZ_CHECK: &str = "DEFZ";

/// One sampled instance that falsifies a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub check: String,
    pub trial: usize,
    pub points: Vec<Point>,
    pub lines: Vec<LineRep>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub trials: usize,
    /// Trials whose premise held.
    pub engaged: usize,
    pub violations: Vec<AxiomViolation>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(CheckReport::ok)
    }

    pub fn violation_count(&self) -> usize {
        self.checks.iter().map(|c| c.violations.len()).sum()
    }
}

enum Outcome {
    Vacuous,
    Held,
    Violated { points: Vec<Point>, lines: Vec<LineRep>, note: String },
}

fn violated(points: &[&Point], lines: &[&LineRep], note: impl Into<String>) -> Outcome {
    Outcome::Violated {
        points: points.iter().map(|&p| p.clone()).collect(),
        lines: lines.iter().map(|&l| l.clone()).collect(),
        note: note.into(),
    }
}

/// Material implication with a sampled counterexample.
fn implies(premise: bool, conclusion: bool, points: &[&Point], lines: &[&LineRep]) -> Outcome {
    match (premise, conclusion) {
        (false, _) => Outcome::Vacuous,
        (true, true) => Outcome::Held,
        (true, false) => violated(points, lines, "premise holds, conclusion fails"),
    }
}

fn run_check(
    check: String,
    sampler: &mut Sampler,
    trials: usize,
    mut trial: impl FnMut(&mut Sampler) -> Outcome,
) -> Result<CheckReport, AxiomError> {
    if trials == 0 {
        return Err(AxiomError::NoTrials);
    }
    let mut engaged = 0;
    let mut violations = Vec::new();
    for t in 0..trials {
        match trial(sampler) {
            Outcome::Vacuous => {}
            Outcome::Held => engaged += 1,
            Outcome::Violated { points, lines, note } => {
                engaged += 1;
                violations.push(AxiomViolation { check: check.clone(), trial: t, points, lines, note });
            }
        }
    }
    Ok(CheckReport { check, trials, engaged, violations })
}

/// Check one axiom on `trials` sampled instances.
pub fn check_axiom(name: AxiomName, sampler: &mut Sampler, trials: usize) -> Result<CheckReport, AxiomError> {
    run_check(name.to_string(), sampler, trials, |s| trial(name, s))
}

fn trial(name: AxiomName, s: &mut Sampler) -> Outcome {
    use AxiomName::*;
    match name {
        // roles are assigned so that sorted samples satisfy the premise
        A1 => {
            let v = s.collinear_maybe_sorted(3);
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            implies(between(a, b, c), between(c, b, a), &[a, b, c], &[])
        }
        A2 => {
            let v = s.collinear_maybe_sorted(3);
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            implies(between(a, b, c), !between(a, c, b), &[a, b, c], &[])
        }
        A3 => {
            let v = s.collinear_maybe_sorted(4);
            let (a, c, b, d) = (&v[0], &v[1], &v[2], &v[3]);
            implies(between(a, c, b) && between(a, b, d), between(c, b, d), &[a, b, c, d], &[])
        }
        A4 => {
            let v = s.collinear_maybe_sorted(4);
            let (c, a, b, d) = (&v[0], &v[1], &v[2], &v[3]);
            implies(between(c, a, b) && between(a, b, d), between(c, b, d), &[a, b, c, d], &[])
        }
        A5 => {
            let mut v = s.collinear_maybe_sorted(4);
            if s.coin(1, 2) {
                v.swap(2, 3);
            }
            let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
            implies(
                c != d && between(a, b, c) && between(a, b, d),
                between(b, c, d) || between(b, d, c),
                &[a, b, c, d],
                &[],
            )
        }
        A6 => pasch_trial(s),
        J1 => unique_line_trial(s),
        J2 => {
            let g = s.line();
            let mut ts: Vec<Rational> = Vec::new();
            while ts.len() < 4 {
                let t = s.param();
                if !ts.contains(&t) {
                    ts.push(t);
                }
            }
            let pts: Vec<Point> = ts.iter().map(|t| g.point_at(t)).collect();
            let distinct = (0..4).all(|i| (i + 1..4).all(|j| pts[i] != pts[j]));
            if distinct && pts.iter().all(|p| incident(p, &g)) {
                Outcome::Held
            } else {
                let refs: Vec<&Point> = pts.iter().collect();
                violated(&refs, &[&g], "parameterized points are not four distinct points of the line")
            }
        }
        J3 => {
            let w = [Point::int(0, 0), Point::int(1, 0), Point::int(0, 1)];
            let g = if s.coin(1, 2) {
                let i = usize::from(s.coin(1, 2));
                LineRep::through(&w[i], &w[2]).expect("distinct")
            } else {
                s.line()
            };
            if w.iter().all(|p| incident(p, &g)) {
                violated(&[&w[0], &w[1], &w[2]], &[&g], "one line carries all three witnesses")
            } else {
                Outcome::Held
            }
        }
        J4 => {
            let g = s.line();
            let a = s.point_near(&g);
            let b = s.partner(&g, &a);
            implies(different_sides(&a, &g, &b), !incident(&a, &g), &[&a, &b], &[&g])
        }
        J5 => {
            let g = s.line();
            let a = s.point_near(&g);
            let b = s.partner(&g, &a);
            implies(different_sides(&a, &g, &b), different_sides(&b, &g, &a), &[&a, &b], &[&g])
        }
        J6 => {
            let g = s.line();
            let a = s.point_near(&g);
            let b = s.partner(&g, &a);
            let c = s.point_near(&g);
            implies(
                !incident(&c, &g) && different_sides(&a, &g, &b),
                different_sides(&a, &g, &c) || different_sides(&b, &g, &c),
                &[&a, &b, &c],
                &[&g],
            )
        }
        J7 => {
            let g = s.line();
            let (a, b, c) = if s.coin(1, 10) {
                let a = s.point();
                (a.clone(), a.clone(), a)
            } else {
                let a = s.point_near(&g);
                let b = s.partner(&g, &a);
                let c = s.partner(&g, &b);
                (a, b, c)
            };
            let all = different_sides(&a, &g, &b) && different_sides(&b, &g, &c) && different_sides(&c, &g, &a);
            if all {
                violated(&[&a, &b, &c], &[&g], "the line separates all three pairs")
            } else {
                Outcome::Held
            }
        }
        J8 => separation_trial(s),
    }
}

fn pasch_trial(s: &mut Sampler) -> Outcome {
    let Some([a, b, c]) = s.triangle() else {
        return Outcome::Vacuous;
    };
    // mostly inside ac, sometimes anywhere on its line
    let t = if s.coin(3, 4) { s.unit_param() } else { s.param() };
    let d = &a + &(&c - &a).scale(&t);
    let Some(e) = s.point_where(|e| !collinear(&a, &c, e) && !collinear(e, &d, &b)) else {
        return Outcome::Vacuous;
    };
    if !between(&a, &d, &c) {
        return Outcome::Vacuous;
    }
    let crossing = |p: &Point, q: &Point| {
        line_intersection(&e, &d, p, q).filter(|f| between(p, f, q) && collinear(&e, &d, f))
    };
    if crossing(&a, &b).or_else(|| crossing(&b, &c)).is_some() {
        Outcome::Held
    } else {
        violated(&[&a, &b, &c, &d, &e], &[], "line ed meets neither open side ab nor bc")
    }
}

fn unique_line_trial(s: &mut Sampler) -> Outcome {
    let (a, b) = (s.point(), s.point());
    if a == b {
        return Outcome::Vacuous;
    }
    let g = LineRep::through(&a, &b).expect("distinct");
    if !incident(&a, &g) || !incident(&b, &g) {
        return violated(&[&a, &b], &[&g], "constructed line misses a defining point");
    }
    let mut t = s.param();
    if t.is_zero() {
        t = Rational::one();
    }
    let others = [
        LineRep::through(&b, &a).ok(),
        LineRep::new(&b, &(&a - &b).scale(&t)).ok(),
        LineRep::through(&g.point_at(&s.param()), &(&a + &(&b - &a).scale(&t))).ok(),
        Some(s.line_through_except(&a, &g)),
    ];
    for h in others.into_iter().flatten() {
        if incident(&a, &h) && incident(&b, &h) && h != g {
            return violated(&[&a, &b], &[&g, &h], "two representations of lines through a and b differ");
        }
    }
    Outcome::Held
}

fn separation_trial(s: &mut Sampler) -> Outcome {
    let g = s.line();
    let mut ts: Vec<Rational> = Vec::new();
    while ts.len() < 4 {
        let t = s.param();
        if !ts.contains(&t) {
            ts.push(t);
        }
    }
    let a: Vec<Point> = ts.iter().map(|t| g.point_at(t)).collect();
    let h: Vec<LineRep> = a.iter().map(|p| s.line_through_except(p, &g)).collect();
    let lines_distinct = (0..4).all(|i| (i + 1..4).all(|j| h[i] != h[j]));
    if !lines_distinct {
        return Outcome::Vacuous;
    }
    let kept = [
        same_parity(&a[2], &a[3], &h[0], &h[1]),
        same_parity(&a[1], &a[3], &h[0], &h[2]),
        same_parity(&a[1], &a[2], &h[0], &h[3]),
    ];
    let pairs = [
        separates(&a[0], &a[1], &a[2], &a[3]),
        separates(&a[0], &a[2], &a[1], &a[3]),
        separates(&a[0], &a[3], &a[1], &a[2]),
    ];
    let pts: Vec<&Point> = a.iter().collect();
    let lines: Vec<&LineRep> = std::iter::once(&g).chain(h.iter()).collect();
    if kept.iter().filter(|&&k| k).count() != 2 {
        return violated(&pts, &lines, format!("side pattern {kept:?} does not keep exactly two"));
    }
    for (k, sep) in kept.iter().zip(pairs) {
        if sep != Ok(!k) {
            return violated(&pts, &lines, "side pattern disagrees with interval separation");
        }
    }
    Outcome::Held
}

/// Betweenness defined from incidence and sides: some line carries all
/// three points and some other line through the middle one separates the
/// outer two.
pub fn between_from_sides(a: &Point, b: &Point, c: &Point, s: &mut Sampler) -> bool {
    let carrier = if a != c {
        LineRep::through(a, c)
    } else if a != b {
        LineRep::through(a, b)
    } else {
        LineRep::new(a, &Point::int(1, 0))
    }
    .expect("distinct points");
    if !(incident(a, &carrier) && incident(b, &carrier) && incident(c, &carrier)) {
        return false;
    }
    let h = s.line_through_except(b, &carrier);
    different_sides(a, &h, c)
}

/// Compare [`between_from_sides`] with the kernel's betweenness and its
/// second code path [`z_from_d`] on sampled triples, mostly collinear.
pub fn check_defz(sampler: &mut Sampler, trials: usize) -> Result<CheckReport, AxiomError> {
    run_check(DEFZ_CHECK.to_string(), sampler, trials, |s| {
        let v = if s.coin(3, 4) { s.collinear(3) } else { vec![s.point(), s.point(), s.point()] };
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let defined = between_from_sides(a, b, c, s);
        if defined == between(a, b, c) && defined == z_from_d(a, b, c) {
            Outcome::Held
        } else {
            violated(&[a, b, c], &[], format!("defined {defined}, kernel {}", between(a, b, c)))
        }
    })
}

/// Run `axioms` (all of them plus the betweenness definition check when
/// `None`), each on its own stream of the generator seeded with `seed`,
/// so results do not depend on which checks are selected.
pub fn check_suite(seed: u64, trials: usize, axioms: Option<&[AxiomName]>) -> Result<SuiteReport, AxiomError> {
    let selected = axioms.unwrap_or(&AxiomName::ALL);
    let mut checks = Vec::with_capacity(selected.len() + 1);
    for &name in selected {
        checks.push(check_axiom(name, &mut Sampler::stream(seed, name.stream()), trials)?);
    }
    if axioms.is_none() {
        let stream = AxiomName::ALL.len() as u64;
        checks.push(check_defz(&mut Sampler::stream(seed, stream), trials)?);
    }
    Ok(SuiteReport { seed, trials, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        assert_eq!("a6".parse::<AxiomName>(), Ok(AxiomName::A6));
        assert_eq!(" J8 ".parse::<AxiomName>(), Ok(AxiomName::J8));
        assert_eq!("J9".parse::<AxiomName>(), Err(AxiomError::UnknownAxiom("J9".into())));
        assert_eq!(serde_json::to_string(&AxiomName::J3).unwrap(), "\"J3\"");
    }

    #[test]
    fn zero_trials_rejected() {
        assert_eq!(check_axiom(AxiomName::A1, &mut Sampler::new(0), 0), Err(AxiomError::NoTrials));
    }

    #[test]
    fn small_suite_is_clean_and_engaged() {
        let r = check_suite(11, 300, None).unwrap();
        assert_eq!(r.checks.len(), 15);
        for c in &r.checks {
            assert!(c.ok(), "{}: {:?}", c.check, c.violations.first());
            assert!(c.engaged > 0, "{} never engaged", c.check);
        }
    }

    #[test]
    fn selection_does_not_shift_streams() {
        let all = check_suite(5, 50, None).unwrap();
        let one = check_suite(5, 50, Some(&[AxiomName::J6])).unwrap();
        assert_eq!(one.checks[0], all.checks[11]);
    }

    #[test]
    fn pasch_catches_a_wrong_witness() {
        // the crossing with side ab of this triangle is at (1, 1)
        let (a, b, c) = (Point::int(0, 0), Point::int(2, 2), Point::int(4, 0));
        let (d, e) = (Point::int(2, 0), Point::int(0, 2));
        assert_eq!(line_intersection(&e, &d, &a, &b), Some(Point::int(1, 1)));
        assert!(between(&a, &Point::int(1, 1), &b));
        assert!(line_intersection(&e, &d, &b, &c).is_none());
    }
}
