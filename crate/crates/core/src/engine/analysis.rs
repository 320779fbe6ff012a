use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Heading, Trace};

/// A broken invariant found in a trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Consecutive stops must share the previous pivot as the new partner.
    BrokenChain { step: usize },
    /// The opening pivot must be West of its partner.
    OpeningNotWest,
    /// Delta outside `{d0, d0 + 2}` for opening value `d0`.
    DeltaOutOfClass { step: usize, delta: i64 },
    /// West pivots carry `d0`, East pivots `d0 + 2`.
    HeadingMismatch { step: usize, heading: Heading, delta: i64 },
    NotClosed { steps: usize },
    ClosureTooLate { steps: usize, bound: usize },
    LineRepeatTooLate { steps: usize, bound: usize },
    MissingPivots { missing: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BrokenChain { step } => write!(f, "stop {step} does not chain to its predecessor"),
            Violation::OpeningNotWest => write!(f, "opening pivot is not West of its partner"),
            Violation::DeltaOutOfClass { step, delta } => {
                write!(f, "delta {delta} at stop {step} is outside the opening class")
            }
            Violation::HeadingMismatch { step, heading, delta } => {
                write!(f, "stop {step}: pivot {heading:?} with delta {delta}")
            }
            Violation::NotClosed { steps } => write!(f, "no return to the opening stop in {steps} steps"),
            Violation::ClosureTooLate { steps, bound } => {
                write!(f, "returned after {steps} steps, bound is {bound}")
            }
            Violation::LineRepeatTooLate { steps, bound } => {
                write!(f, "opening line recurred after {steps} steps, bound is {bound}")
            }
            Violation::MissingPivots { missing } => write!(f, "never pivoted: {missing:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub delta_values: BTreeSet<i64>,
    pub headings: Vec<Heading>,
    pub cycle_length: Option<usize>,
    /// First step at which the opening line (either pivot) recurs.
    pub first_line_repeat: Option<usize>,
    pub coverage: bool,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check a trace against the bookkeeping invariants of the process:
/// chaining, the two-valued delta with its East/West correlation, closure
/// within `n(n-1)` steps, recurrence of the opening line within
/// `n(n-1)/2` steps, and full pivot coverage.
pub fn analyze(trace: &Trace, n: usize) -> Report {
    let mut violations = Vec::new();
    let headings: Vec<Heading> = trace.stops.iter().map(|s| s.heading(trace.rotation)).collect();
    let delta_values: BTreeSet<i64> = trace.deltas.iter().copied().collect();

    for (i, pair) in trace.stops.windows(2).enumerate() {
        if pair[1].other != pair[0].pivot || pair[1].pivot == pair[0].pivot {
            violations.push(Violation::BrokenChain { step: i + 1 });
        }
    }

    if headings.first() != Some(&Heading::West) {
        violations.push(Violation::OpeningNotWest);
    }
    let d0 = trace.deltas[0];
    for (step, (&delta, &heading)) in trace.deltas.iter().zip(&headings).enumerate() {
        if delta != d0 && delta != d0 + 2 {
            violations.push(Violation::DeltaOutOfClass { step, delta });
            continue;
        }
        let expected = match heading {
            Heading::West => d0,
            Heading::East => d0 + 2,
        };
        if delta != expected {
            violations.push(Violation::HeadingMismatch { step, heading, delta });
        }
    }

    let bound = n * (n - 1);
    match trace.first_return {
        None => violations.push(Violation::NotClosed { steps: trace.steps() }),
        Some(steps) if steps > bound => violations.push(Violation::ClosureTooLate { steps, bound }),
        Some(_) => {}
    }

    let opening = trace.stops[0].line();
    let first_line_repeat = trace.stops.iter().skip(1).position(|s| s.line() == opening).map(|p| p + 1);
    if let Some(steps) = first_line_repeat {
        if steps > bound / 2 {
            violations.push(Violation::LineRepeatTooLate { steps, bound: bound / 2 });
        }
    }

    let missing: Vec<usize> = (0..n).filter(|i| !trace.pivots_seen.contains(i)).collect();
    let coverage = missing.is_empty();
    if !coverage {
        violations.push(Violation::MissingPivots { missing });
    }

    Report {
        delta_values,
        headings,
        cycle_length: trace.first_return,
        first_line_repeat,
        coverage,
        violations,
    }
}
