//! The windmill statement as a finite formula over a point set.
//!
//! For `n` points the statement says: some three points are collinear, or
//! there is a pivot schedule `f` with bit string `g` such that every
//! transition `i = 3..=k` satisfies the first-point predicate
//! `pi^{1-g(i-2)}_{1-g(i-1), g(i)}(a_{f(i-1)}, a_{f(i-2)}, a_{f(i-3)}, a_{f(i)})`.
//!
//! Negations in the predicate follow the convention `^0 phi = phi`,
//! `^1 phi = not phi` (the side relation of the axiom checks uses the
//! opposite convention, see [`crate::axioms`]).
//!
//! Schedules are 1-based throughout this module; point indices passed to
//! [`pi_eval`] are 0-based like everywhere else in the crate.

mod kn;
mod pi;
mod schedule;
mod witness;

pub use kn::{enum_kn, KnEnumerator, ENUMERATION_LIMIT};
pub use pi::{pi_eval, pi_first_points, pi_flags_holding, turning_flags, PiFlags};
pub use schedule::{validate_skeleton, Closure, Schedule, ScheduleError};
pub use witness::{
    all_witnesses, check_witness, check_witness_with, first_failing_conjunct, trace_to_witness,
    wm_eval, witness_from_stops, WmMode, WmVerdict,
};

use crate::engine::EngineError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("index {index} out of range for {n} points")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("index collision in pi(a={a}, b={b}, p={p}, c={c})")]
    IndexCollision { a: usize, b: usize, p: usize, c: usize },
    #[error("the formula needs at least three points, got {0}")]
    TooFewPoints(usize),
    #[error("refusing to enumerate schedules for n = {0} without an override")]
    EnumerationTooLarge(usize),
    #[error("invalid schedule: {0}")]
    Schedule(#[from] ScheduleError),
    #[error("trace never returned to its opening stop")]
    TraceNotClosed,
    #[error("trace does not pivot on every point")]
    TraceNotCovering,
    #[error("stops {0} and {1} do not chain")]
    BrokenChain(usize, usize),
    #[error("no bit assignment validates transition {0}")]
    NoConsistentFlags(usize),
    #[error("transition {0} is validated by both values of its free bit")]
    AmbiguousFlags(usize),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("invalid point set: {0}")]
    PointSet(#[from] crate::engine::PointSetError),
}

/// Upper bound on schedule length: `n(n-1) + 1`.
pub fn alpha(n: usize) -> usize {
    n * (n - 1) + 1
}

/// Orientation reference index for a schedule opening with `f1`, `f2`
/// (1-based): `(f1 + f2) mod (n + 1)` when that names a point other than
/// `f1` and `f2`, otherwise the smallest index distinct from both.
///
/// # Panics
/// If `f1 == f2`, either is out of `1..=n`, or `n < 3`.
pub fn f0(f1: usize, f2: usize, n: usize) -> usize {
    assert!(n >= 3 && f1 != f2 && (1..=n).contains(&f1) && (1..=n).contains(&f2));
    let r = (f1 + f2) % (n + 1);
    if r != 0 && r != f1 && r != f2 {
        r
    } else {
        (1..=n).find(|&i| i != f1 && i != f2).expect("n >= 3")
    }
}
