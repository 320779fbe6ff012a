//! Exact, metric-free windmill process on rational point sets.
//!
//! * [`kernel`]: rational scalars and sign-based predicates (orientation,
//!   strict betweenness, sides, separation).
//! * [`engine`]: the windmill run loop with South/East bookkeeping and a
//!   trace analyzer.
//! * [`formula`]: the windmill statement as a finite formula, its
//!   first-point predicate, schedule enumeration and witness checking.
//! * [`axioms`]: sampled checks of the betweenness and incidence/side
//!   axiom systems over rational models, and the dyadic-plane certificate.
//! * [`io`] and [`cli`]: point files, generators, JSON and SVG output, and
//!   the `windmill` command line.

pub mod axioms;
pub mod cli;
pub mod engine;
pub mod formula;
pub mod io;
pub mod kernel;

pub use engine::{halving_start, next_stop, run, OddSplit, PointSet, Rotation, Stop, Trace};
pub use formula::{check_witness, trace_to_witness, wm_eval, Schedule};
pub use kernel::{Point, Rational, Sign};
