//! The windmill process driven purely by orientation signs.
//!
//! A [`Stop`] is a line through exactly two points of the set: the current
//! pivot and the point the line met last. Every stop also carries the side
//! of its line that is currently called South. Directions along a stop line
//! are labelled East and West; the East ray always sweeps into the Southern
//! half-plane, so the global turning sense ([`Rotation`]) is fixed for a
//! whole run while the South label is carried from stop to stop.
//!
//! An opening stop is always read with its pivot to the West, so the sense
//! of a run is the orientation sign of its opening South.

mod analysis;
mod pointset;

pub use analysis::{analyze, Report, Violation};
pub use pointset::{first_collinear_triple, PointSet, PointSetError};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::formula::f0;
use crate::kernel::Sign;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("a halving start needs at least three points, got {0}")]
    TooFewForHalving(usize),
    #[error("stop pivot and partner coincide ({0})")]
    DegenerateStop(usize),
    #[error("stop index {index} out of range for {n} points")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("the Southern side of a stop must be Negative or Positive")]
    ZeroSouth,
}

/// Sense in which the line turns about its pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rotation {
    Clockwise,
    Counterclockwise,
}

impl Rotation {
    /// Orientation sign of the side a ray sweeps into, relative to the ray.
    pub fn sign(self) -> Sign {
        match self {
            Rotation::Clockwise => Sign::Negative,
            Rotation::Counterclockwise => Sign::Positive,
        }
    }

    pub fn from_sign(s: Sign) -> Option<Rotation> {
        match s {
            Sign::Negative => Some(Rotation::Clockwise),
            Sign::Positive => Some(Rotation::Counterclockwise),
            Sign::Zero => None,
        }
    }

    pub fn reversed(self) -> Rotation {
        match self {
            Rotation::Clockwise => Rotation::Counterclockwise,
            Rotation::Counterclockwise => Rotation::Clockwise,
        }
    }
}

/// Where the pivot sits relative to the other point of its stop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Heading {
    West,
    East,
}

/// Which side of an odd-size halving line is called South.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OddSplit {
    /// South holds the smaller half; the North-minus-South count starts at 1.
    #[default]
    SouthSmaller,
    /// South holds the larger half; the count starts at -1.
    SouthLarger,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Stop {
    pub pivot: usize,
    pub other: usize,
    /// `orient(pivot, other, x)` for points `x` in the Southern half-plane.
    pub south: Sign,
}

impl Stop {
    pub fn new(pivot: usize, other: usize, south: Sign) -> Result<Stop, EngineError> {
        if pivot == other {
            return Err(EngineError::DegenerateStop(pivot));
        }
        if south.is_zero() {
            return Err(EngineError::ZeroSouth);
        }
        Ok(Stop { pivot, other, south })
    }

    pub fn heading(&self, rotation: Rotation) -> Heading {
        if self.south == rotation.sign() {
            Heading::West
        } else {
            Heading::East
        }
    }

    /// The stop line as an unordered index pair.
    pub fn line(&self) -> (usize, usize) {
        (self.pivot.min(self.other), self.pivot.max(self.other))
    }

    fn check(&self, n: usize) -> Result<(), EngineError> {
        for index in [self.pivot, self.other] {
            if index >= n {
                return Err(EngineError::IndexOutOfRange { index, n });
            }
        }
        Stop::new(self.pivot, self.other, self.south).map(|_| ())
    }
}

/// Lexicographically least point; always a vertex of the convex hull.
pub fn hull_vertex(set: &PointSet) -> usize {
    (0..set.len())
        .min_by(|&i, &j| set.point(i).cmp(set.point(j)))
        .expect("point sets are non-empty")
}

/// Opening stop through the hull vertex whose line splits the remaining
/// points as evenly as parity allows.
///
/// For even `n` the two sides get `(n - 2) / 2` points each and South is
/// the side holding the orientation reference `f0`. For odd `n` the sides
/// get `(n - 3) / 2` and `(n - 1) / 2` points and `split` says which one is
/// South.
pub fn halving_start(set: &PointSet, split: OddSplit) -> Result<Stop, EngineError> {
    let n = set.len();
    if n < 3 {
        return Err(EngineError::TooFewForHalving(n));
    }
    let s = hull_vertex(set);
    let mut others: Vec<usize> = (0..n).filter(|&i| i != s).collect();
    // every other point is to the right of s or straight above it, so the
    // directions span less than a half-turn and orientation is a total order
    others.sort_by(|&u, &v| match set.orient(s, u, v) {
        Sign::Positive => std::cmp::Ordering::Less,
        Sign::Negative => std::cmp::Ordering::Greater,
        Sign::Zero => unreachable!("general position"),
    });
    // points sorted before t lie on the Negative side of s -> t
    let median = if n.is_multiple_of(2) { (n - 2) / 2 } else { (n - 3) / 2 };
    let t = others[median];
    let south = if n.is_multiple_of(2) {
        let p = f0(t + 1, s + 1, n) - 1;
        set.orient(s, t, p)
    } else {
        match split {
            OddSplit::SouthSmaller => Sign::Negative,
            OddSplit::SouthLarger => Sign::Positive,
        }
    };
    Stop::new(s, t, south)
}

/// The next stop: turn the line about the pivot in the run's sense until
/// it meets another point, which becomes the pivot.
///
/// Each candidate is represented by its direction from the pivot, reflected
/// through the pivot when it is met by the backward ray, so that all
/// representatives lie in the swept half-plane. The first representative in
/// sweep order wins; with two points the line turns a half-turn and the
/// roles swap.
pub fn next_stop(set: &PointSet, stop: &Stop, rotation: Rotation) -> Stop {
    let (a, b) = (stop.pivot, stop.other);
    let turn = rotation.sign();
    let mut best: Option<(usize, bool)> = None;
    for c in (0..set.len()).filter(|&c| c != a && c != b) {
        let forward = set.orient(a, b, c) == turn;
        best = match best {
            None => Some((c, forward)),
            Some((d, forward_d)) => {
                let mut s = set.orient(a, c, d);
                if forward != forward_d {
                    s = s.flip();
                }
                assert!(!s.is_zero(), "candidates {c} and {d} collinear with pivot {a}");
                if s == turn {
                    Some((c, forward))
                } else {
                    Some((d, forward_d))
                }
            }
        };
    }
    let (c, forward) = best.unwrap_or((b, false));
    let ab_east = stop.heading(rotation) == Heading::West;
    let ac_east = ab_east == forward;
    let south = if ac_east { turn.flip() } else { turn };
    Stop { pivot: c, other: a, south }
}

/// North-minus-South count of the points off the stop line.
pub fn delta_count(set: &PointSet, stop: &Stop) -> i64 {
    (0..set.len())
        .filter(|&x| x != stop.pivot && x != stop.other)
        .map(|x| {
            let s = set.orient(stop.pivot, stop.other, x);
            if s == stop.south {
                -1
            } else if s.is_zero() {
                0
            } else {
                1
            }
        })
        .sum()
}

/// Worst-case closure bound plus one.
pub fn default_max_steps(n: usize) -> usize {
    n * (n - 1) + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub rotation: Rotation,
    /// `stops[0]` is the opening stop; on closure the last entry equals it.
    pub stops: Vec<Stop>,
    pub deltas: Vec<i64>,
    /// Number of steps after which the opening stop recurred.
    pub first_return: Option<usize>,
    pub pivots_seen: BTreeSet<usize>,
}

impl Trace {
    pub fn is_closed(&self) -> bool {
        self.first_return.is_some()
    }

    pub fn steps(&self) -> usize {
        self.stops.len() - 1
    }
}

/// A windmill over a fixed point set and turning sense.
#[derive(Debug, Clone, Copy)]
pub struct Windmill<'a> {
    set: &'a PointSet,
    rotation: Rotation,
}

impl<'a> Windmill<'a> {
    pub fn new(set: &'a PointSet, rotation: Rotation) -> Self {
        Windmill { set, rotation }
    }

    /// The windmill whose opening stop is `start` (pivot to the West).
    pub fn opening(set: &'a PointSet, start: &Stop) -> Result<Self, EngineError> {
        start.check(set.len())?;
        let rotation = Rotation::from_sign(start.south).ok_or(EngineError::ZeroSouth)?;
        Ok(Windmill { set, rotation })
    }

    pub fn rotation(&self) -> Rotation {
        self.rotation
    }

    pub fn step(&self, stop: &Stop) -> Stop {
        next_stop(self.set, stop, self.rotation)
    }

    /// Iterate from `start` until it recurs or `max_steps` steps were taken.
    pub fn run(&self, start: &Stop, max_steps: usize) -> Trace {
        let mut stops = vec![start.clone()];
        let mut deltas = vec![delta_count(self.set, start)];
        let mut pivots_seen = BTreeSet::from([start.pivot]);
        let mut first_return = None;
        let mut current = start.clone();
        for step in 1..=max_steps {
            current = self.step(&current);
            deltas.push(delta_count(self.set, &current));
            pivots_seen.insert(current.pivot);
            stops.push(current.clone());
            if current == *start {
                first_return = Some(step);
                break;
            }
        }
        Trace { rotation: self.rotation, stops, deltas, first_return, pivots_seen }
    }
}

/// Run the windmill opened by `start` for at most `max_steps` steps.
pub fn run(set: &PointSet, start: &Stop, max_steps: usize) -> Result<Trace, EngineError> {
    Ok(Windmill::opening(set, start)?.run(start, max_steps))
}
