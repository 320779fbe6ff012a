use serde::{Deserialize, Serialize};

use super::kn::enum_kn;
use super::pi::{pi_eval, PiFlags};
use super::schedule::{Closure, Schedule};
use super::FormulaError;
use crate::engine::{first_collinear_triple, halving_start, run, default_max_steps, OddSplit, PointSet, Stop, Trace};
use crate::kernel::Point;

/// Flags of conjunct `i` (1-based, `i >= 3`), given bits `g(i-2)`, `g(i-1)`, `g(i)`.
fn conjunct_flags(g2: u8, g1: u8, g0: u8) -> PiFlags {
    PiFlags::new(1 - g2, 1 - g1, g0)
}

/// Evaluate conjunct `i` of a schedule whose `f` and `g` are known up to `i`.
fn conjunct(set: &PointSet, f: &[usize], f0: usize, g: &[u8], i: usize) -> Result<bool, FormulaError> {
    let at = |m: usize| if m == 0 { f0 } else { f[m - 1] };
    let flags = conjunct_flags(g[i - 3], g[i - 2], g[i - 1]);
    pi_eval(set, at(i - 1) - 1, at(i - 2) - 1, at(i - 3) - 1, at(i) - 1, flags)
}

/// First conjunct (1-based index `i`) that fails, or `None` if all hold.
pub fn first_failing_conjunct(set: &PointSet, w: &Schedule) -> Result<Option<usize>, FormulaError> {
    let n = set.len();
    let p = w.at(0, n);
    for i in 3..=w.k {
        if !conjunct(set, &w.f, p, &w.g, i)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// The schedule is well formed under `closure` and every conjunct holds.
pub fn check_witness_with(set: &PointSet, w: &Schedule, closure: Closure) -> Result<bool, FormulaError> {
    w.validate(set.len(), closure)?;
    Ok(first_failing_conjunct(set, w)?.is_none())
}

pub fn check_witness(set: &PointSet, w: &Schedule) -> Result<bool, FormulaError> {
    check_witness_with(set, w, Closure::Return)
}

/// Complete `g(3..=k)` given `g(1)`, `g(2)`: each conjunct admits at most
/// one value of its last bit. The inner `Err` names the first conjunct
/// that admits none.
fn complete_bits(
    set: &PointSet,
    f: &[usize],
    f0: usize,
    g1: u8,
    g2: u8,
) -> Result<Result<Vec<u8>, usize>, FormulaError> {
    let mut g = vec![g1, g2];
    for i in 3..=f.len() {
        g.push(0);
        let zero = conjunct(set, f, f0, &g, i)?;
        g[i - 1] = 1;
        let one = conjunct(set, f, f0, &g, i)?;
        match (zero, one) {
            (true, true) => return Err(FormulaError::AmbiguousFlags(i)),
            (true, false) => g[i - 1] = 0,
            (false, true) => g[i - 1] = 1,
            (false, false) => return Ok(Err(i)),
        }
    }
    Ok(Ok(g))
}

/// Lay a chain of stops out as a schedule: the opening stop supplies
/// `f(1)` (its partner) and `f(2)` (its pivot), every later stop its pivot.
/// Bits are recovered from the predicate, starting from `g(1) = 1` and
/// preferring `g(2) = 0`.
pub fn witness_from_stops(set: &PointSet, stops: &[Stop]) -> Result<Schedule, FormulaError> {
    let n = set.len();
    if n < 3 {
        return Err(FormulaError::TooFewPoints(n));
    }
    for (i, pair) in stops.windows(2).enumerate() {
        if pair[1].other != pair[0].pivot {
            return Err(FormulaError::BrokenChain(i, i + 1));
        }
    }
    let mut f = vec![stops[0].other + 1, stops[0].pivot + 1];
    f.extend(stops.iter().skip(1).map(|s| s.pivot + 1));
    let p = super::f0(f[0], f[1], n);
    let mut furthest = 3;
    for g2 in [0, 1] {
        match complete_bits(set, &f, p, 1, g2)? {
            Ok(g) => return Ok(Schedule { k: f.len(), f, g }),
            Err(i) => furthest = furthest.max(i),
        }
    }
    Err(FormulaError::NoConsistentFlags(furthest))
}

/// Turn a closed, covering trace into a schedule.
pub fn trace_to_witness(set: &PointSet, trace: &Trace) -> Result<Schedule, FormulaError> {
    let steps = trace.first_return.ok_or(FormulaError::TraceNotClosed)?;
    if trace.pivots_seen.len() != set.len() {
        return Err(FormulaError::TraceNotCovering);
    }
    witness_from_stops(set, &trace.stops[..=steps])
}

/// Every witness `(f, g)` for a small set, by enumerating the schedule
/// class and completing the bits of each pivot sequence.
pub fn all_witnesses(set: &PointSet, closure: Closure) -> Result<Vec<Schedule>, FormulaError> {
    let n = set.len();
    let mut out = Vec::new();
    for f in enum_kn(n, closure, false)? {
        let p = super::f0(f[0], f[1], n);
        for (g1, g2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            if let Ok(g) = complete_bits(set, &f, p, g1, g2)? {
                out.push(Schedule { k: f.len(), f: f.clone(), g });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WmMode {
    /// Three of the points are collinear (or two coincide).
    Vacuous,
    /// Exhaustive search over the schedule class.
    Enumerated,
    /// A witness built by running the windmill from a halving start.
    Constructed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WmVerdict {
    pub holds: bool,
    pub mode: WmMode,
    /// 1-based indices of a collinear triple, for vacuous verdicts.
    pub collinear: Option<[usize; 3]>,
    pub witness: Option<Schedule>,
}

/// Decide the windmill statement for a list of points (general position not
/// required). Three points are searched exhaustively; larger sets get a
/// witness from the windmill itself, checked conjunct by conjunct.
pub fn wm_eval(points: &[Point]) -> Result<WmVerdict, FormulaError> {
    if let Some((i, j, k)) = first_collinear_triple(points) {
        return Ok(WmVerdict {
            holds: true,
            mode: WmMode::Vacuous,
            collinear: Some([i + 1, j + 1, k + 1]),
            witness: None,
        });
    }
    let n = points.len();
    if n < 3 {
        return Err(FormulaError::TooFewPoints(n));
    }
    let set = PointSet::new(points.to_vec())?;
    if n == 3 {
        let witness = all_witnesses(&set, Closure::Return)?.into_iter().next();
        return Ok(WmVerdict { holds: witness.is_some(), mode: WmMode::Enumerated, collinear: None, witness });
    }
    let start = halving_start(&set, OddSplit::default())?;
    let trace = run(&set, &start, default_max_steps(n))?;
    let witness = trace_to_witness(&set, &trace)?;
    let holds = check_witness(&set, &witness)?;
    Ok(WmVerdict { holds, mode: WmMode::Constructed, collinear: None, witness: Some(witness) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::OddSplit;

    fn triangle() -> PointSet {
        PointSet::new(vec![Point::int(0, 0), Point::int(2, 0), Point::int(1, 2)]).unwrap()
    }

    #[test]
    fn triangle_has_witnesses_for_every_rotation() {
        let ws = all_witnesses(&triangle(), Closure::Return).unwrap();
        // six pivot sequences, four opening bit pairs each
        assert_eq!(ws.len(), 24);
        for w in &ws {
            assert!(check_witness(&triangle(), w).unwrap());
        }
    }

    #[test]
    fn triangle_run_gives_witness() {
        let s = triangle();
        let start = halving_start(&s, OddSplit::default()).unwrap();
        let t = run(&s, &start, default_max_steps(3)).unwrap();
        let w = trace_to_witness(&s, &t).unwrap();
        assert_eq!(w.k, 5);
        assert_eq!(w.g[0], 1);
        assert!(check_witness(&s, &w).unwrap());
        assert!(all_witnesses(&s, Closure::Return).unwrap().contains(&w));
    }

    #[test]
    fn open_trace_is_rejected() {
        let s = triangle();
        let start = halving_start(&s, OddSplit::default()).unwrap();
        let t = run(&s, &start, 2).unwrap();
        assert_eq!(trace_to_witness(&s, &t), Err(FormulaError::TraceNotClosed));
    }

    #[test]
    fn collinear_points_hold_vacuously() {
        let pts = vec![Point::int(0, 0), Point::int(5, 1), Point::int(1, 1), Point::int(2, 2)];
        let v = wm_eval(&pts).unwrap();
        assert!(v.holds);
        assert_eq!(v.mode, WmMode::Vacuous);
        assert_eq!(v.collinear, Some([1, 3, 4]));
    }
}
