use serde::Serialize;

use crate::engine::{analyze, PointSet, Report, Rotation, Trace, Violation};
use crate::kernel::{Point, Sign};

/// A stop with 1-based point indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StopOut {
    pub pivot: usize,
    pub other: usize,
    pub south: Sign,
}

/// The serialized form of a run. Point indices are 1-based, matching the
/// line order of the points file. Field order is the key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceDocument {
    pub n: usize,
    pub rotation: Rotation,
    pub points: Vec<Point>,
    pub stops: Vec<StopOut>,
    pub deltas: Vec<i64>,
    pub first_return: Option<usize>,
    pub pivots_seen: Vec<usize>,
    pub report: Report,
}

impl TraceDocument {
    pub fn new(trace: &Trace, set: &PointSet) -> TraceDocument {
        let mut report = analyze(trace, set.len());
        for v in &mut report.violations {
            if let Violation::MissingPivots { missing } = v {
                missing.iter_mut().for_each(|i| *i += 1);
            }
        }
        TraceDocument {
            n: set.len(),
            rotation: trace.rotation,
            points: set.points().to_vec(),
            stops: trace
                .stops
                .iter()
                .map(|s| StopOut { pivot: s.pivot + 1, other: s.other + 1, south: s.south })
                .collect(),
            deltas: trace.deltas.clone(),
            first_return: trace.first_return,
            pivots_seen: trace.pivots_seen.iter().map(|i| i + 1).collect(),
            report,
        }
    }
}

/// Pretty-printed JSON of a run and its invariant report, newline
/// terminated. Equal inputs give byte-identical text.
pub fn emit_trace(trace: &Trace, set: &PointSet) -> String {
    to_json(&TraceDocument::new(trace, set))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
