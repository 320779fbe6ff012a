use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::engine::{PointSet, PointSetError};
use crate::kernel::{collinear, Point};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("lines {first} and {second} give the same point")]
    Duplicate { first: usize, second: usize },
    #[error("points {0:?} are collinear (lines {1:?})")]
    Collinear([usize; 3], [usize; 3]),
    #[error("need at least two points, got {0}")]
    TooFew(usize),
}

/// A parsed point together with the 1-based line it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located {
    pub line: usize,
    pub point: Point,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointLine {
    x: String,
    y: String,
}

/// Parse one point per line, `{"x":"p/q","y":"p/q"}`, skipping blank lines.
/// No general-position check.
pub fn parse_points_raw(text: &str) -> Result<Vec<Located>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let syntax = |message: String| ParseError::Syntax { line, message };
        let parsed: PointLine = serde_json::from_str(raw).map_err(|e| syntax(e.to_string()))?;
        let x = parsed.x.parse().map_err(|e| syntax(format!("x: {e}")))?;
        let y = parsed.y.parse().map_err(|e| syntax(format!("y: {e}")))?;
        out.push(Located { line, point: Point::new(x, y) });
    }
    Ok(out)
}

/// Parse a points file into a set in general position. Errors name file
/// lines for duplicates and point positions (1-based) for collinear triples.
pub fn parse_points(text: &str) -> Result<PointSet, ParseError> {
    let located = parse_points_raw(text)?;
    let points: Vec<Point> = located.iter().map(|l| l.point.clone()).collect();
    PointSet::new(points).map_err(|e| match e {
        PointSetError::TooFew(n) => ParseError::TooFew(n),
        PointSetError::Duplicate { first, second } => {
            ParseError::Duplicate { first: located[first].line, second: located[second].line }
        }
        PointSetError::Collinear(i, j, k) => {
            ParseError::Collinear([i + 1, j + 1, k + 1], [located[i].line, located[j].line, located[k].line])
        }
    })
}

#[derive(Serialize)]
struct PointOut {
    x: String,
    y: String,
}

/// Points file text: one JSON object per line, in order.
pub fn emit_points(points: &[Point]) -> String {
    let mut out = String::new();
    for p in points {
        let line = PointOut { x: p.x.to_string(), y: p.y.to_string() };
        out.push_str(&serde_json::to_string(&line).expect("strings serialize"));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("need at least two points, got {0}")]
    TooFew(usize),
    #[error("coordinate bound {bound} is below the point count {n}")]
    BoundTooSmall { n: usize, bound: u64 },
    #[error("no admissible position for point {index} after {attempts} draws")]
    Exhausted { index: usize, attempts: usize },
}

/// Draws per point before giving up.
pub const GEN_ATTEMPTS: usize = 10_000;

/// `n` integer points in `[0, bound]^2` in general position, drawn from a
/// ChaCha8 stream seeded with `seed`. A draw that repeats a point or lines
/// up with two earlier ones is redrawn.
pub fn gen_points(n: usize, seed: u64, bound: u64) -> Result<PointSet, GenError> {
    if n < 2 {
        return Err(GenError::TooFew(n));
    }
    if bound < n as u64 {
        return Err(GenError::BoundTooSmall { n, bound });
    }
    let hi = i64::try_from(bound).unwrap_or(i64::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Point> = Vec::with_capacity(n);
    for index in 0..n {
        let mut placed = false;
        for _ in 0..GEN_ATTEMPTS {
            let p = Point::int(rng.gen_range(0..=hi), rng.gen_range(0..=hi));
            let clash = points.iter().enumerate().any(|(i, q)| {
                *q == p || points[i + 1..].iter().any(|r| collinear(q, r, &p))
            });
            if !clash {
                points.push(p);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(GenError::Exhausted { index, attempts: GEN_ATTEMPTS });
        }
    }
    Ok(PointSet::new(points).expect("generator keeps general position"))
}
