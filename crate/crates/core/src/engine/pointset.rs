use crate::kernel::{orient, Point, Sign};

/// Above this size the orientation table is not materialized.
const CACHE_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PointSetError {
    #[error("need at least two points, got {0}")]
    TooFew(usize),
    #[error("points {first} and {second} coincide")]
    Duplicate { first: usize, second: usize },
    #[error("points {0}, {1}, {2} are collinear")]
    Collinear(usize, usize, usize),
}

/// A finite planar set in general position: at least two points, pairwise
/// distinct, no three collinear. Indices are 0-based.
#[derive(Debug, Clone)]
pub struct PointSet {
    points: Vec<Point>,
    table: Option<Vec<Sign>>,
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for PointSet {}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, PointSetError> {
        let n = points.len();
        if n < 2 {
            return Err(PointSetError::TooFew(n));
        }
        for i in 0..n {
            for j in i + 1..n {
                if points[i] == points[j] {
                    return Err(PointSetError::Duplicate { first: i, second: j });
                }
            }
        }
        if let Some((i, j, k)) = first_collinear_triple(&points) {
            return Err(PointSetError::Collinear(i, j, k));
        }
        let table = (n <= CACHE_LIMIT).then(|| {
            let mut t = vec![Sign::Zero; n * n * n];
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        t[(i * n + j) * n + k] = orient(&points[i], &points[j], &points[k]);
                    }
                }
            }
            t
        });
        Ok(PointSet { points, table })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// `orient` on indices.
    pub fn orient(&self, i: usize, j: usize, k: usize) -> Sign {
        match &self.table {
            Some(t) => {
                let n = self.points.len();
                t[(i * n + j) * n + k]
            }
            None => orient(&self.points[i], &self.points[j], &self.points[k]),
        }
    }

    /// Points `u`, `v` strictly on opposite sides of the line through `a`, `b`.
    pub fn opposite(&self, a: usize, b: usize, u: usize, v: usize) -> bool {
        debug_assert_ne!(a, b);
        let su = self.orient(a, b, u);
        !su.is_zero() && su == self.orient(a, b, v).flip()
    }
}

/// First collinear triple in lexicographic index order, if any. Coincident
/// points count as collinear.
pub fn first_collinear_triple(points: &[Point]) -> Option<(usize, usize, usize)> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient(&points[i], &points[j], &points[k]).is_zero() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}
