//! Exact sign-based predicates over rational coordinates.
//!
//! Everything here is decided by the sign of a cross product or by a
//! comparison of rationals; there is no floating point anywhere in this
//! module. `Sign::Positive` means a counterclockwise triple in standard
//! coordinates.
//!
//! The betweenness relation `between(a, b, c)` ("b strictly between a and
//! c") is the primitive of the betweenness axioms. The side relation used by
//! the windmill formula, "u and v lie on opposite sides of the line ab", is
//! defined there as the existence of a point t on the line ab that lies
//! strictly between u and v. Over the rational plane that witness always
//! exists when the orientation signs are strictly opposite (t is the exact
//! intersection of the segment uv with the line), so [`opposite_sides`]
//! tests the signs and never materializes t.

mod point;
mod rational;

pub use point::Point;
pub use rational::{Rational, RationalError};

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// Violated preconditions of the kernel predicates.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContractError {
    #[error("line through coincident points {0} and {0}")]
    DegenerateLine(Box<Point>),
    #[error("points are not pairwise distinct")]
    Coincident,
    #[error("points are not collinear")]
    NotCollinear,
}

/// Sign of `(b - a) x (c - a)`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Sign {
    let ab = b - a;
    let ac = c - a;
    // compare the two products instead of subtracting
    let lhs = &ab.x * &ac.y;
    let rhs = &ab.y * &ac.x;
    Sign::from_ordering(lhs.cmp(&rhs))
}

pub fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    orient(a, b, c).is_zero()
}

/// Strict betweenness: `b` lies inside the open segment `ac`.
pub fn between(a: &Point, b: &Point, c: &Point) -> bool {
    if a == b || b == c || a == c || !collinear(a, b, c) {
        return false;
    }
    let (lo, mid, hi) = if a.x != c.x {
        (&a.x, &b.x, &c.x)
    } else {
        (&a.y, &b.y, &c.y)
    };
    (lo < mid && mid < hi) || (hi < mid && mid < lo)
}

/// `u` and `v` lie strictly on opposite sides of the line through `a` and `b`.
pub fn opposite_sides(a: &Point, b: &Point, u: &Point, v: &Point) -> Result<bool, ContractError> {
    if a == b {
        return Err(ContractError::DegenerateLine(Box::new(a.clone())));
    }
    let su = orient(a, b, u);
    let sv = orient(a, b, v);
    Ok(!su.is_zero() && su == sv.flip())
}

/// The pair `(a1, a2)` separates the pair `(a3, a4)` on their common line:
/// exactly one of `a3`, `a4` lies strictly between `a1` and `a2`.
pub fn separates(a1: &Point, a2: &Point, a3: &Point, a4: &Point) -> Result<bool, ContractError> {
    let pts = [a1, a2, a3, a4];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return Err(ContractError::Coincident);
            }
        }
    }
    if !collinear(a1, a2, a3) || !collinear(a1, a2, a4) {
        return Err(ContractError::NotCollinear);
    }
    Ok(between(a1, a3, a2) != between(a1, a4, a2))
}

/// Betweenness recovered from incidence and the side relation: there is a
/// carrier line through `a`, `b`, `c` and a second line through `b` that
/// separates `a` from `c`.
///
/// The second line is taken perpendicular to the carrier; any line through
/// `b` other than the carrier gives the same answer in this model.
pub fn z_from_d(a: &Point, b: &Point, c: &Point) -> bool {
    if !collinear(a, b, c) {
        return false;
    }
    let carrier = if a != c {
        c - a
    } else if a != b {
        b - a
    } else {
        return false;
    };
    let cross_dir = carrier.perp();
    let b2 = b + &cross_dir;
    let sa = orient(b, &b2, a);
    let sc = orient(b, &b2, c);
    !sa.is_zero() && sa == sc.flip()
}

/// Exact intersection of the lines `p1 p2` and `q1 q2`; `None` when they are
/// parallel or coincide.
pub fn line_intersection(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> Option<Point> {
    let r = p2 - p1;
    let s = q2 - q1;
    let denom = r.cross(&s);
    if denom.is_zero() {
        return None;
    }
    let t = &(q1 - p1).cross(&s) / &denom;
    Some(p1 + &r.scale(&t))
}

/// Indices of the convex hull in counterclockwise order, starting from the
/// lexicographically least point. Collinear boundary points are dropped.
pub fn convex_hull(points: &[Point]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| points[i].cmp(&points[j]));
    idx.dedup_by(|a, b| points[*a] == points[*b]);
    if idx.len() < 3 {
        return idx;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(idx.len() * 2);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(idx.iter())
        } else {
            Box::new(idx.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2
                && orient(&points[hull[hull.len() - 2]], &points[hull[hull.len() - 1]], &points[i])
                    != Sign::Positive
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)), Sign::Positive);
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(2, 0)), Sign::Zero);
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, -1)), Sign::Negative);
    }

    #[test]
    fn between_examples() {
        assert!(between(&p(0, 0), &p(1, 0), &p(2, 0)));
        assert!(!between(&p(0, 0), &p(2, 0), &p(1, 0)));
        assert!(!between(&p(0, 0), &p(0, 0), &p(1, 0)));
        // vertical carrier uses the y order
        assert!(between(&p(3, -1), &p(3, 4), &p(3, 9)));
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&p(0, 0), &p(1, 1), &p(2, 2)));
        assert!(!collinear(&p(0, 0), &p(1, 0), &p(0, 1)));
        assert!(collinear(&p(0, 0), &p(0, 0), &p(5, 7)));
    }

    #[test]
    fn opposite_sides_examples() {
        let (a, b) = (p(0, 0), p(1, 0));
        assert!(opposite_sides(&a, &b, &p(0, 1), &p(0, -1)).unwrap());
        assert!(!opposite_sides(&a, &b, &p(0, 1), &p(1, 1)).unwrap());
        assert!(!opposite_sides(&a, &b, &p(2, 0), &p(0, -1)).unwrap());
        assert!(matches!(
            opposite_sides(&a, &a, &p(0, 1), &p(0, -1)),
            Err(ContractError::DegenerateLine(_))
        ));
    }

    #[test]
    fn separates_examples() {
        assert!(separates(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)).unwrap());
        assert!(!separates(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)).unwrap());
        let q = [p(0, 0), p(1, 0), p(2, 0), p(3, 0)];
        let held = [
            separates(&q[0], &q[1], &q[2], &q[3]).unwrap(),
            separates(&q[0], &q[2], &q[1], &q[3]).unwrap(),
            separates(&q[0], &q[3], &q[1], &q[2]).unwrap(),
        ];
        assert_eq!(held.iter().filter(|&&h| h).count(), 1);
    }

    #[test]
    fn separates_contract_errors() {
        assert_eq!(
            separates(&p(0, 0), &p(0, 0), &p(1, 0), &p(2, 0)),
            Err(ContractError::Coincident)
        );
        assert_eq!(
            separates(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 1)),
            Err(ContractError::NotCollinear)
        );
    }

    #[test]
    fn z_from_d_examples() {
        assert!(z_from_d(&p(0, 0), &p(1, 0), &p(2, 0)));
        assert!(!z_from_d(&p(0, 0), &p(3, 0), &p(2, 0)));
        assert!(!z_from_d(&p(0, 0), &p(0, 0), &p(2, 0)));
        assert!(!z_from_d(&p(1, 1), &p(1, 1), &p(1, 1)));
        assert!(!z_from_d(&p(0, 0), &p(1, 1), &p(2, 0)));
    }

    #[test]
    fn intersection_is_exact() {
        let x = line_intersection(&p(0, 0), &p(2, 2), &p(0, 1), &p(2, 0)).unwrap();
        let two_thirds = Rational::new(2, 3).unwrap();
        assert_eq!(x, Point::new(two_thirds.clone(), two_thirds));
        assert!(line_intersection(&p(0, 0), &p(1, 1), &p(0, 1), &p(1, 2)).is_none());
    }

    #[test]
    fn hull_of_square_with_interior_point() {
        let pts = [p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(2, 1)];
        assert_eq!(convex_hull(&pts), vec![0, 1, 2, 3]);
    }
}
