use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::kernel::{ContractError, Point, Rational, Sign};

/// A line of the rational plane in canonical form, so that two values are
/// equal exactly when they denote the same point set.
///
/// The direction is a primitive integer vector whose first nonzero
/// coordinate is positive. The base is the point of the line on the y-axis,
/// or on the x-axis for vertical lines.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LineRep {
    base: Point,
    dir: Point,
}

fn primitive(dir: &Point) -> Point {
    let scale = Rational::common_denominator([&dir.x, &dir.y]);
    let x: BigInt = dir.x.numer() * (&scale / dir.x.denom());
    let y: BigInt = dir.y.numer() * (&scale / dir.y.denom());
    let g = x.gcd(&y);
    let (mut x, mut y) = (x / &g, y / &g);
    if x.is_negative() || (x.is_zero() && y.is_negative()) {
        x = -x;
        y = -y;
    }
    Point::new(Rational::from_integer(x), Rational::from_integer(y))
}

impl LineRep {
    /// The line through `point` with direction `dir`.
    pub fn new(point: &Point, dir: &Point) -> Result<LineRep, ContractError> {
        if dir.is_zero() {
            return Err(ContractError::DegenerateLine(Box::new(point.clone())));
        }
        let dir = primitive(dir);
        let base = if !dir.x.is_zero() {
            let t = &point.x / &dir.x;
            point - &dir.scale(&t)
        } else {
            Point::new(point.x.clone(), Rational::zero())
        };
        Ok(LineRep { base, dir })
    }

    /// The unique line through two distinct points.
    pub fn through(a: &Point, b: &Point) -> Result<LineRep, ContractError> {
        if a == b {
            return Err(ContractError::DegenerateLine(Box::new(a.clone())));
        }
        LineRep::new(a, &(b - a))
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn dir(&self) -> &Point {
        &self.dir
    }

    /// `base + t * dir`.
    pub fn point_at(&self, t: &Rational) -> Point {
        &self.base + &self.dir.scale(t)
    }

    /// The affine functional `dir x (p - base)`: zero on the line, and of
    /// opposite signs on the two sides.
    pub fn side_value(&self, p: &Point) -> Rational {
        self.dir.cross(&(p - &self.base))
    }

    pub fn side(&self, p: &Point) -> Sign {
        self.side_value(p).sign()
    }

    pub fn is_parallel(&self, other: &LineRep) -> bool {
        self.dir == other.dir
    }
}

impl fmt::Display for LineRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + t{}", self.base, self.dir)
    }
}

/// Incidence of a point and a line.
pub fn incident(a: &Point, g: &LineRep) -> bool {
    g.side(a).is_zero()
}

/// `a` and `b` lie strictly on different sides of `g`; false whenever
/// either is on `g`.
pub fn different_sides(a: &Point, g: &LineRep, b: &Point) -> bool {
    let sa = g.side(a);
    !sa.is_zero() && sa == g.side(b).flip()
}

/// Two-line side relation of the incidence axioms: `a` and `b` are
/// separated by both of `g`, `h` or by neither.
pub fn same_parity(a: &Point, b: &Point, g: &LineRep, h: &LineRep) -> bool {
    different_sides(a, g, b) == different_sides(a, h, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::int(x, y)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn incidence_examples() {
        let g = LineRep::new(&p(0, 0), &p(1, 1)).unwrap();
        assert!(incident(&p(1, 1), &g));
        assert!(!incident(&p(1, 2), &g));
        let h = LineRep::new(&Point::new(r(3, 7), r(-2, 5)), &Point::new(r(1, 3), r(4, 9))).unwrap();
        assert!(incident(&Point::new(r(3, 7), r(-2, 5)), &h));
        assert!(incident(h.base(), &h));
    }

    #[test]
    fn side_examples() {
        let x_axis = LineRep::through(&p(0, 0), &p(1, 0)).unwrap();
        assert!(different_sides(&p(0, 1), &x_axis, &p(0, -1)));
        assert!(!different_sides(&p(0, 1), &x_axis, &p(1, 1)));
        assert!(!different_sides(&p(0, 0), &x_axis, &p(0, 1)));
    }

    #[test]
    fn representation_is_canonical() {
        let g = LineRep::through(&p(1, 2), &p(3, 5)).unwrap();
        assert_eq!(g, LineRep::through(&p(3, 5), &p(1, 2)).unwrap());
        assert_eq!(g, LineRep::through(&p(-1, -1), &p(5, 8)).unwrap());
        assert_eq!(g, LineRep::new(&p(7, 11), &Point::new(r(-1, 3), r(-1, 2))).unwrap());
        assert_eq!(g.dir(), &p(2, 3));
        assert_eq!(g.base(), &Point::new(r(0, 1), r(1, 2)));
        assert_ne!(g, LineRep::through(&p(1, 2), &p(3, 6)).unwrap());

        let v = LineRep::through(&p(4, 9), &p(4, -1)).unwrap();
        assert_eq!(v.dir(), &p(0, 1));
        assert_eq!(v.base(), &p(4, 0));
    }

    #[test]
    fn degenerate_lines_are_rejected() {
        assert!(LineRep::through(&p(1, 1), &p(1, 1)).is_err());
        assert!(LineRep::new(&p(1, 1), &p(0, 0)).is_err());
    }
}
