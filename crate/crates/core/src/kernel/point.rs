use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;

/// A point of the rational plane. Also used for difference vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(Rational::from(x), Rational::from(y))
    }

    pub fn origin() -> Self {
        Point::int(0, 0)
    }

    /// z-component of the cross product of `self` and `other` read as vectors.
    pub fn cross(&self, other: &Point) -> Rational {
        &(&self.x * &other.y) - &(&self.y * &other.x)
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &(&self.x * &other.x) + &(&self.y * &other.y)
    }

    pub fn scale(&self, t: &Rational) -> Point {
        Point::new(&self.x * t, &self.y * t)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// The vector rotated a quarter turn counterclockwise.
    pub fn perp(&self) -> Point {
        Point::new(-&self.y, self.x.clone())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl<'a> Sub<&'a Point> for &'a Point {
    type Output = Point;
    fn sub(self, rhs: &'a Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Add<&'a Point> for &'a Point {
    type Output = Point;
    fn add(self, rhs: &'a Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
