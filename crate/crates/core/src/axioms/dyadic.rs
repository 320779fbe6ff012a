use serde::{Deserialize, Serialize};

use super::line::{different_sides, incident, LineRep};
use crate::kernel::{line_intersection, Point, Rational};

/// A point whose coordinates have power-of-two denominators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Point", into = "Point")]
pub struct DyadicPoint(Point);

impl DyadicPoint {
    pub fn new(p: Point) -> Option<DyadicPoint> {
        if p.x.is_dyadic() && p.y.is_dyadic() {
            Some(DyadicPoint(p))
        } else {
            None
        }
    }

    pub fn point(&self) -> &Point {
        &self.0
    }
}

impl TryFrom<Point> for DyadicPoint {
    type Error = String;
    fn try_from(p: Point) -> Result<Self, String> {
        DyadicPoint::new(p.clone()).ok_or_else(|| format!("{p} has a non-dyadic coordinate"))
    }
}

impl From<DyadicPoint> for Point {
    fn from(d: DyadicPoint) -> Point {
        d.0
    }
}

/// A pair of dyadic points on different sides of a dyadic line whose
/// segment meets the line only at a non-dyadic point.
///
/// Stored values are plain points so that [`SideGapCertificate::verify`]
/// recomputes every claim instead of trusting the types.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideGapCertificate {
    pub a: Point,
    pub b: Point,
    /// Two points fixing the separating line.
    pub anchors: [Point; 2],
    /// Side functional of the separating line at `a` and at `b`.
    pub side_at_a: Rational,
    pub side_at_b: Rational,
    /// Meeting point of the separating line and the line `ab`.
    pub intersection: Point,
    pub inputs_dyadic: bool,
    pub different_sides: bool,
    pub intersection_dyadic: bool,
}

impl SideGapCertificate {
    pub fn build(a: Point, b: Point, anchors: [Point; 2]) -> Option<SideGapCertificate> {
        let g = LineRep::through(&anchors[0], &anchors[1]).ok()?;
        let intersection = line_intersection(&a, &b, &anchors[0], &anchors[1])?;
        let inputs_dyadic = [&a, &b, &anchors[0], &anchors[1]]
            .iter()
            .all(|p| DyadicPoint::new((*p).clone()).is_some());
        Some(SideGapCertificate {
            side_at_a: g.side_value(&a),
            side_at_b: g.side_value(&b),
            different_sides: different_sides(&a, &g, &b),
            intersection_dyadic: DyadicPoint::new(intersection.clone()).is_some(),
            intersection,
            inputs_dyadic,
            a,
            b,
            anchors,
        })
    }

    /// Re-derive every claim from `a`, `b` and the anchors and compare with
    /// the stored values. True iff the certificate is sound and shows a
    /// genuine gap.
    pub fn verify(&self) -> bool {
        let Some(again) = SideGapCertificate::build(self.a.clone(), self.b.clone(), self.anchors.clone())
        else {
            return false;
        };
        let Ok(g) = LineRep::through(&self.anchors[0], &self.anchors[1]) else {
            return false;
        };
        let Ok(ab) = LineRep::through(&self.a, &self.b) else {
            return false;
        };
        again == *self
            && self.inputs_dyadic
            && self.different_sides
            && !self.intersection_dyadic
            && incident(&self.intersection, &g)
            && incident(&self.intersection, &ab)
    }
}

/// The standard gap in the dyadic plane: `(0,0)` and `(2,2)` lie on
/// different sides of the line through `(0,1)` and `(2,0)`, which meets
/// `y = x` only at `(2/3, 2/3)`.
pub fn dyadic_counterexample() -> SideGapCertificate {
    SideGapCertificate::build(
        Point::int(0, 0),
        Point::int(2, 2),
        [Point::int(0, 1), Point::int(2, 0)],
    )
    .expect("the two lines cross")
}
