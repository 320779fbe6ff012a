//! Independent oracles for the integration tests. None of them calls the
//! library's predicates; they work on raw coordinates with dot and cross
//! products, or by plain enumeration.

#![allow(dead_code)]

use std::collections::BTreeSet;

use windmill_core::{Point, Rational};

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

pub fn p(x: i64, y: i64) -> Point {
    Point::int(x, y)
}

fn sub(a: &Point, b: &Point) -> (Rational, Rational) {
    (&a.x - &b.x, &a.y - &b.y)
}

fn dot(u: &(Rational, Rational), v: &(Rational, Rational)) -> Rational {
    &(&u.0 * &v.0) + &(&u.1 * &v.1)
}

fn cross(u: &(Rational, Rational), v: &(Rational, Rational)) -> Rational {
    &(&u.0 * &v.1) - &(&u.1 * &v.0)
}

/// Next pivot of a line through `a` and `b` turning about `a`
/// counterclockwise (`sense = 1`) or clockwise (`sense = -1`).
///
/// Every other point `c` is reached after a turn by the angle between the
/// line `ab` and the line `ac`, measured in the turning sense and taken in
/// `(0, pi)`. That angle is increasing in `-cot`, i.e. in `-along / across`
/// once `across` is made positive. The smallest key wins; with no other
/// point the line comes back to `b` after a half-turn.
pub fn angular_next(points: &[Point], a: usize, b: usize, sense: i8) -> usize {
    let u = sub(&points[b], &points[a]);
    let mut best: Option<(Rational, usize)> = None;
    for c in (0..points.len()).filter(|&c| c != a && c != b) {
        let w = sub(&points[c], &points[a]);
        let mut across = cross(&u, &w);
        if sense < 0 {
            across = -&across;
        }
        let mut along = dot(&u, &w);
        assert!(!across.is_zero(), "collinear input");
        if across < Rational::zero() {
            across = -&across;
            along = -&along;
        }
        let key = &(-&along) / &across;
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, c));
        }
    }
    best.map_or(b, |(_, c)| c)
}

/// Strict betweenness from the affine parameter of `b` on segment `ac`.
pub fn between_by_parameter(a: &Point, b: &Point, c: &Point) -> bool {
    let ac = sub(c, a);
    let ab = sub(b, a);
    let len = dot(&ac, &ac);
    if len.is_zero() || !cross(&ac, &ab).is_zero() {
        return false;
    }
    let t = &dot(&ab, &ac) / &len;
    Rational::zero() < t && t < Rational::one()
}

/// Separation of `(a1, a2)` and `(a3, a4)` on a common line, evaluated from
/// its definition with two concrete witness lines: the lines through `a1`
/// and `a2` perpendicular to the x-axis (or to the y-axis when the carrier
/// is vertical). `a3` and `a4` are separated iff exactly one witness line
/// puts them on different sides.
pub fn defsep(a1: &Point, a2: &Point, a3: &Point, a4: &Point) -> bool {
    let coord = |q: &Point| if a1.x != a2.x { q.x.clone() } else { q.y.clone() };
    let differs = |anchor: &Point, u: &Point, v: &Point| {
        let su = coord(u) - coord(anchor);
        let sv = coord(v) - coord(anchor);
        !su.is_zero() && !sv.is_zero() && (su < Rational::zero()) != (sv < Rational::zero())
    };
    let kept = differs(a1, a3, a4) == differs(a2, a3, a4);
    !kept
}

/// Every pivot sequence of length `3..=n(n-1)+1` over `1..=n` that is onto,
/// never repeats one of its two predecessors, and ends as `closure` asks:
/// `(f(1), f(2))` again when `reversed` is false, `(f(2), f(1))` when true.
pub fn brute_schedules(n: usize, reversed: bool) -> BTreeSet<Vec<usize>> {
    let max = n * (n - 1) + 1;
    let mut out = BTreeSet::new();
    let mut f = Vec::new();
    fn go(n: usize, max: usize, reversed: bool, f: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        let k = f.len();
        if k >= 3 {
            let onto = (1..=n).all(|i| f.contains(&i));
            let closed = if reversed {
                f[k - 2] == f[1] && f[k - 1] == f[0]
            } else {
                f[k - 2] == f[0] && f[k - 1] == f[1]
            };
            if onto && closed {
                out.insert(f.clone());
            }
        }
        if k == max {
            return;
        }
        for v in 1..=n {
            if k >= 2 && (v == f[k - 1] || v == f[k - 2]) {
                continue;
            }
            f.push(v);
            go(n, max, reversed, f, out);
            f.pop();
        }
    }
    go(n, max, reversed, &mut f, &mut out);
    out
}
