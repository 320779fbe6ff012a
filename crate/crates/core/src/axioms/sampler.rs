use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::line::{incident, LineRep};
use crate::kernel::{collinear, Point, Rational};

/// Seeded generator of points, lines and collinear configurations over a
/// bounded rational grid. Numerators lie in `[-coord_bound, coord_bound]`,
/// denominators in `1..=denom_bound`.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    coord_bound: i64,
    denom_bound: i64,
}

/// Resampling attempts before a trial is skipped as not engaged.
const ATTEMPTS: usize = 64;

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler::with_bounds(seed, 24, 6)
    }

    pub fn with_bounds(seed: u64, coord_bound: i64, denom_bound: i64) -> Sampler {
        assert!(coord_bound >= 1 && denom_bound >= 1);
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), coord_bound, denom_bound }
    }

    /// Independent stream `stream` of the generator seeded with `seed`.
    pub fn stream(seed: u64, stream: u64) -> Sampler {
        let mut s = Sampler::new(seed);
        s.rng.set_stream(stream);
        s
    }

    pub fn coin(&mut self, numer: u32, denom: u32) -> bool {
        self.rng.gen_ratio(numer, denom)
    }

    pub fn rational(&mut self) -> Rational {
        let p = self.rng.gen_range(-self.coord_bound..=self.coord_bound);
        let q = self.rng.gen_range(1..=self.denom_bound);
        Rational::new(p, q).expect("positive denominator")
    }

    /// A small parameter for positions along a line: halves and thirds in
    /// `[-4, 4]`, so repeats and betweenness both come up often.
    pub fn param(&mut self) -> Rational {
        let q = self.rng.gen_range(1..=3i64);
        let p = self.rng.gen_range(-4 * q..=4 * q);
        Rational::new(p, q).expect("positive denominator")
    }

    /// A parameter strictly inside `(0, 1)`.
    pub fn unit_param(&mut self) -> Rational {
        let q = self.rng.gen_range(2..=12i64);
        let p = self.rng.gen_range(1..q);
        Rational::new(p, q).expect("positive denominator")
    }

    pub fn point(&mut self) -> Point {
        Point::new(self.rational(), self.rational())
    }

    pub fn direction(&mut self) -> Point {
        loop {
            let d = self.point();
            if !d.is_zero() {
                return d;
            }
        }
    }

    pub fn line(&mut self) -> LineRep {
        let p = self.point();
        let d = self.direction();
        LineRep::new(&p, &d).expect("nonzero direction")
    }

    pub fn point_on(&mut self, g: &LineRep) -> Point {
        let t = self.param();
        g.point_at(&t)
    }

    /// A point on `g` one time in three, otherwise a free point.
    pub fn point_near(&mut self, g: &LineRep) -> Point {
        if self.coin(1, 3) {
            self.point_on(g)
        } else {
            self.point()
        }
    }

    /// A free point, moved to the side of `g` opposite `p` when `p` is off
    /// `g` (reflection through a point of `g` swaps the sides).
    pub fn point_across(&mut self, g: &LineRep, p: &Point) -> Point {
        let q = self.point();
        let side = g.side(p);
        if !side.is_zero() && g.side(&q) == side {
            &g.base().scale(&Rational::from(2)) - &q
        } else {
            q
        }
    }

    /// Half the time [`Sampler::point_across`], otherwise [`Sampler::point_near`].
    pub fn partner(&mut self, g: &LineRep, p: &Point) -> Point {
        if self.coin(1, 2) {
            self.point_across(g, p)
        } else {
            self.point_near(g)
        }
    }

    /// A line through `p` other than `g`.
    pub fn line_through_except(&mut self, p: &Point, g: &LineRep) -> LineRep {
        loop {
            let d = self.direction();
            let h = LineRep::new(p, &d).expect("nonzero direction");
            if h != *g {
                return h;
            }
        }
    }

    /// `k` points on one random line (repeats possible).
    pub fn collinear(&mut self, k: usize) -> Vec<Point> {
        let g = self.line();
        (0..k).map(|_| self.point_on(&g)).collect()
    }

    /// `k` points on one random line, in order along it half of the time.
    pub fn collinear_maybe_sorted(&mut self, k: usize) -> Vec<Point> {
        let g = self.line();
        let mut ts: Vec<Rational> = (0..k).map(|_| self.param()).collect();
        if self.coin(1, 2) {
            ts.sort();
        }
        ts.iter().map(|t| g.point_at(t)).collect()
    }

    /// Three points not on a common line, or `None` after repeated bad luck.
    pub fn triangle(&mut self) -> Option<[Point; 3]> {
        for _ in 0..ATTEMPTS {
            let (a, b, c) = (self.point(), self.point(), self.point());
            if !collinear(&a, &b, &c) {
                return Some([a, b, c]);
            }
        }
        None
    }

    /// A point off `g`.
    pub fn point_off(&mut self, g: &LineRep) -> Option<Point> {
        (0..ATTEMPTS).map(|_| self.point()).find(|p| !incident(p, g))
    }

    /// A free point satisfying `accept`.
    pub fn point_where(&mut self, accept: impl Fn(&Point) -> bool) -> Option<Point> {
        (0..ATTEMPTS).map(|_| self.point()).find(|p| accept(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<Point> = {
            let mut s = Sampler::stream(9, 2);
            (0..5).map(|_| s.point()).collect()
        };
        let b: Vec<Point> = {
            let mut s = Sampler::stream(9, 2);
            (0..5).map(|_| s.point()).collect()
        };
        let c: Vec<Point> = {
            let mut s = Sampler::stream(9, 3);
            (0..5).map(|_| s.point()).collect()
        };
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn across_lands_on_the_other_side() {
        let mut s = Sampler::new(4);
        for _ in 0..100 {
            let g = s.line();
            let Some(p) = s.point_off(&g) else { continue };
            let q = s.point_across(&g, &p);
            assert!(g.side(&q) != g.side(&p));
        }
    }

    #[test]
    fn collinear_samples_are_collinear() {
        let mut s = Sampler::new(1);
        for _ in 0..100 {
            let v = s.collinear(3);
            assert!(collinear(&v[0], &v[1], &v[2]));
        }
    }
}
