//! Evaluate the windmill statement on a point set and show the witness.

use windmill_core::formula::first_failing_conjunct;
use windmill_core::kernel::Point;
use windmill_core::wm_eval;

fn main() {
    let points: Vec<Point> = [(0, 0), (9, 2), (4, 7), (1, 5), (6, 9)].into_iter().map(|(x, y)| Point::int(x, y)).collect();
    let verdict = wm_eval(&points).expect("nonempty input");
    println!("holds: {} ({:?})", verdict.holds, verdict.mode);
    let w = verdict.witness.expect("points in general position");
    println!("pivot schedule f = {:?}", w.f);
    println!("partner bits   g = {:?}", w.g);

    // flipping one bit breaks the witness near that position
    let set = windmill_core::PointSet::new(points).unwrap();
    let mut bad = w.clone();
    bad.g[3] ^= 1;
    println!("with g(4) flipped, first failing conjunct: {:?}", first_failing_conjunct(&set, &bad).unwrap());

    let on_a_line = [(0, 0), (1, 1), (2, 2), (5, 0)].map(|(x, y)| Point::int(x, y));
    let vacuous = wm_eval(&on_a_line).unwrap();
    println!("collinear input: holds {} ({:?}), triple {:?}", vacuous.holds, vacuous.mode, vacuous.collinear);
}
