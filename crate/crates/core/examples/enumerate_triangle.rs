//! Enumerate every pivot schedule for three points and the witnesses a
//! concrete triangle admits.

use windmill_core::formula::{all_witnesses, enum_kn, Closure};
use windmill_core::kernel::Point;
use windmill_core::PointSet;

fn main() {
    for f in enum_kn(3, Closure::Return, false).unwrap() {
        println!("schedule {f:?}");
    }
    // exchanging the opening pair at the end is impossible for three points
    println!("with exchanged closure: {} schedules", enum_kn(3, Closure::Reversed, false).unwrap().count());

    let set = PointSet::new(vec![Point::int(0, 0), Point::int(4, 1), Point::int(1, 3)]).unwrap();
    for w in all_witnesses(&set, Closure::Return).unwrap() {
        println!("witness f={:?} g={:?}", w.f, w.g);
    }
}
