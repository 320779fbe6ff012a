//! Generate a seeded point set in general position and read it back.

use windmill_core::io::{emit_points, gen_points, parse_points};

fn main() {
    let set = gen_points(6, 42, 50).expect("room for six points");
    let text = emit_points(set.points());
    print!("{text}");
    let back = parse_points(&text).expect("own output parses");
    assert_eq!(back, set);
}
