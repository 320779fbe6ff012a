//! Two dyadic points on different sides of a dyadic line whose segment
//! crosses the line at a point with denominator 3.

use windmill_core::axioms::dyadic_counterexample;
use windmill_core::io::to_json;

fn main() {
    let cert = dyadic_counterexample();
    println!("a = {}, b = {}", cert.a, cert.b);
    println!("line through {} and {}", cert.anchors[0], cert.anchors[1]);
    println!("side values {} and {}", cert.side_at_a, cert.side_at_b);
    println!("crossing {} (dyadic: {})", cert.intersection, cert.intersection_dyadic);
    println!("verified: {}", cert.verify());
    print!("{}", to_json(&cert));
}
