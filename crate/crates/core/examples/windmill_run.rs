//! Run the windmill from a halving start and print every stop.
//!
//! `cargo run --example windmill_run -- 9 4` (size, seed)

use windmill_core::engine::{analyze, default_max_steps};
use windmill_core::io::gen_points;
use windmill_core::{halving_start, run, OddSplit};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(7) as usize;
    let seed = args.next().unwrap_or(0);

    let set = gen_points(n, seed, 100).expect("generated set");
    let start = halving_start(&set, OddSplit::SouthSmaller).expect("at least three points");
    let trace = run(&set, &start, default_max_steps(n)).expect("valid start");

    println!("{n} points, turning {:?}", trace.rotation);
    for (i, (stop, delta)) in trace.stops.iter().zip(&trace.deltas).enumerate() {
        let pivot = &set.points()[stop.pivot];
        println!("{i:>4}  pivot {:>2} at {pivot}  partner {:>2}  delta {delta:>2}", stop.pivot + 1, stop.other + 1);
    }
    let report = analyze(&trace, n);
    println!(
        "back at the opening stop after {} steps; every point pivoted: {}; violations: {}",
        trace.first_return.map_or("no".into(), |k| k.to_string()),
        report.coverage,
        report.violations.len()
    );
}
