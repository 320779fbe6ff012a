//! Draw a full windmill cycle as SVG.
//!
//! `cargo run --example svg_figure -- windmill.svg`

use windmill_core::engine::default_max_steps;
use windmill_core::io::{emit_svg, gen_points};
use windmill_core::{halving_start, run, OddSplit};

fn main() -> std::io::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "windmill.svg".into());
    let set = gen_points(8, 3, 100).expect("generated set");
    let start = halving_start(&set, OddSplit::default()).expect("at least three points");
    let trace = run(&set, &start, default_max_steps(set.len())).expect("valid start");
    std::fs::write(&path, emit_svg(&trace, &set))?;
    println!("{} stops written to {path}", trace.stops.len());
    Ok(())
}
