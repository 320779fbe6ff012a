//! Sample the betweenness and incidence-plane axioms over the rationals.
//!
//! `cargo run --release --example check_axioms -- 10000 3` (trials, seed)

use windmill_core::axioms::check_suite;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let trials = args.next().unwrap_or(2_000) as usize;
    let seed = args.next().unwrap_or(0);

    let suite = check_suite(seed, trials, None).expect("positive trial count");
    for c in &suite.checks {
        println!("{:<5} engaged {:>6}/{trials}  violations {}", c.check, c.engaged, c.violations.len());
    }
    println!("clean: {}", suite.ok());
}
