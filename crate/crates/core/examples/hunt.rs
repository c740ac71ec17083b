//! Seeded search for a sequentially Cohen-Macaulay complex without a weak shelling order.

use shellgcd::hunt::{hunt_counterexample, HuntConfig};

pub fn run() -> bool {
    run_with(200)
}

pub fn run_with(budget: usize) -> bool {
    let report = hunt_counterexample(7, budget, &HuntConfig::default());
    println!("{:#?}", report.stats);
    for hit in &report.hits {
        println!("hit: {hit}");
    }
    report.stats.sampled == budget
}

#[allow(dead_code)]
fn main() {
    let budget = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    if !run_with(budget) {
        std::process::exit(1);
    }
}
