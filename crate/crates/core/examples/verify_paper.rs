//! Re-checks every claim about the worked examples and prints one line per claim.

use shellgcd::verify::verify_paper;

pub fn run() -> bool {
    let report = verify_paper();
    for c in &report.claims {
        println!(
            "{} {:<22} {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.description
        );
        if !c.detail.is_empty() {
            println!("     {}", c.detail);
        }
    }
    report.all_passed()
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}
