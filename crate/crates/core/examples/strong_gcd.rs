//! Strong gcd-orders of minimal non-faces, and their duality with weak shellings of the dual.

use shellgcd::order::weak_shelling_violation;
use shellgcd::{check_strong_gcd_order, find_strong_gcd_order, fixtures, Face, SearchConfig, SearchOutcome};

pub fn run() -> bool {
    let config = SearchConfig::from_env();
    let d1 = fixtures::delta1();
    let order = fixtures::delta1_nonface_order();
    let report = check_strong_gcd_order(&d1, &order).unwrap();
    println!("Δ1 listed order is a strong gcd-order: {}", report.verdict);

    // the reversed complements form a weak shelling of the dual
    let n = d1.n_vertices();
    let dual_order: Vec<Face> = order.iter().rev().map(|m| m.complement(n)).collect();
    let weak = weak_shelling_violation(&dual_order, Face::full(n)).is_none();
    println!("reversed complements weakly shell the dual: {weak}");

    let d3 = fixtures::delta3();
    let outcome = find_strong_gcd_order(&d3, &config);
    println!("Δ3 ({} non-faces): {outcome:?}", d3.minimal_nonfaces().len());

    let k = fixtures::k();
    let k_outcome = find_strong_gcd_order(&k, &config);
    if let Some(cert) = k_outcome.certificate() {
        let shown: Vec<String> = cert.sequence.iter().map(|&m| k.display_face(m)).collect();
        println!("5-cycle: {}", shown.join(" "));
    } else {
        println!("5-cycle: {k_outcome:?}");
    }

    report.verdict && weak && outcome == SearchOutcome::NoneExists
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}
