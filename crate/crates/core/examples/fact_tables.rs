//! Fact tables with provenance for the worked examples and a random complex.

use shellgcd::random::random_complex;
use shellgcd::{build_fact_table, fixtures, FieldSpec, SearchConfig, Slot, Truth};

pub fn run() -> bool {
    let config = SearchConfig::from_env();
    let fields = FieldSpec::defaults();
    let mut ok = true;
    for (name, c, claim) in [
        ("Δ1", fixtures::delta1(), None),
        ("Δ2", fixtures::delta2(), None),
        ("Δ3", fixtures::delta3(), Some(true)),
        ("random", random_complex(42, 6, 0.15).unwrap(), None),
    ] {
        let mut table = build_fact_table(&c, &fields, &config);
        if let Some(claim) = claim {
            table = table.with_paper_claim(Slot::Golod, claim);
        }
        println!("{name}\n{table}");
        ok &= table.conflicts().is_empty();
        if name == "Δ3" {
            ok &= table.value(Slot::Golod) == Truth::OutOfScope;
        }
    }
    ok
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}
