//! Reduced homology over GF(p) and over the rationals.

use shellgcd::{fixtures, reduced_homology, FieldSpec};

pub fn run() -> bool {
    let fields = [FieldSpec::GF2, FieldSpec::gf(3).unwrap(), FieldSpec::Rationals];
    let mut ok = true;
    for (name, c) in [
        ("5-cycle", fixtures::k()),
        ("dunce hat", fixtures::dunce_hat()),
        ("RP2", fixtures::projective_plane()),
    ] {
        for f in fields {
            let h = reduced_homology(&c, f).unwrap();
            println!(
                "{name:<10} {:<6} {h}   (χ̃ = {})",
                f.to_string(),
                h.euler_characteristic()
            );
            ok &= h.euler_characteristic() == c.reduced_euler_characteristic();
        }
    }
    let rp2_gf2 = reduced_homology(&fixtures::projective_plane(), FieldSpec::GF2).unwrap();
    ok && rp2_gf2.rank(1) == 1
        && reduced_homology(&fixtures::dunce_hat(), FieldSpec::Rationals)
            .unwrap()
            .is_acyclic()
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}
