//! Complexes from the worked examples, stored verbatim.

use crate::complex::Complex;
use crate::face::{Face, VertexSet};

fn faces(universe: &VertexSet, lists: &[&[i64]]) -> Vec<Face> {
    lists
        .iter()
        .map(|l| universe.face(l.iter().copied()).expect("fixture labels are in range"))
        .collect()
}

/// Minimal non-faces of Δ1 on `{1..6}`, in their strong gcd-order.
pub const DELTA1_NONFACES: &[&[i64]] = &[&[1, 2, 3], &[1, 2, 6], &[4, 5, 6]];

/// Facets of the 8-vertex dunce hat triangulation Δ2∨, as listed.
pub const DUNCE_HAT_FACETS: &[&[i64]] = &[
    &[1, 2, 4],
    &[1, 2, 7],
    &[1, 2, 8],
    &[1, 3, 4],
    &[1, 3, 5],
    &[1, 3, 6],
    &[1, 5, 6],
    &[1, 7, 8],
    &[2, 3, 5],
    &[2, 3, 7],
    &[2, 3, 8],
    &[2, 4, 5],
    &[3, 4, 8],
    &[3, 6, 7],
    &[4, 5, 6],
    &[4, 6, 8],
    &[6, 7, 8],
];

/// Minimal non-faces of Δ3 on `{0..9}`.
pub const DELTA3_NONFACES: &[&[i64]] = &[
    &[0, 1, 5, 6],
    &[1, 2, 6, 7],
    &[2, 3, 7, 8],
    &[3, 4, 8, 9],
    &[0, 4, 5, 9],
    &[5, 6, 7, 8, 9],
];

/// Minimal non-faces of K on `{0..4}`: a pentagon.
pub const K_NONFACES: &[&[i64]] = &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]];

/// The classical 6-vertex triangulation of the real projective plane.
pub const RP2_FACETS: &[&[i64]] = &[
    &[1, 2, 3],
    &[1, 3, 4],
    &[1, 4, 5],
    &[1, 5, 6],
    &[1, 2, 6],
    &[2, 3, 5],
    &[2, 4, 5],
    &[2, 4, 6],
    &[3, 4, 6],
    &[3, 5, 6],
];

pub fn delta1() -> Complex {
    let u = VertexSet::range(1, 6);
    let m = faces(&u, DELTA1_NONFACES);
    Complex::from_minimal_nonfaces(u, m).expect("antichain")
}

/// Δ1's non-faces in the listed order.
pub fn delta1_nonface_order() -> Vec<Face> {
    faces(&VertexSet::range(1, 6), DELTA1_NONFACES)
}

pub fn dunce_hat() -> Complex {
    let u = VertexSet::range(1, 8);
    let f = faces(&u, DUNCE_HAT_FACETS);
    Complex::from_facets(u, f).expect("in range")
}

/// The dunce hat's facets in the listed order.
pub fn dunce_hat_listed_order() -> Vec<Face> {
    faces(&VertexSet::range(1, 8), DUNCE_HAT_FACETS)
}

/// Δ2, the Alexander dual of the dunce hat.
pub fn delta2() -> Complex {
    dunce_hat().alexander_dual()
}

pub fn delta3() -> Complex {
    let u = VertexSet::range(0, 9);
    let m = faces(&u, DELTA3_NONFACES);
    Complex::from_minimal_nonfaces(u, m).expect("antichain")
}

pub fn delta3_nonface_order() -> Vec<Face> {
    faces(&VertexSet::range(0, 9), DELTA3_NONFACES)
}

/// Γ, the pure top-dimensional part of Δ3∨.
pub fn gamma() -> Complex {
    delta3()
        .alexander_dual()
        .pure_skeleton(5)
        .expect("Δ3∨ is 5-dimensional")
}

pub fn k() -> Complex {
    let u = VertexSet::range(0, 4);
    let m = faces(&u, K_NONFACES);
    Complex::from_minimal_nonfaces(u, m).expect("antichain")
}

pub fn projective_plane() -> Complex {
    let u = VertexSet::range(1, 6);
    let f = faces(&u, RP2_FACETS);
    Complex::from_facets(u, f).expect("in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        assert_eq!(dunce_hat().facets().len(), 17);
        assert_eq!(delta3().minimal_nonfaces().len(), 6);
        assert_eq!(gamma().facets().len(), 5);
        assert!(gamma().is_pure());
        assert_eq!(k().facets().len(), 5);
        assert_eq!(projective_plane().facets().len(), 10);
        for c in [
            delta1(),
            dunce_hat(),
            delta2(),
            delta3(),
            gamma(),
            k(),
            projective_plane(),
        ] {
            assert!(!c.has_ghost_vertices(), "{c}");
        }
    }
}
