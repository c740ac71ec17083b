//! Minimal non-faces, Alexander duals and the non-face round trip.

use shellgcd::format::format_face_list;
use shellgcd::{fixtures, Complex, VertexSet};

pub fn run() -> bool {
    let cycle = Complex::from_labelled_facets(VertexSet::range(1, 4), [[1, 2], [2, 3], [3, 4], [1, 4]]).unwrap();
    let nonfaces = cycle.minimal_nonfaces();
    println!("4-cycle          {cycle}");
    println!("  non-faces      {}", format_face_list(&cycle, &nonfaces));

    let d1 = fixtures::delta1();
    let dual = d1.alexander_dual();
    println!("Δ1               {d1}");
    println!("  non-faces      {}", format_face_list(&d1, &d1.minimal_nonfaces()));
    println!("  dual           {dual}");
    println!("  dual non-faces {}", format_face_list(&dual, &dual.minimal_nonfaces()));

    let simplex = Complex::from_facets(VertexSet::range(1, 3), [VertexSet::range(1, 3).full()]).unwrap();
    println!("dual of {simplex} is void: {}", simplex.alexander_dual().is_void());

    let back = Complex::from_minimal_nonfaces(d1.universe_arc().clone(), d1.minimal_nonfaces()).unwrap();
    nonfaces.len() == 2 && dual.alexander_dual() == d1 && back == d1 && simplex.alexander_dual().is_void()
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}
