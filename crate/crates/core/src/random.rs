//! Seeded generators. The same seed and parameters always give the same complex.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{Face, VertexSet};

/// Generators enumerate subsets of the universe, so keep it small.
pub const MAX_RANDOM_VERTICES: usize = 16;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_size(n: usize) -> Result<VertexSet> {
    if n > MAX_RANDOM_VERTICES {
        return Err(Error::TooManyVertices {
            max: MAX_RANDOM_VERTICES,
            got: n,
        });
    }
    Ok(VertexSet::range(1, n as i64))
}

/// Independent per-index seeds derived from one base seed (splitmix64).
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Generated by every vertex plus each subset of size ≥ 2 kept with probability `density`.
/// The vertices are always present, so the result has no ghost vertices.
pub fn random_complex(seed: u64, n: usize, density: f64) -> Result<Complex> {
    let universe = check_size(n)?;
    let mut rng = rng(seed);
    let mut gens: Vec<Face> = (0..n).map(Face::singleton).collect();
    for mask in 1..(1u64 << n) {
        let f = Face(mask);
        if f.len() >= 2 && rng.gen_bool(density.clamp(0.0, 1.0)) {
            gens.push(f);
        }
    }
    Complex::from_facets(universe, gens)
}

/// Clique complex of a G(n, p) random graph: its minimal non-faces are exactly the non-edges.
pub fn random_flag_complex(seed: u64, n: usize, edge_prob: f64) -> Result<Complex> {
    let universe = check_size(n)?;
    let mut rng = rng(seed);
    let mut non_edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !rng.gen_bool(edge_prob.clamp(0.0, 1.0)) {
                non_edges.push(Face::from_indices([i, j]));
            }
        }
    }
    Complex::from_minimal_nonfaces(universe, non_edges)
}

/// A complex with between 1 and `max_nonfaces` minimal non-faces, each of size ≥ 2.
pub fn random_nonface_complex(seed: u64, n: usize, max_nonfaces: usize) -> Result<Complex> {
    let universe = check_size(n)?;
    if n < 2 || max_nonfaces == 0 {
        return Complex::from_minimal_nonfaces(universe, []);
    }
    let mut rng = rng(seed);
    let target = rng.gen_range(1..=max_nonfaces);
    let mut chosen: Vec<Face> = Vec::new();
    for _ in 0..target * 8 {
        if chosen.len() == target {
            break;
        }
        let size = rng.gen_range(2..=n.min(5));
        let f = Face::from_indices(sample(&mut rng, n, size));
        if chosen.iter().all(|&g| !g.is_subset(f) && !f.is_subset(g)) {
            chosen.push(f);
        }
    }
    Complex::from_minimal_nonfaces(universe, chosen)
}

/// `m` random `dim`-faces, topped up so that every vertex is covered.
pub fn random_pure_complex(seed: u64, n: usize, dim: usize, m: usize) -> Result<Complex> {
    let universe = check_size(n)?;
    let size = (dim + 1).min(n);
    let mut rng = rng(seed);
    let mut gens: Vec<Face> = (0..m).map(|_| Face::from_indices(sample(&mut rng, n, size))).collect();
    for v in 0..n {
        if !gens.iter().any(|f| f.contains(v)) {
            let others: Vec<usize> = sample(&mut rng, n - 1, size - 1)
                .into_iter()
                .map(|i| if i >= v { i + 1 } else { i })
                .collect();
            gens.push(Face::from_indices(others).with(v));
        }
    }
    Complex::from_facets(universe, gens)
}
