//! Random search for sequentially Cohen-Macaulay complexes without a weak
//! shelling order.
//!
//! Candidates stand for the dual of a complex without ghost vertices, so every
//! facet must miss at least two vertices; anything else is degenerate (a facet
//! missing one vertex can never be paired in a weak shelling order). The
//! remaining filters are the "no two facets cover the universe" test and an
//! actual weak shelling search. Only survivors are tested for sequential
//! Cohen-Macaulayness, over every configured field.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::Complex;
use crate::face::Face;
use crate::homology::{sequential_witness, CmWitness, FieldSpec};
use crate::order::{find_weak_shelling_order, trivial_weak_shellability, SearchConfig, SearchOutcome, TrivialWeak};
use crate::random::{derive_seed, random_pure_complex};

#[derive(Clone, Debug)]
pub struct HuntConfig {
    pub search: SearchConfig,
    pub fields: Vec<FieldSpec>,
    pub min_vertices: usize,
    pub max_vertices: usize,
}

impl Default for HuntConfig {
    fn default() -> Self {
        Self {
            search: SearchConfig::from_env(),
            fields: FieldSpec::defaults().to_vec(),
            min_vertices: 5,
            max_vertices: 9,
        }
    }
}

/// Where a candidate left the pipeline.
#[derive(Clone, Debug)]
pub enum Stage {
    Degenerate,
    TriviallyWeak,
    WeaklyShellable,
    Undecided(String),
    NotSequentiallyCm(CmWitness),
    /// Sequentially Cohen-Macaulay over every field, and no weak shelling order exists.
    Hit,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HuntStats {
    pub sampled: usize,
    pub degenerate: usize,
    pub trivially_weak: usize,
    pub weakly_shellable: usize,
    pub undecided: usize,
    pub scm_tested: usize,
    pub not_scm: usize,
    pub hits: usize,
}

#[derive(Clone, Debug)]
pub struct HuntReport {
    pub stats: HuntStats,
    /// Hits in canonical order (vertex count, then facet masks).
    pub hits: Vec<Complex>,
    pub skipped: Vec<String>,
}

pub fn classify(c: &Complex, config: &HuntConfig) -> Stage {
    if c.is_void() || c.facets().iter().any(|f| f.len() + 2 > c.n_vertices()) {
        return Stage::Degenerate;
    }
    if let TrivialWeak::TriviallyYes { .. } = trivial_weak_shellability(c) {
        return Stage::TriviallyWeak;
    }
    match find_weak_shelling_order(c, &config.search) {
        SearchOutcome::Found(_) => return Stage::WeaklyShellable,
        SearchOutcome::Undecided(why) => return Stage::Undecided(why),
        SearchOutcome::NoneExists => {}
    }
    for &field in &config.fields {
        if let Some(w) = sequential_witness(c, field) {
            return Stage::NotSequentiallyCm(w);
        }
    }
    Stage::Hit
}

fn canonical_key(c: &Complex) -> (usize, Vec<u64>) {
    (c.n_vertices(), c.facets().iter().map(|f| f.mask()).collect())
}

/// Classifies every candidate; the report does not depend on scheduling.
pub fn hunt_candidates(candidates: Vec<Complex>, config: &HuntConfig) -> HuntReport {
    let stages: Vec<Stage> = candidates.par_iter().map(|c| classify(c, config)).collect();
    let mut stats = HuntStats {
        sampled: candidates.len(),
        ..HuntStats::default()
    };
    let mut hits = Vec::new();
    let mut skipped = Vec::new();
    for (c, stage) in candidates.into_iter().zip(stages) {
        match stage {
            Stage::Degenerate => stats.degenerate += 1,
            Stage::TriviallyWeak => stats.trivially_weak += 1,
            Stage::WeaklyShellable => stats.weakly_shellable += 1,
            Stage::Undecided(why) => {
                log::info!("skipping {c}: {why}");
                stats.undecided += 1;
                skipped.push(format!("{c}: {why}"));
            }
            Stage::NotSequentiallyCm(_) => {
                stats.scm_tested += 1;
                stats.not_scm += 1;
            }
            Stage::Hit => {
                stats.scm_tested += 1;
                stats.hits += 1;
                hits.push(c);
            }
        }
    }
    hits.sort_by_key(canonical_key);
    skipped.sort();
    HuntReport { stats, hits, skipped }
}

/// One candidate: a complex of dimension `d` on `n` vertices with
/// `n < 2d + 3`, so the covering test cannot settle it, and facets of at most
/// `n - 2` vertices. Half are pure; the rest mix in smaller facets.
pub fn sample_candidate(seed: u64, config: &HuntConfig) -> Complex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(config.min_vertices.max(5)..=config.max_vertices.max(5));
    let dim = rng.gen_range((n - 1) / 2..=n - 3);
    let m = rng.gen_range(3..=14);
    let pure = random_pure_complex(rng.gen(), n, dim, m).expect("size checked by config");
    if rng.gen_bool(0.5) {
        return pure;
    }
    let mut gens = pure.facets().to_vec();
    for _ in 0..rng.gen_range(1..=4) {
        let size = rng.gen_range(2..=dim + 1);
        gens.push(Face::from_indices(sample(&mut rng, n, size)));
    }
    Complex::from_facets(pure.universe_arc().clone(), gens).expect("indices in range")
}

pub fn hunt_counterexample(seed: u64, budget: usize, config: &HuntConfig) -> HuntReport {
    let candidates = (0..budget as u64)
        .map(|i| sample_candidate(derive_seed(seed, i), config))
        .collect();
    hunt_candidates(candidates, config)
}
