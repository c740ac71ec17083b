//! Reduced simplicial homology, Reisner's criterion and sequential
//! Cohen-Macaulayness through pure skeleta.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{rank_mod_p, rank_rational};

/// Coefficient field for homology.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);

    pub fn gf(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// The fields CM verdicts are reported over by default.
    pub fn defaults() -> [FieldSpec; 2] {
        [FieldSpec::GF2, FieldSpec::Rationals]
    }

    /// Accepts `gf2`, `gfP` for a prime `P`, and `q`.
    pub fn parse(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" || lower == "rationals" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = lower
            .strip_prefix("gf")
            .map(|d| d.trim_start_matches('(').trim_end_matches(')'))
            .ok_or_else(|| Error::Parse(format!("unknown field `{s}`")))?;
        let p = digits
            .parse()
            .map_err(|_| Error::Parse(format!("unknown field `{s}`")))?;
        Self::gf(p)
    }

    fn rank(self, mat: &[Vec<i64>]) -> usize {
        match self {
            FieldSpec::Prime(p) => rank_mod_p(mat, p),
            FieldSpec::Rationals => rank_rational(mat),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => f.write_str("Q"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d: &u64| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Reduced Betti numbers for dimensions `-1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    ranks: Vec<usize>,
}

impl HomologyProfile {
    /// Rank of reduced homology in dimension `dim`; zero outside the computed range.
    pub fn rank(&self, dim: i32) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.ranks.get(i).copied())
            .unwrap_or(0)
    }

    /// `(dimension, rank)` pairs starting at dimension -1.
    pub fn iter(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.ranks.iter().enumerate().map(|(i, &r)| (i as i32 - 1, r))
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// `Σ (-1)^i · rank_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, r)| if d % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(d, r)| format!("H~{d}={r}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Boundary matrices of the augmented chain complex, one per face size `s ≥ 1`,
/// written with one row per `s`-face.
pub(crate) fn boundary_matrices(c: &Complex) -> Vec<Vec<Vec<i64>>> {
    let mut by_size: Vec<Vec<Face>> = Vec::new();
    for f in c.faces() {
        if by_size.len() <= f.len() {
            by_size.resize(f.len() + 1, Vec::new());
        }
        by_size[f.len()].push(f);
    }
    let index: Vec<HashMap<Face, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();
    (1..by_size.len())
        .map(|s| {
            by_size[s]
                .iter()
                .map(|&face| {
                    let mut row = vec![0i64; by_size[s - 1].len()];
                    for (pos, v) in face.indices().enumerate() {
                        row[index[s - 1][&face.without(v)]] = if pos % 2 == 0 { 1 } else { -1 };
                    }
                    row
                })
                .collect()
        })
        .collect()
}

pub fn reduced_homology(c: &Complex, field: FieldSpec) -> Result<HomologyProfile> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let f = c.f_vector();
    let bounds = boundary_matrices(c);
    // boundary_rank[s] = rank of the map from s-faces to (s-1)-faces.
    let mut boundary_rank = vec![0usize; f.len() + 1];
    for (k, mat) in bounds.iter().enumerate() {
        boundary_rank[k + 1] = field.rank(mat);
    }
    let ranks = (0..f.len())
        .map(|s| f[s] - boundary_rank[s] - boundary_rank[s + 1])
        .collect();
    Ok(HomologyProfile { ranks })
}

/// A face whose link has nonvanishing reduced homology below the link's dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmWitness {
    /// Dimension of the pure skeleton the failure was found in, for sequential checks.
    pub skeleton: Option<i32>,
    pub face: Face,
    pub degree: i32,
    pub rank: usize,
    pub field: FieldSpec,
}

impl CmWitness {
    /// Recomputes the link homology and confirms the recorded rank.
    pub fn reproduces(&self, c: &Complex) -> bool {
        let target = match self.skeleton {
            Some(d) => match c.pure_skeleton(d) {
                Ok(s) => s,
                Err(_) => return false,
            },
            None => c.clone(),
        };
        let Ok(link) = target.link(self.face) else { return false };
        let below_top = link.dim().is_some_and(|d| self.degree < d);
        below_top
            && reduced_homology(&link, self.field).is_ok_and(|h| h.rank(self.degree) == self.rank && self.rank > 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmReport {
    pub verdict: bool,
    pub field: FieldSpec,
    pub witness: Option<CmWitness>,
}

impl CmReport {
    fn new(field: FieldSpec, witness: Option<CmWitness>) -> Self {
        Self {
            verdict: witness.is_none(),
            field,
            witness,
        }
    }
}

fn check_input(c: &Complex) -> Result<()> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    if c.has_ghost_vertices() {
        return Err(Error::GhostVertices(c.display_face(c.ghost_vertices())));
    }
    Ok(())
}

/// Reisner's criterion: every link (the empty face included) has vanishing
/// reduced homology below its dimension.
pub fn is_cohen_macaulay(c: &Complex, field: FieldSpec) -> Result<CmReport> {
    check_input(c)?;
    Ok(CmReport::new(field, reisner_witness(c, field)))
}

/// Cohen-Macaulayness of every pure skeleton, top dimension first.
pub fn is_sequentially_cm(c: &Complex, field: FieldSpec) -> Result<CmReport> {
    check_input(c)?;
    Ok(CmReport::new(field, sequential_witness(c, field)))
}

/// First Reisner failure in canonical face order. Ghost vertices are ignored:
/// they change neither the faces nor any link.
pub fn reisner_witness(c: &Complex, field: FieldSpec) -> Option<CmWitness> {
    for face in c.faces() {
        let link = c.link(face).expect("enumerated faces belong to the complex");
        let Some(top) = link.dim() else { continue };
        // Links of dimension ≤ 0 can only fail below -1, which has no homology.
        if top <= 0 {
            continue;
        }
        let h = reduced_homology(&link, field).expect("links of faces are non-void");
        if let Some(degree) = (-1..top).find(|&i| h.rank(i) != 0) {
            return Some(CmWitness {
                skeleton: None,
                face,
                degree,
                rank: h.rank(degree),
                field,
            });
        }
    }
    None
}

/// Sequential Cohen-Macaulayness, ignoring ghost vertices like [`reisner_witness`].
pub fn sequential_witness(c: &Complex, field: FieldSpec) -> Option<CmWitness> {
    let top = c.dim()?;
    if c.is_pure() {
        // Skeleta of a Cohen-Macaulay complex are Cohen-Macaulay.
        return reisner_witness(c, field).map(|w| CmWitness {
            skeleton: Some(top),
            ..w
        });
    }
    (0..=top).rev().find_map(|d| {
        let skeleton = c.pure_skeleton(d).expect("dimension within range");
        reisner_witness(&skeleton, field).map(|w| CmWitness { skeleton: Some(d), ..w })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::VertexSet;

    fn cx(n: i64, facets: &[&[i64]]) -> Complex {
        Complex::from_labelled_facets(VertexSet::range(1, n), facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    #[test]
    fn field_parsing() {
        assert_eq!(FieldSpec::parse("gf2").unwrap(), FieldSpec::GF2);
        assert_eq!(FieldSpec::parse("GF7").unwrap(), FieldSpec::Prime(7));
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rationals);
        assert!(matches!(FieldSpec::parse("gf4"), Err(Error::NotPrime(4))));
        assert!(FieldSpec::parse("zz").is_err());
    }

    #[test]
    fn circle_and_points() {
        let circle = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        for field in FieldSpec::defaults() {
            let h = reduced_homology(&circle, field).unwrap();
            assert_eq!((h.rank(-1), h.rank(0), h.rank(1)), (0, 0, 1));
        }
        let two = cx(2, &[&[1], &[2]]);
        assert_eq!(reduced_homology(&two, FieldSpec::GF2).unwrap().rank(0), 1);
        let empty = cx(2, &[&[]]);
        assert_eq!(reduced_homology(&empty, FieldSpec::GF2).unwrap().rank(-1), 1);
        assert!(matches!(
            reduced_homology(&cx(2, &[]), FieldSpec::GF2),
            Err(Error::VoidComplex)
        ));
    }

    #[test]
    fn ghost_vertices_are_reported() {
        let c = cx(4, &[&[1, 2, 3]]);
        assert!(matches!(
            is_cohen_macaulay(&c, FieldSpec::GF2),
            Err(Error::GhostVertices(_))
        ));
        assert!(reisner_witness(&c, FieldSpec::GF2).is_none());
    }

    #[test]
    fn non_pure_shellable_is_sequentially_cm() {
        let c = cx(4, &[&[1, 2, 3], &[3, 4]]);
        assert!(!is_cohen_macaulay(&c, FieldSpec::GF2).unwrap().verdict);
        assert!(is_sequentially_cm(&c, FieldSpec::GF2).unwrap().verdict);
    }

    #[test]
    fn disjoint_edges_fail_at_empty_face() {
        let c = cx(4, &[&[1, 2], &[3, 4]]);
        let rep = is_cohen_macaulay(&c, FieldSpec::Rationals).unwrap();
        let w = rep.witness.unwrap();
        assert_eq!((w.face, w.degree, w.rank), (Face::EMPTY, 0, 1));
        assert!(w.reproduces(&c));
    }
}
