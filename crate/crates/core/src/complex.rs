//! Finite simplicial complexes stored by their facets.
//!
//! Every constructor normalises the facet list to an antichain in canonical
//! order (cardinality, then mask value), so two complexes compare equal exactly
//! when they have the same universe and the same faces.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::face::{maximal_elements, minimal_elements, Face, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    universe: Arc<VertexSet>,
    facets: Vec<Face>,
    has_ghost_vertices: bool,
}

impl Complex {
    /// The complex generated by `candidates`; non-maximal candidates are absorbed.
    pub fn from_facets(
        universe: impl Into<Arc<VertexSet>>,
        candidates: impl IntoIterator<Item = Face>,
    ) -> Result<Self> {
        let universe = universe.into();
        let n = universe.len();
        let candidates: Vec<Face> = candidates.into_iter().collect();
        for f in &candidates {
            if f.span() > n {
                return Err(Error::IndexOutOfRange {
                    index: f.span() - 1,
                    size: n,
                });
            }
        }
        Ok(Self::generated(universe, candidates))
    }

    /// Convenience constructor from label lists.
    pub fn from_labelled_facets<L, I>(universe: VertexSet, facets: impl IntoIterator<Item = I>) -> Result<Self>
    where
        L: Into<crate::face::Label>,
        I: IntoIterator<Item = L>,
    {
        let faces = facets
            .into_iter()
            .map(|f| universe.face(f))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(universe, faces)
    }

    pub(crate) fn generated(universe: Arc<VertexSet>, candidates: Vec<Face>) -> Self {
        let facets = maximal_elements(candidates);
        let covered = facets.iter().fold(Face::EMPTY, |acc, &f| acc.union(f));
        let has_ghost_vertices = covered != universe.full();
        Self {
            universe,
            facets,
            has_ghost_vertices,
        }
    }

    /// The unique complex whose minimal non-faces are exactly `nonfaces`.
    ///
    /// Its facets are the complements of the minimal transversals of the
    /// non-face family: `F` is a face iff no non-face lies inside `F`, iff the
    /// complement of `F` meets every non-face.
    pub fn from_minimal_nonfaces(
        universe: impl Into<Arc<VertexSet>>,
        nonfaces: impl IntoIterator<Item = Face>,
    ) -> Result<Self> {
        let universe = universe.into();
        let n = universe.len();
        let nonfaces: Vec<Face> = nonfaces.into_iter().collect();
        for (a, &m) in nonfaces.iter().enumerate() {
            if m.span() > n {
                return Err(Error::IndexOutOfRange {
                    index: m.span() - 1,
                    size: n,
                });
            }
            if m.is_empty() {
                return Err(Error::EmptyNonface);
            }
            for (b, &other) in nonfaces.iter().enumerate() {
                if a != b && m.is_subset(other) {
                    return Err(Error::NotAntichain(universe.display(other), universe.display(m)));
                }
            }
        }
        for m in nonfaces.iter().filter(|m| m.len() == 1) {
            log::warn!("singleton non-face {} makes a ghost vertex", universe.display(*m));
        }
        let facets = minimal_transversals(&nonfaces)
            .into_iter()
            .map(|t| t.complement(n))
            .collect();
        Ok(Self::generated(universe, facets))
    }

    pub fn universe(&self) -> &VertexSet {
        &self.universe
    }

    pub fn universe_arc(&self) -> &Arc<VertexSet> {
        &self.universe
    }

    pub fn n_vertices(&self) -> usize {
        self.universe.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn has_ghost_vertices(&self) -> bool {
        self.has_ghost_vertices
    }

    pub fn ghost_vertices(&self) -> Face {
        let covered = self.facets.iter().fold(Face::EMPTY, |acc, &f| acc.union(f));
        covered.complement(self.n_vertices())
    }

    /// No facets at all: not even the empty face.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [self.universe.full()]
    }

    /// `None` stands for the void complex's dimension of minus infinity.
    pub fn dim(&self) -> Option<i32> {
        self.facets.last().map(|f| f.dim())
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|&f| face.is_subset(f))
    }

    /// Every face, in canonical order.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for &f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_unstable();
        faces
    }

    /// `f[k]` counts faces of dimension `k - 1`, starting with the empty face.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for f in self.faces() {
            if counts.len() <= f.len() {
                counts.resize(f.len() + 1, 0);
            }
            counts[f.len()] += 1;
        }
        counts
    }

    /// Alternating face count `Σ (-1)^dim(F)`, the empty face included.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(size, &count)| if size % 2 == 1 { count as i64 } else { -(count as i64) })
            .sum()
    }

    /// Inclusion-minimal subsets of the universe that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let n = self.n_vertices();
        let complements: Vec<Face> = self.facets.iter().map(|f| f.complement(n)).collect();
        minimal_transversals(&complements)
    }

    /// `{F : complement of F is not a face}`; facets are the complements of the minimal non-faces.
    pub fn alexander_dual(&self) -> Complex {
        let n = self.n_vertices();
        let facets = self.minimal_nonfaces().into_iter().map(|m| m.complement(n)).collect();
        Self::generated(self.universe.clone(), facets)
    }

    pub fn link(&self, face: Face) -> Result<Complex> {
        if !self.contains(face) {
            return Err(Error::NotAFace(self.universe.display(face)));
        }
        let facets = self
            .facets
            .iter()
            .filter(|&&f| face.is_subset(f))
            .map(|&f| f.difference(face))
            .collect();
        Ok(Self::generated(self.universe.clone(), facets))
    }

    /// The subcomplex generated by all faces of dimension `dim`.
    pub fn pure_skeleton(&self, dim: i32) -> Result<Complex> {
        let max = self.dim().ok_or(Error::DimensionOutOfRange { dim, max: i32::MIN })?;
        if dim < -1 || dim > max {
            return Err(Error::DimensionOutOfRange { dim, max });
        }
        let size = (dim + 1) as usize;
        let mut faces = HashSet::new();
        for &f in self.facets.iter().filter(|f| f.len() >= size) {
            faces.extend(k_subsets(f, size));
        }
        Ok(Self::generated(self.universe.clone(), faces.into_iter().collect()))
    }

    /// Every minimal non-face has exactly two elements.
    pub fn is_flag(&self) -> bool {
        self.minimal_nonfaces().iter().all(|m| m.len() == 2)
    }

    /// Facets of `<F_j> ∩ <F_0, …, F_{j-1}>`: the maximal sets among `F_j ∩ F_i`, `i < j`.
    pub fn intersection_with_prefix(order: &[Face], j: usize) -> Vec<Face> {
        let fj = order[j];
        maximal_elements(order[..j].iter().map(|&fi| fi.intersection(fj)).collect())
    }

    pub fn display_face(&self, face: Face) -> String {
        self.universe.display(face)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, &face) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.universe.display(face))?;
        }
        f.write_str(">")
    }
}

/// Minimal transversals (hitting sets) of `family`, by Berge's incremental
/// product with absorption after every edge.
///
/// The intermediate antichains can grow exponentially in the number of edges;
/// inputs of around 20 edges on 24 vertices stay well within desk budgets.
pub fn minimal_transversals(family: &[Face]) -> Vec<Face> {
    let mut edges = family.to_vec();
    edges.sort_unstable();
    let mut current = vec![Face::EMPTY];
    for edge in edges {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if !t.is_disjoint(edge) {
                next.push(t);
            } else {
                next.extend(edge.indices().map(|v| t.with(v)));
            }
        }
        current = minimal_elements(next);
        if current.is_empty() {
            break;
        }
    }
    current
}

/// All `k`-element subsets of `face`.
pub fn k_subsets(face: Face, k: usize) -> Vec<Face> {
    let idx: Vec<usize> = face.indices().collect();
    if k > idx.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        out.push(Face::from_indices(pick.iter().map(|&p| idx[p])));
        let mut i = k;
        while i > 0 && pick[i - 1] == idx.len() - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        pick[i - 1] += 1;
        for t in i..k {
            pick[t] = pick[t - 1] + 1;
        }
    }
}
