//! Vertex universes and faces as fixed-width bit masks.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex universe.
pub const MAX_VERTICES: usize = 64;

/// A vertex name as it appears in input documents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Name(String),
}

impl Label {
    /// Integers stay integers; anything else is a name.
    pub fn parse(token: &str) -> Self {
        match token.parse::<i64>() {
            Ok(v) => Label::Int(v),
            Err(_) => Label::Name(token.to_string()),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(v) => write!(f, "{v}"),
            Label::Name(s) => f.write_str(s),
        }
    }
}

impl From<i64> for Label {
    fn from(v: i64) -> Self {
        Label::Int(v)
    }
}

impl From<i32> for Label {
    fn from(v: i32) -> Self {
        Label::Int(v.into())
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::Name(s.to_string())
    }
}

/// Ordered list of distinct vertex labels; position `i` is bit `i` of every [`Face`].
#[derive(Clone, Debug)]
pub struct VertexSet {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for VertexSet {}

impl VertexSet {
    pub fn new<L: Into<Label>>(labels: impl IntoIterator<Item = L>) -> Result<Self> {
        let labels: Vec<Label> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                max: MAX_VERTICES,
                got: labels.len(),
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        Ok(Self { labels, index })
    }

    /// Vertices labelled `lo..=hi`.
    pub fn range(lo: i64, hi: i64) -> Self {
        Self::new(lo..=hi).expect("integer range labels are distinct")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &Label) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// The face made of the given labels.
    pub fn face<L: Into<Label>>(&self, labels: impl IntoIterator<Item = L>) -> Result<Face> {
        let mut mask = 0u64;
        for l in labels {
            mask |= 1 << self.index_of(&l.into())?;
        }
        Ok(Face(mask))
    }

    pub fn full(&self) -> Face {
        Face::full(self.len())
    }

    pub fn labels_of(&self, face: Face) -> Vec<Label> {
        face.indices().map(|i| self.labels[i].clone()).collect()
    }

    pub fn display(&self, face: Face) -> String {
        let parts: Vec<String> = face.indices().map(|i| self.labels[i].to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// A subset of the vertex universe. Ordered canonically: by cardinality, then by mask value.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Face(pub u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        Face(indices.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    /// The face `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Face(1 << i)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension of the simplex, `|F| - 1`.
    pub fn dim(self) -> i32 {
        self.len() as i32 - 1
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement inside a universe of `n` vertices.
    pub fn complement(self, n: usize) -> Face {
        Face(!self.0 & Face::full(n).0)
    }

    pub fn with(self, i: usize) -> Face {
        Face(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Face {
        Face(self.0 & !(1 << i))
    }

    /// Vertex indices in ascending order.
    pub fn indices(self) -> Indices {
        Indices(self.0)
    }

    /// Highest index present plus one, or 0 for the empty face.
    pub(crate) fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// All subsets of this face, including the empty face and the face itself.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Face(cur))
        })
    }
}

/// Iterator over the set bits of a [`Face`].
#[derive(Clone, Debug)]
pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Keeps only the inclusion-maximal members, in canonical order.
pub fn maximal_elements(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    // Larger faces come later; scan from the back so survivors are checked first.
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for &f in faces.iter().rev() {
        if !kept.iter().any(|&g| f.is_subset(g)) {
            kept.push(f);
        }
    }
    kept.reverse();
    kept
}

/// Keeps only the inclusion-minimal members, in canonical order.
pub fn minimal_elements(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for &f in &faces {
        if !kept.iter().any(|&g| g.is_subset(f)) {
            kept.push(f);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_cardinality_then_mask() {
        let mut v = vec![Face(0b110), Face(0b1), Face(0b11), Face(0), Face(0b1000)];
        v.sort();
        assert_eq!(v, vec![Face(0), Face(0b1), Face(0b1000), Face(0b11), Face(0b110)]);
    }

    #[test]
    fn subsets_enumerates_powerset() {
        let s: Vec<Face> = Face(0b1011).subsets().collect();
        assert_eq!(s.len(), 8);
        assert!(s.iter().all(|f| f.is_subset(Face(0b1011))));
        assert_eq!(Face::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn maximal_and_minimal() {
        let fs = vec![Face(0b11), Face(0b1), Face(0b110), Face(0b11)];
        assert_eq!(maximal_elements(fs.clone()), vec![Face(0b11), Face(0b110)]);
        assert_eq!(minimal_elements(fs), vec![Face(0b1), Face(0b110)]);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(VertexSet::new([1, 2, 1]), Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn complement_respects_universe() {
        assert_eq!(Face(0b0101).complement(4), Face(0b1010));
        assert_eq!(Face::full(64).complement(64), Face::EMPTY);
    }
}
