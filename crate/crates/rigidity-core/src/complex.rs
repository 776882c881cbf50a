//! Finite abstract simplicial complexes, stored by their inclusion-maximal
//! faces, together with the face-level queries the rest of the crate builds
//! on: membership, full subcomplexes, links, missing faces and the
//! pseudomanifold test.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A sorted, duplicate-free set of vertex indices. The empty set is allowed
/// and stands for the empty face.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Builds a vertex set from arbitrary indices; sorts and deduplicates.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn with(&self, v: usize) -> VertexSet {
        let mut out = self.0.clone();
        match out.binary_search(&v) {
            Ok(_) => {}
            Err(pos) => out.insert(pos, v),
        }
        VertexSet(out)
    }

    pub fn without(&self, v: usize) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// Bitmask form; only valid while all vertices are below 64, which every
    /// capped operation in this crate guarantees.
    pub(crate) fn mask(&self) -> u64 {
        debug_assert!(self.0.last().is_none_or(|&v| v < 64));
        self.0.iter().fold(0u64, |acc, &v| acc | (1u64 << v))
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl From<&[usize]> for VertexSet {
    fn from(v: &[usize]) -> Self {
        VertexSet::new(v.to_vec())
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite abstract simplicial complex on vertices `0..vertex_count`,
/// stored by its inclusion-maximal faces.
///
/// The facet list is kept normalized: no facet contains another, no
/// duplicates, facets sorted lexicographically. Every vertex appears in at
/// least one facet; subcomplex constructions keep otherwise-isolated
/// vertices as singleton facets. The empty face is implicit and never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<VertexSet>,
}

/// The canonical minimal basis of the Stanley–Reisner ideal, as vertex
/// sets: every member is a non-face all of whose proper subsets are faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MissingFaceSet(Vec<VertexSet>);

impl MissingFaceSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.0
    }

    /// Histogram size -> number of missing faces of that size.
    pub fn histogram(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut h = std::collections::BTreeMap::new();
        for f in &self.0 {
            *h.entry(f.len()).or_insert(0) += 1;
        }
        h
    }
}

/// Serialized form of a complex: `{"name": ..., "vertices": m, "facets": [[..],..]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Normalizes a raw facet list: drops duplicates, empty sets and
    /// non-maximal sets, checks the index range, and rejects ghost vertices
    /// (a vertex below `m` that appears in no facet).
    pub fn normalize(raw_facets: Vec<VertexSet>, m: usize) -> Result<Self, Error> {
        for f in &raw_facets {
            if let Some(max) = f.max() {
                if max >= m {
                    return Err(Error::invalid(format!(
                        "facet {f} uses vertex {max} but the complex has {m} vertices"
                    )));
                }
            }
        }
        let facets = absorb_maximal(raw_facets);
        let mut seen = vec![false; m];
        for f in &facets {
            for v in f.iter() {
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::invalid(format!("vertex {v} lies in no facet")));
        }
        Ok(SimplicialComplex { vertex_count: m, facets })
    }

    /// The empty complex (no vertices; only the empty face).
    pub fn empty() -> Self {
        SimplicialComplex { vertex_count: 0, facets: Vec::new() }
    }

    fn from_parts(vertex_count: usize, raw: Vec<VertexSet>) -> Self {
        SimplicialComplex { vertex_count, facets: absorb_maximal(raw) }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Dimension of the complex; -1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// True iff `s` is contained in some facet. The empty set is always a face.
    pub fn is_face(&self, s: &VertexSet) -> bool {
        s.is_empty() || self.facets.iter().any(|f| s.is_subset_of(f))
    }

    /// The full subcomplex on `w`: all faces of `self` contained in `w`,
    /// relabeled to `0..w.len()` preserving index order. Vertices of `w`
    /// that end up isolated appear as singleton facets. Returns the complex
    /// and the relabeling map (new index -> original vertex).
    pub fn full_subcomplex(&self, w: &VertexSet) -> (SimplicialComplex, Vec<usize>) {
        let back: Vec<usize> = w.iter().collect();
        let fwd: HashMap<usize, usize> =
            back.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let mut raw: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|f| VertexSet::new(f.iter().filter_map(|v| fwd.get(&v).copied()).collect()))
            .filter(|f| !f.is_empty())
            .collect();
        for new in 0..back.len() {
            raw.push(VertexSet(vec![new]));
        }
        (SimplicialComplex::from_parts(back.len(), raw), back)
    }

    /// The link of the face `s`: all `t` disjoint from `s` with `t ∪ s` a
    /// face, on the vertices that actually occur, relabeled. Returns the
    /// complex and the relabeling map (new index -> original vertex).
    pub fn link(&self, s: &VertexSet) -> Result<(SimplicialComplex, Vec<usize>), Error> {
        if !self.is_face(s) {
            return Err(Error::invalid(format!("{s} is not a face")));
        }
        // Maximal faces of the link are exactly F \ s for facets F ⊇ s.
        let mut support = BTreeSet::new();
        let mut raw = Vec::new();
        for f in &self.facets {
            if s.is_subset_of(f) {
                let t: Vec<usize> = f.iter().filter(|v| !s.contains(*v)).collect();
                support.extend(t.iter().copied());
                if !t.is_empty() {
                    raw.push(t);
                }
            }
        }
        let back: Vec<usize> = support.into_iter().collect();
        let fwd: HashMap<usize, usize> =
            back.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let raw: Vec<VertexSet> = raw
            .into_iter()
            .map(|t| VertexSet::new(t.into_iter().map(|v| fwd[&v]).collect()))
            .collect();
        Ok((SimplicialComplex::from_parts(back.len(), raw), back))
    }

    /// Every face of the complex, grouped by dimension (index k holds the
    /// k-dimensional faces, sorted lexicographically). The empty face is
    /// not listed.
    pub fn all_faces(&self) -> Vec<Vec<VertexSet>> {
        let dim = self.dim();
        if dim < 0 {
            return Vec::new();
        }
        let mut by_dim: Vec<BTreeSet<VertexSet>> = vec![BTreeSet::new(); dim as usize + 1];
        for f in &self.facets {
            let verts = f.as_slice();
            // all nonempty subsets of the facet
            for mask in 1u64..(1u64 << verts.len()) {
                let sub: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                by_dim[sub.len() - 1].insert(VertexSet(sub));
            }
        }
        by_dim.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Number of k-dimensional faces for k = 0..=dim.
    pub fn faces_by_dimension(&self) -> Vec<usize> {
        self.all_faces().iter().map(|fs| fs.len()).collect()
    }

    /// Euler characteristic Σ (-1)^k f_k (non-reduced).
    pub fn euler_characteristic(&self) -> isize {
        self.faces_by_dimension()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as isize } else { -(c as isize) })
            .sum()
    }

    /// All minimal non-faces, sorted lexicographically.
    ///
    /// A minimal non-face of size s contains an (s-1)-subset that is a face,
    /// so s ≤ dim+2 and candidates can be built by extending faces by one
    /// vertex above their maximum.
    pub fn missing_faces(&self) -> MissingFaceSet {
        let dim = self.dim();
        if dim < 0 {
            return MissingFaceSet(Vec::new());
        }
        let faces = self.all_faces();
        let face_set: HashSet<&VertexSet> = faces.iter().flatten().collect();
        let is_face_fast = |s: &VertexSet| s.is_empty() || face_set.contains(s);

        let mut out = BTreeSet::new();
        for size in 2..=(dim as usize + 2) {
            for f in &faces[size - 2] {
                let start = f.max().map_or(0, |v| v + 1);
                for v in start..self.vertex_count {
                    let cand = f.with(v);
                    if is_face_fast(&cand) || out.contains(&cand) {
                        continue;
                    }
                    // every (size-1)-subset must be a face
                    let minimal = cand
                        .iter()
                        .all(|drop| is_face_fast(&cand.without(drop)));
                    if minimal {
                        out.insert(cand);
                    }
                }
            }
        }
        MissingFaceSet(out.into_iter().collect())
    }

    /// Pure + every ridge in exactly two facets + facet-ridge graph
    /// connected. For dimension 0 the unique ridge is the empty face, so a
    /// pseudomanifold of dimension 0 is exactly a pair of points.
    pub fn is_pseudomanifold(&self) -> bool {
        if self.facets.is_empty() {
            return false;
        }
        let q = self.facets[0].len();
        if self.facets.iter().any(|f| f.len() != q) {
            return false;
        }
        // ridge -> facet indices containing it
        let mut ridges: HashMap<VertexSet, Vec<usize>> = HashMap::new();
        for (i, f) in self.facets.iter().enumerate() {
            if q == 1 {
                ridges.entry(VertexSet::empty()).or_default().push(i);
            } else {
                for v in f.iter() {
                    ridges.entry(f.without(v)).or_default().push(i);
                }
            }
        }
        if ridges.values().any(|fs| fs.len() != 2) {
            return false;
        }
        let mut uf = UnionFind::new(self.facets.len());
        for fs in ridges.values() {
            uf.union(fs[0], fs[1]);
        }
        (0..self.facets.len()).all(|i| uf.find(i) == uf.find(0))
    }

    /// Applies a vertex permutation (`perm[old] = new`) and renormalizes.
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex {
        assert_eq!(perm.len(), self.vertex_count);
        let raw = self
            .facets
            .iter()
            .map(|f| VertexSet::new(f.iter().map(|v| perm[v]).collect()))
            .collect();
        SimplicialComplex::from_parts(self.vertex_count, raw)
    }

    pub fn to_json(&self, name: Option<String>) -> ComplexJson {
        ComplexJson {
            name,
            vertices: self.vertex_count,
            facets: self.facets.iter().map(|f| f.as_slice().to_vec()).collect(),
        }
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self, Error> {
        let raw = json.facets.iter().map(|f| VertexSet::from(f.as_slice())).collect();
        SimplicialComplex::normalize(raw, json.vertices)
    }
}

/// Keeps only the inclusion-maximal sets, dropping duplicates and the empty
/// set, and sorts the result.
fn absorb_maximal(mut raw: Vec<VertexSet>) -> Vec<VertexSet> {
    raw.retain(|f| !f.is_empty());
    raw.sort_unstable();
    raw.dedup();
    // longest first so that a kept set can never be absorbed by a later one
    raw.sort_by_key(|f| std::cmp::Reverse(f.len()));
    let mut kept: Vec<VertexSet> = Vec::with_capacity(raw.len());
    for f in raw {
        if !kept.iter().any(|k| f.is_subset_of(k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
pub(crate) mod test_fixtures {
    use super::*;

    pub fn complex(facets: &[&[usize]], m: usize) -> SimplicialComplex {
        let raw = facets.iter().map(|f| VertexSet::from(*f)).collect();
        SimplicialComplex::normalize(raw, m).unwrap()
    }

    /// Boundary of the 3-simplex: 4 vertices, all triangles.
    pub fn boundary_delta3() -> SimplicialComplex {
        complex(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]], 4)
    }

    /// Octahedron with opposite vertices i and i+3 (the cube dual in the
    /// labeling where missing edges are {0,3}, {1,4}, {2,5}).
    pub fn octahedron() -> SimplicialComplex {
        let mut facets = Vec::new();
        for a in [0usize, 3] {
            for b in [1usize, 4] {
                for c in [2usize, 5] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        let raw = facets.into_iter().map(VertexSet::new).collect();
        SimplicialComplex::normalize(raw, 6).unwrap()
    }

    pub fn cycle(k: usize) -> SimplicialComplex {
        let raw = (0..k).map(|i| VertexSet::new(vec![i, (i + 1) % k])).collect();
        SimplicialComplex::normalize(raw, k).unwrap()
    }

    pub fn path(k: usize) -> SimplicialComplex {
        let raw = (0..k - 1).map(|i| VertexSet::new(vec![i, i + 1])).collect();
        SimplicialComplex::normalize(raw, k).unwrap()
    }
}
