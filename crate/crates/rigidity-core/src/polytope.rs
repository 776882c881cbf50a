//! A validated dual complex wrapped as a simple polytope, with the
//! face-level invariants: f-vector, h-vector, 2-face gonality profile and
//! the triangle-free / flag tests.
//!
//! Validation stops at pure + pseudomanifold + connectivity; sphere or
//! polytopality recognition is undecidable in general, so the stronger
//! guarantees hold only for complexes built by the `construct` module.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::Error;

/// A simple n-polytope P with m facets, represented by the dual simplicial
/// complex of its boundary: vertices of the complex are facets of P, faces
/// are sets of facets with nonempty intersection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualPolytope {
    complex: SimplicialComplex,
    n: usize,
    m: usize,
}

impl DualPolytope {
    /// Wraps a complex after checking it is pure, a pseudomanifold, and has
    /// at least n+1 vertices, where n = dim+1 is the polytope dimension.
    pub fn from_complex(complex: SimplicialComplex) -> Result<Self, Error> {
        let dim = complex.dim();
        if dim < 0 {
            return Err(Error::NotPure);
        }
        let q = dim as usize + 1;
        if complex.facets().iter().any(|f| f.len() != q) {
            return Err(Error::NotPure);
        }
        if !complex.is_pseudomanifold() {
            return Err(Error::NotPseudomanifold);
        }
        let n = q;
        let m = complex.vertex_count();
        if m < n + 1 {
            return Err(Error::TooFewVertices);
        }
        Ok(DualPolytope { complex, n, m })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn into_complex(self) -> SimplicialComplex {
        self.complex
    }

    /// Polytope dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Facet count of the polytope (vertex count of the dual complex).
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.complex.faces_by_dimension())
    }

    /// h-vector from the defining identity
    /// Σ h_i t^(n-i) = Σ_j f_(j-1) (t-1)^(n-j) with f_(-1) = 1.
    pub fn h_vector(&self) -> HVector {
        let n = self.n;
        let f = self.f_vector().0;
        let mut coeffs = vec![0i64; n + 1]; // coeffs[p] = coefficient of t^p
        for j in 0..=n {
            let fj = if j == 0 { 1 } else { f[j - 1] as i64 };
            let q = n - j;
            // (t-1)^q = Σ_p C(q,p) (-1)^(q-p) t^p
            for (p, coeff) in coeffs.iter_mut().enumerate().take(q + 1) {
                let sign = if (q - p).is_multiple_of(2) { 1 } else { -1 };
                *coeff += fj * sign * binomial(q, p);
            }
        }
        let h = (0..=n).map(|i| coeffs[n - i]).collect();
        HVector(h)
    }

    /// Gonality profile of the 2-faces. Every (n-3)-dimensional face of the
    /// dual complex corresponds to a 2-face of the polytope, and its link
    /// must be a cycle whose length is the gonality.
    pub fn two_face_profile(&self) -> Result<GonalityProfile, Error> {
        if self.n < 3 {
            return Err(Error::WrongDimension(self.n));
        }
        let faces = self.complex.all_faces();
        let taus = &faces[self.n - 3];
        let mut profile = BTreeMap::new();
        for tau in taus {
            let (link, _) = self.complex.link(tau).expect("tau is a face");
            let k = cycle_length(&link).ok_or(Error::NonCycleLink)?;
            *profile.entry(k).or_insert(0) += 1;
        }
        Ok(GonalityProfile(profile))
    }

    /// True iff no 2-face is a triangle. Defined for n ≥ 3.
    pub fn is_triangle_free(&self) -> Result<bool, Error> {
        Ok(self.two_face_profile()?.count(3) == 0)
    }

    /// True iff every missing face of the dual complex has two vertices
    /// (the Stanley–Reisner ideal is generated by quadratic monomials).
    pub fn is_flag(&self) -> bool {
        self.complex.missing_faces().iter().all(|h| h.len() == 2)
    }

    /// Faces of the dual complex usable as truncation sites, i.e. every
    /// face with at least 2 vertices.
    pub fn truncatable_faces(&self) -> Vec<VertexSet> {
        self.complex
            .all_faces()
            .into_iter()
            .flatten()
            .filter(|f| f.len() >= 2)
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut out = 1i64;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as i64 / (i + 1) as i64;
    }
    out
}

/// Some(k) iff the complex is a k-cycle: pure of dimension 1, every vertex
/// of degree 2, connected, k ≥ 3.
fn cycle_length(k: &SimplicialComplex) -> Option<usize> {
    let m = k.vertex_count();
    if m < 3 || k.facets().len() != m {
        return None;
    }
    let mut degree = vec![0usize; m];
    for f in k.facets() {
        if f.len() != 2 {
            return None;
        }
        for v in f.iter() {
            degree[v] += 1;
        }
    }
    if degree.iter().any(|&d| d != 2) {
        return None;
    }
    let mut uf = crate::complex::UnionFind::new(m);
    for f in k.facets() {
        let vs: Vec<usize> = f.iter().collect();
        uf.union(vs[0], vs[1]);
    }
    if (0..m).all(|v| uf.find(v) == uf.find(0)) {
        Some(m)
    } else {
        None
    }
}

/// Face counts of the polytope by dual dimension: f_i = number of
/// i-dimensional faces of the dual complex (codimension i+1 faces of P).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<usize>);

/// h-vector (h_0, ..., h_n).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVector(pub Vec<i64>);

impl HVector {
    pub fn is_palindromic(&self) -> bool {
        let h = &self.0;
        (0..h.len()).all(|i| h[i] == h[h.len() - 1 - i])
    }
}

/// Multiset k -> number of k-gonal 2-faces.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GonalityProfile(pub BTreeMap<usize, usize>);

impl GonalityProfile {
    pub fn count(&self, k: usize) -> usize {
        self.0.get(&k).copied().unwrap_or(0)
    }

    /// Facet type string in the usual gonality notation, e.g. "3^1 4^3 5^3"
    /// for one triangle, three quadrilaterals and three pentagons.
    pub fn type_string(&self) -> String {
        self.0
            .iter()
            .map(|(k, c)| format!("{k}^{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl std::fmt::Display for GonalityProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.type_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::test_fixtures::*;

    #[test]
    fn validation_gate() {
        let p = DualPolytope::from_complex(octahedron()).unwrap();
        assert_eq!((p.n(), p.m()), (3, 6));

        assert_eq!(DualPolytope::from_complex(path(3)), Err(Error::NotPseudomanifold));

        let p = DualPolytope::from_complex(boundary_delta3()).unwrap();
        assert_eq!((p.n(), p.m()), (3, 4));

        let impure = complex(&[&[0, 1, 2], &[2, 3]], 4);
        assert_eq!(DualPolytope::from_complex(impure), Err(Error::NotPure));
    }

    #[test]
    fn f_vectors() {
        let cube = DualPolytope::from_complex(octahedron()).unwrap();
        assert_eq!(cube.f_vector().0, vec![6, 12, 8]);

        let tetra = DualPolytope::from_complex(boundary_delta3()).unwrap();
        assert_eq!(tetra.f_vector().0, vec![4, 6, 4]);
    }

    #[test]
    fn h_vectors() {
        let tetra = DualPolytope::from_complex(boundary_delta3()).unwrap();
        assert_eq!(tetra.h_vector().0, vec![1, 1, 1, 1]);

        // expand the defining identity by hand: (t-1)^3 + 6(t-1)^2 + 12(t-1) + 8
        let cube = DualPolytope::from_complex(octahedron()).unwrap();
        assert_eq!(cube.h_vector().0, vec![1, 3, 3, 1]);

        let pentagon = DualPolytope::from_complex(cycle(5)).unwrap();
        assert_eq!(pentagon.h_vector().0, vec![1, 3, 1]);
    }

    #[test]
    fn h_vector_sums_to_polytope_vertices() {
        for k in [octahedron(), boundary_delta3(), cycle(7)] {
            let p = DualPolytope::from_complex(k).unwrap();
            let h = p.h_vector();
            assert!(h.is_palindromic());
            let vertex_count = *p.f_vector().0.last().unwrap() as i64;
            assert_eq!(h.0.iter().sum::<i64>(), vertex_count);
        }
    }

    #[test]
    fn profiles_and_flags() {
        let cube = DualPolytope::from_complex(octahedron()).unwrap();
        let profile = cube.two_face_profile().unwrap();
        assert_eq!(profile.0, BTreeMap::from([(4, 6)]));
        assert!(cube.is_triangle_free().unwrap());
        assert!(cube.is_flag());

        let tetra = DualPolytope::from_complex(boundary_delta3()).unwrap();
        assert_eq!(tetra.two_face_profile().unwrap().0, BTreeMap::from([(3, 4)]));
        assert!(!tetra.is_triangle_free().unwrap());
        assert!(!tetra.is_flag());

        let pentagon = DualPolytope::from_complex(cycle(5)).unwrap();
        assert_eq!(pentagon.two_face_profile(), Err(Error::WrongDimension(2)));
        assert!(pentagon.is_flag());
    }
}
