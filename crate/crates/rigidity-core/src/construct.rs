//! Constructors for the polytopes under study: simplices, polygons, cubes,
//! products, truncations (vertex and edge cuts), facet connected sums, and
//! the built-in dodecahedron.
//!
//! All operations act on the dual complex. New vertices from truncation
//! always receive the next free index, so every construction is
//! bit-reproducible.

use std::collections::BTreeMap;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::Error;
use crate::iso::canonical_form;
use crate::polytope::DualPolytope;

/// Dual of the n-simplex: the boundary complex on n+1 vertices.
pub fn simplex_dual(n: usize) -> Result<DualPolytope, Error> {
    if n < 1 {
        return Err(Error::invalid("simplex dimension must be at least 1"));
    }
    let raw = (0..=n)
        .map(|skip| VertexSet::new((0..=n).filter(|&v| v != skip).collect()))
        .collect();
    DualPolytope::from_complex(SimplicialComplex::normalize(raw, n + 1)?)
}

/// Dual of the k-gon: the k-cycle.
pub fn polygon_dual(k: usize) -> Result<DualPolytope, Error> {
    if k < 3 {
        return Err(Error::invalid("polygons need at least 3 edges"));
    }
    let raw = (0..k).map(|i| VertexSet::new(vec![i, (i + 1) % k])).collect();
    DualPolytope::from_complex(SimplicialComplex::normalize(raw, k)?)
}

/// Dual of the n-cube with facet i opposite facet n+i: the cross-polytope
/// boundary whose missing edges are {i, n+i}.
pub fn cube_dual(n: usize) -> Result<DualPolytope, Error> {
    if n < 1 {
        return Err(Error::invalid("cube dimension must be at least 1"));
    }
    let mut raw = Vec::with_capacity(1 << n);
    for choice in 0u64..(1 << n) {
        let facet: Vec<usize> =
            (0..n).map(|i| if choice & (1 << i) != 0 { n + i } else { i }).collect();
        raw.push(VertexSet::new(facet));
    }
    DualPolytope::from_complex(SimplicialComplex::normalize(raw, 2 * n)?)
}

/// Product of polytopes; dually the join of the complexes. Vertices of the
/// first factor keep their labels, the second factor is shifted.
pub fn product(p1: &DualPolytope, p2: &DualPolytope) -> Result<DualPolytope, Error> {
    let m1 = p1.m();
    let mut raw = Vec::with_capacity(p1.complex().facets().len() * p2.complex().facets().len());
    for f1 in p1.complex().facets() {
        for f2 in p2.complex().facets() {
            let shifted: Vec<usize> = f1.iter().chain(f2.iter().map(|v| v + m1)).collect();
            raw.push(VertexSet::new(shifted));
        }
    }
    DualPolytope::from_complex(SimplicialComplex::normalize(raw, m1 + p2.m())?)
}

/// Truncates the polytope at the face of P dual to `face`: stellar
/// subdivision of `face` in the dual complex. A facet of the complex gives
/// a vertex cut, an (n-2)-simplex an edge cut. The new vertex gets index m.
///
/// Faces with a single vertex are rejected: shaving a whole facet of P does
/// not change the combinatorial type, and the subdivision would only strand
/// the old index.
pub fn truncate(p: &DualPolytope, face: &VertexSet) -> Result<DualPolytope, Error> {
    if face.len() < 2 {
        return Err(Error::invalid(
            "truncation site must be a dual face with at least 2 vertices",
        ));
    }
    if !p.complex().is_face(face) {
        return Err(Error::invalid(format!("{face} is not a face of the dual complex")));
    }
    let m = p.m();
    let mut raw = Vec::new();
    for f in p.complex().facets() {
        if face.is_subset_of(f) {
            for v in face.iter() {
                raw.push(f.without(v).with(m));
            }
        } else {
            raw.push(f.clone());
        }
    }
    DualPolytope::from_complex(SimplicialComplex::normalize(raw, m + 1)?)
}

/// Vertex cut at the vertex of P dual to the facet with the given index in
/// the normalized facet list.
pub fn vertex_cut(p: &DualPolytope, facet_index: usize) -> Result<DualPolytope, Error> {
    let facet = p
        .complex()
        .facets()
        .get(facet_index)
        .ok_or_else(|| Error::invalid(format!("facet index {facet_index} out of range")))?
        .clone();
    truncate(p, &facet)
}

/// All isomorphism classes obtainable by a single vertex cut, deduplicated
/// by canonical form and returned in canonical order.
pub fn vertex_cut_classes(p: &DualPolytope) -> Result<Vec<DualPolytope>, Error> {
    let mut classes: BTreeMap<(usize, Vec<VertexSet>), DualPolytope> = BTreeMap::new();
    for idx in 0..p.complex().facets().len() {
        let cut = vertex_cut(p, idx)?;
        let key = canonical_form(cut.complex())?.key();
        classes.entry(key).or_insert(cut);
    }
    Ok(classes.into_values().collect())
}

/// All isomorphism classes of `depth`-fold vertex cuts of `p`, enumerated
/// level by level with canonical-form deduplication at each level.
pub fn vc_family(p: &DualPolytope, depth: usize) -> Result<Vec<DualPolytope>, Error> {
    let mut level = vec![p.clone()];
    for _ in 0..depth {
        let mut next: BTreeMap<(usize, Vec<VertexSet>), DualPolytope> = BTreeMap::new();
        for q in &level {
            for idx in 0..q.complex().facets().len() {
                let cut = vertex_cut(q, idx)?;
                let key = canonical_form(cut.complex())?.key();
                next.entry(key).or_insert(cut);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Connected sum of P1 and P2 at the vertices dual to the given facets:
/// both facets are removed and their vertex sets identified. The gluing
/// maps the k-th vertex of facet 1 (sorted order) to the `gluing[k]`-th
/// vertex of facet 2; identity when omitted. Remaining facet-2 vertices
/// get fresh indices above m1, in order.
pub fn connected_sum(
    p1: &DualPolytope,
    facet1: usize,
    p2: &DualPolytope,
    facet2: usize,
    gluing: Option<&[usize]>,
) -> Result<DualPolytope, Error> {
    let n = p1.n();
    if n != p2.n() {
        return Err(Error::invalid("connected sum requires equal dimensions"));
    }
    if n < 2 {
        return Err(Error::invalid("connected sum needs dimension at least 2"));
    }
    let s1 = p1
        .complex()
        .facets()
        .get(facet1)
        .ok_or_else(|| Error::invalid(format!("facet index {facet1} out of range")))?;
    let s2 = p2
        .complex()
        .facets()
        .get(facet2)
        .ok_or_else(|| Error::invalid(format!("facet index {facet2} out of range")))?;

    let default: Vec<usize> = (0..n).collect();
    let gluing = gluing.unwrap_or(&default);
    {
        let mut sorted = gluing.to_vec();
        sorted.sort_unstable();
        if sorted != default {
            return Err(Error::invalid("gluing must be a permutation of 0..n"));
        }
    }
    let s1v: Vec<usize> = s1.iter().collect();
    let s2v: Vec<usize> = s2.iter().collect();

    // vertex map for the second complex
    let m1 = p1.m();
    let mut map2 = vec![usize::MAX; p2.m()];
    for (k, &w) in s2v.iter().enumerate() {
        let pos = gluing.iter().position(|&g| g == k).expect("permutation");
        map2[w] = s1v[pos];
    }
    let mut fresh = m1;
    for slot in &mut map2 {
        if *slot == usize::MAX {
            *slot = fresh;
            fresh += 1;
        }
    }

    let mut raw: Vec<VertexSet> = p1
        .complex()
        .facets()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != facet1)
        .map(|(_, f)| f.clone())
        .collect();
    for (i, f) in p2.complex().facets().iter().enumerate() {
        if i == facet2 {
            continue;
        }
        raw.push(VertexSet::new(f.iter().map(|v| map2[v]).collect()));
    }
    let total = m1 + p2.m() - n;
    debug_assert_eq!(fresh, total);
    DualPolytope::from_complex(SimplicialComplex::normalize(raw, total)?)
}

/// Standard icosahedron triangulation: the dual of the dodecahedron.
/// Vertex 0 on top, rings 1-5 and 6-10, vertex 11 at the bottom.
const ICOSAHEDRON_FACETS: [[usize; 3]; 20] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 5, 1],
    [1, 2, 6],
    [2, 3, 7],
    [3, 4, 8],
    [4, 5, 9],
    [5, 1, 10],
    [2, 6, 7],
    [3, 7, 8],
    [4, 8, 9],
    [5, 9, 10],
    [1, 10, 6],
    [6, 7, 11],
    [7, 8, 11],
    [8, 9, 11],
    [9, 10, 11],
    [10, 6, 11],
];

/// The dodecahedron, shipped as a literal facet table and revalidated on
/// every load: 12 vertices, 30 edges, 20 triangles, Euler characteristic 2,
/// pseudomanifold, every vertex link a 5-cycle.
pub fn dodecahedron_dual() -> DualPolytope {
    let raw = ICOSAHEDRON_FACETS.iter().map(|f| VertexSet::from(&f[..])).collect();
    let k = SimplicialComplex::normalize(raw, 12).expect("builtin table is well-formed");
    assert_eq!(k.faces_by_dimension(), vec![12, 30, 20], "builtin dodecahedron table corrupt");
    assert_eq!(k.euler_characteristic(), 2);
    let p = DualPolytope::from_complex(k).expect("builtin table is a pseudomanifold");
    let profile = p.two_face_profile().expect("vertex links are cycles");
    assert_eq!(profile.0, BTreeMap::from([(5, 12)]));
    p
}

/// Looks up a built-in polytope by name.
pub fn named(name: &str) -> Result<DualPolytope, Error> {
    match name {
        "dodecahedron" => Ok(dodecahedron_dual()),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::test_fixtures::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn simplex_duals() {
        let s0 = simplex_dual(1).unwrap();
        assert_eq!((s0.n(), s0.m()), (1, 2));
        assert_eq!(s0.complex().facets().len(), 2);

        let d3 = simplex_dual(3).unwrap();
        assert_eq!(d3.complex(), &boundary_delta3());
        assert_eq!(d3.complex().missing_faces().len(), 1);

        assert_eq!(simplex_dual(2).unwrap().complex(), &cycle(3));
        assert!(simplex_dual(0).is_err());
    }

    #[test]
    fn polygon_duals() {
        assert_eq!(polygon_dual(5).unwrap().complex(), &cycle(5));
        assert!(are_isomorphic(polygon_dual(3).unwrap().complex(), simplex_dual(2).unwrap().complex()).is_some());
        assert!(polygon_dual(2).is_err());
    }

    #[test]
    fn cube_is_octahedron_dual() {
        let c = cube_dual(3).unwrap();
        assert_eq!(c.complex(), &octahedron());
        // n-fold product of S^0 gives the same polytope
        let mut chain = simplex_dual(1).unwrap();
        for _ in 0..2 {
            chain = product(&chain, &simplex_dual(1).unwrap()).unwrap();
        }
        assert!(are_isomorphic(c.complex(), chain.complex()).is_some());
    }

    #[test]
    fn products() {
        let prism = product(&simplex_dual(2).unwrap(), &simplex_dual(1).unwrap()).unwrap();
        assert_eq!((prism.n(), prism.m()), (3, 5));

        let pentagonal_prism =
            product(&polygon_dual(5).unwrap(), &simplex_dual(1).unwrap()).unwrap();
        assert_eq!(pentagonal_prism.f_vector().0, vec![7, 15, 10]);

        let p5xp5 = product(&polygon_dual(5).unwrap(), &polygon_dual(5).unwrap()).unwrap();
        assert_eq!((p5xp5.n(), p5xp5.m()), (4, 10));
    }

    #[test]
    fn product_commutes_up_to_isomorphism() {
        let a = polygon_dual(5).unwrap();
        let b = simplex_dual(2).unwrap();
        let ab = product(&a, &b).unwrap();
        let ba = product(&b, &a).unwrap();
        assert!(are_isomorphic(ab.complex(), ba.complex()).is_some());

        let c = simplex_dual(1).unwrap();
        let left = product(&product(&a, &b).unwrap(), &c).unwrap();
        let right = product(&a, &product(&b, &c).unwrap()).unwrap();
        assert!(are_isomorphic(left.complex(), right.complex()).is_some());
    }

    #[test]
    fn truncation_cases() {
        // cutting a vertex of the tetrahedron gives the triangular prism
        let tetra = simplex_dual(3).unwrap();
        let cut = truncate(&tetra, &VertexSet::from(&[0usize, 1, 2][..])).unwrap();
        let prism = product(&simplex_dual(2).unwrap(), &simplex_dual(1).unwrap()).unwrap();
        assert!(are_isomorphic(cut.complex(), prism.complex()).is_some());

        // edge cut of the pentagonal prism at a pentagon edge
        let pp = product(&polygon_dual(5).unwrap(), &simplex_dual(1).unwrap()).unwrap();
        let q = truncate(&pp, &VertexSet::from(&[0usize, 5][..])).unwrap();
        let profile = q.two_face_profile().unwrap();
        assert_eq!(profile.0, BTreeMap::from([(4, 4), (5, 4)]));

        // vertex cut of the cube
        let vc_cube = truncate(&cube_dual(3).unwrap(), &VertexSet::from(&[0usize, 1, 2][..])).unwrap();
        assert_eq!(vc_cube.m(), 7);
        assert_eq!(
            vc_cube.two_face_profile().unwrap().0,
            BTreeMap::from([(3, 1), (4, 3), (5, 3)])
        );
        assert_eq!(vc_cube.is_triangle_free(), Ok(false));
        assert!(!vc_cube.is_flag());
    }

    #[test]
    fn profiles_in_higher_dimension() {
        // the 4-cube has 24 square 2-faces
        let c4 = cube_dual(4).unwrap();
        assert_eq!(c4.two_face_profile().unwrap().0, BTreeMap::from([(4, 24)]));

        // triangle times triangle: 6 triangles and 9 squares
        let p = product(&simplex_dual(2).unwrap(), &simplex_dual(2).unwrap()).unwrap();
        assert_eq!(p.two_face_profile().unwrap().0, BTreeMap::from([(3, 6), (4, 9)]));
    }

    #[test]
    fn truncate_rejects_bad_faces() {
        let cube = cube_dual(3).unwrap();
        assert!(truncate(&cube, &VertexSet::from(&[0usize][..])).is_err());
        assert!(truncate(&cube, &VertexSet::from(&[0usize, 3][..])).is_err()); // a missing edge
    }

    #[test]
    fn truncation_face_count_deltas() {
        // vertex cut of a 3-polytope: (f0, f1, f2) -> (f0+1, f1+3, f2+2)
        for p in [cube_dual(3).unwrap(), simplex_dual(3).unwrap()] {
            let f = p.f_vector().0;
            let cut = vertex_cut(&p, 0).unwrap();
            assert_eq!(cut.f_vector().0, vec![f[0] + 1, f[1] + 3, f[2] + 2]);
        }
    }

    #[test]
    fn vertex_cut_orbit_classes() {
        // products of simplices: the cut does not depend on the vertex
        let prism = product(&simplex_dual(2).unwrap(), &simplex_dual(1).unwrap()).unwrap();
        assert_eq!(vertex_cut_classes(&prism).unwrap().len(), 1);

        // three combinatorially different triple cuts of the tetrahedron
        let classes = vc_family(&simplex_dual(3).unwrap(), 3).unwrap();
        assert_eq!(classes.len(), 3);

        // four classes of double cuts of the cube
        let classes = vc_family(&cube_dual(3).unwrap(), 2).unwrap();
        assert_eq!(classes.len(), 4);
    }

    #[test]
    fn orbit_pruned_cut_enumeration_agrees() {
        // cutting one representative per facet orbit reaches the same classes
        let p = vc_family(&simplex_dual(3).unwrap(), 2).unwrap().remove(0);
        let (_, facet_orbits) = crate::iso::automorphism_orbits(p.complex()).unwrap();
        let mut via_orbits = BTreeMap::new();
        for orbit in facet_orbits {
            let cut = vertex_cut(&p, orbit[0]).unwrap();
            via_orbits.insert(canonical_form(cut.complex()).unwrap().key(), ());
        }
        let all = vertex_cut_classes(&p).unwrap();
        assert_eq!(via_orbits.len(), all.len());
    }

    #[test]
    fn connected_sums() {
        // summing two tetrahedra gives the same complex as one vertex cut
        let t = simplex_dual(3).unwrap();
        let sum = connected_sum(&t, 0, &t, 0, None).unwrap();
        assert_eq!(sum.m(), 5);
        let cut = vertex_cut(&t, 0).unwrap();
        assert!(are_isomorphic(sum.complex(), cut.complex()).is_some());

        // corner-to-corner sum of two cubes
        let c = cube_dual(3).unwrap();
        let sum = connected_sum(&c, 0, &c, 0, None).unwrap();
        assert_eq!(sum.m(), 9);
        assert_eq!(sum.two_face_profile().unwrap().0, BTreeMap::from([(4, 6), (6, 3)]));

        // f_0 = m1 + m2 - n
        assert_eq!(sum.f_vector().0[0], 6 + 6 - 3);
    }

    #[test]
    fn connected_sum_gluings_of_cubes_coincide() {
        let c = cube_dual(3).unwrap();
        let mut keys = std::collections::BTreeSet::new();
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let sum = connected_sum(&c, 0, &c, 0, Some(&perm)).unwrap();
            keys.insert(canonical_form(sum.complex()).unwrap().key());
        }
        assert_eq!(keys.len(), 1);
    }

    #[test]
    fn pinched_sphere_fails_the_cycle_check() {
        // identify the two poles of the icosahedron: still pure, still a
        // pseudomanifold, but the link of the pinch vertex is two disjoint
        // cycles, so the 2-face profile must reject it
        let raw = ICOSAHEDRON_FACETS
            .iter()
            .map(|f| VertexSet::new(f.iter().map(|&v| if v == 11 { 0 } else { v }).collect()))
            .collect();
        let k = SimplicialComplex::normalize(raw, 11).unwrap();
        let p = DualPolytope::from_complex(k).unwrap();
        assert_eq!(p.two_face_profile(), Err(Error::NonCycleLink));
    }

    #[test]
    fn dodecahedron_oracle() {
        let d = dodecahedron_dual();
        assert_eq!((d.n(), d.m()), (3, 12));
        assert_eq!(d.f_vector().0, vec![12, 30, 20]);
        assert_eq!(d.two_face_profile().unwrap().0, BTreeMap::from([(5, 12)]));
        assert!(named("dodecahedron").is_ok());
        assert!(matches!(named("icosahedron"), Err(Error::UnknownName(_))));
    }
}
