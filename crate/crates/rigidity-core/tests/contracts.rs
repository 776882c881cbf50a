//! Cross-module contracts: the fast subset engine against a brute-force
//! oracle built only from public face-level operations, isomorphism and
//! canonical-form agreement, and randomized structural properties.

use proptest::prelude::*;

use rigidity_core::{
    are_isomorphic, bigraded_betti, build, canonical_form, parse, reduced_homology_dims,
    BettiOptions, BettiTable, DualPolytope, SimplicialComplex, VertexSet,
};

/// Independent route to the Betti table: enumerate subsets, take the full
/// subcomplex through the public API, run the reference homology path.
fn hochster_by_brute_force(p: &DualPolytope) -> BettiTable {
    let m = p.m();
    let mut table = BettiTable::new(m, p.n());
    for mask in 0u64..(1 << m) {
        let w = VertexSet::new((0..m).filter(|&v| mask & (1 << v) != 0).collect());
        if w.is_empty() {
            table.add(0, 0, 1);
            continue;
        }
        let (sub, _) = p.complex().full_subcomplex(&w);
        let dims = reduced_homology_dims(&sub);
        for (k, d) in dims.iter() {
            if k >= 0 && d > 0 {
                table.add(w.len() - 1 - k as usize, w.len(), d);
            }
        }
    }
    table
}

#[test]
fn engine_matches_brute_force_oracle() {
    let cases = [
        "simplex(3)",
        "cube(3)",
        "polygon(5)",
        "product(simplex(2),simplex(1))",
        "vc(cube(3))",
        "truncate(product(polygon(5),simplex(1)),[0,5])",
    ];
    for text in cases {
        let p = build(&parse(text).unwrap()).unwrap();
        let fast = bigraded_betti(&p, &BettiOptions::default()).unwrap();
        assert_eq!(fast, hochster_by_brute_force(&p), "mismatch for {text}");
    }
}

#[test]
fn betti_json_shape() {
    let p = build(&parse("cube(3)").unwrap()).unwrap();
    let json = bigraded_betti(&p, &BettiOptions::default()).unwrap().to_json();
    let text = serde_json::to_string(&json).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["m"], 6);
    assert_eq!(value["entries"][1], serde_json::json!([1, 4, 3]));
    assert_eq!(value["tuple"], serde_json::json!([3, 0]));
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=7).prop_flat_map(|m| {
        proptest::collection::vec(
            proptest::collection::btree_set(0..m, 1..=m.min(4)),
            1..=6,
        )
        .prop_map(move |sets| {
            let mut raw: Vec<VertexSet> = sets
                .into_iter()
                .map(|s| VertexSet::new(s.into_iter().collect()))
                .collect();
            for v in 0..m {
                raw.push(VertexSet::new(vec![v]));
            }
            SimplicialComplex::normalize(raw, m).expect("all vertices covered")
        })
    })
}

fn arb_permutation(m: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..m).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn normalize_is_idempotent(k in arb_complex()) {
        let again = SimplicialComplex::normalize(k.facets().to_vec(), k.vertex_count()).unwrap();
        prop_assert_eq!(&again, &k);
    }

    #[test]
    fn full_subcomplex_carries_exactly_the_inner_faces(
        (k, wmask) in arb_complex().prop_flat_map(|k| {
            let m = k.vertex_count();
            (Just(k), 0u64..(1u64 << m))
        })
    ) {
        let m = k.vertex_count();
        let w = VertexSet::new((0..m).filter(|&v| wmask & (1 << v) != 0).collect());
        let (sub, back) = k.full_subcomplex(&w);
        let got: std::collections::BTreeSet<VertexSet> = sub
            .all_faces()
            .into_iter()
            .flatten()
            .map(|f| VertexSet::new(f.iter().map(|v| back[v]).collect()))
            .collect();
        let want: std::collections::BTreeSet<VertexSet> = k
            .all_faces()
            .into_iter()
            .flatten()
            .filter(|f| f.is_subset_of(&w))
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn faces_are_exactly_the_missing_face_complement(k in arb_complex()) {
        let missing = k.missing_faces();
        for h in missing.iter() {
            prop_assert!(!k.is_face(h));
            for v in h.iter() {
                prop_assert!(k.is_face(&h.without(v)));
            }
        }
        let m = k.vertex_count();
        for mask in 0u64..(1 << m) {
            let s = VertexSet::new((0..m).filter(|&v| mask & (1 << v) != 0).collect());
            let clean = !missing.iter().any(|h| h.is_subset_of(&s));
            prop_assert_eq!(k.is_face(&s), clean);
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        (k, perm) in arb_complex().prop_flat_map(|k| {
            let m = k.vertex_count();
            (Just(k), arb_permutation(m))
        })
    ) {
        let relabeled = k.relabel(&perm);
        let a = canonical_form(&k).unwrap();
        let b = canonical_form(&relabeled).unwrap();
        prop_assert_eq!(a.facets, b.facets);
        prop_assert!(are_isomorphic(&k, &relabeled).is_some());
    }

    #[test]
    fn isomorphism_agrees_with_canonical_equality(
        (k1, k2) in (arb_complex(), arb_complex())
    ) {
        let verdict = are_isomorphic(&k1, &k2).is_some();
        let canon_equal = canonical_form(&k1).unwrap().facets == canonical_form(&k2).unwrap().facets
            && k1.vertex_count() == k2.vertex_count();
        prop_assert_eq!(verdict, canon_equal);
        // symmetry
        prop_assert_eq!(verdict, are_isomorphic(&k2, &k1).is_some());
    }
}
