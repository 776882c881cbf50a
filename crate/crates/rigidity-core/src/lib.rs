//! Combinatorics of simple convex polytopes through their dual simplicial
//! complexes: exact bigraded Betti numbers of Stanley–Reisner rings via
//! Hochster's formula, f/h-vectors, the sigma invariant, constructors for
//! products, truncations and connected sums, and recognizers for products
//! of simplices and their vertex cuts.
//!
//! Everything is exact integer arithmetic; no floating point is used
//! anywhere. All values are immutable after construction and safe to share
//! across threads.

pub mod betti;
pub mod classify;
pub mod complex;
pub mod construct;
pub mod dsl;
pub mod error;
pub mod homology;
pub mod iso;
pub mod polytope;

pub use betti::{
    bigraded_betti, betti_entry, first_row_via_missing_faces, invariant_report, sigma,
    BettiOptions, BettiTable, InvariantReport,
};
pub use classify::{
    frequency, is_product_of_simplices, is_vertex_cut_of_product, join_decompose,
    peel_simplex_factor, simplex_facets, undo_vertex_cut, FactorDecomposition, VcProductWitness,
};
pub use complex::{ComplexJson, MissingFaceSet, SimplicialComplex, VertexSet};
pub use construct::{
    connected_sum, cube_dual, dodecahedron_dual, named, polygon_dual, product, simplex_dual,
    truncate, vc_family, vertex_cut, vertex_cut_classes,
};
pub use dsl::{build, parse, ConstructionExpr};
pub use error::Error;
pub use homology::{boundary_matrix, rank_exact, reduced_homology_dims, HomologyDims, IntegerMatrix};
pub use iso::{are_isomorphic, automorphism_orbits, canonical_form, CanonicalForm};
pub use polytope::{DualPolytope, FVector, GonalityProfile, HVector};
