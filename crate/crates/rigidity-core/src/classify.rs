//! Recognizers built on the minimal basis of the Stanley–Reisner ideal:
//! join/product decomposition, product-of-simplices detection, simplex
//! factor peeling, simplex facet detection, vertex-cut inversion, and the
//! vertex-cut-of-a-product characterization.

use serde::{Deserialize, Serialize};

use crate::betti::sigma;
use crate::complex::{SimplicialComplex, UnionFind, VertexSet};
use crate::error::Error;
use crate::polytope::DualPolytope;

/// Frequency vector: entry i counts the missing faces containing vertex i.
pub fn frequency(p: &DualPolytope) -> Vec<usize> {
    let mut freq = vec![0usize; p.m()];
    for h in p.complex().missing_faces().iter() {
        for v in h.iter() {
            freq[v] += 1;
        }
    }
    freq
}

/// The finest vertex partition with every missing face inside one block;
/// the complex is the join of the full subcomplexes on the blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorDecomposition {
    pub blocks: Vec<VertexSet>,
    pub factors: Vec<SimplicialComplex>,
    /// Whether the factor is a simplex boundary ∂Δ^(b-1) on its b vertices
    /// (single missing face covering the whole block).
    pub simplex_flags: Vec<bool>,
}

pub fn join_decompose(k: &SimplicialComplex) -> Result<FactorDecomposition, Error> {
    let m = k.vertex_count();
    // a cone point lies in every facet, hence in no missing face
    for v in 0..m {
        let s = VertexSet::new(vec![v]);
        if k.facets().iter().all(|f| s.is_subset_of(f)) {
            return Err(Error::ConePoint(v));
        }
    }
    let missing = k.missing_faces();
    let mut uf = UnionFind::new(m);
    for h in missing.iter() {
        let vs: Vec<usize> = h.iter().collect();
        for w in &vs[1..] {
            uf.union(vs[0], *w);
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..m {
        by_root.entry(uf.find(v)).or_default().push(v);
    }
    let blocks: Vec<VertexSet> = by_root.into_values().map(VertexSet::new).collect();
    let factors: Vec<SimplicialComplex> =
        blocks.iter().map(|b| k.full_subcomplex(b).0).collect();
    let simplex_flags = factors
        .iter()
        .map(|f| {
            let b = f.vertex_count();
            f.facets().len() == b && f.facets().iter().all(|fc| fc.len() == b - 1)
        })
        .collect();
    Ok(FactorDecomposition { blocks, factors, simplex_flags })
}

/// Some(sorted factor dimensions) iff P is a product of simplices, i.e.
/// every join factor of the dual complex is a simplex boundary. The sigma
/// criterion σ(P) = m is equivalent and asserted against the decomposition.
pub fn is_product_of_simplices(p: &DualPolytope) -> Option<Vec<usize>> {
    let result = match join_decompose(p.complex()) {
        Ok(d) if d.simplex_flags.iter().all(|&s| s) => {
            let mut dims: Vec<usize> = d.blocks.iter().map(|b| b.len() - 1).collect();
            dims.sort_unstable();
            Some(dims)
        }
        _ => None,
    };
    assert_eq!(
        result.is_some(),
        sigma(p) == p.m(),
        "sigma = m must characterize products of simplices"
    );
    result
}

/// If some vertex lies in exactly one missing face h and h is a standalone
/// join block, the polytope splits off a simplex factor Δ^k with
/// k = |h| - 1; returns the complementary factor.
pub fn peel_simplex_factor(p: &DualPolytope) -> Option<(usize, DualPolytope)> {
    let freq = frequency(p);
    let missing = p.complex().missing_faces();
    let decomposition = join_decompose(p.complex()).ok()?;
    for v in (0..p.m()).filter(|&v| freq[v] == 1) {
        let h = missing.iter().find(|h| h.contains(v)).expect("frequency 1");
        if !decomposition.blocks.iter().any(|b| b == h) {
            continue;
        }
        let complement =
            VertexSet::new((0..p.m()).filter(|w| !h.contains(*w)).collect());
        let (factor, _) = p.complex().full_subcomplex(&complement);
        if let Ok(rest) = DualPolytope::from_complex(factor) {
            return Some((h.len() - 1, rest));
        }
    }
    None
}

/// Vertices of the dual complex whose link is a simplex boundary ∂Δ^(n-1):
/// the facets of P that are (n-1)-simplices.
pub fn simplex_facets(p: &DualPolytope) -> Vec<usize> {
    let n = p.n();
    if n < 2 {
        return Vec::new();
    }
    (0..p.m())
        .filter(|&w| {
            let (link, _) = p.complex().link(&VertexSet::new(vec![w])).expect("vertex");
            link.vertex_count() == n
                && link.facets().len() == n
                && link.facets().iter().all(|f| f.len() == n - 1)
        })
        .collect()
}

/// Inverse of a vertex cut: removes `w` and its star and restores the cut
/// facet. Requires link(w) = ∂Δ^(n-1) on a vertex set that is not already
/// a face elsewhere.
pub fn undo_vertex_cut(p: &DualPolytope, w: usize) -> Result<DualPolytope, Error> {
    let n = p.n();
    if w >= p.m() {
        return Err(Error::invalid(format!("vertex {w} out of range")));
    }
    let (link, back) = p.complex().link(&VertexSet::new(vec![w]))?;
    let simplex_link = link.vertex_count() == n
        && link.facets().len() == n
        && link.facets().iter().all(|f| f.len() == n - 1);
    if !simplex_link {
        return Err(Error::NotReversible);
    }
    let sigma_face = VertexSet::new(back);
    if p.complex().is_face(&sigma_face) {
        return Err(Error::NotReversible);
    }
    // drop the star of w, relabel indices above w down, add sigma as a facet
    let relabel = |v: usize| if v > w { v - 1 } else { v };
    let mut raw: Vec<VertexSet> = p
        .complex()
        .facets()
        .iter()
        .filter(|f| !f.contains(w))
        .map(|f| VertexSet::new(f.iter().map(relabel).collect()))
        .collect();
    raw.push(VertexSet::new(sigma_face.iter().map(relabel).collect()));
    let complex = SimplicialComplex::normalize(raw, p.m() - 1)?;
    DualPolytope::from_complex(complex).map_err(|_| Error::NotReversible)
}

/// Witness data for a recognized vertex cut of a product of simplices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VcProductWitness {
    /// The dual vertex whose cut is undone (the simplex facet of P).
    pub cut_vertex: usize,
    /// Sorted simplex dimensions of the recovered product.
    pub factor_dims: Vec<usize>,
}

/// Does P arise as a vertex cut of a product of at least two simplices?
///
/// Numeric test (with m the facet count of the uncut polytope, so
/// f_0(P) = m+1): σ(P) = 3m-n and β^{-1,2n}(P) ≠ 0. Constructive test:
/// some simplex facet undoes to a product of at least two simplices. The
/// two must agree; the single-simplex cut vc(Δ^n) = Δ^(n-1)×Δ^1 fails the
/// numeric arithmetic and is deliberately excluded from the constructive
/// branch as well.
pub fn is_vertex_cut_of_product(p: &DualPolytope) -> (bool, Option<VcProductWitness>) {
    let n = p.n();
    let numeric = if n >= 2 && p.m() >= 1 {
        let m_uncut = p.m() - 1;
        let sigma_ok = sigma(p) == 3 * m_uncut - n;
        let top_row_ok = p
            .complex()
            .missing_faces()
            .iter()
            .any(|h| h.len() == n);
        sigma_ok && top_row_ok
    } else {
        false
    };

    let mut witness = None;
    for w in simplex_facets(p) {
        if let Ok(undone) = undo_vertex_cut(p, w) {
            if let Some(dims) = is_product_of_simplices(&undone) {
                if dims.len() >= 2 {
                    witness = Some(VcProductWitness { cut_vertex: w, factor_dims: dims });
                    break;
                }
            }
        }
    }
    assert_eq!(
        numeric,
        witness.is_some(),
        "numeric and constructive recognition must agree"
    );
    (numeric, witness)
}

/// Serialized classification result.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub product_of_simplices: Option<Vec<usize>>,
    pub vertex_cut_of_product: bool,
    pub witness: Option<VcProductWitness>,
    pub sigma: usize,
    pub frequencies: Vec<usize>,
}

pub fn classification_json(p: &DualPolytope) -> ClassificationJson {
    let (vc_of_product, witness) = is_vertex_cut_of_product(p);
    ClassificationJson {
        product_of_simplices: is_product_of_simplices(p),
        vertex_cut_of_product: vc_of_product,
        witness,
        sigma: sigma(p),
        frequencies: frequency(p),
    }
}
