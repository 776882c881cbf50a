//! Combinatorial equivalence of complexes: isomorphism testing, automorphism
//! orbits, and canonical forms for deduplication.
//!
//! The engine is color refinement on the vertex/facet incidence structure,
//! seeded with per-vertex invariants (facet degree, incident facet sizes,
//! star face counts, missing-face size profile), followed by backtracking
//! over same-colored vertex assignments. Canonical forms take the
//! lexicographically minimal relabeled facet list over the leaves of the
//! individualization tree; the leaf set is relabeling-invariant, so two
//! complexes have equal forms exactly when they are isomorphic. Ties branch
//! lowest-index-first, so everything is deterministic.

use std::collections::BTreeMap;

use crate::complex::{SimplicialComplex, UnionFind, VertexSet};
use crate::error::Error;

/// Worst-case backtracking is acceptable at desk scale only.
const LABEL_CAP: usize = 16;

/// A canonically relabeled facet list plus the certifying permutation
/// (`permutation[old] = new`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub facets: Vec<VertexSet>,
    pub permutation: Vec<usize>,
}

impl CanonicalForm {
    /// Key usable for deduplication maps.
    pub fn key(&self) -> (usize, Vec<VertexSet>) {
        (self.vertex_count, self.facets.clone())
    }
}

struct Inc {
    m: usize,
    facets: Vec<Vec<usize>>,
    vfacets: Vec<Vec<usize>>,
}

impl Inc {
    fn new(k: &SimplicialComplex) -> Inc {
        let facets: Vec<Vec<usize>> =
            k.facets().iter().map(|f| f.as_slice().to_vec()).collect();
        let mut vfacets = vec![Vec::new(); k.vertex_count()];
        for (i, f) in facets.iter().enumerate() {
            for &v in f {
                vfacets[v].push(i);
            }
        }
        Inc { m: k.vertex_count(), facets, vfacets }
    }
}

#[derive(Clone, Debug)]
struct Coloring {
    vc: Vec<u64>,
    fc: Vec<u64>,
}

type VertexSeed = (usize, Vec<usize>, Vec<usize>, Vec<(usize, usize)>);

/// Per-vertex isomorphism invariants used to seed the refinement.
fn vertex_seeds(k: &SimplicialComplex) -> Vec<VertexSeed> {
    let m = k.vertex_count();
    let mut degree = vec![0usize; m];
    let mut sizes: Vec<Vec<usize>> = vec![Vec::new(); m];
    for f in k.facets() {
        for v in f.iter() {
            degree[v] += 1;
            sizes[v].push(f.len());
        }
    }
    // star face counts by dimension (equivalent to the link f-vector)
    let dim = k.dim().max(0) as usize;
    let mut star = vec![vec![0usize; dim + 1]; m];
    for (d, faces) in k.all_faces().iter().enumerate() {
        for f in faces {
            for v in f.iter() {
                star[v][d] += 1;
            }
        }
    }
    let mut missing_profile: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); m];
    for h in k.missing_faces().iter() {
        for v in h.iter() {
            *missing_profile[v].entry(h.len()).or_insert(0) += 1;
        }
    }
    (0..m)
        .map(|v| {
            let mut s = sizes[v].clone();
            s.sort_unstable();
            (
                degree[v],
                s,
                star[v].clone(),
                missing_profile[v].iter().map(|(&a, &b)| (a, b)).collect(),
            )
        })
        .collect()
}

/// Ranks the seed tuples jointly across both complexes so that colors are
/// comparable between them.
fn initial_colorings(k1: &SimplicialComplex, k2: &SimplicialComplex) -> (Coloring, Coloring) {
    let s1 = vertex_seeds(k1);
    let s2 = vertex_seeds(k2);
    let mut ranks: BTreeMap<&VertexSeed, u64> = BTreeMap::new();
    for s in s1.iter().chain(s2.iter()) {
        ranks.insert(s, 0);
    }
    for (i, (_, r)) in ranks.iter_mut().enumerate() {
        *r = i as u64;
    }
    let color = |seeds: &[VertexSeed]| seeds.iter().map(|s| ranks[s]).collect::<Vec<u64>>();
    let fcolor = |k: &SimplicialComplex| {
        k.facets().iter().map(|f| f.len() as u64).collect::<Vec<u64>>()
    };
    (
        Coloring { vc: color(&s1), fc: fcolor(k1) },
        Coloring { vc: color(&s2), fc: fcolor(k2) },
    )
}

/// One pass of joint color refinement until stable. With two parts, returns
/// false as soon as the color histograms of the parts diverge.
fn refine(parts: &mut [(&Inc, &mut Coloring)]) -> bool {
    loop {
        let before: usize = distinct_colors(parts);

        // facet signatures: (own color, sorted member vertex colors)
        let mut sigs: BTreeMap<(u64, Vec<u64>), u64> = BTreeMap::new();
        for (inc, col) in parts.iter() {
            for (fi, f) in inc.facets.iter().enumerate() {
                let mut vc: Vec<u64> = f.iter().map(|&v| col.vc[v]).collect();
                vc.sort_unstable();
                sigs.insert((col.fc[fi], vc), 0);
            }
        }
        assign_ranks(&mut sigs);
        for (inc, col) in parts.iter_mut() {
            for (fi, f) in inc.facets.iter().enumerate() {
                let mut vc: Vec<u64> = f.iter().map(|&v| col.vc[v]).collect();
                vc.sort_unstable();
                col.fc[fi] = sigs[&(col.fc[fi], vc)];
            }
        }
        if !histograms_match(parts, |c| &c.fc) {
            return false;
        }

        // vertex signatures: (own color, sorted incident facet colors)
        let mut sigs: BTreeMap<(u64, Vec<u64>), u64> = BTreeMap::new();
        for (inc, col) in parts.iter() {
            for v in 0..inc.m {
                let mut fc: Vec<u64> = inc.vfacets[v].iter().map(|&f| col.fc[f]).collect();
                fc.sort_unstable();
                sigs.insert((col.vc[v], fc), 0);
            }
        }
        assign_ranks(&mut sigs);
        for (inc, col) in parts.iter_mut() {
            for v in 0..inc.m {
                let mut fc: Vec<u64> = inc.vfacets[v].iter().map(|&f| col.fc[f]).collect();
                fc.sort_unstable();
                col.vc[v] = sigs[&(col.vc[v], fc)];
            }
        }
        if !histograms_match(parts, |c| &c.vc) {
            return false;
        }

        if distinct_colors(parts) == before {
            return true;
        }
    }
}

fn assign_ranks<K: Ord>(sigs: &mut BTreeMap<K, u64>) {
    for (i, (_, r)) in sigs.iter_mut().enumerate() {
        *r = i as u64;
    }
}

fn distinct_colors(parts: &[(&Inc, &mut Coloring)]) -> usize {
    let mut vs: Vec<u64> = Vec::new();
    let mut fs: Vec<u64> = Vec::new();
    for (_, col) in parts {
        vs.extend_from_slice(&col.vc);
        fs.extend_from_slice(&col.fc);
    }
    vs.sort_unstable();
    vs.dedup();
    fs.sort_unstable();
    fs.dedup();
    vs.len() + fs.len()
}

fn histograms_match(parts: &[(&Inc, &mut Coloring)], pick: impl Fn(&Coloring) -> &Vec<u64>) -> bool {
    if parts.len() < 2 {
        return true;
    }
    let mut delta: BTreeMap<u64, isize> = BTreeMap::new();
    for &c in pick(parts[0].1) {
        *delta.entry(c).or_insert(0) += 1;
    }
    for &c in pick(parts[1].1) {
        *delta.entry(c).or_insert(0) -= 1;
    }
    delta.values().all(|&d| d == 0)
}

fn max_color(ca: &Coloring, cb: &Coloring) -> u64 {
    ca.vc
        .iter()
        .chain(cb.vc.iter())
        .copied()
        .max()
        .unwrap_or(0)
}

/// Backtracking search for a color-preserving bijection.
fn search(a: &Inc, b: &Inc, mut ca: Coloring, mut cb: Coloring) -> Option<Vec<usize>> {
    {
        let mut parts = [(a, &mut ca), (b, &mut cb)];
        if !refine(&mut parts) {
            return None;
        }
    }
    // the smallest color class with at least two members
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in &ca.vc {
        *counts.entry(c).or_insert(0) += 1;
    }
    if let Some((&color, _)) = counts.iter().find(|(_, &n)| n >= 2) {
        let v = (0..a.m).find(|&v| ca.vc[v] == color).unwrap();
        let fresh = max_color(&ca, &cb) + 1;
        for w in 0..b.m {
            if cb.vc[w] != color {
                continue;
            }
            let mut ca2 = ca.clone();
            let mut cb2 = cb.clone();
            ca2.vc[v] = fresh;
            cb2.vc[w] = fresh;
            if let Some(found) = search(a, b, ca2, cb2) {
                return Some(found);
            }
        }
        return None;
    }
    // discrete coloring: read off the map and verify it preserves facets
    let by_color: BTreeMap<u64, usize> = (0..b.m).map(|w| (cb.vc[w], w)).collect();
    let map: Vec<usize> = (0..a.m)
        .map(|v| by_color.get(&ca.vc[v]).copied())
        .collect::<Option<_>>()?;
    let mut relabeled: Vec<Vec<usize>> = a
        .facets
        .iter()
        .map(|f| {
            let mut g: Vec<usize> = f.iter().map(|&v| map[v]).collect();
            g.sort_unstable();
            g
        })
        .collect();
    relabeled.sort();
    let mut bf = b.facets.clone();
    bf.sort();
    (relabeled == bf).then_some(map)
}

/// A facet-structure-preserving vertex bijection from `k1` to `k2`, or None.
pub fn are_isomorphic(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Option<Vec<usize>> {
    if k1.vertex_count() != k2.vertex_count() || k1.facets().len() != k2.facets().len() {
        return None;
    }
    let (ca, cb) = initial_colorings(k1, k2);
    search(&Inc::new(k1), &Inc::new(k2), ca, cb)
}

fn exists_automorphism_with_vertex_pair(k: &SimplicialComplex, v: usize, w: usize) -> bool {
    let (mut ca, mut cb) = initial_colorings(k, k);
    let fresh = max_color(&ca, &cb) + 1;
    ca.vc[v] = fresh;
    cb.vc[w] = fresh;
    search(&Inc::new(k), &Inc::new(k), ca, cb).is_some()
}

fn exists_automorphism_with_facet_pair(k: &SimplicialComplex, i: usize, j: usize) -> bool {
    let (mut ca, mut cb) = initial_colorings(k, k);
    let fresh = ca.fc.iter().chain(cb.fc.iter()).copied().max().unwrap_or(0) + 1;
    ca.fc[i] = fresh;
    cb.fc[j] = fresh;
    search(&Inc::new(k), &Inc::new(k), ca, cb).is_some()
}

/// An orbit partition: each orbit sorted, orbits listed by least member.
pub type Orbits = Vec<Vec<usize>>;

/// Vertex orbits and facet orbits under the full automorphism group.
pub fn automorphism_orbits(k: &SimplicialComplex) -> Result<(Orbits, Orbits), Error> {
    let m = k.vertex_count();
    if m > LABEL_CAP {
        return Err(Error::CapExceeded(m));
    }
    // stable refinement colors prefilter the candidate pairs
    let (mut ca, mut cb) = initial_colorings(k, k);
    let inc = Inc::new(k);
    {
        let mut parts = [(&inc, &mut ca), (&inc, &mut cb)];
        refine(&mut parts);
    }

    let mut vuf = UnionFind::new(m);
    for v in 0..m {
        for w in v + 1..m {
            if ca.vc[v] == ca.vc[w]
                && vuf.find(v) != vuf.find(w)
                && exists_automorphism_with_vertex_pair(k, v, w)
            {
                vuf.union(v, w);
            }
        }
    }
    let nf = k.facets().len();
    let mut fuf = UnionFind::new(nf);
    for i in 0..nf {
        for j in i + 1..nf {
            if ca.fc[i] == ca.fc[j]
                && fuf.find(i) != fuf.find(j)
                && exists_automorphism_with_facet_pair(k, i, j)
            {
                fuf.union(i, j);
            }
        }
    }
    Ok((collect_orbits(&mut vuf, m), collect_orbits(&mut fuf, nf)))
}

fn collect_orbits(uf: &mut UnionFind, n: usize) -> Vec<Vec<usize>> {
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        by_root.entry(uf.find(x)).or_default().push(x);
    }
    by_root.into_values().collect()
}

/// Deterministic canonical form; equal across isomorphic inputs.
pub fn canonical_form(k: &SimplicialComplex) -> Result<CanonicalForm, Error> {
    let m = k.vertex_count();
    if m > LABEL_CAP {
        return Err(Error::CapExceeded(m));
    }
    let inc = Inc::new(k);
    let seeds = vertex_seeds(k);
    let mut ranks: BTreeMap<&VertexSeed, u64> = seeds.iter().map(|s| (s, 0)).collect();
    assign_ranks(&mut ranks);
    let col = Coloring {
        vc: seeds.iter().map(|s| ranks[s]).collect(),
        fc: k.facets().iter().map(|f| f.len() as u64).collect(),
    };
    let mut best: Option<(Vec<VertexSet>, Vec<usize>)> = None;
    canon_rec(&inc, col, &mut best);
    let (facets, permutation) = best.expect("at least one leaf");
    Ok(CanonicalForm { vertex_count: m, facets, permutation })
}

fn canon_rec(inc: &Inc, mut col: Coloring, best: &mut Option<(Vec<VertexSet>, Vec<usize>)>) {
    {
        let mut parts = [(inc, &mut col)];
        refine(&mut parts);
    }
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in &col.vc {
        *counts.entry(c).or_insert(0) += 1;
    }
    if let Some((&color, _)) = counts.iter().find(|(_, &n)| n >= 2) {
        for v in 0..inc.m {
            if col.vc[v] != color {
                continue;
            }
            // split v to the front of its cell, preserving the global order
            let mut next = col.clone();
            for u in 0..inc.m {
                next.vc[u] = next.vc[u] * 2 + u64::from(u != v);
            }
            canon_rec(inc, next, best);
        }
        return;
    }
    // discrete: vertices ordered by color give the labels
    let mut order: Vec<usize> = (0..inc.m).collect();
    order.sort_by_key(|&v| col.vc[v]);
    let mut perm = vec![0usize; inc.m];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let mut facets: Vec<VertexSet> = inc
        .facets
        .iter()
        .map(|f| VertexSet::new(f.iter().map(|&v| perm[v]).collect()))
        .collect();
    facets.sort();
    let candidate = (facets, perm);
    match best {
        Some(b) if b.0 <= candidate.0 => {}
        _ => *best = Some(candidate),
    }
}
