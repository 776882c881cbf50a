//! Bigraded Betti numbers of the Stanley–Reisner ring of a polytope, by
//! summing reduced homology of full subcomplexes of the dual complex over
//! all vertex subsets (Hochster's formula, in the dual picture: the facet
//! union P_σ is homotopy equivalent to its nerve, the full subcomplex K_W).
//!
//! Cohomology dimensions over Q equal the homology dimensions computed
//! here, so every rank is an exact integer. Subset enumeration order never
//! affects the result (pure integer addition), which keeps parallel runs
//! deterministic.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::homology::rank_of_small;
use crate::polytope::DualPolytope;

/// Enumeration guard: refuse to enumerate subsets above this vertex count.
#[derive(Clone, Copy, Debug)]
pub struct BettiOptions {
    pub cap: usize,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions { cap: 20 }
    }
}

/// Map (i, j) -> β^{-i,2j}, with the polytope context (m facets, dimension n).
/// Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub m: usize,
    pub n: usize,
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn new(m: usize, n: usize) -> Self {
        BettiTable { m, n, entries: BTreeMap::new() }
    }

    pub fn from_entries(
        m: usize,
        n: usize,
        entries: impl IntoIterator<Item = ((usize, usize), usize)>,
    ) -> Self {
        let entries = entries.into_iter().filter(|&(_, rank)| rank != 0).collect();
        BettiTable { m, n, entries }
    }

    /// β^{-i,2j}.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, rank: usize) {
        if rank != 0 {
            *self.entries.entry((i, j)).or_insert(0) += rank;
        }
    }

    /// Nonzero entries sorted by (i, j).
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Poincaré duality: β^{-i,2j} = β^{-(m-n)+i,2(m-j)} for all (i, j).
    pub fn is_poincare_dual(&self) -> bool {
        let w = self.m - self.n;
        for i in 0..=w {
            for j in 0..=self.m {
                if self.get(i, j) != self.get(w - i, self.m - j) {
                    return false;
                }
            }
        }
        true
    }

    /// The summary tuple for 3-polytopes,
    /// (β^{-1,4}, β^{-2,6}, ..., β^{-(m-4),2(m-3)}); together with duality
    /// and the endpoints it determines the whole table. Empty when m ≤ 4.
    pub fn tuple(&self) -> Result<Vec<usize>, Error> {
        if self.n != 3 {
            return Err(Error::WrongDimension(self.n));
        }
        Ok((2..=self.m.saturating_sub(3)).map(|j| self.get(j - 1, j)).collect())
    }

    /// Additive Betti numbers of the moment-angle complex:
    /// b_k = Σ_{2j-i=k} β^{-i,2j}, for k = 0..=m+n.
    pub fn moment_angle(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.m + self.n + 1];
        for ((i, j), rank) in self.iter() {
            out[2 * j - i] += rank;
        }
        out
    }

    /// Bigraded convolution; the table of a product polytope.
    pub fn convolve(&self, other: &BettiTable) -> BettiTable {
        let mut out = BettiTable::new(self.m + other.m, self.n + other.n);
        for ((i1, j1), r1) in self.iter() {
            for ((i2, j2), r2) in other.iter() {
                out.add(i1 + i2, j1 + j2, r1 * r2);
            }
        }
        out
    }

    /// Σ j·β^{-1,2j} over the i = 1 row.
    pub fn sigma(&self) -> usize {
        self.iter().filter(|((i, _), _)| *i == 1).map(|((_, j), r)| j * r).sum()
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            m: self.m,
            n: self.n,
            entries: self.iter().map(|((i, j), r)| [i, 2 * j, r]).collect(),
            tuple: self.tuple().ok(),
            sigma: self.sigma(),
            moment_angle: self.moment_angle(),
        }
    }
}

/// Serialized Betti data: entries are `[i, 2j, rank]` sorted by (i, j);
/// `tuple` is null outside dimension 3.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BettiJson {
    pub m: usize,
    pub n: usize,
    pub entries: Vec<[usize; 3]>,
    pub tuple: Option<Vec<usize>>,
    pub sigma: usize,
    pub moment_angle: Vec<usize>,
}

/// Every face of the complex as a bitmask, with boundary incidences
/// precomputed once; full-subcomplex homology then only selects rows and
/// columns. Any subface of a selected face is again selected, so boundary
/// targets never need filtering.
struct FaceLattice {
    masks: Vec<Vec<u64>>,
    boundaries: Vec<Vec<Vec<(u32, i8)>>>,
}

impl FaceLattice {
    fn new(k: &SimplicialComplex) -> FaceLattice {
        let faces = k.all_faces();
        let masks: Vec<Vec<u64>> =
            faces.iter().map(|fs| fs.iter().map(|f| f.mask()).collect()).collect();
        let index: Vec<HashMap<u64, u32>> = masks
            .iter()
            .map(|ms| ms.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect())
            .collect();
        let mut boundaries = vec![Vec::new(); faces.len()];
        for (dim, fs) in faces.iter().enumerate() {
            if dim == 0 {
                continue;
            }
            boundaries[dim] = fs
                .iter()
                .map(|f| {
                    f.iter()
                        .enumerate()
                        .map(|(pos, v)| {
                            let sub = f.without(v).mask();
                            let sign = if pos % 2 == 0 { 1 } else { -1 };
                            (index[dim - 1][&sub], sign)
                        })
                        .collect()
                })
                .collect();
        }
        FaceLattice { masks, boundaries }
    }

    /// Adds the Hochster contributions of the subset `w` into `table`
    /// (keys (i, j), j = |w|).
    fn accumulate(&self, w: u64, table: &mut BTreeMap<(usize, usize), usize>) {
        let j = w.count_ones() as usize;
        if j == 0 {
            // the empty subset contributes dim H̃^{-1}(∅) = 1 at (0, 0)
            *table.entry((0, 0)).or_insert(0) += 1;
            return;
        }
        // selected faces per dimension
        let mut selected: Vec<Vec<u32>> = Vec::with_capacity(self.masks.len());
        for ms in &self.masks {
            let sel: Vec<u32> = ms
                .iter()
                .enumerate()
                .filter(|(_, &m)| m & !w == 0)
                .map(|(i, _)| i as u32)
                .collect();
            if sel.is_empty() {
                break;
            }
            selected.push(sel);
        }
        let top = selected.len() - 1; // at least dimension 0: vertices of w

        // ranks[k] = rank of ∂_k restricted to the subcomplex; ∂_0 is the
        // augmentation (rank 1, since j ≥ 1), ∂_{top+1} = 0
        let mut ranks = vec![0usize; top + 2];
        ranks[0] = 1;
        for k in 1..=top {
            let rows = selected[k - 1].len();
            let cols = selected[k].len();
            let mut local = vec![u32::MAX; self.masks[k - 1].len()];
            for (pos, &g) in selected[k - 1].iter().enumerate() {
                local[g as usize] = pos as u32;
            }
            let mut data = vec![0i64; rows * cols];
            for (c, &g) in selected[k].iter().enumerate() {
                for &(target, sign) in &self.boundaries[k][g as usize] {
                    let r = local[target as usize] as usize;
                    data[r * cols + c] = sign as i64;
                }
            }
            ranks[k] = rank_of_small(rows, cols, data);
        }
        for k in 0..=top {
            let dim_k = selected[k].len() - ranks[k] - ranks[k + 1];
            if dim_k > 0 {
                let i = j - 1 - k;
                *table.entry((i, j)).or_insert(0) += dim_k;
            }
        }
    }
}

fn check_cap(m: usize, opts: &BettiOptions) -> Result<(), Error> {
    if m > opts.cap || m > 63 {
        return Err(Error::CapExceeded(m));
    }
    Ok(())
}

/// The full table of bigraded Betti numbers of P.
pub fn bigraded_betti(p: &DualPolytope, opts: &BettiOptions) -> Result<BettiTable, Error> {
    let m = p.m();
    check_cap(m, opts)?;
    let lattice = FaceLattice::new(p.complex());
    let entries = (0u64..(1 << m))
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, w| {
            lattice.accumulate(w, &mut acc);
            acc
        })
        .reduce(BTreeMap::new, merge_tables);
    Ok(BettiTable { m, n: p.n(), entries })
}

/// A single entry β^{-i,2j}, enumerating only the subsets of size j.
pub fn betti_entry(p: &DualPolytope, i: usize, j: usize, opts: &BettiOptions) -> Result<usize, Error> {
    let m = p.m();
    check_cap(m, opts)?;
    if j > m || i > j {
        return Ok(0);
    }
    let lattice = FaceLattice::new(p.complex());
    let entries = (0u64..(1 << m))
        .into_par_iter()
        .filter(|w| w.count_ones() as usize == j)
        .fold(BTreeMap::new, |mut acc, w| {
            lattice.accumulate(w, &mut acc);
            acc
        })
        .reduce(BTreeMap::new, merge_tables);
    Ok(entries.get(&(i, j)).copied().unwrap_or(0))
}

fn merge_tables(
    mut a: BTreeMap<(usize, usize), usize>,
    b: BTreeMap<(usize, usize), usize>,
) -> BTreeMap<(usize, usize), usize> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// The i = 1 row read off the minimal basis of the Stanley–Reisner ideal:
/// β^{-1,2j} is the number of missing faces of size j.
pub fn first_row_via_missing_faces(p: &DualPolytope) -> BTreeMap<usize, usize> {
    p.complex().missing_faces().histogram()
}

/// σ(P) = Σ j·β^{-1,2j}, i.e. half the total degree of the minimal basis.
pub fn sigma(p: &DualPolytope) -> usize {
    p.complex().missing_faces().iter().map(|h| h.len()).sum()
}

/// Everything the reporting surface exposes about one polytope.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub m: usize,
    pub n: usize,
    pub f: Vec<usize>,
    pub h: Vec<i64>,
    pub profile: Option<crate::polytope::GonalityProfile>,
    pub triangle_free: Option<bool>,
    pub flag: bool,
    pub betti: BettiTable,
    pub tuple: Option<Vec<usize>>,
    pub sigma: usize,
    pub frequencies: Vec<usize>,
    pub moment_angle: Vec<usize>,
    pub product_of_simplices: Option<Vec<usize>>,
    pub vertex_cut_of_product: bool,
}

pub fn invariant_report(p: &DualPolytope, opts: &BettiOptions) -> Result<InvariantReport, Error> {
    let betti = bigraded_betti(p, opts)?;
    let sigma_value = sigma(p);
    assert_eq!(
        sigma_value,
        betti.sigma(),
        "missing-face and Hochster routes must agree on sigma"
    );
    let profile = if p.n() >= 3 { Some(p.two_face_profile()?) } else { None };
    let triangle_free = profile.as_ref().map(|pr| pr.count(3) == 0);
    let (vc_of_product, _) = crate::classify::is_vertex_cut_of_product(p);
    Ok(InvariantReport {
        m: p.m(),
        n: p.n(),
        f: p.f_vector().0,
        h: p.h_vector().0,
        profile,
        triangle_free,
        flag: p.is_flag(),
        tuple: betti.tuple().ok(),
        sigma: sigma_value,
        frequencies: crate::classify::frequency(p),
        moment_angle: betti.moment_angle(),
        product_of_simplices: crate::classify::is_product_of_simplices(p),
        vertex_cut_of_product: vc_of_product,
        betti,
    })
}

/// Serialized invariant report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantReportJson {
    pub m: usize,
    pub n: usize,
    pub f: Vec<usize>,
    pub h: Vec<i64>,
    pub profile: Option<BTreeMap<String, usize>>,
    pub triangle_free: Option<bool>,
    pub flag: bool,
    pub tuple: Option<Vec<usize>>,
    pub sigma: usize,
    pub frequencies: Vec<usize>,
    pub betti: BettiJson,
    pub product_of_simplices: Option<Vec<usize>>,
    pub vertex_cut_of_product: bool,
}

impl InvariantReport {
    pub fn to_json(&self) -> InvariantReportJson {
        InvariantReportJson {
            m: self.m,
            n: self.n,
            f: self.f.clone(),
            h: self.h.clone(),
            profile: self
                .profile
                .as_ref()
                .map(|p| p.0.iter().map(|(&k, &v)| (k.to_string(), v)).collect()),
            triangle_free: self.triangle_free,
            flag: self.flag,
            tuple: self.tuple.clone(),
            sigma: self.sigma,
            frequencies: self.frequencies.clone(),
            betti: self.betti.to_json(),
            product_of_simplices: self.product_of_simplices.clone(),
            vertex_cut_of_product: self.vertex_cut_of_product,
        }
    }
}
