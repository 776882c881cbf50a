//! Exact reduced simplicial homology dimensions over the rationals, via
//! integer boundary matrices and fraction-free rank computation.
//!
//! All arithmetic is exact. Ranks are computed by Bareiss elimination with
//! deterministic pivoting; a fixed-width fast path falls back to
//! arbitrary-precision integers on overflow, so results never depend on the
//! path taken.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{SimplicialComplex, VertexSet};

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        let data = rows.into_iter().flatten().map(BigInt::from).collect();
        IntegerMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: impl Into<BigInt>) {
        self.data[r * self.cols + c] = value.into();
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn multiply(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = a * other.get(k, c);
                    let cur = out.get(r, c) + add;
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rank_exact(self)
    }
}

/// Rank over Q by fraction-free elimination with exact integers.
pub fn rank_exact(matrix: &IntegerMatrix) -> usize {
    let fits_i128: Option<Vec<i128>> = matrix
        .data
        .iter()
        .map(|x| i128::try_from(x.clone()).ok())
        .collect();
    if let Some(small) = fits_i128 {
        if let Some(rank) = rank_bareiss_i128(matrix.rows, matrix.cols, small) {
            return rank;
        }
    }
    rank_bareiss_bigint(matrix.rows, matrix.cols, matrix.data.clone())
}

pub(crate) fn rank_of_small(rows: usize, cols: usize, data: Vec<i64>) -> usize {
    let wide: Vec<i128> = data.iter().map(|&x| x as i128).collect();
    if let Some(rank) = rank_bareiss_i128(rows, cols, wide) {
        return rank;
    }
    rank_bareiss_bigint(rows, cols, data.into_iter().map(BigInt::from).collect())
}

/// Bareiss elimination over i128; `None` on overflow. Pivot selection scans
/// columns left to right and takes the first nonzero entry in row order.
fn rank_bareiss_i128(rows: usize, cols: usize, mut a: Vec<i128>) -> Option<usize> {
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot) = (row..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if pivot != row {
            for c in 0..cols {
                a.swap(row * cols + c, pivot * cols + c);
            }
        }
        let pv = a[row * cols + col];
        for r in row + 1..rows {
            let head = a[r * cols + col];
            for c in col + 1..cols {
                let x = a[r * cols + c].checked_mul(pv)?;
                let y = a[row * cols + c].checked_mul(head)?;
                a[r * cols + c] = x.checked_sub(y)? / prev;
            }
            a[r * cols + col] = 0;
        }
        prev = pv;
        row += 1;
        rank += 1;
    }
    Some(rank)
}

fn rank_bareiss_bigint(rows: usize, cols: usize, mut a: Vec<BigInt>) -> usize {
    let mut rank = 0usize;
    let mut prev = BigInt::from(1);
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot) = (row..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        if pivot != row {
            for c in 0..cols {
                a.swap(row * cols + c, pivot * cols + c);
            }
        }
        let pv = a[row * cols + col].clone();
        for r in row + 1..rows {
            let head = a[r * cols + col].clone();
            for c in col + 1..cols {
                let x = &a[r * cols + c] * &pv - &a[row * cols + c] * &head;
                a[r * cols + c] = x / &prev;
            }
            a[r * cols + col] = BigInt::zero();
        }
        prev = pv;
        row += 1;
        rank += 1;
    }
    rank
}

/// The k-th boundary matrix of the augmented chain complex, with faces in
/// each dimension ordered lexicographically. For k = 0 this is the
/// augmentation map to the empty face: a 1 × f_0 all-ones matrix.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> IntegerMatrix {
    let faces = complex.all_faces();
    assert!(
        (k as isize) <= complex.dim(),
        "boundary_matrix: k = {k} exceeds dim = {}",
        complex.dim()
    );
    if k == 0 {
        let f0 = faces.first().map_or(0, |f| f.len());
        let mut m = IntegerMatrix::zero(1, f0);
        for c in 0..f0 {
            m.set(0, c, 1);
        }
        return m;
    }
    let rows_faces = &faces[k - 1];
    let cols_faces = &faces[k];
    let row_index: std::collections::HashMap<&VertexSet, usize> =
        rows_faces.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = IntegerMatrix::zero(rows_faces.len(), cols_faces.len());
    for (c, face) in cols_faces.iter().enumerate() {
        for (i, v) in face.iter().enumerate() {
            let sub = face.without(v);
            let r = row_index[&sub];
            let sign = if i % 2 == 0 { 1 } else { -1 };
            m.set(r, c, sign);
        }
    }
    m
}

/// Reduced homology dimensions, indexed from degree -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyDims {
    dims: Vec<usize>, // dims[0] is degree -1
}

impl HomologyDims {
    pub fn dim_at(&self, k: isize) -> usize {
        let idx = k + 1;
        if idx < 0 {
            return 0;
        }
        self.dims.get(idx as usize).copied().unwrap_or(0)
    }

    /// Degrees -1..=dim with their dimensions (zeros included).
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims.iter().enumerate().map(|(i, &d)| (i as isize - 1, d))
    }

    pub fn reduced_euler(&self) -> isize {
        self.iter()
            .filter(|(k, _)| *k >= 0)
            .map(|(k, d)| if k % 2 == 0 { d as isize } else { -(d as isize) })
            .sum()
    }
}

/// Reduced homology dimensions over Q of the augmented chain complex.
/// The empty complex has dim H̃_{-1} = 1; any nonempty complex has 0 there.
pub fn reduced_homology_dims(complex: &SimplicialComplex) -> HomologyDims {
    let d = complex.dim();
    if d < 0 {
        return HomologyDims { dims: vec![1] };
    }
    let d = d as usize;
    let counts = complex.faces_by_dimension();
    // ranks[k] = rank of ∂_k for k = 0..=d; ∂_{d+1} = 0
    let ranks: Vec<usize> = (0..=d)
        .map(|k| boundary_matrix(complex, k).rank())
        .chain(std::iter::once(0))
        .collect();
    let mut dims = vec![0usize; d + 2];
    dims[0] = 1 - ranks[0]; // degree -1
    for k in 0..=d {
        dims[k + 1] = counts[k] - ranks[k] - ranks[k + 1];
    }
    HomologyDims { dims }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::test_fixtures::*;

    #[test]
    fn rank_basics() {
        assert_eq!(IntegerMatrix::zero(3, 4).rank(), 0);
        let mut id = IntegerMatrix::zero(4, 4);
        for i in 0..4 {
            id.set(i, i, 1);
        }
        assert_eq!(id.rank(), 4);
        assert_eq!(IntegerMatrix::from_rows(vec![vec![2, 4], vec![1, 2]]).rank(), 1);
    }

    #[test]
    fn rank_fallback_matches_bigint() {
        // entries large enough that the i128 path overflows mid-elimination
        let big = i64::MAX / 2;
        let m = IntegerMatrix::from_rows(vec![
            vec![big, big - 1, 1],
            vec![big - 1, big, 2],
            vec![1, 2, 0],
        ]);
        assert_eq!(m.rank(), rank_bareiss_bigint(m.rows, m.cols, m.data.clone()));
    }

    #[test]
    fn boundary_examples() {
        let m = boundary_matrix(&cycle(3), 1);
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert_eq!(m.rank(), 2);

        let m = boundary_matrix(&cycle(3), 0);
        assert_eq!((m.rows(), m.cols()), (1, 3));
        assert_eq!(m.rank(), 1);

        let m = boundary_matrix(&boundary_delta3(), 2);
        assert_eq!((m.rows(), m.cols()), (6, 4));
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for k in [octahedron(), boundary_delta3(), cycle(5)] {
            for deg in 1..=(k.dim() as usize) {
                let outer = boundary_matrix(&k, deg - 1);
                let inner = boundary_matrix(&k, deg);
                assert!(outer.multiply(&inner).is_zero());
            }
        }
    }

    #[test]
    fn homology_dims_cases() {
        let empty = crate::complex::SimplicialComplex::empty();
        assert_eq!(reduced_homology_dims(&empty).dim_at(-1), 1);

        let two_points = complex(&[&[0], &[1]], 2);
        let dims = reduced_homology_dims(&two_points);
        assert_eq!(dims.dim_at(-1), 0);
        assert_eq!(dims.dim_at(0), 1);

        let dims = reduced_homology_dims(&cycle(5));
        assert_eq!(dims.dim_at(0), 0);
        assert_eq!(dims.dim_at(1), 1);

        // spheres
        let dims = reduced_homology_dims(&octahedron());
        assert_eq!(dims.dim_at(0), 0);
        assert_eq!(dims.dim_at(1), 0);
        assert_eq!(dims.dim_at(2), 1);
    }

    #[test]
    fn reduced_euler_consistent_with_face_counts() {
        for k in [octahedron(), boundary_delta3(), cycle(6), path(4)] {
            let dims = reduced_homology_dims(&k);
            let chi: isize = k.euler_characteristic();
            assert_eq!(dims.reduced_euler(), chi - 1);
        }
    }
}
