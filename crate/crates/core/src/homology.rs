//! Reduced integral homology of order complexes.
//!
//! The chain complex is augmented by `C_{-1} = Z`, so the empty complex has
//! `H̃_{-1} = Z` and a point has no reduced homology at all.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::chains::f_vector;
use crate::ncposet::TruncatedPoset;
use crate::snf::invariant_factors;
use crate::{NcmError, Result};

/// Simplices of an order complex, grouped by dimension. Each simplex is the
/// ascending list of its vertex indices; each dimension is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplexData {
    pub vertex_count: usize,
    pub simplices: Vec<Vec<Vec<u32>>>,
}

impl SimplicialComplexData {
    /// Top dimension, or `-1` for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.simplices.len() as i64 - 1
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }
}

/// Order complex of a truncated poset. Fails with a size guard when the
/// total number of chains exceeds `max_simplices`.
pub fn order_complex(tp: &TruncatedPoset, max_simplices: u64) -> Result<SimplicialComplexData> {
    let total: BigUint = f_vector(tp).iter().sum();
    if total > BigUint::from(max_simplices) {
        return Err(NcmError::SizeGuard {
            what: "order complex",
            predicted: total.to_string(),
            limit: max_simplices,
        });
    }
    let mut simplices: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn extend(tp: &TruncatedPoset, stack: &mut Vec<u32>, out: &mut Vec<Vec<Vec<u32>>>) {
        let d = stack.len() - 1;
        if out.len() <= d {
            out.push(Vec::new());
        }
        let mut s = stack.clone();
        s.sort_unstable();
        out[d].push(s);
        let top = *stack.last().expect("non-empty chain") as usize;
        let above: Vec<usize> = tp.strictly_above(top).collect();
        for v in above {
            stack.push(v as u32);
            extend(tp, stack, out);
            stack.pop();
        }
    }
    for v in 0..tp.len() {
        stack.push(v as u32);
        extend(tp, &mut stack, &mut simplices);
        stack.pop();
    }
    for level in simplices.iter_mut() {
        level.sort_unstable();
    }
    Ok(SimplicialComplexData {
        vertex_count: tp.len(),
        simplices,
    })
}

/// Sparse integer boundary map `∂_dim : C_dim → C_{dim-1}` as
/// `(row, column, value)` triplets; rows index `(dim-1)`-simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub dim: usize,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

/// Boundary maps `∂_0, …, ∂_top`; `∂_0` is the augmentation onto `C_{-1} = Z`.
pub fn boundary_matrices(k: &SimplicialComplexData) -> Vec<BoundaryMatrix> {
    let vertices = k.simplices.first().map_or(0, Vec::len);
    let mut out = vec![BoundaryMatrix {
        dim: 0,
        rows: 1,
        cols: vertices,
        entries: (0..vertices).map(|j| (0, j, 1)).collect(),
    }];
    for d in 1..k.simplices.len() {
        let faces = &k.simplices[d - 1];
        let mut entries = Vec::new();
        for (j, s) in k.simplices[d].iter().enumerate() {
            for omit in 0..s.len() {
                let face: Vec<u32> = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != omit)
                    .map(|(_, &v)| v)
                    .collect();
                let row = faces.binary_search(&face).expect("faces of a chain are chains");
                entries.push((row, j, if omit % 2 == 0 { 1 } else { -1 }));
            }
        }
        entries.sort_unstable();
        out.push(BoundaryMatrix {
            dim: d,
            rows: faces.len(),
            cols: k.simplices[d].len(),
            entries,
        });
    }
    out
}

/// Reduced homology: free ranks and torsion coefficients by dimension.
/// Only dimensions with non-trivial groups appear.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyResult {
    pub betti: BTreeMap<i64, usize>,
    pub torsion: BTreeMap<i64, Vec<BigInt>>,
}

impl HomologyResult {
    pub fn betti(&self, d: i64) -> usize {
        self.betti.get(&d).copied().unwrap_or(0)
    }

    /// `Σ (-1)^d β̃_d`
    pub fn euler(&self) -> BigInt {
        self.betti
            .iter()
            .map(|(&d, &b)| {
                let b = BigInt::from(b);
                if d.rem_euclid(2) == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

pub fn homology(k: &SimplicialComplexData) -> HomologyResult {
    let maps = boundary_matrices(k);
    let factors: Vec<Vec<BigInt>> = maps
        .iter()
        .map(|b| invariant_factors(b.rows, b.cols, &b.entries))
        .collect();
    let rank = |d: usize| factors.get(d).map_or(0, Vec::len);
    let mut result = HomologyResult::default();
    // dimension -1
    let b = 1 - rank(0);
    if b > 0 {
        result.betti.insert(-1, b);
    }
    for d in 0..k.simplices.len() {
        let b = k.simplices[d].len() - rank(d) - rank(d + 1);
        if b > 0 {
            result.betti.insert(d as i64, b);
        }
        if let Some(f) = factors.get(d + 1) {
            let t: Vec<BigInt> = f.iter().filter(|x| !x.is_one()).cloned().collect();
            if !t.is_empty() {
                result.torsion.insert(d as i64, t);
            }
        }
    }
    result
}

/// Reduced homology of the order complex of `tp`.
pub fn poset_homology(tp: &TruncatedPoset, max_simplices: u64) -> Result<HomologyResult> {
    Ok(homology(&order_complex(tp, max_simplices)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitmatrix::BitMatrix;
    use crate::chains::euler_reduced;
    use crate::groups::{build_group, GroupSpec};
    use crate::ncposet::build_poset;
    use crate::DEFAULT_MAX_SIMPLICES;

    fn truncated(label: &str, m: usize) -> TruncatedPoset {
        let g = build_group(label.parse::<GroupSpec>().unwrap()).unwrap();
        let p = build_poset(&g, m).unwrap();
        p.truncate()
    }

    fn antichain(n: usize) -> TruncatedPoset {
        let mut up = BitMatrix::new(n);
        for i in 0..n {
            up.set(i, i);
        }
        TruncatedPoset::from_parts(1, vec![1; n], up)
    }

    #[test]
    fn a2_is_two_points() {
        let h = poset_homology(&truncated("A2", 1), DEFAULT_MAX_SIMPLICES).unwrap();
        assert_eq!(h.betti, BTreeMap::from([(0, 2)]));
        assert!(h.is_torsion_free());
    }

    #[test]
    fn a3_is_wedge_of_five_circles() {
        let tp = truncated("A3", 1);
        let k = order_complex(&tp, DEFAULT_MAX_SIMPLICES).unwrap();
        let maps = boundary_matrices(&k);
        assert_eq!((maps[1].rows, maps[1].cols), (12, 16));
        let h = homology(&k);
        assert_eq!(h.betti, BTreeMap::from([(1, 5)]));
        assert_eq!(h.euler(), euler_reduced(&tp));
    }

    #[test]
    fn point_and_empty() {
        let h = poset_homology(&antichain(1), 10).unwrap();
        assert!(h.betti.is_empty());
        let h = poset_homology(&antichain(0), 10).unwrap();
        assert_eq!(h.betti, BTreeMap::from([(-1, 1)]));
        assert_eq!(h.euler(), BigInt::from(-1));
        let h = poset_homology(&antichain(4), 10).unwrap();
        assert_eq!(h.betti(0), 3);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let k = order_complex(&truncated("A3", 2), DEFAULT_MAX_SIMPLICES).unwrap();
        let maps = boundary_matrices(&k);
        for w in maps.windows(2) {
            let (lo, hi) = (&w[0], &w[1]);
            let mut prod: BTreeMap<(usize, usize), i64> = BTreeMap::new();
            for &(r, c, v) in &hi.entries {
                for &(r2, c2, v2) in lo.entries.iter().filter(|e| e.1 == r) {
                    let _ = c2;
                    *prod.entry((r2, c)).or_default() += v2 * v;
                }
            }
            assert!(prod.values().all(|&x| x == 0), "dim {}", hi.dim);
        }
    }

    #[test]
    fn size_guard() {
        let err = order_complex(&truncated("A3", 1), 20).unwrap_err();
        assert!(matches!(err, NcmError::SizeGuard { limit: 20, .. }));
    }
}
