//! The poset `NC^(m)(W)` of m-divisible noncrossing partitions.
//!
//! An element is a minimal factorization `(w_0; w_1, …, w_m)` of a Coxeter
//! element `c`: `w_0 w_1 ⋯ w_m = c` and `Σ ℓ_T(w_i) = ℓ_T(c)`. The order is
//! `(w_0; w_1, …, w_m) ≤ (u_0; u_1, …, u_m)` iff every `u_i` (`i ≥ 1`) lies on
//! a geodesic from the identity to `w_i` in the Cayley graph `(W, T)`; the
//! rank is `ℓ_T(w_0)`.
//!
//! Enumeration uses left-factor descent: pick `w_0` in the interval `[e, c]`,
//! then factor `w_0⁻¹c` into `m` parts the same way. Intervals are memoized
//! by their top element.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;

use crate::bitmatrix::BitMatrix;
use crate::groups::{ElemId, GroupRealization};
use crate::{NcmError, Result, DEFAULT_MAX_ELEMENTS};

/// One element `(w_0; w_1, …, w_m)` of `NC^(m)(W)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NcTuple {
    pub parts: Vec<ElemId>,
}

impl NcTuple {
    pub fn new(parts: Vec<ElemId>) -> Self {
        NcTuple { parts }
    }

    /// `w_0`, whose absolute length is the rank.
    pub fn head(&self) -> ElemId {
        self.parts[0]
    }

    pub fn m(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn display(&self, group: &GroupRealization) -> String {
        let mut s = String::from("(");
        for (i, p) in self.parts.iter().enumerate() {
            let sep = match i {
                0 => "",
                1 => "; ",
                _ => ", ",
            };
            let _ = write!(s, "{sep}{}", group.element(*p));
        }
        s.push(')');
        s
    }
}

/// `ℓ_T(w) + ℓ_T(w⁻¹δ) = ℓ_T(δ)`: `w` lies on a geodesic from `e` to `δ`.
#[inline]
pub fn below(group: &GroupRealization, delta: ElemId, w: ElemId) -> bool {
    group.length(w) + group.length(group.mul(group.inv(w), delta)) == group.length(delta)
}

/// The interval `[e, δ]` in absolute order, ascending by element index.
pub fn enumerate_interval(group: &GroupRealization, delta: ElemId) -> Vec<ElemId> {
    group.ids().filter(|&w| below(group, delta, w)).collect()
}

struct Factorizer<'g> {
    group: &'g GroupRealization,
    intervals: BTreeMap<ElemId, Vec<ElemId>>,
}

impl Factorizer<'_> {
    fn interval(&mut self, delta: ElemId) -> Vec<ElemId> {
        let group = self.group;
        self.intervals
            .entry(delta)
            .or_insert_with(|| enumerate_interval(group, delta))
            .clone()
    }

    /// All minimal factorizations of `delta` into `parts` factors, each
    /// appended to `prefix` and pushed to `out`.
    fn factor(&mut self, delta: ElemId, parts: usize, prefix: &mut Vec<ElemId>, out: &mut Vec<NcTuple>) {
        if parts == 1 {
            prefix.push(delta);
            out.push(NcTuple::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for w in self.interval(delta) {
            let rest = self.group.mul(self.group.inv(w), delta);
            prefix.push(w);
            self.factor(rest, parts - 1, prefix, out);
            prefix.pop();
        }
    }
}

fn guard_cardinality(group: &GroupRealization, m: usize, max_elements: u64) -> Result<()> {
    let predicted = group.degree_table().cat_integer(m as i64)?;
    if predicted > BigInt::from(max_elements) {
        return Err(NcmError::SizeGuard {
            what: "NC^(m)(W)",
            predicted: predicted.to_string(),
            limit: max_elements,
        });
    }
    Ok(())
}

/// `NC^(m)(W)` for the canonical Coxeter element, sorted lexicographically.
pub fn enumerate_ncm(group: &GroupRealization, m: usize, max_elements: u64) -> Result<Vec<NcTuple>> {
    enumerate_ncm_for(group, group.coxeter_element(), m, max_elements)
}

/// `NC^(m)(W)` for an arbitrary Coxeter element `c`.
pub fn enumerate_ncm_for(
    group: &GroupRealization,
    coxeter: ElemId,
    m: usize,
    max_elements: u64,
) -> Result<Vec<NcTuple>> {
    if m == 0 {
        return Err(NcmError::Usage("m must be a positive integer".into()));
    }
    guard_cardinality(group, m, max_elements)?;
    let mut f = Factorizer {
        group,
        intervals: BTreeMap::new(),
    };
    let mut out = Vec::new();
    f.factor(coxeter, m + 1, &mut Vec::with_capacity(m + 1), &mut out);
    out.sort();
    Ok(out)
}

/// `pi ≤ sigma` in `NC^(m)(W)`.
pub fn le(group: &GroupRealization, pi: &NcTuple, sigma: &NcTuple) -> Result<bool> {
    if pi.parts.len() != sigma.parts.len() || pi.parts.is_empty() {
        return Err(NcmError::Usage(format!(
            "tuples of different shapes: {} and {} parts",
            pi.parts.len(),
            sigma.parts.len()
        )));
    }
    Ok(le_unchecked(group, pi, sigma))
}

#[inline]
fn le_unchecked(group: &GroupRealization, pi: &NcTuple, sigma: &NcTuple) -> bool {
    pi.parts[1..]
        .iter()
        .zip(&sigma.parts[1..])
        .all(|(&w, &u)| below(group, w, u))
}

/// `NC^(m)(W)` with its order relation stored as a dense bit matrix.
#[derive(Debug, Clone)]
pub struct DivisiblePoset<'g> {
    group: &'g GroupRealization,
    coxeter: ElemId,
    m: usize,
    elements: Vec<NcTuple>,
    ranks: Vec<u32>,
    /// `up[i][j]` iff `elements[i] ≤ elements[j]`.
    up: BitMatrix,
    max_index: usize,
    min_indices: Vec<usize>,
}

/// Enumerates and verifies `NC^(m)(W)` for the canonical Coxeter element.
pub fn build_poset(group: &GroupRealization, m: usize) -> Result<DivisiblePoset<'_>> {
    DivisiblePoset::build(group, group.coxeter_element(), m, DEFAULT_MAX_ELEMENTS)
}

/// Removes the maximum and all minimal elements.
pub fn truncate(poset: &DivisiblePoset<'_>) -> TruncatedPoset {
    poset.truncate()
}

impl<'g> DivisiblePoset<'g> {
    pub fn build(group: &'g GroupRealization, coxeter: ElemId, m: usize, max_elements: u64) -> Result<Self> {
        let elements = enumerate_ncm_for(group, coxeter, m, max_elements)?;
        let n = elements.len();
        let mut up = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                if le_unchecked(group, &elements[i], &elements[j]) {
                    up.set(i, j);
                }
            }
        }
        let poset = Self::assemble(group, coxeter, m, elements, up)?;
        poset.verify()?;
        Ok(poset)
    }

    /// Rebuilds a poset from its elements and cover relations, taking the
    /// reflexive-transitive closure of the covers. The result is checked
    /// against the defining order relation and all build-time invariants.
    pub fn from_covers(
        group: &'g GroupRealization,
        coxeter: ElemId,
        m: usize,
        elements: Vec<NcTuple>,
        covers: &[(usize, usize)],
    ) -> Result<Self> {
        let n = elements.len();
        if elements.iter().any(|t| t.parts.len() != m + 1) {
            return Err(NcmError::Usage(format!("every tuple must have {} parts", m + 1)));
        }
        if !elements.windows(2).all(|w| w[0] < w[1]) {
            return Err(NcmError::Usage("elements must be strictly sorted".into()));
        }
        let mut upper: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(i, j) in covers {
            if i >= n || j >= n {
                return Err(NcmError::Usage(format!("cover ({i}, {j}) out of range")));
            }
            upper[i].push(j);
        }
        let ranks: Vec<u32> = elements.iter().map(|t| group.length(t.head())).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| core::cmp::Reverse(ranks[i]));
        let mut up = BitMatrix::new(n);
        for &i in &order {
            up.set(i, i);
            for &j in &upper[i] {
                if ranks[j] <= ranks[i] {
                    return Err(NcmError::Consistency(format!(
                        "cover ({i}, {j}) does not increase rank"
                    )));
                }
                up.union_rows(i, j);
            }
        }
        for i in 0..n {
            for j in 0..n {
                if up.get(i, j) != le_unchecked(group, &elements[i], &elements[j]) {
                    return Err(NcmError::Consistency(format!(
                        "closure of covers disagrees with the order relation at ({i}, {j})"
                    )));
                }
            }
        }
        let poset = Self::assemble(group, coxeter, m, elements, up)?;
        poset.verify()?;
        Ok(poset)
    }

    fn assemble(
        group: &'g GroupRealization,
        coxeter: ElemId,
        m: usize,
        elements: Vec<NcTuple>,
        up: BitMatrix,
    ) -> Result<Self> {
        let ranks: Vec<u32> = elements.iter().map(|t| group.length(t.head())).collect();
        let mut top = vec![coxeter];
        top.resize(m + 1, group.identity());
        let top = NcTuple::new(top);
        let max_index = elements
            .binary_search(&top)
            .map_err(|_| NcmError::Consistency("(c; e, …, e) was not enumerated".into()))?;
        let min_indices = (0..elements.len()).filter(|&i| ranks[i] == 0).collect();
        Ok(DivisiblePoset {
            group,
            coxeter,
            m,
            elements,
            ranks,
            up,
            max_index,
            min_indices,
        })
    }

    /// Checks every structural invariant. A failure means a bug, never bad
    /// input.
    pub fn verify(&self) -> Result<()> {
        let g = self.group;
        let n = self.len();
        let rank_n = g.rank() as u32;
        let fail = |msg: String| {
            Err(NcmError::Consistency(format!(
                "{} m={}: {msg}",
                g.spec(),
                self.m
            )))
        };
        for (i, t) in self.elements.iter().enumerate() {
            if g.product(&t.parts) != self.coxeter {
                return fail(format!("tuple {i} does not multiply to c"));
            }
            let total: u32 = t.parts.iter().map(|&w| g.length(w)).sum();
            if total != rank_n {
                return fail(format!("tuple {i} has length sum {total}"));
            }
        }
        let down = self.up.transpose();
        for i in 0..n {
            if !self.up.get(i, i) {
                return fail(format!("not reflexive at {i}"));
            }
            for j in self.up.ones(i) {
                if j == i {
                    continue;
                }
                if self.up.get(j, i) {
                    return fail(format!("not antisymmetric at ({i}, {j})"));
                }
                if !self.up.row_subset(j, i) {
                    return fail(format!("not transitive through ({i}, {j})"));
                }
                if self.ranks[j] <= self.ranks[i] {
                    return fail(format!("rank not strictly monotone at ({i}, {j})"));
                }
                // cover iff nothing strictly between
                let is_cover = self.up_down_overlap(&down, i, j) == 2;
                if is_cover && self.ranks[j] != self.ranks[i] + 1 {
                    return fail(format!("cover ({i}, {j}) skips a rank"));
                }
            }
        }
        let maximal: Vec<usize> = (0..n).filter(|&i| self.up.row_count(i) == 1).collect();
        if maximal != [self.max_index] {
            return fail(format!("maximal elements {maximal:?}"));
        }
        if self.ranks[self.max_index] != rank_n {
            return fail("maximum does not have rank n".into());
        }
        let minimal: Vec<usize> = (0..n).filter(|&i| down.row_count(i) == 1).collect();
        if minimal != self.min_indices {
            return fail("minimal elements are not exactly the rank-0 elements".into());
        }
        let table = g.degree_table();
        if BigInt::from(n) != table.cat_integer(self.m as i64)? {
            return fail(format!("|P| = {n} differs from Cat^(m)"));
        }
        if BigInt::from(self.min_indices.len()) != table.cat_integer(self.m as i64 - 1)? {
            return fail(format!("{} minimal elements, expected Cat^(m-1)", self.min_indices.len()));
        }
        Ok(())
    }

    fn up_down_overlap(&self, down: &BitMatrix, i: usize, j: usize) -> usize {
        self.up
            .row(i)
            .iter()
            .zip(down.row(j))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn group(&self) -> &'g GroupRealization {
        self.group
    }

    pub fn coxeter(&self) -> ElemId {
        self.coxeter
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Rank `n` of the group, which is also the rank of the maximum.
    pub fn group_rank(&self) -> usize {
        self.group.rank()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[NcTuple] {
        &self.elements
    }

    pub fn tuple(&self, i: usize) -> &NcTuple {
        &self.elements[i]
    }

    pub fn index_of(&self, t: &NcTuple) -> Option<usize> {
        self.elements.binary_search(t).ok()
    }

    pub fn rank(&self, i: usize) -> u32 {
        self.ranks[i]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up.get(i, j)
    }

    /// `relation().get(i, j)` iff element `i ≤` element `j`.
    pub fn relation(&self) -> &BitMatrix {
        &self.up
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    pub fn min_indices(&self) -> &[usize] {
        &self.min_indices
    }

    /// Number of elements of each rank `0..=n`.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.group_rank() + 1];
        for &r in &self.ranks {
            sizes[r as usize] += 1;
        }
        sizes
    }

    /// Cover relations `(i, j)` with `i ⋖ j`, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for i in 0..self.len() {
            for j in self.up.ones(i) {
                if self.ranks[j] == self.ranks[i] + 1 {
                    covers.push((i, j));
                }
            }
        }
        covers
    }

    /// Order test on arbitrary tuples over the same group and `m`.
    pub fn le_tuples(&self, pi: &NcTuple, sigma: &NcTuple) -> Result<bool> {
        if pi.parts.len() != self.m + 1 {
            return Err(NcmError::Usage(format!(
                "tuple has {} parts, poset has m = {}",
                pi.parts.len(),
                self.m
            )));
        }
        le(self.group, pi, sigma)
    }

    pub fn truncate(&self) -> TruncatedPoset {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| i != self.max_index && self.ranks[i] != 0)
            .collect();
        TruncatedPoset {
            rank: self.group_rank(),
            ranks: keep.iter().map(|&i| self.ranks[i]).collect(),
            up: self.up.restrict(&keep),
            parent_indices: keep,
        }
    }
}

/// `NC^(m)(W)` with the maximum and the minimal elements removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPoset {
    rank: usize,
    parent_indices: Vec<usize>,
    ranks: Vec<u32>,
    up: BitMatrix,
}

impl TruncatedPoset {
    /// Builds a truncated poset from raw parts; `up` must be a partial order
    /// compatible with `ranks`.
    pub fn from_parts(rank: usize, ranks: Vec<u32>, up: BitMatrix) -> Self {
        TruncatedPoset {
            rank,
            parent_indices: (0..ranks.len()).collect(),
            ranks,
            up,
        }
    }

    /// Rank `n` of the ambient group.
    pub fn group_rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Index of each vertex in the untruncated poset.
    pub fn parent_indices(&self) -> &[usize] {
        &self.parent_indices
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up.get(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.up.get(i, j)
    }

    pub fn relation(&self) -> &BitMatrix {
        &self.up
    }

    /// Ordered pairs `i < j` of distinct comparable elements.
    pub fn comparable_pairs(&self) -> usize {
        self.up.count() - self.len()
    }

    /// Indices ordered by rank, ties by index. Every chain is increasing in
    /// this order.
    pub fn rank_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.ranks[i]);
        order
    }

    /// Strict upper neighbours of `i` (all `j > i`, not only covers).
    pub fn strictly_above(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.up.ones(i).filter(move |&j| j != i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, Element, GroupSpec};

    fn group(label: &str) -> GroupRealization {
        build_group(label.parse::<GroupSpec>().unwrap()).unwrap()
    }

    #[test]
    fn below_examples() {
        let g = group("A2");
        let c = g.coxeter_element();
        assert!(below(&g, c, g.identity()));
        assert!(below(&g, c, c));
        let other = g.inv(c);
        assert_ne!(other, c);
        assert_eq!(g.element_order(other), 3);
        assert!(!below(&g, c, other));
    }

    #[test]
    fn interval_sizes() {
        let g = group("A2");
        assert_eq!(enumerate_interval(&g, g.coxeter_element()).len(), 5);
        let g = group("A3");
        assert_eq!(enumerate_interval(&g, g.coxeter_element()).len(), 14);
        for &t in g.reflections() {
            assert_eq!(enumerate_interval(&g, t), vec![g.identity().min(t), g.identity().max(t)]);
        }
    }

    #[test]
    fn interval_matches_brute_force_scan() {
        let g = group("B3");
        let c = g.coxeter_element();
        let scan: Vec<ElemId> = g
            .ids()
            .filter(|&w| g.length(w) + g.length(g.mul(g.inv(w), c)) == g.length(c))
            .collect();
        assert_eq!(enumerate_interval(&g, c), scan);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ncm(&group("A2"), 1, 1000).unwrap().len(), 5);
        assert_eq!(enumerate_ncm(&group("A2"), 2, 1000).unwrap().len(), 12);
        assert_eq!(enumerate_ncm(&group("B2"), 1, 1000).unwrap().len(), 6);
    }

    #[test]
    fn enumeration_matches_brute_force_over_pairs() {
        // every (w0, w1, w2) with w0 w1 w2 = c and lengths summing to n
        for label in ["A2", "B2", "I2(5)"] {
            let g = group(label);
            let c = g.coxeter_element();
            let mut brute = Vec::new();
            for a in g.ids() {
                for b in g.ids() {
                    let rest = g.mul(g.inv(g.mul(a, b)), c);
                    if g.length(a) + g.length(b) + g.length(rest) == g.rank() as u32 {
                        brute.push(NcTuple::new(vec![a, b, rest]));
                    }
                }
            }
            brute.sort();
            assert_eq!(enumerate_ncm(&g, 2, 1000).unwrap(), brute, "{label}");
        }
    }

    #[test]
    fn size_guard_names_predicted_cardinality() {
        let g = group("A3");
        let err = enumerate_ncm(&g, 2, 50).unwrap_err();
        match err {
            NcmError::SizeGuard { predicted, limit, .. } => {
                assert_eq!(predicted, "55");
                assert_eq!(limit, 50);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(enumerate_ncm(&g, 0, 50), Err(NcmError::Usage(_))));
    }

    #[test]
    fn order_examples() {
        let g = group("A2");
        let p = build_poset(&g, 1).unwrap();
        let top = p.tuple(p.max_index()).clone();
        assert_eq!(top.parts, vec![g.coxeter_element(), g.identity()]);
        for t in p.elements() {
            assert!(le(&g, t, &top).unwrap());
            assert!(le(&g, t, t).unwrap());
        }
        let comparable = p.relation().count();
        assert_eq!(comparable, 12);
        let short = NcTuple::new(vec![g.identity()]);
        assert!(le(&g, &short, &top).is_err());
        assert!(p.le_tuples(&short, &top).is_err());
    }

    #[test]
    fn rank_sizes_examples() {
        let g = group("A2");
        let p = build_poset(&g, 2).unwrap();
        assert_eq!(p.rank_sizes(), [5, 6, 1]);
        assert_eq!(p.min_indices().len(), 5);
        let g = group("A3");
        assert_eq!(build_poset(&g, 1).unwrap().rank_sizes(), [1, 6, 6, 1]);
        let g = group("A1");
        for m in 1..=4 {
            let p = build_poset(&g, m).unwrap();
            assert_eq!(p.rank_sizes(), [m, 1]);
        }
    }

    #[test]
    fn truncation_examples() {
        let g = group("A2");
        let t = build_poset(&g, 1).unwrap().truncate();
        assert_eq!(t.len(), 3);
        assert_eq!(t.comparable_pairs(), 0);
        let g = group("A3");
        let t = build_poset(&g, 1).unwrap().truncate();
        assert_eq!(t.len(), 12);
        assert_eq!(t.comparable_pairs(), 16);
        let g = group("A1");
        let t = build_poset(&g, 1).unwrap().truncate();
        assert!(t.is_empty());
    }

    #[test]
    fn truncated_ranks_are_interior() {
        for (label, m) in [("A3", 2), ("B3", 1), ("H3", 1), ("I2(5)", 2)] {
            let g = group(label);
            let t = build_poset(&g, m).unwrap().truncate();
            let n = g.rank() as u32;
            let mut seen: Vec<u32> = t.ranks().to_vec();
            seen.sort();
            seen.dedup();
            assert_eq!(seen, (1..n).collect::<Vec<_>>(), "{label}");
        }
    }

    #[test]
    fn head_condition_follows_from_the_others() {
        for (label, m) in [("A3", 2), ("B3", 1), ("H3", 1)] {
            let g = group(label);
            let p = build_poset(&g, m).unwrap();
            for i in 0..p.len() {
                for j in p.relation().ones(i) {
                    // w_0 lies below u_0
                    assert!(below(&g, p.tuple(j).head(), p.tuple(i).head()));
                }
            }
        }
    }

    #[test]
    fn m1_projection_is_the_interval() {
        for label in ["A3", "B3", "D4", "H3"] {
            let g = group(label);
            let p = build_poset(&g, 1).unwrap();
            let mut heads: Vec<ElemId> = p.elements().iter().map(|t| t.head()).collect();
            heads.sort();
            assert_eq!(heads, enumerate_interval(&g, g.coxeter_element()));
            // order preserving: pi ≤ sigma iff head(pi) lies below head(sigma)
            for i in 0..p.len() {
                for j in 0..p.len() {
                    let (a, b) = (p.tuple(i).head(), p.tuple(j).head());
                    assert_eq!(p.leq(i, j), below(&g, b, a), "{label}");
                }
            }
        }
    }

    #[test]
    fn cover_roundtrip() {
        let g = group("B3");
        let p = build_poset(&g, 2).unwrap();
        let covers = p.cover_pairs();
        let q = DivisiblePoset::from_covers(&g, p.coxeter(), 2, p.elements().to_vec(), &covers).unwrap();
        assert_eq!(q.relation(), p.relation());
        // dropping a cover breaks the closure
        let broken = &covers[1..];
        assert!(DivisiblePoset::from_covers(&g, p.coxeter(), 2, p.elements().to_vec(), broken).is_err());
    }

    #[test]
    fn tuple_display() {
        let g = group("A2");
        let p = build_poset(&g, 1).unwrap();
        assert_eq!(p.tuple(p.max_index()).display(&g), "([3,1,2]; [1,2,3])");
        assert!(matches!(g.element(g.identity()), Element::Perm(_)));
    }
}
