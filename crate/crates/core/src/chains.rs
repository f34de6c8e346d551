//! Chain statistics of `NC^(m)(W)`.
//!
//! `R_W(s_1, …, s_l)` takes `l` arguments but counts multichains with `l - 1`
//! elements: `π_1 ≤ ⋯ ≤ π_{l-1}` with `rk(π_i) = s_1 + ⋯ + s_i`. The last
//! argument only closes the composition to `n`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::formulas::{binomial, DegreeTable};
use crate::ncposet::{DivisiblePoset, TruncatedPoset};
use crate::{NcmError, Result};

/// Counts of strictly increasing chains in the truncated poset: entry `d`
/// is the number of chains with `d + 1` elements.
pub fn f_vector(tp: &TruncatedPoset) -> Vec<BigUint> {
    let n = tp.len();
    let mut out = Vec::new();
    let mut level: Vec<BigUint> = vec![BigUint::one(); n];
    while level.iter().any(|c| !c.is_zero()) {
        out.push(level.iter().sum());
        let mut next = vec![BigUint::zero(); n];
        for (u, count) in level.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for v in tp.strictly_above(u) {
                next[v] += count;
            }
        }
        level = next;
    }
    out
}

/// `Σ_d (-1)^d f_d - 1`, the empty chain contributing `-1`.
pub fn euler_from_f_vector(f: &[BigUint]) -> BigInt {
    let mut chi = -BigInt::one();
    for (d, fd) in f.iter().enumerate() {
        let fd = BigInt::from(fd.clone());
        if d % 2 == 0 {
            chi += fd;
        } else {
            chi -= fd;
        }
    }
    chi
}

/// Reduced Euler characteristic of the order complex of the truncated poset.
pub fn euler_reduced(tp: &TruncatedPoset) -> BigInt {
    euler_from_f_vector(&f_vector(tp))
}

/// All weak compositions of `total` into exactly `parts` non-negative parts,
/// in lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Compositions of `total` into `parts` positive parts, lexicographic.
pub fn positive_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    compositions(total, parts)
        .into_iter()
        .filter(|c| c.iter().all(|&s| s > 0))
        .collect()
}

/// `R_W(s_1, …, s_l)`.
pub fn rank_selected_count(poset: &DivisiblePoset<'_>, s: &[usize]) -> Result<BigUint> {
    let n = poset.group_rank();
    let total: usize = s.iter().sum();
    if s.is_empty() || total != n {
        return Err(NcmError::Usage(format!(
            "composition {s:?} must be non-empty and sum to n = {n}"
        )));
    }
    let targets: Vec<u32> = s[..s.len() - 1]
        .iter()
        .scan(0usize, |acc, &x| {
            *acc += x;
            Some(*acc as u32)
        })
        .collect();
    let Some((&first, rest)) = targets.split_first() else {
        return Ok(BigUint::one());
    };
    let len = poset.len();
    let ranks = poset.ranks();
    let mut counts: Vec<BigUint> = (0..len)
        .map(|i| if ranks[i] == first { BigUint::one() } else { BigUint::zero() })
        .collect();
    for &r in rest {
        let mut next = vec![BigUint::zero(); len];
        for (x, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for y in poset.relation().ones(x) {
                if ranks[y] == r {
                    next[y] += c;
                }
            }
        }
        counts = next;
    }
    Ok(counts.iter().sum())
}

/// Multichain counts along the zeta transform, starting from `start`.
fn zeta_power_sum(poset: &DivisiblePoset<'_>, start: Vec<BigUint>, l: usize) -> BigUint {
    let len = poset.len();
    let mut v = start;
    for _ in 1..l {
        let mut next = vec![BigUint::zero(); len];
        for (x, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for y in poset.relation().ones(x) {
                next[y] += c;
            }
        }
        v = next;
    }
    v.iter().sum()
}

/// Number of multichains `π_1 ≤ ⋯ ≤ π_l` (1 for `l = 0`).
pub fn multichain_count(poset: &DivisiblePoset<'_>, l: usize) -> BigUint {
    if l == 0 {
        return BigUint::one();
    }
    zeta_power_sum(poset, vec![BigUint::one(); poset.len()], l)
}

/// Number of multichains `π_1 ≤ ⋯ ≤ π_l` with `rk(π_1) = 0` (0 for `l = 0`).
pub fn min_rooted_multichain_count(poset: &DivisiblePoset<'_>, l: usize) -> BigUint {
    if l == 0 {
        return BigUint::zero();
    }
    let start = (0..poset.len())
        .map(|i| {
            if poset.rank(i) == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        })
        .collect();
    zeta_power_sum(poset, start, l)
}

/// `-1 + Σ_{l=2}^{n} (-1)^l Σ_{s_i > 0} R_W(s_1, …, s_l)`.
pub fn euler_from_rank_selected(poset: &DivisiblePoset<'_>) -> Result<BigInt> {
    let n = poset.group_rank();
    let mut chi = -BigInt::one();
    for l in 2..=n {
        let mut sum = BigInt::zero();
        for s in positive_compositions(n, l) {
            sum += BigInt::from(rank_selected_count(poset, &s)?);
        }
        if l % 2 == 0 {
            chi += sum;
        } else {
            chi -= sum;
        }
    }
    Ok(chi)
}

/// Everything the chain module computes for one poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStatistics {
    pub f_vector: Vec<BigUint>,
    pub euler_reduced: BigInt,
    /// `l ↦` number of multichains of length `l` in the full poset.
    pub zeta_values: BTreeMap<usize, BigUint>,
    /// Weak compositions of `n` into at most `n + 1` parts `↦ R_W`.
    pub rank_selected: BTreeMap<Vec<usize>, BigUint>,
}

impl ChainStatistics {
    pub fn compute(poset: &DivisiblePoset<'_>, max_l: usize) -> Result<Self> {
        let f = f_vector(&poset.truncate());
        let euler = euler_from_f_vector(&f);
        let zeta_values = (1..=max_l).map(|l| (l, multichain_count(poset, l))).collect();
        let n = poset.group_rank();
        let mut rank_selected = BTreeMap::new();
        for parts in 1..=n + 1 {
            for s in compositions(n, parts) {
                let count = rank_selected_count(poset, &s)?;
                rank_selected.insert(s, count);
            }
        }
        Ok(ChainStatistics {
            f_vector: f,
            euler_reduced: euler,
            zeta_values,
            rank_selected,
        })
    }
}

/// The successive forms of the closed-form Euler characteristic, each
/// evaluated independently from Fuss-Catalan numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineStages {
    /// Inclusion-exclusion written out over every subset `I ⊆ {1, …, l}` of
    /// vanishing parts, after zero suppression and the multichain counts.
    pub subset_sum: BigRational,
    /// The subsets grouped by size: binomials `C(l-1, j-1)` and `C(l-1, j)`.
    pub grouped: BigRational,
    /// Reindexed by `l = j + k`, with the correction terms for `l < 2`.
    pub reindexed: BigRational,
    /// The sums over `j` collapsed to `C(n, k+1)` and `C(n, k)`.
    pub collapsed: BigRational,
    /// First sum shifted `k → k - 1`, exposing two `n`-th differences.
    pub shifted: BigRational,
    /// The `n`-th differences cancelled: `Cat^(-m-1) - Cat^(-m)`.
    pub cancelled: BigRational,
    /// `(-1)^n (Cat_+^(m) - Cat_+^(m-1))`.
    pub target: BigRational,
}

impl PipelineStages {
    pub fn all(&self) -> [(&'static str, &BigRational); 7] {
        [
            ("subset_sum", &self.subset_sum),
            ("grouped", &self.grouped),
            ("reindexed", &self.reindexed),
            ("collapsed", &self.collapsed),
            ("shifted", &self.shifted),
            ("cancelled", &self.cancelled),
            ("target", &self.target),
        ]
    }
}

fn signed(k: i64, x: BigRational) -> BigRational {
    if k.rem_euclid(2) == 0 {
        x
    } else {
        -x
    }
}

fn brat(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

/// Evaluates every stage of the closed-form derivation for `(D, m)`.
pub fn pipeline_stages(table: &DegreeTable, m: i64) -> PipelineStages {
    let n = table.n() as i64;
    let cat = |k: i64| table.cat(k);
    let one = BigRational::one();

    let mut subset_sum = -one.clone();
    for l in 2..=n {
        let mut inner = BigRational::zero();
        for mask in 0u64..(1 << l) {
            let size = mask.count_ones() as i64;
            let term = if mask & 1 == 1 {
                cat((l - size) * m - 1)
            } else {
                cat((l - size - 1) * m)
            };
            inner += signed(size, term);
        }
        subset_sum += signed(l, inner);
    }

    let mut grouped = -one.clone();
    for l in 2..=n {
        let mut inner = BigRational::zero();
        for j in 1..=l {
            inner += signed(j, brat(binomial(l - 1, j - 1)) * cat((l - j) * m - 1));
        }
        for j in 0..l {
            inner += signed(j, brat(binomial(l - 1, j)) * cat((l - j - 1) * m));
        }
        grouped += signed(l, inner);
    }

    let mut reindexed = -one.clone() - cat(-1) - cat(-m) + cat(0);
    for k in 0..=n {
        let mut inner = BigRational::zero();
        for j in 1..=n - k {
            inner += brat(binomial(j + k - 1, j - 1)) * cat(k * m - 1);
        }
        for j in 0..=n - k {
            inner += brat(binomial(j + k - 1, j)) * cat((k - 1) * m);
        }
        reindexed += signed(k, inner);
    }

    let mut collapsed = -cat(-m);
    for k in 0..=n {
        let inner = brat(binomial(n, k + 1)) * cat(k * m - 1) + brat(binomial(n, k)) * cat((k - 1) * m);
        collapsed += signed(k, inner);
    }

    let mut shifted = -cat(-m) + cat(-m - 1);
    for k in 0..=n {
        let c = brat(binomial(n, k));
        shifted -= signed(k, &c * cat((k - 1) * m - 1));
        shifted += signed(k, c * cat((k - 1) * m));
    }

    let cancelled = cat(-m - 1) - cat(-m);
    let sign = brat(table.sign());
    let target = sign * (table.cat_plus_rational(m) - table.cat_plus_rational(m - 1));

    PipelineStages {
        subset_sum,
        grouped,
        reindexed,
        collapsed,
        shifted,
        cancelled,
        target,
    }
}

/// The reduced Euler characteristic from the degree table alone. Every stage
/// of [`pipeline_stages`] must agree and be an integer.
pub fn euler_closed_form_pipeline(table: &DegreeTable, m: i64) -> Result<BigInt> {
    if m < 1 {
        return Err(NcmError::Usage("m must be a positive integer".into()));
    }
    let stages = pipeline_stages(table, m);
    for (name, value) in stages.all() {
        if value != &stages.target {
            return Err(NcmError::Consistency(format!(
                "{} m={m}: stage {name} = {value}, expected {}",
                table.label, stages.target
            )));
        }
    }
    if !stages.target.is_integer() {
        return Err(NcmError::Consistency(format!(
            "{} m={m}: Euler characteristic {} is not an integer",
            table.label, stages.target
        )));
    }
    Ok(stages.target.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, GroupRealization, GroupSpec};
    use crate::ncposet::build_poset;

    fn group(label: &str) -> GroupRealization {
        build_group(label.parse::<GroupSpec>().unwrap()).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    /// Brute-force list of strict chains in a truncated poset.
    fn brute_chains(tp: &TruncatedPoset) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..tp.len()).map(|i| vec![i]).collect();
        let mut frontier = out.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for c in &frontier {
                let last = *c.last().unwrap();
                for j in 0..tp.len() {
                    if tp.lt(last, j) {
                        let mut d = c.clone();
                        d.push(j);
                        next.push(d);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn f_vector_examples() {
        let g = group("A2");
        let tp = build_poset(&g, 1).unwrap().truncate();
        assert_eq!(f_vector(&tp), [big(3)]);
        assert_eq!(euler_reduced(&tp), BigInt::from(2));
        let g = group("A3");
        let tp = build_poset(&g, 1).unwrap().truncate();
        assert_eq!(f_vector(&tp), [big(12), big(16)]);
        assert_eq!(euler_reduced(&tp), BigInt::from(-5));
        let g = group("A1");
        for m in 1..=3 {
            let tp = build_poset(&g, m).unwrap().truncate();
            assert!(f_vector(&tp).is_empty());
            assert_eq!(euler_reduced(&tp), BigInt::from(-1));
        }
    }

    #[test]
    fn f_vector_matches_brute_force_listing() {
        for (label, m) in [("A3", 2), ("B3", 1), ("H3", 1), ("D4", 1)] {
            let g = group(label);
            let tp = build_poset(&g, m).unwrap().truncate();
            let chains = brute_chains(&tp);
            let mut f = vec![BigUint::zero(); g.rank() - 1];
            for c in chains {
                f[c.len() - 1] += 1u32;
            }
            assert_eq!(f_vector(&tp), f, "{label}");
        }
    }

    #[test]
    fn compositions_are_lexicographic() {
        assert_eq!(
            compositions(2, 2),
            [vec![0, 2], vec![1, 1], vec![2, 0]]
        );
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(positive_compositions(4, 2), [vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(0, 0), [Vec::<usize>::new()]);
        assert!(compositions(1, 0).is_empty());
    }

    #[test]
    fn rank_selected_examples() {
        let g = group("A2");
        let p = build_poset(&g, 1).unwrap();
        assert_eq!(rank_selected_count(&p, &[2]).unwrap(), big(1));
        assert_eq!(rank_selected_count(&p, &[1, 1]).unwrap(), big(3));
        assert_eq!(
            rank_selected_count(&p, &[1, 0, 1]).unwrap(),
            rank_selected_count(&p, &[1, 1]).unwrap()
        );
        assert_eq!(
            rank_selected_count(&p, &[1, 1, 0]).unwrap(),
            rank_selected_count(&p, &[1, 1]).unwrap()
        );
        assert!(matches!(rank_selected_count(&p, &[1, 2]), Err(NcmError::Usage(_))));
        assert!(rank_selected_count(&p, &[]).is_err());
    }

    #[test]
    fn multichain_examples() {
        let g = group("A2");
        let p = build_poset(&g, 1).unwrap();
        assert_eq!(multichain_count(&p, 1), big(5));
        assert_eq!(multichain_count(&p, 2), big(12));
        assert_eq!(multichain_count(&p, 3), big(22));
        assert_eq!(multichain_count(&p, 0), big(1));
        assert_eq!(min_rooted_multichain_count(&p, 1), big(1));
        assert_eq!(min_rooted_multichain_count(&p, 2), big(5));
        let p2 = build_poset(&g, 2).unwrap();
        assert_eq!(min_rooted_multichain_count(&p2, 1), big(5));
    }

    #[test]
    fn multichains_match_brute_force_triples() {
        let g = group("B2");
        let p = build_poset(&g, 2).unwrap();
        let n = p.len();
        let mut count = 0u64;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if p.leq(a, b) && p.leq(b, c) {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(multichain_count(&p, 3), big(count));
    }

    #[test]
    fn pipeline_examples() {
        let t = |s: &str| DegreeTable::parse(s).unwrap();
        assert_eq!(euler_closed_form_pipeline(&t("A2"), 1).unwrap(), BigInt::from(2));
        assert_eq!(euler_closed_form_pipeline(&t("A3"), 1).unwrap(), BigInt::from(-5));
        assert_eq!(euler_closed_form_pipeline(&t("B2"), 2).unwrap(), BigInt::from(7));
        assert_eq!(euler_closed_form_pipeline(&t("A1"), 3).unwrap(), BigInt::from(-1));
        assert!(euler_closed_form_pipeline(&t("A2"), 0).is_err());
    }

    #[test]
    fn pipeline_detects_broken_codegrees() {
        let mut t = DegreeTable::parse("B3").unwrap();
        t.codegrees[1] += 1;
        assert!(matches!(euler_closed_form_pipeline(&t, 1), Err(NcmError::Consistency(_))));
    }

    #[test]
    fn rank_selected_euler_matches_f_vector() {
        for (label, m) in [("A3", 1), ("A3", 2), ("B3", 1), ("H3", 1), ("D4", 1)] {
            let g = group(label);
            let p = build_poset(&g, m).unwrap();
            assert_eq!(
                euler_from_rank_selected(&p).unwrap(),
                euler_reduced(&p.truncate()),
                "{label}"
            );
        }
    }

    #[test]
    fn statistics_bundle() {
        let g = group("A2");
        let p = build_poset(&g, 1).unwrap();
        let s = ChainStatistics::compute(&p, 3).unwrap();
        assert_eq!(s.euler_reduced, BigInt::from(2));
        assert_eq!(s.zeta_values[&3], big(22));
        assert_eq!(s.rank_selected[&vec![1, 1]], big(3));
        assert_eq!(s.rank_selected[&vec![0, 2]], big(1));
        assert_eq!(s.rank_selected.len(), 1 + 3 + 6);
    }
}
