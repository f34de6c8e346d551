//! Invariant factors of integer matrices.
//!
//! Unit pivots are eliminated first on a sparse representation; what is left
//! goes through a dense Smith normal form with smallest-magnitude pivoting.
//! Arithmetic starts on `i64` with overflow checks and restarts on `BigInt`
//! if any operation would overflow.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Debug)]
pub(crate) struct Overflow;

pub(crate) trait SnfInt: Clone + PartialEq + core::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow>;
    fn add(&self, b: &Self) -> Result<Self, Overflow>;
    /// Truncated quotient.
    fn quot(&self, d: &Self) -> Self;
    fn divisible_by(&self, d: &Self) -> bool;
    fn mul(&self, b: &Self) -> Result<Self, Overflow>;
    fn to_abs_bigint(&self) -> BigInt;
}

impl SnfInt for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        q.checked_mul(*b)
            .and_then(|p| self.checked_sub(p))
            .ok_or(Overflow)
    }
    fn add(&self, b: &Self) -> Result<Self, Overflow> {
        self.checked_add(*b).ok_or(Overflow)
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn divisible_by(&self, d: &Self) -> bool {
        self % d == 0
    }
    fn mul(&self, b: &Self) -> Result<Self, Overflow> {
        self.checked_mul(*b).ok_or(Overflow)
    }
    fn to_abs_bigint(&self) -> BigInt {
        BigInt::from(self.unsigned_abs())
    }
}

impl SnfInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        Ok(self - q * b)
    }
    fn add(&self, b: &Self) -> Result<Self, Overflow> {
        Ok(self + b)
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn divisible_by(&self, d: &Self) -> bool {
        self.is_multiple_of(d)
    }
    fn mul(&self, b: &Self) -> Result<Self, Overflow> {
        Ok(self * b)
    }
    fn to_abs_bigint(&self) -> BigInt {
        self.abs()
    }
}

/// Non-zero invariant factors (absolute values, divisibility chain) of the
/// `rows × cols` matrix given by `(row, col, value)` triplets.
pub(crate) fn invariant_factors(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> Vec<BigInt> {
    match invariant_factors_in::<i64>(rows, cols, entries) {
        Ok(v) => v,
        Err(Overflow) => invariant_factors_in::<BigInt>(rows, cols, entries)
            .expect("arbitrary precision does not overflow"),
    }
}

type SparseRow<T> = Vec<(usize, T)>;

fn entry<T: SnfInt>(row: &SparseRow<T>, col: usize) -> Option<&T> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|i| &row[i].1)
}

/// `a - q * b` on sparse rows.
fn row_sub_mul<T: SnfInt>(a: &SparseRow<T>, q: &T, b: &SparseRow<T>) -> Result<SparseRow<T>, Overflow> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|x| x.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|x| x.0).unwrap_or(usize::MAX);
        let (col, val) = if ca < cb {
            i += 1;
            (ca, a[i - 1].1.clone())
        } else if cb < ca {
            j += 1;
            (cb, zero.sub_mul(q, &b[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ca, a[i - 1].1.sub_mul(q, &b[j - 1].1)?)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    Ok(out)
}

fn invariant_factors_in<T: SnfInt>(
    nrows: usize,
    ncols: usize,
    entries: &[(usize, usize, i64)],
) -> Result<Vec<BigInt>, Overflow> {
    let mut rows: Vec<SparseRow<T>> = vec![Vec::new(); nrows];
    for &(r, c, v) in entries {
        if v != 0 {
            rows[r].push((c, T::from_i64(v)));
        }
    }
    for row in rows.iter_mut() {
        row.sort_by_key(|(c, _)| *c);
    }
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].insert(r);
        }
    }

    let mut units = 0usize;
    loop {
        let mut progress = false;
        for c in 0..ncols {
            let pivot_row = col_rows[c]
                .iter()
                .copied()
                .filter(|&r| entry(&rows[r], c).is_some_and(T::is_unit))
                .min_by_key(|&r| rows[r].len());
            let Some(r) = pivot_row else { continue };
            let pivot = entry(&rows[r], c).cloned().expect("pivot present");
            let others: Vec<usize> = col_rows[c].iter().copied().filter(|&x| x != r).collect();
            let pivot_cols: Vec<usize> = rows[r].iter().map(|(cc, _)| *cc).collect();
            for r2 in others {
                let a = entry(&rows[r2], c).cloned().expect("listed in column");
                // pivot is ±1, so a / pivot = a * pivot
                let q = a.mul(&pivot)?;
                let updated = row_sub_mul(&rows[r2], &q, &rows[r])?;
                rows[r2] = updated;
                for &cc in &pivot_cols {
                    if entry(&rows[r2], cc).is_some() {
                        col_rows[cc].insert(r2);
                    } else {
                        col_rows[cc].remove(&r2);
                    }
                }
            }
            for &cc in &pivot_cols {
                col_rows[cc].remove(&r);
            }
            rows[r].clear();
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let live_rows: Vec<usize> = (0..nrows).filter(|&r| !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..ncols).filter(|&c| !col_rows[c].is_empty()).collect();
    let mut factors: Vec<BigInt> = vec![BigInt::from(1); units];
    if !live_rows.is_empty() {
        let mut dense = vec![vec![T::from_i64(0); live_cols.len()]; live_rows.len()];
        for (i, &r) in live_rows.iter().enumerate() {
            for (c, v) in &rows[r] {
                let j = live_cols.binary_search(c).expect("live column");
                dense[i][j] = v.clone();
            }
        }
        factors.extend(dense_snf(dense)?.iter().map(T::to_abs_bigint));
    }
    factors.sort();
    Ok(factors)
}

fn find_min<T: SnfInt>(a: &[Vec<T>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if !x.abs_lt(&a[bi][bj]) => {}
                _ => {
                    best = Some((i, j));
                    if x.is_unit() {
                        return best;
                    }
                }
            }
        }
    }
    best
}

fn dense_snf<T: SnfInt>(mut a: Vec<Vec<T>>) -> Result<Vec<T>, Overflow> {
    let nr = a.len();
    let nc = if nr == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        let Some((pi, pj)) = find_min(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].quot(&a[t][t]);
                for j in t..nc {
                    let v = a[i][j].sub_mul(&q, &a[t][j])?;
                    a[i][j] = v;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..nc {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].quot(&a[t][t]);
                for i in t..nr {
                    let v = a[i][j].sub_mul(&q, &a[i][t])?;
                    a[i][j] = v;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // bring the smallest remainder in row t / column t to the pivot
                let mut best = (t, t);
                for i in t + 1..nr {
                    if !a[i][t].is_zero() && a[i][t].abs_lt(&a[best.0][best.1]) {
                        best = (i, t);
                    }
                }
                for j in t + 1..nc {
                    if !a[t][j].is_zero() && a[t][j].abs_lt(&a[best.0][best.1]) {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                }
                if best.1 != t {
                    for row in a.iter_mut() {
                        row.swap(t, best.1);
                    }
                }
                continue;
            }
            let pivot = a[t][t].clone();
            let offender = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !a[i][j].divisible_by(&pivot)));
            if let Some(i) = offender {
                for j in t..nc {
                    let v = a[t][j].add(&a[i][j])?;
                    a[t][j] = v;
                }
                continue;
            }
            break;
        }
        diag.push(a[t][t].clone());
        t += 1;
    }
    Ok(diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_entries(m: &[&[i64]]) -> (usize, usize, Vec<(usize, usize, i64)>) {
        let mut e = Vec::new();
        for (i, row) in m.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                e.push((i, j, v));
            }
        }
        (m.len(), m[0].len(), e)
    }

    fn factors(m: &[&[i64]]) -> Vec<i64> {
        let (r, c, e) = dense_entries(m);
        invariant_factors(r, c, &e)
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn classic_examples() {
        assert_eq!(factors(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), [2, 6, 12]);
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), [1, 6]);
        assert_eq!(factors(&[&[0, 0], &[0, 0]]), Vec::<i64>::new());
        assert_eq!(factors(&[&[1, 1], &[1, -1]]), [1, 2]);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let f = factors(&[&[big, big - 1], &[big - 1, big]]);
        // det = (2big - 1)
        assert_eq!(f.len(), 2);
        assert_eq!(f[0], 1);
        assert_eq!(f[1], 2 * big - 1);
    }

    #[test]
    fn bigint_path_agrees() {
        let (r, c, e) = dense_entries(&[&[4, 6, 0], &[6, 9, 3], &[0, 3, 12]]);
        let a: Vec<BigInt> = invariant_factors_in::<i64>(r, c, &e).unwrap();
        let b: Vec<BigInt> = invariant_factors_in::<BigInt>(r, c, &e).unwrap();
        assert_eq!(a, b);
    }
}
