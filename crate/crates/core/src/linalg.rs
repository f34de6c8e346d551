//! Exact fields and rank computation for the linear actions of the realized
//! groups.
//!
//! Three fields cover every realization: the rationals (permutation and
//! signed-permutation matrices), `Q(√5)` (H3), and cyclotomic fields `Q(ζ_N)`
//! (dihedral groups, whose reflection representation needs `2cos(π/k)`).

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Field operations supplied by a context object, so that fields with a
/// runtime modulus (cyclotomic) fit the same elimination code.
pub trait ExactField {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Only called on non-zero elements.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// Square matrix over a field, stored row-major.
pub type Matrix<E> = Vec<Vec<E>>;

/// Rank by Gaussian elimination. Consumes the rows.
pub fn rank<F: ExactField>(field: &F, mut rows: Matrix<F::Elem>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_inv = field.inv(&rows[r][c]);
        for i in r + 1..nrows {
            if field.is_zero(&rows[i][c]) {
                continue;
            }
            let factor = field.mul(&rows[i][c], &pivot_inv);
            for j in c..ncols {
                let t = field.mul(&factor, &rows[r][j]);
                rows[i][j] = field.sub(&rows[i][j], &t);
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Solves `a x = b` for square non-singular `a`. Returns `None` if singular.
pub fn solve<F: ExactField>(
    field: &F,
    mut a: Matrix<F::Elem>,
    mut b: Vec<F::Elem>,
) -> Option<Vec<F::Elem>> {
    let n = a.len();
    for c in 0..n {
        let p = (c..n).find(|&i| !field.is_zero(&a[i][c]))?;
        a.swap(c, p);
        b.swap(c, p);
        let pivot_inv = field.inv(&a[c][c]);
        for j in c..n {
            a[c][j] = field.mul(&a[c][j], &pivot_inv);
        }
        b[c] = field.mul(&b[c], &pivot_inv);
        for i in 0..n {
            if i == c || field.is_zero(&a[i][c]) {
                continue;
            }
            let factor = a[i][c].clone();
            for j in c..n {
                let t = field.mul(&factor, &a[c][j]);
                a[i][j] = field.sub(&a[i][j], &t);
            }
            let t = field.mul(&factor, &b[c]);
            b[i] = field.sub(&b[i], &t);
        }
    }
    Some(b)
}

pub fn mat_mul<F: ExactField>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![field.zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if field.is_zero(&a[i][l]) {
                continue;
            }
            for j in 0..m {
                let t = field.mul(&a[i][l], &b[l][j]);
                out[i][j] = field.add(&out[i][j], &t);
            }
        }
    }
    out
}

pub fn identity<F: ExactField>(field: &F, n: usize) -> Matrix<F::Elem> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect()
}

/// `rank(M - I)`: the codimension of the fixed space of `M`.
pub fn fixed_space_codim<F: ExactField>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let one = field.one();
    let shifted = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if i == j { field.sub(x, &one) } else { x.clone() })
                .collect()
        })
        .collect();
    rank(field, shifted)
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl ExactField for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An element `a + b√5` of `Q(√5)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadSqrt5 {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadSqrt5 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadSqrt5 { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        QuadSqrt5::new(rat(n), BigRational::zero())
    }

    /// The golden ratio `(1 + √5) / 2 = 2cos(π/5)`.
    pub fn golden() -> Self {
        QuadSqrt5::new(rat_frac(1, 2), rat_frac(1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign of the real number `a + b√5`, decided exactly.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            _ => {
                // a and 5b² compared by magnitude: a + b√5 > 0 iff a² > 5b² when a > 0.
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b * rat(5);
                if sa == Ordering::Greater {
                    a2.cmp(&b2)
                } else {
                    b2.cmp(&a2)
                }
            }
        }
    }
}

impl fmt::Display for QuadSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// The field `Q(√5)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sqrt5Field;

impl ExactField for Sqrt5Field {
    type Elem = QuadSqrt5;

    fn zero(&self) -> QuadSqrt5 {
        QuadSqrt5::from_int(0)
    }
    fn one(&self) -> QuadSqrt5 {
        QuadSqrt5::from_int(1)
    }
    fn is_zero(&self, x: &QuadSqrt5) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &QuadSqrt5, y: &QuadSqrt5) -> QuadSqrt5 {
        QuadSqrt5::new(&x.a + &y.a, &x.b + &y.b)
    }
    fn sub(&self, x: &QuadSqrt5, y: &QuadSqrt5) -> QuadSqrt5 {
        QuadSqrt5::new(&x.a - &y.a, &x.b - &y.b)
    }
    fn mul(&self, x: &QuadSqrt5, y: &QuadSqrt5) -> QuadSqrt5 {
        QuadSqrt5::new(
            &x.a * &y.a + &x.b * &y.b * rat(5),
            &x.a * &y.b + &x.b * &y.a,
        )
    }
    fn inv(&self, x: &QuadSqrt5) -> QuadSqrt5 {
        let norm = &x.a * &x.a - &x.b * &x.b * rat(5);
        QuadSqrt5::new(&x.a / &norm, -(&x.b / &norm))
    }
}

/// Integer polynomial coefficients, lowest degree first.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let nq = num.len() - dd;
    let mut q = vec![BigInt::zero(); nq];
    for k in (0..nq).rev() {
        let coef = rem[k + dd].clone();
        if coef.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &coef * d;
        }
        q[k] = coef;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

/// The `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = -BigInt::one();
    p[n] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

/// The cyclotomic field `Q(ζ_N)`, elements stored as coefficient vectors in
/// the power basis `1, ζ, …, ζ^{φ(N)-1}`.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    order: usize,
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        CyclotomicField {
            order,
            modulus: cyclotomic_polynomial(order),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Vec<BigRational> {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        self.reduce(raw)
    }

    fn reduce(&self, mut raw: Vec<BigRational>) -> Vec<BigRational> {
        let deg = self.degree();
        for k in (deg..raw.len()).rev() {
            let coef = core::mem::replace(&mut raw[k], BigRational::zero());
            if coef.is_zero() {
                continue;
            }
            // ζ^k = ζ^{k-deg} · ζ^deg and ζ^deg = -Σ_{i<deg} modulus_i ζ^i
            for i in 0..deg {
                let m = BigRational::from_integer(self.modulus[i].clone());
                raw[k - deg + i] -= &coef * m;
            }
        }
        raw.resize(deg, BigRational::zero());
        raw
    }

    /// Matrix of multiplication by `a` in the power basis.
    fn mul_matrix(&self, a: &[BigRational]) -> Matrix<BigRational> {
        let deg = self.degree();
        let mut cols = Vec::with_capacity(deg);
        for j in 0..deg {
            let mut basis = vec![BigRational::zero(); deg];
            basis[j] = BigRational::one();
            cols.push(self.mul(&a.to_vec(), &basis));
        }
        (0..deg)
            .map(|i| (0..deg).map(|j| cols[j][i].clone()).collect())
            .collect()
    }
}

impl ExactField for CyclotomicField {
    type Elem = Vec<BigRational>;

    fn zero(&self) -> Vec<BigRational> {
        vec![BigRational::zero(); self.degree()]
    }
    fn one(&self) -> Vec<BigRational> {
        self.zeta_pow(0)
    }
    fn is_zero(&self, a: &Vec<BigRational>) -> bool {
        a.iter().all(|c| c.is_zero())
    }
    fn add(&self, a: &Vec<BigRational>, b: &Vec<BigRational>) -> Vec<BigRational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn sub(&self, a: &Vec<BigRational>, b: &Vec<BigRational>) -> Vec<BigRational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
    fn mul(&self, a: &Vec<BigRational>, b: &Vec<BigRational>) -> Vec<BigRational> {
        let mut raw = vec![BigRational::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                raw[i + j] += x * y;
            }
        }
        self.reduce(raw)
    }
    fn inv(&self, a: &Vec<BigRational>) -> Vec<BigRational> {
        let m = self.mul_matrix(a);
        solve(&Rationals, m, self.one()).expect("non-zero cyclotomic element is invertible")
    }
}
