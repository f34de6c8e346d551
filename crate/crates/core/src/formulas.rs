//! Degree tables and exact Fuss-Catalan arithmetic.
//!
//! `Cat^(m)(W) = ∏ (mh + d_i) / d_i` is evaluated for every integer `m`,
//! negative ones included. The positive variant is
//! `Cat_+^(m)(W) = ∏ (mh + d*_i) / d_i`, where the codegrees `d*_i` are
//! `d_i - 2` for real groups. For the well-generated complex tables the
//! stored codegrees are the standard ones, which satisfy `{d*_i} = {h - d_i}`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::groups::{split_label, Family, GroupSpec};
use crate::{NcmError, Result};

/// Rank, degrees, codegrees and Coxeter number of a reflection group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTable {
    pub label: String,
    /// Sorted ascending.
    pub degrees: Vec<u64>,
    /// Sorted ascending.
    pub codegrees: Vec<u64>,
    /// Largest degree.
    pub h: u64,
    pub real: bool,
}

impl DegreeTable {
    fn new(label: String, mut degrees: Vec<u64>, codegrees: Option<Vec<u64>>, real: bool) -> Self {
        degrees.sort_unstable();
        let mut codegrees =
            codegrees.unwrap_or_else(|| degrees.iter().map(|d| d - 2).collect());
        codegrees.sort_unstable();
        let h = *degrees.last().expect("non-empty degree list");
        DegreeTable {
            label,
            degrees,
            codegrees,
            h,
            real,
        }
    }

    /// Degree table of a realized group.
    pub fn from_spec(spec: &GroupSpec) -> Self {
        let n = spec.param as u64;
        let degrees = match spec.family {
            Family::A => (2..=n + 1).collect(),
            Family::B => (1..=n).map(|i| 2 * i).collect(),
            Family::D => (1..n).map(|i| 2 * i).chain([n]).collect(),
            Family::I2 => vec![2, n],
            Family::H3 => vec![2, 6, 10],
        };
        DegreeTable::new(spec.label(), degrees, None, true)
    }

    /// Parses any supported label: `A_n`, `B_n`, `D_n`, `I2(k)`, `H3`, `H4`,
    /// `F4`, `E6`, `E7`, `E8`, and the well-generated complex families
    /// `G(d,1,n)` and `G(e,e,n)`.
    pub fn parse(label: &str) -> Result<Self> {
        let bad = || NcmError::InvalidLabel(label.to_string());
        let (family, args) = split_label(label).ok_or_else(bad)?;
        let exceptional = |name: &str, degrees: &[u64]| {
            Ok(DegreeTable::new(name.to_string(), degrees.to_vec(), None, true))
        };
        match (family.as_str(), args.as_slice()) {
            ("H", [3]) => exceptional("H3", &[2, 6, 10]),
            ("H", [4]) => exceptional("H4", &[2, 12, 20, 30]),
            ("F", [4]) => exceptional("F4", &[2, 6, 8, 12]),
            ("E", [6]) => exceptional("E6", &[2, 5, 6, 8, 9, 12]),
            ("E", [7]) => exceptional("E7", &[2, 6, 8, 10, 12, 14, 18]),
            ("E", [8]) => exceptional("E8", &[2, 8, 12, 14, 18, 20, 24, 30]),
            ("G", [d, 1, n]) if *d >= 2 && *n >= 1 => {
                let (d, n) = (*d as u64, *n as u64);
                let degrees = (1..=n).map(|i| i * d).collect();
                let codegrees = (0..n).map(|i| i * d).collect();
                Ok(DegreeTable::new(
                    format!("G({d},1,{n})"),
                    degrees,
                    Some(codegrees),
                    d == 2,
                ))
            }
            ("G", [e, f, n]) if e == f && *e >= 2 && *n >= 2 => {
                let (e, n) = (*e as u64, *n as u64);
                let degrees = (1..n).map(|i| i * e).chain([n]).collect();
                let codegrees = (0..n - 1).map(|i| i * e).chain([(n - 1) * e - n]).collect();
                Ok(DegreeTable::new(
                    format!("G({e},{e},{n})"),
                    degrees,
                    Some(codegrees),
                    e == 2 || n == 2,
                ))
            }
            _ => {
                let spec: GroupSpec = label.parse()?;
                Ok(DegreeTable::from_spec(&spec))
            }
        }
    }

    /// Rank `n`.
    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// `∏ d_i`, the order of the group.
    pub fn degree_product(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    fn product_over_degrees(&self, m: i64, shift: &[u64]) -> BigRational {
        let mh = BigInt::from(m) * BigInt::from(self.h);
        let num: BigInt = shift.iter().map(|&s| &mh + BigInt::from(s)).product();
        BigRational::new(num, self.degree_product())
    }

    /// `Cat^(m)(W)` as an exact rational, for any integer `m`.
    pub fn cat(&self, m: i64) -> BigRational {
        self.product_over_degrees(m, &self.degrees)
    }

    /// `Cat^(m)(W)`, asserting that it is an integer.
    pub fn cat_integer(&self, m: i64) -> Result<BigInt> {
        integral(self.cat(m), || format!("Cat^({m})({}) is not an integer", self.label))
    }

    /// `Cat_+^(m)(W)` as an exact rational.
    pub fn cat_plus_rational(&self, m: i64) -> BigRational {
        self.product_over_degrees(m, &self.codegrees)
    }

    /// `Cat_+^(m)(W)` for `m ≥ 0`.
    pub fn cat_plus(&self, m: u64) -> Result<BigInt> {
        integral(self.cat_plus_rational(m as i64), || {
            format!("Cat_+^({m})({}) is not an integer", self.label)
        })
    }

    /// The multiset `{h - d_i + 2}` equals `{d_i}`.
    pub fn degree_duality_holds(&self) -> bool {
        let mut dual: Vec<i64> = self
            .degrees
            .iter()
            .map(|&d| self.h as i64 - d as i64 + 2)
            .collect();
        dual.sort_unstable();
        dual.iter().copied().eq(self.degrees.iter().map(|&d| d as i64))
    }

    /// `(-1)^n`.
    pub fn sign(&self) -> BigInt {
        if self.n().is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    }
}

fn integral(x: BigRational, msg: impl FnOnce() -> String) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(NcmError::Consistency(msg()))
    }
}

/// Binomial coefficient with arbitrary integer upper argument:
/// `C(n, k) = n(n-1)⋯(n-k+1)/k!` for `k ≥ 0`, and 0 for `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `Cat^(m)` is an integer for `m ≥ -1`.
    Integrality,
    /// `Cat_+^(m) = (-1)^n Cat^(-m-1)`.
    PositiveReflection,
    /// `{h - d_i + 2} = {d_i}`; real tables only.
    DegreeDuality,
    /// `Σ_{j=1}^{n-k} C(j+k-1, j-1) = C(n, k+1)`.
    HockeyStickShifted,
    /// `Σ_{j=0}^{n-k} C(j+k-1, j) = C(n, k)`.
    HockeyStick,
    /// `Σ_k (-1)^k C(n,k) [Cat^((k-1)m) - Cat^((k-1)m-1)] = 0`.
    FiniteDifference,
    /// `Cat^(-m-1) - Cat^(-m) = (-1)^n (Cat_+^(m) - Cat_+^(m-1))`.
    NegativeParameterEuler,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Integrality => "integrality",
            Identity::PositiveReflection => "positive_reflection",
            Identity::DegreeDuality => "degree_duality",
            Identity::HockeyStickShifted => "hockey_stick_shifted",
            Identity::HockeyStick => "hockey_stick",
            Identity::FiniteDifference => "finite_difference",
            Identity::NegativeParameterEuler => "negative_parameter_euler",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub m: Option<i64>,
    pub k: Option<i64>,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub label: String,
    pub m_max: i64,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.checks.iter().filter(|c| c.outcome == outcome).count()
    }
}

/// Runs the identity suite on one degree table for `1 ≤ m ≤ m_max`.
pub fn verify_identities(table: &DegreeTable, m_max: i64) -> IdentityReport {
    let n = table.n() as i64;
    let sign = BigRational::from_integer(table.sign());
    let mut checks = Vec::new();
    let mut push = |identity, m, k, ok: bool| {
        checks.push(IdentityCheck {
            identity,
            m,
            k,
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
        })
    };

    for m in -1..=m_max {
        push(Identity::Integrality, Some(m), None, table.cat(m).is_integer());
    }

    if table.real {
        push(Identity::DegreeDuality, None, None, table.degree_duality_holds());
    }

    for k in 0..=n {
        let lhs: BigInt = (1..=n - k).map(|j| binomial(j + k - 1, j - 1)).sum();
        push(Identity::HockeyStickShifted, None, Some(k), lhs == binomial(n, k + 1));
        let lhs: BigInt = (0..=n - k).map(|j| binomial(j + k - 1, j)).sum();
        push(Identity::HockeyStick, None, Some(k), lhs == binomial(n, k));
    }

    for m in 1..=m_max {
        let plus = table.cat_plus_rational(m);
        push(
            Identity::PositiveReflection,
            Some(m),
            None,
            plus.is_integer() && plus == &sign * table.cat(-m - 1),
        );

        let diff: BigRational = (0..=n)
            .map(|k| {
                let c = BigRational::from_integer(binomial(n, k));
                let term = table.cat((k - 1) * m) - table.cat((k - 1) * m - 1);
                if k % 2 == 0 {
                    c * term
                } else {
                    -(c * term)
                }
            })
            .sum();
        push(Identity::FiniteDifference, Some(m), None, diff.is_zero());

        let lhs = table.cat(-m - 1) - table.cat(-m);
        let rhs = &sign * (table.cat_plus_rational(m) - table.cat_plus_rational(m - 1));
        push(Identity::NegativeParameterEuler, Some(m), None, lhs == rhs);
    }

    if !table.real {
        checks.push(IdentityCheck {
            identity: Identity::DegreeDuality,
            m: None,
            k: None,
            outcome: Outcome::Skipped,
        });
    }

    IdentityReport {
        label: table.label.clone(),
        m_max,
        checks,
    }
}
