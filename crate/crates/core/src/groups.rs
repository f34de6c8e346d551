//! Concrete finite real reflection groups.
//!
//! Each family has its own element normal form:
//!
//! | family | element | linear action |
//! |--------|---------|---------------|
//! | `A_n`  | permutation of `{1..n+1}` in one-line notation | permutation matrices on `Q^{n+1}` |
//! | `B_n`  | signed permutation in one-line notation | signed permutation matrices on `Q^n` |
//! | `D_n`  | signed permutation with an even number of sign changes | as `B_n` |
//! | `I2(k)` | `(rotation, flip)`: `x ↦ ±x + rotation` on `Z/k` | reflection representation over `Q(ζ_{2k})` |
//! | `H3`   | 3×3 matrix over `Q(√5)` | the matrix itself, in the simple-root basis |
//!
//! Products are read left to right: `mul(a, b)` is "apply `a`, then `b`".
//! On one-line words this means `(ab)(i) = b(a(i))`. Matrices act on column
//! vectors, so the matrix of `ab` is `M_b · M_a`.
//!
//! After closure, elements are sorted by their normal form and handed out as
//! dense [`ElemId`] indices; all heavy work runs on a precomputed Cayley
//! table.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::formulas::DegreeTable;
use crate::linalg::{self, CyclotomicField, ExactField, Matrix, QuadSqrt5, Rationals, Sqrt5Field};
use crate::{NcmError, Result};

/// Tag recorded in every serialized artifact that depends on the product order.
pub const COMPOSITION_CONVENTION: &str = "left-to-right";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    D,
    I2,
    H3,
}

/// A group type together with its rank (or the dihedral parameter `k` for
/// `I2(k)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSpec {
    pub family: Family,
    /// Rank for A, B, D; the dihedral order parameter `k` for I2; 3 for H3.
    pub param: u32,
}

impl GroupSpec {
    pub fn a(n: u32) -> Self {
        GroupSpec { family: Family::A, param: n }
    }
    pub fn b(n: u32) -> Self {
        GroupSpec { family: Family::B, param: n }
    }
    pub fn d(n: u32) -> Self {
        GroupSpec { family: Family::D, param: n }
    }
    pub fn i2(k: u32) -> Self {
        GroupSpec { family: Family::I2, param: k }
    }
    pub fn h3() -> Self {
        GroupSpec { family: Family::H3, param: 3 }
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::I2 => 2,
            Family::H3 => 3,
            _ => self.param as usize,
        }
    }

    /// Canonical label, e.g. `A3`, `I2(5)`.
    pub fn label(&self) -> String {
        self.to_string()
    }

    /// Rejects groups outside the range this crate realizes concretely.
    pub fn check_envelope(&self) -> Result<()> {
        let (ok, limit) = match self.family {
            Family::A => ((1..=5).contains(&self.param), "A_n realized for 1 <= n <= 5"),
            Family::B => ((2..=4).contains(&self.param), "B_n realized for 2 <= n <= 4"),
            Family::D => (self.param == 4, "D_n realized for n = 4 only"),
            Family::I2 => ((3..=12).contains(&self.param), "I2(k) realized for 3 <= k <= 12"),
            Family::H3 => (self.param == 3, "H3 only"),
        };
        if ok {
            Ok(())
        } else {
            Err(NcmError::OutsideEnvelope {
                group: self.label(),
                limit,
            })
        }
    }

    /// Dimension of the space the linear action lives on.
    pub fn ambient_dimension(&self) -> usize {
        match self.family {
            Family::A => self.param as usize + 1,
            _ => self.rank(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.param),
            Family::B => write!(f, "B{}", self.param),
            Family::D => write!(f, "D{}", self.param),
            Family::I2 => write!(f, "I2({})", self.param),
            Family::H3 => write!(f, "H3"),
        }
    }
}

/// Splits labels like `A3`, `A_3`, `I2(5)`, `I_2(5)` into a family letter
/// and its arguments.
pub(crate) fn split_label(label: &str) -> Option<(String, Vec<u32>)> {
    let cleaned: String = label
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '_')
        .collect();
    let letter_end = cleaned
        .char_indices()
        .find(|(_, c)| !c.is_ascii_alphabetic())
        .map(|(i, _)| i)
        .unwrap_or(cleaned.len());
    let (letters, rest) = cleaned.split_at(letter_end);
    if letters.is_empty() {
        return None;
    }
    let mut args = Vec::new();
    if let Some(open) = rest.find('(') {
        let head = &rest[..open];
        if !head.is_empty() {
            args.push(head.parse().ok()?);
        }
        let inner = rest[open + 1..].strip_suffix(')')?;
        for part in inner.split(',') {
            args.push(part.parse().ok()?);
        }
    } else if !rest.is_empty() {
        args.push(rest.parse().ok()?);
    }
    Some((letters.to_ascii_uppercase(), args))
}

impl FromStr for GroupSpec {
    type Err = NcmError;

    fn from_str(label: &str) -> Result<Self> {
        let bad = || NcmError::InvalidLabel(label.to_string());
        let (family, args) = split_label(label).ok_or_else(bad)?;
        match (family.as_str(), args.as_slice()) {
            ("A", [n]) if *n >= 1 => Ok(GroupSpec::a(*n)),
            ("B", [n]) if *n >= 2 => Ok(GroupSpec::b(*n)),
            ("D", [n]) if *n >= 2 => Ok(GroupSpec::d(*n)),
            ("I", [2, k]) if *k >= 2 => Ok(GroupSpec::i2(*k)),
            ("H", [3]) => Ok(GroupSpec::h3()),
            _ => Err(bad()),
        }
    }
}

/// Normal form of a group element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    /// One-line notation, 1-based.
    Perm(Vec<u8>),
    /// Signed one-line notation, 1-based.
    SignedPerm(Vec<i8>),
    /// The map `x ↦ (-1)^flip · x + rotation` on `Z/k`.
    Dihedral { rotation: u32, flip: bool },
    /// Row-major matrix in the simple-root basis.
    Matrix(Vec<Vec<QuadSqrt5>>),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
            f.write_str("[")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")
        }
        match self {
            Element::Perm(w) => list(f, w),
            Element::SignedPerm(w) => list(f, w),
            Element::Dihedral { rotation, flip } => write!(f, "({rotation},{})", *flip as u8),
            Element::Matrix(rows) => {
                f.write_str("[")?;
                for (i, row) in rows.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    list(f, row)?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Index of an element inside a [`GroupRealization`]. Indices follow the
/// sorted order of the element normal forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemId(pub u32);

impl ElemId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

fn compose(spec: &GroupSpec, a: &Element, b: &Element) -> Element {
    match (a, b) {
        (Element::Perm(x), Element::Perm(y)) => {
            Element::Perm(x.iter().map(|&i| y[i as usize - 1]).collect())
        }
        (Element::SignedPerm(x), Element::SignedPerm(y)) => Element::SignedPerm(
            x.iter()
                .map(|&i| {
                    let img = y[i.unsigned_abs() as usize - 1];
                    if i < 0 {
                        -img
                    } else {
                        img
                    }
                })
                .collect(),
        ),
        (
            Element::Dihedral {
                rotation: ja,
                flip: fa,
            },
            Element::Dihedral {
                rotation: jb,
                flip: fb,
            },
        ) => {
            let k = spec.param;
            let ja = if *fb { (k - ja) % k } else { *ja };
            Element::Dihedral {
                rotation: (ja + jb) % k,
                flip: fa ^ fb,
            }
        }
        (Element::Matrix(ma), Element::Matrix(mb)) => Element::Matrix(linalg::mat_mul(&Sqrt5Field, mb, ma)),
        _ => unreachable!("elements from different families"),
    }
}

fn identity_element(spec: &GroupSpec) -> Element {
    match spec.family {
        Family::A => Element::Perm((1..=spec.param as u8 + 1).collect()),
        Family::B | Family::D => Element::SignedPerm((1..=spec.param as i8).collect()),
        Family::I2 => Element::Dihedral {
            rotation: 0,
            flip: false,
        },
        Family::H3 => Element::Matrix(linalg::identity(&Sqrt5Field, 3)),
    }
}

/// Reflection in the simple root `i` of a Coxeter matrix, in the simple-root
/// basis, given the table of `2cos(π/m_ij)`.
fn tits_reflection<F: ExactField>(field: &F, i: usize, two_cos: &[Vec<F::Elem>]) -> Matrix<F::Elem> {
    let n = two_cos.len();
    let mut m = linalg::identity(field, n);
    for j in 0..n {
        m[i][j] = if i == j {
            field.sub(&field.zero(), &field.one())
        } else {
            two_cos[i][j].clone()
        };
    }
    m
}

fn h3_simple_matrices() -> Vec<Matrix<QuadSqrt5>> {
    // Coxeter diagram s1 -5- s2 -3- s3.
    let f = Sqrt5Field;
    let z = f.zero();
    let two_cos = vec![
        vec![z.clone(), QuadSqrt5::golden(), z.clone()],
        vec![QuadSqrt5::golden(), z.clone(), f.one()],
        vec![z.clone(), f.one(), z],
    ];
    (0..3).map(|i| tits_reflection(&f, i, &two_cos)).collect()
}

fn simple_generators(spec: &GroupSpec) -> Vec<Element> {
    let n = spec.param as usize;
    match spec.family {
        Family::A => (0..n)
            .map(|i| {
                let mut w: Vec<u8> = (1..=n as u8 + 1).collect();
                w.swap(i, i + 1);
                Element::Perm(w)
            })
            .collect(),
        Family::B | Family::D => {
            let id: Vec<i8> = (1..=n as i8).collect();
            let mut gens = Vec::with_capacity(n);
            let mut s0 = id.clone();
            if spec.family == Family::B {
                s0[0] = -1;
            } else {
                s0[0] = -2;
                s0[1] = -1;
            }
            gens.push(Element::SignedPerm(s0));
            for i in 0..n - 1 {
                let mut w = id.clone();
                w.swap(i, i + 1);
                gens.push(Element::SignedPerm(w));
            }
            gens
        }
        Family::I2 => vec![
            Element::Dihedral {
                rotation: 0,
                flip: true,
            },
            Element::Dihedral {
                rotation: 1,
                flip: true,
            },
        ],
        Family::H3 => h3_simple_matrices().into_iter().map(Element::Matrix).collect(),
    }
}

/// The linear action used by [`GroupRealization::fixed_space_codim`].
#[derive(Debug, Clone)]
enum LinearModel {
    /// Permutation and signed-permutation matrices over `Q`.
    Rational,
    /// Elements already are matrices over `Q(√5)`.
    Sqrt5,
    /// Dihedral reflection representation over `Q(ζ_{2k})`.
    Cyclotomic {
        field: CyclotomicField,
        first_flip: Matrix<Vec<BigRational>>,
        rotation: Matrix<Vec<BigRational>>,
    },
}

impl LinearModel {
    fn for_spec(spec: &GroupSpec) -> Self {
        match spec.family {
            Family::A | Family::B | Family::D => LinearModel::Rational,
            Family::H3 => LinearModel::Sqrt5,
            Family::I2 => {
                let k = spec.param as i64;
                let field = CyclotomicField::new(2 * k as usize);
                // 2cos(π/k) = ζ + ζ^{-1} with ζ a primitive 2k-th root of unity
                let tc = field.add(&field.zeta_pow(1), &field.zeta_pow(-1));
                let z = field.zero();
                let two_cos = vec![vec![z.clone(), tc.clone()], vec![tc, z]];
                let s1 = tits_reflection(&field, 0, &two_cos);
                let s2 = tits_reflection(&field, 1, &two_cos);
                // rotation = s1 then s2
                let rotation = linalg::mat_mul(&field, &s2, &s1);
                LinearModel::Cyclotomic {
                    field,
                    first_flip: s1,
                    rotation,
                }
            }
        }
    }
}

fn signed_matrix(images: impl Iterator<Item = (usize, i64)>, dim: usize) -> Matrix<BigRational> {
    let mut m = vec![vec![BigRational::zero(); dim]; dim];
    for (col, img) in images {
        let row = img.unsigned_abs() as usize - 1;
        m[row][col] = BigRational::from_integer(BigInt::from(img.signum()));
    }
    m
}

/// A finite real reflection group with its elements enumerated, its
/// reflections, absolute length table and a chosen Coxeter element.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct GroupRealization {
    spec: GroupSpec,
    elements: Vec<Element>,
    index: BTreeMap<Element, ElemId>,
    /// `mul[a * order + b] = a·b`
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: ElemId,
    simple: Vec<ElemId>,
    reflections: Vec<ElemId>,
    is_reflection: Vec<bool>,
    coxeter: ElemId,
    lengths: Vec<u32>,
    degrees: DegreeTable,
    linear: LinearModel,
}

/// Builds the group by closing the simple generators under multiplication.
pub fn build_group(spec: GroupSpec) -> Result<GroupRealization> {
    spec.check_envelope()?;
    let gens = simple_generators(&spec);
    let id = identity_element(&spec);

    // Breadth-first closure; remember how each element was first reached.
    let mut found: Vec<Element> = vec![id.clone()];
    let mut seen: BTreeMap<Element, usize> = BTreeMap::new();
    seen.insert(id, 0);
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut head = 0;
    while head < found.len() {
        for (g, gen) in gens.iter().enumerate() {
            let next = compose(&spec, &found[head], gen);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), found.len());
                found.push(next);
                parent.push(Some((head, g)));
            }
        }
        head += 1;
    }

    let order = found.len();
    // Sorted element order; `new_of[old]` maps discovery index to ElemId.
    let mut sorted: Vec<usize> = (0..order).collect();
    sorted.sort_by(|&x, &y| found[x].cmp(&found[y]));
    let mut new_of = vec![0u32; order];
    for (new, &old) in sorted.iter().enumerate() {
        new_of[old] = new as u32;
    }
    let elements: Vec<Element> = sorted.iter().map(|&old| found[old].clone()).collect();
    let index: BTreeMap<Element, ElemId> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), ElemId(i as u32)))
        .collect();

    // Right multiplication by generators.
    let ngen = gens.len();
    let mut gen_table = vec![0u32; order * ngen];
    for (a, elem) in elements.iter().enumerate() {
        for (g, gen) in gens.iter().enumerate() {
            gen_table[a * ngen + g] = index[&compose(&spec, elem, gen)].0;
        }
    }

    // Full table, filling column b from the column of its BFS parent.
    let mut mul = vec![0u32; order * order];
    let identity = ElemId(new_of[0]);
    for a in 0..order {
        mul[a * order + identity.index()] = a as u32;
    }
    for old in 1..order {
        let (p_old, g) = parent[old].expect("non-root has a parent");
        let b = new_of[old] as usize;
        let pb = new_of[p_old] as usize;
        for a in 0..order {
            let ap = mul[a * order + pb] as usize;
            mul[a * order + b] = gen_table[ap * ngen + g];
        }
    }

    let mut inv = vec![u32::MAX; order];
    for a in 0..order {
        for b in 0..order {
            if mul[a * order + b] == identity.0 {
                inv[a] = b as u32;
                break;
            }
        }
    }

    let simple: Vec<ElemId> = gens.iter().map(|g| index[g]).collect();

    let mut refl_set = BTreeSet::new();
    for g in 0..order {
        for s in &simple {
            let gi = inv[g] as usize;
            let t = mul[mul[gi * order + s.index()] as usize * order + g];
            refl_set.insert(t);
        }
    }
    let reflections: Vec<ElemId> = refl_set.into_iter().map(ElemId).collect();
    let mut is_reflection = vec![false; order];
    for t in &reflections {
        is_reflection[t.index()] = true;
    }

    let lengths = bfs_lengths(order, identity, &reflections, &mul);

    let coxeter = simple
        .iter()
        .fold(identity, |acc, s| ElemId(mul[acc.index() * order + s.index()]));

    let degrees = DegreeTable::from_spec(&spec);
    let group = GroupRealization {
        linear: LinearModel::for_spec(&spec),
        spec,
        elements,
        index,
        mul,
        inv,
        identity,
        simple,
        reflections,
        is_reflection,
        coxeter,
        lengths,
        degrees,
    };
    group.check_invariants()?;
    Ok(group)
}

/// Distances from the identity in the Cayley graph `(W, T)`.
fn bfs_lengths(order: usize, identity: ElemId, gens: &[ElemId], mul: &[u32]) -> Vec<u32> {
    let mut dist = vec![u32::MAX; order];
    dist[identity.index()] = 0;
    let mut queue = VecDeque::from([identity.index()]);
    while let Some(w) = queue.pop_front() {
        for t in gens {
            let next = mul[w * order + t.index()] as usize;
            if dist[next] == u32::MAX {
                dist[next] = dist[w] + 1;
                queue.push_back(next);
            }
        }
    }
    dist
}

impl GroupRealization {
    fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(NcmError::Consistency(format!("{}: {msg}", self.spec)));
        let expected = self.degrees.degree_product();
        if BigInt::from(self.order()) != expected {
            return fail(format!("|W| = {} but product of degrees is {expected}", self.order()));
        }
        if self.inv.contains(&u32::MAX) {
            return fail("missing inverse".into());
        }
        for &t in &self.reflections {
            if t == self.identity || self.mul(t, t) != self.identity {
                return fail(format!("reflection {} is not an involution", self.element(t)));
            }
        }
        for g in self.ids() {
            for &t in &self.reflections {
                if !self.is_reflection(self.conjugate(t, g)) {
                    return fail("reflections not closed under conjugation".into());
                }
            }
        }
        if self.lengths.contains(&u32::MAX) {
            return fail("reflections do not generate".into());
        }
        if self.length(self.identity) != 0
            || self.reflections.iter().any(|&t| self.length(t) != 1)
            || self.length(self.coxeter) as usize != self.rank()
        {
            return fail("absolute length table violates l(e)=0, l(t)=1, l(c)=n".into());
        }
        Ok(())
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> + '_ {
        (0..self.elements.len() as u32).map(ElemId)
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, id: ElemId) -> &Element {
        &self.elements[id.index()]
    }

    pub fn id_of(&self, elem: &Element) -> Option<ElemId> {
        self.index.get(elem).copied()
    }

    pub fn identity(&self) -> ElemId {
        self.identity
    }

    /// `a·b`: apply `a`, then `b`.
    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        ElemId(self.mul[a.index() * self.order() + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: ElemId) -> ElemId {
        ElemId(self.inv[a.index()])
    }

    /// `g⁻¹ a g`.
    pub fn conjugate(&self, a: ElemId, g: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// Left-to-right product of a word.
    pub fn product(&self, word: &[ElemId]) -> ElemId {
        word.iter().fold(self.identity, |acc, &w| self.mul(acc, w))
    }

    pub fn simple_reflections(&self) -> &[ElemId] {
        &self.simple
    }

    /// The set `T` of all reflections, sorted.
    pub fn reflections(&self) -> &[ElemId] {
        &self.reflections
    }

    pub fn is_reflection(&self, w: ElemId) -> bool {
        self.is_reflection[w.index()]
    }

    /// Product of the simple generators in index order.
    pub fn coxeter_element(&self) -> ElemId {
        self.coxeter
    }

    /// Product of the simple generators in reverse index order. Another
    /// Coxeter element, conjugate to [`coxeter_element`](Self::coxeter_element).
    pub fn reversed_coxeter_element(&self) -> ElemId {
        self.coxeter_for_order(&(0..self.simple.len()).rev().collect::<Vec<_>>())
    }

    /// Product of the simple generators in the given order (a permutation of
    /// `0..rank`).
    pub fn coxeter_for_order(&self, order: &[usize]) -> ElemId {
        order
            .iter()
            .fold(self.identity, |acc, &i| self.mul(acc, self.simple[i]))
    }

    /// Absolute (reflection) length `ℓ_T(w)`.
    #[inline]
    pub fn length(&self, w: ElemId) -> u32 {
        self.lengths[w.index()]
    }

    /// `ℓ_T` for every element, indexed by [`ElemId`].
    pub fn absolute_length_table(&self) -> &[u32] {
        &self.lengths
    }

    pub fn degree_table(&self) -> &DegreeTable {
        &self.degrees
    }

    /// Multiplicative order of `w`.
    pub fn element_order(&self, w: ElemId) -> usize {
        let mut x = w;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, w);
            k += 1;
        }
        k
    }

    /// Some `g` with `g⁻¹ a g = b`, found by exhaustive search.
    pub fn conjugator(&self, a: ElemId, b: ElemId) -> Option<ElemId> {
        self.ids().find(|&g| self.conjugate(a, g) == b)
    }

    /// Rank of `M_w - I` in the linear action: the codimension of the fixed
    /// space of `w`. Computed without reference to the length table.
    pub fn fixed_space_codim(&self, w: ElemId) -> usize {
        let dim = self.spec.ambient_dimension();
        match (self.element(w), &self.linear) {
            (Element::Perm(p), LinearModel::Rational) => {
                let m = signed_matrix(p.iter().enumerate().map(|(c, &i)| (c, i as i64)), dim);
                linalg::fixed_space_codim(&Rationals, &m)
            }
            (Element::SignedPerm(p), LinearModel::Rational) => {
                let m = signed_matrix(p.iter().enumerate().map(|(c, &i)| (c, i as i64)), dim);
                linalg::fixed_space_codim(&Rationals, &m)
            }
            (Element::Matrix(m), LinearModel::Sqrt5) => linalg::fixed_space_codim(&Sqrt5Field, m),
            (
                Element::Dihedral { rotation, flip },
                LinearModel::Cyclotomic {
                    field,
                    first_flip,
                    rotation: r,
                },
            ) => {
                let mut m = linalg::identity(field, 2);
                if *flip {
                    m = first_flip.clone();
                }
                for _ in 0..*rotation {
                    m = linalg::mat_mul(field, r, &m);
                }
                linalg::fixed_space_codim(field, &m)
            }
            _ => unreachable!("linear model matches the family"),
        }
    }
}

/// Whether every entry of an H3 matrix is an algebraic integer of `Z[τ]`:
/// written `a + b√5`, both `2a` and `2b` are integers of equal parity.
pub fn is_golden_integer(x: &QuadSqrt5) -> bool {
    let two = BigRational::from_integer(BigInt::from(2));
    let a2 = &x.a * &two;
    let b2 = &x.b * &two;
    a2.is_integer() && b2.is_integer() && ((a2.to_integer() - b2.to_integer()) % BigInt::from(2)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> GroupRealization {
        build_group(label.parse().unwrap()).unwrap()
    }

    #[test]
    fn label_parsing() {
        assert_eq!("A3".parse::<GroupSpec>().unwrap(), GroupSpec::a(3));
        assert_eq!("A_3".parse::<GroupSpec>().unwrap(), GroupSpec::a(3));
        assert_eq!("I2(7)".parse::<GroupSpec>().unwrap(), GroupSpec::i2(7));
        assert_eq!("i_2(7)".parse::<GroupSpec>().unwrap(), GroupSpec::i2(7));
        assert_eq!("H3".parse::<GroupSpec>().unwrap(), GroupSpec::h3());
        assert!("Q3".parse::<GroupSpec>().is_err());
        assert!("A0".parse::<GroupSpec>().is_err());
        assert!("H4".parse::<GroupSpec>().is_err());
        for s in ["A1", "B4", "D4", "I2(12)", "H3"] {
            assert_eq!(s.parse::<GroupSpec>().unwrap().label(), s);
        }
    }

    #[test]
    fn envelope_is_enforced() {
        let err = build_group(GroupSpec::a(6)).unwrap_err();
        assert!(matches!(err, NcmError::OutsideEnvelope { limit, .. } if limit.contains("5")));
        assert!(build_group(GroupSpec::d(5)).is_err());
        assert!(build_group(GroupSpec::i2(13)).is_err());
        assert!(build_group(GroupSpec::b(5)).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(group("A3").order(), 24);
        assert_eq!(group("I2(4)").order(), 8);
        assert_eq!(group("H3").order(), 120);
        assert_eq!(group("B3").order(), 48);
        assert_eq!(group("D4").order(), 192);
        assert_eq!(group("A1").order(), 2);
    }

    #[test]
    fn reflection_counts() {
        assert_eq!(group("A3").reflections().len(), 6);
        assert_eq!(group("B2").reflections().len(), 4);
        for k in 3..=12 {
            assert_eq!(group(&format!("I2({k})")).reflections().len(), k);
        }
        // number of reflections is the sum of (d_i - 1)
        assert_eq!(group("H3").reflections().len(), 15);
        assert_eq!(group("D4").reflections().len(), 12);
    }

    #[test]
    fn transpositions_are_the_reflections_of_s4() {
        let g = group("A3");
        for &t in g.reflections() {
            let Element::Perm(w) = g.element(t) else { panic!() };
            let moved = w.iter().enumerate().filter(|(i, &x)| x as usize != i + 1).count();
            assert_eq!(moved, 2);
        }
    }

    #[test]
    fn reflections_fix_hyperplanes() {
        for label in ["A3", "B3", "D4", "I2(5)", "H3"] {
            let g = group(label);
            for &t in g.reflections() {
                assert_eq!(g.fixed_space_codim(t), 1, "{label}");
            }
        }
    }

    #[test]
    fn length_examples() {
        let g = group("A3");
        assert_eq!(g.length(g.identity()), 0);
        let c = g.coxeter_element();
        assert_eq!(g.element(c), &Element::Perm(vec![4, 1, 2, 3]));
        assert_eq!(g.length(c), 3);
        assert_eq!(g.fixed_space_codim(g.identity()), 0);
        assert_eq!(g.fixed_space_codim(c), 3);
    }

    #[test]
    fn coxeter_element_orders() {
        assert_eq!(group("A2").element_order(group("A2").coxeter_element()), 3);
        let b2 = group("B2");
        assert_eq!(b2.element_order(b2.coxeter_element()), 4);
        let h3 = group("H3");
        assert_eq!(h3.element_order(h3.coxeter_element()), 10);
        for label in ["A4", "B4", "D4", "I2(9)", "H3"] {
            let g = group(label);
            let c = g.coxeter_element();
            assert_eq!(g.element_order(c) as u64, g.degree_table().h, "{label}");
            assert_eq!(g.length(c) as usize, g.rank());
            assert_eq!(g.fixed_space_codim(c), g.rank());
        }
    }

    #[test]
    fn reversed_coxeter_is_conjugate() {
        for label in ["A3", "B3", "D4", "I2(6)", "H3"] {
            let g = group(label);
            let c = g.coxeter_element();
            let c2 = g.reversed_coxeter_element();
            assert_ne!(c, c2);
            let x = g.conjugator(c, c2).expect("conjugate");
            assert_eq!(g.conjugate(c, x), c2);
        }
    }

    #[test]
    fn dihedral_coxeter_is_rotation() {
        let g = group("I2(5)");
        assert_eq!(
            g.element(g.coxeter_element()),
            &Element::Dihedral {
                rotation: 1,
                flip: false
            }
        );
    }

    #[test]
    fn group_axioms_exhaustive() {
        for label in ["A3", "B3", "I2(8)", "H3"] {
            let g = group(label);
            let e = g.identity();
            for a in g.ids() {
                assert_eq!(g.mul(e, a), a);
                assert_eq!(g.mul(a, e), a);
                assert_eq!(g.mul(a, g.inv(a)), e);
                assert_eq!(g.length(a), g.length(g.inv(a)));
            }
            for a in g.ids().step_by(3) {
                for b in g.ids().step_by(2) {
                    for c in g.ids().step_by(5) {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn multiplication_table_matches_normal_forms() {
        for label in ["A2", "B2", "D4", "I2(6)", "H3"] {
            let g = group(label);
            for a in g.ids().step_by(7) {
                for b in g.ids().step_by(5) {
                    let direct = compose(g.spec(), g.element(a), g.element(b));
                    assert_eq!(g.id_of(&direct), Some(g.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn composition_is_left_to_right() {
        let g = group("A2");
        let s1 = g.simple_reflections()[0];
        let s2 = g.simple_reflections()[1];
        // apply (1 2) first, then (2 3): 1 -> 2 -> 3, 2 -> 1, 3 -> 2
        assert_eq!(g.element(g.mul(s1, s2)), &Element::Perm(vec![3, 1, 2]));
    }

    #[test]
    fn h3_entries_are_golden_integers() {
        let g = group("H3");
        for e in g.elements() {
            let Element::Matrix(m) = e else { panic!() };
            assert!(m.iter().flatten().all(is_golden_integer));
        }
    }

    #[test]
    fn elements_sorted_by_normal_form() {
        let g = group("B3");
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn codim_matches_bfs_length_everywhere() {
        for label in ["A3", "B3", "D4", "I2(7)", "I2(12)", "H3"] {
            let g = group(label);
            for w in g.ids() {
                assert_eq!(g.length(w) as usize, g.fixed_space_codim(w), "{label} {}", g.element(w));
            }
        }
    }

    #[test]
    fn degrees_match_coxeter_eigenvalues() {
        // c^j fixes a subspace of dimension #{i : h | j(d_i - 1)}
        for label in ["A3", "B3", "D4", "I2(8)", "H3"] {
            let g = group(label);
            let d = g.degree_table();
            let n = g.rank();
            let mut x = g.identity();
            for j in 1..=d.h {
                x = g.mul(x, g.coxeter_element());
                let fixed = d.degrees.iter().filter(|&&di| (j * (di - 1)) % d.h == 0).count();
                assert_eq!(g.fixed_space_codim(x), n - fixed, "{label} j={j}");
            }
        }
    }
}
