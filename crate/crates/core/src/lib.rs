//! Exact enumeration of m-divisible noncrossing partitions for finite real
//! reflection groups, their chain statistics, and the homology of the
//! truncated order complex.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: group
//! elements are permutations, signed permutations, dihedral pairs or
//! matrices over exact number fields, and all counts are big integers.
//!
//! Products of group elements are read left to right: `w0 w1` means "apply
//! `w0` first, then `w1`". See [`groups::COMPOSITION_CONVENTION`].
//!
//! Layout:
//! - [`groups`]: concrete realizations of A, B, D, I2(k) and H3, reflections,
//!   absolute length and Coxeter elements.
//! - [`ncposet`]: the poset of m-divisible noncrossing partitions.
//! - [`chains`]: f-vectors, rank-selected and multichain counts, and the
//!   reduced Euler characteristic by direct count and by closed form.
//! - [`formulas`]: degree tables and Fuss-Catalan arithmetic.
//! - [`homology`]: integer homology of the truncated order complex.
#![no_std]

extern crate alloc;

pub mod bitmatrix;
pub mod chains;
mod error;
pub mod formulas;
pub mod groups;
pub mod homology;
pub mod linalg;
pub mod ncposet;
mod snf;

pub use error::{NcmError, Result};
pub use formulas::DegreeTable;
pub use groups::{ElemId, Element, Family, GroupRealization, GroupSpec};
pub use ncposet::{DivisiblePoset, NcTuple, TruncatedPoset};

/// Default cap on the number of poset elements an enumeration may produce.
pub const DEFAULT_MAX_ELEMENTS: u64 = 200_000;

/// Default cap on the number of simplices in a materialized order complex.
pub const DEFAULT_MAX_SIMPLICES: u64 = 200_000;
