//! Maximal subsemigroups of finite semigroups.
//!
//! The crate is layered bottom-up:
//!
//! * [`perm_group`]: a small permutation-group kernel (element enumeration,
//!   subgroup lattices, maximal subgroups up to conjugacy, normalizers and
//!   coset transversals);
//! * [`graphs`]: connected components, strongly connected components,
//!   Bron–Kerbosch enumeration of maximal independent sets, DOT export;
//! * [`semigroup`]: enumeration of a finite semigroup from generators,
//!   Green's relations, principal factors as Rees 0-matrix semigroups;
//! * [`rees_matrix`]: Rees 0-matrix semigroups over permutation groups and
//!   their maximal subsemigroups;
//! * [`maximal`]: maximal subsemigroups of an arbitrary finite semigroup,
//!   dispatched J-class by J-class;
//! * [`oracle`]: brute-force ground truth used for verification.

pub mod bounds;
pub mod catalog;
pub mod error;
pub mod graphs;
pub mod maximal;
pub mod oracle;
pub mod perm_group;
pub mod rees_matrix;
pub mod semigroup;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use maximal::{max_subsemigroups, MaxType, MaximalSubsemigroup};
pub use perm_group::{PermGroup, Permutation};
pub use rees_matrix::ReesZeroMatrixSemigroup;
pub use semigroup::{FiniteSemigroup, GreensStructure, Transformation};
