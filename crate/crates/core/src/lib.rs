//! Finite permutation group engine for real conjugacy classes, prime graphs
//! on real class sizes, and exhaustive structural verification at desk scale.
//!
//! Everything is computed by explicit search over fully materialized element
//! sets: no stabilizer chains, no shortcuts. Groups beyond the element cap
//! are rejected up front, which keeps the exhaustiveness contract honest.

pub mod arith;
pub mod graph;
pub mod group;
pub mod perm;
pub mod real;
pub mod structure;
pub mod verify;

pub use graph::{ComponentSplit, PrimeGraph};
pub use group::{GenerateError, Group, DEFAULT_ELEMENT_CAP};
pub use perm::{PermError, Permutation};
pub use real::{real_class_data, RealClassData, RealError};
pub use structure::{ClassData, ConjugacyClass, Subgroup};
pub use verify::{run_suite, Analysis, Statement, Verdict, Witness};
