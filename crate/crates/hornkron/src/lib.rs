//! Exact combinatorics of Littlewood-Richardson and Kronecker coefficients:
//! partition and index-set calculus, symmetric-group character tables, two
//! independent routes to each coefficient family, the linear inequality
//! families on nonzero Kronecker triples with their reduction formulas, and
//! rational-rank certification of cone and face dimensions.
//!
//! Everything is integer-exact; "verification" always means evaluating a
//! claim on exhaustively enumerated desk-scale data and reporting every
//! counterexample found.

pub mod characters;
pub mod cone;
pub mod error;
pub mod inequalities;
pub mod kron;
pub mod lr;
pub mod partitions;
pub mod reduction;

pub use error::{Error, Result};
pub use partitions::{IndexSet, Partition};
