//! Exact enumeration of permutations by consecutive-pattern occurrences,
//! refined by statistics of the inverse permutation.

pub mod brute;
pub mod cli;
pub mod compute;
pub mod error;
pub mod formulas;
pub mod fqsym;
pub mod pattern;
pub mod perm;
pub mod poly;
pub mod series;
pub mod tables;
pub mod verify;
pub mod words;

pub use brute::{brute_distribution, DistributionPolynomial, Family, Sweep};
pub use error::{Error, Result};
pub use pattern::{ClusterStat, PatternSet};
pub use perm::{Composition, Permutation, StatRecord, Symmetry};
pub use poly::Poly;
pub use series::{Series, Truncation, Var};
