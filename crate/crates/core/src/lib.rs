//! Permutation combinatorics engine: sorting operators, generalized pattern
//! avoidance (classical, vincular, barred), permutation statistics, generating
//! trees and label rewriting systems, plus the exact counting sequences used
//! to cross-check them (Catalan, West two-stack-sortable, Baxter).

pub mod enumerate;
pub mod error;
pub mod gentree;
pub mod pattern;
pub mod perm;
pub mod rewrite;
pub mod seq;
pub mod sort;
pub mod stats;

pub use enumerate::{ClassPredicate, ClassSet, ENUMERATION_CAP};
pub use error::Error;
pub use gentree::{InsertionRule, Site};
pub use pattern::{Pattern, PatternSet};
pub use perm::{D8Symmetry, Permutation};
pub use rewrite::{PhiLabel, PsiLabel};
pub use sort::{SortOp, SorterSpec};
pub use stats::{StatName, StatVector};
