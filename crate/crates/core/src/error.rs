use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word that should define a permutation does not (duplicates, gaps, empty).
    #[error("invalid word: {0}")]
    InvalidWord(String),

    /// A pattern string that does not parse or violates the pattern rules.
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    /// A sorter composition string that does not parse.
    #[error("invalid sorter spec: {0}")]
    InvalidSorterSpec(String),

    /// An unknown statistic name.
    #[error("unknown statistic: {0}")]
    UnknownStat(String),

    /// A class descriptor string that does not parse.
    #[error("invalid class descriptor: {0}")]
    InvalidClass(String),

    /// Exhaustive enumeration was requested beyond the configured cap.
    #[error("enumeration of S_{n} exceeds the cap n <= {cap}")]
    ResourceLimit { n: usize, cap: usize },

    /// The number of distinct labels in a rewriting run exceeded the bound.
    #[error("label multiset exceeds {bound} distinct labels at depth {depth}")]
    LabelLimit { depth: usize, bound: usize },

    /// An operation was called on an argument outside its stated domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A generating-tree level disagrees with the class it should enumerate.
    #[error("generating tree for {class} under rule {rule} misses {witness} at n={n} (class not closed under parent removal)")]
    ClosureViolation {
        class: String,
        rule: String,
        n: usize,
        witness: String,
    },

    /// A succession-rule label outside the invariants of its system.
    #[error("invalid label: {0}")]
    InvalidLabel(String),
}
