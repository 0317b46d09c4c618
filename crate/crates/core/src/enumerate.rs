//! Exhaustive enumeration of S_n and class construction by filtering.
//!
//! Enumeration fans out over the disjoint first-letter prefixes of S_n; the
//! result is a set, so it is identical no matter how the work is scheduled.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::Error;
use crate::pattern::{self, PatternSet};
use crate::perm::Permutation;
use crate::sort::SorterSpec;

/// Hard cap on full S_n enumeration; 11! is the desk-scale ceiling.
pub const ENUMERATION_CAP: usize = 11;

/// A materialized permutation class at one size.
pub type ClassSet = BTreeSet<Permutation>;

/// Calls `f` on every permutation of {1..n} with the given first letter, in
/// lexicographic order.
fn for_each_with_first(n: usize, first: u32, f: &mut impl FnMut(&[u32])) {
    let mut word = Vec::with_capacity(n);
    word.push(first);
    let used: u16 = 1 << first;
    descend(n, &mut word, used, f);
}

fn descend(n: usize, word: &mut Vec<u32>, used: u16, f: &mut impl FnMut(&[u32])) {
    if word.len() == n {
        f(word);
        return;
    }
    for v in 1..=n as u32 {
        if used & (1 << v) == 0 {
            word.push(v);
            descend(n, word, used | (1 << v), f);
            word.pop();
        }
    }
}

/// Calls `f` on every permutation of {1..n}, in lexicographic order.
pub fn for_each_perm(n: usize, mut f: impl FnMut(&[u32])) {
    assert!(n >= 1 && n <= ENUMERATION_CAP);
    for first in 1..=n as u32 {
        for_each_with_first(n, first, &mut f);
    }
}

/// { p in S_n : pred(p) }, enumerated in parallel over first letters.
pub fn filter_sn<F>(n: usize, pred: F) -> Result<ClassSet, Error>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::ResourceLimit {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let chunks: Vec<Vec<Permutation>> = (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut hits = Vec::new();
            for_each_with_first(n, first, &mut |word| {
                let p = Permutation::from_word(word.to_vec()).expect("valid word");
                if pred(&p) {
                    hits.push(p);
                }
            });
            hits
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// A deterministic membership test identifying a permutation class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassPredicate {
    /// All permutations.
    All,
    /// Av(patterns).
    Avoiding(PatternSet),
    /// Id(spec): permutations the composition sorts.
    SortedBy(SorterSpec),
    /// The inner class with one permutation removed (harness negative controls).
    Excluding(Box<ClassPredicate>, Permutation),
    /// The inner class with one foreign permutation added (negative controls).
    Including(Box<ClassPredicate>, Permutation),
}

impl ClassPredicate {
    pub fn avoiding(patterns: &str) -> Result<Self, Error> {
        Ok(ClassPredicate::Avoiding(patterns.parse()?))
    }

    pub fn sorted_by(spec: &str) -> Result<Self, Error> {
        Ok(ClassPredicate::SortedBy(spec.parse()?))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        match self {
            ClassPredicate::All => true,
            ClassPredicate::Avoiding(ps) => pattern::avoids_all(p, ps),
            ClassPredicate::SortedBy(spec) => spec.sorts(p),
            ClassPredicate::Excluding(inner, q) => p != q && inner.contains(p),
            ClassPredicate::Including(inner, q) => p == q || inner.contains(p),
        }
    }

    /// The class intersected with S_n, by exhaustive filtering.
    pub fn members(&self, n: usize) -> Result<ClassSet, Error> {
        filter_sn(n, |p| self.contains(p))
    }
}

impl fmt::Display for ClassPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassPredicate::All => write!(f, "S"),
            ClassPredicate::Avoiding(ps) => write!(f, "Av({ps})"),
            ClassPredicate::SortedBy(spec) => write!(f, "Id({spec})"),
            ClassPredicate::Excluding(inner, q) => write!(f, "{inner} minus [{q}]"),
            ClassPredicate::Including(inner, q) => write!(f, "{inner} plus [{q}]"),
        }
    }
}

impl FromStr for ClassPredicate {
    type Err = Error;

    /// "Av(2-41-3, 3-14-2)", "Id(S.i.S)" or "S".
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "S" || s.eq_ignore_ascii_case("all") {
            return Ok(ClassPredicate::All);
        }
        if let Some(body) = s.strip_prefix("Av(").and_then(|t| t.strip_suffix(')')) {
            return ClassPredicate::avoiding(body);
        }
        if let Some(body) = s.strip_prefix("Id(").and_then(|t| t.strip_suffix(')')) {
            return ClassPredicate::sorted_by(body);
        }
        Err(Error::InvalidClass(format!(
            "{s:?}: expected Av(...), Id(...) or S"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_and_count() {
        let mut seen = Vec::new();
        for_each_perm(3, |w| seen.push(w.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        let mut count = 0usize;
        for_each_perm(6, |_| count += 1);
        assert_eq!(count, 720);
    }

    #[test]
    fn filter_matches_sequential() {
        let par = filter_sn(5, |p| p.at(1) == 1).unwrap();
        let mut seq = ClassSet::new();
        for_each_perm(5, |w| {
            if w[0] == 1 {
                seq.insert(Permutation::from_word(w.to_vec()).unwrap());
            }
        });
        assert_eq!(par, seq);
        assert_eq!(par.len(), 24);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            filter_sn(12, |_| true),
            Err(Error::ResourceLimit { n: 12, cap: 11 })
        ));
    }

    #[test]
    fn predicate_parsing_and_display() {
        let av: ClassPredicate = "Av(2-41-3, 3-14-2)".parse().unwrap();
        assert_eq!(av.to_string(), "Av(2-41-3, 3-14-2)");
        let id: ClassPredicate = "Id(S.i.S)".parse().unwrap();
        assert_eq!(id.to_string(), "Id(S.i.S)");
        let all: ClassPredicate = "S".parse().unwrap();
        assert_eq!(all, ClassPredicate::All);
        assert!("Foo(1)".parse::<ClassPredicate>().is_err());
    }

    #[test]
    fn mutated_predicates() {
        let base: ClassPredicate = "Av(231)".parse().unwrap();
        let gone: Permutation = "132".parse().unwrap();
        let minus = ClassPredicate::Excluding(Box::new(base.clone()), gone.clone());
        assert!(base.contains(&gone));
        assert!(!minus.contains(&gone));
        assert_eq!(minus.members(3).unwrap().len(), 4);

        let alien: Permutation = "231".parse().unwrap();
        let plus = ClassPredicate::Including(Box::new(base), alien.clone());
        assert!(plus.contains(&alien));
        assert_eq!(plus.members(3).unwrap().len(), 6);
    }
}
