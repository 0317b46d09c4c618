//! Containment and avoidance of classical, dashed (vincular) and barred
//! patterns, by exhaustive backtracking over index tuples.
//!
//! Pattern strings use digits for the letters, `-` for dashes and `^` right
//! before the barred letter: `2431` (classical), `24-3-1`, `2-41-3`,
//! `3^5241` (= 3 with barred 5 then 2 4 1). A string with no dash at all is
//! a classical pattern; once a dash appears, letter pairs written without a
//! dash must be adjacent in an occurrence.

use std::fmt;
use std::str::FromStr;

use crate::enumerate::{self, ClassSet};
use crate::error::Error;
use crate::perm::{normalize_distinct, Permutation};

/// A generalized permutation pattern.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern {
    /// The underlying letters, a permutation of {1..k}.
    letters: Permutation,
    /// Positions l (1-based, l < k) where letters l and l+1 must sit at
    /// consecutive indices in an occurrence. Empty for classical patterns.
    adjacency: Vec<usize>,
    /// 1-based position of the barred letter, if any. Barred patterns carry
    /// no adjacency constraints.
    barred: Option<usize>,
}

impl Pattern {
    /// A classical pattern from its letters.
    pub fn classical(letters: Permutation) -> Self {
        Pattern {
            letters,
            adjacency: Vec::new(),
            barred: None,
        }
    }

    pub fn letters(&self) -> &Permutation {
        &self.letters
    }

    pub fn adjacency(&self) -> &[usize] {
        &self.adjacency
    }

    pub fn barred(&self) -> Option<usize> {
        self.barred
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_classical(&self) -> bool {
        self.adjacency.is_empty() && self.barred.is_none()
    }

    /// The bar-deleted, normalized pattern of a barred pattern.
    pub fn bar_deleted(&self) -> Pattern {
        let b = self.barred.expect("bar_deleted on unbarred pattern");
        let word: Vec<u32> = self
            .letters
            .word()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != b)
            .map(|(_, &v)| v)
            .collect();
        Pattern::classical(normalize_distinct(&word))
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut letters: Vec<u32> = Vec::new();
        let mut dashes: Vec<usize> = Vec::new();
        let mut barred: Option<usize> = None;
        let mut saw_dash = false;
        let mut pending_dash = false;
        let mut pending_bar = false;
        for ch in s.chars() {
            match ch {
                '0'..='9' => {
                    let d = ch.to_digit(10).unwrap();
                    if d == 0 {
                        return Err(Error::InvalidPattern(format!("{s:?}: letter 0")));
                    }
                    if pending_dash {
                        dashes.push(letters.len());
                        pending_dash = false;
                    }
                    if pending_bar {
                        if barred.is_some() {
                            return Err(Error::InvalidPattern(format!(
                                "{s:?}: more than one barred letter"
                            )));
                        }
                        barred = Some(letters.len() + 1);
                        pending_bar = false;
                    }
                    letters.push(d);
                }
                '-' => {
                    if letters.is_empty() || pending_dash || pending_bar {
                        return Err(Error::InvalidPattern(format!("{s:?}: misplaced dash")));
                    }
                    saw_dash = true;
                    pending_dash = true;
                }
                '^' => {
                    if pending_bar || pending_dash {
                        return Err(Error::InvalidPattern(format!("{s:?}: misplaced bar")));
                    }
                    pending_bar = true;
                }
                c if c.is_whitespace() => {}
                c => {
                    return Err(Error::InvalidPattern(format!("{s:?}: bad character {c:?}")));
                }
            }
        }
        if pending_dash || pending_bar {
            return Err(Error::InvalidPattern(format!("{s:?}: trailing dash or bar")));
        }
        let letters = Permutation::from_word(letters)
            .map_err(|e| Error::InvalidPattern(format!("{s:?}: {e}")))?;
        if barred.is_some() && saw_dash {
            return Err(Error::InvalidPattern(format!(
                "{s:?}: dashes and a bar cannot be combined"
            )));
        }
        if barred.is_some() && letters.len() < 2 {
            return Err(Error::InvalidPattern(format!(
                "{s:?}: a barred pattern needs at least two letters"
            )));
        }
        // A pattern written with no dash is classical; with dashes, the
        // pairs not separated by a dash carry adjacency constraints.
        let adjacency = if saw_dash {
            (1..letters.len())
                .filter(|l| !dashes.contains(l))
                .collect()
        } else {
            Vec::new()
        };
        Ok(Pattern {
            letters,
            adjacency,
            barred,
        })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.letters.len();
        for (i, v) in self.letters.word().iter().enumerate() {
            let pos = i + 1;
            if self.barred == Some(pos) {
                write!(f, "^")?;
            }
            write!(f, "{v}")?;
            if !self.adjacency.is_empty() && pos < k && !self.adjacency.contains(&pos) {
                write!(f, "-")?;
            }
        }
        Ok(())
    }
}

/// A set of patterns avoided simultaneously.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternSet {
    patterns: Vec<Pattern>,
}

impl PatternSet {
    pub fn new(patterns: Vec<Pattern>) -> Result<Self, Error> {
        if patterns.is_empty() {
            return Err(Error::InvalidPattern("empty pattern set".into()));
        }
        Ok(PatternSet { patterns })
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Comma-separated pattern strings, e.g. "2-41-3, 3-14-2".
    fn from_str(s: &str) -> Result<Self, Error> {
        let patterns = s
            .split(',')
            .map(|t| t.parse::<Pattern>())
            .collect::<Result<Vec<_>, _>>()?;
        PatternSet::new(patterns)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Backtracking search for occurrences of `pat` (letters + adjacency) in `p`.
/// Indices in the result are 1-based and tuples come out in lexicographic
/// order. With `first_only`, stops after one occurrence.
fn occurrences(
    p: &Permutation,
    letters: &[u32],
    adjacency: &[usize],
    first_only: bool,
) -> Vec<Vec<usize>> {
    let word = p.word();
    let n = word.len();
    let k = letters.len();
    let mut found = Vec::new();
    if k > n {
        return found;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    search(word, letters, adjacency, n, k, &mut chosen, first_only, &mut found);
    found
}

#[allow(clippy::too_many_arguments)]
fn search(
    word: &[u32],
    letters: &[u32],
    adjacency: &[usize],
    n: usize,
    k: usize,
    chosen: &mut Vec<usize>,
    first_only: bool,
    found: &mut Vec<Vec<usize>>,
) -> bool {
    let l = chosen.len();
    if l == k {
        found.push(chosen.iter().map(|&j| j + 1).collect());
        return first_only;
    }
    // Candidate indices for pattern position l+1 (0-based l).
    let (lo, hi) = if l == 0 {
        (0, n - (k - 1))
    } else if adjacency.contains(&l) {
        // letters l and l+1 adjacent: only the next index qualifies
        (chosen[l - 1] + 1, (chosen[l - 1] + 2).min(n - (k - 1 - l)))
    } else {
        (chosen[l - 1] + 1, n - (k - 1 - l))
    };
    for j in lo..hi {
        let v = word[j];
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(m, &jm)| (letters[m] < letters[l]) == (word[jm] < v));
        if !ok {
            continue;
        }
        chosen.push(j);
        if search(word, letters, adjacency, n, k, chosen, first_only, found) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

/// Classical containment: some subsequence of `p` is order-isomorphic to the
/// pattern letters. A pattern longer than `p` is simply not contained.
pub fn contains_classical(p: &Permutation, pat: &Pattern) -> bool {
    debug_assert!(pat.adjacency.is_empty() && pat.barred.is_none());
    !occurrences(p, pat.letters.word(), &[], true).is_empty()
}

/// All classical occurrences as 1-based index tuples, lexicographic order.
pub fn occurrences_classical(p: &Permutation, pat: &Pattern) -> Vec<Vec<usize>> {
    debug_assert!(pat.adjacency.is_empty() && pat.barred.is_none());
    occurrences(p, pat.letters.word(), &[], false)
}

/// Dashed containment: a classical occurrence that also satisfies every
/// adjacency constraint.
pub fn contains_dashed(p: &Permutation, pat: &Pattern) -> bool {
    debug_assert!(pat.barred.is_none());
    !occurrences(p, pat.letters.word(), &pat.adjacency, true).is_empty()
}

/// Barred containment: some classical occurrence of the bar-deleted pattern
/// cannot be extended into a classical occurrence of the full letters whose
/// restriction to the unbarred positions is that occurrence.
pub fn contains_barred(p: &Permutation, pat: &Pattern) -> bool {
    let b = pat.barred.expect("contains_barred needs a barred pattern");
    let full = pat.letters.word();
    let k = full.len();
    let n = p.len();
    let reduced = pat.bar_deleted();
    let occs = occurrences(p, reduced.letters.word(), &[], false);
    let word = p.word();
    'occ: for occ in &occs {
        // The extension index must fall strictly between the occurrence
        // neighbours of the barred position (1-based throughout).
        let lo = if b == 1 { 0 } else { occ[b - 2] };
        let hi = if b == k { n + 1 } else { occ[b - 1] };
        for j in lo + 1..hi {
            let v = word[j - 1];
            let extends = occ.iter().enumerate().all(|(m, &jm)| {
                let full_pos = if m + 1 < b { m } else { m + 1 };
                (full[full_pos] < full[b - 1]) == (word[jm - 1] < v)
            });
            if extends {
                continue 'occ;
            }
        }
        return true;
    }
    false
}

/// Containment dispatching on the pattern kind.
pub fn contains(p: &Permutation, pat: &Pattern) -> bool {
    if pat.barred.is_some() {
        contains_barred(p, pat)
    } else {
        contains_dashed(p, pat)
    }
}

/// True iff `p` contains none of the patterns.
pub fn avoids_all(p: &Permutation, ps: &PatternSet) -> bool {
    !ps.patterns.iter().any(|pat| contains(p, pat))
}

/// Av(ps) ∩ S_n, by filtering all n! permutations.
pub fn avoidance_class(ps: &PatternSet, n: usize) -> Result<ClassSet, Error> {
    enumerate::filter_sn(n, |p| avoids_all(p, ps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn parse_grammar() {
        let q = pat("24-3-1");
        assert_eq!(q.letters(), &p("2431"));
        assert_eq!(q.adjacency(), &[1]);
        assert_eq!(q.barred(), None);

        let q = pat("2-41-3");
        assert_eq!(q.letters(), &p("2413"));
        assert_eq!(q.adjacency(), &[2]);

        let q = pat("3^5241");
        assert_eq!(q.letters(), &p("35241"));
        assert!(q.adjacency().is_empty());
        assert_eq!(q.barred(), Some(2));
        assert_eq!(q.bar_deleted().letters(), &p("3241"));

        let q = pat("^24135");
        assert_eq!(q.barred(), Some(1));
        assert_eq!(q.bar_deleted().letters(), &p("3124"));

        let q = pat("2431");
        assert!(q.is_classical());

        // fully dashed form is the same classical pattern
        assert_eq!(pat("2-4-3-1").letters(), pat("2431").letters());
        assert!(pat("2-4-3-1").adjacency().is_empty());

        assert!("2^4-31".parse::<Pattern>().is_err());
        assert!("2^4^31".parse::<Pattern>().is_err());
        assert!("-231".parse::<Pattern>().is_err());
        assert!("231-".parse::<Pattern>().is_err());
        assert!("2331".parse::<Pattern>().is_err());
        assert!("^1".parse::<Pattern>().is_err());
        assert!("20".parse::<Pattern>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["2431", "24-3-1", "2-41-3", "3^5241", "^24135", "3-14-2"] {
            assert_eq!(pat(s).to_string(), s);
            assert_eq!(pat(&pat(s).to_string()), pat(s));
        }
    }

    #[test]
    fn classical_example_1() {
        let sigma = p("316452");
        assert!(!contains_classical(&sigma, &pat("2413")));
        assert!(contains_classical(&sigma, &pat("2431")));
        for s in ["1", "12", "21", "416253"] {
            assert!(contains_classical(&p(s), &pat("1")));
        }
    }

    #[test]
    fn occurrences_example_1() {
        let occs = occurrences_classical(&p("316452"), &pat("2431"));
        assert_eq!(occs, vec![vec![1, 3, 4, 6], vec![1, 3, 5, 6]]);
        assert!(occurrences_classical(&p("123"), &pat("21")).is_empty());
        // brute cross-check on 2413 / 231: all C(4,3) triples
        let occs = occurrences_classical(&p("2413"), &pat("231"));
        assert_eq!(occs, vec![vec![1, 2, 4]]);
    }

    #[test]
    fn dashed_example_1() {
        assert!(!contains_dashed(&p("316452"), &pat("24-3-1")));
        // a classical pattern is the all-dash dashed pattern
        assert!(contains_dashed(&p("316452"), &pat("2-4-3-1")));
        // 41352 contains 3142 classically (4,1,5,2) but in no occurrence are
        // the 1 and the 4 adjacent.
        assert!(contains_classical(&p("41352"), &pat("3142")));
        assert!(!contains_dashed(&p("41352"), &pat("3-14-2")));
    }

    #[test]
    fn dashed_adjacency_is_enforced() {
        assert!(contains_dashed(&p("2413"), &pat("2-41-3")));
        assert!(contains_dashed(&p("24135"), &pat("2-41-3")));
        assert!(contains_dashed(&p("2143"), &pat("2-14-3")));
        assert!(!contains_dashed(&p("2143"), &pat("2-41-3")));
    }

    #[test]
    fn barred_example_1() {
        // The paper's Example 1 pattern 3 1̄ 5 4 2: every occurrence of its
        // bar-deleted pattern 2431 in 316452 extends with a smallest element.
        assert!(!contains_barred(&p("316452"), &pat("3^1542")));
        // West's pattern 3 5̄ 2 4 1 on the same permutation.
        assert!(!contains_barred(&p("316452"), &pat("3^5241")));
    }

    #[test]
    fn barred_derived_cases() {
        // 35241: the single occurrence 3541 of 2431 cannot be extended
        // (nothing sits between positions 1 and 2), so 3^1542 is contained.
        assert!(contains_barred(&p("35241"), &pat("3^1542")));
        // But 35241 itself is an occurrence of 35241, so the occurrence 3241
        // of the bar-deleted 3241 extends and 3^5241 is avoided.
        assert!(!contains_barred(&p("35241"), &pat("3^5241")));
        // Vacuous avoidance when the bar-deleted pattern does not occur.
        assert!(!contains_barred(&p("123"), &pat("3^5241")));
        assert!(!contains_barred(&p("12345"), &pat("3^1542")));
    }

    #[test]
    fn barred_vacuous_is_never_contained() {
        // contains_barred is false whenever the bar-deleted pattern is absent
        let q = pat("3^5241");
        let reduced = q.bar_deleted();
        for s in ["1234", "4321", "1243"] {
            if !contains_classical(&p(s), &reduced) {
                assert!(!contains_barred(&p(s), &q));
            }
        }
    }

    #[test]
    fn avoids_all_examples() {
        let single = |s: &str| PatternSet::new(vec![pat(s)]).unwrap();
        assert!(avoids_all(&p("316452"), &single("2413")));
        assert!(!avoids_all(&p("316452"), &single("2431")));
        let ps: PatternSet = "2413, 2431, 3412".parse().unwrap();
        assert!(avoids_all(&p("1"), &ps));
    }

    #[test]
    fn pattern_longer_than_word() {
        assert!(!contains_classical(&p("21"), &pat("321")));
        assert!(!contains_dashed(&p("21"), &pat("3-2-1")));
    }
}
