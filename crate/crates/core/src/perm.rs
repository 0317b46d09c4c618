//! Permutations in one-line notation and the symmetries of the square acting
//! on their diagrams.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A permutation of {1..n} stored as its one-line word: `word[i-1]` is the
/// value at index `i`. Immutable after construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from a one-line word, validating that it is a
    /// bijection on {1..n} with n >= 1.
    pub fn from_word(word: Vec<u32>) -> Result<Self, Error> {
        if word.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidWord(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v as usize - 1] {
                return Err(Error::InvalidWord(format!("value {v} repeated")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    /// The identity permutation of size n (n >= 1).
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "the empty permutation is not constructible");
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    /// The decreasing permutation n (n-1) ... 2 1.
    pub fn decreasing(n: usize) -> Self {
        assert!(n >= 1);
        Permutation {
            word: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Never true: permutations have size >= 1. Kept for clippy's sake.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The one-line word, values 1..=n.
    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Value at 1-based index i.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    /// 1-based index of value v.
    pub fn position_of(&self, v: u32) -> usize {
        self.word.iter().position(|&x| x == v).expect("value present") + 1
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// r(p)(i) = p(n+1-i): reflection of the diagram across a vertical axis.
    pub fn reverse(&self) -> Self {
        let word = self.word.iter().rev().copied().collect();
        Permutation { word }
    }

    /// c(p)(i) = n+1-p(i): reflection across a horizontal axis.
    pub fn complement(&self) -> Self {
        let n = self.word.len() as u32;
        let word = self.word.iter().map(|&v| n + 1 - v).collect();
        Permutation { word }
    }

    /// i(p)(v) = index of v in p: reflection across the main diagonal.
    pub fn inverse(&self) -> Self {
        let mut word = vec![0u32; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word }
    }
}

impl fmt::Display for Permutation {
    /// Space-separated one-line notation, e.g. "4 1 6 2 5 3".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts space-separated one-line notation; the compact digit form
    /// "416253" is accepted only for n <= 9.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidWord("empty input".into()));
        }
        let word: Vec<u32> = if s.contains(char::is_whitespace) {
            s.split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::InvalidWord(format!("bad entry {t:?}")))
                })
                .collect::<Result<_, _>>()?
        } else {
            if s.len() > 9 {
                return Err(Error::InvalidWord(
                    "compact digit form only supported for n <= 9; use spaces".into(),
                ));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d >= 1)
                        .ok_or_else(|| Error::InvalidWord(format!("bad digit {c:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::from_word(word)
    }
}

/// Normalizes a non-empty word of distinct integers to the permutation that
/// is order-isomorphic to it, e.g. 3642 -> 2431.
pub fn normalize(word: &[i64]) -> Result<Permutation, Error> {
    if word.is_empty() {
        return Err(Error::InvalidWord("empty word".into()));
    }
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    let mut ranks = vec![0u32; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        if rank > 0 && word[order[rank - 1]] == word[i] {
            return Err(Error::InvalidWord(format!("duplicate entry {}", word[i])));
        }
        ranks[i] = rank as u32 + 1;
    }
    Ok(Permutation { word: ranks })
}

/// Normalizes a word already known to hold distinct u32 values.
pub(crate) fn normalize_distinct(word: &[u32]) -> Permutation {
    let w: Vec<i64> = word.iter().map(|&v| v as i64).collect();
    normalize(&w).expect("distinct values normalize")
}

/// The eight symmetries of the square, acting on permutation diagrams.
/// Generated by reverse (r), complement (c) and inverse (i); stored as one of
/// eight canonical elements in the normal form i^a ∘ c^b ∘ r^d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum D8Symmetry {
    /// identity
    E,
    /// r
    R,
    /// c
    C,
    /// r∘c (= c∘r, the half turn)
    Rc,
    /// i
    I,
    /// i∘r
    Ir,
    /// i∘c
    Ic,
    /// i∘c∘r (reflection across the anti-diagonal)
    Icr,
}

use D8Symmetry::*;

/// All eight elements, in table order.
pub const D8_ELEMENTS: [D8Symmetry; 8] = [E, R, C, Rc, I, Ir, Ic, Icr];

/// Fixed composition table: `D8_COMPOSE[x][y]` is x∘y (apply y first).
/// Derived from r∘i = i∘c, c∘i = i∘r, r∘c = c∘r and the involutions
/// r² = c² = i² = e; verified against the action in the tests below.
pub const D8_COMPOSE: [[D8Symmetry; 8]; 8] = [
    //          e    r    c    rc   i    ir   ic   icr
    /* e   */ [E, R, C, Rc, I, Ir, Ic, Icr],
    /* r   */ [R, E, Rc, C, Ic, Icr, I, Ir],
    /* c   */ [C, Rc, E, R, Ir, I, Icr, Ic],
    /* rc  */ [Rc, C, R, E, Icr, Ic, Ir, I],
    /* i   */ [I, Ir, Ic, Icr, E, R, C, Rc],
    /* ir  */ [Ir, I, Icr, Ic, C, Rc, E, R],
    /* ic  */ [Ic, Icr, I, Ir, R, E, Rc, C],
    /* icr */ [Icr, Ic, Ir, I, Rc, C, R, E],
];

impl D8Symmetry {
    fn index(self) -> usize {
        match self {
            E => 0,
            R => 1,
            C => 2,
            Rc => 3,
            I => 4,
            Ir => 5,
            Ic => 6,
            Icr => 7,
        }
    }

    /// x.compose(y) = x∘y: apply y first, then x.
    pub fn compose(self, other: D8Symmetry) -> D8Symmetry {
        D8_COMPOSE[self.index()][other.index()]
    }

    /// Applies the symmetry to a permutation, expanding the normal form
    /// i^a ∘ c^b ∘ r^d right to left.
    pub fn apply(self, p: &Permutation) -> Permutation {
        let (a, b, d) = match self {
            E => (false, false, false),
            R => (false, false, true),
            C => (false, true, false),
            Rc => (false, true, true),
            I => (true, false, false),
            Ir => (true, false, true),
            Ic => (true, true, false),
            Icr => (true, true, true),
        };
        let mut q = p.clone();
        if d {
            q = q.reverse();
        }
        if b {
            q = q.complement();
        }
        if a {
            q = q.inverse();
        }
        q
    }
}

impl fmt::Display for D8Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            E => "e",
            R => "r",
            C => "c",
            Rc => "r.c",
            I => "i",
            Ir => "i.r",
            Ic => "i.c",
            Icr => "i.c.r",
        };
        write!(f, "{s}")
    }
}

impl FromStr for D8Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        // Dotted generator strings compose right to left, e.g. "i.c.r".
        let mut acc = E;
        for tok in s.split('.') {
            let g = match tok {
                "e" => E,
                "r" => R,
                "c" => C,
                "i" => I,
                _ => return Err(Error::InvalidWord(format!("unknown symmetry {tok:?}"))),
            };
            acc = acc.compose(g);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn reverse_of_fig1() {
        assert_eq!(p("416253").reverse(), p("352614"));
        assert_eq!(p("1").reverse(), p("1"));
        assert_eq!(p("12").reverse(), p("21"));
    }

    #[test]
    fn complement_of_fig1() {
        assert_eq!(p("416253").complement(), p("361524"));
        assert_eq!(p("1").complement(), p("1"));
        assert_eq!(p("21").complement(), p("12"));
    }

    #[test]
    fn inverse_of_fig1() {
        assert_eq!(p("416253").inverse(), p("246153"));
        for n in 1..=6 {
            let id = Permutation::identity(n);
            assert_eq!(id.inverse(), id);
        }
        assert_eq!(p("312").inverse(), p("231"));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&[3, 6, 4, 2]).unwrap(), p("2431"));
        assert_eq!(normalize(&[1, 2, 3, 4]).unwrap(), p("1234"));
        assert_eq!(normalize(&[9, 0, 7]).unwrap(), p("312"));
        assert_eq!(normalize(&[-5, -9, 100]).unwrap(), p("213"));
        assert!(normalize(&[1, 1]).is_err());
        assert!(normalize(&[]).is_err());
    }

    #[test]
    fn normalize_idempotent_on_permutations() {
        for s in ["1", "21", "416253", "35241"] {
            let q = p(s);
            let w: Vec<i64> = q.word().iter().map(|&v| v as i64).collect();
            assert_eq!(normalize(&w).unwrap(), q);
        }
    }

    #[test]
    fn apply_symmetry_examples() {
        let sigma = p("416253");
        assert_eq!(R.apply(&sigma), p("352614"));
        assert_eq!(Ic.apply(&sigma), sigma.complement().inverse());
        assert_eq!(E.apply(&sigma), sigma);
    }

    #[test]
    fn composition_table_matches_action() {
        let samples = [p("416253"), p("35241"), p("1"), p("21"), p("2413")];
        for &x in &D8_ELEMENTS {
            for &y in &D8_ELEMENTS {
                let z = x.compose(y);
                for s in &samples {
                    assert_eq!(z.apply(s), x.apply(&y.apply(s)), "{x} ∘ {y} != {z}");
                }
            }
        }
    }

    #[test]
    fn group_axioms() {
        // Closure is immediate from the table type; check identity, inverses
        // and the stated relations.
        for &x in &D8_ELEMENTS {
            assert_eq!(E.compose(x), x);
            assert_eq!(x.compose(E), x);
            assert!(D8_ELEMENTS.iter().any(|&y| x.compose(y) == E));
        }
        assert_eq!(R.compose(C), C.compose(R));
        assert_eq!(I.compose(I), E);
        assert_eq!(R.compose(R), E);
        assert_eq!(C.compose(C), E);
    }

    #[test]
    fn orbit_closed_and_small() {
        let sigma = p("416253");
        let orbit: std::collections::BTreeSet<_> =
            D8_ELEMENTS.iter().map(|a| a.apply(&sigma)).collect();
        assert!(orbit.len() <= 8);
        for q in &orbit {
            for g in [R, C, I] {
                assert!(orbit.contains(&g.apply(q)));
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        assert_eq!(p("4 1 6 2 5 3"), p("416253"));
        assert_eq!(p("416253").to_string(), "4 1 6 2 5 3");
        let big: Permutation = "10 3 1 2 4 5 6 7 8 9".parse().unwrap();
        assert_eq!(big.len(), 10);
        assert!("0".parse::<Permutation>().is_err());
        assert!("122".parse::<Permutation>().is_err());
        assert!("1 2 2".parse::<Permutation>().is_err());
        assert!("12345678910".parse::<Permutation>().is_err());
    }

    #[test]
    fn symmetry_parse() {
        assert_eq!("i.c.r".parse::<D8Symmetry>().unwrap(), Icr);
        assert_eq!("r.c".parse::<D8Symmetry>().unwrap(), Rc);
        assert_eq!("e".parse::<D8Symmetry>().unwrap(), E);
        // i∘r∘r = i
        assert_eq!("i.r.r".parse::<D8Symmetry>().unwrap(), I);
    }
}
