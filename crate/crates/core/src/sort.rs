//! The stack, tack and bubble sorting operators and their compositions with
//! the symmetries of the square.
//!
//! The operators work on arbitrary words of distinct integers because the
//! defining recursions destructure a permutation into factors that are not
//! permutations themselves.

use std::fmt;
use std::str::FromStr;

use crate::enumerate::{self, ClassSet};
use crate::error::Error;
use crate::perm::{D8Symmetry, Permutation};

/// One pass of stack sorting, by the recursion S(LnR) = S(L) S(R) n with
/// S(ε) = ε, splitting at the maximum.
pub fn stack_sort_rec(word: &[u32]) -> Vec<u32> {
    match argmax(word) {
        None => Vec::new(),
        Some(m) => {
            let mut out = stack_sort_rec(&word[..m]);
            out.extend(stack_sort_rec(&word[m + 1..]));
            out.push(word[m]);
            out
        }
    }
}

/// One pass of stack sorting, simulated with a stack kept increasing from
/// top to bottom: push the next letter if it is smaller than the top,
/// otherwise pop to the output.
pub fn stack_sort_iter(p: &Permutation) -> Permutation {
    let mut out = Vec::with_capacity(p.len());
    let mut stack: Vec<u32> = Vec::new();
    for &v in p.word() {
        while let Some(&top) = stack.last() {
            if v > top {
                out.push(stack.pop().unwrap());
            } else {
                break;
            }
        }
        stack.push(v);
    }
    while let Some(v) = stack.pop() {
        out.push(v);
    }
    Permutation::from_word(out).expect("stack sorting permutes the word")
}

/// Tack sorting: T(LnR) = T(R) T(L) n with T(ε) = ε.
pub fn tack_sort(word: &[u32]) -> Vec<u32> {
    match argmax(word) {
        None => Vec::new(),
        Some(m) => {
            let mut out = tack_sort(&word[m + 1..]);
            out.extend(tack_sort(&word[..m]));
            out.push(word[m]);
            out
        }
    }
}

/// Bubble sort: B(LnR) = B(L) R n with B(ε) = ε.
pub fn bubble_sort(word: &[u32]) -> Vec<u32> {
    match argmax(word) {
        None => Vec::new(),
        Some(m) => {
            let mut out = bubble_sort(&word[..m]);
            out.extend_from_slice(&word[m + 1..]);
            out.push(word[m]);
            out
        }
    }
}

fn argmax(word: &[u32]) -> Option<usize> {
    word.iter()
        .enumerate()
        .max_by_key(|&(_, v)| v)
        .map(|(i, _)| i)
}

/// One operator in a composition: a sorting pass or a symmetry generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SortOp {
    Stack,
    Tack,
    Bubble,
    Sym(D8Symmetry),
}

impl SortOp {
    fn apply(self, p: &Permutation) -> Permutation {
        match self {
            SortOp::Stack => {
                Permutation::from_word(stack_sort_rec(p.word())).expect("permutes")
            }
            SortOp::Tack => Permutation::from_word(tack_sort(p.word())).expect("permutes"),
            SortOp::Bubble => {
                Permutation::from_word(bubble_sort(p.word())).expect("permutes")
            }
            SortOp::Sym(a) => a.apply(p),
        }
    }
}

impl fmt::Display for SortOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortOp::Stack => write!(f, "S"),
            SortOp::Tack => write!(f, "T"),
            SortOp::Bubble => write!(f, "B"),
            SortOp::Sym(a) => write!(f, "{a}"),
        }
    }
}

/// A composition of sorting operators and symmetries, applied right to left:
/// "S.i.S" sorts, inverts, sorts again.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SorterSpec {
    ops: Vec<SortOp>,
}

impl SorterSpec {
    pub fn new(ops: Vec<SortOp>) -> Result<Self, Error> {
        if ops.is_empty() {
            return Err(Error::InvalidSorterSpec("empty composition".into()));
        }
        Ok(SorterSpec { ops })
    }

    pub fn ops(&self) -> &[SortOp] {
        &self.ops
    }

    /// Applies the composition, rightmost operator first.
    pub fn apply(&self, p: &Permutation) -> Permutation {
        let mut q = p.clone();
        for op in self.ops.iter().rev() {
            q = op.apply(&q);
        }
        q
    }

    /// True iff the composition sorts `p` to the identity.
    pub fn sorts(&self, p: &Permutation) -> bool {
        self.apply(p).is_identity()
    }
}

impl FromStr for SorterSpec {
    type Err = Error;

    /// Grammar: "S | T | B | r | c | i" joined by ".", leftmost applied last.
    fn from_str(s: &str) -> Result<Self, Error> {
        let ops = s
            .split('.')
            .map(|tok| match tok.trim() {
                "S" => Ok(SortOp::Stack),
                "T" => Ok(SortOp::Tack),
                "B" => Ok(SortOp::Bubble),
                "r" => Ok(SortOp::Sym(D8Symmetry::R)),
                "c" => Ok(SortOp::Sym(D8Symmetry::C)),
                "i" => Ok(SortOp::Sym(D8Symmetry::I)),
                "e" => Ok(SortOp::Sym(D8Symmetry::E)),
                t => Err(Error::InvalidSorterSpec(format!("unknown operator {t:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        SorterSpec::new(ops)
    }
}

impl fmt::Display for SorterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, op) in self.ops.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{op}")?;
        }
        Ok(())
    }
}

/// Applies a composition to a permutation (right to left).
pub fn apply_sorter(spec: &SorterSpec, p: &Permutation) -> Permutation {
    spec.apply(p)
}

/// Membership in Id(spec): the composition maps p to the identity.
pub fn is_sorted_by(spec: &SorterSpec, p: &Permutation) -> bool {
    spec.sorts(p)
}

/// Id(spec) ∩ S_n, by filtering all n! permutations.
pub fn id_class(spec: &SorterSpec, n: usize) -> Result<ClassSet, Error> {
    enumerate::filter_sn(n, |p| spec.sorts(p))
}
