//! Classical permutation statistics, individually and bundled into vectors
//! for distribution comparisons between classes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::enumerate::ClassSet;
use crate::error::Error;
use crate::perm::Permutation;

/// The statistics in play. Boundary conventions: a descent is an index
/// i in {1..n-1} with p(i) > p(i+1); valleys, peaks, double descents and
/// double ascents count interior indices i in {2..n-1}; runs have length at
/// least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatName {
    /// number of descents
    Des,
    /// major index: sum of the descent indices
    Maj,
    /// number of components in the finest blockwise-increasing concatenation
    Comp,
    /// right-to-left maxima
    Rmax,
    /// right-to-left minima
    Rmin,
    /// left-to-right maxima
    Lmax,
    /// left-to-right minima
    Lmin,
    /// valleys: p(i-1) > p(i) < p(i+1)
    Valley,
    /// peaks: p(i-1) < p(i) > p(i+1)
    Peak,
    /// double descents: p(i-1) > p(i) > p(i+1)
    Ddes,
    /// double ascents: p(i-1) < p(i) < p(i+1)
    Dasc,
    /// length of the rightmost increasing run
    Rir,
    /// length of the rightmost decreasing run
    Rdr,
    /// length of the leftmost increasing run
    Lir,
    /// length of the leftmost decreasing run
    Ldr,
    /// index of the maximal element
    Indmax,
    /// largest k with n, n-1, ..., n-k+1 a subsequence (in this order)
    Zeil,
    /// largest k with p(1) >= p(i) for all i <= k
    Slmax,
}

use StatName::*;

/// All statistic names, in declaration order.
pub const ALL_STATS: [StatName; 18] = [
    Des, Maj, Comp, Rmax, Rmin, Lmax, Lmin, Valley, Peak, Ddes, Dasc, Rir, Rdr, Lir, Ldr,
    Indmax, Zeil, Slmax,
];

/// The 15-tuple whose equidistribution on Id(S.S) and Id(S.r.S) is checked.
pub const TUPLE_15: [StatName; 15] = [
    Des, Maj, Rmax, Lmax, Valley, Peak, Ddes, Dasc, Zeil, Indmax, Rir, Rdr, Lir, Ldr, Slmax,
];

/// The (des, lmax, comp) triple of the Baxter-class experiment.
pub const TRIPLE_DES_LMAX_COMP: [StatName; 3] = [Des, Lmax, Comp];

impl fmt::Display for StatName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Des => "des",
            Maj => "maj",
            Comp => "comp",
            Rmax => "rmax",
            Rmin => "rmin",
            Lmax => "lmax",
            Lmin => "lmin",
            Valley => "valley",
            Peak => "peak",
            Ddes => "ddes",
            Dasc => "dasc",
            Rir => "rir",
            Rdr => "rdr",
            Lir => "lir",
            Ldr => "ldr",
            Indmax => "indmax",
            Zeil => "zeil",
            Slmax => "slmax",
        };
        write!(f, "{s}")
    }
}

impl FromStr for StatName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ALL_STATS
            .iter()
            .find(|name| name.to_string() == s.trim())
            .copied()
            .ok_or_else(|| Error::UnknownStat(s.to_string()))
    }
}

/// Evaluates one statistic.
pub fn stat(name: StatName, p: &Permutation) -> u64 {
    let w = p.word();
    let n = w.len();
    match name {
        Des => descent_indices(w).count() as u64,
        Maj => descent_indices(w).map(|i| i as u64).sum(),
        Comp => {
            let mut components = 0u64;
            let mut prefix_max = 0u32;
            for (i, &v) in w.iter().enumerate() {
                prefix_max = prefix_max.max(v);
                if prefix_max as usize == i + 1 {
                    components += 1;
                }
            }
            components
        }
        Rmax => {
            let mut count = 0u64;
            let mut best = 0u32;
            for &v in w.iter().rev() {
                if v > best {
                    count += 1;
                    best = v;
                }
            }
            count
        }
        Rmin => {
            let mut count = 0u64;
            let mut best = u32::MAX;
            for &v in w.iter().rev() {
                if v < best {
                    count += 1;
                    best = v;
                }
            }
            count
        }
        Lmax => {
            let mut count = 0u64;
            let mut best = 0u32;
            for &v in w {
                if v > best {
                    count += 1;
                    best = v;
                }
            }
            count
        }
        Lmin => {
            let mut count = 0u64;
            let mut best = u32::MAX;
            for &v in w {
                if v < best {
                    count += 1;
                    best = v;
                }
            }
            count
        }
        Valley => interior(w, |a, b, c| a > b && b < c),
        Peak => interior(w, |a, b, c| a < b && b > c),
        Ddes => interior(w, |a, b, c| a > b && b > c),
        Dasc => interior(w, |a, b, c| a < b && b < c),
        Rir => {
            let mut len = 1usize;
            while len < n && w[n - len - 1] < w[n - len] {
                len += 1;
            }
            len as u64
        }
        Rdr => {
            let mut len = 1usize;
            while len < n && w[n - len - 1] > w[n - len] {
                len += 1;
            }
            len as u64
        }
        Lir => {
            let mut len = 1usize;
            while len < n && w[len - 1] < w[len] {
                len += 1;
            }
            len as u64
        }
        Ldr => {
            let mut len = 1usize;
            while len < n && w[len - 1] > w[len] {
                len += 1;
            }
            len as u64
        }
        Indmax => p.position_of(n as u32) as u64,
        Zeil => {
            let mut k = 1u64;
            let mut last = p.position_of(n as u32);
            for v in (1..n as u32).rev() {
                let pos = p.position_of(v);
                if pos > last {
                    k += 1;
                    last = pos;
                } else {
                    break;
                }
            }
            k
        }
        Slmax => {
            let mut k = 1usize;
            while k < n && w[k] < w[0] {
                k += 1;
            }
            k as u64
        }
    }
}

fn descent_indices(w: &[u32]) -> impl Iterator<Item = usize> + '_ {
    w.windows(2)
        .enumerate()
        .filter(|(_, pair)| pair[0] > pair[1])
        .map(|(i, _)| i + 1)
}

fn interior(w: &[u32], pred: impl Fn(u32, u32, u32) -> bool) -> u64 {
    w.windows(3)
        .filter(|t| pred(t[0], t[1], t[2]))
        .count() as u64
}

/// An ordered tuple of statistic values.
pub type StatVector = Vec<u64>;

/// Evaluates the named statistics componentwise.
pub fn stat_vector(names: &[StatName], p: &Permutation) -> StatVector {
    names.iter().map(|&s| stat(s, p)).collect()
}

/// The multiset of stat vectors over a class, as vector -> multiplicity.
pub fn distribution(names: &[StatName], class: &ClassSet) -> BTreeMap<StatVector, u64> {
    let mut dist = BTreeMap::new();
    for p in class {
        *dist.entry(stat_vector(names, p)).or_insert(0) += 1;
    }
    dist
}

/// CSV rows "v1,...,vk,count" under a header of the statistic names, rows in
/// the (numeric, lexicographic) order of the value vectors.
pub fn distribution_csv(names: &[StatName], dist: &BTreeMap<StatVector, u64>) -> String {
    let mut out = String::new();
    let header: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    out.push_str(&header.join(","));
    out.push_str(",count\n");
    for (vector, count) in dist {
        let row: Vec<String> = vector.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(","));
        out.push_str(&format!(",{count}\n"));
    }
    out
}
