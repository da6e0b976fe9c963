//! Subsets of the simple roots as bitmasks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of simple roots. Bit `i` stands for the simple root with label `i + 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSubset(pub u16);

impl RootSubset {
    pub const EMPTY: RootSubset = RootSubset(0);

    /// All simple roots of a system of the given rank.
    pub fn full(rank: usize) -> Self {
        RootSubset(((1u32 << rank) - 1) as u16)
    }

    /// The subset containing only the root at position `pos` (zero based).
    pub fn single(pos: usize) -> Self {
        RootSubset(1 << pos)
    }

    /// Builds a subset from one-based labels, checking them against `rank`.
    pub fn from_labels(labels: &[usize], rank: usize) -> Result<Self> {
        let mut bits = 0u16;
        for &l in labels {
            if l == 0 || l > rank {
                return Err(Error::IndexOutOfRange { index: l, rank });
            }
            bits |= 1 << (l - 1);
        }
        Ok(RootSubset(bits))
    }

    /// Parses `"1,3,4"`; the empty string (or `{}`) is the empty set.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let t = text.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if t.is_empty() {
            return Ok(RootSubset::EMPTY);
        }
        let labels = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad simple root label {:?}", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_labels(&labels, rank)
    }

    pub fn contains(self, pos: usize) -> bool {
        self.0 >> pos & 1 == 1
    }

    pub fn insert(&mut self, pos: usize) {
        self.0 |= 1 << pos;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Self) -> Self {
        RootSubset(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        RootSubset(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        RootSubset(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    /// Zero-based positions in increasing order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |&i| self.contains(i))
    }

    /// One-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.positions().map(|i| i + 1).collect()
    }

    /// Every subset of the full set of the given rank, in increasing bitmask order.
    pub fn all(rank: usize) -> impl Iterator<Item = RootSubset> {
        (0..(1u32 << rank)).map(|b| RootSubset(b as u16))
    }

    /// Comma separated labels, the inverse of [`RootSubset::parse`].
    pub fn to_list(self) -> String {
        self.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let s = RootSubset::parse("3, 1,4", 6).unwrap();
        assert_eq!(s.labels(), vec![1, 3, 4]);
        assert_eq!(RootSubset::parse(&s.to_list(), 6).unwrap(), s);
        assert_eq!(RootSubset::parse("", 6).unwrap(), RootSubset::EMPTY);
        assert_eq!(s.to_string(), "{1,3,4}");
    }

    #[test]
    fn labels_are_range_checked() {
        assert!(RootSubset::parse("7", 6).is_err());
        assert!(RootSubset::parse("0", 6).is_err());
        assert!(RootSubset::parse("x", 6).is_err());
    }

    #[test]
    fn set_operations() {
        let a = RootSubset::from_labels(&[1, 2], 4).unwrap();
        let b = RootSubset::from_labels(&[2, 3], 4).unwrap();
        assert_eq!(a.union(b).labels(), vec![1, 2, 3]);
        assert_eq!(a.intersection(b).labels(), vec![2]);
        assert_eq!(a.difference(b).labels(), vec![1]);
        assert!(a.intersection(b).is_subset_of(a));
        assert_eq!(RootSubset::all(3).count(), 8);
        assert_eq!(RootSubset::full(8).len(), 8);
    }
}
