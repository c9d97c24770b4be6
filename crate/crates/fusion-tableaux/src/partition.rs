//! Integer partitions: the index set for tableau shapes, symmetric-function
//! bases, and Kostka entries.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::Result;

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty partition is allowed and denotes the unit in every basis it
/// indexes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly
    /// decreasing or contain zeros.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The two-row shape `(a, b)`; `b` may be zero (dropped).
    pub fn two_row(a: u32, b: u32) -> Result<Self> {
        if b > a {
            return Err(Error::domain(format!("invalid two-row shape ({a}, {b})")));
        }
        let parts = if b == 0 { vec![a] } else { vec![a, b] };
        Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`, the number being partitioned.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `l(λ)`, the number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-indexed), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of the value `v` among the parts.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// Cellwise containment: `other_i ≤ self_i` for all rows of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= self.part(i))
    }

    pub fn fits_in_box(&self, rows: u32, cols: u32) -> bool {
        self.len() as u32 <= rows && self.part(0) <= cols
    }

    /// Dominance order: `self ≥ other` iff every prefix sum of `self` is at
    /// least the corresponding prefix sum of `other`. Only meaningful for
    /// equal sizes.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiset union with another partition (used for products of power
    /// sums and complete functions).
    pub fn merged(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Adds a single part.
    pub fn with_part(&self, v: u32) -> Partition {
        debug_assert!(v > 0);
        let mut parts = self.parts.clone();
        let pos = parts.partition_point(|&p| p >= v);
        parts.insert(pos, v);
        Partition { parts }
    }

    /// Removes one occurrence of `v`, or returns `None` if absent.
    pub fn without_part(&self, v: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == v)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// All partitions of `n` in reverse-lexicographic order:
    /// `(n), (n-1,1), …, (1^n)`.
    pub fn all_of(n: u32) -> Vec<Partition> {
        Partition::all_bounded(n, n as usize, n)
    }

    /// Partitions of `n` with at most `max_parts` parts, each at most
    /// `max_part`, in reverse-lexicographic order.
    pub fn all_bounded(n: u32, max_parts: usize, max_part: u32) -> Vec<Partition> {
        fn rec(
            n: u32,
            max_parts: usize,
            max_part: u32,
            prefix: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            if max_parts == 0 {
                return;
            }
            for p in (1..=n.min(max_part)).rev() {
                prefix.push(p);
                rec(n - p, max_parts - 1, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_parts, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions (of every size) inside a `rows × cols` box, ordered by
    /// size and reverse-lexicographically within each size.
    pub fn all_in_box(rows: u32, cols: u32) -> Vec<Partition> {
        (0..=rows * cols)
            .flat_map(|n| Partition::all_bounded(n, rows as usize, cols))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

// Partitions read better as `(4,2,1)` than as a struct dump.
impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(de)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_increasing_and_zero_parts() {
        assert!(Partition::new(vec![2, 4, 1]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn size_and_length() {
        let p = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(p.size(), 6);
        assert_eq!(p.len(), 3);
        assert_eq!(p.part(5), 0);
    }

    #[test]
    fn reverse_lex_enumeration() {
        let got: Vec<Vec<u32>> = Partition::all_of(4)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn box_enumeration_counts() {
        // Partitions inside a k×k box are counted by C(2k, k).
        assert_eq!(Partition::all_in_box(1, 1).len(), 2);
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
        assert_eq!(Partition::all_in_box(3, 3).len(), 20);
    }

    #[test]
    fn dominance() {
        let a = Partition::new(vec![3, 1]).unwrap();
        let b = Partition::new(vec![2, 2]).unwrap();
        assert!(a.dominates(&b));
        assert!(!b.dominates(&a));
        assert!(a.dominates(&a));
    }

    #[test]
    fn merged_and_part_edits() {
        let a = Partition::new(vec![3, 1]).unwrap();
        let b = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(a.merged(&b).parts(), &[3, 2, 1, 1]);
        assert_eq!(a.with_part(2).parts(), &[3, 2, 1]);
        assert_eq!(a.without_part(3).unwrap().parts(), &[1]);
        assert!(a.without_part(2).is_none());
    }

    #[test]
    fn serde_round_trip() {
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[4,2,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
