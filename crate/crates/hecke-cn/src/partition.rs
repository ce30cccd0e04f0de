//! Integer partitions, bipartitions, and box coordinates.

use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is allowed everywhere and prints as `0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Invalid(format!(
                    "parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::Invalid("parts must be positive".into()));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based row index, or 0 past the last row.
    pub fn part(&self, row: u32) -> u32 {
        if row == 0 || row as usize > self.parts.len() {
            0
        } else {
            self.parts[row as usize - 1]
        }
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut t = vec![0u32; cols];
        for &p in &self.parts {
            for c in t.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: t }
    }

    /// Number of diagonal boxes, i.e. the number of principal hooks.
    pub fn durfee(&self) -> u32 {
        let mut d = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            if p as usize > i {
                d = i as u32 + 1;
            } else {
                break;
            }
        }
        d
    }

    pub fn contains_box(&self, b: BoxPos) -> bool {
        b.row >= 1 && b.col >= 1 && b.col <= self.part(b.row)
    }

    /// All partitions of `n`, in descending lexicographic order of parts.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let hi = max.min(rest);
            for p in (1..=hi).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }

    /// p(n), the number of partitions of n.
    pub fn count(n: u32) -> u64 {
        let n = n as usize;
        let mut p = vec![0u64; n + 1];
        p[0] = 1;
        for part in 1..=n {
            for tot in part..=n {
                p[tot] += p[tot - part];
            }
        }
        p[n]
    }

    /// P2(n) = sum_k p(k) p(n-k), the number of bipartitions of n.
    pub fn bipartition_count(n: u32) -> u64 {
        (0..=n)
            .map(|k| Partition::count(k) * Partition::count(n - k))
            .sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts, e.g. `"4,3,3,2,1"`. `"0"` and the empty
    /// string denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

/// An ordered pair of partitions, labelling an irreducible representation of
/// the hyperoctahedral group W_n. Prints as `{(4,3,3,1)(2)}` with `(0)` for
/// an empty side.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    pub left: Partition,
    pub right: Partition,
}

impl Bipartition {
    pub fn new(left: Partition, right: Partition) -> Self {
        Bipartition { left, right }
    }

    pub fn size(&self) -> u32 {
        self.left.n() + self.right.n()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{({})({})}}", self.left, self.right)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A box of a Young diagram in matrix convention: `row >= 1` counted from the
/// top, `col >= 1` counted from the left. Diagonal boxes have `row == col`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BoxPos {
    pub row: u32,
    pub col: u32,
}

impl BoxPos {
    pub fn new(row: u32, col: u32) -> Self {
        BoxPos { row, col }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display() {
        let p: Partition = "4,3,3,2,1".parse().unwrap();
        assert_eq!(p.parts(), &[4, 3, 3, 2, 1]);
        assert_eq!(p.to_string(), "4,3,3,2,1");
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,4".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_and_durfee() {
        let p: Partition = "4,3,3,2,1".parse().unwrap();
        assert_eq!(p.conjugate().parts(), &[5, 4, 3, 1]);
        assert_eq!(p.durfee(), 3);
        assert_eq!(Partition::empty().durfee(), 0);
        assert_eq!("1,1".parse::<Partition>().unwrap().durfee(), 1);
    }

    #[test]
    fn counts() {
        let expected = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(Partition::count(n as u32), e);
            assert_eq!(Partition::all(n as u32).len() as u64, e);
        }
        assert_eq!(Partition::bipartition_count(2), 5);
        assert_eq!(Partition::bipartition_count(4), 20);
    }

    #[test]
    fn bipartition_display() {
        let b = Bipartition::new("4,3,3,1".parse().unwrap(), "2".parse().unwrap());
        assert_eq!(b.to_string(), "{(4,3,3,1)(2)}");
        let s = Bipartition::new("3,1".parse().unwrap(), Partition::empty());
        assert_eq!(s.to_string(), "{(3,1)(0)}");
    }
}
