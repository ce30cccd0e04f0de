//! Segments of consecutive e-values and the orderings between them.

use crate::rational::Rat;
use crate::{Error, Result};
use std::fmt;

/// Which weight coset a value lives in: `Sp` for the coset `m + Z` carrying
/// markings, `Gl` for the half-integer coset of GL-tempered factors. For
/// generic `m` the two cosets are disjoint.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Coset {
    Gl,
    Sp,
}

/// A run of consecutive e-values `{lo, lo+1, ..., hi}`, all distinct.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub lo: Rat,
    pub hi: Rat,
    pub coset: Coset,
}

impl Segment {
    pub fn new(lo: Rat, hi: Rat, coset: Coset) -> Result<Self> {
        let len = (hi - lo)
            .to_integer()
            .map_err(|_| Error::Invalid(format!("segment [{lo},{hi}] has non-integral span")))?;
        if len < 0 {
            return Err(Error::Invalid(format!("segment [{lo},{hi}] has hi < lo")));
        }
        if coset == Coset::Gl && !(lo * 2).is_integer() {
            return Err(Error::Invalid(format!(
                "GL segment endpoints must be half-integers, got {lo}"
            )));
        }
        Ok(Segment { lo, hi, coset })
    }

    pub fn sp(lo: Rat, hi: Rat) -> Result<Self> {
        Segment::new(lo, hi, Coset::Sp)
    }

    pub fn gl(lo: Rat, hi: Rat) -> Result<Self> {
        Segment::new(lo, hi, Coset::Gl)
    }

    /// Sp segment from integer offsets relative to `m`.
    pub fn sp_off(m: Rat, lo: i64, hi: i64) -> Self {
        Segment {
            lo: m + lo,
            hi: m + hi,
            coset: Coset::Sp,
        }
    }

    /// Number of e-values in the segment.
    pub fn size(&self) -> u32 {
        (self.hi - self.lo).to_integer().expect("validated span") as u32 + 1
    }

    /// True when `v` is one of the segment's e-values.
    pub fn contains_value(&self, v: Rat) -> bool {
        self.lo <= v && v <= self.hi && (v - self.lo).is_integer()
    }

    /// The e-values, ascending.
    pub fn values(&self) -> Vec<Rat> {
        (0..self.size() as i64).map(|k| self.lo + k).collect()
    }

    /// Sum of all e-values of the segment.
    pub fn av(&self) -> Rat {
        (self.lo + self.hi) * (self.size() as i64) * Rat::new(1, 2)
    }

    fn same_coset(&self, other: &Segment) -> Result<()> {
        if self.coset == other.coset {
            Ok(())
        } else {
            Err(Error::CosetMismatch)
        }
    }

    /// Domination: `self.lo <= other.lo <= self.hi <= other.hi`.
    pub fn dominated_by(&self, other: &Segment) -> Result<bool> {
        self.same_coset(other)?;
        Ok(self.dominated_by_unchecked(other))
    }

    /// Domination without the coset guard; false across cosets.
    pub(crate) fn dominated_by_unchecked(&self, other: &Segment) -> bool {
        self.coset == other.coset
            && self.lo <= other.lo
            && other.lo <= self.hi
            && self.hi <= other.hi
    }

    /// The weak order: `self.lo <= other.lo`.
    pub fn precedes(&self, other: &Segment) -> Result<bool> {
        self.same_coset(other)?;
        Ok(self.lo <= other.lo)
    }

    /// Strict nesting: `other.lo < self.lo` and `self.hi < other.hi`.
    pub fn nested_in(&self, other: &Segment) -> Result<bool> {
        self.same_coset(other)?;
        Ok(self.nested_in_unchecked(other))
    }

    pub(crate) fn nested_in_unchecked(&self, other: &Segment) -> bool {
        self.coset == other.coset && other.lo < self.lo && self.hi < other.hi
    }

    /// Disjoint value ranges.
    pub fn range_disjoint(&self, other: &Segment) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "[{}]", self.lo)
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
