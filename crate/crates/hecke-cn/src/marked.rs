//! Marked partitions: multisets of segments with markings on segments that
//! contain the e-value `m`, parameterizing exotic nilpotent orbits.
//!
//! Two marked partitions name the same orbit exactly when their segment
//! multisets agree and their saturated markings agree, so orbit-level
//! functions first pass through [`MarkedPartition::saturate_marking`].

use crate::rational::{is_generic, Rat};
use crate::segment::{Coset, Segment};
use crate::tableau::CentralCharacter;
use crate::{Error, Result};
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// One segment together with its marking.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MarkedSegment {
    pub seg: Segment,
    pub marked: bool,
}

/// A multiset of segments plus a marking map, relative to the ambient
/// parameter `m`. Segments are kept sorted by `(lo, hi, marked)`; this
/// ordering is also the JSON wire contract.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedPartition {
    m: Rat,
    items: Vec<MarkedSegment>,
}

impl MarkedPartition {
    pub fn new(m: Rat, mut items: Vec<MarkedSegment>) -> Result<Self> {
        for it in &items {
            match it.seg.coset {
                Coset::Sp => {
                    if !(it.seg.lo - m).is_integer() {
                        return Err(Error::Invalid(format!(
                            "Sp segment {} is not congruent to m = {m} mod 1",
                            it.seg
                        )));
                    }
                }
                Coset::Gl => {
                    if it.marked {
                        return Err(Error::Invalid(format!(
                            "GL segment {} cannot be marked",
                            it.seg
                        )));
                    }
                }
            }
            if it.marked && !it.seg.contains_value(m) {
                return Err(Error::Invalid(format!(
                    "marked segment {} does not contain m = {m}",
                    it.seg
                )));
            }
        }
        items.sort();
        Ok(MarkedPartition { m, items })
    }

    pub fn empty(m: Rat) -> Self {
        MarkedPartition {
            m,
            items: Vec::new(),
        }
    }

    pub fn m(&self) -> Rat {
        self.m
    }

    pub fn items(&self) -> &[MarkedSegment] {
        &self.items
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.items.iter().map(|it| it.seg).collect()
    }

    /// Total number of e-values across all segments.
    pub fn size(&self) -> u32 {
        self.items.iter().map(|it| it.seg.size()).sum()
    }

    pub fn is_unmarked(&self) -> bool {
        self.items.iter().all(|it| !it.marked)
    }

    pub fn strip_marks(&self) -> MarkedPartition {
        let items = self
            .items
            .iter()
            .map(|it| MarkedSegment {
                seg: it.seg,
                marked: false,
            })
            .collect();
        MarkedPartition { m: self.m, items }
    }

    /// Multiset of segment e-values, split by coset: Sp values as integer
    /// offsets from `m`, GL values verbatim.
    pub fn value_multisets(&self) -> (BTreeMap<i64, u32>, BTreeMap<Rat, u32>) {
        let mut sp = BTreeMap::new();
        let mut gl = BTreeMap::new();
        for it in &self.items {
            for v in it.seg.values() {
                match it.seg.coset {
                    Coset::Sp => {
                        let k = (v - self.m).to_integer().expect("validated Sp segment");
                        *sp.entry(k).or_insert(0) += 1;
                    }
                    Coset::Gl => *gl.entry(v).or_insert(0) += 1,
                }
            }
        }
        (sp, gl)
    }

    /// True when the segment values reproduce exactly the weights of `cc`.
    pub fn adapted_to(&self, cc: &CentralCharacter) -> bool {
        if self.m != cc.m {
            return false;
        }
        let (sp, gl) = self.value_multisets();
        if sp != cc.sp_offsets() {
            return false;
        }
        let mut cc_gl = BTreeMap::new();
        for v in cc.gl_values() {
            *cc_gl.entry(v).or_insert(0u32) += 1;
        }
        gl == cc_gl
    }

    /// The saturated marking: repeatedly mark any segment that contains the
    /// value `m` and is dominated by an already-marked segment, until a fixed
    /// point is reached. The support never changes and markings only grow.
    pub fn saturate_marking(&self) -> MarkedPartition {
        let mut items = self.items.clone();
        loop {
            let mut changed = false;
            for i in 0..items.len() {
                if items[i].marked || !items[i].seg.contains_value(self.m) {
                    continue;
                }
                let dominated = items.iter().enumerate().any(|(j, it)| {
                    j != i && it.marked && items[i].seg.dominated_by_unchecked(&it.seg)
                });
                if dominated {
                    items[i].marked = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        items.sort();
        MarkedPartition { m: self.m, items }
    }

    /// Orbit equality: equal segment multisets with saturated markings that
    /// agree segment-wise. Errors unless both sides carry the same value
    /// multiset (i.e. are adapted to the same central character).
    pub fn same_orbit(&self, other: &MarkedPartition) -> Result<bool> {
        if self.m != other.m || self.value_multisets() != other.value_multisets() {
            return Err(Error::CharacterMismatch);
        }
        Ok(self.saturate_marking().items == other.saturate_marking().items)
    }

    /// Segment data relative to `m` after saturation: `(lo - m, hi - m,
    /// marked)` per Sp segment, sorted. Used to compare parameters across
    /// different values of `m`.
    pub fn relative_shape(&self) -> Vec<(i64, i64, bool)> {
        let sat = self.saturate_marking();
        let mut out: Vec<(i64, i64, bool)> = sat
            .items
            .iter()
            .filter(|it| it.seg.coset == Coset::Sp)
            .map(|it| {
                (
                    (it.seg.lo - self.m).to_integer().expect("Sp segment"),
                    (it.seg.hi - self.m).to_integer().expect("Sp segment"),
                    it.marked,
                )
            })
            .collect();
        out.sort();
        out
    }

    /// Stabilizer rank and dimension of the underlying unmarked orbit:
    /// `rank = r` segments and `dim = r + u`, where `u` counts ordered pairs
    /// of distinct segments `(I, I')` with `I` dominated into `I'`.
    pub fn stabilizer_dims(&self, cc: &CentralCharacter) -> Result<(u32, u32)> {
        if !self.is_unmarked() {
            return Err(Error::MarkedInput);
        }
        if !self.adapted_to(cc) {
            return Err(Error::CharacterMismatch);
        }
        let r = self.items.len() as u32;
        let mut u = 0u32;
        for (i, a) in self.items.iter().enumerate() {
            for (j, b) in self.items.iter().enumerate() {
                if i != j && a.seg.dominated_by_unchecked(&b.seg) {
                    u += 1;
                }
            }
        }
        Ok((r, r + u))
    }

    /// Dimension of the unmarked orbit: `dim G(s) - dim Stab`, where
    /// `dim G(s)` is the sum of squared weight multiplicities of `cc`.
    pub fn orbit_dim(&self, cc: &CentralCharacter) -> Result<i64> {
        let (_, dim_stab) = self.stabilizer_dims(cc)?;
        Ok(cc.dim_g() - dim_stab as i64)
    }

    /// Groups the segments into blocks whose e-ranges overlap, transitively:
    /// segments in one block either nest or share values, while any two
    /// distinct blocks have unlinked (disjoint) e-ranges. Blocks are returned
    /// outermost first, i.e. by ascending hull minimum.
    pub fn nested_components(&self) -> Vec<MarkedPartition> {
        let n = self.items.len();
        if n == 0 {
            return Vec::new();
        }
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(comp: &mut Vec<usize>, i: usize) -> usize {
            if comp[i] != i {
                let root = find(comp, comp[i]);
                comp[i] = root;
            }
            comp[i]
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if !self.items[i].seg.range_disjoint(&self.items[j].seg) {
                    let (ri, rj) = (find(&mut comp, i), find(&mut comp, j));
                    if ri != rj {
                        comp[ri] = rj;
                    }
                }
            }
        }
        let mut blocks: BTreeMap<usize, Vec<MarkedSegment>> = BTreeMap::new();
        for i in 0..n {
            let root = find(&mut comp, i);
            blocks.entry(root).or_default().push(self.items[i]);
        }
        let mut out: Vec<MarkedPartition> = blocks
            .into_values()
            .map(|items| MarkedPartition::new(self.m, items).expect("valid sub-partition"))
            .collect();
        out.sort_by_key(|b| b.items[0].seg.lo);
        out
    }

    /// JSON encoding: `{"segments":[{"lo":"-7/4","hi":"9/4","marked":false},...]}`
    /// with segments sorted by `(lo, hi)`.
    pub fn to_json(&self) -> Value {
        let segs: Vec<Value> = self
            .items
            .iter()
            .map(|it| {
                json!({
                    "lo": it.seg.lo.to_string(),
                    "hi": it.seg.hi.to_string(),
                    "marked": it.marked,
                })
            })
            .collect();
        json!({ "segments": segs })
    }
}

impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, it) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", it.seg, if it.marked { "*" } else { "" })?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Default size cap for orbit enumeration.
pub const DEFAULT_ENUM_CAP: u32 = 12;

/// All orbit representatives adapted to `cc` (Sp coset only), with the
/// default size cap. See [`enumerate_mp_capped`].
pub fn enumerate_mp(cc: &CentralCharacter) -> Result<Vec<MarkedPartition>> {
    enumerate_mp_capped(cc, DEFAULT_ENUM_CAP)
}

/// All ways to split the Sp weight multiset of `cc` into segments, times all
/// markings on `m`-containing segments, reduced modulo orbit equality. The
/// output is sorted and pairwise not `same_orbit`. Requires generic `m` and
/// a character without GL weights.
pub fn enumerate_mp_capped(cc: &CentralCharacter, cap: u32) -> Result<Vec<MarkedPartition>> {
    if !is_generic(cc.m) {
        return Err(Error::NonGeneric(cc.m));
    }
    if cc.has_gl() {
        return Err(Error::Invalid(
            "orbit enumeration expects an Sp-coset character".into(),
        ));
    }
    if cc.size() > cap {
        return Err(Error::CapExceeded {
            size: cc.size(),
            cap,
        });
    }
    let mut supports = Vec::new();
    let mut rem = cc.sp_offsets();
    enum_supports(&mut rem, None, &mut Vec::new(), &mut supports);

    let mut out = BTreeSet::new();
    for support in supports {
        // Distinct m-containing segment classes; marking is all-or-none per
        // class since saturation makes equal segments uniform.
        let mut classes: Vec<(i64, i64)> = support
            .iter()
            .copied()
            .filter(|&(lo, hi)| lo <= 0 && 0 <= hi)
            .collect();
        classes.dedup();
        for mask in 0u32..(1 << classes.len()) {
            let items: Vec<MarkedSegment> = support
                .iter()
                .map(|&(lo, hi)| {
                    let marked = classes
                        .iter()
                        .enumerate()
                        .any(|(b, &cl)| cl == (lo, hi) && mask & (1 << b) != 0);
                    MarkedSegment {
                        seg: Segment::sp_off(cc.m, lo, hi),
                        marked,
                    }
                })
                .collect();
            let mp = MarkedPartition::new(cc.m, items).expect("valid enumeration output");
            out.insert(mp.saturate_marking());
        }
    }
    Ok(out.into_iter().collect())
}

/// Enumerates multiset partitions of `rem` into runs of consecutive distinct
/// values. Segments are listed sorted by `(lo, hi)`; for equal `lo` the `hi`
/// values are chosen non-increasing to avoid duplicates.
fn enum_supports(
    rem: &mut BTreeMap<i64, u32>,
    last: Option<(i64, i64)>,
    cur: &mut Vec<(i64, i64)>,
    out: &mut Vec<Vec<(i64, i64)>>,
) {
    let lo = match rem.keys().next() {
        None => {
            let mut support = cur.clone();
            support.sort();
            out.push(support);
            return;
        }
        Some(&lo) => lo,
    };
    let mut hi_max = lo;
    while rem.contains_key(&(hi_max + 1)) {
        hi_max += 1;
    }
    if let Some((plo, phi)) = last {
        if plo == lo {
            hi_max = hi_max.min(phi);
        }
    }
    for hi in (lo..=hi_max).rev() {
        for v in lo..=hi {
            let c = rem.get_mut(&v).expect("value present");
            *c -= 1;
            if *c == 0 {
                rem.remove(&v);
            }
        }
        cur.push((lo, hi));
        enum_supports(rem, Some((lo, hi)), cur, out);
        cur.pop();
        for v in lo..=hi {
            *rem.entry(v).or_insert(0) += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::tableau::ETableau;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn mp(m: Rat, desc: &[(i64, i64, bool)]) -> MarkedPartition {
        let items = desc
            .iter()
            .map(|&(lo, hi, marked)| MarkedSegment {
                seg: Segment::sp_off(m, lo, hi),
                marked,
            })
            .collect();
        MarkedPartition::new(m, items).unwrap()
    }

    fn cc_of(shape: &str, m: &str) -> CentralCharacter {
        ETableau::new(shape.parse::<Partition>().unwrap(), r(m))
            .central_character()
            .unwrap()
    }

    #[test]
    fn saturate_marks_dominated_segments() {
        let m = r("9/4");
        let x = mp(
            m,
            &[
                (0, 3, true),
                (-1, 1, false),
                (-4, 0, false),
                (-2, -2, false),
            ],
        );
        let sat = x.saturate_marking();
        let marked: Vec<bool> = sat.items().iter().map(|it| it.marked).collect();
        // canonical order: [-4,0] [-2] [-1,1] [0,3]
        assert_eq!(marked, vec![true, false, true, true]);

        let unmarked = x.strip_marks();
        assert_eq!(unmarked.saturate_marking(), unmarked);

        let single = mp(m, &[(0, 3, true)]);
        assert_eq!(single.saturate_marking(), single);
    }

    #[test]
    fn same_orbit_examples() {
        let m = r("9/4");
        let out = mp(
            m,
            &[
                (0, 3, true),
                (-1, 1, false),
                (-4, 0, false),
                (-2, -2, false),
            ],
        );
        let all3 = mp(
            m,
            &[(0, 3, true), (-1, 1, true), (-4, 0, true), (-2, -2, false)],
        );
        assert!(out.same_orbit(&all3).unwrap());
        assert!(out.same_orbit(&out).unwrap());

        let a = mp(m, &[(0, 0, true)]);
        let b = mp(m, &[(0, 0, false)]);
        assert!(!a.same_orbit(&b).unwrap());

        let other = mp(m, &[(0, 1, false)]);
        assert_eq!(a.same_orbit(&other), Err(Error::CharacterMismatch));
    }

    #[test]
    fn stabilizer_dim_examples() {
        let m = r("9/4");
        let cc = cc_of("4,3,3,2,1", "9/4");
        let x = mp(
            m,
            &[
                (0, 3, false),
                (-1, 1, false),
                (-4, 0, false),
                (-2, -2, false),
            ],
        );
        assert_eq!(x.stabilizer_dims(&cc).unwrap(), (4, 7));

        let cc1 = cc_of("3", "3/4");
        let full = mp(r("3/4"), &[(0, 2, false)]);
        assert_eq!(full.stabilizer_dims(&cc1).unwrap(), (1, 1));

        let marked = mp(
            m,
            &[
                (0, 3, true),
                (-1, 1, false),
                (-4, 0, false),
                (-2, -2, false),
            ],
        );
        assert_eq!(marked.stabilizer_dims(&cc), Err(Error::MarkedInput));
    }

    #[test]
    fn disjoint_singletons_have_torus_stabilizer() {
        let m = r("9/4");
        let cc = CentralCharacter::new(m, vec![(m, Coset::Sp), (m - 2, Coset::Sp)]).unwrap();
        let x = mp(m, &[(0, 0, false), (-2, -2, false)]);
        assert_eq!(x.stabilizer_dims(&cc).unwrap(), (2, 2));
        assert_eq!(x.orbit_dim(&cc).unwrap(), 0);
    }

    #[test]
    fn orbit_dim_examples() {
        // single-hook character, full segment: n - 1
        let cc = cc_of("3", "9/4");
        let full = mp(r("9/4"), &[(0, 2, false)]);
        assert_eq!(full.orbit_dim(&cc).unwrap(), 2);
        // all singletons: 0
        let sing = mp(r("9/4"), &[(0, 0, false), (1, 1, false), (2, 2, false)]);
        assert_eq!(sing.orbit_dim(&cc).unwrap(), 0);
        // character of (1,1) at m > 1, segments [m],[m-1]
        let cc = cc_of("1,1", "5/4");
        let x = mp(r("5/4"), &[(0, 0, false), (-1, -1, false)]);
        assert_eq!(x.orbit_dim(&cc).unwrap(), 0);
    }

    #[test]
    fn enumerate_single_hook_counts() {
        for n in 1..=6u32 {
            let shape = Partition::new(vec![1; n as usize]).unwrap();
            let cc = ETableau::new(shape, r("1/4")).central_character().unwrap();
            let orbits = enumerate_mp(&cc).unwrap();
            assert_eq!(orbits.len() as u64, 1 << n, "n = {n}");
            for w in orbits.windows(2) {
                assert!(!w[0].same_orbit(&w[1]).unwrap());
            }
        }
        let cc = CentralCharacter::new(r("3/4"), vec![(r("3/4"), Coset::Sp)]).unwrap();
        assert_eq!(enumerate_mp(&cc).unwrap().len(), 2);
    }

    #[test]
    fn enumeration_respects_cap() {
        let shape = Partition::new(vec![5, 4, 4]).unwrap();
        let cc = ETableau::new(shape, r("1/4")).central_character().unwrap();
        assert_eq!(
            enumerate_mp(&cc),
            Err(Error::CapExceeded { size: 13, cap: 12 })
        );
    }

    #[test]
    fn enumeration_rejects_bad_characters() {
        let half = r("1/2");
        let cc = CentralCharacter::new(half, vec![(half, Coset::Sp)]).unwrap();
        assert_eq!(enumerate_mp(&cc), Err(Error::NonGeneric(half)));

        let m = r("3/4");
        let cc = CentralCharacter::new(m, vec![(m, Coset::Sp), (r("1/2"), Coset::Gl)]).unwrap();
        assert!(matches!(enumerate_mp(&cc), Err(Error::Invalid(_))));
    }

    #[test]
    fn nested_components_examples() {
        let m = r("9/4");
        let fold = ETableau::new("4,3,3,2,1".parse().unwrap(), m)
            .fold_to_distinguished()
            .unwrap();
        assert_eq!(fold.nested_components().len(), 1);

        let two = mp(m, &[(0, 1, false), (-3, -3, false)]);
        let comps = two.nested_components();
        assert_eq!(comps.len(), 2);
        // outermost first by hull lo
        assert_eq!(comps[0].items()[0].seg, Segment::sp_off(m, -3, -3));

        let one = mp(m, &[(0, 2, true)]);
        assert_eq!(one.nested_components().len(), 1);
    }

    #[test]
    fn json_wire_format() {
        let m = r("9/4");
        let x = mp(m, &[(0, 3, false), (-7, 0, false)]);
        let s = serde_json::to_string(&x.to_json()).unwrap();
        assert_eq!(
            s,
            r#"{"segments":[{"lo":"-19/4","hi":"9/4","marked":false},{"lo":"9/4","hi":"21/4","marked":false}]}"#
        );
    }
}
