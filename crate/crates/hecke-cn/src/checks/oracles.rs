//! Independent brute-force oracles used to validate the main algorithms.
//! These deliberately avoid the library's own enumeration and closure code
//! paths: segmentations are regenerated from scratch and the closure order
//! is decided by quiver rank inequalities instead of move reachability.

use crate::marked::MarkedPartition;
use crate::partition::Partition;
use crate::rational::Rat;
use crate::segment::Coset;
use crate::tableau::ETableau;
use crate::Result;
use std::collections::BTreeMap;

/// All ways to split a value multiset (integer offsets, with multiplicity)
/// into segments of consecutive distinct values. Independent re-derivation
/// used to check enumeration counts: plain recursive set partitioning with
/// a run-validity filter.
pub fn brute_force_segmentations(values: &BTreeMap<i64, u32>) -> Vec<Vec<(i64, i64)>> {
    let mut flat = Vec::new();
    for (&v, &c) in values {
        flat.extend(std::iter::repeat_n(v, c as usize));
    }
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<i64>> = Vec::new();
    split(&flat, 0, &mut blocks, &mut out);
    out.sort();
    out.dedup();
    out
}

fn split(flat: &[i64], idx: usize, blocks: &mut Vec<Vec<i64>>, out: &mut Vec<Vec<(i64, i64)>>) {
    if idx == flat.len() {
        let mut segs = Vec::new();
        for b in blocks.iter() {
            let lo = *b.iter().min().expect("nonempty block");
            let hi = *b.iter().max().expect("nonempty block");
            // must be a run of distinct consecutive values
            if b.len() as i64 != hi - lo + 1 {
                return;
            }
            let mut sorted = b.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != b.len() {
                return;
            }
            segs.push((lo, hi));
        }
        segs.sort();
        out.push(segs);
        return;
    }
    let v = flat[idx];
    for i in 0..blocks.len() {
        // early filter: adding v must keep the block a duplicate-free set
        if blocks[i].contains(&v) {
            continue;
        }
        blocks[i].push(v);
        split(flat, idx + 1, blocks, out);
        blocks[i].pop();
    }
    blocks.push(vec![v]);
    split(flat, idx + 1, blocks, out);
    blocks.pop();
}

/// Number of orbit classes over a value multiset, counted independently:
/// for every segmentation, every subset of the 0-containing segments is
/// marked and the marking is saturated locally (a 0-containing segment
/// dominated by a marked one becomes marked); distinct saturated pairs of
/// support and marking are counted once.
pub fn brute_force_orbit_count(values: &BTreeMap<i64, u32>) -> u64 {
    let mut classes: std::collections::BTreeSet<Vec<(i64, i64, bool)>> =
        std::collections::BTreeSet::new();
    for segs in brute_force_segmentations(values) {
        let markable: Vec<usize> = segs
            .iter()
            .enumerate()
            .filter(|&(_, &(lo, hi))| lo <= 0 && 0 <= hi)
            .map(|(i, _)| i)
            .collect();
        for mask in 0u32..(1 << markable.len()) {
            let mut marked = vec![false; segs.len()];
            for (bit, &i) in markable.iter().enumerate() {
                marked[i] = mask & (1 << bit) != 0;
            }
            // local saturation under domination
            loop {
                let mut changed = false;
                for &i in &markable {
                    if marked[i] {
                        continue;
                    }
                    let (lo, hi) = segs[i];
                    let dominated = segs.iter().enumerate().any(|(j, &(lo2, hi2))| {
                        j != i && marked[j] && lo <= lo2 && lo2 <= hi && hi <= hi2
                    });
                    if dominated {
                        marked[i] = true;
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
            let mut tagged: Vec<(i64, i64, bool)> = segs
                .iter()
                .zip(&marked)
                .map(|(&(lo, hi), &mk)| (lo, hi, mk))
                .collect();
            tagged.sort();
            classes.insert(tagged);
        }
    }
    classes.len() as u64
}

/// Rank numbers of a multisegment: for every interval `[a, b]`, the number
/// of segments containing it. Degeneration (orbit closure) of equioriented
/// type A quiver representations is exactly pointwise rank inequality.
fn rank_numbers(segs: &[(i64, i64)]) -> BTreeMap<(i64, i64), u32> {
    let mut ranks = BTreeMap::new();
    let lo = segs.iter().map(|s| s.0).min().unwrap_or(0);
    let hi = segs.iter().map(|s| s.1).max().unwrap_or(-1);
    for a in lo..=hi {
        for b in a..=hi {
            let count = segs.iter().filter(|&&(c, d)| c <= a && b <= d).count() as u32;
            ranks.insert((a, b), count);
        }
    }
    ranks
}

/// Closure order by rank inequalities: `small` lies in the closure of `big`
/// iff every rank number of `small` is at most the corresponding rank number
/// of `big`. Both must carry the same value multiset.
pub fn rank_oracle_leq(small: &[(i64, i64)], big: &[(i64, i64)]) -> bool {
    let ra = rank_numbers(small);
    let rb = rank_numbers(big);
    ra.iter()
        .all(|(k, &v)| v <= rb.get(k).copied().unwrap_or(0))
}

fn sp_support(mp: &MarkedPartition) -> Vec<(i64, i64)> {
    let m = mp.m();
    let mut out: Vec<(i64, i64)> = mp
        .items()
        .iter()
        .filter(|it| it.seg.coset == Coset::Sp)
        .map(|it| {
            (
                it.seg.lo.int_diff(m).expect("Sp segment"),
                it.seg.hi.int_diff(m).expect("Sp segment"),
            )
        })
        .collect();
    out.sort();
    out
}

/// For one character: merge-move reachability between unmarked orbits must
/// agree with the rank-function closure oracle on every ordered pair.
/// Returns the list of disagreements.
pub fn compare_reachability_with_rank_oracle(sigma: &Partition, m: Rat) -> Result<Vec<String>> {
    let cc = ETableau::new(sigma.clone(), m).central_character()?;
    let supports: Vec<MarkedPartition> = crate::marked::enumerate_mp_capped(&cc, 14)?
        .into_iter()
        .map(|mp| mp.strip_marks())
        .collect();
    let mut unmarked: Vec<MarkedPartition> = supports;
    unmarked.sort();
    unmarked.dedup();
    let mut failures = Vec::new();
    for a in &unmarked {
        for b in &unmarked {
            let by_moves = crate::poset::closure_leq(a, b, &cc)?;
            let by_ranks = rank_oracle_leq(&sp_support(a), &sp_support(b));
            if by_moves != by_ranks {
                failures.push(format!(
                    "sigma={sigma} m={m}: {a} <= {b}: moves say {by_moves}, \
                     ranks say {by_ranks}"
                ));
            }
        }
    }
    Ok(failures)
}
