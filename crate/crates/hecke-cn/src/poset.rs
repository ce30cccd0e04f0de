//! Closure order on marked partitions, generated by segment-merging moves on
//! supports and by mark-addition edges, with DOT and JSON export.
//!
//! The generated order is a computable sub-order of the geometric closure
//! order: merging two linked segments into their union and intersection
//! strictly enlarges the orbit, and removing a marking strictly shrinks it.
//! No completeness claim is made for relations between orbits with equal
//! support beyond mark edges.

use crate::marked::{enumerate_mp_capped, MarkedPartition, MarkedSegment};
use crate::segment::Segment;
use crate::tableau::CentralCharacter;
use crate::{Error, Result};
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

/// Kind of a cover edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveKind {
    /// Support changes: two linked segments replaced by union/intersection.
    Spadesuit,
    /// Same support, marking set grows upward.
    MarkRemoval,
}

impl MoveKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MoveKind::Spadesuit => "spadesuit",
            MoveKind::MarkRemoval => "mark_removal",
        }
    }
}

/// All one-step spadesuit moves on an unmarked partition: for every ordered
/// pair of segments with `lo_k < lo_l <= hi_k + 1 < hi_l + 1`, replace the
/// pair by `[lo_k, hi_l]` and `[lo_l, hi_k]` (the intersection is dropped
/// when empty). Each result parameterizes an orbit strictly above the input.
pub fn spadesuit_moves(
    mp: &MarkedPartition,
    cc: &CentralCharacter,
) -> Result<Vec<MarkedPartition>> {
    if !mp.is_unmarked() {
        return Err(Error::MarkedInput);
    }
    if !mp.adapted_to(cc) {
        return Err(Error::CharacterMismatch);
    }
    let mut out = BTreeSet::new();
    for next in one_step_merges(mp) {
        out.insert(next);
    }
    Ok(out.into_iter().collect())
}

/// Spadesuit moves with marking transport: the union inherits a mark when
/// either operand was marked; the intersection keeps one only when both were
/// marked and it still contains `m`. Results are saturated.
fn one_step_merges(mp: &MarkedPartition) -> Vec<MarkedPartition> {
    let m = mp.m();
    let items = mp.items();
    let mut out = Vec::new();
    for (i, a) in items.iter().enumerate() {
        for (j, b) in items.iter().enumerate() {
            if i == j || a.seg.coset != b.seg.coset {
                continue;
            }
            let linked = a.seg.lo < b.seg.lo && b.seg.lo <= a.seg.hi + 1 && a.seg.hi < b.seg.hi;
            if !linked {
                continue;
            }
            let mut new_items: Vec<MarkedSegment> = items
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != i && t != j)
                .map(|(_, it)| *it)
                .collect();
            let union =
                Segment::new(a.seg.lo, b.seg.hi, a.seg.coset).expect("union of linked segments");
            new_items.push(MarkedSegment {
                seg: union,
                marked: a.marked || b.marked,
            });
            if b.seg.lo <= a.seg.hi {
                let inter = Segment::new(b.seg.lo, a.seg.hi, a.seg.coset)
                    .expect("intersection of linked segments");
                let marked = a.marked && b.marked && inter.contains_value(m);
                new_items.push(MarkedSegment { seg: inter, marked });
            }
            let next = MarkedPartition::new(m, new_items).expect("valid merge output");
            out.push(next.saturate_marking());
        }
    }
    out
}

/// All one-step mark additions: mark one unmarked `m`-containing segment
/// class, saturated.
fn one_step_marks(mp: &MarkedPartition) -> Vec<MarkedPartition> {
    let m = mp.m();
    let sat = mp.saturate_marking();
    let mut classes: Vec<Segment> = sat
        .items()
        .iter()
        .filter(|it| !it.marked && it.seg.contains_value(m))
        .map(|it| it.seg)
        .collect();
    classes.dedup();
    classes
        .into_iter()
        .map(|class| {
            let items: Vec<MarkedSegment> = sat
                .items()
                .iter()
                .map(|it| MarkedSegment {
                    seg: it.seg,
                    marked: it.marked || it.seg == class,
                })
                .collect();
            MarkedPartition::new(m, items)
                .expect("marking an m-containing segment is valid")
                .saturate_marking()
        })
        .collect()
}

fn up_moves(mp: &MarkedPartition) -> Vec<MarkedPartition> {
    let mut out = one_step_merges(mp);
    out.extend(one_step_marks(mp));
    out.sort();
    out.dedup();
    out
}

/// Whether the orbit of `a` lies in the closure of the orbit of `b` within
/// the generated order: `b` must be reachable from `a` by spadesuit moves
/// and mark additions.
pub fn closure_leq(
    a: &MarkedPartition,
    b: &MarkedPartition,
    cc: &CentralCharacter,
) -> Result<bool> {
    if !a.adapted_to(cc) || !b.adapted_to(cc) {
        return Err(Error::CharacterMismatch);
    }
    let target = b.saturate_marking();
    let start = a.saturate_marking();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        if cur == target {
            return Ok(true);
        }
        for next in up_moves(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// The closure-order poset on all orbits adapted to a central character.
#[derive(Clone, Debug)]
pub struct OrbitPoset {
    /// Canonical (saturated, sorted) orbit representatives.
    pub nodes: Vec<MarkedPartition>,
    /// Cover relations `(smaller, larger, kind)` after transitive reduction.
    pub covers: Vec<(usize, usize, MoveKind)>,
}

/// Enumerates the orbits of `cc` and builds the cover relations of the
/// generated closure order.
#[allow(clippy::needless_range_loop)]
pub fn build_poset(cc: &CentralCharacter, cap: u32) -> Result<OrbitPoset> {
    let nodes = enumerate_mp_capped(cc, cap)?;
    let index: BTreeMap<&MarkedPartition, usize> =
        nodes.iter().enumerate().map(|(i, n)| (n, i)).collect();
    let n = nodes.len();
    let mut step = vec![vec![false; n]; n];
    for (i, node) in nodes.iter().enumerate() {
        for next in up_moves(node) {
            let j = *index
                .get(&next)
                .ok_or_else(|| Error::Internal(format!("move target {next} not enumerated")))?;
            step[i][j] = true;
        }
    }
    // Transitive closure.
    let mut reach = step;
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    for (i, row) in reach.iter().enumerate() {
        if row[i] {
            return Err(Error::Internal("closure order contains a cycle".into()));
        }
    }
    // Transitive reduction.
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !reach[i][j] {
                continue;
            }
            let direct = !(0..n).any(|k| k != i && k != j && reach[i][k] && reach[k][j]);
            if direct {
                let kind = if nodes[i].strip_marks() == nodes[j].strip_marks() {
                    MoveKind::MarkRemoval
                } else {
                    MoveKind::Spadesuit
                };
                covers.push((i, j, kind));
            }
        }
    }
    Ok(OrbitPoset { nodes, covers })
}

impl OrbitPoset {
    /// Indices of maximal nodes (no cover above).
    pub fn maximal_nodes(&self) -> Vec<usize> {
        let mut has_up = vec![false; self.nodes.len()];
        for &(i, _, _) in &self.covers {
            has_up[i] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_up[i]).collect()
    }

    /// Deterministic DOT rendering: node labels are the JSON-canonical
    /// marked partitions; spadesuit edges solid, mark edges dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph orbit_poset {\n");
        if !self.nodes.is_empty() {
            s.push_str("  rankdir=BT;\n");
        }
        for (i, node) in self.nodes.iter().enumerate() {
            let label = serde_json::to_string(&node.to_json())
                .expect("marked partition serializes")
                .replace('"', "\\\"");
            let _ = writeln!(s, "  n{i} [label=\"{label}\"];");
        }
        for &(i, j, kind) in &self.covers {
            let style = match kind {
                MoveKind::Spadesuit => "solid",
                MoveKind::MarkRemoval => "dashed",
            };
            let _ = writeln!(s, "  n{i} -> n{j} [style={style}];");
        }
        s.push_str("}\n");
        s
    }

    /// JSON adjacency export: `{"nodes":[...],"covers":[[i,j,"spadesuit"],...]}`.
    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self.nodes.iter().map(|n| n.to_json()).collect();
        let covers: Vec<Value> = self
            .covers
            .iter()
            .map(|&(i, j, kind)| json!([i, j, kind.as_str()]))
            .collect();
        json!({ "nodes": nodes, "covers": covers })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::rational::Rat;
    use crate::segment::Coset;
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

    fn cc_values(m: Rat, offs: &[i64]) -> CentralCharacter {
        CentralCharacter::new(m, offs.iter().map(|&k| (m + k, Coset::Sp)).collect()).unwrap()
    }

    #[test]
    fn spadesuit_move_examples() {
        let m = r("1/4");
        let cc = cc_values(m, &[0, 1, 1, 2]);
        let x = mp(m, &[(0, 1, false), (1, 2, false)]);
        let moves = spadesuit_moves(&x, &cc).unwrap();
        assert_eq!(moves.len(), 1);
        assert_eq!(
            moves[0].strip_marks(),
            mp(m, &[(0, 2, false), (1, 1, false)])
        );

        let cc = cc_values(m, &[0, 2]);
        let x = mp(m, &[(0, 0, false), (2, 2, false)]);
        assert!(spadesuit_moves(&x, &cc).unwrap().is_empty());

        let cc = cc_values(m, &[0, 1, 2, 3]);
        let x = mp(m, &[(0, 1, false), (2, 3, false)]);
        let moves = spadesuit_moves(&x, &cc).unwrap();
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0], mp(m, &[(0, 3, false)]));

        let marked = mp(m, &[(0, 1, true), (2, 3, false)]);
        assert_eq!(spadesuit_moves(&marked, &cc), Err(Error::MarkedInput));
    }

    #[test]
    fn closure_leq_examples() {
        let m = r("1/4");
        let cc = cc_values(m, &[0, 1]);
        let a = mp(m, &[(0, 1, false)]);
        assert!(closure_leq(&a, &a, &cc).unwrap());
        let b = mp(m, &[(0, 1, true)]);
        assert!(closure_leq(&a, &b, &cc).unwrap());
        assert!(!closure_leq(&b, &a, &cc).unwrap());
    }

    #[test]
    fn fold_is_reachable_from_everything_on_single_hooks() {
        for n in 1..=5u32 {
            let sigma = Partition::new(vec![1; n as usize]).unwrap();
            let t = ETableau::new(sigma, r("1/4"));
            let cc = t.central_character().unwrap();
            let fold = t.fold_to_distinguished().unwrap();
            for x in crate::marked::enumerate_mp(&cc).unwrap() {
                assert!(closure_leq(&x, &fold, &cc).unwrap(), "{x} vs {fold}");
            }
        }
    }

    #[test]
    fn poset_counts() {
        // single-hook n = 2: 4 nodes, 4 cover edges
        let t = ETableau::new(Partition::new(vec![2]).unwrap(), r("3/4"));
        let cc = t.central_character().unwrap();
        let p = build_poset(&cc, 12).unwrap();
        assert_eq!(p.nodes.len(), 4);
        assert_eq!(p.covers.len(), 4);
        assert_eq!(p.maximal_nodes().len(), 1);
        let fold = t.fold_to_distinguished().unwrap().saturate_marking();
        assert_eq!(p.nodes[p.maximal_nodes()[0]], fold);

        // one weight: 2 nodes, 1 mark edge
        let cc = cc_values(r("3/4"), &[0]);
        let p = build_poset(&cc, 12).unwrap();
        assert_eq!(p.nodes.len(), 2);
        assert_eq!(p.covers.len(), 1);
        assert_eq!(p.covers[0].2, MoveKind::MarkRemoval);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn poset_matches_pairwise_closure_leq() {
        let t = ETableau::new("2,1".parse::<Partition>().unwrap(), r("1/4"));
        let cc = t.central_character().unwrap();
        let p = build_poset(&cc, 12).unwrap();
        // reachability from covers must agree with closure_leq on all pairs
        let n = p.nodes.len();
        let mut reach = vec![vec![false; n]; n];
        for &(i, j, _) in &p.covers {
            reach[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let expected = i == j || reach[i][j];
                assert_eq!(
                    closure_leq(&p.nodes[i], &p.nodes[j], &cc).unwrap(),
                    expected,
                    "{} vs {}",
                    p.nodes[i],
                    p.nodes[j]
                );
            }
        }
    }

    #[test]
    fn dot_rendering() {
        let empty = OrbitPoset {
            nodes: vec![],
            covers: vec![],
        };
        assert_eq!(empty.to_dot(), "digraph orbit_poset {\n}\n");

        let cc = cc_values(r("3/4"), &[0]);
        let p = build_poset(&cc, 12).unwrap();
        let dot = p.to_dot();
        assert_eq!(dot.matches("label=").count(), 2);
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("style=dashed"));
    }
}
