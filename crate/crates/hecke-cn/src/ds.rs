//! The discrete-series algorithm: peel a tableau into horizontal and
//! vertical strips by largest `|e|`, reassemble the strips into segments,
//! and mark. Also the one-hook closed form, ladder tests, the two
//! sgn-containment criteria, minimality predicates on hook components, and
//! deformation-interval bookkeeping.

use crate::marked::{MarkedPartition, MarkedSegment};
use crate::partition::{Bipartition, Partition};
use crate::rational::{is_generic, Rat};
use crate::segment::Segment;
use crate::tableau::{extremities, ETableau};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Which side a strip was peeled into.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PeelSide {
    Plus,
    Minus,
}

/// One peeled strip, e-values ascending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PeelStep {
    pub side: PeelSide,
    pub evalues: Vec<Rat>,
}

/// Output of the peeling phase: the horizontal strips, the vertical strips,
/// and the full extraction log in order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PeelResult {
    pub lplus: Vec<Segment>,
    pub lminus: Vec<Segment>,
    pub log: Vec<PeelStep>,
}

/// Repeatedly strips the current sub-diagram at its unique box of maximal
/// `|e|`: the full top row when the maximum is positive, the full first
/// column when it is negative. Genericity guarantees the maximum is unique.
pub fn peel(t: &ETableau) -> Result<PeelResult> {
    if !is_generic(t.m) {
        return Err(Error::NonGeneric(t.m));
    }
    let mut parts: Vec<i64> = t.shape.parts().iter().map(|&p| p as i64).collect();
    // e-value of the top-left box of the remaining diagram
    let mut corner = t.m;
    let mut lplus = Vec::new();
    let mut lminus = Vec::new();
    let mut log = Vec::new();
    while !parts.is_empty() {
        let top = corner + (parts[0] - 1);
        let bot = corner - (parts.len() as i64 - 1);
        if top == -bot {
            return Err(Error::Internal(format!(
                "|e|-tie at generic m = {} should be impossible",
                t.m
            )));
        }
        if top > -bot {
            let seg = Segment::sp(corner, top)?;
            log.push(PeelStep {
                side: PeelSide::Plus,
                evalues: seg.values(),
            });
            lplus.push(seg);
            parts.remove(0);
            corner = corner - 1;
        } else {
            let seg = Segment::sp(bot, corner)?;
            log.push(PeelStep {
                side: PeelSide::Minus,
                evalues: seg.values(),
            });
            lminus.push(seg);
            for p in parts.iter_mut() {
                *p -= 1;
            }
            parts.retain(|&p| p > 0);
            corner = corner + 1;
        }
    }
    Ok(PeelResult { lplus, lminus, log })
}

/// Buckets the horizontal strips by minimal e-value `m + k` and the vertical
/// strips by maximal e-value `m + k - 1`, sorts each bucket by decreasing
/// size, and glues the paired strips into single contiguous segments.
pub fn assemble(p: &PeelResult, m: Rat) -> Result<Vec<Segment>> {
    let mut plus: BTreeMap<i64, Vec<Segment>> = BTreeMap::new();
    let mut minus: BTreeMap<i64, Vec<Segment>> = BTreeMap::new();
    for s in &p.lplus {
        plus.entry(s.lo.int_diff(m)?).or_default().push(*s);
    }
    for s in &p.lminus {
        minus.entry(s.hi.int_diff(m)? + 1).or_default().push(*s);
    }
    let keys: Vec<i64> = plus.keys().chain(minus.keys()).copied().collect();
    let mut out = Vec::new();
    for k in keys {
        let mut ps = plus.remove(&k).unwrap_or_default();
        let mut ms = minus.remove(&k).unwrap_or_default();
        if ps.is_empty() && ms.is_empty() {
            continue;
        }
        ps.sort_by_key(|s| std::cmp::Reverse(s.size()));
        ms.sort_by_key(|s| std::cmp::Reverse(s.size()));
        for j in 0..ps.len().max(ms.len()) {
            match (ps.get(j), ms.get(j)) {
                (Some(a), Some(b)) => {
                    if b.hi + 1 != a.lo {
                        return Err(Error::Internal(format!(
                            "non-contiguous pairing {b} with {a}"
                        )));
                    }
                    out.push(Segment::sp(b.lo, a.hi)?);
                }
                (Some(a), None) => out.push(*a),
                (None, Some(b)) => out.push(*b),
                (None, None) => unreachable!(),
            }
        }
    }
    Ok(out)
}

/// Marking phase: temporarily mark every segment that contains the value `m`
/// and has positive e-value sum, then drop the temporary mark from any
/// segment dominated by another temporarily-marked segment.
pub fn mark(segments: Vec<Segment>, m: Rat) -> MarkedPartition {
    let temp: Vec<bool> = segments
        .iter()
        .map(|s| s.contains_value(m) && s.av().is_positive())
        .collect();
    let items: Vec<MarkedSegment> = segments
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let removed = temp[i]
                && segments
                    .iter()
                    .enumerate()
                    .any(|(j, other)| j != i && temp[j] && s.dominated_by_unchecked(other));
            MarkedSegment {
                seg: *s,
                marked: temp[i] && !removed,
            }
        })
        .collect();
    MarkedPartition::new(m, items).expect("algorithm output is a valid marked partition")
}

/// The discrete-series parameter at the central character of `sigma`:
/// peel, assemble, mark.
pub fn ds(sigma: &Partition, m: Rat) -> Result<MarkedPartition> {
    let t = ETableau::new(sigma.clone(), m);
    let peeled = peel(&t)?;
    let segments = assemble(&peeled, m)?;
    Ok(mark(segments, m))
}

/// Closed form of the discrete-series parameter for a one-hook shape
/// `(k, 1^(n-k))`, in e-values. Valid for positive generic `m`; the case
/// boundaries are exactly the non-generic parameters.
pub fn one_hook_oracle(k: u32, n: u32, m: Rat) -> Result<MarkedPartition> {
    if k < 1 || k > n {
        return Err(Error::Invalid(format!(
            "need 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    if !is_generic(m) {
        return Err(Error::NonGeneric(m));
    }
    if !m.is_positive() {
        return Err(Error::Invalid(format!(
            "the one-hook closed form requires m > 0, got m = {m}"
        )));
    }
    let k = k as i64;
    let n = n as i64;
    let mut items = Vec::new();
    let mut push = |lo: i64, hi: i64, marked: bool| {
        items.push(MarkedSegment {
            seg: Segment::sp_off(m, lo, hi),
            marked,
        });
    };
    if (m + (k - n)).is_positive() {
        // (a): the whole first row plus singleton columns
        push(0, k - 1, true);
        for j in (k - n)..0 {
            push(j, j, false);
        }
    } else {
        let nkm = Rat::int(n - k) - m; // -min e-value, positive here
        if nkm > m + (k - 1) {
            // (b1): one unmarked full segment
            push(k - n, k - 1, false);
        } else if m - 1 < nkm {
            // (b2): one marked full segment
            push(k - n, k - 1, true);
        } else {
            // (b3): marked head, singletons, and a glued tail ending at m + l
            let l = (Rat::int(n - k) - m * 2).floor_int() + 1;
            debug_assert!(l < 0);
            push(0, k - 1, true);
            for j in (l + 1)..0 {
                push(j, j, false);
            }
            push(k - n, l, false);
        }
    }
    MarkedPartition::new(m, items)
}

/// The positive ladder: segments are the rows of `sigma`, with every row
/// whose e-range contains `m` marked (the saturated marking).
pub fn positive_ladder(sigma: &Partition, m: Rat) -> MarkedPartition {
    let items: Vec<MarkedSegment> = sigma
        .parts()
        .iter()
        .enumerate()
        .map(|(idx, &p)| {
            let i = idx as i64 + 1;
            let seg = Segment::sp_off(m, 1 - i, p as i64 - i);
            MarkedSegment {
                seg,
                marked: seg.contains_value(m),
            }
        })
        .collect();
    MarkedPartition::new(m, items).expect("ladder is valid")
}

/// The negative ladder: segments are the columns of `sigma`, unmarked.
pub fn negative_ladder(sigma: &Partition, m: Rat) -> MarkedPartition {
    let items: Vec<MarkedSegment> = sigma
        .conjugate()
        .parts()
        .iter()
        .enumerate()
        .map(|(idx, &p)| {
            let i = idx as i64 + 1;
            let seg = Segment::sp_off(m, i - p as i64, i - 1);
            MarkedSegment { seg, marked: false }
        })
        .collect();
    MarkedPartition::new(m, items).expect("ladder is valid")
}

pub fn is_positive_ladder(mp: &MarkedPartition, sigma: &Partition, m: Rat) -> bool {
    mp.same_orbit(&positive_ladder(sigma, m)).unwrap_or(false)
}

pub fn is_negative_ladder(mp: &MarkedPartition, sigma: &Partition, m: Rat) -> bool {
    mp.same_orbit(&negative_ladder(sigma, m)).unwrap_or(false)
}

/// Parameter ranges that force the discrete-series parameter to be a ladder.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LadderForce {
    ForcedPositive,
    ForcedNegative,
    Neither,
}

/// `m > n - 1` forces the positive ladder; `m < 1 - n` forces the negative.
pub fn ladder_threshold_check(sigma: &Partition, m: Rat) -> Result<LadderForce> {
    if !is_generic(m) {
        return Err(Error::NonGeneric(m));
    }
    let n = sigma.n() as i64;
    Ok(if m > Rat::int(n - 1) {
        LadderForce::ForcedPositive
    } else if m < Rat::int(1 - n) {
        LadderForce::ForcedNegative
    } else {
        LadderForce::Neither
    })
}

/// Support-chain criterion for sgn-containment: with segments ordered by
/// decreasing maximal e-value (ties by decreasing negated minimum), the
/// interleaved chain
/// `max e(I_1) >= -min e(I_1) >= max e(I_2) >= -min e(I_2) >= ...`
/// must be weakly decreasing through the last segment. No trailing `>= 0`
/// term is required.
pub fn sgn_condition_support(mp: &MarkedPartition) -> bool {
    let mut segs = mp.segments();
    segs.sort_by_key(|s| std::cmp::Reverse((s.hi, -s.lo)));
    let mut chain = Vec::new();
    for s in &segs {
        chain.push(s.hi);
        chain.push(-s.lo);
    }
    chain.windows(2).all(|w| w[0] >= w[1])
}

/// Extremities-interleave criterion for sgn-containment, valid for positive
/// generic `m`: with both extremity lists at `k = m` sorted descending, a
/// decreasing chain `a_1 >= b >= a_2 >= b >= ... >= a_p` must exist that
/// uses every positive extremity in order with exactly one negative
/// extremity strictly between consecutive ones. Negative extremities above
/// `a_1` are fatal; those below `a_p` are harmless. The empty shape passes
/// trivially.
///
/// For `m < 0` the extremity lists do not determine sgn-containment (two
/// shapes can share order-isomorphic extremities with opposite answers), so
/// negative input is rejected; use [`sgn_condition_support`] there.
pub fn sgn_condition_extremities(sigma: &Partition, m: Rat) -> Result<bool> {
    if !is_generic(m) {
        return Err(Error::NonGeneric(m));
    }
    if !m.is_positive() {
        return Err(Error::Invalid(format!(
            "the extremities criterion requires m > 0, got m = {m}"
        )));
    }
    if sigma.is_empty() {
        return Ok(true);
    }
    let (eplus, eminus) = extremities(sigma, m);
    let q = eminus.len();
    let conj = sigma.conjugate();
    // The chain interleaves all of E- with a prefix of E+ of length q or
    // q + 1, rows 1..r and columns 1..q must exhaust the diagram, and E+
    // entries past the prefix must fall below the end of the chain.
    'next: for r in [q + 1, q] {
        if r == 0 || r > eplus.len() {
            continue;
        }
        if sigma.part(r as u32 + 1) as usize > q || conj.part(q as u32 + 1) as usize > r {
            continue;
        }
        let mut chain = Vec::with_capacity(r + q);
        for i in 0..r {
            chain.push(eplus[i]);
            if i < q {
                chain.push(eminus[i]);
            }
        }
        if !chain.windows(2).all(|w| w[0] >= w[1]) {
            continue;
        }
        let end = *chain.last().expect("chain is nonempty");
        for &a in &eplus[r..] {
            if a > end {
                continue 'next;
            }
        }
        return Ok(true);
    }
    Ok(false)
}

/// Whether the discrete series at the character of `sigma` contains the sgn
/// representation. Computed from the support chain; in debug builds the
/// open-orbit criterion (and, for positive `m`, the extremities criterion)
/// are asserted to agree.
pub fn ds_contains_sgn(sigma: &Partition, m: Rat) -> Result<bool> {
    let d = ds(sigma, m)?;
    let by_support = sgn_condition_support(&d);
    if cfg!(debug_assertions) {
        let fold = ETableau::new(sigma.clone(), m).fold_to_distinguished()?;
        let by_orbit = d.same_orbit(&fold)?;
        let by_ext = if m.is_positive() {
            sgn_condition_extremities(sigma, m)?
        } else {
            by_support
        };
        if by_support != by_ext || by_support != by_orbit {
            return Err(Error::Internal(format!(
                "sgn criteria disagree for sigma = {sigma}, m = {m}: \
                 support={by_support} extremities={by_ext} open-orbit={by_orbit}"
            )));
        }
    }
    Ok(by_support)
}

/// Sign of a hook-nested component.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComponentSign {
    Positive,
    Negative,
}

/// Predicate record for a single hook-nested component.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PredicateReport {
    Positive { p1: bool, p2: bool, p3: bool },
    Negative { n1: bool, n2: bool },
}

impl PredicateReport {
    pub fn all(&self) -> bool {
        match *self {
            PredicateReport::Positive { p1, p2, p3 } => p1 && p2 && p3,
            PredicateReport::Negative { n1, n2 } => n1 && n2,
        }
    }
}

/// Minimality predicates on a single hook-nested component.
///
/// Positive components: (p1) for every `i >= 0` at most `i` segments have
/// all e-values `>= m - i + 1`; (p2) every segment has positive e-sum;
/// (p3) every `m`-containing segment is marked, read after saturation.
/// Negative components: (n1) the mirror count with all e-values
/// `<= m + i - 1`; (n2) every segment has negative e-sum.
///
/// The counts read the bound inclusively: a positive ladder passes (p1) with
/// equality in every row, and with a strict bound instead a full segment
/// could be split off its top value without violating anything, breaking
/// minimality.
pub fn minimality_predicates(mp: &MarkedPartition, sign: ComponentSign) -> PredicateReport {
    let m = mp.m();
    let segs = mp.segments();
    let bound = segs.len() as i64 + 3;
    match sign {
        ComponentSign::Positive => {
            let p1 = (0..bound).all(|i| {
                let c = segs.iter().filter(|s| s.lo > m - i).count() as i64;
                c <= i
            });
            let p2 = segs.iter().all(|s| s.av().is_positive());
            let sat = mp.saturate_marking();
            let p3 = sat
                .items()
                .iter()
                .all(|it| !it.seg.contains_value(m) || it.marked);
            PredicateReport::Positive { p1, p2, p3 }
        }
        ComponentSign::Negative => {
            let n1 = (0..bound).all(|i| {
                let c = segs.iter().filter(|s| s.hi < m + i).count() as i64;
                c <= i
            });
            let n2 = segs.iter().all(|s| s.av().is_negative());
            PredicateReport::Negative { n1, n2 }
        }
    }
}

/// Maximal runs of consecutive principal hooks whose e-sums share one sign,
/// outermost first, with the run hull `[r', r]` taken from the outermost
/// hook of the run. Errors if some hook e-sum vanishes.
pub fn hook_sign_runs(sigma: &Partition, m: Rat) -> Result<Vec<(Rat, Rat, ComponentSign)>> {
    let hooks = ETableau::new(sigma.clone(), m).hook_decomposition();
    let mut runs: Vec<(Rat, Rat, ComponentSign)> = Vec::new();
    let mut current: Option<ComponentSign> = None;
    for h in &hooks {
        let s = h.e_sum();
        if s.is_zero() {
            return Err(Error::Invalid(format!(
                "hook {} of {sigma} has zero e-sum at m = {m}",
                h.index
            )));
        }
        let sign = if s.is_positive() {
            ComponentSign::Positive
        } else {
            ComponentSign::Negative
        };
        if current != Some(sign) {
            runs.push((h.r_prime, h.r, sign));
            current = Some(sign);
        }
    }
    Ok(runs)
}

/// Splits a marked partition adapted to the character of `sigma` into its
/// hook-nested components: segments are distributed over the sign runs of
/// the hooks so that each run receives exactly its hooks' e-value multiset.
/// Components are returned outermost first with their signs.
pub fn hook_components(
    sigma: &Partition,
    m: Rat,
    mp: &MarkedPartition,
) -> Result<Vec<(MarkedPartition, ComponentSign)>> {
    let runs = hook_sign_runs(sigma, m)?;
    if runs.is_empty() {
        return Ok(Vec::new());
    }
    // Per-run value multisets (integer offsets from m): hooks of the run.
    let hooks = ETableau::new(sigma.clone(), m).hook_decomposition();
    let mut run_values: Vec<BTreeMap<i64, i64>> = vec![BTreeMap::new(); runs.len()];
    for h in &hooks {
        let run_idx = runs
            .iter()
            .rposition(|&(lo, hi, _)| lo <= h.r_prime && h.r <= hi)
            .expect("every hook lies in some run hull");
        for v in h.arm_evalues.iter().chain(h.leg_evalues.iter()) {
            *run_values[run_idx].entry(v.int_diff(m)?).or_insert(0) += 1;
        }
    }
    // Assign segments to runs, innermost runs first, by exact cover of the
    // run's value multiset with segments contained in its hull.
    let mut remaining: Vec<Option<Segment>> = mp.segments().into_iter().map(Some).collect();
    let items = mp.items().to_vec();
    let mut assignment: Vec<Vec<MarkedSegment>> = vec![Vec::new(); runs.len()];
    for ridx in (0..runs.len()).rev() {
        let (hull_lo, hull_hi, _) = runs[ridx];
        let candidates: Vec<usize> = remaining
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.filter(|s| hull_lo <= s.lo && s.hi <= hull_hi).map(|_| i))
            .collect();
        let mut target = run_values[ridx].clone();
        let mut chosen = Vec::new();
        if !cover(&candidates, &remaining, m, &mut target, 0, &mut chosen)? {
            return Err(Error::Internal(format!(
                "cannot split {mp} into hook components of {sigma} at m = {m}"
            )));
        }
        for &i in &chosen {
            assignment[ridx].push(items[i]);
            remaining[i] = None;
        }
    }
    if remaining.iter().any(Option::is_some) {
        return Err(Error::Internal(format!(
            "leftover segments splitting {mp} over the hooks of {sigma}"
        )));
    }
    let mut out = Vec::new();
    for (ridx, items) in assignment.into_iter().enumerate() {
        out.push((MarkedPartition::new(m, items)?, runs[ridx].2));
    }
    Ok(out)
}

/// Backtracking exact cover: choose a subset of `candidates` (indices into
/// `segs`) whose value multisets sum to `target`.
fn cover(
    candidates: &[usize],
    segs: &[Option<Segment>],
    m: Rat,
    target: &mut BTreeMap<i64, i64>,
    from: usize,
    chosen: &mut Vec<usize>,
) -> Result<bool> {
    target.retain(|_, c| *c != 0);
    if target.is_empty() {
        return Ok(true);
    }
    if from >= candidates.len() {
        return Ok(false);
    }
    let idx = candidates[from];
    let seg = segs[idx].expect("candidate is unassigned");
    let lo = seg.lo.int_diff(m)?;
    let hi = seg.hi.int_diff(m)?;
    let fits = (lo..=hi).all(|v| target.get(&v).copied().unwrap_or(0) > 0);
    if fits {
        for v in lo..=hi {
            *target.entry(v).or_insert(0) -= 1;
        }
        chosen.push(idx);
        if cover(candidates, segs, m, target, from + 1, chosen)? {
            return Ok(true);
        }
        chosen.pop();
        for v in lo..=hi {
            *target.entry(v).or_insert(0) += 1;
        }
    }
    cover(candidates, segs, m, target, from + 1, chosen)
}

/// One constancy interval of a deformation sweep.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProfileInterval {
    pub lo: Rat,
    pub hi: Rat,
    /// Parameter computed at the interval midpoint.
    pub representative: MarkedPartition,
}

/// The discrete-series parameter as a function of `m` over an interval:
/// constant on each open interval between half-integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeformationProfile {
    pub intervals: Vec<ProfileInterval>,
    pub critical_points: Vec<Rat>,
}

/// Sweeps `m` over `(m_lo, m_hi)`: splits at half-integers, computes the
/// parameter at three samples per open interval, and checks that its shape
/// relative to `m` is constant on each interval. A violation is reported as
/// a counterexample.
pub fn deformation_profile(sigma: &Partition, m_lo: Rat, m_hi: Rat) -> Result<DeformationProfile> {
    if m_lo >= m_hi {
        return Err(Error::Invalid(format!(
            "need m_lo < m_hi, got [{m_lo}, {m_hi}]"
        )));
    }
    // Half-integers strictly inside (m_lo, m_hi).
    let mut cuts = Vec::new();
    let mut k = (m_lo * 2).floor_int() + 1;
    while Rat::new(k, 2) < m_hi {
        if Rat::new(k, 2) > m_lo {
            cuts.push(Rat::new(k, 2));
        }
        k += 1;
    }
    let mut bounds = vec![m_lo];
    bounds.extend(cuts.iter().copied());
    bounds.push(m_hi);

    let mut intervals = Vec::new();
    for w in bounds.windows(2) {
        let (a, b) = (w[0], w[1]);
        let quarter = (b - a) * Rat::new(1, 4);
        let samples = [a + quarter, a + quarter * 2, a + quarter * 3];
        let mps = samples
            .iter()
            .map(|&m| ds(sigma, m))
            .collect::<Result<Vec<_>>>()?;
        let shape0 = mps[0].relative_shape();
        for (i, mp) in mps.iter().enumerate().skip(1) {
            if mp.relative_shape() != shape0 {
                return Err(Error::Violation(format!(
                    "parameter of {sigma} varies inside ({a}, {b}): \
                     {} at m = {} vs {} at m = {}",
                    mps[0], samples[0], mp, samples[i]
                )));
            }
        }
        intervals.push(ProfileInterval {
            lo: a,
            hi: b,
            representative: mps[1].clone(),
        });
    }
    Ok(DeformationProfile {
        intervals,
        critical_points: cuts,
    })
}

/// At a critical (half-integer) parameter `k`: true when the combined
/// extremity multiset of `sigma` at `k` has no repeated value.
pub fn extremity_repetition_test(sigma: &Partition, k: Rat) -> Result<bool> {
    if is_generic(k) {
        return Err(Error::Invalid(format!(
            "repetition test expects a critical (half-integer) parameter, got {k}"
        )));
    }
    let (eplus, eminus) = extremities(sigma, k);
    let mut all: Vec<Rat> = eplus.into_iter().chain(eminus).collect();
    all.sort();
    Ok(all.windows(2).all(|w| w[0] != w[1]))
}

/// W-module label of a ladder discrete series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WStructure {
    pub bipartition: Bipartition,
    pub sgn_twisted: bool,
}

/// When the discrete-series parameter is a ladder, the module is irreducible
/// over the Weyl group: `{(sigma)(0)}` twisted by sgn for a positive ladder,
/// untwisted for a negative one. Otherwise the module is not W-irreducible
/// and `None` is returned.
pub fn w_structure_if_ladder(sigma: &Partition, m: Rat) -> Result<Option<WStructure>> {
    let d = ds(sigma, m)?;
    if is_positive_ladder(&d, sigma, m) {
        Ok(Some(WStructure {
            bipartition: Bipartition::new(sigma.clone(), Partition::empty()),
            sgn_twisted: true,
        }))
    } else if is_negative_ladder(&d, sigma, m) {
        Ok(Some(WStructure {
            bipartition: Bipartition::new(sigma.clone(), Partition::empty()),
            sgn_twisted: false,
        }))
    } else {
        Ok(None)
    }
}
