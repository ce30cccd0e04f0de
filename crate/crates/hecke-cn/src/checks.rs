//! Named property suites with pass/fail reporting.
//!
//! Each suite sweeps a family of inputs, checks one batch of properties, and
//! collects counterexamples as strings. The CLI `check` command and the
//! acceptance test suite both run through this module, so the library and
//! the command line exercise identical code paths.

pub mod oracles;

use crate::ds::{
    deformation_profile, ds, hook_components, is_negative_ladder, is_positive_ladder,
    ladder_threshold_check, minimality_predicates, one_hook_oracle, peel, LadderForce,
};
use crate::marked::{enumerate_mp_capped, MarkedPartition};
use crate::par::{map_mode, ExecMode};
use crate::partition::{Bipartition, Partition};
use crate::poset::{build_poset, closure_leq, spadesuit_moves};
use crate::rational::Rat;
use crate::segment::Segment;
use crate::spin::{
    cross_validate_with, cuspidal_part, enumerate_distinguished, expected_params, ls_rho,
    orbit_defect, sigma_to_orbit, slooten_bipartition,
};
use crate::tableau::ETableau;
use crate::tempered::enumerate_tempered;
use crate::{ds::w_structure_if_ladder, Error, Result};
use serde_json::{json, Value};

/// Outcome of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "cases": self.cases,
            "pass": self.pass(),
            "failures": self.failures,
        })
    }

    pub fn summary_line(&self) -> String {
        if self.pass() {
            format!("{}: PASS ({} cases)", self.suite, self.cases)
        } else {
            format!(
                "{}: FAIL ({} cases, {} failures; first: {})",
                self.suite,
                self.cases,
                self.failures.len(),
                self.failures.first().map(String::as_str).unwrap_or("")
            )
        }
    }
}

/// Registered suite names with their default size bounds.
pub const SUITES: &[(&str, u32)] = &[
    ("n2-table", 2),
    ("worked-output", 13),
    ("springer-example", 13),
    ("springer", 8),
    ("one-hook", 10),
    ("sgn-equivalence", 8),
    ("counting", 12),
    ("orbit-calculus", 6),
    ("ladders", 8),
    ("interval-constancy", 8),
    ("predicates", 8),
    ("conservation", 9),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|&(name, _)| name).collect()
}

/// Runs one suite by name; `n` overrides the default size bound.
pub fn run_suite(name: &str, n: Option<u32>, mode: ExecMode) -> Result<SuiteReport> {
    let default_n = SUITES
        .iter()
        .find(|&&(s, _)| s == name)
        .map(|&(_, d)| d)
        .ok_or_else(|| {
            Error::Invalid(format!(
                "unknown suite {name:?}; available: {}",
                suite_names().join(", ")
            ))
        })?;
    let n = n.unwrap_or(default_n);
    Ok(match name {
        "n2-table" => check_n2_table(),
        "worked-output" => check_worked_output(),
        "springer-example" => check_springer_example(),
        "springer" => check_springer(n, mode),
        "one-hook" => check_one_hook(n, mode),
        "sgn-equivalence" => check_sgn_equivalence(n, mode),
        "counting" => check_counting(n, mode),
        "orbit-calculus" => check_orbit_calculus(n, mode),
        "ladders" => check_ladders(n, mode),
        "interval-constancy" => check_interval_constancy(n, mode),
        "predicates" => check_predicates(n, mode),
        "conservation" => check_conservation(n, mode),
        _ => unreachable!("name validated above"),
    })
}

/// Runs every suite at its default bound.
pub fn run_all(mode: ExecMode) -> Vec<SuiteReport> {
    suite_names()
        .iter()
        .map(|name| run_suite(name, None, mode).expect("registered suite"))
        .collect()
}

fn r(s: &str) -> Rat {
    s.parse().expect("literal rational")
}

fn pt(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn report(suite: &str, cases: usize, failures: Vec<String>) -> SuiteReport {
    SuiteReport {
        suite: suite.into(),
        cases,
        failures,
    }
}

type RelShape = Vec<(i64, i64, bool)>;

fn rel(mp: &MarkedPartition) -> RelShape {
    mp.relative_shape()
}

/// Quarter-integer sample in every generic interval of `(-bound, bound)`.
fn interval_samples(bound: i64) -> Vec<Rat> {
    (-2 * bound..2 * bound)
        .map(|k| Rat::new(2 * k + 1, 4))
        .collect()
}

/// The two discrete series of rank 2 across the three parameter regions.
fn check_n2_table() -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for s in ["1/4", "3/4", "5/4"] {
        let m = r(s);
        cases += 1;
        match ds(&pt("2"), m) {
            Ok(d) if rel(&d) == vec![(0, 1, true)] => {}
            other => failures.push(format!("ds((2), {m}) = {other:?}")),
        }
    }
    let expected: [(&str, RelShape); 3] = [
        ("1/4", vec![(-1, 0, false)]),
        ("3/4", vec![(-1, 0, true)]),
        ("5/4", vec![(-1, -1, false), (0, 0, true)]),
    ];
    for (s, want) in expected {
        let m = r(s);
        cases += 1;
        match ds(&pt("1,1"), m) {
            Ok(d) if rel(&d) == want => {}
            other => failures.push(format!("ds((1,1), {m}) = {other:?}, want {want:?}")),
        }
    }
    report("n2-table", cases, failures)
}

/// The worked (4,3,3,2,1) output at m = 9/4, including the peel lists.
fn check_worked_output() -> SuiteReport {
    let mut failures = Vec::new();
    let m = r("9/4");
    let sigma = pt("4,3,3,2,1");
    match ds(&sigma, m) {
        Ok(d) => {
            let want = vec![
                (-4, 0, false),
                (-2, -2, false),
                (-1, 1, false),
                (0, 3, true),
            ];
            if d.items()
                .iter()
                .map(|it| {
                    (
                        it.seg.lo.int_diff(m).unwrap(),
                        it.seg.hi.int_diff(m).unwrap(),
                        it.marked,
                    )
                })
                .collect::<Vec<_>>()
                != want
            {
                failures.push(format!("ds = {d}"));
            }
        }
        Err(e) => failures.push(format!("ds failed: {e}")),
    }
    match peel(&ETableau::new(sigma, m)) {
        Ok(p) => {
            let plus: Vec<Segment> = vec![
                Segment::sp_off(m, 0, 3),
                Segment::sp_off(m, -1, 1),
                Segment::sp_off(m, -2, 0),
                Segment::sp_off(m, -2, -2),
            ];
            let minus = vec![Segment::sp_off(m, -4, -3)];
            if p.lplus != plus || p.lminus != minus {
                failures.push(format!(
                    "peel lists: L+ = {:?}, L- = {:?}",
                    p.lplus, p.lminus
                ));
            }
        }
        Err(e) => failures.push(format!("peel failed: {e}")),
    }
    report("worked-output", 2, failures)
}

/// The full worked chain at n = 13, m = 9/4.
fn check_springer_example() -> SuiteReport {
    let mut failures = Vec::new();
    let m = r("9/4");
    let sigma = pt("4,3,3,2,1");
    let want_orbit = crate::spin::SpinOrbit::new(vec![1, 3, 9, 11, 15, 23]).unwrap();
    let want_bp = Bipartition::new(pt("4,3,3,1"), pt("2"));

    match cuspidal_part(m) {
        Ok(c) if c.parts() == [3, 7] => {}
        other => failures.push(format!("cuspidal_part(9/4) = {other:?}")),
    }
    match sigma_to_orbit(&sigma, m) {
        Ok(o) => {
            if o != want_orbit {
                failures.push(format!("orbit = {o}"));
            }
            if orbit_defect(&o) != -2 || o.ell() != 62 {
                failures.push(format!("defect/size = {}/{}", orbit_defect(&o), o.ell()));
            }
            match ls_rho(&o) {
                Ok(bp) if bp == want_bp => {}
                other => failures.push(format!("ls_rho = {other:?}")),
            }
        }
        Err(e) => failures.push(format!("sigma_to_orbit failed: {e}")),
    }
    match slooten_bipartition(&sigma, m) {
        Ok(bp) if bp == want_bp => {}
        other => failures.push(format!("slooten = {other:?}")),
    }
    report("springer-example", 4, failures)
}

/// Full-grid agreement of the two bipartition algorithms with defect, size,
/// and injectivity checks.
fn check_springer(n_max: u32, mode: ExecMode) -> SuiteReport {
    let ms: Vec<Rat> = ["1/4", "3/4", "5/4", "7/4", "9/4", "11/4"]
        .iter()
        .map(|s| r(s))
        .collect();
    match cross_validate_with(n_max, &ms, mode) {
        Ok(rep) => report("springer", rep.rows.len(), rep.failures),
        Err(e) => report("springer", 0, vec![format!("cross_validate failed: {e}")]),
    }
}

/// Samples of positive generic `m` inside each closed-form case region for
/// the hook `(k, 1^(n-k))`.
fn one_hook_case_samples(k: u32, n: u32) -> Vec<Rat> {
    let (k, n) = (k as i64, n as i64);
    let mut out = Vec::new();
    // (a): m > n - k
    for j in 0..5 {
        out.push(Rat::int(n - k) + Rat::new(1, 4) + j);
    }
    // (b1): 0 < m < (n - 2k + 1) / 2
    let u1 = Rat::new(n - 2 * k + 1, 2);
    if u1.is_positive() {
        for j in 1..=5 {
            out.push(u1 * Rat::new(j, 6));
        }
    }
    // (b2): max(0, (n - 2k + 1)/2) < m < min((n - k + 1)/2, n - k)
    let lo2 = if u1.is_positive() { u1 } else { Rat::zero() };
    let hi2 = std::cmp::min(Rat::new(n - k + 1, 2), Rat::int(n - k));
    push_interior_samples(lo2, hi2, &mut out);
    // (b3): (n - k + 1)/2 < m < n - k
    push_interior_samples(Rat::new(n - k + 1, 2), Rat::int(n - k), &mut out);
    out.retain(|&m| crate::rational::is_generic(m) && m.is_positive());
    out
}

fn push_interior_samples(lo: Rat, hi: Rat, out: &mut Vec<Rat>) {
    if lo >= hi {
        return;
    }
    let mut found = 0;
    for j in 1..12 {
        let cand = lo + (hi - lo) * Rat::new(j, 12);
        if crate::rational::is_generic(cand) {
            out.push(cand);
            found += 1;
            if found == 5 {
                break;
            }
        }
    }
}

/// The closed-form one-hook parameter agrees with the algorithm.
fn check_one_hook(n_max: u32, mode: ExecMode) -> SuiteReport {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for k in 1..=n {
            for m in one_hook_case_samples(k, n) {
                cases.push((k, n, m));
            }
        }
    }
    let failures = map_mode(mode, &cases, |&(k, n, m)| -> Option<String> {
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, (n - k) as usize));
        let sigma = Partition::new(parts).expect("hook shape");
        let check = || -> Result<Option<String>> {
            let d = ds(&sigma, m)?;
            let o = one_hook_oracle(k, n, m)?;
            if d.same_orbit(&o)? {
                Ok(None)
            } else {
                Ok(Some(format!("k={k} n={n} m={m}: ds={d} oracle={o}")))
            }
        };
        check().unwrap_or_else(|e| Some(format!("k={k} n={n} m={m}: {e}")))
    });
    report(
        "one-hook",
        cases.len(),
        failures.into_iter().flatten().collect(),
    )
}

/// Three-way equivalence of the sgn-containment criteria.
fn check_sgn_equivalence(n_max: u32, mode: ExecMode) -> SuiteReport {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for sigma in Partition::all(n) {
            for m in interval_samples(n as i64) {
                cases.push((sigma.clone(), m));
            }
        }
    }
    let failures = map_mode(mode, &cases, |(sigma, m)| -> Option<String> {
        let check = || -> Result<Option<String>> {
            let d = ds(sigma, *m)?;
            let by_support = crate::ds::sgn_condition_support(&d);
            let fold = ETableau::new(sigma.clone(), *m).fold_to_distinguished()?;
            let by_orbit = d.same_orbit(&fold)?;
            // the extremities reading is a positive-m criterion
            let by_ext = if m.is_positive() {
                crate::ds::sgn_condition_extremities(sigma, *m)?
            } else {
                by_support
            };
            if by_support == by_ext && by_support == by_orbit {
                Ok(None)
            } else {
                Ok(Some(format!(
                    "sigma={sigma} m={m}: support={by_support} extremities={by_ext} \
                     open-orbit={by_orbit}"
                )))
            }
        };
        check().unwrap_or_else(|e| Some(format!("sigma={sigma} m={m}: {e}")))
    });
    report(
        "sgn-equivalence",
        cases.len(),
        failures.into_iter().flatten().collect(),
    )
}

/// Distinguished-orbit counts equal p(n); tempered counts equal the
/// bipartition numbers.
fn check_counting(n_max: u32, mode: ExecMode) -> SuiteReport {
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for s in ["1/4", "3/4", "9/4"] {
            cases.push((n, r(s)));
        }
    }
    let mut failures: Vec<String> = map_mode(mode, &cases, |&(n, m)| -> Option<String> {
        let check = || -> Result<Option<String>> {
            let (d, ell) = expected_params(n, m)?;
            let count = enumerate_distinguished(ell, d)?.len() as u64;
            if count == Partition::count(n) {
                Ok(None)
            } else {
                Ok(Some(format!(
                    "distinguished count at n={n} m={m}: {count} != p(n) = {}",
                    Partition::count(n)
                )))
            }
        };
        check().unwrap_or_else(|e| Some(format!("n={n} m={m}: {e}")))
    })
    .into_iter()
    .flatten()
    .collect();
    let tempered_cases: Vec<u32> = (0..=n_max).collect();
    failures.extend(
        map_mode(mode, &tempered_cases, |&n| -> Option<String> {
            let m = r("9/4");
            match enumerate_tempered(n, m) {
                Ok(list) if list.len() as u64 == Partition::bipartition_count(n) => None,
                Ok(list) => Some(format!(
                    "tempered count at n={n}: {} != P2(n) = {}",
                    list.len(),
                    Partition::bipartition_count(n)
                )),
                Err(e) => Some(format!("tempered n={n}: {e}")),
            }
        })
        .into_iter()
        .flatten(),
    );
    report("counting", cases.len() + tempered_cases.len(), failures)
}

/// Orbit enumeration and closure-order checks: single-hook counts,
/// stabilizer monotonicity of the merge moves, agreement with the
/// rank-function closure oracle, and the fold node as unique maximum.
fn check_orbit_calculus(n_max: u32, mode: ExecMode) -> SuiteReport {
    let mut failures = Vec::new();
    let mut cases = 0;

    // 2^n orbits on single-hook characters, up to max(n_max, 10)
    for n in 1..=n_max.max(10) {
        let k = n.div_ceil(2);
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, (n - k) as usize));
        let sigma = Partition::new(parts).expect("hook shape");
        let cc = match ETableau::new(sigma, r("1/4")).central_character() {
            Ok(cc) => cc,
            Err(e) => {
                failures.push(format!("character n={n}: {e}"));
                continue;
            }
        };
        cases += 1;
        match enumerate_mp_capped(&cc, 14) {
            Ok(orbits) if orbits.len() as u64 == 1 << n => {}
            Ok(orbits) => failures.push(format!(
                "single hook n={n}: {} orbits, want 2^{n}",
                orbits.len()
            )),
            Err(e) => failures.push(format!("single hook n={n}: {e}")),
        }
    }

    // stabilizer dimension strictly decreases along merge moves (n <= n_max)
    let mut sweep = Vec::new();
    for n in 1..=n_max {
        for sigma in Partition::all(n) {
            for s in ["1/4", "9/4"] {
                sweep.push((sigma.clone(), r(s)));
            }
        }
    }
    let results = map_mode(mode, &sweep, |(sigma, m)| -> Vec<String> {
        let mut local = Vec::new();
        let mut run = || -> Result<()> {
            let t = ETableau::new(sigma.clone(), *m);
            let cc = t.central_character()?;
            let orbits = enumerate_mp_capped(&cc, 14)?;
            let fold = t.fold_to_distinguished()?.saturate_marking();
            for x in &orbits {
                let bare = x.strip_marks();
                let (_, dim) = bare.stabilizer_dims(&cc)?;
                for y in spadesuit_moves(&bare, &cc)? {
                    let (_, dim_up) = y.strip_marks().stabilizer_dims(&cc)?;
                    if dim_up >= dim {
                        local.push(format!(
                            "sigma={sigma} m={m}: move {bare} -> {y} has stab dim \
                             {dim} -> {dim_up}"
                        ));
                    }
                }
            }
            let poset = build_poset(&cc, 14)?;
            let maxima = poset.maximal_nodes();
            if maxima.len() != 1 || poset.nodes[maxima[0]] != fold {
                local.push(format!(
                    "sigma={sigma} m={m}: maxima {:?}, fold {fold}",
                    maxima
                        .iter()
                        .map(|&i| poset.nodes[i].to_string())
                        .collect::<Vec<_>>()
                ));
            }
            Ok(())
        };
        if let Err(e) = run() {
            local.push(format!("sigma={sigma} m={m}: {e}"));
        }
        local
    });
    cases += sweep.len();
    failures.extend(results.into_iter().flatten());

    // merge-move reachability on unmarked orbits matches the rank oracle
    let mut small = Vec::new();
    for n in 1..=n_max.min(5) {
        for sigma in Partition::all(n) {
            for s in ["1/4", "9/4"] {
                small.push((sigma.clone(), r(s)));
            }
        }
    }
    let results = map_mode(mode, &small, |(sigma, m)| -> Vec<String> {
        match oracles::compare_reachability_with_rank_oracle(sigma, *m) {
            Ok(local) => local,
            Err(e) => vec![format!("sigma={sigma} m={m}: {e}")],
        }
    });
    cases += small.len();
    failures.extend(results.into_iter().flatten());

    report("orbit-calculus", cases, failures)
}

/// Ladder thresholds and the W-irreducible labels.
fn check_ladders(n_max: u32, mode: ExecMode) -> SuiteReport {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for sigma in Partition::all(n) {
            cases.push(sigma);
        }
    }
    let failures = map_mode(mode, &cases, |sigma| -> Option<String> {
        let n = sigma.n() as i64;
        let check = || -> Result<Option<String>> {
            let mpos = Rat::int(n) - r("3/4");
            let d = ds(sigma, mpos)?;
            let ok_pos = ladder_threshold_check(sigma, mpos)? == LadderForce::ForcedPositive
                && is_positive_ladder(&d, sigma, mpos)
                && matches!(
                    w_structure_if_ladder(sigma, mpos)?,
                    Some(w) if w.sgn_twisted
                        && w.bipartition == Bipartition::new(sigma.clone(), Partition::empty())
                );
            let mneg = -mpos;
            let d = ds(sigma, mneg)?;
            let ok_neg = ladder_threshold_check(sigma, mneg)? == LadderForce::ForcedNegative
                && is_negative_ladder(&d, sigma, mneg)
                && matches!(
                    w_structure_if_ladder(sigma, mneg)?,
                    Some(w) if !w.sgn_twisted
                        && w.bipartition == Bipartition::new(sigma.clone(), Partition::empty())
                );
            if ok_pos && ok_neg {
                Ok(None)
            } else {
                Ok(Some(format!("sigma={sigma}: pos={ok_pos} neg={ok_neg}")))
            }
        };
        check().unwrap_or_else(|e| Some(format!("sigma={sigma}: {e}")))
    });
    report(
        "ladders",
        cases.len(),
        failures.into_iter().flatten().collect(),
    )
}

/// The parameter is constant on every interval between half-integers.
fn check_interval_constancy(n_max: u32, mode: ExecMode) -> SuiteReport {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for sigma in Partition::all(n) {
            cases.push(sigma);
        }
    }
    let failures = map_mode(mode, &cases, |sigma| -> Option<String> {
        let n = sigma.n() as i64;
        match deformation_profile(sigma, Rat::int(-n - 1), Rat::int(n + 1)) {
            Ok(_) => None,
            Err(e) => Some(format!("sigma={sigma}: {e}")),
        }
    });
    report(
        "interval-constancy",
        cases.len(),
        failures.into_iter().flatten().collect(),
    )
}

/// Every hook-nested component of the output satisfies its predicate set,
/// and at small rank no enumerated orbit strictly below the output in the
/// computable order satisfies the same conditions.
fn check_predicates(n_max: u32, mode: ExecMode) -> SuiteReport {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for sigma in Partition::all(n) {
            for m in interval_samples(n as i64) {
                cases.push((sigma.clone(), m));
            }
        }
    }
    let failures = map_mode(mode, &cases, |(sigma, m)| -> Option<String> {
        let check = || -> Result<Option<String>> {
            let d = ds(sigma, *m)?;
            for (component, sign) in hook_components(sigma, *m, &d)? {
                if !minimality_predicates(&component, sign).all() {
                    return Ok(Some(format!(
                        "sigma={sigma} m={m}: component {component} fails {sign:?} predicates"
                    )));
                }
            }
            Ok(None)
        };
        check().unwrap_or_else(|e| Some(format!("sigma={sigma} m={m}: {e}")))
    });
    let mut failures: Vec<String> = failures.into_iter().flatten().collect();
    let total = cases.len();

    // minimality in the computable order at n <= min(n_max, 6)
    let mut small = Vec::new();
    for n in 1..=n_max.min(6) {
        for sigma in Partition::all(n) {
            for s in ["1/4", "3/4", "9/4"] {
                small.push((sigma.clone(), r(s)));
            }
        }
    }
    let results = map_mode(mode, &small, |(sigma, m)| -> Vec<String> {
        let mut local = Vec::new();
        let mut run = || -> Result<()> {
            let t = ETableau::new(sigma.clone(), *m);
            let cc = t.central_character()?;
            let d = ds(sigma, *m)?.saturate_marking();
            if !admits_hook_decomposition(sigma, *m, &d)? {
                local.push(format!(
                    "sigma={sigma} m={m}: the output {d} does not admit its own \
                     hook decomposition"
                ));
            }
            for x in enumerate_mp_capped(&cc, 14)? {
                if x == d || !closure_leq(&x, &d, &cc)? {
                    continue;
                }
                // strictly below the output: must fail the predicate system
                if admits_hook_decomposition(sigma, *m, &x)? {
                    local.push(format!(
                        "sigma={sigma} m={m}: {x} lies strictly below {d} \
                         yet satisfies the predicates"
                    ));
                }
            }
            Ok(())
        };
        if let Err(e) = run() {
            local.push(format!("sigma={sigma} m={m}: {e}"));
        }
        local
    });
    failures.extend(results.into_iter().flatten());
    report("predicates", total + small.len(), failures)
}

/// Whether a marked partition splits along the hook sign runs and satisfies
/// the sign predicates on every block.
fn admits_hook_decomposition(sigma: &Partition, m: Rat, mp: &MarkedPartition) -> Result<bool> {
    let comps = match hook_components(sigma, m, mp) {
        Ok(c) => c,
        Err(Error::Internal(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(comps
        .iter()
        .all(|(c, sign)| minimality_predicates(c, *sign).all()))
}

/// Segment e-values of the output exhaust the central character, and the
/// folded open-orbit parameter does too.
fn check_conservation(n_max: u32, mode: ExecMode) -> SuiteReport {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for sigma in Partition::all(n) {
            for s in ["1/4", "3/4", "9/4", "-5/4"] {
                cases.push((sigma.clone(), r(s)));
            }
        }
    }
    let failures = map_mode(mode, &cases, |(sigma, m)| -> Option<String> {
        let check = || -> Result<Option<String>> {
            let t = ETableau::new(sigma.clone(), *m);
            let cc = t.central_character()?;
            let d = ds(sigma, *m)?;
            if !d.adapted_to(&cc) {
                return Ok(Some(format!("sigma={sigma} m={m}: ds not adapted")));
            }
            let fold = t.fold_to_distinguished()?;
            if !fold.adapted_to(&cc) {
                return Ok(Some(format!("sigma={sigma} m={m}: fold not adapted")));
            }
            Ok(None)
        };
        check().unwrap_or_else(|e| Some(format!("sigma={sigma} m={m}: {e}")))
    });
    report(
        "conservation",
        cases.len(),
        failures.into_iter().flatten().collect(),
    )
}
