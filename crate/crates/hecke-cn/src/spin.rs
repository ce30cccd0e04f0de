//! Defect calculus on partitions of `ell`, the map from a partition of `n`
//! to a distinguished nilpotent orbit, and the two algorithms attaching a
//! bipartition to such data: the recursive one on orbit partitions and the
//! strip-removal one on e-filled tableaux. The two are cross-validated
//! against each other on full grids.

use crate::par::{map_mode, ExecMode};
use crate::partition::{Bipartition, Partition};
use crate::rational::Rat;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A nilpotent-orbit partition for `so(ell)`: parts stored increasing.
/// Membership in the relevant orbit set requires odd parts with multiplicity
/// one and even parts with even multiplicity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinOrbit {
    parts: Vec<u64>,
}

impl SpinOrbit {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid("orbit parts must be positive".into()));
        }
        parts.sort_unstable();
        Ok(SpinOrbit { parts })
    }

    pub fn empty() -> Self {
        SpinOrbit { parts: Vec::new() }
    }

    /// Parts in increasing order.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn ell(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Odd parts with multiplicity one, even parts with even multiplicity.
    pub fn in_x_ell(&self) -> bool {
        let mut mult: BTreeMap<u64, u32> = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        mult.iter()
            .all(|(&p, &c)| if p % 2 == 1 { c == 1 } else { c % 2 == 0 })
    }

    /// Distinct odd parts.
    pub fn is_distinguished(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1) && self.parts.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for SpinOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for SpinOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Defect of one part: `+1` when `a = 1 mod 4`, `0` when even, `-1` when
/// `a = 3 mod 4`.
pub fn part_defect(a: i64) -> i64 {
    match a.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

/// Sum of the part defects.
pub fn orbit_defect(o: &SpinOrbit) -> i64 {
    o.parts.iter().map(|&p| part_defect(p as i64)).sum()
}

fn four_m_odd(m: Rat) -> Result<i64> {
    let j = (m * 4)
        .to_integer()
        .map_err(|_| Error::Invalid(format!("4m must be an odd integer, got m = {m}")))?;
    if j.rem_euclid(2) != 1 {
        return Err(Error::Invalid(format!("4m must be odd, got 4m = {j}")));
    }
    Ok(j)
}

/// For a quarter-integer parameter: the defect `d = -d(4m) * floor(m + 1/4)`
/// and the orbit size `ell = 4n + d(2d - 1)`.
pub fn expected_params(n: u32, m: Rat) -> Result<(i64, u64)> {
    let j = four_m_odd(m)?;
    let d = -part_defect(j) * (m + Rat::new(1, 4)).floor_int();
    let ell = 4 * n as i64 + d * (2 * d - 1);
    debug_assert!(ell >= 0);
    Ok((d, ell as u64))
}

/// The cuspidal seed partition `{4m-2, 4m-6, ..., 4 - 4 frac(m)}`, descending
/// by 4; empty when `m = 1/4`. Requires `4m` a positive odd integer.
pub fn cuspidal_part(m: Rat) -> Result<SpinOrbit> {
    let j = four_m_odd(m)?;
    if j < 1 {
        return Err(Error::Invalid(format!("need m >= 1/4, got m = {m}")));
    }
    let last = (Rat::int(4) - m.frac() * 4).to_integer()?;
    let mut parts = Vec::new();
    let mut v = j - 2;
    while v >= last {
        parts.push(v as u64);
        v -= 4;
    }
    SpinOrbit::new(parts)
}

/// Attaches to `sigma` a distinguished orbit: seed with the cuspidal part,
/// then process hooks innermost to outermost with extremities `(r, r')`;
/// when `r' <= 1/4` add parts `4r + 2` and `-4r' + 2`, otherwise add
/// `4r + 2` and remove `4r' - 2`.
pub fn sigma_to_orbit(sigma: &Partition, m: Rat) -> Result<SpinOrbit> {
    four_m_odd(m)?;
    let seed = cuspidal_part(m)?;
    let mut parts: BTreeMap<i64, u32> = BTreeMap::new();
    for &p in seed.parts() {
        *parts.entry(p as i64).or_insert(0) += 1;
    }
    let hooks = crate::tableau::ETableau::new(sigma.clone(), m).hook_decomposition();
    let quarter = Rat::new(1, 4);
    for h in hooks.iter().rev() {
        let add_r = (h.r * 4 + 2).to_integer()?;
        if h.r_prime <= quarter {
            let add_rp = (-(h.r_prime * 4) + 2).to_integer()?;
            *parts.entry(add_r).or_insert(0) += 1;
            *parts.entry(add_rp).or_insert(0) += 1;
        } else {
            let rem = (h.r_prime * 4 - 2).to_integer()?;
            *parts.entry(add_r).or_insert(0) += 1;
            match parts.get_mut(&rem) {
                Some(c) if *c > 0 => {
                    *c -= 1;
                    if *c == 0 {
                        parts.remove(&rem);
                    }
                }
                _ => {
                    return Err(Error::Invalid(format!(
                        "hook {} of {sigma} asks to remove absent part {rem}",
                        h.index
                    )))
                }
            }
        }
    }
    let mut flat = Vec::new();
    for (&p, &c) in &parts {
        if p <= 0 {
            return Err(Error::Internal(format!("nonpositive part {p} produced")));
        }
        flat.extend(std::iter::repeat_n(p as u64, c as usize));
    }
    SpinOrbit::new(flat)
}

/// The recursive bipartition of an orbit partition: strip the largest part
/// (one part when odd, the top equal pair when even), recurse, then place
/// the new entry according to the defect cases.
pub fn ls_rho(lambda: &SpinOrbit) -> Result<Bipartition> {
    if !lambda.in_x_ell() {
        return Err(Error::Invalid(format!(
            "{lambda} is not an admissible orbit partition (odd parts must be \
             simple, even parts paired)"
        )));
    }
    rho_rec(lambda.parts())
}

fn rho_rec(parts: &[u64]) -> Result<Bipartition> {
    let p = match parts.last() {
        None => return Ok(Bipartition::default()),
        Some(&p) => p as i64,
    };
    let (mu, d_top) = if p % 2 == 1 {
        (&parts[..parts.len() - 1], part_defect(p))
    } else {
        if parts.len() < 2 || parts[parts.len() - 2] as i64 != p {
            return Err(Error::Invalid(format!(
                "even part {p} is not paired in {parts:?}"
            )));
        }
        (&parts[..parts.len() - 2], 0)
    };
    let prev = rho_rec(mu)?;
    let d_mu: i64 = mu.iter().map(|&a| part_defect(a as i64)).sum();
    let (mut gamma, mut delta) = (prev.left, prev.right);

    let append = |part: &mut Partition, e: i64| -> Result<()> {
        if e < 0 {
            return Err(Error::Internal(format!("negative entry {e} appended")));
        }
        if e > 0 {
            let mut ps: Vec<u32> = part.parts().to_vec();
            ps.push(e as u32);
            *part = Partition::from_unsorted(ps)?;
        }
        Ok(())
    };

    match d_top {
        0 => {
            let e = (p + 2).div_euclid(4) - d_mu;
            let f = p.div_euclid(4) + d_mu;
            if d_mu > 0 {
                append(&mut gamma, e)?;
                append(&mut delta, f)?;
            } else {
                append(&mut gamma, f)?;
                append(&mut delta, e)?;
            }
            Ok(Bipartition::new(gamma, delta))
        }
        1 => {
            let e = (p - 1) / 4 - d_mu;
            match d_mu.cmp(&0) {
                std::cmp::Ordering::Greater => {
                    append(&mut gamma, e)?;
                    Ok(Bipartition::new(gamma, delta))
                }
                std::cmp::Ordering::Equal => {
                    append(&mut delta, e)?;
                    Ok(Bipartition::new(delta, gamma))
                }
                std::cmp::Ordering::Less => {
                    append(&mut delta, e)?;
                    Ok(Bipartition::new(gamma, delta))
                }
            }
        }
        _ => {
            let e = (p - 3) / 4 + d_mu;
            match d_mu.cmp(&1) {
                std::cmp::Ordering::Greater => {
                    append(&mut delta, e)?;
                    Ok(Bipartition::new(gamma, delta))
                }
                std::cmp::Ordering::Equal => {
                    append(&mut delta, e)?;
                    Ok(Bipartition::new(delta, gamma))
                }
                std::cmp::Ordering::Less => {
                    append(&mut gamma, e)?;
                    Ok(Bipartition::new(gamma, delta))
                }
            }
        }
    }
}

/// The strip-removal bipartition: repeatedly remove the row (append its
/// length to the left component) or column (append to the right component)
/// of the current maximal `|e|` box; a final single positive box appends 1
/// to the left, negative to the right. Requires no `|e|`-ties, i.e. `2m`
/// not an integer.
pub fn slooten_bipartition(sigma: &Partition, m: Rat) -> Result<Bipartition> {
    let mut parts: Vec<i64> = sigma.parts().iter().map(|&p| p as i64).collect();
    let mut corner = m;
    let mut gamma = Vec::new();
    let mut delta = Vec::new();
    while !parts.is_empty() {
        let top = corner + (parts[0] - 1);
        let bot = corner - (parts.len() as i64 - 1);
        if top == -bot {
            return Err(Error::Invalid(format!(
                "|e|-tie at m = {m}; strip removal needs 2m not an integer"
            )));
        }
        if top > -bot {
            gamma.push(parts[0] as u32);
            parts.remove(0);
            corner = corner - 1;
        } else {
            delta.push(parts.len() as u32);
            for p in parts.iter_mut() {
                *p -= 1;
            }
            parts.retain(|&p| p > 0);
            corner = corner + 1;
        }
    }
    Ok(Bipartition::new(
        Partition::from_unsorted(gamma)?,
        Partition::from_unsorted(delta)?,
    ))
}

/// All partitions of `ell` into distinct odd parts with total defect `d`,
/// sorted. Requires `4 | (ell - d)`.
pub fn enumerate_distinguished(ell: u64, d: i64) -> Result<Vec<SpinOrbit>> {
    if (ell as i64 - d).rem_euclid(4) != 0 {
        return Err(Error::Invalid(format!(
            "need 4 | (ell - d), got ell = {ell}, d = {d}"
        )));
    }
    fn rec(
        rest: u64,
        max_part: u64,
        defect: i64,
        cur: &mut Vec<u64>,
        out: &mut Vec<SpinOrbit>,
        d: i64,
    ) {
        if rest == 0 {
            if defect == d {
                out.push(SpinOrbit {
                    parts: {
                        let mut v = cur.clone();
                        v.reverse();
                        v
                    },
                });
            }
            return;
        }
        let mut p = max_part.min(rest);
        if p.is_multiple_of(2) {
            if p == 0 {
                return;
            }
            p -= 1;
        }
        while p >= 1 {
            // distinct odd parts below p can sum to at most p-2 + p-4 + ...
            cur.push(p);
            rec(
                rest - p,
                p.saturating_sub(2),
                defect + part_defect(p as i64),
                cur,
                out,
                d,
            );
            cur.pop();
            if p < 2 {
                break;
            }
            p -= 2;
        }
    }
    let mut out = Vec::new();
    rec(ell, ell.max(1), 0, &mut Vec::new(), &mut out, d);
    out.sort();
    Ok(out)
}

/// One row of the cross-validation report.
#[derive(Clone, Debug)]
pub struct CrossValidationRow {
    pub n: u32,
    pub m: Rat,
    pub sigma: Partition,
    pub slooten: Bipartition,
    pub orbit: SpinOrbit,
    pub ls: Bipartition,
    pub pass: bool,
}

/// Report of the full-grid comparison between the two bipartition
/// algorithms, including the defect, size, and injectivity checks.
#[derive(Clone, Debug, Default)]
pub struct CrossValidationReport {
    pub rows: Vec<CrossValidationRow>,
    pub failures: Vec<String>,
}

impl CrossValidationReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// CSV with columns `n,m,sigma,bipartition_slooten,orbit,bipartition_ls,pass`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,m,sigma,bipartition_slooten,orbit,bipartition_ls,pass\n");
        for row in &self.rows {
            s.push_str(&format!(
                "{},{},\"{}\",\"{}\",\"{}\",\"{}\",{}\n",
                row.n, row.m, row.sigma, row.slooten, row.orbit, row.ls, row.pass
            ));
        }
        s
    }
}

/// For every partition of every `n <= n_max` and every listed `m`: checks
/// that the two bipartition algorithms agree, that the orbit has the
/// expected defect and size with odd distinct parts, and that the orbit map
/// is injective per `(n, m)`. Failures are collected as data, not errors.
pub fn cross_validate(n_max: u32, m_list: &[Rat]) -> Result<CrossValidationReport> {
    cross_validate_with(n_max, m_list, ExecMode::default())
}

/// [`cross_validate`] with an explicit execution mode.
pub fn cross_validate_with(
    n_max: u32,
    m_list: &[Rat],
    mode: ExecMode,
) -> Result<CrossValidationReport> {
    for &m in m_list {
        four_m_odd(m)?;
    }
    let mut cases = Vec::new();
    for n in 0..=n_max {
        for sigma in Partition::all(n) {
            for &m in m_list {
                cases.push((n, sigma.clone(), m));
            }
        }
    }
    let rows = map_mode(
        mode,
        &cases,
        |(n, sigma, m)| -> Result<CrossValidationRow> {
            let orbit = sigma_to_orbit(sigma, *m)?;
            let slooten = slooten_bipartition(sigma, *m)?;
            let ls = ls_rho(&orbit)?;
            let (d, ell) = expected_params(*n, *m)?;
            let pass = slooten == ls
                && orbit.ell() == ell
                && orbit_defect(&orbit) == d
                && orbit.is_distinguished();
            Ok(CrossValidationRow {
                n: *n,
                m: *m,
                sigma: sigma.clone(),
                slooten,
                orbit,
                ls,
                pass,
            })
        },
    );
    let mut report = CrossValidationReport::default();
    for row in rows {
        let row = row?;
        if !row.pass {
            report.failures.push(format!(
                "n={} m={} sigma={}: slooten={} orbit={} ls={}",
                row.n, row.m, row.sigma, row.slooten, row.orbit, row.ls
            ));
        }
        report.rows.push(row);
    }
    // injectivity of the orbit map per (n, m)
    let mut seen: BTreeMap<(u32, Rat, SpinOrbit), Partition> = BTreeMap::new();
    for row in &report.rows {
        let key = (row.n, row.m, row.orbit.clone());
        if let Some(other) = seen.get(&key) {
            report.failures.push(format!(
                "orbit map not injective at n={} m={}: {} and {} both give {}",
                row.n, row.m, other, row.sigma, row.orbit
            ));
        } else {
            seen.insert(key, row.sigma.clone());
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn orbit(parts: &[u64]) -> SpinOrbit {
        SpinOrbit::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn part_defect_examples() {
        assert_eq!(part_defect(1), 1);
        assert_eq!(part_defect(7), -1);
        assert_eq!(part_defect(4), 0);
    }

    #[test]
    fn orbit_defect_examples() {
        assert_eq!(orbit_defect(&orbit(&[3, 7])), -2);
        assert_eq!(orbit_defect(&orbit(&[1, 3, 9, 11, 15, 23])), -2);
        assert_eq!(orbit_defect(&SpinOrbit::empty()), 0);
    }

    #[test]
    fn expected_params_examples() {
        assert_eq!(expected_params(13, r("9/4")).unwrap(), (-2, 62));
        assert_eq!(expected_params(2, r("1/4")).unwrap(), (0, 8));
        assert_eq!(expected_params(1, r("3/4")).unwrap(), (1, 5));
        assert!(expected_params(2, r("1/2")).is_err());
    }

    #[test]
    fn cuspidal_part_examples() {
        assert_eq!(cuspidal_part(r("9/4")).unwrap(), orbit(&[3, 7]));
        assert_eq!(cuspidal_part(r("1/4")).unwrap(), SpinOrbit::empty());
        assert_eq!(cuspidal_part(r("3/4")).unwrap(), orbit(&[1]));
        assert_eq!(cuspidal_part(r("11/4")).unwrap(), orbit(&[1, 5, 9]));
        // sum of the cuspidal entries is d(2d-1)
        for s in ["1/4", "3/4", "5/4", "7/4", "9/4", "11/4"] {
            let m = r(s);
            let (d, _) = expected_params(0, m).unwrap();
            assert_eq!(cuspidal_part(m).unwrap().ell() as i64, d * (2 * d - 1));
        }
    }

    #[test]
    fn sigma_to_orbit_examples() {
        assert_eq!(
            sigma_to_orbit(&pt("4,3,3,2,1"), r("9/4")).unwrap(),
            orbit(&[1, 3, 9, 11, 15, 23])
        );
        assert_eq!(sigma_to_orbit(&pt("1"), r("1/4")).unwrap(), orbit(&[1, 3]));
        assert_eq!(sigma_to_orbit(&pt("1"), r("3/4")).unwrap(), orbit(&[5]));
    }

    #[test]
    fn ls_rho_examples() {
        assert_eq!(ls_rho(&SpinOrbit::empty()).unwrap(), Bipartition::default());
        assert_eq!(
            ls_rho(&orbit(&[1, 3, 9, 11, 15, 23])).unwrap(),
            Bipartition::new(pt("4,3,3,1"), pt("2"))
        );
        assert_eq!(
            ls_rho(&orbit(&[5])).unwrap(),
            Bipartition::new(pt("1"), Partition::empty())
        );
        assert!(ls_rho(&orbit(&[3, 3])).is_err());
    }

    #[test]
    fn slooten_examples() {
        assert_eq!(
            slooten_bipartition(&pt("4,3,3,2,1"), r("9/4")).unwrap(),
            Bipartition::new(pt("4,3,3,1"), pt("2"))
        );
        assert_eq!(
            slooten_bipartition(&pt("4"), r("3/4")).unwrap(),
            Bipartition::new(pt("4"), Partition::empty())
        );
        assert_eq!(
            slooten_bipartition(&pt("1,1"), r("1/4")).unwrap(),
            Bipartition::new(Partition::empty(), pt("2"))
        );
    }

    #[test]
    fn enumerate_distinguished_examples() {
        let all = enumerate_distinguished(62, -2).unwrap();
        assert!(all.contains(&orbit(&[1, 3, 9, 11, 15, 23])));
        assert_eq!(enumerate_distinguished(5, 1).unwrap(), vec![orbit(&[5])]);
        assert_eq!(
            enumerate_distinguished(0, 0).unwrap(),
            vec![SpinOrbit::empty()]
        );
        assert!(enumerate_distinguished(5, 0).is_err());
    }

    #[test]
    fn distinguished_counts_are_partition_numbers() {
        for n in 0..=8u32 {
            for s in ["1/4", "3/4", "5/4", "9/4"] {
                let m = r(s);
                let (d, ell) = expected_params(n, m).unwrap();
                let count = enumerate_distinguished(ell, d).unwrap().len() as u64;
                assert_eq!(count, Partition::count(n), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn cross_validation_small_grid() {
        let ms: Vec<Rat> = ["1/4", "3/4", "5/4", "7/4", "9/4", "11/4"]
            .iter()
            .map(|s| r(s))
            .collect();
        let report = cross_validate(5, &ms).unwrap();
        assert!(report.pass(), "failures: {:?}", report.failures);
        assert_eq!(report.rows.len(), 6 * (1 + 1 + 2 + 3 + 5 + 7));
        let csv = report.to_csv();
        assert!(csv.starts_with("n,m,sigma,bipartition_slooten,orbit,bipartition_ls,pass\n"));
        // vacuous pass at n_max = 0: only the empty partition rows
        let empty = cross_validate(0, &ms).unwrap();
        assert!(empty.pass());
    }
}
