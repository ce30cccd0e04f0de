//! Young diagrams filled by the e-function `e(row, col) = m + col - row`.
//!
//! Diagonal boxes carry the value `m`. Rows increase strictly left to right,
//! columns decrease strictly top to bottom, so for generic `m` the largest
//! `|e|` is attained at the end of the first row or the bottom of the first
//! column.

use crate::marked::{MarkedPartition, MarkedSegment};
use crate::partition::{BoxPos, Partition};
use crate::rational::{is_generic, Rat};
use crate::segment::{Coset, Segment};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A partition together with the parameter `m`; entries are derived, never
/// stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ETableau {
    pub shape: Partition,
    pub m: Rat,
}

/// One principal hook: the row part (including the diagonal box) and the
/// column part below the diagonal, with the two extremity e-values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hook {
    /// 1 = outermost.
    pub index: u32,
    /// E-values of the row part, ascending; starts at the diagonal value.
    pub arm_evalues: Vec<Rat>,
    /// E-values of the column part below the diagonal, descending.
    pub leg_evalues: Vec<Rat>,
    /// Right extremity, the e-value of the rightmost box of the row.
    pub r: Rat,
    /// Bottom extremity, the e-value of the bottom box of the column.
    pub r_prime: Rat,
}

impl Hook {
    pub fn size(&self) -> u32 {
        (self.arm_evalues.len() + self.leg_evalues.len()) as u32
    }

    /// Sum of the e-values over all boxes of the hook.
    pub fn e_sum(&self) -> Rat {
        let mut s = Rat::zero();
        for v in self.arm_evalues.iter().chain(self.leg_evalues.iter()) {
            s += *v;
        }
        s
    }
}

impl ETableau {
    pub fn new(shape: Partition, m: Rat) -> Self {
        ETableau { shape, m }
    }

    /// `e(box) = m + col - row`; errors when the box is outside the shape.
    pub fn e_value(&self, b: BoxPos) -> Result<Rat> {
        if !self.shape.contains_box(b) {
            return Err(Error::BoxOutsideShape {
                row: b.row,
                col: b.col,
            });
        }
        Ok(self.m + b.col as i64 - b.row as i64)
    }

    /// All boxes in row-major order.
    pub fn boxes(&self) -> Vec<BoxPos> {
        let mut out = Vec::new();
        for (i, &p) in self.shape.parts().iter().enumerate() {
            for c in 1..=p {
                out.push(BoxPos::new(i as u32 + 1, c));
            }
        }
        out
    }

    /// Principal hooks, outermost first. Stripping the first row and first
    /// column repeatedly; the empty shape yields no hooks.
    pub fn hook_decomposition(&self) -> Vec<Hook> {
        let conj = self.shape.conjugate();
        let h = self.shape.durfee();
        (1..=h)
            .map(|j| {
                let row_len = self.shape.part(j);
                let col_len = conj.part(j);
                let arm: Vec<Rat> = (0..=(row_len as i64 - j as i64))
                    .map(|t| self.m + t)
                    .collect();
                let leg: Vec<Rat> = (1..=(col_len as i64 - j as i64))
                    .map(|t| self.m - t)
                    .collect();
                let r = self.m + (row_len as i64 - j as i64);
                let r_prime = self.m - (col_len as i64 - j as i64);
                Hook {
                    index: j,
                    arm_evalues: arm,
                    leg_evalues: leg,
                    r,
                    r_prime,
                }
            })
            .collect()
    }

    /// Hook e-value sums, outermost first.
    pub fn hook_e_sums(&self) -> Vec<Rat> {
        self.hook_decomposition().iter().map(Hook::e_sum).collect()
    }

    /// The distinguished (open-orbit) marked partition: one marked segment
    /// per hook with e-range `[r_j', r_j]`. Requires generic `m`; the empty
    /// shape folds to the empty marked partition.
    pub fn fold_to_distinguished(&self) -> Result<MarkedPartition> {
        if !is_generic(self.m) {
            return Err(Error::NonGeneric(self.m));
        }
        let items = self
            .hook_decomposition()
            .into_iter()
            .map(|h| {
                Ok(MarkedSegment {
                    seg: Segment::sp(h.r_prime, h.r)?,
                    marked: true,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MarkedPartition::new(self.m, items)
    }

    /// The multiset of all e-values, tagged with the Sp coset, ordered by
    /// decreasing value. Requires generic `m`.
    pub fn central_character(&self) -> Result<CentralCharacter> {
        if !is_generic(self.m) {
            return Err(Error::NonGeneric(self.m));
        }
        let mut weights: Vec<(Rat, Coset)> = self
            .boxes()
            .into_iter()
            .map(|b| (self.e_value(b).expect("box in shape"), Coset::Sp))
            .collect();
        weights.sort_by_key(|w| std::cmp::Reverse(w.0));
        Ok(CentralCharacter { m: self.m, weights })
    }

    /// ASCII rendering: one line per row of bracketed e-values, columns
    /// padded to equal width.
    pub fn render_ascii(&self) -> String {
        if self.shape.is_empty() {
            return String::from("(empty)\n");
        }
        let cells: Vec<Vec<String>> = self
            .shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                (1..=p)
                    .map(|c| format!("{}", self.m + c as i64 - (i as i64 + 1)))
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in &cells {
            for cell in row {
                out.push('[');
                out.push_str(&format!("{cell:>width$}"));
                out.push(']');
            }
            out.push('\n');
        }
        out
    }
}

/// Extremities of a shape at parameter `k`.
///
/// Fill the diagram with parameter `k` and let `frac = k - floor(k)`. The
/// first multiset collects the maximal entry of every row whose maximum is
/// `>= frac` (rows reaching the `frac` diagonal); the second collects the
/// negated minimal entry of every column whose minimum is `<= frac - 1`
/// (columns reaching the diagonal of the smallest entries `= frac - 1`).
/// Both are returned in descending order with repetitions kept.
pub fn extremities(shape: &Partition, k: Rat) -> (Vec<Rat>, Vec<Rat>) {
    let frac = k.frac();
    let mut eplus = Vec::new();
    for (i, &p) in shape.parts().iter().enumerate() {
        let row_max = k + p as i64 - (i as i64 + 1);
        if row_max >= frac {
            eplus.push(row_max);
        }
    }
    let conj = shape.conjugate();
    let mut eminus = Vec::new();
    for (c, &len) in conj.parts().iter().enumerate() {
        let col_min = k + (c as i64 + 1) - len as i64;
        if col_min < frac {
            eminus.push(-col_min);
        }
    }
    eplus.sort_by_key(|&v| std::cmp::Reverse(v));
    eminus.sort_by_key(|&v| std::cmp::Reverse(v));
    (eplus, eminus)
}

/// A multiset of rational log-weights tagged by coset, plus the ambient
/// parameter `m`. Stored in decreasing value order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralCharacter {
    pub m: Rat,
    weights: Vec<(Rat, Coset)>,
}

impl CentralCharacter {
    pub fn new(m: Rat, mut weights: Vec<(Rat, Coset)>) -> Result<Self> {
        for &(v, c) in &weights {
            match c {
                Coset::Sp => {
                    if !(v - m).is_integer() {
                        return Err(Error::Invalid(format!(
                            "Sp weight {v} is not congruent to m = {m} mod 1"
                        )));
                    }
                }
                Coset::Gl => {
                    if !(v * 2).is_integer() {
                        return Err(Error::Invalid(format!(
                            "GL weight {v} is not a half-integer"
                        )));
                    }
                }
            }
        }
        weights.sort_by_key(|w| std::cmp::Reverse(w.0));
        Ok(CentralCharacter { m, weights })
    }

    pub fn weights(&self) -> &[(Rat, Coset)] {
        &self.weights
    }

    pub fn size(&self) -> u32 {
        self.weights.len() as u32
    }

    /// The Sp-coset part as integer offsets from `m`, with multiplicities.
    pub fn sp_offsets(&self) -> BTreeMap<i64, u32> {
        let mut map = BTreeMap::new();
        for &(v, c) in &self.weights {
            if c == Coset::Sp {
                let k = (v - self.m).to_integer().expect("validated Sp weight");
                *map.entry(k).or_insert(0) += 1;
            }
        }
        map
    }

    pub fn gl_values(&self) -> Vec<Rat> {
        self.weights
            .iter()
            .filter(|(_, c)| *c == Coset::Gl)
            .map(|(v, _)| *v)
            .collect()
    }

    pub fn has_gl(&self) -> bool {
        self.weights.iter().any(|(_, c)| *c == Coset::Gl)
    }

    /// Dimension of the centralizer group: the sum of squared multiplicities
    /// over distinct weight values.
    pub fn dim_g(&self) -> i64 {
        let mut mult: BTreeMap<Rat, i64> = BTreeMap::new();
        for &(v, _) in &self.weights {
            *mult.entry(v).or_insert(0) += 1;
        }
        mult.values().map(|&c| c * c).sum()
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<(Rat, u32)> = Vec::new();
        for &(v, _) in &self.weights {
            match groups.last_mut() {
                Some((w, c)) if *w == v => *c += 1,
                _ => groups.push((v, 1)),
            }
        }
        let s: Vec<String> = groups
            .iter()
            .map(|(v, c)| {
                if *c == 1 {
                    format!("{v}")
                } else {
                    format!("{v}^{c}")
                }
            })
            .collect();
        write!(f, "{}", s.join(" "))
    }
}
