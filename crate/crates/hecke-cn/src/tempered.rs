//! Tempered parameters at generic `m`: a GL-tempered factor on the
//! half-integer coset times a discrete series on the `m + Z` coset, plus the
//! Casselman classification of weight sets.

use crate::ds::ds;
use crate::marked::{MarkedPartition, MarkedSegment};
use crate::partition::Partition;
use crate::rational::{is_generic, Rat};
use crate::segment::{Coset, Segment};
use crate::tableau::{CentralCharacter, ETableau};
use crate::{Error, Result};
use serde_json::{json, Value};
use std::fmt;

/// Segments of the GL-tempered module attached to a partition: one symmetric
/// segment `{-(p-1)/2, ..., (p-1)/2}` per part, unmarked.
pub fn gl_tempered_segments(sigma_a: &Partition) -> Vec<Segment> {
    sigma_a
        .parts()
        .iter()
        .map(|&p| {
            let half = Rat::new(p as i64 - 1, 2);
            Segment::gl(-half, half).expect("symmetric half-integer segment")
        })
        .collect()
}

/// A tempered parameter: a GL partition, an Sp partition, and the combined
/// central character and marked partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TemperedParameter {
    pub gl_part: Partition,
    pub sp_part: Partition,
    pub m: Rat,
    pub character: CentralCharacter,
    pub parameter: MarkedPartition,
}

impl TemperedParameter {
    pub fn to_json(&self) -> Value {
        json!({
            "gl": self.gl_part.to_string(),
            "sp": self.sp_part.to_string(),
            "m": self.m.to_string(),
            "parameter": self.parameter.to_json(),
        })
    }
}

impl fmt::Display for TemperedParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "gl=({}) sp=({}) {}",
            self.gl_part, self.sp_part, self.parameter
        )
    }
}

/// Combines the GL-tempered segments of `sigma_a` with the discrete-series
/// parameter of `sigma_sp`. Requires generic `m` so the two cosets are
/// disjoint.
pub fn tempered_parameter(
    sigma_a: &Partition,
    sigma_sp: &Partition,
    m: Rat,
) -> Result<TemperedParameter> {
    if !is_generic(m) {
        return Err(Error::NonGeneric(m));
    }
    let d = ds(sigma_sp, m)?;
    let mut items: Vec<MarkedSegment> = d.items().to_vec();
    for seg in gl_tempered_segments(sigma_a) {
        items.push(MarkedSegment { seg, marked: false });
    }
    let parameter = MarkedPartition::new(m, items)?;
    let mut weights: Vec<(Rat, Coset)> = ETableau::new(sigma_sp.clone(), m)
        .central_character()?
        .weights()
        .to_vec();
    for seg in gl_tempered_segments(sigma_a) {
        for v in seg.values() {
            weights.push((v, Coset::Gl));
        }
    }
    let character = CentralCharacter::new(m, weights)?;
    Ok(TemperedParameter {
        gl_part: sigma_a.clone(),
        sp_part: sigma_sp.clone(),
        m,
        character,
        parameter,
    })
}

/// All tempered parameters of total size `n`: pairs of a GL partition of
/// `n1` and an Sp partition of `n - n1`, with `n1` running from 0 to `n`.
/// The count is the number of bipartitions of `n`.
pub fn enumerate_tempered(n: u32, m: Rat) -> Result<Vec<TemperedParameter>> {
    if !is_generic(m) {
        return Err(Error::NonGeneric(m));
    }
    let mut out = Vec::new();
    for n1 in 0..=n {
        for gl in Partition::all(n1) {
            for sp in Partition::all(n - n1) {
                out.push(tempered_parameter(&gl, &sp, m)?);
            }
        }
    }
    Ok(out)
}

/// Casselman classification of a weight set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Temperedness {
    DiscreteSeries,
    TemperedNotDs,
    Neither,
}

impl Temperedness {
    pub fn as_str(&self) -> &'static str {
        match self {
            Temperedness::DiscreteSeries => "discrete_series",
            Temperedness::TemperedNotDs => "tempered_not_ds",
            Temperedness::Neither => "neither",
        }
    }
}

/// Classifies a set of weights given in log coordinates: discrete series
/// when every partial sum of every tuple is strictly negative, tempered when
/// all are nonpositive with some zero, neither otherwise. All tuples must
/// have equal length.
pub fn casselman_classify(weights: &[Vec<Rat>]) -> Result<Temperedness> {
    if let Some(first) = weights.first() {
        if weights.iter().any(|w| w.len() != first.len()) {
            return Err(Error::Invalid("ragged weight tuples".into()));
        }
    }
    let mut saw_zero = false;
    for tuple in weights {
        let mut sum = Rat::zero();
        for &x in tuple {
            sum += x;
            if sum.is_positive() {
                return Ok(Temperedness::Neither);
            }
            if sum.is_zero() {
                saw_zero = true;
            }
        }
    }
    Ok(if saw_zero {
        Temperedness::TemperedNotDs
    } else {
        Temperedness::DiscreteSeries
    })
}
