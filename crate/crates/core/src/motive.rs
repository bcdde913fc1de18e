//! The motive of the affine Grassmannian as a formal sum of pure Tate
//! motives `Z[1/e](n)[2n]`, one summand per Bruhat cell of dimension `n`.
//!
//! Only multiplicities are modelled. The closed stages `X_i` (cells of
//! dimension at most `i`) split as `M(X_i) = M(X_{i-1}) ⊕ Z(i)[2i]^{c_i}`, so
//! each stage is the partial sum of the cell series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::algebra::Field;
use crate::cells::{enumerate_cells_in_components, TruncatedSeries};
use crate::error::{Error, Result};
use crate::rootdata::RootSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateSum {
    exp_char: u32,
    multiplicities: BTreeMap<u64, u64>,
    truncated_at: Option<u64>,
}

/// `1` in characteristic zero, `p` in characteristic `p`.
pub fn exponential_characteristic(field: Field) -> u32 {
    match field {
        Field::Rational => 1,
        Field::Prime(p) => p,
    }
}

impl TateSum {
    pub fn empty(exp_char: u32) -> TateSum {
        TateSum {
            exp_char,
            multiplicities: BTreeMap::new(),
            truncated_at: None,
        }
    }

    pub fn exp_char(&self) -> u32 {
        self.exp_char
    }

    /// `Z` when `e = 1`, otherwise `Z[1/e]`.
    pub fn coefficient_tag(&self) -> String {
        if self.exp_char == 1 {
            "Z".to_string()
        } else {
            format!("Z[1/{}]", self.exp_char)
        }
    }

    /// Nonzero multiplicities by twist.
    pub fn multiplicities(&self) -> &BTreeMap<u64, u64> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, twist: u64) -> u64 {
        self.multiplicities.get(&twist).copied().unwrap_or(0)
    }

    /// Highest twist that was computed, for truncated infinite sums.
    pub fn truncated_at(&self) -> Option<u64> {
        self.truncated_at
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    fn add_summands(&mut self, twist: u64, count: u64) {
        if count > 0 {
            *self.multiplicities.entry(twist).or_insert(0) += count;
        }
    }

    /// Multiplicities read off as a series in `q`, up to the truncation
    /// level (or the top twist for finite sums).
    pub fn poincare(&self) -> TruncatedSeries {
        let top = self
            .truncated_at
            .or_else(|| self.multiplicities.keys().next_back().copied())
            .unwrap_or(0);
        TruncatedSeries::from_coeffs((0..=top).map(|n| self.multiplicity(n)).collect())
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Summand {
            twist: u64,
            shift: u64,
            multiplicity: u64,
        }
        #[derive(Serialize)]
        struct Doc {
            coefficients: String,
            summands: Vec<Summand>,
            #[serde(rename = "truncatedAt", skip_serializing_if = "Option::is_none")]
            truncated_at: Option<u64>,
        }
        let doc = Doc {
            coefficients: self.coefficient_tag(),
            summands: self
                .multiplicities
                .iter()
                .map(|(&twist, &multiplicity)| Summand {
                    twist,
                    shift: 2 * twist,
                    multiplicity,
                })
                .collect(),
            truncated_at: self.truncated_at,
        };
        serde_json::to_string(&doc).expect("plain data serialises")
    }

    /// `Z ⊕ Z(1)[2] ⊕ 2·Z(2)[4]`; the zero motive prints as `0`.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        let tag = self.coefficient_tag();
        self.multiplicities
            .iter()
            .map(|(&n, &m)| {
                let base = if n == 0 {
                    tag.clone()
                } else {
                    format!("{tag}({n})[{}]", 2 * n)
                };
                if m == 1 {
                    base
                } else {
                    format!("{m}·{base}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ⊕ ")
    }
}

impl fmt::Display for TateSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Output format for [`serialize_tate_sum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

pub fn serialize_tate_sum(sum: &TateSum, format: Format) -> String {
    match format {
        Format::Json => sum.to_json(),
        Format::Text => sum.to_text(),
    }
}

/// Motive of the affine Grassmannian through twist `max_twist`
/// (identity component only for `A^{GL}`).
pub fn motive_of_gr(sys: &RootSystem, max_twist: u64, field: Field) -> TateSum {
    motive_of_gr_in_components(sys, max_twist, field, 0..=0)
}

pub fn motive_of_gr_in_components(
    sys: &RootSystem,
    max_twist: u64,
    field: Field,
    components: RangeInclusive<i64>,
) -> TateSum {
    let mut sum = TateSum::empty(exponential_characteristic(field));
    for cell in enumerate_cells_in_components(sys, max_twist, components) {
        sum.add_summands(cell.dim, 1);
    }
    sum.truncated_at = Some(max_twist);
    sum
}

/// Motive of the closed stage `X_i`; `X_{-1}` is empty.
pub fn motive_of_stage(sys: &RootSystem, stage: i64, field: Field) -> Result<TateSum> {
    if stage < -1 {
        return Err(Error::InvalidArgument(format!("stage {stage} < -1")));
    }
    let mut sum = TateSum::empty(exponential_characteristic(field));
    if stage >= 0 {
        for cell in enumerate_cells_in_components(sys, stage as u64, 0..=0) {
            sum.add_summands(cell.dim, 1);
        }
    }
    Ok(sum)
}
