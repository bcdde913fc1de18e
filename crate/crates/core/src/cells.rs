//! Bruhat cells of the affine Grassmannian: one cell per coweight, with
//! dimension
//!
//! ```text
//! l(mu) = <mu⁺, 2ρ> - #{α > 0 : <mu, α> < 0}
//! ```
//!
//! checked against a brute-force minimal-length computation in the affine
//! Weyl group, [`min_coset_length_oracle`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{dot, Coweight, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellData {
    pub mu: Coweight,
    pub dim: u64,
    pub component: i64,
}

/// Truncated power series in `q` with non-negative integer coefficients
/// `c_0, ..., c_maxDeg`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    coeffs: Vec<u64>,
}

impl TruncatedSeries {
    pub fn zero(max_deg: usize) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: vec![0; max_deg + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> TruncatedSeries {
        assert!(!coeffs.is_empty(), "a truncated series has at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn max_deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> u64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    /// Same series cut at a lower degree.
    pub fn truncate(&self, max_deg: usize) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: (0..=max_deg).map(|d| self.coeff(d)).collect(),
        }
    }

    /// Space-separated coefficient list, e.g. `1 1 2 2 3`.
    pub fn coefficient_list(&self) -> String {
        self.coeffs
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn add_at(&mut self, d: usize, k: u64) {
        if d < self.coeffs.len() {
            self.coeffs[d] += k;
        }
    }
}

impl fmt::Display for TruncatedSeries {
    /// Formal sum `1 + q + 2q^2 + ...`; zero coefficients are skipped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| {
                let coef = if c == 1 && d > 0 {
                    String::new()
                } else {
                    c.to_string()
                };
                match d {
                    0 => coef,
                    1 => format!("{coef}q"),
                    _ => format!("{coef}q^{d}"),
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Dimension `l(mu)` of the Bruhat cell indexed by `mu`.
pub fn cell_dim(sys: &RootSystem, mu: &Coweight) -> u64 {
    let mut total = 0i64;
    let mut negative = 0i64;
    for alpha in sys.positive_roots() {
        let p = dot(mu.coords(), alpha);
        total += p.abs();
        if p < 0 {
            negative += 1;
        }
    }
    // Σ|<mu, α>| = <mu⁺, 2ρ>
    (total - negative) as u64
}

/// Minimal length in the coset `t_mu W_f`, by enumerating `W_f` and using the
/// Iwahori–Matsumoto formula
/// `ℓ(t_mu w) = Σ_{α>0} |<mu, α> + [w⁻¹α < 0]|`.
pub fn min_coset_length_oracle(sys: &RootSystem, mu: &Coweight) -> Result<u64> {
    let group = sys.weyl_group()?;
    let positive = sys.positive_root_set();
    let mut best: Option<i64> = None;
    for w in &group {
        let winv = w.inverse();
        let mut len = 0i64;
        for alpha in sys.positive_roots() {
            let image = winv.apply(alpha);
            let flips = i64::from(!positive.contains(&image));
            len += (dot(mu.coords(), alpha) + flips).abs();
        }
        best = Some(best.map_or(len, |b| b.min(len)));
    }
    Ok(best.expect("Weyl group is nonempty") as u64)
}

/// Slack between `<mu⁺, 2ρ>` and `l(mu)`: `l(mu) >= <mu⁺, 2ρ> - |Φ⁺|`, so a
/// coweight scan with bound `maxDim + |Φ⁺|` sees every cell of dimension
/// at most `maxDim`.
fn scan_bound(sys: &RootSystem, max_dim: u64) -> i64 {
    max_dim as i64 + sys.positive_roots().len() as i64
}

/// Cells of dimension at most `max_dim`, lexicographic in `mu`.
///
/// For `A^{GL}` only the identity component is enumerated; see
/// [`enumerate_cells_in_components`].
pub fn enumerate_cells(sys: &RootSystem, max_dim: u64) -> Vec<CellData> {
    enumerate_cells_in_components(sys, max_dim, 0..=0)
}

pub fn enumerate_cells_in_components(
    sys: &RootSystem,
    max_dim: u64,
    components: RangeInclusive<i64>,
) -> Vec<CellData> {
    sys.enumerate_coweights_in_components(scan_bound(sys, max_dim), components)
        .into_iter()
        .filter_map(|mu| {
            let dim = cell_dim(sys, &mu);
            (dim <= max_dim).then(|| CellData {
                component: sys.component(&mu),
                dim,
                mu,
            })
        })
        .collect()
}

fn series_of(cells: &[CellData], max_dim: u64) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(max_dim as usize);
    for c in cells {
        s.add_at(c.dim as usize, 1);
    }
    s
}

/// `c_d = #{mu : l(mu) = d}` (identity component only for `A^{GL}`).
pub fn cell_series(sys: &RootSystem, max_dim: u64) -> TruncatedSeries {
    series_of(&enumerate_cells(sys, max_dim), max_dim)
}

pub fn cell_series_per_component(
    sys: &RootSystem,
    max_dim: u64,
    components: RangeInclusive<i64>,
) -> BTreeMap<i64, TruncatedSeries> {
    let cells = enumerate_cells_in_components(sys, max_dim, components.clone());
    components
        .map(|c| {
            let mine: Vec<CellData> = cells.iter().filter(|x| x.component == c).cloned().collect();
            (c, series_of(&mine, max_dim))
        })
        .collect()
}

/// Expansion of `Π_e 1/(1 - q^e)` over the exponents, to degree `max_dim`.
pub fn product_formula_series(sys: &RootSystem, max_dim: u64) -> Result<TruncatedSeries> {
    if !sys.is_simply_connected() {
        return Err(Error::NotSimplyConnected(sys.label()));
    }
    let len = max_dim as usize + 1;
    let mut coeffs = vec![0u64; len];
    coeffs[0] = 1;
    for e in sys.exponents() {
        let e = e as usize;
        // multiply by 1/(1 - q^e): c_d += c_{d-e}, ascending
        for d in e..len {
            coeffs[d] += coeffs[d - e];
        }
    }
    Ok(TruncatedSeries { coeffs })
}
