//! Exhaustive point counts of lattices in a window over a small prime field.
//!
//! Lattices `t^N Λ₀ ⊆ L ⊆ t^-N Λ₀` correspond to `t`-stable subspaces of
//! `(F_q[t]/t^{2N})^n`; we enumerate every subspace of the right dimension
//! through its reduced row echelon form and keep the stable ones. This shares
//! no code with the cell machinery and serves as its oracle.

use itertools::Itertools;

use crate::cells::cell_dim;
use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, RootType};

const STATE_SPACE_LIMIT: u128 = 1 << 20;

/// Number of `k`-dimensional subspaces of `F_q^n`.
fn gaussian_binomial(n: usize, k: usize, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    // after step i the running value is [n choose i+1]_q, an integer
    let mut acc = 1u128;
    for i in 0..k {
        let num = q.pow((n - i) as u32) - 1;
        let den = q.pow((i + 1) as u32) - 1;
        acc = match acc.checked_mul(num) {
            Some(x) => x / den,
            None => return u128::MAX,
        };
    }
    acc
}

fn is_prime(q: u32) -> bool {
    q >= 2
        && (2..q)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// Counts lattices `L` over `F_q[t]` with `t^N Λ₀ ⊆ L ⊆ t^-N Λ₀` and
/// `val det = component`.
pub fn count_lattices_in_window(n: usize, q: u32, window: usize, component: i64) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::InvalidArgument(format!("q = {q} must be prime")));
    }
    let width = 2 * window;
    let total = n * width;
    // dim L / t^N Λ₀ = nN - component
    let dim = n as i64 * window as i64 - component;
    if dim < 0 || dim > total as i64 {
        return Ok(0);
    }
    let dim = dim as usize;
    let size = gaussian_binomial(total, dim, q as u128);
    if size > STATE_SPACE_LIMIT {
        return Err(Error::StateSpaceTooLarge(size));
    }
    // t shifts coordinate (i, e) to (i, e + 1) and kills e = 2N - 1
    let shift = |v: &[u32]| -> Vec<u32> {
        let mut out = vec![0; total];
        for i in 0..n {
            for e in 0..width.saturating_sub(1) {
                out[i * width + e + 1] = v[i * width + e];
            }
        }
        out
    };
    let mut count = 0u64;
    for pivots in (0..total).combinations(dim) {
        // free slots: (row, column) right of the row's pivot, not a pivot column
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                (p + 1..total)
                    .filter(|c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut rows = vec![vec![0u32; total]; dim];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            for (&(r, c), &d) in free.iter().zip(&digits) {
                rows[r][c] = d;
            }
            let stable = rows.iter().all(|row| {
                let mut w = shift(row);
                for (r, &p) in pivots.iter().enumerate() {
                    let f = w[p];
                    if f != 0 {
                        for (x, y) in w.iter_mut().zip(&rows[r]) {
                            *x = (*x + q * q - f * y % q) % q;
                        }
                    }
                }
                w.iter().all(|&x| x == 0)
            });
            if stable {
                count += 1;
            }
            // next assignment of the free entries
            let Some(pos) = digits.iter().position(|&d| d + 1 < q) else {
                break;
            };
            digits[pos] += 1;
            digits[..pos].iter_mut().for_each(|d| *d = 0);
        }
    }
    Ok(count)
}

/// `Σ q^{l(mu)}` over `GL_n` coweights with `|mu_i| <= N` and
/// `Σ mu_i = component`: the point count predicted by the cell decomposition.
pub fn predicted_window_count(n: usize, q: u64, window: i64, component: i64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    if n == 1 {
        return Ok(u64::from(component.abs() <= window));
    }
    let sys = RootSystem::new(RootType::AGl, n - 1)?;
    // |mu_i| <= N forces <mu⁺, 2ρ> <= 2N · n²
    let bound = 2 * window * (n * n) as i64;
    Ok(sys
        .enumerate_coweights_in_components(bound, component..=component)
        .iter()
        .filter(|mu| mu.coords().iter().all(|x| x.abs() <= window))
        .map(|mu| q.pow(cell_dim(&sys, mu) as u32))
        .sum())
}
