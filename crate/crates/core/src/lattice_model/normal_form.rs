//! Hermite and Smith normal forms over `k[t]` for nonsingular square matrices,
//! stored column-major (`cols[j][i]` is the entry in row `i`, column `j`).

use crate::algebra::{Poly, Scalar};

pub(crate) type PolyColumns = Vec<Vec<Poly>>;

/// `a - q * b` entrywise, reduced modulo `t^k`.
fn sub_multiple(a: &[Poly], q: &Poly, b: &[Poly], k: usize) -> Vec<Poly> {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - &(q * y)).truncate(k))
        .collect()
}

/// `p / t^v` for `v <= val(p)`.
fn unshift(p: &Poly, v: usize) -> Poly {
    Poly::from_coeffs(p.field(), p.coeffs().iter().skip(v).cloned().collect())
}

/// Inverse of a power series with nonzero constant term, modulo `t^k`.
fn series_inverse(u: &Poly, k: usize) -> Poly {
    let field = u.field();
    let c0 = u.coeff(0).inv().expect("constant term is a unit");
    let mut out: Vec<Scalar> = Vec::with_capacity(k);
    for m in 0..k {
        let mut acc = if m == 0 { field.one() } else { field.zero() };
        for j in 1..=m.min(u.coeffs().len().saturating_sub(1)) {
            acc = &acc - &(&u.coeff(j) * &out[m - j]);
        }
        out.push(&acc * &c0);
    }
    Poly::from_coeffs(field, out)
}

/// Splits `p = t^v · u` with `u(0) != 0` and returns `(v, u^-1 mod t^k)`.
fn normalizer(p: &Poly, k: usize) -> (usize, Poly) {
    let v = p.valuation().expect("pivot is nonzero");
    (v, series_inverse(&unshift(p, v), k))
}

/// Column Hermite normal form (upper triangular, pivots `t^a`, entries right
/// of a pivot of degree below it) of a lattice containing `t^k k[t]^n`.
///
/// Every pivot of such a lattice is a power of `t`, so the elimination runs
/// in `k[[t]]/t^k`: pivots are chosen by valuation and normalised with a
/// truncated series inverse. A pivot `t^v` also contributes `t^{k-v}` times
/// its column to the remaining rows, which keeps `t^k k[t]^n` in the span.
pub(crate) fn column_hnf(cols: PolyColumns, k: usize) -> PolyColumns {
    let n = cols.len();
    let field = cols[0][0].field();
    let mut pool: Vec<Vec<Poly>> = cols
        .into_iter()
        .map(|c| c.iter().map(|p| p.truncate(k)).collect())
        .collect();
    pool.retain(|c| c.iter().any(|p| !p.is_zero()));
    let mut pivots: PolyColumns = vec![Vec::new(); n];
    for i in (0..n).rev() {
        let best = pool
            .iter()
            .enumerate()
            .filter(|(_, c)| !c[i].is_zero())
            .min_by_key(|(_, c)| c[i].valuation())
            .map(|(j, _)| j);
        let Some(j) = best else {
            let mut col = vec![Poly::zero(field); n];
            col[i] = Poly::monomial(field.one(), k);
            pivots[i] = col;
            continue;
        };
        let pc = pool.swap_remove(j);
        let (v, inv) = normalizer(&pc[i], k);
        let pc: Vec<Poly> = pc.iter().map(|p| (p * &inv).truncate(k)).collect();
        for c in pool.iter_mut() {
            if !c[i].is_zero() {
                let q = unshift(&c[i], v);
                *c = sub_multiple(c, &q, &pc, k);
            }
        }
        if v > 0 {
            pool.push(pc.iter().map(|p| p.shift(k - v).truncate(k)).collect());
        }
        pool.retain(|c| c.iter().any(|p| !p.is_zero()));
        pivots[i] = pc;
    }
    debug_assert!(pool.is_empty());
    for i in (0..n).rev() {
        let a = pivots[i][i].valuation().expect("pivot is nonzero");
        for j in i + 1..n {
            let q = unshift(&pivots[j][i], a);
            if !q.is_zero() {
                pivots[j] = pivots[j]
                    .iter()
                    .zip(&pivots[i])
                    .map(|(x, y)| x - &(&q * y))
                    .collect();
            }
        }
    }
    pivots
}

/// Exponents `a_1 <= ... <= a_n` of the `t`-adic elementary divisors of a
/// nonsingular polynomial matrix, all of which must be below `k`.
pub(crate) fn smith_exponents(cols: &PolyColumns, k: usize) -> Vec<usize> {
    let n = cols.len();
    // row-major working copy
    let mut a: Vec<Vec<Poly>> = (0..n)
        .map(|i| (0..n).map(|j| cols[j][i].truncate(k)).collect())
        .collect();
    let mut out = Vec::with_capacity(n);
    for s in 0..n {
        let (pi, pj) = (s..n)
            .flat_map(|i| (s..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].valuation())
            .expect("elementary divisors stay below the modulus");
        a.swap(s, pi);
        for row in a.iter_mut() {
            row.swap(s, pj);
        }
        let (v, inv) = normalizer(&a[s][s], k);
        a[s] = a[s].iter().map(|p| (p * &inv).truncate(k)).collect();
        for i in s + 1..n {
            if !a[i][s].is_zero() {
                let q = unshift(&a[i][s], v);
                a[i] = sub_multiple(&a[i], &q, &a[s], k);
            }
        }
        // column s is now t^v e_s, so clearing row s needs no more work
        out.push(v);
    }
    out
}
