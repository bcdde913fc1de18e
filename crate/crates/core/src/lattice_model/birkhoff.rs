//! Birkhoff factorisation `M = A · B` with `A ∈ GL_n(k[t^-1])`, `A(∞) = I`
//! and `B ∈ GL_n(k[t])`, and translates of the big cell.
//!
//! Membership is decided by a transversality test in the window space
//! `t^-N Λ₀ / t^N Λ₀`: the lattice of `M` is in the big cell iff it is a
//! complement of `t^-1 k[t^-1]^n`. The witness is produced by an independent
//! linear ansatz (`M^-1 A` must be polynomial) and the two routes must agree.

use std::fmt;

use itertools::Itertools;

use super::{torus_point, window_radius};
use crate::algebra::{Field, LaurentMatrix, LaurentPoly, Scalar, ScalarMatrix};
use crate::cells::cell_dim;
use crate::error::{Error, Result};
use crate::rootdata::{Coweight, RootSystem, RootType, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirkhoffWitness {
    /// Negative loop, entries in `k[t^-1]`, equal to `I` at `t^-1 = 0`.
    pub negative: LaurentMatrix,
    /// Positive loop, entries in `k[t]`.
    pub positive: LaurentMatrix,
}

impl BirkhoffWitness {
    pub fn product(&self) -> LaurentMatrix {
        self.negative
            .mul(&self.positive)
            .expect("factors have matching shape")
    }

    /// Checks the defining properties of both factors.
    pub fn is_valid_for(&self, m: &LaurentMatrix) -> bool {
        let a = &self.negative;
        let b = &self.positive;
        a.is_inverse_polynomial()
            && a.constant_term().is_identity()
            && a.det().is_one()
            && b.is_polynomial()
            && b.det_valuation().is_ok_and(|(_, v)| v == 0)
            && self.product() == *m
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BirkhoffOutcome {
    Factored(BirkhoffWitness),
    NotInBigCell,
}

impl BirkhoffOutcome {
    pub fn witness(&self) -> Option<&BirkhoffWitness> {
        match self {
            BirkhoffOutcome::Factored(w) => Some(w),
            BirkhoffOutcome::NotInBigCell => None,
        }
    }
}

/// Window used for big-cell questions: at least one, so that the degree-0
/// part of `A` is visible.
fn big_cell_window(m: &LaurentMatrix) -> Result<i64> {
    Ok(window_radius(m)?.max(1))
}

/// Rank test: is `M · k[t]^n` transversal to `t^-1 k[t^-1]^n`?
pub fn in_big_cell(m: &LaurentMatrix) -> Result<bool> {
    m.det_valuation()?;
    let n = m.size();
    let window = big_cell_window(m)?;
    let w = window as usize;
    let cols = m
        .shift(window)
        .to_poly_columns()
        .expect("window clears negative powers");
    // coordinates of t^d e_i, d ∈ [-N, N): non-negative degrees first
    let coord = |i: usize, d: i64| -> usize {
        if d >= 0 {
            i * w + d as usize
        } else {
            n * w + i * w + (d + window) as usize
        }
    };
    let mut rows = Vec::with_capacity(n * 2 * w);
    for col in &cols {
        for j in 0..2 * w {
            let mut v = vec![m.field().zero(); 2 * n * w];
            for (i, p) in col.iter().enumerate() {
                for e in j..2 * w {
                    let c = p.coeff(e - j);
                    if !c.is_zero() {
                        v[coord(i, e as i64 - window)] = c;
                    }
                }
            }
            rows.push(v);
        }
    }
    let pivots = ScalarMatrix::from_rows(m.field(), rows).rref().pivots;
    Ok(pivots.len() == n * w && pivots.iter().enumerate().all(|(k, &p)| k == p))
}

/// Linear ansatz `A = I + Σ_{d=1}^{cap} A_d t^-d` with `M^-1 A` polynomial;
/// returns the factorisation if the resulting `B = A^-1 M` lies in
/// `GL_n(k[t])`.
pub fn witness_solve(m: &LaurentMatrix, cap: usize) -> Result<Option<BirkhoffWitness>> {
    let field = m.field();
    let n = m.size();
    let minv = m.inverse()?;
    let low = minv.min_valuation().unwrap_or(0).min(0) - cap as i64;
    let unknowns = n * cap;
    // one equation per (row r, degree g < 0) of M^-1 a_j; the coefficients
    // do not depend on j, so all n columns share one elimination
    let mut system = Vec::with_capacity(n * (-low) as usize);
    for r in 0..n {
        for g in low..0 {
            let mut eq = Vec::with_capacity(unknowns + n);
            for i in 0..n {
                for d in 1..=cap as i64 {
                    eq.push(minv.get(r, i).coeff(g + d));
                }
            }
            eq.extend((0..n).map(|j| -minv.get(r, j).coeff(g)));
            system.push(eq);
        }
    }
    let Some(x) = solve_affine(field, system, unknowns, n) else {
        return Ok(None);
    };
    let a = LaurentMatrix::from_fn(field, n, |i, j| {
        let mut terms: Vec<(i64, _)> = (1..=cap)
            .map(|d| (-(d as i64), x[j][i * cap + d - 1].clone()))
            .collect();
        if i == j {
            terms.push((0, field.one()));
        }
        LaurentPoly::from_terms(field, terms)
    });
    let Ok(ainv) = a.inverse() else {
        return Ok(None);
    };
    let b = ainv.mul(m)?;
    let witness = BirkhoffWitness {
        negative: a,
        positive: b,
    };
    Ok(witness.is_valid_for(m).then_some(witness))
}

/// Particular solutions (free variables zero) of `[coeffs | rhs_1 .. rhs_k]`
/// rows, one per right-hand side; `None` if any of them is inconsistent.
fn solve_affine(
    field: Field,
    system: Vec<Vec<Scalar>>,
    unknowns: usize,
    k: usize,
) -> Option<Vec<Vec<Scalar>>> {
    if system.is_empty() {
        return Some(vec![vec![field.zero(); unknowns]; k]);
    }
    let ech = ScalarMatrix::from_rows(field, system).rref();
    if ech.pivots.last().is_some_and(|&p| p >= unknowns) {
        return None;
    }
    let mut xs = vec![vec![field.zero(); unknowns]; k];
    for (r, &p) in ech.pivots.iter().enumerate() {
        for (j, x) in xs.iter_mut().enumerate() {
            x[p] = ech.matrix.get(r, unknowns + j).clone();
        }
    }
    Some(xs)
}

/// Decides big-cell membership and, on success, returns the unique witness.
pub fn birkhoff_factorize(m: &LaurentMatrix) -> Result<BirkhoffOutcome> {
    m.det_valuation()?;
    let transversal = in_big_cell(m)?;
    let cap = m.size() * big_cell_window(m)? as usize;
    match (transversal, witness_solve(m, cap)?) {
        (true, Some(w)) => Ok(BirkhoffOutcome::Factored(w)),
        (false, None) => Ok(BirkhoffOutcome::NotInBigCell),
        (true, None) => Err(Error::InternalInconsistency(format!(
            "rank test accepts but the degree-{cap} witness solve fails for\n{m}"
        ))),
        (false, Some(_)) => Err(Error::InternalInconsistency(format!(
            "witness found although the rank test rejects\n{m}"
        ))),
    }
}

/// Matrix of the linear action of `w` on `k^n`.
pub fn perm_matrix(field: Field, w: &WeylElement) -> LaurentMatrix {
    let n = w.source().len();
    LaurentMatrix::from_fn(field, n, |i, j| {
        if w.source()[i] == j {
            LaurentPoly::constant(field.from_i64(w.signs()[i]))
        } else {
            LaurentPoly::zero(field)
        }
    })
}

/// `M = t^nu · w · A · B` with `(A, B)` a Birkhoff witness of the translated loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartTranslate {
    pub nu: Coweight,
    pub w: WeylElement,
    pub witness: BirkhoffWitness,
}

impl ChartTranslate {
    pub fn reconstruct(&self) -> LaurentMatrix {
        let field = self.witness.negative.field();
        torus_point(field, &self.nu)
            .mul(&perm_matrix(field, &self.w))
            .and_then(|x| x.mul(&self.witness.product()))
            .expect("shapes agree")
    }
}

impl fmt::Display for ChartTranslate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nu: {}", self.nu)?;
        writeln!(f, "w: {}", self.w)?;
        writeln!(f, "A:")?;
        write!(f, "{}", self.witness.negative)?;
        writeln!(f, "B:")?;
        write!(f, "{}", self.witness.positive)
    }
}

/// Searches translates `t^nu · w` of the big cell containing `M`, by
/// increasing `l(nu)` then lexicographically, over `<nu⁺, 2ρ> <= bound`.
pub fn find_chart_translate(m: &LaurentMatrix, bound: i64) -> Result<ChartTranslate> {
    let (_, component) = m.det_valuation()?;
    let n = m.size();
    let field = m.field();
    if n < 2 {
        // GL_1: every point is a torus point
        let nu = Coweight::new(vec![component]);
        let moved = torus_point(field, &Coweight::new(vec![-component])).mul(m)?;
        let BirkhoffOutcome::Factored(witness) = birkhoff_factorize(&moved)? else {
            return Err(Error::InternalInconsistency(
                "GL_1 constant not in big cell".into(),
            ));
        };
        return Ok(ChartTranslate {
            nu,
            w: WeylElement::identity(1),
            witness,
        });
    }
    let sys = RootSystem::new(RootType::AGl, n - 1)?;
    let mut candidates = sys.enumerate_coweights_in_components(bound, component..=component);
    candidates.sort_by_cached_key(|nu| (cell_dim(&sys, nu), nu.clone()));
    let perms: Vec<WeylElement> = (0..n)
        .permutations(n)
        .map(|p| WeylElement::from_parts(p, vec![1; n]))
        .collect();
    for nu in candidates {
        let neg: Vec<i64> = nu.coords().iter().map(|x| -x).collect();
        let shifted = m.shift_rows(&neg);
        for w in &perms {
            let moved = perm_matrix(field, &w.inverse()).mul(&shifted)?;
            if let BirkhoffOutcome::Factored(witness) = birkhoff_factorize(&moved)? {
                return Ok(ChartTranslate {
                    nu,
                    w: w.clone(),
                    witness,
                });
            }
        }
    }
    Err(Error::SearchExhausted(bound))
}
