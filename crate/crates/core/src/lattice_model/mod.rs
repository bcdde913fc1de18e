//! `Gr_{GL_n}` and `Gr_{SL_n}` as `k[t]`-lattices.
//!
//! A loop `M ∈ GL_n(k[t, t^-1])` represents the lattice `L = M · k[t]^n`,
//! and two loops give the same point of the affine Grassmannian exactly when
//! they differ by a right factor in `GL_n(k[t])`. Every lattice lives in some
//! window `t^N Λ₀ ⊆ L ⊆ t^-N Λ₀`; inside it the column Hermite normal form of
//! `t^N M` is a canonical representative. `SL_n` points are the loops with
//! determinant exactly 1.

mod birkhoff;
mod count;
mod normal_form;

pub use birkhoff::{
    birkhoff_factorize, find_chart_translate, in_big_cell, perm_matrix, witness_solve,
    BirkhoffOutcome, BirkhoffWitness, ChartTranslate,
};
pub use count::{count_lattices_in_window, predicted_window_count};

use std::fmt;

use crate::algebra::{Field, LaurentMatrix};
use crate::error::{Error, Result};
use crate::rootdata::Coweight;
use normal_form::{column_hnf, smith_exponents, PolyColumns};

/// A `k[t]`-lattice `L` with `t^N Λ₀ ⊆ L ⊆ t^-N Λ₀`, stored through a basis
/// of `t^N L ⊆ k[t]^n` (as columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowLattice {
    field: Field,
    n: usize,
    window: i64,
    basis: PolyColumns,
    canonical: bool,
    component: i64,
}

impl WindowLattice {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Window radius `N`.
    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Valuation of the determinant of any generator matrix.
    pub fn component(&self) -> i64 {
        self.component
    }

    /// Basis of `t^N L` as a polynomial matrix (columns are generators).
    pub fn basis(&self) -> LaurentMatrix {
        LaurentMatrix::from_poly_columns(self.field, &self.basis)
    }

    /// A loop whose column span is `L`, namely `t^-N` times the basis.
    pub fn generator(&self) -> LaurentMatrix {
        self.basis().shift(-self.window)
    }

    /// `t`-valuations of the diagonal pivots, shifted back by `N`.
    pub fn pivot_valuations(&self) -> Vec<i64> {
        (0..self.n)
            .map(|i| self.basis[i][i].valuation().expect("pivot is nonzero") as i64 - self.window)
            .collect()
    }

    /// The same lattice described in the larger window `N' >= N`.
    pub fn realign(&self, window: i64) -> WindowLattice {
        assert!(window >= self.window, "windows only grow");
        let k = (window - self.window) as usize;
        WindowLattice {
            basis: self
                .basis
                .iter()
                .map(|c| c.iter().map(|p| p.shift(k)).collect())
                .collect(),
            window,
            ..self.clone()
        }
    }
}

impl fmt::Display for WindowLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.generator())
    }
}

/// `diag(t^{mu_1}, ..., t^{mu_n})`.
pub fn torus_point(field: Field, mu: &Coweight) -> LaurentMatrix {
    LaurentMatrix::diagonal_t_powers(field, mu.coords())
}

/// Smallest `N >= 0` with `t^N Λ₀ ⊆ M k[t]^n ⊆ t^-N Λ₀`.
pub fn window_radius(m: &LaurentMatrix) -> Result<i64> {
    let inv = m.inverse()?;
    let below = |x: &LaurentMatrix| x.min_valuation().map_or(0, |v| (-v).max(0));
    Ok(below(m).max(below(&inv)))
}

fn shifted_columns(m: &LaurentMatrix, window: i64) -> PolyColumns {
    m.shift(window)
        .to_poly_columns()
        .expect("window clears negative powers")
}

/// Canonical representative of the coset `M · GL_n(k[t])`.
pub fn lattice_of(m: &LaurentMatrix) -> Result<WindowLattice> {
    let (_, component) = m.det_valuation()?;
    let window = window_radius(m)?;
    // t^N L contains t^{2N} k[t]^n
    let basis = column_hnf(shifted_columns(m, window), 2 * window as usize);
    Ok(WindowLattice {
        field: m.field(),
        n: m.size(),
        window,
        basis,
        canonical: true,
        component,
    })
}

/// Whether `M1` and `M2` define the same point of the affine Grassmannian.
pub fn equal_in_gr(m1: &LaurentMatrix, m2: &LaurentMatrix) -> Result<bool> {
    if m1.size() != m2.size() {
        return Err(Error::SizeMismatch(m1.size(), m2.size()));
    }
    if m1.field() != m2.field() {
        return Err(Error::FieldMismatch(
            m1.field().to_string(),
            m2.field().to_string(),
        ));
    }
    let a = lattice_of(m1)?;
    let b = lattice_of(m2)?;
    let w = a.window.max(b.window);
    Ok(a.realign(w) == b.realign(w))
}

/// Dominant `mu` with `M ∈ GL_n(k[t]) · t^mu · GL_n(k[t])`, read off the
/// `t`-adic elementary divisors of `t^N M`.
pub fn cartan_coweight(m: &LaurentMatrix) -> Result<Coweight> {
    let (_, v) = m.det_valuation()?;
    let window = m.min_valuation().map_or(0, |v| (-v).max(0));
    // the exponents of t^N M are nonnegative and sum to val det(t^N M)
    let modulus = (v + m.size() as i64 * window) as usize + 1;
    let mut mu: Vec<i64> = smith_exponents(&shifted_columns(m, window), modulus)
        .into_iter()
        .map(|a| a as i64 - window)
        .collect();
    mu.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Coweight::new(mu))
}

/// The based loop `g(1)^-1 · g`.
pub fn beta_based_loop(g: &LaurentMatrix) -> Result<LaurentMatrix> {
    g.det_valuation()?;
    let at_one = g.eval(&g.field().one());
    let inv = at_one.inverse().ok_or_else(|| {
        Error::InternalInconsistency("unit determinant but g(1) is singular".into())
    })?;
    LaurentMatrix::from_scalar_matrix(&inv).mul(g)
}
