use std::fmt;

use super::{Field, LaurentPoly, Poly, Scalar, ScalarMatrix};
use crate::error::{Error, Result};

/// Square matrix over `k[t, t^-1]`. Loop-group elements are the values whose
/// determinant is a unit `c * t^m`; use [`LaurentMatrix::invertible`] to
/// construct them with that check.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    n: usize,
    field: Field,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn from_rows(field: Field, rows: Vec<Vec<LaurentPoly>>) -> Result<LaurentMatrix> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::SizeMismatch(n, row.len()));
            }
            if let Some(e) = row.iter().find(|e| e.field() != field) {
                return Err(Error::FieldMismatch(
                    field.to_string(),
                    e.field().to_string(),
                ));
            }
        }
        Ok(LaurentMatrix {
            n,
            field,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Like [`from_rows`](Self::from_rows), additionally requiring a unit determinant.
    pub fn invertible(field: Field, rows: Vec<Vec<LaurentPoly>>) -> Result<LaurentMatrix> {
        let m = LaurentMatrix::from_rows(field, rows)?;
        m.det_valuation()?;
        Ok(m)
    }

    pub(crate) fn from_fn(
        field: Field,
        n: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> LaurentMatrix {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        LaurentMatrix { n, field, entries }
    }

    pub fn identity(field: Field, n: usize) -> LaurentMatrix {
        LaurentMatrix::diagonal_t_powers(field, &vec![0; n])
    }

    /// `diag(t^{e_1}, ..., t^{e_n})`.
    pub fn diagonal_t_powers(field: Field, exps: &[i64]) -> LaurentMatrix {
        LaurentMatrix::from_fn(field, exps.len(), |i, j| {
            if i == j {
                LaurentPoly::t_pow(field, exps[i])
            } else {
                LaurentPoly::zero(field)
            }
        })
    }

    pub fn diagonal(field: Field, diag: Vec<LaurentPoly>) -> LaurentMatrix {
        let n = diag.len();
        LaurentMatrix::from_fn(field, n, |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                LaurentPoly::zero(field)
            }
        })
    }

    /// Permutation matrix sending basis vector `e_j` to `e_{perm[j]}`.
    pub fn permutation(field: Field, perm: &[usize]) -> LaurentMatrix {
        LaurentMatrix::from_fn(field, perm.len(), |i, j| {
            if perm[j] == i {
                LaurentPoly::one(field)
            } else {
                LaurentPoly::zero(field)
            }
        })
    }

    /// Identity plus `value` at `(row, col)`, `row != col`.
    pub fn elementary(
        field: Field,
        n: usize,
        row: usize,
        col: usize,
        value: LaurentPoly,
    ) -> LaurentMatrix {
        assert_ne!(row, col, "elementary matrices are off-diagonal");
        let mut m = LaurentMatrix::identity(field, n);
        m.entries[row * n + col] = value;
        m
    }

    pub fn from_scalar_matrix(m: &ScalarMatrix) -> LaurentMatrix {
        assert_eq!(m.rows(), m.cols());
        LaurentMatrix::from_fn(m.field(), m.rows(), |i, j| {
            LaurentPoly::constant(m.get(i, j).clone())
        })
    }

    pub fn from_poly_columns(field: Field, columns: &[Vec<Poly>]) -> LaurentMatrix {
        LaurentMatrix::from_fn(field, columns.len(), |i, j| columns[j][i].to_laurent())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[_]>::to_vec)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                if i == j {
                    self.get(i, j).is_one()
                } else {
                    self.get(i, j).is_zero()
                }
            })
        })
    }

    pub fn mul(&self, rhs: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch(self.n, rhs.n));
        }
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                rhs.field.to_string(),
            ));
        }
        Ok(LaurentMatrix::from_fn(self.field, self.n, |i, j| {
            (0..self.n).fold(LaurentPoly::zero(self.field), |acc, k| {
                &acc + &(self.get(i, k) * rhs.get(k, j))
            })
        }))
    }

    /// Left multiplication by `diag(t^{e_i})`: row `i` shifted by `e_i`.
    pub fn shift_rows(&self, exps: &[i64]) -> LaurentMatrix {
        LaurentMatrix::from_fn(self.field, self.n, |i, j| self.get(i, j).shift(exps[i]))
    }

    /// Multiplication of every entry by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentMatrix {
        LaurentMatrix::from_fn(self.field, self.n, |i, j| self.get(i, j).shift(k))
    }

    pub fn scale(&self, c: &Scalar) -> LaurentMatrix {
        LaurentMatrix::from_fn(self.field, self.n, |i, j| self.get(i, j).scale(c))
    }

    /// Lowest exponent among all entries (`None` for the zero matrix).
    pub fn min_valuation(&self) -> Option<i64> {
        self.entries.iter().filter_map(LaurentPoly::valuation).min()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.entries
            .iter()
            .filter_map(LaurentPoly::top_degree)
            .max()
    }

    /// Entries all lie in `k[t]`.
    pub fn is_polynomial(&self) -> bool {
        self.min_valuation().is_none_or(|v| v >= 0)
    }

    /// Entries all lie in `k[t^-1]`.
    pub fn is_inverse_polynomial(&self) -> bool {
        self.max_degree().is_none_or(|d| d <= 0)
    }

    /// Columns as polynomial vectors, when every entry is polynomial.
    pub fn to_poly_columns(&self) -> Option<Vec<Vec<Poly>>> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j).to_poly()).collect())
            .collect()
    }

    /// Entrywise evaluation at a nonzero scalar.
    pub fn eval(&self, x: &Scalar) -> ScalarMatrix {
        ScalarMatrix::from_rows(
            self.field,
            (0..self.n)
                .map(|i| (0..self.n).map(|j| self.get(i, j).eval(x)).collect())
                .collect(),
        )
    }

    /// The constant term matrix, i.e. the value at `t^-1 = 0` for matrices
    /// over `k[t^-1]` (or at `t = 0` for matrices over `k[t]`).
    pub fn constant_term(&self) -> ScalarMatrix {
        ScalarMatrix::from_rows(
            self.field,
            (0..self.n)
                .map(|i| (0..self.n).map(|j| self.get(i, j).coeff(0)).collect())
                .collect(),
        )
    }

    pub fn det(&self) -> LaurentPoly {
        if self.n <= 4 {
            let idx: Vec<usize> = (0..self.n).collect();
            self.minor_det(&idx, &idx)
        } else {
            bareiss_gauss_jordan(self, false).0
        }
    }

    /// Laplace expansion along the first listed row.
    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> LaurentPoly {
        match rows.len() {
            0 => LaurentPoly::one(self.field),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                &(self.get(rows[0], cols[0]) * self.get(rows[1], cols[1]))
                    - &(self.get(rows[0], cols[1]) * self.get(rows[1], cols[0]))
            }
            _ => {
                let sub_rows = &rows[1..];
                let mut acc = LaurentPoly::zero(self.field);
                for (k, &c) in cols.iter().enumerate() {
                    let a = self.get(rows[0], c);
                    if a.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = a * &self.minor_det(sub_rows, &sub_cols);
                    acc = if k % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                acc
            }
        }
    }

    /// `(c, m)` with `det = c * t^m`; fails with `NotAUnit` otherwise.
    pub fn det_valuation(&self) -> Result<(Scalar, i64)> {
        let det = self.det();
        det.as_monomial().ok_or_else(|| Error::NotAUnit {
            det: det.to_string(),
        })
    }

    /// Inverse in `GL_n(k[t, t^-1])`: adjugate over the determinant for
    /// `n <= 4`, fraction-free Gauss–Jordan above.
    pub fn inverse(&self) -> Result<LaurentMatrix> {
        let (c, m) = self.det_valuation()?;
        let det_inv = LaurentPoly::monomial(c.inv().unwrap(), -m);
        if self.n <= 4 {
            let idx: Vec<usize> = (0..self.n).collect();
            Ok(LaurentMatrix::from_fn(self.field, self.n, |i, j| {
                // adj(M)[i][j] = (-1)^{i+j} det(M with row j and column i removed)
                let rows: Vec<usize> = idx.iter().copied().filter(|&r| r != j).collect();
                let cols: Vec<usize> = idx.iter().copied().filter(|&c| c != i).collect();
                let minor = self.minor_det(&rows, &cols);
                let cof = if (i + j) % 2 == 0 { minor } else { -&minor };
                &cof * &det_inv
            }))
        } else {
            let (d, adj) = bareiss_gauss_jordan(self, true);
            let (dc, dm) = d.as_monomial().expect("determinant checked above");
            let d_inv = LaurentPoly::monomial(dc.inv().unwrap(), -dm);
            Ok(adj.expect("requested").scale_poly(&d_inv))
        }
    }

    fn scale_poly(&self, p: &LaurentPoly) -> LaurentMatrix {
        LaurentMatrix::from_fn(self.field, self.n, |i, j| self.get(i, j) * p)
    }
}

/// Fraction-free Gauss–Jordan on `[M | I]` over the domain `k[t, t^-1]`.
/// Returns the determinant and, if requested, `det(M) * M^-1`.
fn bareiss_gauss_jordan(
    m: &LaurentMatrix,
    want_adjugate: bool,
) -> (LaurentPoly, Option<LaurentMatrix>) {
    let n = m.n;
    let field = m.field;
    let width = if want_adjugate { 2 * n } else { n };
    let mut a: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..width)
                .map(|j| {
                    if j < n {
                        m.get(i, j).clone()
                    } else if j - n == i {
                        LaurentPoly::one(field)
                    } else {
                        LaurentPoly::zero(field)
                    }
                })
                .collect()
        })
        .collect();
    let mut prev = LaurentPoly::one(field);
    let mut sign_flip = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return (LaurentPoly::zero(field), None);
        };
        if p != k {
            a.swap(p, k);
            sign_flip = !sign_flip;
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            let factor = a[i][k].clone();
            for j in 0..width {
                let v = &(&a[k][k] * &a[i][j]) - &(&factor * &a[k][j]);
                a[i][j] = v
                    .exact_div(&prev)
                    .expect("nonzero pivot")
                    .expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    // Every diagonal entry of the left block now equals the final pivot, which
    // is det(M) up to the row-swap sign; the right block is that pivot times M^-1.
    let det = if sign_flip { -&prev } else { prev };
    let adj = want_adjugate.then(|| LaurentMatrix::from_fn(field, n, |i, j| a[i][n + j].clone()));
    (det, adj)
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
