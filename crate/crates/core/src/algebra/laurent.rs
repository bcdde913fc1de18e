use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Poly, Scalar};
use crate::error::{Error, Result};

/// Laurent polynomial in `t`, stored sparsely by exponent. No zero
/// coefficient is ever stored; the empty map is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    field: Field,
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero(field: Field) -> LaurentPoly {
        LaurentPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> LaurentPoly {
        LaurentPoly::monomial(field.one(), 0)
    }

    pub fn constant(c: Scalar) -> LaurentPoly {
        LaurentPoly::monomial(c, 0)
    }

    /// `c * t^k`.
    pub fn monomial(c: Scalar, k: i64) -> LaurentPoly {
        LaurentPoly::from_terms(c.field(), [(k, c)])
    }

    /// `t^k`.
    pub fn t_pow(field: Field, k: i64) -> LaurentPoly {
        LaurentPoly::monomial(field.one(), k)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (i64, Scalar)>) -> LaurentPoly {
        let mut map: BTreeMap<i64, Scalar> = BTreeMap::new();
        for (k, c) in terms {
            debug_assert_eq!(c.field(), field);
            let sum = match map.remove(&k) {
                Some(prev) => &prev + &c,
                None => c,
            };
            if !sum.is_zero() {
                map.insert(k, sum);
            }
        }
        LaurentPoly { field, terms: map }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> Scalar {
        self.terms
            .get(&k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Scalar::is_one)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn top_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((c, m))` when the polynomial is exactly `c * t^m`, `c != 0`.
    pub fn as_monomial(&self) -> Option<(Scalar, i64)> {
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *k))
        } else {
            None
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        LaurentPoly::from_terms(self.field, self.terms.iter().map(|(k, a)| (*k, a * c)))
    }

    /// Evaluation at a nonzero point.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        assert!(!x.is_zero(), "Laurent polynomials cannot be evaluated at 0");
        let xinv = x.inv().unwrap();
        self.terms.iter().fold(self.field.zero(), |acc, (k, c)| {
            let base = if *k >= 0 { x } else { &xinv };
            let mut p = self.field.one();
            for _ in 0..k.unsigned_abs() {
                p = &p * base;
            }
            &acc + &(c * &p)
        })
    }

    /// The polynomial itself, if no negative exponent occurs.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.valuation().is_some_and(|v| v < 0) {
            return None;
        }
        let len = self.top_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![self.field.zero(); len];
        for (k, c) in &self.terms {
            coeffs[*k as usize] = c.clone();
        }
        Some(Poly::from_coeffs(self.field, coeffs))
    }

    /// Substitutes `t -> t^-1`.
    pub fn invert_variable(&self) -> LaurentPoly {
        LaurentPoly {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact quotient `self / divisor`; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<Option<LaurentPoly>> {
        let dv = divisor.valuation().ok_or(Error::DivisionByZero)?;
        let Some(nv) = self.valuation() else {
            return Ok(Some(LaurentPoly::zero(self.field)));
        };
        let num = self.shift(-nv).to_poly().unwrap();
        let den = divisor.shift(-dv).to_poly().unwrap();
        let (q, r) = num.divmod(&den)?;
        Ok(r.is_zero().then(|| q.to_laurent().shift(nv - dv)))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.field, rhs.field, "Laurent polynomial field mismatch");
        LaurentPoly::from_terms(
            self.field,
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(k, c)| (*k, c.clone())),
        )
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            field: self.field,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.field, rhs.field, "Laurent polynomial field mismatch");
        LaurentPoly::from_terms(
            self.field,
            self.terms
                .iter()
                .flat_map(|(i, a)| rhs.terms.iter().map(move |(j, b)| (i + j, a * b))),
        )
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `2*t^-1 + 3 - t^2`; re-parses with
    /// [`LaurentPoly::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_repr();
            let abs = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                k => format!("t^{k}"),
            };
            match (abs.is_one(), var.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => write!(f, "{var}")?,
                (false, false) => write!(f, "{abs}*{var}")?,
            }
        }
        Ok(())
    }
}
