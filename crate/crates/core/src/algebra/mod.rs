//! Exact arithmetic over `Q` and prime fields: scalars, dense polynomials,
//! sparse Laurent polynomials and square matrices over `k[t, t^-1]`.

mod laurent;
mod linalg;
mod matrix;
mod parse;
mod poly;
mod scalar;

pub use laurent::LaurentPoly;
pub use linalg::{Echelon, ScalarMatrix};
pub use matrix::LaurentMatrix;
pub use poly::Poly;
pub use scalar::{Field, Scalar};
