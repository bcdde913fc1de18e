//! Affine Grassmannians of split classical groups, computed exactly.
//!
//! * [`algebra`]: scalars over `Q`/`F_p`, polynomials, Laurent polynomials and
//!   loop-group matrices.
//! * [`rootdata`]: classical root systems, coweights, Weyl group action.
//! * [`cells`]: Bruhat cell dimensions, cell enumeration and Poincaré series.
//! * [`lattice_model`]: lattices for `GL_n`/`SL_n`, Cartan classification,
//!   Birkhoff factorisation, chart translates and point counts.
//! * [`motive`]: the Tate decomposition of the motive, per filtration stage.
//! * [`matrix_file`]: the JSON exchange format for loops and lattices.
//! * [`selftest`]: oracle suites cross-checking the above.

pub mod algebra;
pub mod cells;
mod error;
pub mod lattice_model;
pub mod matrix_file;
pub mod motive;
pub mod rootdata;
pub mod selftest;

pub use error::{Error, Result};
