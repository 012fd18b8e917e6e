//! Complex scalars, cubic root-finding, and small dense-matrix spectra.
//!
//! The cubic path is the workhorse for rate predictions; the dense
//! eigensolver exists as an independent cross-check for small instances.

mod cubic;
mod matrix;

pub use cubic::{solve_cubic, CubicPolynomial, DEGENERACY_THRESHOLD};
pub use matrix::{dense_spectrum, spectral_radius, DenseMatrix, DENSE_DIM_LIMIT};

/// Complex scalar in Cartesian form. `norm()` and `arg()` give the polar
/// view; `Complex::from_polar` reconstructs the Cartesian one.
pub type Complex = num_complex::Complex64;
