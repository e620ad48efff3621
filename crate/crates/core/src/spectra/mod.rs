//! Adjacency spectra: power iteration for the spectral radius, a dense Jacobi
//! eigensolver for full spectra, and exact quotient-matrix polynomials.

mod jacobi;
mod power;
mod quotient;

pub use jacobi::{
    full_spectrum, full_spectrum_capped, second_largest_absolute_eigenvalue, symmetric_eigenvalues,
    DEFAULT_DENSE_CAP,
};
pub use power::{rho, spectral_radius, PowerIteration, SpectralResult, DEFAULT_MAX_ITER, DEFAULT_TOL};
pub use quotient::{char_poly, largest_real_root, quotient_matrix, CharPoly, QuotientMatrix, RationalMatrix};
