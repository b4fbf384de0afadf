//! Independent oracles for testing the fitted splines.
//!
//! Nothing here shares code with the kernel, basis, system or solver
//! modules: the extended-precision kernels sum positive power series in
//! double-double arithmetic, the cubic splines are assembled as dense
//! matrices and solved with partial pivoting, and derivatives are taken by
//! central differences.

mod cubic;
mod dense;
mod extended;
mod fd;

pub use cubic::{cubic_clamped_fit, cubic_natural_fit, CubicSpline};
pub use dense::{dense_solve, DenseMatrix};
pub use extended::{
    coth_ext, csch_ext, phi_ext, phi_prime_ext, psi_ext, rho_ext, sigma_ext, DoubleDouble,
};
pub use fd::fd_derivative;
