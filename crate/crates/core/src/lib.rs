//! Interpolation with order-four exponential L-splines.
//!
//! An L-spline of order four is a `C²` function that solves
//! `(d²/dt² − ξ²)² g = 0` between consecutive knots. On each segment it is
//! determined by the data values and the moments `γ_j = (d²/dt² − ξ²) g(t_j)`
//! at the two end knots, so fitting reduces to one tridiagonal solve for the
//! moments. Clamped (prescribed end slopes) and natural (vanishing end
//! moments) boundary conditions are supported. `ξ = 0` gives the classical
//! cubic spline.
//!
//! ```
//! use lspline::{BoundaryCondition, KnotGrid, LSpline, Tension};
//!
//! let grid = KnotGrid::new(vec![0.0, 0.5, 1.0, 1.5]).unwrap();
//! let z = vec![0.0, 1.0, 0.5, 2.0];
//! let bc = BoundaryCondition::Clamped { left: 1.0, right: 0.0 };
//! let s = LSpline::fit(grid, z, Tension::new(3.0).unwrap(), bc).unwrap();
//! assert!((s.eval(0.5) - 1.0).abs() < 1e-12);
//! assert!((s.eval_deriv(0.0, 1).unwrap() - 1.0).abs() < 1e-9);
//! ```

// `!(a >= b)` is used deliberately so that NaN fails every check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod basis;
pub mod error;
pub mod kernel;
pub mod reference;
pub mod solver;
pub mod spline;
pub mod system;

pub use basis::{BasisQuad, Segment};
pub use error::{Error, Result};
pub use kernel::{Branch, KernelRegime, Tension};
pub use solver::{solve_tridiagonal, solve_tridiagonal_owned};
pub use spline::{LSpline, SampleSpec, SampleTable};
pub use system::{assemble_clamped, assemble_natural, BoundaryCondition, KnotGrid, TridiagonalSystem};
