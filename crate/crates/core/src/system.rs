//! Knot grids and assembly of the tridiagonal moment systems.
//!
//! Matching first derivatives of neighbouring segment pieces at an interior
//! knot `t_j` gives
//!
//! ```text
//! σ(h_{j−1})γ_{j−1} + (ρ(h_{j−1}) + ρ(h_j))γ_j + σ(h_j)γ_{j+1}
//!     = ξcsch(ξh_{j−1})·g_{j−1} − ξ(coth ξh_{j−1} + coth ξh_j)·g_j + ξcsch(ξh_j)·g_{j+1}
//! ```
//!
//! The clamped system adds the two slope conditions at `t_1` and `t_n` as its
//! first and last rows; the natural system drops `γ_1 = γ_n = 0` and keeps
//! the interior rows only. All rows are scaled so that the diagonal is
//! positive, and every row is strictly diagonally dominant because
//! `σ(h) < ρ(h)/2`.

use crate::error::{Error, Result};
use crate::kernel::{self, Tension};

/// Strictly increasing knots `t_1 < … < t_n`, `n ≥ 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotGrid {
    knots: Vec<f64>,
    widths: Vec<f64>,
}

impl KnotGrid {
    pub fn new(knots: Vec<f64>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::InvalidGrid(format!(
                "at least 2 knots are required, got {}",
                knots.len()
            )));
        }
        if knots.iter().any(|t| !t.is_finite()) {
            return Err(Error::NonFiniteInput("knots"));
        }
        let widths: Vec<f64> = knots.windows(2).map(|w| w[1] - w[0]).collect();
        if let Some(j) = widths.iter().position(|&h| !(h > 0.0)) {
            return Err(Error::InvalidGrid(format!(
                "knots must be strictly increasing: t[{}] = {} >= t[{}] = {}",
                j,
                knots[j],
                j + 1,
                knots[j + 1]
            )));
        }
        if let Some(j) = widths.iter().position(|h| h.is_infinite()) {
            return Err(Error::InvalidGrid(format!(
                "knot spacing t[{}] - t[{}] overflows",
                j + 1,
                j
            )));
        }
        Ok(KnotGrid { knots, widths })
    }

    /// `n` knots spaced evenly over `[a, b]`.
    pub fn uniform(a: f64, b: f64, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGrid(format!("at least 2 knots are required, got {n}")));
        }
        let step = (b - a) / (n - 1) as f64;
        let mut knots: Vec<f64> = (0..n).map(|i| a + step * i as f64).collect();
        knots[n - 1] = b;
        Self::new(knots)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.knots.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.knots.is_empty()
    }

    #[inline]
    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    #[inline]
    pub fn widths(&self) -> &[f64] {
        &self.widths
    }

    pub fn first(&self) -> f64 {
        self.knots[0]
    }

    pub fn last(&self) -> f64 {
        self.knots[self.knots.len() - 1]
    }

    /// Segment index for `t`: ties at a knot go to the segment on its right,
    /// except the last knot, and points outside the grid map to the end
    /// segments.
    #[inline]
    pub fn locate(&self, t: f64) -> usize {
        let k = self.knots.partition_point(|&x| x <= t);
        k.saturating_sub(1).min(self.knots.len() - 2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    /// Prescribed first derivatives at the first and last knot.
    Clamped { left: f64, right: f64 },
    /// `L_ξ g` vanishes at the first and last knot.
    Natural,
}

impl BoundaryCondition {
    pub fn validate(&self) -> Result<()> {
        match *self {
            BoundaryCondition::Clamped { left, right } if !left.is_finite() || !right.is_finite() => {
                Err(Error::NonFiniteInput("boundary derivatives"))
            }
            _ => Ok(()),
        }
    }
}

/// `m × m` tridiagonal system. `sub[i]` is the entry left of `diag[i + 1]`,
/// `sup[i]` the entry right of `diag[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSystem {
    sub: Vec<f64>,
    diag: Vec<f64>,
    sup: Vec<f64>,
    rhs: Vec<f64>,
}

impl TridiagonalSystem {
    pub fn new(sub: Vec<f64>, diag: Vec<f64>, sup: Vec<f64>, rhs: Vec<f64>) -> Result<Self> {
        let m = diag.len();
        let off = m.saturating_sub(1);
        for (len, expected) in [(sub.len(), off), (sup.len(), off), (rhs.len(), m)] {
            if len != expected {
                return Err(Error::DimensionMismatch { expected, found: len });
            }
        }
        Ok(TridiagonalSystem { sub, diag, sup, rhs })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn sub(&self) -> &[f64] {
        &self.sub
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn sup(&self) -> &[f64] {
        &self.sup
    }

    pub fn rhs(&self) -> &[f64] {
        &self.rhs
    }

    /// `(sub, diag, sup, rhs)`.
    pub fn into_parts(self) -> (Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>) {
        (self.sub, self.diag, self.sup, self.rhs)
    }

    /// Same matrix, different right-hand side.
    pub fn with_rhs(&self, rhs: Vec<f64>) -> Result<Self> {
        Self::new(self.sub.clone(), self.diag.clone(), self.sup.clone(), rhs)
    }

    /// Row `i` as `(sub, diag, sup)`, with zeros outside the band.
    #[inline]
    pub fn row(&self, i: usize) -> (f64, f64, f64) {
        let lo = if i > 0 { self.sub[i - 1] } else { 0.0 };
        let hi = if i + 1 < self.diag.len() { self.sup[i] } else { 0.0 };
        (lo, self.diag[i], hi)
    }

    /// `|diag_i| − |sub_i| − |sup_i|` for every row.
    pub fn dominance_margins(&self) -> Vec<f64> {
        (0..self.len())
            .map(|i| {
                let (l, d, u) = self.row(i);
                d.abs() - l.abs() - u.abs()
            })
            .collect()
    }

    /// First row that is not strictly diagonally dominant, if any.
    pub fn first_non_dominant_row(&self) -> Option<usize> {
        (0..self.len()).find(|&i| {
            let (l, d, u) = self.row(i);
            !(d.abs() > l.abs() + u.abs())
        })
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.first_non_dominant_row().is_none()
    }

    /// Matrix-vector product `A·x`.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: x.len() });
        }
        Ok((0..self.len())
            .map(|i| {
                let (l, d, u) = self.row(i);
                let mut acc = d * x[i];
                if i > 0 {
                    acc += l * x[i - 1];
                }
                if i + 1 < x.len() {
                    acc += u * x[i + 1];
                }
                acc
            })
            .collect())
    }

    /// `‖A·x − rhs‖_∞`.
    pub fn residual_inf(&self, x: &[f64]) -> Result<f64> {
        Ok(self
            .apply(x)?
            .iter()
            .zip(&self.rhs)
            .fold(0.0_f64, |m, (ax, b)| m.max((ax - b).abs())))
    }
}

fn check_values(grid: &KnotGrid, g: &[f64]) -> Result<()> {
    if g.len() != grid.len() {
        return Err(Error::DimensionMismatch { expected: grid.len(), found: g.len() });
    }
    if g.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFiniteInput("data values"));
    }
    Ok(())
}

/// Per-width coefficients shared by every row touching that segment.
struct WidthCoeffs {
    rho: f64,
    sigma: f64,
    /// ξ/sinh(ξh)
    csch: f64,
    /// ξ·coth(ξh) − ξ/sinh(ξh)
    tanh_half: f64,
}

impl WidthCoeffs {
    #[inline]
    fn new(xi: Tension, h: f64) -> Self {
        let x = xi.value() * h;
        WidthCoeffs {
            rho: h * kernel::rho_unit(x),
            sigma: h * kernel::sigma_unit(x),
            csch: kernel::xi_csch(xi, h),
            tanh_half: kernel::xi_tanh_half(xi, h),
        }
    }
}

/// Right-hand side of the interior row at knot `j`, written with data
/// differences so smooth data does not cancel.
#[inline]
fn interior_rhs(left: &WidthCoeffs, right: &WidthCoeffs, g: &[f64], j: usize) -> f64 {
    left.csch * (g[j - 1] - g[j]) + right.csch * (g[j + 1] - g[j])
        - (left.tanh_half + right.tanh_half) * g[j]
}

/// Emits the rows of the symmetric clamped system in order as
/// `(diag, coupling to the next row, rhs)`; the last row's coupling is 0.
pub(crate) fn clamped_rows(
    grid: &KnotGrid,
    xi: Tension,
    g: &[f64],
    left_deriv: f64,
    right_deriv: f64,
    mut emit: impl FnMut(f64, f64, f64) -> Result<()>,
) -> Result<()> {
    check_values(grid, g)?;
    BoundaryCondition::Clamped { left: left_deriv, right: right_deriv }.validate()?;
    let n = grid.len();
    let h = grid.widths();

    // slope condition at t_1, negated so the diagonal is ρ > 0
    let mut l = WidthCoeffs::new(xi, h[0]);
    emit(l.rho, l.sigma, l.csch * (g[1] - g[0]) - l.tanh_half * g[0] - left_deriv)?;

    // each width's coefficients are computed once and carried to the next row
    for (j, &w) in h.iter().enumerate().skip(1) {
        let r = WidthCoeffs::new(xi, w);
        emit(l.rho + r.rho, r.sigma, interior_rhs(&l, &r, g, j))?;
        l = r;
    }

    emit(l.rho, 0.0, right_deriv - l.csch * (g[n - 1] - g[n - 2]) - l.tanh_half * g[n - 1])
}

/// Same as [`clamped_rows`] for the `n − 2` interior rows of the natural system.
pub(crate) fn natural_rows(
    grid: &KnotGrid,
    xi: Tension,
    g: &[f64],
    mut emit: impl FnMut(f64, f64, f64) -> Result<()>,
) -> Result<()> {
    check_values(grid, g)?;
    let n = grid.len();
    let h = grid.widths();
    let mut l = WidthCoeffs::new(xi, h[0]);
    for (j, &w) in h.iter().enumerate().skip(1) {
        let r = WidthCoeffs::new(xi, w);
        let off = if j < n - 2 { r.sigma } else { 0.0 };
        emit(l.rho + r.rho, off, interior_rhs(&l, &r, g, j))?;
        l = r;
    }
    Ok(())
}

/// Collects emitted rows into a [`TridiagonalSystem`].
fn collect_rows(m: usize, rows: impl FnOnce(&mut dyn FnMut(f64, f64, f64) -> Result<()>) -> Result<()>) -> Result<TridiagonalSystem> {
    let mut diag = Vec::with_capacity(m);
    let mut off = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    rows(&mut |d, o, r| {
        diag.push(d);
        off.push(o);
        rhs.push(r);
        Ok(())
    })?;
    off.pop();
    TridiagonalSystem::new(off.clone(), diag, off, rhs)
}

/// `n × n` clamped system for the moments `γ_1 … γ_n`.
pub fn assemble_clamped(
    grid: &KnotGrid,
    xi: Tension,
    g: &[f64],
    left_deriv: f64,
    right_deriv: f64,
) -> Result<TridiagonalSystem> {
    collect_rows(grid.len(), |emit| clamped_rows(grid, xi, g, left_deriv, right_deriv, emit))
}

/// `(n−2) × (n−2)` natural system for the interior moments `γ_2 … γ_{n−1}`.
/// Empty when `n = 2`.
pub fn assemble_natural(grid: &KnotGrid, xi: Tension, g: &[f64]) -> Result<TridiagonalSystem> {
    collect_rows(grid.len() - 2, |emit| natural_rows(grid, xi, g, emit))
}
