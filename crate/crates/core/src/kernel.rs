//! Scalar hyperbolic kernels of the operator `d²/dt² − ξ²`.
//!
//! Every kernel is a dimensionless function of `x = ξ·h` (or `ξ·t`) times a
//! power of the length, and is evaluated in one of three regimes selected by
//! `|x|`:
//!
//! * a truncated Taylor series below [`KernelRegime::DEFAULT`]`.threshold_small`,
//!   where the closed forms cancel catastrophically,
//! * the closed form with `sinh`/`cosh` in between,
//! * `e^{−x}`-scaled closed forms above `threshold_large`, which never
//!   overflow and degrade gracefully into the asymptotes `ρ → 1/(2ξ)` and
//!   `σ → 0`.
//!
//! `ξ = 0` is the cubic limit and goes through the series branch.

use crate::error::{Error, Result};

/// Nonnegative, finite tension parameter `ξ`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tension(f64);

impl Tension {
    pub const ZERO: Tension = Tension(0.0);

    pub fn new(xi: f64) -> Result<Self> {
        if !xi.is_finite() {
            return Err(Error::NonFiniteInput("tension"));
        }
        if xi < 0.0 {
            return Err(Error::Domain(format!("tension must be nonnegative, got {xi}")));
        }
        // normalise -0.0
        Ok(Tension(xi.abs()))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }
}

impl TryFrom<f64> for Tension {
    type Error = Error;

    fn try_from(xi: f64) -> Result<Self> {
        Tension::new(xi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    SeriesSmall,
    Direct,
    AsymptoticLarge,
}

/// Regime boundaries in terms of `|ξ·h|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelRegime {
    pub threshold_small: f64,
    pub threshold_large: f64,
}

impl KernelRegime {
    pub const DEFAULT: KernelRegime = KernelRegime {
        threshold_small: 0.5,
        threshold_large: 30.0,
    };

    #[inline]
    pub fn branch(&self, x: f64) -> Branch {
        let x = x.abs();
        if x < self.threshold_small {
            Branch::SeriesSmall
        } else if x <= self.threshold_large {
            Branch::Direct
        } else {
            Branch::AsymptoticLarge
        }
    }
}

impl Default for KernelRegime {
    fn default() -> Self {
        Self::DEFAULT
    }
}

const SMALL: f64 = KernelRegime::DEFAULT.threshold_small;
const LARGE: f64 = KernelRegime::DEFAULT.threshold_large;

/// The dominance gap has a sixth-order zero at the origin; its closed form
/// stays cancellation-prone well past `SMALL`.
const GAP_SERIES: f64 = 2.0;

const MAX_TERMS: usize = 64;

/// Sums `Σ_j coeff(j)·term_j` with `term_{j+1} = term_j·x²/denom(j)` until the
/// terms drop below the working precision.
#[inline]
fn even_series(
    x2: f64,
    first: f64,
    denom: impl Fn(usize) -> f64,
    coeff: impl Fn(usize) -> f64,
) -> f64 {
    let mut term = first;
    let mut sum = coeff(0) * term;
    for j in 0..MAX_TERMS {
        term *= x2 / denom(j);
        let add = coeff(j + 1) * term;
        sum += add;
        if add.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// `sinh(x)/x`, even, equal to 1 at the origin.
#[inline]
pub(crate) fn sinhc(x: f64) -> f64 {
    let x = x.abs();
    if x < SMALL {
        let jj = |j: usize| ((2 * j + 2) * (2 * j + 3)) as f64;
        even_series(x * x, 1.0, jj, |_| 1.0)
    } else {
        x.sinh() / x
    }
}

/// `(x cosh x − sinh x)/x³`, even, equal to 1/3 at the origin.
#[inline]
pub(crate) fn phic(x: f64) -> f64 {
    let x = x.abs();
    if x < SMALL {
        // Σ_{j≥0} 2(j+1) x^{2j} / (2j+3)!
        let jj = |j: usize| ((2 * j + 4) * (2 * j + 5)) as f64;
        even_series(x * x, 1.0 / 6.0, jj, |j| (2 * (j + 1)) as f64)
    } else {
        (x * x.cosh() - x.sinh()) / (x * x * x)
    }
}

/// `σ(h)/h` as a function of `x = ξh ≥ 0`.
pub(crate) fn sigma_unit(x: f64) -> f64 {
    match KernelRegime::DEFAULT.branch(x) {
        Branch::SeriesSmall => {
            let s = sinhc(x);
            phic(x) / (2.0 * s * s)
        }
        Branch::Direct => {
            let sh = x.sinh();
            (x * x.cosh() - sh) / (2.0 * x * sh * sh)
        }
        Branch::AsymptoticLarge => {
            let e = (-2.0 * x).exp();
            let em = -(-2.0 * x).exp_m1();
            (-x).exp() * (x * (1.0 + e) - em) / (x * em * em)
        }
    }
}

/// `ρ(h)/h` as a function of `x = ξh ≥ 0`.
pub(crate) fn rho_unit(x: f64) -> f64 {
    match KernelRegime::DEFAULT.branch(x) {
        Branch::SeriesSmall => {
            // (sinh 2x − 2x)/x³ = 8 Σ_{j≥0} (2x)^{2j} / (2j+3)!
            let jj = |j: usize| ((2 * j + 4) * (2 * j + 5)) as f64;
            let num = 8.0 * even_series(4.0 * x * x, 1.0 / 6.0, jj, |_| 1.0);
            let s = sinhc(x);
            num / (4.0 * s * s)
        }
        Branch::Direct => {
            let sh = x.sinh();
            (sh * x.cosh() - x) / (2.0 * x * sh * sh)
        }
        Branch::AsymptoticLarge => {
            let e = (-2.0 * x).exp();
            let em = -(-2.0 * x).exp_m1();
            (0.5 * (1.0 - e * e) - 2.0 * x * e) / (x * em * em)
        }
    }
}

/// `(ρ(h)/2 − σ(h))/h` as a function of `x = ξh ≥ 0`.
pub(crate) fn gap_unit(x: f64) -> f64 {
    if x < GAP_SERIES {
        // numerator sinh 2x − 2x − 4x cosh x + 4 sinh x
        //   = Σ_{j≥0} (2^{2j+5} − 8(j+2)) x^{2j+5} / (2j+5)!
        let x2 = x * x;
        let mut v = 1.0 / 120.0;
        let mut w = 32.0 / 120.0;
        let mut sum = w - 16.0 * v;
        for j in 0..MAX_TERMS {
            let d = ((2 * j + 6) * (2 * j + 7)) as f64;
            v *= x2 / d;
            w *= 4.0 * x2 / d;
            let add = w - (8 * (j + 3)) as f64 * v;
            sum += add;
            if add.abs() <= 1e-17 * sum.abs() {
                break;
            }
        }
        let s = sinhc(x);
        sum * x2 / (8.0 * s * s)
    } else if x <= LARGE {
        let sh = x.sinh();
        let num = (2.0 * x).sinh() - 2.0 * x - 4.0 * x * x.cosh() + 4.0 * sh;
        num / (8.0 * x * sh * sh)
    } else {
        0.5 * rho_unit(x) - sigma_unit(x)
    }
}

#[inline]
fn coth_raw(x: f64) -> f64 {
    (1.0 + (-2.0 * x).exp()) / -(-2.0 * x).exp_m1()
}

#[inline]
fn csch_raw(x: f64) -> f64 {
    2.0 * (-x).exp() / -(-2.0 * x).exp_m1()
}

/// `x·coth x`, equal to 1 at the origin.
#[inline]
pub(crate) fn xcoth(x: f64) -> f64 {
    let x = x.abs();
    if x < SMALL {
        x.cosh() / sinhc(x)
    } else {
        x * coth_raw(x)
    }
}

/// `x/sinh x`, equal to 1 at the origin.
#[inline]
pub(crate) fn xcsch(x: f64) -> f64 {
    let x = x.abs();
    if x < SMALL {
        1.0 / sinhc(x)
    } else {
        x * csch_raw(x)
    }
}

fn check_width(h: f64) -> Result<()> {
    if !h.is_finite() {
        return Err(Error::NonFiniteInput("segment width"));
    }
    if h <= 0.0 {
        return Err(Error::Domain(format!("segment width must be positive, got {h}")));
    }
    Ok(())
}

fn check_positive(x: f64) -> Result<()> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain(format!("argument must be positive, got {x}")));
    }
    Ok(())
}

/// `Φ_ξ(t) = (ξt cosh ξt − sinh ξt)/(2ξ³)`; `t³/6` when `ξ = 0`.
pub fn phi(xi: Tension, t: f64) -> f64 {
    t * t * t * phic(xi.0 * t) * 0.5
}

/// `Φ_ξ'(t) = t sinh(ξt)/(2ξ)`; `t²/2` when `ξ = 0`.
pub fn phi_prime(xi: Tension, t: f64) -> f64 {
    t * t * sinhc(xi.0 * t) * 0.5
}

/// `Φ_ξ''(t) = (sinh(ξt)/ξ + t cosh ξt)/2`; `t` when `ξ = 0`.
pub fn phi_second(xi: Tension, t: f64) -> f64 {
    let y = xi.0 * t;
    0.5 * t * (sinhc(y) + y.cosh())
}

/// `ψ_ξ(t) = sinh(ξt)/ξ`; `t` when `ξ = 0`.
pub fn psi(xi: Tension, t: f64) -> f64 {
    t * sinhc(xi.0 * t)
}

/// Diagonal weight `ρ(h) = (sinh 2ξh − 2ξh)/(4ξ sinh² ξh)`; `h/3` when `ξ = 0`.
pub fn rho(xi: Tension, h: f64) -> Result<f64> {
    check_width(h)?;
    Ok(h * rho_unit(xi.0 * h))
}

/// Off-diagonal weight `σ(h) = (ξh cosh ξh − sinh ξh)/(2ξ sinh² ξh)`; `h/6`
/// when `ξ = 0`.
pub fn sigma(xi: Tension, h: f64) -> Result<f64> {
    check_width(h)?;
    Ok(h * sigma_unit(xi.0 * h))
}

/// `ln σ(h)`. Finite wherever `σ` is, including `ξh ≳ 745` where `σ`
/// itself underflows to zero.
pub fn ln_sigma(xi: Tension, h: f64) -> Result<f64> {
    check_width(h)?;
    let x = xi.0 * h;
    Ok(match KernelRegime::DEFAULT.branch(x) {
        Branch::AsymptoticLarge => {
            let e = (-2.0 * x).exp();
            let em = -(-2.0 * x).exp_m1();
            h.ln() - x + (x * (1.0 + e) - em).ln() - x.ln() - 2.0 * em.ln()
        }
        _ => (h * sigma_unit(x)).ln(),
    })
}

/// `ρ(h)/2 − σ(h)` evaluated without cancellation. It is positive for
/// `ξh > 0` and behaves like `h·(ξh)²/60` near the cubic limit, far below
/// the rounding error of `ρ` and `σ` themselves.
pub fn dominance_gap(xi: Tension, h: f64) -> Result<f64> {
    check_width(h)?;
    Ok(h * gap_unit(xi.0 * h))
}

/// `coth x` for `x > 0` without overflow.
pub fn coth_scaled(x: f64) -> Result<f64> {
    check_positive(x)?;
    Ok(coth_raw(x))
}

/// `1/sinh x` for `x > 0` without overflow.
pub fn csch_scaled(x: f64) -> Result<f64> {
    check_positive(x)?;
    Ok(csch_raw(x))
}

/// `ξ·coth(ξh)`, tending to `1/h` as `ξ → 0`.
#[inline]
pub fn xi_coth(xi: Tension, h: f64) -> f64 {
    xcoth(xi.0 * h) / h
}

/// `ξ/sinh(ξh)`, tending to `1/h` as `ξ → 0`.
#[inline]
pub fn xi_csch(xi: Tension, h: f64) -> f64 {
    xcsch(xi.0 * h) / h
}

/// `ξ·tanh(ξh/2) = ξ·coth(ξh) − ξ/sinh(ξh)`.
#[inline]
pub fn xi_tanh_half(xi: Tension, h: f64) -> f64 {
    xi.0 * (0.5 * xi.0 * h).tanh()
}
