//! Double-double kernels evaluated from positive power series.
//!
//! For `y ≥ 0` every quantity needed (`sinh y`, `cosh y`,
//! `y cosh y − sinh y`, `sinh 2y − 2y`) is a power series with nonnegative
//! coefficients, so summing it in double-double arithmetic has no
//! cancellation and yields about 31 correct digits. The argument `ξ·t` is
//! itself formed exactly with an error-free product. Practical up to
//! `|ξt| ≈ 100`; the cost grows linearly with the argument.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    (s, (a - (s - v)) + (b - v))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const ZERO: Self = DoubleDouble { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = DoubleDouble { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    /// Exact product of two doubles.
    pub fn product(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        DoubleDouble { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn norm(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        DoubleDouble { hi, lo }
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl Add for DoubleDouble {
    type Output = Self;

    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Self::norm(s, e + f)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;

    fn neg(self) -> Self {
        DoubleDouble { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;

    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;

    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        Self::norm(p, e + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Mul<f64> for DoubleDouble {
    type Output = Self;

    fn mul(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        Self::norm(p, e + self.lo * b)
    }
}

impl Div for DoubleDouble {
    type Output = Self;

    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        DoubleDouble { hi: q1, lo: q2 } + DoubleDouble::from_f64(q3)
    }
}

impl Div<f64> for DoubleDouble {
    type Output = Self;

    fn div(self, b: f64) -> Self {
        self / DoubleDouble::from_f64(b)
    }
}

/// Terms `y^{2k+1}/(2k+1)!` for `k = 0, 1, …` folded with `weight(k)`.
fn odd_series(y: DoubleDouble, weight: impl Fn(usize) -> f64, skip_first: bool) -> DoubleDouble {
    let y2 = y * y;
    let mut term = y;
    let mut sum = if skip_first { DoubleDouble::ZERO } else { term * weight(0) };
    for k in 1..4000 {
        term = term * y2 / ((2 * k) * (2 * k + 1)) as f64;
        let add = term * weight(k);
        sum = sum + add;
        if add.hi.abs() <= 1e-34 * sum.hi.abs() {
            break;
        }
    }
    sum
}

fn sinh_dd(y: DoubleDouble) -> DoubleDouble {
    odd_series(y, |_| 1.0, false)
}

fn cosh_dd(y: DoubleDouble) -> DoubleDouble {
    let y2 = y * y;
    let mut term = DoubleDouble::ONE;
    let mut sum = term;
    for k in 1..4000 {
        term = term * y2 / ((2 * k - 1) * (2 * k)) as f64;
        sum = sum + term;
        if term.hi.abs() <= 1e-34 * sum.hi.abs() {
            break;
        }
    }
    sum
}

/// `y cosh y − sinh y = Σ_{k≥1} 2k·y^{2k+1}/(2k+1)!`
fn ycosh_minus_sinh_dd(y: DoubleDouble) -> DoubleDouble {
    odd_series(y, |k| (2 * k) as f64, true)
}

/// `sinh 2y − 2y`
fn sinh2_minus_linear_dd(y: DoubleDouble) -> DoubleDouble {
    odd_series(y * 2.0, |_| 1.0, true)
}

fn cube(x: f64) -> DoubleDouble {
    DoubleDouble::product(x, x) * x
}

/// `Φ_ξ(t)` to about 31 digits.
pub fn phi_ext(xi: f64, t: f64) -> f64 {
    let sign = t.signum();
    let t = t.abs();
    if xi == 0.0 {
        return sign * (cube(t) / 6.0).to_f64();
    }
    let y = DoubleDouble::product(xi, t);
    sign * (ycosh_minus_sinh_dd(y) / (cube(xi) * 2.0)).to_f64()
}

/// `Φ_ξ'(t) = t sinh(ξt)/(2ξ)`.
pub fn phi_prime_ext(xi: f64, t: f64) -> f64 {
    let t = t.abs();
    if xi == 0.0 {
        return (DoubleDouble::product(t, t) / 2.0).to_f64();
    }
    let y = DoubleDouble::product(xi, t);
    (sinh_dd(y) * t / (xi * 2.0)).to_f64()
}

/// `ψ_ξ(t) = sinh(ξt)/ξ`.
pub fn psi_ext(xi: f64, t: f64) -> f64 {
    if xi == 0.0 {
        return t;
    }
    let sign = t.signum();
    let y = DoubleDouble::product(xi, t.abs());
    sign * (sinh_dd(y) / xi).to_f64()
}

/// `ρ(h) = (sinh 2ξh − 2ξh)/(4ξ sinh² ξh)`.
pub fn rho_ext(xi: f64, h: f64) -> f64 {
    if xi == 0.0 {
        return h / 3.0;
    }
    let x = DoubleDouble::product(xi, h);
    let sh = sinh_dd(x);
    (sinh2_minus_linear_dd(x) / (sh * sh * (4.0 * xi))).to_f64()
}

/// `σ(h) = (ξh cosh ξh − sinh ξh)/(2ξ sinh² ξh)`.
pub fn sigma_ext(xi: f64, h: f64) -> f64 {
    if xi == 0.0 {
        return h / 6.0;
    }
    let x = DoubleDouble::product(xi, h);
    let sh = sinh_dd(x);
    (ycosh_minus_sinh_dd(x) / (sh * sh * (2.0 * xi))).to_f64()
}

pub fn coth_ext(x: f64) -> f64 {
    let x = DoubleDouble::from_f64(x);
    (cosh_dd(x) / sinh_dd(x)).to_f64()
}

pub fn csch_ext(x: f64) -> f64 {
    let x = DoubleDouble::from_f64(x);
    (DoubleDouble::ONE / sinh_dd(x)).to_f64()
}
