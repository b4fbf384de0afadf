//! Per-segment basis of the L-spline.
//!
//! On `[a, b]` with `h = b − a` the spline is
//! `γ_a·A¹(t) + γ_b·B¹(t) + g_a·A²(t) + g_b·B²(t)` where
//!
//! ```text
//! A²(t) = sinh ξ(b − t)/sinh ξh        B²(t) = sinh ξ(t − a)/sinh ξh
//! A¹(t) = [Φ(b − t) − A²(t)Φ(h)]/ψ(h)  B¹(t) = [Φ(t − a) − B²(t)Φ(h)]/ψ(h)
//! ```
//!
//! Both pairs are mirror images, so everything reduces to two profiles of
//! the distance `v` from the end where the function vanishes:
//! `g(v) = sinh ξv / sinh ξh` and `f(v) = [Φ(v) − g(v)Φ(h)]/ψ(h)`.
//! `L_ξ f = g` and `L_ξ g = 0`, hence `f'' = g + ξ²f` and `g'' = ξ²g`.
//!
//! For `ξh` beyond the series regime `f` is rewritten as
//! `[y·cosh y − ξh·coth(ξh)·sinh y]/(2ξ² sinh ξh)` with `y = ξv`, and every
//! hyperbolic ratio is formed from `e^{−ξh}`-scaled pieces.

use crate::error::{Error, Result};
use crate::kernel::{phic, sinhc, Branch, KernelRegime, Tension};

/// Values (or derivatives) of `A¹, B¹, A², B²` at one abscissa.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BasisQuad {
    pub a1: f64,
    pub b1: f64,
    pub a2: f64,
    pub b2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    t_left: f64,
    t_right: f64,
    xi: Tension,
}

/// `f`, `f'` and `g`, `g'` at one distance.
#[derive(Debug, Clone, Copy)]
struct Profile {
    f: f64,
    df: f64,
    g: f64,
    dg: f64,
}

impl Segment {
    pub fn new(t_left: f64, t_right: f64, xi: Tension) -> Result<Self> {
        if !t_left.is_finite() || !t_right.is_finite() {
            return Err(Error::NonFiniteInput("segment endpoints"));
        }
        if t_left >= t_right {
            return Err(Error::Domain(format!(
                "segment endpoints must satisfy {t_left} < {t_right}"
            )));
        }
        Ok(Segment { t_left, t_right, xi })
    }

    /// Unchecked constructor for callers that already hold a validated grid.
    #[inline]
    pub(crate) fn from_grid(t_left: f64, t_right: f64, xi: Tension) -> Self {
        debug_assert!(t_left < t_right);
        Segment { t_left, t_right, xi }
    }

    pub fn t_left(&self) -> f64 {
        self.t_left
    }

    pub fn t_right(&self) -> f64 {
        self.t_right
    }

    pub fn xi(&self) -> Tension {
        self.xi
    }

    #[inline]
    pub fn width(&self) -> f64 {
        self.t_right - self.t_left
    }

    pub fn values(&self, t: f64) -> BasisQuad {
        let (a, b) = self.profiles(t);
        BasisQuad {
            a1: a.f,
            b1: b.f,
            a2: a.g,
            b2: b.g,
        }
    }

    pub fn derivs(&self, t: f64) -> BasisQuad {
        let (a, b) = self.profiles(t);
        // A-side profiles are functions of b − t
        BasisQuad {
            a1: -a.df,
            b1: b.df,
            a2: -a.dg,
            b2: b.dg,
        }
    }

    pub fn derivs2(&self, t: f64) -> BasisQuad {
        let (a, b) = self.profiles(t);
        let xi2 = self.xi.value() * self.xi.value();
        BasisQuad {
            a1: a.g + xi2 * a.f,
            b1: b.g + xi2 * b.f,
            a2: xi2 * a.g,
            b2: xi2 * b.g,
        }
    }

    /// Values, first and second derivatives in one pass.
    pub fn all(&self, t: f64) -> [BasisQuad; 3] {
        let (a, b) = self.profiles(t);
        let xi2 = self.xi.value() * self.xi.value();
        [
            BasisQuad { a1: a.f, b1: b.f, a2: a.g, b2: b.g },
            BasisQuad { a1: -a.df, b1: b.df, a2: -a.dg, b2: b.dg },
            BasisQuad {
                a1: a.g + xi2 * a.f,
                b1: b.g + xi2 * b.f,
                a2: xi2 * a.g,
                b2: xi2 * b.g,
            },
        ]
    }

    /// Profiles for the A side (distance `b − t`) and the B side
    /// (distance `t − a`).
    #[inline]
    fn profiles(&self, t: f64) -> (Profile, Profile) {
        let h = self.width();
        let from_left = t - self.t_left;
        let from_right = self.t_right - t;
        let xi = self.xi.value();
        let x = xi * h;
        if xi == 0.0 || x == 0.0 {
            (cubic_profile(from_right, from_left, h), cubic_profile(from_left, from_right, h))
        } else {
            match KernelRegime::DEFAULT.branch(x) {
                Branch::SeriesSmall => {
                    let hx = SeriesSeg::new(xi, h);
                    (hx.profile(from_right), hx.profile(from_left))
                }
                Branch::Direct | Branch::AsymptoticLarge => {
                    let sx = ScaledSeg::new(xi, h);
                    (sx.profile(from_right, from_left), sx.profile(from_left, from_right))
                }
            }
        }
    }
}

/// `ξ = 0`: `g = v/h`, `f = v(v² − h²)/(6h)`.
#[inline]
fn cubic_profile(v: f64, u: f64, h: f64) -> Profile {
    Profile {
        f: -v * u * (v + h) / (6.0 * h),
        df: (3.0 * v * v - h * h) / (6.0 * h),
        g: v / h,
        dg: 1.0 / h,
    }
}

/// Series regime: written through `sinhc` and `phic`, which are smooth in `ξ`.
struct SeriesSeg {
    xi: f64,
    h: f64,
    sinhc_h: f64,
    half_phic_h: f64,
}

impl SeriesSeg {
    fn new(xi: f64, h: f64) -> Self {
        let x = xi * h;
        SeriesSeg {
            xi,
            h,
            sinhc_h: sinhc(x),
            half_phic_h: 0.5 * phic(x),
        }
    }

    #[inline]
    fn profile(&self, v: f64) -> Profile {
        let (h, sh) = (self.h, self.sinhc_h);
        let y = self.xi * v;
        let sv = sinhc(y);
        let g = (v / h) * sv / sh;
        let f = (v * v * v * 0.5 * phic(y) - v * h * h * self.half_phic_h * sv / sh) / (h * sh);
        let df = (0.5 * v * v * sv - y.cosh() * h * h * self.half_phic_h / sh) / (h * sh);
        let dg = y.cosh() / (h * sh);
        Profile { f, df, g, dg }
    }
}

/// Direct and large regimes, overflow-free for any `ξh`.
struct ScaledSeg {
    xi: f64,
    x: f64,
    /// `1 − e^{−2x}`
    em: f64,
    /// `coth x − 1`
    coth_m1: f64,
}

impl ScaledSeg {
    fn new(xi: f64, h: f64) -> Self {
        let x = xi * h;
        let em = -(-2.0 * x).exp_m1();
        ScaledSeg {
            xi,
            x,
            em,
            coth_m1: 2.0 * (-2.0 * x).exp() / em,
        }
    }

    /// `v` is the distance from the vanishing end, `u` the distance to the
    /// other end (`u = h − v`, supplied separately to avoid cancellation).
    #[inline]
    fn profile(&self, v: f64, u: f64) -> Profile {
        let (xi, x, em, k) = (self.xi, self.x, self.em, self.coth_m1);
        let y = xi * v;
        let ay = y.abs();
        // |y| − x, exact when 0 ≤ v
        let expo = if v >= 0.0 { -xi * u } else { ay - x };
        let scale = expo.exp();
        // s = sinh y / sinh x, c = cosh y / sinh x, d = c − s = e^{−y}/sinh x;
        // dividing last keeps s = 1 and f = 0 exact at v = h
        let s = (scale * -(-2.0 * ay).exp_m1() / em).copysign(y);
        let c = scale * (1.0 + (-2.0 * ay).exp()) / em;
        let d = 2.0 * (-y - x).exp() / em;
        // y·c − x·coth(x)·s  =  (y − x)s + y·d − x(coth x − 1)s
        let f = (-xi * u * s + y * d - x * k * s) / (2.0 * xi * xi);
        // y·s − c(x coth x − 1)  =  (y − x)s − x(k s + d + k d) + c
        let df = (-xi * u * s - x * (k * s + d + k * d) + c) / (2.0 * xi);
        Profile {
            f,
            df,
            g: s,
            dg: xi * c,
        }
    }
}
