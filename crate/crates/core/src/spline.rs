//! Fitted L-spline model and sampling.

use crate::basis::{BasisQuad, Segment};
use crate::error::{Error, Result};
use crate::kernel::Tension;
use crate::solver::ForwardSweep;
use crate::system::{clamped_rows, natural_rows, BoundaryCondition, KnotGrid};

/// An interpolating L-spline, stored as data values and moments
/// `γ_j = g''(t_j) − ξ²g(t_j)` at the knots.
///
/// Outside `[t_1, t_n]` the end segments are continued by their closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct LSpline {
    xi: Tension,
    grid: KnotGrid,
    values: Vec<f64>,
    moments: Vec<f64>,
    bc: BoundaryCondition,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SampleSpec {
    /// `count ≥ 2` evenly spaced points over `[t_1, t_n]`, both ends included.
    Count(usize),
    /// Explicit, finite, non-decreasing abscissae.
    Points(Vec<f64>),
}

/// Columnar samples of a spline.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SampleTable {
    pub t: Vec<f64>,
    pub value: Vec<f64>,
    pub deriv1: Vec<f64>,
    pub deriv2: Vec<f64>,
}

impl SampleTable {
    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = [f64; 4]> + '_ {
        (0..self.len()).map(move |i| [self.t[i], self.value[i], self.deriv1[i], self.deriv2[i]])
    }
}

impl LSpline {
    /// Fits the spline through `values` at the grid knots.
    pub fn fit(grid: KnotGrid, values: Vec<f64>, xi: Tension, bc: BoundaryCondition) -> Result<Self> {
        bc.validate()?;
        // rows are eliminated as they are generated, so the only storage
        // is the moment vector and the eliminated couplings
        let n = grid.len();
        let moments = match bc {
            BoundaryCondition::Clamped { left, right } => {
                let mut sweep = ForwardSweep::new(n, 0);
                clamped_rows(&grid, xi, &values, left, right, |d, o, r| sweep.push(d, o, r))?;
                sweep.finish(0)
            }
            BoundaryCondition::Natural => {
                let mut sweep = ForwardSweep::new(n - 2, 1);
                natural_rows(&grid, xi, &values, |d, o, r| sweep.push(d, o, r))?;
                sweep.finish(1)
            }
        };
        Ok(LSpline { xi, grid, values, moments, bc })
    }

    pub fn xi(&self) -> Tension {
        self.xi
    }

    pub fn grid(&self) -> &KnotGrid {
        &self.grid
    }

    pub fn knots(&self) -> &[f64] {
        self.grid.knots()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn moments(&self) -> &[f64] {
        &self.moments
    }

    pub fn boundary(&self) -> BoundaryCondition {
        self.bc
    }

    pub fn segment(&self, j: usize) -> Segment {
        let k = self.grid.knots();
        Segment::from_grid(k[j], k[j + 1], self.xi)
    }

    #[inline]
    fn combine(&self, j: usize, q: &BasisQuad) -> f64 {
        let (g, m) = (&self.values, &self.moments);
        m[j] * q.a1 + m[j + 1] * q.b1 + g[j] * q.a2 + g[j + 1] * q.b2
    }

    /// Value using the closed form of segment `j`, whatever `t` is.
    pub fn eval_on_segment(&self, j: usize, t: f64) -> f64 {
        self.combine(j, &self.segment(j).values(t))
    }

    /// Derivative of order 0, 1 or 2 using the closed form of segment `j`.
    pub fn deriv_on_segment(&self, j: usize, t: f64, order: u8) -> Result<f64> {
        let seg = self.segment(j);
        let q = match order {
            0 => seg.values(t),
            1 => seg.derivs(t),
            2 => seg.derivs2(t),
            _ => return Err(Error::InvalidOrder(order)),
        };
        Ok(self.combine(j, &q))
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.eval_on_segment(self.grid.locate(t), t)
    }

    /// First (`order = 1`) or second (`order = 2`) derivative.
    pub fn eval_deriv(&self, t: f64, order: u8) -> Result<f64> {
        if order != 1 && order != 2 {
            return Err(Error::InvalidOrder(order));
        }
        self.deriv_on_segment(self.grid.locate(t), t, order)
    }

    /// `g''(t) − ξ²g(t)`.
    pub fn eval_l(&self, t: f64) -> f64 {
        let j = self.grid.locate(t);
        let [v, _, d2] = self.segment(j).all(t);
        let xi2 = self.xi.value() * self.xi.value();
        self.combine(j, &d2) - xi2 * self.combine(j, &v)
    }

    /// Value, first and second derivative at `t`.
    pub fn eval_all(&self, t: f64) -> [f64; 3] {
        let j = self.grid.locate(t);
        let [v, d1, d2] = self.segment(j).all(t);
        [self.combine(j, &v), self.combine(j, &d1), self.combine(j, &d2)]
    }

    pub fn sample(&self, spec: &SampleSpec) -> Result<SampleTable> {
        let ts = match spec {
            SampleSpec::Count(n) => {
                if *n < 2 {
                    return Err(Error::BadSpec(format!("sample count must be at least 2, got {n}")));
                }
                let (a, b) = (self.grid.first(), self.grid.last());
                let step = (b - a) / (*n - 1) as f64;
                let mut ts: Vec<f64> = (0..*n).map(|i| a + step * i as f64).collect();
                ts[*n - 1] = b;
                ts
            }
            SampleSpec::Points(ts) => {
                if let Some(i) = ts.iter().position(|t| !t.is_finite()) {
                    return Err(Error::BadSpec(format!("sample point {i} is not finite")));
                }
                if let Some(i) = ts.windows(2).position(|w| w[1] < w[0]) {
                    return Err(Error::BadSpec(format!(
                        "sample points must be non-decreasing: {} > {} at index {}",
                        ts[i],
                        ts[i + 1],
                        i + 1
                    )));
                }
                ts.clone()
            }
        };
        let mut table = SampleTable {
            t: Vec::with_capacity(ts.len()),
            value: Vec::with_capacity(ts.len()),
            deriv1: Vec::with_capacity(ts.len()),
            deriv2: Vec::with_capacity(ts.len()),
        };
        for t in ts {
            let [v, d1, d2] = self.eval_all(t);
            table.t.push(t);
            table.value.push(v);
            table.deriv1.push(d1);
            table.deriv2.push(d2);
        }
        Ok(table)
    }
}
