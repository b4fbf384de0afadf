use super::dense::{dense_solve, DenseMatrix};
use crate::error::{Error, Result};

/// Classical cubic spline in second-derivative (moment) form.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicSpline {
    knots: Vec<f64>,
    y: Vec<f64>,
    m: Vec<f64>,
}

impl CubicSpline {
    pub fn moments(&self) -> &[f64] {
        &self.m
    }

    fn seg(&self, t: f64) -> usize {
        let n = self.knots.len();
        let mut j = 0;
        while j + 2 < n && t >= self.knots[j + 1] {
            j += 1;
        }
        j
    }

    pub fn eval(&self, t: f64) -> f64 {
        let j = self.seg(t);
        let (a, b) = (self.knots[j], self.knots[j + 1]);
        let h = b - a;
        let (p, q) = (b - t, t - a);
        self.m[j] * p * p * p / (6.0 * h)
            + self.m[j + 1] * q * q * q / (6.0 * h)
            + (self.y[j] - self.m[j] * h * h / 6.0) * p / h
            + (self.y[j + 1] - self.m[j + 1] * h * h / 6.0) * q / h
    }

    pub fn deriv(&self, t: f64) -> f64 {
        let j = self.seg(t);
        let (a, b) = (self.knots[j], self.knots[j + 1]);
        let h = b - a;
        let (p, q) = (b - t, t - a);
        -self.m[j] * p * p / (2.0 * h) + self.m[j + 1] * q * q / (2.0 * h) + (self.y[j + 1] - self.y[j]) / h
            - (self.m[j + 1] - self.m[j]) * h / 6.0
    }
}

fn check(knots: &[f64], z: &[f64]) -> Result<()> {
    if knots.len() < 2 {
        return Err(Error::InvalidGrid("at least 2 knots are required".into()));
    }
    if z.len() != knots.len() {
        return Err(Error::DimensionMismatch { expected: knots.len(), found: z.len() });
    }
    if knots.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidGrid("knots must be strictly increasing".into()));
    }
    Ok(())
}

fn interior_rows(knots: &[f64], z: &[f64], a: &mut DenseMatrix, rhs: &mut [f64]) {
    let n = knots.len();
    for i in 1..n - 1 {
        let (hl, hr) = (knots[i] - knots[i - 1], knots[i + 1] - knots[i]);
        a[(i, i - 1)] = hl;
        a[(i, i)] = 2.0 * (hl + hr);
        a[(i, i + 1)] = hr;
        rhs[i] = 6.0 * ((z[i + 1] - z[i]) / hr - (z[i] - z[i - 1]) / hl);
    }
}

/// Cubic spline with prescribed end slopes `d1`, `d2`.
pub fn cubic_clamped_fit(knots: &[f64], z: &[f64], d1: f64, d2: f64) -> Result<CubicSpline> {
    check(knots, z)?;
    let n = knots.len();
    let mut a = DenseMatrix::zeros(n, n);
    let mut rhs = vec![0.0; n];
    interior_rows(knots, z, &mut a, &mut rhs);
    let h0 = knots[1] - knots[0];
    a[(0, 0)] = 2.0 * h0;
    a[(0, 1)] = h0;
    rhs[0] = 6.0 * ((z[1] - z[0]) / h0 - d1);
    let hn = knots[n - 1] - knots[n - 2];
    a[(n - 1, n - 2)] = hn;
    a[(n - 1, n - 1)] = 2.0 * hn;
    rhs[n - 1] = 6.0 * (d2 - (z[n - 1] - z[n - 2]) / hn);
    let m = dense_solve(&a, &rhs)?;
    Ok(CubicSpline { knots: knots.to_vec(), y: z.to_vec(), m })
}

/// Cubic spline with vanishing end second derivatives.
pub fn cubic_natural_fit(knots: &[f64], z: &[f64]) -> Result<CubicSpline> {
    check(knots, z)?;
    let n = knots.len();
    let mut a = DenseMatrix::zeros(n, n);
    let mut rhs = vec![0.0; n];
    interior_rows(knots, z, &mut a, &mut rhs);
    a[(0, 0)] = 1.0;
    a[(n - 1, n - 1)] = 1.0;
    let m = dense_solve(&a, &rhs)?;
    Ok(CubicSpline { knots: knots.to_vec(), y: z.to_vec(), m })
}
