#![allow(dead_code)]

use lspline::{KnotGrid, Tension};
use rand::Rng;
use rand_distr::StandardNormal;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn xi(v: f64) -> Tension {
    Tension::new(v).unwrap()
}

pub fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / b.abs()
    }
}

/// Log-uniform sample from `[lo, hi]`.
pub fn log_uniform(r: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    (r.gen_range(lo.ln()..=hi.ln())).exp()
}

/// Grid starting at `t0` with widths `x_j/ξ`, `x_j` log-uniform in `[lo, hi]`.
pub fn random_grid(r: &mut impl Rng, n: usize, tension: f64, lo: f64, hi: f64) -> KnotGrid {
    let mut t = r.gen_range(-1.0..1.0);
    let mut knots = Vec::with_capacity(n);
    knots.push(t);
    for _ in 1..n {
        t += log_uniform(r, lo, hi) / tension;
        knots.push(t);
    }
    KnotGrid::new(knots).unwrap()
}

/// Sorted random knots on `[a, b]` including both ends, with gaps no
/// smaller than `min_gap·(b − a)/n`.
pub fn random_knots_on(r: &mut impl Rng, a: f64, b: f64, n: usize, min_gap: f64) -> Vec<f64> {
    let w: Vec<f64> = (0..n - 1).map(|_| r.gen_range(min_gap..1.0)).collect();
    let total: f64 = w.iter().sum();
    let mut knots = vec![a];
    let mut acc = 0.0;
    for wi in &w[..n - 2] {
        acc += wi;
        knots.push(a + (b - a) * acc / total);
    }
    knots.push(b);
    knots
}

pub fn normals(r: &mut impl Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| r.sample(StandardNormal)).collect()
}
