use std::path::Path;

use lspline::{BoundaryCondition, KnotGrid, LSpline, SampleSpec, SampleTable, Tension};

use crate::config::{RunConfig, DEFAULT_SAMPLES};
use crate::error::CliError;
use crate::io::{format_pairs, format_table, read_knots, write_text};
use crate::svg::{self, Polyline};

/// Fits the knot file and writes the sampled spline (and optionally a plot).
pub fn cmd_interp(cfg: &RunConfig) -> Result<SampleTable, CliError> {
    let data = read_knots(&cfg.input_path)?;
    let markers: Vec<(f64, f64)> = data.t.iter().copied().zip(data.z.iter().copied()).collect();
    let grid = KnotGrid::new(data.t)?;
    let spline = LSpline::fit(grid, data.z, cfg.xi, cfg.boundary)?;
    let table = spline.sample(&SampleSpec::Count(cfg.samples))?;
    write_text(&cfg.output_path, &format_table(&table))?;
    if let Some(svg_path) = &cfg.svg_path {
        let line = Polyline {
            label: "L-spline",
            color: "#1f77b4",
            points: table.t.iter().copied().zip(table.value.iter().copied()).collect(),
        };
        write_text(svg_path, &svg::render(&[line], &markers))?;
    }
    Ok(table)
}

pub const DEMO_XI: f64 = 5.0;
pub const DEMO_KNOTS: [f64; 7] = [0.0, 0.1667, 0.3333, 0.5, 0.6667, 0.8333, 1.0];
pub const DEMO_LEFT_DERIV: f64 = 25.0;
pub const DEMO_RIGHT_DERIV: f64 = 25.0;

pub fn demo_function(t: f64) -> f64 {
    (25.0 * t).sin()
}

/// Clamped fit of `sin(25t)` with `ξ = 5` on seven knots of `[0, 1]`.
pub fn fit_demo() -> Result<LSpline, CliError> {
    let grid = KnotGrid::new(DEMO_KNOTS.to_vec())?;
    let z = DEMO_KNOTS.iter().map(|&t| demo_function(t)).collect();
    let bc = BoundaryCondition::Clamped { left: DEMO_LEFT_DERIV, right: DEMO_RIGHT_DERIV };
    Ok(LSpline::fit(grid, z, Tension::new(DEMO_XI)?, bc)?)
}

/// Piecewise-linear interpolant of `(knots, values)` at `t`.
pub fn linear_interp(knots: &[f64], values: &[f64], t: f64) -> f64 {
    let j = knots.partition_point(|&k| k <= t).clamp(1, knots.len() - 1) - 1;
    let w = (t - knots[j]) / (knots[j + 1] - knots[j]);
    values[j] + w * (values[j + 1] - values[j])
}

pub const DEMO_SPLINE_FILE: &str = "lspline.csv";
pub const DEMO_LINEAR_FILE: &str = "linear.csv";
pub const DEMO_SVG_FILE: &str = "figure.svg";

/// Writes the demo spline samples, the linear comparison and an SVG
/// overlay into `out_dir`.
pub fn cmd_demo(out_dir: &Path) -> Result<LSpline, CliError> {
    std::fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;
    let spline = fit_demo()?;
    let table = spline.sample(&SampleSpec::Count(DEFAULT_SAMPLES))?;
    let linear: Vec<f64> = table.t.iter().map(|&t| linear_interp(spline.knots(), spline.values(), t)).collect();

    write_text(&out_dir.join(DEMO_SPLINE_FILE), &format_table(&table))?;
    write_text(&out_dir.join(DEMO_LINEAR_FILE), &format_pairs(&table.t, &linear))?;

    let lines = [
        Polyline {
            label: "clamped L-spline, xi = 5",
            color: "#1f77b4",
            points: table.t.iter().copied().zip(table.value.iter().copied()).collect(),
        },
        Polyline {
            label: "linear spline",
            color: "#d62728",
            points: table.t.iter().copied().zip(linear.iter().copied()).collect(),
        },
    ];
    let markers: Vec<(f64, f64)> = spline.knots().iter().copied().zip(spline.values().iter().copied()).collect();
    write_text(&out_dir.join(DEMO_SVG_FILE), &svg::render(&lines, &markers))?;
    Ok(spline)
}
