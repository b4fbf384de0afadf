use std::path::PathBuf;

use clap::{Args, ValueEnum};
use lspline::{BoundaryCondition, Tension};

use crate::error::CliError;

pub const DEFAULT_SAMPLES: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryKind {
    Clamped,
    Natural,
}

#[derive(Debug, Clone, Args)]
pub struct InterpArgs {
    /// Knot/value CSV (`t,z`, optional header, `#` comments)
    #[arg(long)]
    pub input: PathBuf,
    /// Destination for the sampled spline (`t,value,d1,d2`)
    #[arg(long)]
    pub output: PathBuf,
    /// Optional SVG plot of the sampled spline and the knots
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Tension ξ ≥ 0; 0 gives the cubic spline
    #[arg(long, allow_negative_numbers = true)]
    pub xi: f64,
    #[arg(long, value_enum)]
    pub boundary: BoundaryKind,
    /// First derivative at the first knot (clamped only)
    #[arg(long, allow_negative_numbers = true)]
    pub left_deriv: Option<f64>,
    /// First derivative at the last knot (clamped only)
    #[arg(long, allow_negative_numbers = true)]
    pub right_deriv: Option<f64>,
    /// Number of evenly spaced output samples
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
}

/// Validated settings for one `interp` run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub xi: Tension,
    pub boundary: BoundaryCondition,
    pub input_path: PathBuf,
    pub output_path: PathBuf,
    pub svg_path: Option<PathBuf>,
    pub samples: usize,
}

impl TryFrom<InterpArgs> for RunConfig {
    type Error = CliError;

    fn try_from(a: InterpArgs) -> Result<Self, CliError> {
        let xi = Tension::new(a.xi).map_err(|e| CliError::Config(format!("--xi {}: {e}", a.xi)))?;
        let boundary = match (a.boundary, a.left_deriv, a.right_deriv) {
            (BoundaryKind::Clamped, Some(left), Some(right)) => {
                if !left.is_finite() || !right.is_finite() {
                    return Err(CliError::Config("--left-deriv and --right-deriv must be finite".into()));
                }
                BoundaryCondition::Clamped { left, right }
            }
            (BoundaryKind::Clamped, l, r) => {
                let missing: Vec<&str> = [(l, "--left-deriv"), (r, "--right-deriv")]
                    .into_iter()
                    .filter_map(|(v, name)| v.is_none().then_some(name))
                    .collect();
                return Err(CliError::Config(format!(
                    "--boundary clamped requires {}",
                    missing.join(" and ")
                )));
            }
            (BoundaryKind::Natural, None, None) => BoundaryCondition::Natural,
            (BoundaryKind::Natural, l, r) => {
                let given: Vec<&str> = [(l, "--left-deriv"), (r, "--right-deriv")]
                    .into_iter()
                    .filter_map(|(v, name)| v.is_some().then_some(name))
                    .collect();
                return Err(CliError::Config(format!(
                    "{} conflicts with --boundary natural",
                    given.join(" and ")
                )));
            }
        };
        if a.samples < 2 {
            return Err(CliError::Config(format!("--samples must be at least 2, got {}", a.samples)));
        }
        Ok(RunConfig {
            xi,
            boundary,
            input_path: a.input,
            output_path: a.output,
            svg_path: a.svg,
            samples: a.samples,
        })
    }
}
