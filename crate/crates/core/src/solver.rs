//! Thomas algorithm for strictly diagonally dominant tridiagonal systems.

use crate::error::{Error, Result};
use crate::system::TridiagonalSystem;

/// Pivots below this magnitude are treated as singular.
pub const PIVOT_FLOOR: f64 = 1e-300;

/// Solves `A·x = rhs` by forward elimination and back substitution without
/// pivoting. Strict row diagonal dominance keeps every pivot bounded away
/// from zero. Debug builds reject systems with a row that is not even weakly
/// dominant; a vanishing pivot is reported as [`Error::SingularSystem`].
///
/// The system is not modified, so it can be reused with other right-hand
/// sides via [`TridiagonalSystem::with_rhs`].
pub fn solve_tridiagonal(sys: &TridiagonalSystem) -> Result<Vec<f64>> {
    check_dominance(sys)?;
    let mut c = sys.sup().to_vec();
    let mut x = sys.rhs().to_vec();
    thomas_in_place(sys.sub(), sys.diag(), &mut c, &mut x)?;
    Ok(x)
}

/// Like [`solve_tridiagonal`] but consumes the system and reuses its storage,
/// so no working arrays are allocated.
pub fn solve_tridiagonal_owned(sys: TridiagonalSystem) -> Result<Vec<f64>> {
    check_dominance(&sys)?;
    let (sub, diag, mut c, mut x) = sys.into_parts();
    thomas_in_place(&sub, &diag, &mut c, &mut x)?;
    Ok(x)
}

fn check_dominance(sys: &TridiagonalSystem) -> Result<()> {
    if cfg!(debug_assertions) {
        if let Some(row) = first_non_weakly_dominant_row(sys) {
            return Err(Error::NotDiagonallyDominant { row });
        }
    }
    Ok(())
}

/// Thomas elimination fed one row at a time, for symmetric systems whose
/// rows are generated on the fly: the diagonal is never stored, only the
/// eliminated couplings and the running solution.
pub(crate) struct ForwardSweep {
    c: Vec<f64>,
    x: Vec<f64>,
    start: usize,
    coupling: f64,
}

impl ForwardSweep {
    /// `leading` zeros are placed in front of the solution.
    pub(crate) fn new(rows: usize, leading: usize) -> Self {
        let mut x = Vec::with_capacity(rows + 2 * leading);
        x.resize(leading, 0.0);
        ForwardSweep {
            c: Vec::with_capacity(rows),
            x,
            start: leading,
            coupling: 0.0,
        }
    }

    /// Eliminates the next row given its diagonal, its coupling to the
    /// following row and its right-hand side.
    #[inline]
    pub(crate) fn push(&mut self, diag: f64, next: f64, rhs: f64) -> Result<()> {
        let row = self.x.len() - self.start;
        let prev = self.coupling;
        if cfg!(debug_assertions) && !(diag.abs() >= prev.abs() + next.abs()) {
            return Err(Error::NotDiagonallyDominant { row });
        }
        let (pivot, x) = if row == 0 {
            (diag, rhs)
        } else {
            let c = self.c[row - 1];
            (diag - prev * c, rhs - prev * self.x[self.x.len() - 1])
        };
        if !(pivot.abs() >= PIVOT_FLOOR) {
            return Err(Error::SingularSystem { row, pivot });
        }
        self.x.push(x / pivot);
        self.c.push(next / pivot);
        self.coupling = next;
        Ok(())
    }

    /// Back substitution; appends `trailing` zeros.
    pub(crate) fn finish(mut self, trailing: usize) -> Vec<f64> {
        let x = &mut self.x[self.start..];
        for i in (0..x.len().saturating_sub(1)).rev() {
            x[i] -= self.c[i] * x[i + 1];
        }
        self.x.resize(self.x.len() + trailing, 0.0);
        self.x
    }
}

/// On entry `c` holds the super-diagonal and `x` the right-hand side; on
/// exit `c` holds the eliminated super-diagonal and `x` the solution.
fn thomas_in_place(sub: &[f64], diag: &[f64], c: &mut [f64], x: &mut [f64]) -> Result<()> {
    let m = diag.len();
    if m == 0 {
        return Ok(());
    }
    let mut pivot = diag[0];
    if !(pivot.abs() >= PIVOT_FLOOR) {
        return Err(Error::SingularSystem { row: 0, pivot });
    }
    x[0] /= pivot;
    for i in 1..m {
        c[i - 1] /= pivot;
        pivot = diag[i] - sub[i - 1] * c[i - 1];
        if !(pivot.abs() >= PIVOT_FLOOR) {
            return Err(Error::SingularSystem { row: i, pivot });
        }
        x[i] = (x[i] - sub[i - 1] * x[i - 1]) / pivot;
    }
    for i in (0..m - 1).rev() {
        x[i] -= c[i] * x[i + 1];
    }
    Ok(())
}

fn first_non_weakly_dominant_row(sys: &TridiagonalSystem) -> Option<usize> {
    (0..sys.len()).find(|&i| {
        let (l, d, u) = sys.row(i);
        !(d.abs() >= l.abs() + u.abs())
    })
}
