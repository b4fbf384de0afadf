use crate::error::{Error, Result};

/// Row-major square or rectangular matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(DenseMatrix { rows: r, cols: c, data })
    }

    /// Dense copy of a tridiagonal system's matrix.
    pub fn from_tridiagonal(sys: &crate::system::TridiagonalSystem) -> Self {
        let m = sys.len();
        let mut a = Self::zeros(m, m);
        for i in 0..m {
            a[(i, i)] = sys.diag()[i];
            if i + 1 < m {
                a[(i, i + 1)] = sys.sup()[i];
                a[(i + 1, i)] = sys.sub()[i];
            }
        }
        a
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols);
        self.data.chunks(self.cols.max(1)).take(self.rows).map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Gaussian elimination with partial pivoting.
pub fn dense_solve(a: &DenseMatrix, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = a.rows;
    if a.cols != n {
        return Err(Error::DimensionMismatch { expected: n, found: a.cols });
    }
    if rhs.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: rhs.len() });
    }
    let mut m = a.clone();
    let mut b = rhs.to_vec();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| m[(i, k)].abs().total_cmp(&m[(j, k)].abs()))
            .unwrap();
        let pivot = m[(p, k)];
        if !(pivot.abs() >= 1e-300) {
            return Err(Error::SingularSystem { row: k, pivot });
        }
        if p != k {
            for j in 0..n {
                m.data.swap(p * n + j, k * n + j);
            }
            b.swap(p, k);
        }
        for i in k + 1..n {
            let f = m[(i, k)] / pivot;
            if f == 0.0 {
                continue;
            }
            for j in k..n {
                let v = m[(k, j)];
                m[(i, j)] -= f * v;
            }
            b[i] -= f * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| m[(i, j)] * x[j]).sum();
        x[i] = (b[i] - s) / m[(i, i)];
    }
    Ok(x)
}
