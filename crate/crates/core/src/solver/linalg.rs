//! Dense linear algebra for the solver: just enough for damped
//! Gauss-Newton steps (Cholesky) and rank decisions (singular values).

use alloc::vec;
use alloc::vec::Vec;

/// Row-major dense matrix.
#[derive(Clone, Debug)]
pub(crate) struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0.0; rows * cols] }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }

    /// A^T A, the Gauss-Newton normal matrix.
    pub fn gram(&self) -> Mat {
        let n = self.cols;
        let mut g = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut s = 0.0;
                for k in 0..self.rows {
                    s += self.at(k, i) * self.at(k, j);
                }
                *g.at_mut(i, j) = s;
                *g.at_mut(j, i) = s;
            }
        }
        g
    }

    /// A^T v.
    pub fn tr_mul_vec(&self, v: &[f64]) -> Vec<f64> {
        debug_assert_eq!(v.len(), self.rows);
        let mut out = vec![0.0; self.cols];
        for k in 0..self.rows {
            let vk = v[k];
            if vk == 0.0 {
                continue;
            }
            for j in 0..self.cols {
                out[j] += self.at(k, j) * vk;
            }
        }
        out
    }

    #[cfg(test)]
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        debug_assert_eq!(v.len(), self.cols);
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            let mut s = 0.0;
            for j in 0..self.cols {
                s += self.at(i, j) * v[j];
            }
            out[i] = s;
        }
        out
    }

    /// Singular values in descending order, via one-sided Jacobi on the
    /// columns. Adequate for the small (< 300 x 32) systems we solve.
    pub fn singular_values(&self) -> Vec<f64> {
        let m = self.rows;
        let n = self.cols;
        // Work on a column-major copy so rotations touch contiguous data.
        let mut a: Vec<Vec<f64>> = (0..n)
            .map(|j| (0..m).map(|i| self.at(i, j)).collect())
            .collect();
        let eps = 1e-15;
        for _sweep in 0..60 {
            let mut off = 0.0f64;
            for p in 0..n {
                for q in (p + 1)..n {
                    let mut app = 0.0;
                    let mut aqq = 0.0;
                    let mut apq = 0.0;
                    for i in 0..m {
                        app += a[p][i] * a[p][i];
                        aqq += a[q][i] * a[q][i];
                        apq += a[p][i] * a[q][i];
                    }
                    off = off.max(libm::fabs(apq) / libm::sqrt(app * aqq + f64::MIN_POSITIVE));
                    if libm::fabs(apq) <= eps * libm::sqrt(app * aqq) {
                        continue;
                    }
                    let tau = (aqq - app) / (2.0 * apq);
                    let t = if tau >= 0.0 {
                        1.0 / (tau + libm::sqrt(1.0 + tau * tau))
                    } else {
                        -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
                    };
                    let c = 1.0 / libm::sqrt(1.0 + t * t);
                    let s = c * t;
                    for i in 0..m {
                        let ap = a[p][i];
                        let aq = a[q][i];
                        a[p][i] = c * ap - s * aq;
                        a[q][i] = s * ap + c * aq;
                    }
                }
            }
            if off < eps {
                break;
            }
        }
        let mut sv: Vec<f64> = a
            .iter()
            .map(|col| libm::sqrt(col.iter().map(|x| x * x).sum::<f64>()))
            .collect();
        sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
        sv
    }
}

impl Mat {
    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if aik == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    *out.at_mut(i, j) += aik * other.at(k, j);
                }
            }
        }
        out
    }

    pub fn plus_identity(&self) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            *out.at_mut(i, i) += 1.0;
        }
        out
    }
}

/// Count singular values below `rel` times the largest one. Returns
/// (nullity, ambiguous, threshold); a value within a factor 10 of the
/// threshold on either side makes the count ambiguous.
pub(crate) fn nullity_from_singular_values(sv: &[f64], rel: f64) -> (usize, bool, f64) {
    debug_assert!(sv.windows(2).all(|w| w[0] >= w[1]));
    let smax = sv.first().copied().unwrap_or(0.0);
    if smax <= 0.0 {
        return (sv.len(), false, 0.0);
    }
    let threshold = rel * smax;
    let nullity = sv.iter().filter(|&&s| s < threshold).count();
    let ambiguous = sv
        .iter()
        .any(|&s| s >= threshold / 10.0 && s < threshold * 10.0);
    (nullity, ambiguous, threshold)
}

/// Solve (A)x = b for symmetric positive definite A, in place Cholesky.
/// Returns None if a pivot degenerates (matrix not positive definite).
pub(crate) fn solve_spd(a: &Mat, b: &[f64]) -> Option<Vec<f64>> {
    let n = a.rows;
    debug_assert_eq!(a.cols, n);
    debug_assert_eq!(b.len(), n);
    let mut l = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = a.at(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if s <= 0.0 || !s.is_finite() {
                    return None;
                }
                l[i * n + i] = libm::sqrt(s);
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    // Forward then back substitution.
    let mut y = vec![0.0f64; n];
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[i * n + k] * y[k];
        }
        y[i] = s / l[i * n + i];
    }
    let mut x = vec![0.0f64; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in (i + 1)..n {
            s -= l[k * n + i] * x[k];
        }
        x[i] = s / l[i * n + i];
    }
    Some(x)
}
