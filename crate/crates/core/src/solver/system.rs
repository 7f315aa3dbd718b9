//! The p-periodic mesh equations as a square nonlinear system in log
//! coordinates.
//!
//! Unknowns z[v, n] = ln a(v, n) for each vertex v and occurrence n mod p;
//! one residual per unknown,
//!
//!   F[v, n] = exp(z[v, n] + z[v, n+1]) - 1 - exp(sum_u z[u, n + eps(v)])
//!
//! with u running over the neighbours of v and indices mod p. Zeros of F
//! with any real z are exactly the positive p-periodic friezes; working in
//! logs keeps iterates positive for free.
//!
//! Least-squares iteration uses the row-logarithm form instead,
//!
//!   G[v, n] = z[v, n] + z[v, n+1] - ln(1 + exp(sum_u z[u, n + eps(v)])),
//!
//! which has the same zero set (both sides of the mesh relation are
//! positive, so taking logs loses nothing) but bounded derivatives and a
//! cost that blows up toward the `values -> 0` boundary. The plain F
//! landscape flattens out numerically near that boundary and strands
//! descent methods there.

use alloc::vec;
use alloc::vec::Vec;

use super::linalg::Mat;
use crate::algebra::scalar::Scalar;
use crate::frieze::{FriezeError, PeriodicFrieze};
use crate::quiver::BipartiteQuiver;

fn softplus(x: f64) -> f64 {
    if x > 30.0 {
        x + libm::exp(-x)
    } else if x < -30.0 {
        libm::exp(x)
    } else {
        libm::log1p(libm::exp(x))
    }
}

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + libm::exp(-x))
    } else {
        let e = libm::exp(x);
        e / (1.0 + e)
    }
}

#[derive(Clone, Debug)]
pub struct PeriodicSystem {
    quiver: BipartiteQuiver,
    period: usize,
}

impl PeriodicSystem {
    pub fn new(quiver: BipartiteQuiver, period: usize) -> Self {
        assert!(period >= 1, "period must be at least 1");
        PeriodicSystem { quiver, period }
    }

    pub fn quiver(&self) -> &BipartiteQuiver {
        &self.quiver
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Number of unknowns (and of residuals).
    pub fn dim(&self) -> usize {
        self.quiver.rank() * self.period
    }

    #[inline]
    fn idx(&self, v: usize, n: usize) -> usize {
        (n % self.period) * self.quiver.rank() + v
    }

    pub fn residual(&self, z: &[f64]) -> Vec<f64> {
        debug_assert_eq!(z.len(), self.dim());
        let p = self.period;
        let mut f = vec![0.0; self.dim()];
        for n in 0..p {
            for v in 0..self.quiver.rank() {
                let lhs = libm::exp(z[self.idx(v, n)] + z[self.idx(v, n + 1)]);
                let mut se = 0.0;
                for &u in self.quiver.neighbors(v) {
                    se += z[self.idx(u, n + self.quiver.parity(v) as usize)];
                }
                f[self.idx(v, n)] = lhs - 1.0 - libm::exp(se);
            }
        }
        f
    }

    pub fn residual_inf_norm(&self, z: &[f64]) -> f64 {
        self.residual(z).iter().fold(0.0, |m, x| m.max(libm::fabs(*x)))
    }

    /// Residuals of the row-logarithm form G. Same zeros as `residual`.
    pub(crate) fn log_residual(&self, z: &[f64]) -> Vec<f64> {
        debug_assert_eq!(z.len(), self.dim());
        let p = self.period;
        let mut g = vec![0.0; self.dim()];
        for n in 0..p {
            for v in 0..self.quiver.rank() {
                let mut se = 0.0;
                for &u in self.quiver.neighbors(v) {
                    se += z[self.idx(u, n + self.quiver.parity(v) as usize)];
                }
                g[self.idx(v, n)] =
                    z[self.idx(v, n)] + z[self.idx(v, n + 1)] - softplus(se);
            }
        }
        g
    }

    /// Analytic Jacobian dG/dz of the row-logarithm form. Entries are in
    /// [-1, 2]: +1 per left-hand occurrence (doubling at period 1) and
    /// -sigmoid(sum) per neighbour occurrence.
    pub(crate) fn log_jacobian(&self, z: &[f64]) -> Mat {
        debug_assert_eq!(z.len(), self.dim());
        let p = self.period;
        let mut jac = Mat::zeros(self.dim(), self.dim());
        for n in 0..p {
            for v in 0..self.quiver.rank() {
                let row = self.idx(v, n);
                *jac.at_mut(row, self.idx(v, n)) += 1.0;
                *jac.at_mut(row, self.idx(v, n + 1)) += 1.0;
                let mut se = 0.0;
                for &u in self.quiver.neighbors(v) {
                    se += z[self.idx(u, n + self.quiver.parity(v) as usize)];
                }
                let sig = sigmoid(se);
                for &u in self.quiver.neighbors(v) {
                    *jac.at_mut(row, self.idx(u, n + self.quiver.parity(v) as usize)) -= sig;
                }
            }
        }
        jac
    }

    /// Analytic Jacobian dF/dz. Entries accumulate: at period 1 the two
    /// occurrences in the product term are the same unknown and its
    /// derivative doubles.
    pub(crate) fn jacobian(&self, z: &[f64]) -> Mat {
        debug_assert_eq!(z.len(), self.dim());
        let p = self.period;
        let mut jac = Mat::zeros(self.dim(), self.dim());
        for n in 0..p {
            for v in 0..self.quiver.rank() {
                let row = self.idx(v, n);
                let lhs = libm::exp(z[self.idx(v, n)] + z[self.idx(v, n + 1)]);
                *jac.at_mut(row, self.idx(v, n)) += lhs;
                *jac.at_mut(row, self.idx(v, n + 1)) += lhs;
                let mut se = 0.0;
                for &u in self.quiver.neighbors(v) {
                    se += z[self.idx(u, n + self.quiver.parity(v) as usize)];
                }
                let prod = libm::exp(se);
                for &u in self.quiver.neighbors(v) {
                    *jac.at_mut(row, self.idx(u, n + self.quiver.parity(v) as usize)) -= prod;
                }
            }
        }
        jac
    }

    /// Central-difference Jacobian, for validating the analytic one.
    #[cfg(test)]
    pub(crate) fn numeric_jacobian(&self, z: &[f64], h: f64) -> Mat {
        let dim = self.dim();
        let mut jac = Mat::zeros(dim, dim);
        let mut zp = z.to_vec();
        for j in 0..dim {
            zp[j] = z[j] + h;
            let fp = self.residual(&zp);
            zp[j] = z[j] - h;
            let fm = self.residual(&zp);
            zp[j] = z[j];
            for i in 0..dim {
                *jac.at_mut(i, j) = (fp[i] - fm[i]) / (2.0 * h);
            }
        }
        jac
    }

    /// Assemble a float frieze from log coordinates.
    pub fn frieze_from_log(&self, z: &[f64]) -> Result<PeriodicFrieze, FriezeError> {
        debug_assert_eq!(z.len(), self.dim());
        let values = (0..self.quiver.rank())
            .map(|v| {
                (0..self.period)
                    .map(|n| Scalar::float(libm::exp(z[self.idx(v, n)])))
                    .collect()
            })
            .collect();
        PeriodicFrieze::new(self.quiver.clone(), values)
    }

    /// Log coordinates of a positive frieze with matching period.
    pub fn log_from_frieze(&self, frieze: &PeriodicFrieze) -> Vec<f64> {
        assert_eq!(frieze.period(), self.period, "period mismatch");
        assert_eq!(frieze.quiver().rank(), self.quiver.rank(), "rank mismatch");
        let mut z = vec![0.0; self.dim()];
        for v in 0..self.quiver.rank() {
            for n in 0..self.period {
                z[self.idx(v, n)] = libm::log(frieze.value(v, n as i64).to_f64());
            }
        }
        z
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::quiver::DynkinType;

    fn system(name: &str, period: usize) -> PeriodicSystem {
        let q = BipartiteQuiver::new(DynkinType::parse(name).unwrap());
        PeriodicSystem::new(q, period)
    }

    #[test]
    fn residual_vanishes_on_family_points() {
        let sys = system("D4", 2);
        let f = families::periodic2_d_even(
            4,
            &Scalar::float(1.3),
            &Scalar::float(0.7),
        )
        .unwrap();
        let z = sys.log_from_frieze(&f);
        assert!(sys.residual_inf_norm(&z) < 1e-12);

        let sys = system("E8", 4);
        let f = families::periodic4_e8(&Scalar::float(1.9), false).unwrap();
        let z = sys.log_from_frieze(&f);
        assert!(sys.residual_inf_norm(&z) < 1e-11);
    }

    #[test]
    fn residual_nonzero_off_friezes() {
        let sys = system("A2", 1);
        // a = b = 1 gives 1 - 1 - 1 = -1 in both rows.
        let f = sys.residual(&[0.0, 0.0]);
        assert!((f[0] + 1.0).abs() < 1e-15);
        assert!((f[1] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn analytic_jacobian_matches_numeric() {
        use crate::solver::seeded_rng;
        use rand::Rng;

        let names = [
            "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7", "D8", "E6",
            "E7", "E8",
        ];
        let mut rng = seeded_rng(0x4a61636f);
        for name in names {
            for p in [1usize, 2, 4] {
                let sys = system(name, p);
                let dim = sys.dim();
                // 20 random points per type, spread over the periods.
                for _ in 0..7 {
                    let z: Vec<f64> = (0..dim).map(|_| rng.gen_range(-2.0..2.0)).collect();
                    let ja = sys.jacobian(&z);
                    let jn = sys.numeric_jacobian(&z, 1e-6);
                    for i in 0..dim {
                        for j in 0..dim {
                            let scale = ja.at(i, j).abs().max(jn.at(i, j).abs()).max(1.0);
                            let d = (ja.at(i, j) - jn.at(i, j)).abs();
                            assert!(
                                d <= 1e-6 * scale,
                                "{name} p={p} ({i},{j}): {} vs {}",
                                ja.at(i, j),
                                jn.at(i, j)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn log_form_shares_zeros_and_derivatives() {
        let sys = system("D5", 2);
        let f = families::periodic2_d_odd(5, &Scalar::float(2.1)).unwrap();
        let z = sys.log_from_frieze(&f);
        for g in sys.log_residual(&z) {
            assert!(g.abs() < 1e-13, "{g}");
        }
        // Off a solution both forms are nonzero, and the analytic log
        // Jacobian matches finite differences of the log residual.
        let z: Vec<f64> = (0..sys.dim()).map(|i| 0.4 * libm::cos(2.3 * i as f64)).collect();
        assert!(sys.log_residual(&z).iter().any(|g| g.abs() > 1e-3));
        let ja = sys.log_jacobian(&z);
        let h = 1e-6;
        let mut zp = z.clone();
        for j in 0..sys.dim() {
            zp[j] = z[j] + h;
            let fp = sys.log_residual(&zp);
            zp[j] = z[j] - h;
            let fm = sys.log_residual(&zp);
            zp[j] = z[j];
            for i in 0..sys.dim() {
                let fd = (fp[i] - fm[i]) / (2.0 * h);
                assert!((ja.at(i, j) - fd).abs() < 1e-8, "({i},{j})");
            }
        }
    }

    #[test]
    fn log_form_blows_up_toward_the_boundary() {
        let sys = system("A3", 1);
        // All values tiny: the plain residual flattens near -1 but the
        // log form diverges, so descent cannot stall there.
        let z = [-40.0, -40.0, -40.0];
        assert!(sys.residual_inf_norm(&z) <= 1.0 + 1e-12);
        assert!(sys.log_residual(&z).iter().all(|g| *g < -70.0));
    }

    #[test]
    fn frieze_log_round_trip() {
        let sys = system("E7", 2);
        let f = families::periodic2_e7(&Scalar::float(1.3)).unwrap();
        let z = sys.log_from_frieze(&f);
        let g = sys.frieze_from_log(&z).unwrap();
        assert!(f.entrywise_max_dev(&g).unwrap() < 1e-14);
    }
}
