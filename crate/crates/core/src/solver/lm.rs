//! Damped Gauss-Newton (Levenberg-Marquardt) on the periodic mesh system,
//! plus tangent space dimension at a solution.

use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use super::linalg::{nullity_from_singular_values, solve_spd};
use super::system::PeriodicSystem;

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub max_iterations: usize,
    /// Convergence test: residual infinity norm at or below this.
    pub residual_tol: f64,
    /// Initial damping, relative to the largest normal-matrix diagonal.
    pub initial_damping: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { max_iterations: 300, residual_tol: 1e-11, initial_damping: 1e-3 }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub converged: bool,
    pub log_values: Vec<f64>,
    /// Infinity norm of the mesh residual F at the final point.
    pub residual_inf: f64,
    pub iterations: usize,
    /// Singular values of the mesh Jacobian at the final point,
    /// nonincreasing.
    pub jacobian_singular_values: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolveError {
    /// Tangent analysis was asked for at a point that does not solve the
    /// mesh equations.
    NotAtSolution { residual: f64 },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NotAtSolution { residual } => {
                write!(f, "point is not a mesh solution (residual {residual:.3e})")
            }
        }
    }
}

fn outcome(sys: &PeriodicSystem, z: Vec<f64>, tol: f64, iterations: usize) -> SolveOutcome {
    let inf = sys.residual_inf_norm(&z);
    let sv = sys.jacobian(&z).singular_values();
    SolveOutcome {
        converged: inf <= tol,
        log_values: z,
        residual_inf: inf,
        iterations,
        jacobian_singular_values: sv,
    }
}

/// Find a zero of the mesh system from the given start in log
/// coordinates.
///
/// The iteration is damped Gauss-Newton on the row-logarithm residual G
/// (same zero set, tame landscape) with Nielsen's damping schedule:
/// shrink on good gain ratios, grow on rejected steps. Success is always
/// measured on the plain mesh residual F.
pub fn solve(sys: &PeriodicSystem, start: &[f64], opts: &SolveOptions) -> SolveOutcome {
    let dim = sys.dim();
    assert_eq!(start.len(), dim, "start has wrong dimension");
    let mut z = start.to_vec();
    let mut g_res = sys.log_residual(&z);
    let mut cost = 0.5 * g_res.iter().map(|x| x * x).sum::<f64>();
    let mut jac = sys.log_jacobian(&z);
    let mut mu = {
        let g = jac.gram();
        let mut d = 0.0f64;
        for i in 0..dim {
            d = d.max(g.at(i, i));
        }
        opts.initial_damping * d.max(1e-12)
    };
    let mut nu = 2.0f64;
    let mut iterations = 0;
    for _ in 0..opts.max_iterations {
        if sys.residual_inf_norm(&z) <= opts.residual_tol {
            return outcome(sys, z, opts.residual_tol, iterations);
        }
        iterations += 1;
        let grad = jac.tr_mul_vec(&g_res);
        let mut normal = jac.gram();
        for i in 0..dim {
            *normal.at_mut(i, i) += mu;
        }
        let step = match solve_spd(&normal, &grad.iter().map(|g| -g).collect::<Vec<_>>()) {
            Some(s) => s,
            None => {
                mu *= nu;
                nu *= 2.0;
                if mu > 1e60 {
                    break;
                }
                continue;
            }
        };
        let z_new: Vec<f64> = z.iter().zip(&step).map(|(a, d)| a + d).collect();
        let g_new = sys.log_residual(&z_new);
        let cost_new = 0.5 * g_new.iter().map(|x| x * x).sum::<f64>();
        let predicted = 0.5
            * step
                .iter()
                .zip(&grad)
                .map(|(d, g)| d * (mu * d - g))
                .sum::<f64>();
        let rho = if predicted > 0.0 { (cost - cost_new) / predicted } else { -1.0 };
        if rho > 0.0 && cost_new.is_finite() {
            z = z_new;
            g_res = g_new;
            cost = cost_new;
            jac = sys.log_jacobian(&z);
            let t = 2.0 * rho - 1.0;
            let shrink: f64 = 1.0 - t * t * t;
            mu *= shrink.max(1.0 / 3.0);
            nu = 2.0;
        } else {
            mu *= nu;
            nu *= 2.0;
            if mu > 1e60 {
                break;
            }
        }
    }
    outcome(sys, z, opts.residual_tol, iterations)
}

/// Log coordinates drawn so each entry is log-uniform on [0.1, 10].
pub fn random_start<R: Rng + ?Sized>(sys: &PeriodicSystem, rng: &mut R) -> Vec<f64> {
    let lim = libm::log(10.0);
    (0..sys.dim()).map(|_| rng.gen_range(-lim..lim)).collect()
}

/// Deterministic generator for reproducible trial sequences.
pub fn seeded_rng(seed: u64) -> impl Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug)]
pub struct TangentReport {
    /// Nullity of the mesh Jacobian: the local dimension of the solution
    /// set in log coordinates.
    pub dimension: usize,
    /// Set when the singular value split is not clean (no factor 10 gap).
    pub ambiguous: bool,
    pub singular_values: Vec<f64>,
    pub threshold: f64,
}

/// Dimension of the kernel of the mesh Jacobian at a solution, decided by
/// a relative singular value cut at 1e-6 with a factor 10 gap check.
pub fn tangent_dimension(sys: &PeriodicSystem, z: &[f64]) -> Result<TangentReport, SolveError> {
    let res = sys.residual_inf_norm(z);
    if res > 1e-8 {
        return Err(SolveError::NotAtSolution { residual: res });
    }
    let sv = sys.jacobian(z).singular_values();
    let (dimension, ambiguous, threshold) = nullity_from_singular_values(&sv, 1e-6);
    Ok(TangentReport { dimension, ambiguous, singular_values: sv, threshold })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::algebra::scalar::Scalar;
    use crate::quiver::{BipartiteQuiver, DynkinType};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn system(name: &str, period: usize) -> PeriodicSystem {
        PeriodicSystem::new(BipartiteQuiver::new(DynkinType::parse(name).unwrap()), period)
    }

    #[test]
    fn converges_to_the_a2_constant() {
        let sys = system("A2", 1);
        let out = solve(&sys, &[1.0, -1.5], &SolveOptions::default());
        assert!(out.converged, "residual {}", out.residual_inf);
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        for zi in &out.log_values {
            assert!((zi - phi.ln()).abs() < 1e-9);
        }
    }

    #[test]
    fn converges_from_seeded_random_starts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for name in ["A5", "D6", "E8"] {
            let sys = system(name, 1);
            for _ in 0..10 {
                let z0 = random_start(&sys, &mut rng);
                let out = solve(&sys, &z0, &SolveOptions::default());
                assert!(out.converged, "{name}: residual {}", out.residual_inf);
            }
        }
    }

    #[test]
    fn period2_solutions_land_on_the_d4_family() {
        let sys = system("D4", 2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let z0 = random_start(&sys, &mut rng);
            let out = solve(&sys, &z0, &SolveOptions::default());
            assert!(out.converged);
            let f = sys.frieze_from_log(&out.log_values).unwrap();
            let q = f.quiver().clone();
            // Center orbit is {3, 3}; leaf and fork orbits multiply to 4.
            let c = q.vertex("2").unwrap();
            assert!((f.value(c, 0).to_f64() - 3.0).abs() < 1e-9);
            for leaf in ["1", "+", "-"] {
                let v = q.vertex(leaf).unwrap();
                let prod = f.value(v, 0).to_f64() * f.value(v, 1).to_f64();
                assert!((prod - 4.0).abs() < 1e-9, "{leaf}: {prod}");
            }
        }
    }

    #[test]
    fn tangent_dimension_counts_family_parameters() {
        // Constant friezes are rigid at period 1.
        let sys = system("E6", 1);
        let out = solve(&sys, &alloc::vec![0.0; sys.dim()], &SolveOptions::default());
        assert!(out.converged);
        let rep = tangent_dimension(&sys, &out.log_values).unwrap();
        assert_eq!(rep.dimension, 0);
        assert!(!rep.ambiguous, "{:?}", rep.singular_values);

        // The 2-periodic D4 family has two parameters.
        let sys = system("D4", 2);
        let f = families::periodic2_d_even(4, &Scalar::float(1.2), &Scalar::float(0.8)).unwrap();
        let rep = tangent_dimension(&sys, &sys.log_from_frieze(&f)).unwrap();
        assert_eq!(rep.dimension, 2);
        assert!(!rep.ambiguous, "{:?}", rep.singular_values);
    }

    #[test]
    fn tangent_dimension_requires_a_solution() {
        let sys = system("A3", 1);
        let err = tangent_dimension(&sys, &[0.5, 0.5, 0.5]).unwrap_err();
        assert!(matches!(err, SolveError::NotAtSolution { .. }));
    }
}
