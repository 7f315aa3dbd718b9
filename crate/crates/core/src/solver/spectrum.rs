//! The translation map tau on positive slices and its linearization at
//! the constant fixed point.
//!
//! A slice assigns one positive value to every vertex; tau advances every
//! occurrence index by one via two half-steps of the mesh recursion
//! (parity 0 vertices first, then parity 1 against the updated values).
//! Periodic friezes are periodic tau orbits, so eigenvalues of d(tau) at
//! the constant point predict which periods admit deformations: each
//! eigenvalue -1 gives a 2-periodic direction, each primitive 4th root
//! pair gives a 4-periodic one.

use alloc::vec::Vec;
use core::fmt;

use super::linalg::{nullity_from_singular_values, Mat};
use super::lm::{solve, SolveError, SolveOptions};
use super::system::PeriodicSystem;
use crate::quiver::BipartiteQuiver;

/// One full tau step on a positive slice.
pub fn tau_map(quiver: &BipartiteQuiver, slice: &[f64]) -> Vec<f64> {
    assert_eq!(slice.len(), quiver.rank());
    let mut out = slice.to_vec();
    for pass in 0..2 {
        for v in 0..quiver.rank() {
            if quiver.parity(v) != pass {
                continue;
            }
            let mut prod = 1.0;
            for &u in quiver.neighbors(v) {
                // Pass 0 reads untouched neighbours (all parity 1); pass 1
                // reads the values pass 0 just wrote.
                prod *= out[u];
            }
            out[v] = (1.0 + prod) / out[v];
        }
    }
    out
}

/// Log coordinates of the constant slice, found by solving the period 1
/// system from the all-ones start.
pub fn constant_slice(quiver: &BipartiteQuiver) -> Result<Vec<f64>, SolveError> {
    let sys = PeriodicSystem::new(quiver.clone(), 1);
    let start = alloc::vec![0.0; sys.dim()];
    let out = solve(&sys, &start, &SolveOptions::default());
    if !out.converged {
        return Err(SolveError::NotAtSolution { residual: out.residual_inf });
    }
    Ok(out.log_values)
}

/// Jacobian of log tau exp at the given log slice, by central differences.
pub(crate) fn tau_jacobian(quiver: &BipartiteQuiver, z: &[f64], h: f64) -> Mat {
    let n = quiver.rank();
    assert_eq!(z.len(), n);
    let eval = |zz: &[f64]| -> Vec<f64> {
        let slice: Vec<f64> = zz.iter().map(|x| libm::exp(*x)).collect();
        tau_map(quiver, &slice).iter().map(|x| libm::log(*x)).collect()
    };
    let mut jac = Mat::zeros(n, n);
    let mut zp = z.to_vec();
    for j in 0..n {
        zp[j] = z[j] + h;
        let fp = eval(&zp);
        zp[j] = z[j] - h;
        let fm = eval(&zp);
        zp[j] = z[j];
        for i in 0..n {
            *jac.at_mut(i, j) = (fp[i] - fm[i]) / (2.0 * h);
        }
    }
    jac
}

/// Which part of the tau spectrum to measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauOrder {
    /// Eigenvalue -1: directions opening 2-periodic deformations.
    MinusOne,
    /// Eigenvalues +-i: directions opening 4-periodic deformations.
    OrderFour,
}

impl fmt::Display for TauOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TauOrder::MinusOne => write!(f, "-1"),
            TauOrder::OrderFour => write!(f, "+-i"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub order: TauOrder,
    /// Real multiplicity: dim ker(J + I) for -1, dim ker(J^2 + I) for
    /// +-i (a conjugate pair counts 2).
    pub multiplicity: usize,
    pub ambiguous: bool,
    pub singular_values: Vec<f64>,
    pub threshold: f64,
}

/// Multiplicity of the requested eigenvalue class of d(tau) at the
/// constant fixed point.
pub fn dtau_multiplicity(
    quiver: &BipartiteQuiver,
    order: TauOrder,
) -> Result<SpectrumReport, SolveError> {
    let z = constant_slice(quiver)?;
    let jac = tau_jacobian(quiver, &z, 1e-6);
    let m = match order {
        TauOrder::MinusOne => jac.plus_identity(),
        TauOrder::OrderFour => jac.matmul(&jac).plus_identity(),
    };
    let sv = m.singular_values();
    let (multiplicity, ambiguous, threshold) = nullity_from_singular_values(&sv, 1e-6);
    Ok(SpectrumReport { order, multiplicity, ambiguous, singular_values: sv, threshold })
}
