//! Randomized census of p-periodic friezes of a given type: solve from
//! many seeded random starts, then record how many solutions are
//! constant, the tangent dimension histogram, and whether every solution
//! lies on the known parameter family.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::lm::{random_start, solve, tangent_dimension, SolveOptions};
use super::system::PeriodicSystem;
use crate::algebra::scalar::Scalar;
use crate::families::{self, FamilyError, FamilySpec};
use crate::frieze::PeriodicFrieze;
use crate::quiver::{BipartiteQuiver, DynkinType, Series};

/// Default RNG seed for reproducible runs.
pub const DEFAULT_SEED: u64 = 1729;

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub solve: SolveOptions,
    /// A solution whose slices agree to this relative tolerance counts as
    /// constant.
    pub constant_tol: f64,
    /// A solution within this relative distance of a family point (over
    /// all translates) counts as fitted.
    pub family_tol: f64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            trials: 200,
            seed: DEFAULT_SEED,
            solve: SolveOptions::default(),
            constant_tol: 1e-7,
            family_tol: 1e-7,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyReport {
    pub dynkin: DynkinType,
    pub period: usize,
    pub trials: usize,
    pub converged: usize,
    pub constant_count: usize,
    /// Tangent dimension of each converged solution, binned.
    pub tangent_histogram: BTreeMap<usize, usize>,
    pub ambiguous_count: usize,
    /// Parameter count of the family checked against, if one exists for
    /// this type and period (0 means the constants are the only family).
    pub family_params: Option<usize>,
    pub family_fitted: usize,
    /// Worst fit distance among converged solutions.
    pub family_max_dev: Option<f64>,
}

impl ClassifyReport {
    pub fn fraction_constant(&self) -> f64 {
        if self.converged == 0 {
            0.0
        } else {
            self.constant_count as f64 / self.converged as f64
        }
    }
}

/// Dominant tangent dimension across converged trials.
impl ClassifyReport {
    pub fn modal_tangent_dimension(&self) -> Option<usize> {
        self.tangent_histogram
            .iter()
            .max_by_key(|(_, &count)| count)
            .map(|(&dim, _)| dim)
    }
}

fn extract_params(spec: &FamilySpec, g: &PeriodicFrieze) -> Vec<(String, Scalar)> {
    let rank = spec.dynkin.rank;
    let named = |pairs: &[(&str, Scalar)]| -> Vec<(String, Scalar)> {
        pairs.iter().map(|(n, v)| (String::from(*n), v.clone())).collect()
    };
    match (spec.dynkin.series, spec.period) {
        (Series::A, 2) => named(&[("x", g.value(0, 0).clone())]),
        (Series::D, 2) if rank % 2 == 0 => named(&[
            ("xp", g.value(rank - 2, 0).clone()),
            ("xm", g.value(rank - 1, 0).clone()),
        ]),
        (Series::D, 2) => named(&[("x", g.value(rank - 2, 0).clone())]),
        (Series::E, 2) => named(&[("x1", g.value(0, 0).clone())]),
        (Series::E, 4) => named(&[("s", g.value(0, 0) - &Scalar::float(1.0))]),
        _ => vec![],
    }
}

/// Distance from `f` to the family, minimized over translates. `None`
/// when no translate admits a parameter extraction.
fn family_distance(spec: &FamilySpec, f: &PeriodicFrieze) -> Option<f64> {
    let mut best: Option<f64> = None;
    for k in 0..f.period() {
        let g = f.translate(k as i64);
        let params = extract_params(spec, &g);
        let ev = match spec.evaluate(&params, false) {
            Ok(ev) => ev,
            Err(_) => continue,
        };
        if let Ok(dev) = g.entrywise_max_dev(&ev) {
            best = Some(best.map_or(dev, |b: f64| b.min(dev)));
        }
    }
    best
}

/// Distance from `f` to the constant frieze repeated over the period.
fn constant_distance(f: &PeriodicFrieze) -> Option<f64> {
    let cf = families::constant_frieze(f.quiver().dynkin()).ok()?.to_float();
    let tiled: Vec<Vec<Scalar>> = (0..f.quiver().rank())
        .map(|v| vec![cf.value(v, 0).clone(); f.period()])
        .collect();
    let tiled = PeriodicFrieze::new(f.quiver().clone(), tiled).ok()?;
    f.entrywise_max_dev(&tiled).ok()
}

pub fn classify(dynkin: DynkinType, period: usize, opts: &ClassifyOptions) -> ClassifyReport {
    let quiver = BipartiteQuiver::new(dynkin);
    let sys = PeriodicSystem::new(quiver, period);
    let family = match families::family_for(dynkin, period) {
        Ok(spec) => Some(spec),
        Err(FamilyError::EvenRankAConstant(_)) | Err(FamilyError::ConstantOnly(_, _)) => {
            Some(FamilySpec { dynkin, period, params: &[] })
        }
        Err(_) => None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut report = ClassifyReport {
        dynkin,
        period,
        trials: opts.trials,
        converged: 0,
        constant_count: 0,
        tangent_histogram: BTreeMap::new(),
        ambiguous_count: 0,
        family_params: family.map(|s| s.params.len()),
        family_fitted: 0,
        family_max_dev: None,
    };
    for _ in 0..opts.trials {
        let z0 = random_start(&sys, &mut rng);
        let out = solve(&sys, &z0, &opts.solve);
        if !out.converged {
            continue;
        }
        report.converged += 1;
        let f = match sys.frieze_from_log(&out.log_values) {
            Ok(f) => f,
            Err(_) => continue,
        };
        if f.slice_deviation() < opts.constant_tol {
            report.constant_count += 1;
        }
        if let Ok(tangent) = tangent_dimension(&sys, &out.log_values) {
            *report.tangent_histogram.entry(tangent.dimension).or_insert(0) += 1;
            if tangent.ambiguous {
                report.ambiguous_count += 1;
            }
        }
        if let Some(spec) = &family {
            let dev = if spec.params.is_empty() {
                constant_distance(&f)
            } else {
                family_distance(spec, &f)
            };
            if let Some(dev) = dev {
                report.family_max_dev =
                    Some(report.family_max_dev.map_or(dev, |b: f64| b.max(dev)));
                if dev <= opts.family_tol {
                    report.family_fitted += 1;
                }
            }
        }
    }
    report
}
