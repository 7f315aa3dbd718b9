//! Numerical side: the periodic mesh equations as a nonlinear system,
//! damped Gauss-Newton solving, tangent space dimensions, the tau
//! translation map and its spectrum, and a randomized classification
//! census.

pub mod classify;
mod linalg;
pub mod lm;
pub mod spectrum;
pub mod system;

pub use classify::{classify, ClassifyOptions, ClassifyReport, DEFAULT_SEED};
pub use lm::{random_start, seeded_rng, solve, tangent_dimension, SolveError, SolveOptions, SolveOutcome, TangentReport};
pub use spectrum::{constant_slice, dtau_multiplicity, tau_map, SpectrumReport, TauOrder};
pub use system::PeriodicSystem;
