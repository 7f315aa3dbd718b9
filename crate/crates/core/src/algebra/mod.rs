//! Scalars for frieze computation: exact elements of small real number
//! fields, arbitrary-precision rationals, and `f64`.

pub mod field;
pub mod recurrence;
pub mod scalar;

pub use field::FieldId;
pub use recurrence::{chebyshev, qint, qpoly, two_colour};
pub use scalar::{AlgebraicElement, Backend, Scalar};

// Re-exported so downstream crates use the same big-number types without
// pinning their own copy of the num stack.
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use core::fmt;

/// Errors from the recurrence layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// Exact quantum integers exist only at levels 4, 5, 6 and 7, where
    /// 2cos(pi/level) generates one of the supported fields.
    UnsupportedExactLevel(u64),
    /// The boundary polynomials q_m are defined for even m only.
    OddQuantumPolynomialIndex(u64),
    /// Quantum integers need level >= 2.
    LevelTooSmall(u64),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::UnsupportedExactLevel(l) => write!(
                f,
                "no exact backend for quantum integers at level {l} (supported: 4, 5, 6, 7)"
            ),
            AlgebraError::OddQuantumPolynomialIndex(m) => {
                write!(f, "quantum polynomial index must be even, got {m}")
            }
            AlgebraError::LevelTooSmall(l) => write!(f, "quantum integer level must be >= 2, got {l}"),
        }
    }
}
