//! Periodic friezes, mesh residuals, band propagation and period detection.
//!
//! Mesh relation at vertex v, occurrence n (vertex parity e = 0 or 1):
//!
//!   a(v, n) a(v, n+1) = 1 + prod over neighbours u of a(u, n + e)
//!
//! since the occurrence of a neighbour u sitting in the column between the
//! two occurrences of v has index n when e = 0 and n+1 when e = 1.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::field::FieldId;
use crate::algebra::scalar::{Backend, Scalar};
use crate::quiver::BipartiteQuiver;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FriezeError {
    EmptyPeriod,
    WrongShape { expected: usize, got: usize },
    MixedBackends,
    MixedFields(FieldId, FieldId),
    NonFinite { vertex: usize, occurrence: usize },
    NonPositive { vertex: usize, occurrence: usize },
    WindowTooShort { occurrences: usize },
    PeriodExceedsWindow { period: usize, occurrences: usize },
}

impl fmt::Display for FriezeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FriezeError::EmptyPeriod => write!(f, "period must be at least 1"),
            FriezeError::WrongShape { expected, got } => {
                write!(f, "expected {expected} values, got {got}")
            }
            FriezeError::MixedBackends => write!(f, "values mix float and exact backends"),
            FriezeError::MixedFields(a, b) => {
                write!(f, "values mix algebraic fields {} and {}", a.name(), b.name())
            }
            FriezeError::NonFinite { vertex, occurrence } => {
                write!(f, "non-finite value at vertex {vertex}, occurrence {occurrence}")
            }
            FriezeError::NonPositive { vertex, occurrence } => {
                write!(f, "non-positive value at vertex {vertex}, occurrence {occurrence}")
            }
            FriezeError::WindowTooShort { occurrences } => {
                write!(f, "band too short to test any period ({occurrences} occurrences)")
            }
            FriezeError::PeriodExceedsWindow { period, occurrences } => {
                write!(f, "cannot cut period {period} from a band with {occurrences} occurrences")
            }
        }
    }
}

/// Establish the common backend and (optional) algebraic field of a value
/// collection, rejecting mixtures, non-finite floats and non-positive
/// entries.
fn validate_values<'a, I>(values: I) -> Result<(Backend, Option<FieldId>), FriezeError>
where
    I: Iterator<Item = (usize, usize, &'a Scalar)>,
{
    let mut backend: Option<Backend> = None;
    let mut field: Option<FieldId> = None;
    for (vertex, occurrence, s) in values {
        match backend {
            None => backend = Some(s.backend()),
            Some(b) if b != s.backend() => return Err(FriezeError::MixedBackends),
            _ => {}
        }
        if let Some(g) = s.field() {
            match field {
                None => field = Some(g),
                Some(h) if h != g => return Err(FriezeError::MixedFields(h, g)),
                _ => {}
            }
        }
        if let Scalar::Float(x) = s {
            if !x.is_finite() {
                return Err(FriezeError::NonFinite { vertex, occurrence });
            }
        }
        if !s.is_positive() {
            return Err(FriezeError::NonPositive { vertex, occurrence });
        }
    }
    Ok((backend.unwrap_or(Backend::Exact), field))
}

/// One violated or satisfied mesh relation.
#[derive(Clone, Debug)]
pub struct MeshResidual {
    pub vertex: usize,
    pub occurrence: usize,
    pub value: Scalar,
}

/// All mesh residuals of a periodic frieze.
#[derive(Clone, Debug)]
pub struct ResidualReport {
    pub residuals: Vec<MeshResidual>,
}

impl ResidualReport {
    pub fn max_abs(&self) -> f64 {
        self.residuals
            .iter()
            .map(|r| libm::fabs(r.value.to_f64()))
            .fold(0.0, f64::max)
    }

    pub fn all_exactly_zero(&self) -> bool {
        self.residuals.iter().all(|r| r.value.is_zero())
    }

    pub fn worst(&self) -> Option<&MeshResidual> {
        self.residuals.iter().max_by(|a, b| {
            libm::fabs(a.value.to_f64())
                .partial_cmp(&libm::fabs(b.value.to_f64()))
                .unwrap_or(core::cmp::Ordering::Equal)
        })
    }
}

/// A frieze with values repeating after `period` occurrences of every
/// vertex (one period = 2 * period columns of the translation quiver).
#[derive(Clone, Debug)]
pub struct PeriodicFrieze {
    quiver: BipartiteQuiver,
    period: usize,
    values: Vec<Vec<Scalar>>,
    backend: Backend,
    field: Option<FieldId>,
}

impl PeriodicFrieze {
    /// values[v][n] is the n-th occurrence of vertex v, n < period.
    pub fn new(quiver: BipartiteQuiver, values: Vec<Vec<Scalar>>) -> Result<Self, FriezeError> {
        if values.len() != quiver.rank() {
            return Err(FriezeError::WrongShape {
                expected: quiver.rank(),
                got: values.len(),
            });
        }
        let period = values.first().map_or(0, Vec::len);
        if period == 0 {
            return Err(FriezeError::EmptyPeriod);
        }
        for row in &values {
            if row.len() != period {
                return Err(FriezeError::WrongShape {
                    expected: period,
                    got: row.len(),
                });
            }
        }
        let (backend, field) = validate_values(
            values
                .iter()
                .enumerate()
                .flat_map(|(v, row)| row.iter().enumerate().map(move |(n, s)| (v, n, s))),
        )?;
        Ok(PeriodicFrieze {
            quiver,
            period,
            values,
            backend,
            field,
        })
    }

    pub fn quiver(&self) -> &BipartiteQuiver {
        &self.quiver
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn field(&self) -> Option<FieldId> {
        self.field
    }

    /// Value of the n-th occurrence (n arbitrary, reduced mod period).
    pub fn value(&self, vertex: usize, n: i64) -> &Scalar {
        let p = self.period as i64;
        &self.values[vertex][n.rem_euclid(p) as usize]
    }

    pub fn values(&self, vertex: usize) -> &[Scalar] {
        &self.values[vertex]
    }

    pub fn mesh_residuals(&self) -> ResidualReport {
        let mut residuals = Vec::with_capacity(self.quiver.rank() * self.period);
        for v in 0..self.quiver.rank() {
            let e = self.quiver.parity(v) as i64;
            for n in 0..self.period as i64 {
                let lhs = self.value(v, n) * self.value(v, n + 1);
                let mut prod = Scalar::integer_like(1, self.value(v, n));
                for &u in self.quiver.neighbors(v) {
                    prod = &prod * self.value(u, n + e);
                }
                let one = Scalar::integer_like(1, self.value(v, n));
                let value = &(&lhs - &one) - &prod;
                residuals.push(MeshResidual {
                    vertex: v,
                    occurrence: n as usize,
                    value,
                });
            }
        }
        ResidualReport { residuals }
    }

    /// Whether all mesh relations hold: exactly (zero residuals) on the
    /// exact backend, within `tol` in maximum absolute value on floats.
    pub fn is_frieze(&self, tol: f64) -> bool {
        let report = self.mesh_residuals();
        match self.backend {
            Backend::Exact => report.all_exactly_zero(),
            Backend::Float => report.max_abs() <= tol,
        }
    }

    /// The frieze shifted by k occurrences: b(v, n) = a(v, n + k).
    pub fn translate(&self, k: i64) -> PeriodicFrieze {
        let p = self.period as i64;
        let shift = k.rem_euclid(p) as usize;
        let values = self
            .values
            .iter()
            .map(|row| {
                (0..self.period)
                    .map(|n| row[(n + shift) % self.period].clone())
                    .collect()
            })
            .collect();
        PeriodicFrieze {
            quiver: self.quiver.clone(),
            period: self.period,
            values,
            backend: self.backend,
            field: self.field,
        }
    }

    pub fn to_float(&self) -> PeriodicFrieze {
        let values = self
            .values
            .iter()
            .map(|row| row.iter().map(|s| Scalar::Float(s.to_f64())).collect())
            .collect();
        PeriodicFrieze {
            quiver: self.quiver.clone(),
            period: self.period,
            values,
            backend: Backend::Float,
            field: None,
        }
    }

    /// Exact entrywise equality (same type, same period). Periods must
    /// match; use translate() to align phases first.
    pub fn entrywise_eq(&self, other: &PeriodicFrieze) -> bool {
        self.quiver.dynkin() == other.quiver.dynkin()
            && self.period == other.period
            && self.values == other.values
    }

    /// Maximum |a - b| over all entries, as f64.
    pub fn entrywise_max_dev(&self, other: &PeriodicFrieze) -> Result<f64, FriezeError> {
        if self.quiver.dynkin() != other.quiver.dynkin() || self.period != other.period {
            return Err(FriezeError::WrongShape {
                expected: self.quiver.rank() * self.period,
                got: other.quiver.rank() * other.period,
            });
        }
        let mut dev = 0.0f64;
        for v in 0..self.quiver.rank() {
            for n in 0..self.period {
                let d = libm::fabs(self.values[v][n].to_f64() - other.values[v][n].to_f64());
                dev = dev.max(d);
            }
        }
        Ok(dev)
    }

    /// Largest relative spread of a vertex across its occurrences; zero
    /// for a constant frieze.
    pub fn slice_deviation(&self) -> f64 {
        let mut dev = 0.0f64;
        for row in &self.values {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for s in row {
                let x = s.to_f64();
                lo = lo.min(x);
                hi = hi.max(x);
            }
            dev = dev.max((hi - lo) / hi.max(1.0));
        }
        dev
    }
}

/// A finite strip of frieze columns produced by propagation:
/// values[v][j] = a(v, j) for columns parity(v) + 2j inside the window.
#[derive(Clone, Debug)]
pub struct FriezeBand {
    quiver: BipartiteQuiver,
    columns: usize,
    values: Vec<Vec<Scalar>>,
}

impl FriezeBand {
    pub fn quiver(&self) -> &BipartiteQuiver {
        &self.quiver
    }

    /// Total number of columns in the window (seed occupies columns 0, 1).
    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn occurrences(&self, vertex: usize) -> usize {
        self.values[vertex].len()
    }

    pub fn value(&self, vertex: usize, occurrence: usize) -> &Scalar {
        &self.values[vertex][occurrence]
    }

    /// Largest interior mesh residual in absolute value, as f64.
    pub fn max_interior_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for v in 0..self.quiver.rank() {
            let e = self.quiver.parity(v) as usize;
            for n in 0..self.values[v].len().saturating_sub(1) {
                let mut prod = Scalar::integer_like(1, &self.values[v][n]);
                let mut complete = true;
                for &u in self.quiver.neighbors(v) {
                    match self.values[u].get(n + e) {
                        Some(s) => prod = &prod * s,
                        None => {
                            complete = false;
                            break;
                        }
                    }
                }
                if !complete {
                    continue;
                }
                let one = Scalar::integer_like(1, &self.values[v][n]);
                let r = &(&(&self.values[v][n] * &self.values[v][n + 1]) - &one) - &prod;
                worst = worst.max(libm::fabs(r.to_f64()));
            }
        }
        worst
    }

    /// Smallest p >= 1 with a(v, j + p) = a(v, j) throughout the window
    /// (within relative tolerance `tol` on the float backend, exactly on
    /// exact backends), or None when no period fits the window. Candidate
    /// periods up to (shortest row) - 1 are testable; supply a window of at
    /// least 3(h+2) columns to make periods up to h+2 decidable.
    pub fn detect_period(&self, tol: f64) -> Result<Option<usize>, FriezeError> {
        let max_p = self
            .values
            .iter()
            .map(|row| row.len().saturating_sub(1))
            .min()
            .unwrap_or(0);
        if max_p == 0 {
            return Err(FriezeError::WindowTooShort {
                occurrences: max_p + 1,
            });
        }
        'candidates: for p in 1..=max_p {
            for row in &self.values {
                for j in 0..row.len() - p {
                    let (a, b) = (&row[j], &row[j + p]);
                    let close = match (a, b) {
                        (Scalar::Float(x), Scalar::Float(y)) => {
                            libm::fabs(x - y) <= tol * libm::fmax(libm::fabs(*x), libm::fabs(*y))
                        }
                        _ => a == b,
                    };
                    if !close {
                        continue 'candidates;
                    }
                }
            }
            return Ok(Some(p));
        }
        Ok(None)
    }

    /// Wrap the first `period` occurrences of every vertex into a periodic
    /// frieze. Call with a detected period; the values are not re-verified.
    pub fn to_frieze(&self, period: usize) -> Result<PeriodicFrieze, FriezeError> {
        let available = self.values.iter().map(Vec::len).min().unwrap_or(0);
        if period == 0 {
            return Err(FriezeError::EmptyPeriod);
        }
        if period > available {
            return Err(FriezeError::PeriodExceedsWindow {
                period,
                occurrences: available,
            });
        }
        let values = self
            .values
            .iter()
            .map(|row| row[..period].to_vec())
            .collect();
        PeriodicFrieze::new(self.quiver.clone(), values)
    }
}

/// Grow a band from a seed slice: seed[v] is occurrence 0 of vertex v
/// (column 0 or 1 according to parity), and `extra_columns` further columns
/// are filled by the mesh relations, each new value determined by
/// a(v, j) = (1 + prod of neighbours in the previous column) / a(v, j-1).
/// Positive seeds propagate to positive values, so the division is safe.
pub fn propagate(
    quiver: &BipartiteQuiver,
    seed: &[Scalar],
    extra_columns: usize,
) -> Result<FriezeBand, FriezeError> {
    if seed.len() != quiver.rank() {
        return Err(FriezeError::WrongShape {
            expected: quiver.rank(),
            got: seed.len(),
        });
    }
    validate_values(seed.iter().enumerate().map(|(v, s)| (v, 0, s)))?;
    let mut values: Vec<Vec<Scalar>> = seed.iter().map(|s| alloc::vec![s.clone()]).collect();
    let columns = 2 + extra_columns;
    for c in 2..columns {
        let col_parity = (c % 2) as u8;
        for v in 0..quiver.rank() {
            if quiver.parity(v) != col_parity {
                continue;
            }
            let j = (c - quiver.parity(v) as usize) / 2;
            let prev = values[v][j - 1].clone();
            let mut prod = Scalar::integer_like(1, &prev);
            for &u in quiver.neighbors(v) {
                let ju = (c - 1 - quiver.parity(u) as usize) / 2;
                prod = &prod * &values[u][ju];
            }
            let one = Scalar::integer_like(1, &prev);
            let next = &(&one + &prod) / &prev;
            if let Scalar::Float(x) = next {
                if !x.is_finite() {
                    return Err(FriezeError::NonFinite { vertex: v, occurrence: j });
                }
            }
            values[v].push(next);
        }
    }
    Ok(FriezeBand {
        quiver: quiver.clone(),
        columns,
        values,
    })
}
