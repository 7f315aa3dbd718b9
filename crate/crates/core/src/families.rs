//! Closed-form frieze families.
//!
//! Constant friezes exist for every ADE type. Free parameters appear only
//! in period 2 for A of odd rank (one), D (one for odd rank, two for even
//! rank) and E7 (one), and in period 4 for E8 (one); everywhere else the
//! periodic friezes of those periods are constant. The generators accept
//! exact or float parameters and stay in the parameter's backend.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::field::FieldId;
use crate::algebra::recurrence::qint;
use crate::algebra::scalar::{AlgebraicElement, Backend, Scalar};
use crate::algebra::{AlgebraError, BigRational};
use crate::frieze::{FriezeError, PeriodicFrieze};
use crate::quiver::{BipartiteQuiver, DynkinType, Series};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    BadRank(DynkinType),
    /// Even-rank type A has no 2-periodic parameters; its 2-periodic
    /// friezes are all constant.
    EvenRankAConstant(usize),
    /// E6 and E8 have no 2-periodic parameters either.
    ConstantOnly(DynkinType, usize),
    /// No family of the requested period exists for the type.
    NoFamily(DynkinType, usize),
    NonPositiveParam(&'static str),
    MixedParamBackends,
    /// The exact backend cannot represent this family at these arguments
    /// (quantum integers of an unsupported level, or a parameter from a
    /// field the family constants do not embed into).
    ExactUnsupported(String),
    MissingParam(&'static str),
    UnknownParam(String),
    TranslateNotApplicable,
    Algebra(AlgebraError),
    Frieze(FriezeError),
}

impl From<AlgebraError> for FamilyError {
    fn from(e: AlgebraError) -> Self {
        FamilyError::Algebra(e)
    }
}

impl From<FriezeError> for FamilyError {
    fn from(e: FriezeError) -> Self {
        FamilyError::Frieze(e)
    }
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::BadRank(t) => write!(f, "family not defined for {t}"),
            FamilyError::EvenRankAConstant(n) => write!(
                f,
                "A{n} has no 2-periodic parameters: every 2-periodic A{n} frieze is constant \
                 (generate the period 1 constant frieze instead)"
            ),
            FamilyError::ConstantOnly(t, p) => write!(
                f,
                "{t} has no {p}-periodic parameters: every {p}-periodic {t} frieze is constant \
                 (generate the period 1 constant frieze instead)"
            ),
            FamilyError::NoFamily(t, p) => write!(f, "no period {p} family for {t}"),
            FamilyError::NonPositiveParam(name) => write!(f, "parameter {name} must be positive"),
            FamilyError::MixedParamBackends => write!(f, "parameters mix float and exact backends"),
            FamilyError::ExactUnsupported(what) => write!(f, "exact backend unavailable: {what}"),
            FamilyError::MissingParam(name) => write!(f, "missing parameter {name}"),
            FamilyError::UnknownParam(name) => write!(f, "unknown parameter {name}"),
            FamilyError::TranslateNotApplicable => {
                write!(f, "translated variant applies to the 4-periodic E8 family only")
            }
            FamilyError::Algebra(e) => write!(f, "{e}"),
            FamilyError::Frieze(e) => write!(f, "{e}"),
        }
    }
}

fn check_positive(name: &'static str, x: &Scalar) -> Result<(), FamilyError> {
    if let Some(v) = x.as_float() {
        if !v.is_finite() {
            return Err(FamilyError::NonPositiveParam(name));
        }
    }
    if !x.is_positive() {
        return Err(FamilyError::NonPositiveParam(name));
    }
    Ok(())
}

fn quiver(series: Series, rank: usize) -> Result<BipartiteQuiver, FamilyError> {
    let t = DynkinType::new(series, rank).map_err(|_| {
        FamilyError::BadRank(DynkinType { series, rank })
    })?;
    Ok(BipartiteQuiver::new(t))
}

/// The constant frieze of the given type: every occurrence of a vertex
/// carries the same value, period 1. Exact whenever the entries lie in a
/// supported field (always for D and E; for A when rank <= 4).
pub fn constant_frieze(dynkin: DynkinType) -> Result<PeriodicFrieze, FamilyError> {
    match dynkin.series {
        Series::A => constant_a(dynkin.rank),
        Series::D => constant_d(dynkin.rank),
        Series::E => constant_e(dynkin.rank),
    }
}

/// Constant A_n frieze: vertex k carries the quantum integer [k+1] at
/// level n+3. Exact for n <= 4, float beyond (no exact level).
pub fn constant_a(n: usize) -> Result<PeriodicFrieze, FamilyError> {
    let q = quiver(Series::A, n)?;
    let level = (n + 3) as u64;
    let backend = if level <= 7 { Backend::Exact } else { Backend::Float };
    let mut values = Vec::with_capacity(n);
    for k in 1..=n as u64 {
        values.push(vec![qint(k + 1, level, backend)?]);
    }
    Ok(PeriodicFrieze::new(q, values)?)
}

/// Constant D_n frieze: 2, 3, ..., n-1 along the long leg, sqrt(n) on both
/// fork vertices. Always exact.
pub fn constant_d(n: usize) -> Result<PeriodicFrieze, FamilyError> {
    let q = quiver(Series::D, n)?;
    let mut values = Vec::with_capacity(n);
    for k in 1..=n - 2 {
        values.push(vec![Scalar::from_int(k as i64 + 1)]);
    }
    let fork = Scalar::sqrt(n as u64);
    values.push(vec![fork.clone()]);
    values.push(vec![fork]);
    Ok(PeriodicFrieze::new(q, values)?)
}

/// Constant E_n frieze, exact: E6 lives in the heptagon field (alpha =
/// 2cos(pi/7), beta = alpha^2 - 1), E7 in Q(sqrt2 phi), E8 in Q(sqrt2).
pub fn constant_e(rank: usize) -> Result<PeriodicFrieze, FamilyError> {
    let q = quiver(Series::E, rank)?;
    let values: Vec<Scalar> = match rank {
        6 => {
            let a = Scalar::heptagon_alpha();
            let b = Scalar::heptagon_beta();
            let one = Scalar::one();
            let ab = &a + &b;
            // order: c1, c2, X, a1, b2, b1
            vec![
                b.clone(),
                ab.clone(),
                &one + &(&(&Scalar::from_int(2) * &a) + &b),
                &one + &a,
                ab,
                b,
            ]
        }
        7 => {
            // gamma = sqrt2 phi; phi = (gamma^2 - 2)/2, and:
            // c1 = gamma, c2 = 1+2phi, c3 = 2sqrt2(1+phi), X = 3(1+2phi),
            // a1 = sqrt2(1+phi), b2 = 1+3phi, b1 = 1+phi.
            let el = |c: [(i64, i64); 4]| {
                Scalar::Algebraic(AlgebraicElement::new(
                    FieldId::Sqrt2Phi,
                    c.iter()
                        .map(|&(p, q)| BigRational::new(p.into(), q.into()))
                        .collect(),
                ))
            };
            vec![
                el([(0, 1), (1, 1), (0, 1), (0, 1)]),  // c1 = gamma
                el([(-1, 1), (0, 1), (1, 1), (0, 1)]), // c2 = gamma^2 - 1
                el([(0, 1), (-2, 1), (0, 1), (1, 1)]), // c3 = gamma^3 - 2gamma
                el([(-3, 1), (0, 1), (3, 1), (0, 1)]), // X = 3gamma^2 - 3
                el([(0, 1), (-1, 1), (0, 1), (1, 2)]), // a1 = (gamma^3 - 2gamma)/2
                el([(-2, 1), (0, 1), (3, 2), (0, 1)]), // b2 = (3gamma^2 - 4)/2
                el([(0, 1), (0, 1), (1, 2), (0, 1)]),  // b1 = gamma^2/2
            ]
        }
        8 => {
            let s2 = Scalar::sqrt(2);
            let c = |a: i64, b: i64| &Scalar::from_int(a) + &(&Scalar::from_int(b) * &s2);
            vec![
                c(1, 1),   // c1
                c(2, 2),   // c2
                c(5, 3),   // c3
                c(9, 6),   // c4
                c(16, 12), // X
                c(3, 2),   // a1
                c(5, 4),   // b2
                c(2, 1),   // b1
            ]
        }
        _ => return Err(FamilyError::BadRank(DynkinType { series: Series::E, rank })),
    };
    Ok(PeriodicFrieze::new(q, values.into_iter().map(|s| vec![s]).collect())?)
}

/// The 2-periodic type A family for odd rank w, one parameter x > 0.
///
/// With level l = w + 3 and lambda = [2]^2: even vertices stay constant at
/// [k+1]; odd vertex k carries the orbit {x [k+1]/[2], y [k+1]/[2]} with
/// y = lambda/x, the x-branch landing in slice 0 for k = 1 mod 4 and in
/// slice 1 for k = 3 mod 4. At x = sqrt(lambda) this is the constant
/// frieze. Exact for w <= 3 (lambda and the ratios are rational there);
/// even rank A has no such parameters and is rejected.
pub fn periodic2_a(w: usize, x: &Scalar) -> Result<PeriodicFrieze, FamilyError> {
    if w % 2 == 0 {
        return Err(FamilyError::EvenRankAConstant(w));
    }
    check_positive("x", x)?;
    let q = quiver(Series::A, w)?;
    let level = (w + 3) as u64;
    let backend = x.backend();
    if backend == Backend::Exact && level > 6 {
        return Err(FamilyError::ExactUnsupported(alloc::format!(
            "the 2-periodic A{w} family needs quantum integers at level {level}"
        )));
    }
    let two = qint(2, level, backend)?;
    let lambda = &two * &two;
    let y = &lambda / x;
    let mut values = Vec::with_capacity(w);
    for k in 1..=w as u64 {
        let qk = qint(k + 1, level, backend)?;
        if k % 2 == 0 {
            values.push(vec![qk.clone(), qk]);
        } else {
            let base = &qk / &two;
            let xv = x * &base;
            let yv = &y * &base;
            if k % 4 == 1 {
                values.push(vec![xv, yv]);
            } else {
                values.push(vec![yv, xv]);
            }
        }
    }
    Ok(PeriodicFrieze::new(q, values)?)
}

/// The 2-periodic type D family for even rank n = 2m + 2, two parameters
/// xp, xm > 0 on the fork vertices.
///
/// Fork orbits are {xp, n/xp} and {xm, n/xm}; even leg vertices stay
/// constant at label+1; odd leg vertex 2k-1 carries the orbit
/// {k x1, k y1} with x1 = 2n/(xp xm), y1 = 4/x1, the x-branch placed so
/// that the leaf pairs with the slice of (xp, xm). All entries stay in the
/// field generated by the parameters, so any exact input works.
pub fn periodic2_d_even(n: usize, xp: &Scalar, xm: &Scalar) -> Result<PeriodicFrieze, FamilyError> {
    if n < 4 || n % 2 != 0 {
        return Err(FamilyError::BadRank(DynkinType { series: Series::D, rank: n }));
    }
    check_positive("xp", xp)?;
    check_positive("xm", xm)?;
    if xp.backend() != xm.backend() {
        return Err(FamilyError::MixedParamBackends);
    }
    let q = quiver(Series::D, n)?;
    let m = (n - 2) / 2;
    let nn = Scalar::integer_like(n as i64, xp);
    let four = Scalar::integer_like(4, xp);
    let yp = &nn / xp;
    let ym = &nn / xm;
    let x1 = &(&Scalar::integer_like(2, xp) * &nn) / &(xp * xm);
    let y1 = &four / &x1;
    let mut values = Vec::with_capacity(n);
    for label in 1..=n - 2 {
        if label % 2 == 0 {
            let c = Scalar::integer_like(label as i64 + 1, xp);
            values.push(vec![c.clone(), c]);
        } else {
            let k = (label + 1) / 2; // label = 2k - 1
            let kk = Scalar::integer_like(k as i64, xp);
            let xv = &kk * &x1;
            let yv = &kk * &y1;
            if (m - k) % 2 == 0 {
                values.push(vec![xv, yv]);
            } else {
                values.push(vec![yv, xv]);
            }
        }
    }
    values.push(vec![xp.clone(), yp]);
    values.push(vec![xm.clone(), ym]);
    Ok(PeriodicFrieze::new(q, values)?)
}

/// The 2-periodic type D family for odd rank n, one parameter x > 0: the
/// long leg is constant at label+1 and the forks swing in antiphase
/// through {x, n/x}.
pub fn periodic2_d_odd(n: usize, x: &Scalar) -> Result<PeriodicFrieze, FamilyError> {
    if n < 5 || n % 2 != 1 {
        return Err(FamilyError::BadRank(DynkinType { series: Series::D, rank: n }));
    }
    check_positive("x", x)?;
    let q = quiver(Series::D, n)?;
    let y = &Scalar::integer_like(n as i64, x) / x;
    let mut values = Vec::with_capacity(n);
    for label in 1..=n - 2 {
        let c = Scalar::integer_like(label as i64 + 1, x);
        values.push(vec![c.clone(), c]);
    }
    values.push(vec![x.clone(), y.clone()]);
    values.push(vec![y, x.clone()]);
    Ok(PeriodicFrieze::new(q, values)?)
}

/// phi in the backend and field of the parameter: rationals lift to
/// Q(phi), Q(phi) stays put, Q(sqrt2 phi) uses (gamma^2 - 2)/2, floats use
/// the f64 value. Other exact fields cannot host the E7 constants.
fn phi_like(x: &Scalar) -> Result<Scalar, FamilyError> {
    match x {
        Scalar::Float(_) => Ok(Scalar::float((1.0 + libm::sqrt(5.0)) / 2.0)),
        Scalar::Rational(_) => Ok(Scalar::phi()),
        Scalar::Algebraic(el) => match el.field() {
            FieldId::Phi => Ok(Scalar::phi()),
            FieldId::Sqrt2Phi => Ok(Scalar::Algebraic(AlgebraicElement::new(
                FieldId::Sqrt2Phi,
                vec![
                    BigRational::new((-1).into(), 1.into()),
                    BigRational::new(0.into(), 1.into()),
                    BigRational::new(1.into(), 2.into()),
                    BigRational::new(0.into(), 1.into()),
                ],
            ))),
            other => Err(FamilyError::ExactUnsupported(alloc::format!(
                "the E7 family constants involve phi, which does not embed into Q({})",
                other.name()
            ))),
        },
    }
}

/// The 2-periodic E7 family, one parameter x1 > 0 on the leaf c1.
///
/// c2, X, b2, b1 are constant at 1+2phi, 3(1+2phi), 1+3phi, 1+phi; the
/// moving orbits are c1: {x1, 2phi^2/x1}, c3: {2phi 2phi^2/x1, 2phi x1}
/// and a1: {phi x1, 2phi^3/x1}. At x1 = sqrt2 phi this is the constant
/// frieze.
pub fn periodic2_e7(x1: &Scalar) -> Result<PeriodicFrieze, FamilyError> {
    check_positive("x1", x1)?;
    let q = quiver(Series::E, 7)?;
    let phi = phi_like(x1)?;
    let two = Scalar::integer_like(2, x1);
    let phi2 = &phi * &phi;
    let phi3 = &phi2 * &phi;
    let y1 = &(&two * &phi2) / x1;
    let x3 = &(&two * &phi) * x1;
    let y3 = &(&two * &phi) * &y1;
    let x7 = &(&two * &phi3) / x1;
    let y7 = &phi * x1;
    let one = Scalar::integer_like(1, x1);
    let c2v = &one + &(&two * &phi);
    let c4v = &Scalar::integer_like(3, x1) * &c2v;
    let c5v = &one + &(&Scalar::integer_like(3, x1) * &phi);
    let c6v = &one + &phi;
    let values = vec![
        vec![x1.clone(), y1],          // c1
        vec![c2v.clone(), c2v],        // c2
        vec![y3, x3],                  // c3
        vec![c4v.clone(), c4v],        // X
        vec![y7, x7],                  // a1
        vec![c5v.clone(), c5v],        // b2
        vec![c6v.clone(), c6v],        // b1
    ];
    Ok(PeriodicFrieze::new(q, values)?)
}

/// The 4-periodic E8 family, one parameter s > 0 (with st = 2 the
/// conjugate parameter). `translated` shifts the result one occurrence,
/// the other representative of the same orbit under even translations.
/// Any exact parameter works: all entries are polynomials in s and 2/s.
pub fn periodic4_e8(s: &Scalar, translated: bool) -> Result<PeriodicFrieze, FamilyError> {
    check_positive("s", s)?;
    let q = quiver(Series::E, 8)?;
    let t = &Scalar::integer_like(2, s) / s;
    let n = |k: i64| Scalar::integer_like(k, s);
    let s2 = s * s;
    let t2 = &t * &t;
    // Row layout follows the vertex order c1, c2, c3, c4, X, a1, b2, b1.
    // Parity 0 vertices repeat each value twice (slices 0,1 then 2,3 with
    // s and t exchanged); parity 1 vertices alternate with the symmetric
    // middle value.
    let x_s = &(&n(12) + &(&(&n(3) * s) + &(&n(9) * &t))) + &(&n(2) * &t2);
    let x_t = &(&n(12) + &(&(&n(9) * s) + &(&n(3) * &t))) + &(&n(2) * &s2);
    let c3_s = &(&n(3) + &(&n(3) * s)) + &s2;
    let c3_t = &(&n(3) + &(&n(3) * &t)) + &t2;
    let c1_s = &n(1) + s;
    let c1_t = &n(1) + &t;
    let b1_s = &n(2) + &t;
    let b1_t = &n(2) + s;
    let b2_0 = &(&n(3) + &(&n(4) * &t)) + &t2;
    let b2_2 = &(&n(3) + &(&n(4) * s)) + &s2;
    let b2_mid = &n(5) + &(&n(2) * &(s + &t));
    let a1_0 = &n(3) + &(&n(2) * &t);
    let a1_2 = &n(3) + &(&n(2) * s);
    let a1_mid = &n(3) + &(s + &t);
    let c4_0 = &(&(&n(7) + &(&n(4) * s)) + &(&n(2) * &t)) + &s2;
    let c4_2 = &(&(&n(7) + &(&n(2) * s)) + &(&n(4) * &t)) + &t2;
    let c4_mid = &n(9) + &(&n(3) * &(s + &t));
    let c2_0 = &(&n(2) * s) + &s2;
    let c2_2 = &(&n(2) * &t) + &t2;
    let c2_mid = &n(2) + &(s + &t);
    let values = vec![
        vec![c1_s.clone(), c1_s, c1_t.clone(), c1_t],
        vec![c2_0, c2_mid.clone(), c2_2, c2_mid],
        vec![c3_s.clone(), c3_s, c3_t.clone(), c3_t],
        vec![c4_0, c4_mid.clone(), c4_2, c4_mid],
        vec![x_s.clone(), x_s, x_t.clone(), x_t],
        vec![a1_0, a1_mid.clone(), a1_2, a1_mid],
        vec![b2_0, b2_mid.clone(), b2_2, b2_mid],
        vec![b1_s.clone(), b1_s, b1_t.clone(), b1_t],
    ];
    let f = PeriodicFrieze::new(q, values)?;
    Ok(if translated { f.translate(1) } else { f })
}

/// A family of friezes of one type and period, identified by its free
/// parameter names. Period 1 families are the constants.
#[derive(Clone, Copy, Debug)]
pub struct FamilySpec {
    pub dynkin: DynkinType,
    pub period: usize,
    pub params: &'static [&'static str],
}

/// Look up the family for a type and period. Errors distinguish "this
/// period forces the constant frieze" from "no such family".
pub fn family_for(dynkin: DynkinType, period: usize) -> Result<FamilySpec, FamilyError> {
    let spec = |params| FamilySpec { dynkin, period, params };
    match (dynkin.series, period) {
        (_, 1) => Ok(spec(&[])),
        (Series::A, 2) => {
            if dynkin.rank % 2 == 1 {
                Ok(spec(&["x"]))
            } else {
                Err(FamilyError::EvenRankAConstant(dynkin.rank))
            }
        }
        (Series::D, 2) => {
            if dynkin.rank % 2 == 0 {
                Ok(spec(&["xp", "xm"]))
            } else {
                Ok(spec(&["x"]))
            }
        }
        (Series::E, 2) => match dynkin.rank {
            7 => Ok(spec(&["x1"])),
            _ => Err(FamilyError::ConstantOnly(dynkin, 2)),
        },
        (Series::E, 4) if dynkin.rank == 8 => Ok(spec(&["s"])),
        _ => Err(FamilyError::NoFamily(dynkin, period)),
    }
}

impl FamilySpec {
    /// Evaluate the family at named parameter values. `translated` is the
    /// one-step shift of the 4-periodic E8 family and is rejected
    /// elsewhere.
    pub fn evaluate(
        &self,
        params: &[(String, Scalar)],
        translated: bool,
    ) -> Result<PeriodicFrieze, FamilyError> {
        for (name, _) in params {
            if !self.params.contains(&name.as_str()) {
                return Err(FamilyError::UnknownParam(name.clone()));
            }
        }
        let get = |name: &'static str| -> Result<&Scalar, FamilyError> {
            params
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| v)
                .ok_or(FamilyError::MissingParam(name))
        };
        if translated && !(self.dynkin.series == Series::E && self.dynkin.rank == 8 && self.period == 4)
        {
            return Err(FamilyError::TranslateNotApplicable);
        }
        match (self.dynkin.series, self.period) {
            (_, 1) => constant_frieze(self.dynkin),
            (Series::A, 2) => periodic2_a(self.dynkin.rank, get("x")?),
            (Series::D, 2) => {
                if self.dynkin.rank % 2 == 0 {
                    periodic2_d_even(self.dynkin.rank, get("xp")?, get("xm")?)
                } else {
                    periodic2_d_odd(self.dynkin.rank, get("x")?)
                }
            }
            (Series::E, 2) => periodic2_e7(get("x1")?),
            (Series::E, 4) => periodic4_e8(get("s")?, translated),
            _ => Err(FamilyError::NoFamily(self.dynkin, self.period)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_are_exact_friezes() {
        for name in
            ["A1", "A2", "A3", "A4", "D4", "D5", "D6", "D7", "D8", "D9", "D10", "E6", "E7", "E8"]
        {
            let t = DynkinType::parse(name).unwrap();
            let f = constant_frieze(t).unwrap();
            assert_eq!(f.backend(), Backend::Exact, "{name}");
            assert!(f.is_frieze(0.0), "{name}: {:?}", f.mesh_residuals().worst());
        }
    }

    #[test]
    fn constants_beyond_exact_levels_are_float() {
        for n in [5usize, 6, 7, 8] {
            let f = constant_a(n).unwrap();
            assert_eq!(f.backend(), Backend::Float);
            assert!(f.is_frieze(1e-12), "A{n}");
        }
    }

    #[test]
    fn constant_small_a_values() {
        let f = constant_a(1).unwrap();
        assert_eq!(f.value(0, 0), &Scalar::sqrt(2));
        let f = constant_a(2).unwrap();
        assert_eq!(f.value(0, 0), &Scalar::phi());
        assert_eq!(f.value(1, 0), &Scalar::phi());
        let f = constant_a(3).unwrap();
        assert_eq!(f.value(1, 0), &Scalar::from_int(2));
        let f = constant_a(4).unwrap();
        assert_eq!(f.value(0, 0), &Scalar::heptagon_alpha());
        assert_eq!(f.value(1, 0), &Scalar::heptagon_beta());
    }

    #[test]
    fn constant_d4_is_2223() {
        let f = constant_d(4).unwrap();
        let q = f.quiver().clone();
        assert_eq!(f.value(q.vertex("1").unwrap(), 0), &Scalar::from_int(2));
        assert_eq!(f.value(q.vertex("2").unwrap(), 0), &Scalar::from_int(3));
        assert_eq!(f.value(q.vertex("+").unwrap(), 0), &Scalar::from_int(2));
    }

    #[test]
    fn constant_e8_x_entry() {
        let f = constant_e(8).unwrap();
        let x = f.quiver().vertex("X").unwrap();
        let want = &Scalar::from_int(16) + &(&Scalar::from_int(12) * &Scalar::sqrt(2));
        assert_eq!(f.value(x, 0), &want);
    }

    #[test]
    fn periodic2_a_examples() {
        // w = 1, x = 1: slices (1, 2).
        let f = periodic2_a(1, &Scalar::one()).unwrap();
        assert!(f.is_frieze(0.0));
        assert_eq!(f.value(0, 0), &Scalar::one());
        assert_eq!(f.value(0, 1), &Scalar::from_int(2));
        // w = 3, x = 1: odd vertices carry (1, 3) across slices.
        let f = periodic2_a(3, &Scalar::one()).unwrap();
        assert!(f.is_frieze(0.0));
        assert_eq!(f.value(0, 0), &Scalar::one());
        assert_eq!(f.value(0, 1), &Scalar::from_int(3));
        assert_eq!(f.value(1, 0), &Scalar::from_int(2));
        assert_eq!(f.value(2, 0), &Scalar::from_int(3));
        assert_eq!(f.value(2, 1), &Scalar::one());
    }

    #[test]
    fn periodic2_a_rejects_even_rank_and_deep_exact() {
        assert!(matches!(
            periodic2_a(2, &Scalar::one()),
            Err(FamilyError::EvenRankAConstant(2))
        ));
        assert!(matches!(
            periodic2_a(5, &Scalar::one()),
            Err(FamilyError::ExactUnsupported(_))
        ));
        assert!(periodic2_a(5, &Scalar::float(1.0)).unwrap().is_frieze(1e-12));
    }

    #[test]
    fn periodic2_a_constant_specialization() {
        let f2 = periodic2_a(3, &Scalar::sqrt(3)).unwrap();
        let f1 = constant_a(3).unwrap();
        for v in 0..3 {
            for n in 0..2 {
                assert_eq!(f2.value(v, n), f1.value(v, 0));
            }
        }
        // Float variant for a width with no exact backend.
        let lam = 2.0 + 2.0 * libm::cos(core::f64::consts::PI / 4.0);
        let f2 = periodic2_a(5, &Scalar::float(libm::sqrt(lam))).unwrap();
        let f1 = constant_a(5).unwrap();
        for v in 0..5 {
            for n in 0..2 {
                assert!((f2.value(v, n).to_f64() - f1.value(v, 0).to_f64()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn periodic2_d_even_example() {
        // n = 4, xp = 1, xm = 2: y+ = 4, y- = 2, x1 = 4, y1 = 1.
        let f = periodic2_d_even(4, &Scalar::one(), &Scalar::from_int(2)).unwrap();
        assert!(f.is_frieze(0.0));
        let q = f.quiver().clone();
        let leaf = q.vertex("1").unwrap();
        assert_eq!(f.value(leaf, 0), &Scalar::from_int(4));
        assert_eq!(f.value(leaf, 1), &Scalar::one());
        assert_eq!(f.value(q.vertex("+").unwrap(), 1), &Scalar::from_int(4));
        assert_eq!(f.value(q.vertex("-").unwrap(), 1), &Scalar::from_int(2));
    }

    #[test]
    fn periodic2_d_constant_specializations() {
        let f2 = periodic2_d_even(6, &Scalar::sqrt(6), &Scalar::sqrt(6)).unwrap();
        let f1 = constant_d(6).unwrap();
        for v in 0..6 {
            for n in 0..2 {
                assert_eq!(f2.value(v, n), f1.value(v, 0), "v = {v}");
            }
        }
        let f2 = periodic2_d_odd(5, &Scalar::sqrt(5)).unwrap();
        let f1 = constant_d(5).unwrap();
        for v in 0..5 {
            for n in 0..2 {
                assert_eq!(f2.value(v, n), f1.value(v, 0), "v = {v}");
            }
        }
    }

    #[test]
    fn periodic2_d_odd_example() {
        let f = periodic2_d_odd(5, &Scalar::one()).unwrap();
        assert!(f.is_frieze(0.0));
        let q = f.quiver().clone();
        assert_eq!(f.value(q.vertex("+").unwrap(), 0), &Scalar::one());
        assert_eq!(f.value(q.vertex("+").unwrap(), 1), &Scalar::from_int(5));
        assert_eq!(f.value(q.vertex("-").unwrap(), 0), &Scalar::from_int(5));
        assert_eq!(f.value(q.vertex("3").unwrap(), 0), &Scalar::from_int(4));
    }

    #[test]
    fn periodic2_e7_is_exact_in_qphi() {
        let f = periodic2_e7(&Scalar::one()).unwrap();
        assert!(f.is_frieze(0.0));
        assert_eq!(f.field(), Some(FieldId::Phi));
        let q = f.quiver().clone();
        // y1 = 2phi^2 = 2 + 2phi.
        let want = &Scalar::from_int(2) + &(&Scalar::from_int(2) * &Scalar::phi());
        assert_eq!(f.value(q.vertex("c1").unwrap(), 1), &want);
    }

    #[test]
    fn periodic2_e7_constant_specialization() {
        let f2 = periodic2_e7(&Scalar::sqrt2_phi()).unwrap();
        let f1 = constant_e(7).unwrap();
        for v in 0..7 {
            for n in 0..2 {
                assert_eq!(f2.value(v, n), f1.value(v, 0), "v = {v}");
            }
        }
    }

    #[test]
    fn periodic4_e8_integer_points() {
        let f = periodic4_e8(&Scalar::from_int(2), false).unwrap();
        assert!(f.is_frieze(0.0));
        assert!(f.field().is_none(), "rational s keeps rational entries");
        let q = f.quiver().clone();
        let x = q.vertex("X").unwrap();
        let got: Vec<i64> = (0..4)
            .map(|n| {
                let r = f.value(x, n).as_rational().unwrap();
                assert!(r.is_integer());
                i64::try_from(r.to_integer()).unwrap()
            })
            .collect();
        assert_eq!(got, [29, 29, 41, 41]);
    }

    #[test]
    fn periodic4_e8_constant_specialization() {
        let f4 = periodic4_e8(&Scalar::sqrt(2), false).unwrap();
        let f1 = constant_e(8).unwrap();
        for v in 0..8 {
            for n in 0..4 {
                assert_eq!(f4.value(v, n), f1.value(v, 0), "v = {v}, n = {n}");
            }
        }
    }

    #[test]
    fn periodic4_e8_translation_exchanges_parameters() {
        let f = periodic4_e8(&Scalar::from_int(2), false).unwrap();
        let g = periodic4_e8(&Scalar::one(), false).unwrap(); // s = 1, t = 2
        assert!(f.translate(2).entrywise_eq(&g));
        let ft = periodic4_e8(&Scalar::from_int(2), true).unwrap();
        assert!(ft.entrywise_eq(&f.translate(1)));
        assert!(!ft.entrywise_eq(&f));
    }

    #[test]
    fn registry_dispatch() {
        let t = DynkinType::parse("D6").unwrap();
        let spec = family_for(t, 2).unwrap();
        assert_eq!(spec.params, &["xp", "xm"]);
        let f = spec
            .evaluate(
                &[
                    (String::from("xp"), Scalar::from_int(1)),
                    (String::from("xm"), Scalar::from_int(3)),
                ],
                false,
            )
            .unwrap();
        assert!(f.is_frieze(0.0));
        assert!(matches!(
            family_for(DynkinType::parse("A4").unwrap(), 2),
            Err(FamilyError::EvenRankAConstant(4))
        ));
        assert!(matches!(
            family_for(DynkinType::parse("E6").unwrap(), 2),
            Err(FamilyError::ConstantOnly(_, 2))
        ));
        assert!(matches!(
            family_for(DynkinType::parse("E8").unwrap(), 3),
            Err(FamilyError::NoFamily(_, 3))
        ));
        let spec = family_for(DynkinType::parse("E8").unwrap(), 4).unwrap();
        let f = spec
            .evaluate(&[(String::from("s"), Scalar::from_int(1))], true)
            .unwrap();
        assert!(f.is_frieze(0.0));
    }
}
