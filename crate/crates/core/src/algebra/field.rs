//! The real number fields carrying the closed-form friezes.
//!
//! Each field is Q(gamma) for one distinguished real algebraic number,
//! identified by the minimal polynomial of gamma together with a rational
//! interval isolating the intended real root. Sign queries are decided
//! exactly: the isolating interval is bisected (steering by the sign of the
//! minimal polynomial at the midpoint) until interval evaluation of the
//! element excludes zero. This terminates for every nonzero element because
//! the minimal polynomials are irreducible over Q, so no nonzero reduced
//! element vanishes at gamma.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A small real field Q(gamma).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldId {
    /// Q(sqrt(n)) for a squarefree integer n >= 2.
    SqrtN(u64),
    /// The golden field Q(phi), phi = (1 + sqrt(5))/2.
    Phi,
    /// Q(2cos(pi/7)), the real cubic field of the regular heptagon.
    /// gamma^3 = gamma^2 + 2gamma - 1.
    Heptagon,
    /// Q(sqrt(2) phi), degree four: gamma^4 = 6gamma^2 - 4.
    Sqrt2Phi,
}

pub(crate) fn rat_i64(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

impl FieldId {
    pub fn degree(self) -> usize {
        match self {
            FieldId::SqrtN(_) | FieldId::Phi => 2,
            FieldId::Heptagon => 3,
            FieldId::Sqrt2Phi => 4,
        }
    }

    /// Monic minimal polynomial of gamma, constant coefficient first.
    pub fn min_poly(self) -> Vec<BigRational> {
        match self {
            FieldId::SqrtN(n) => vec![rat_i64(-(n as i64)), rat_i64(0), rat_i64(1)],
            FieldId::Phi => vec![rat_i64(-1), rat_i64(-1), rat_i64(1)],
            FieldId::Heptagon => vec![rat_i64(1), rat_i64(-2), rat_i64(-1), rat_i64(1)],
            FieldId::Sqrt2Phi => vec![rat_i64(4), rat_i64(0), rat_i64(-6), rat_i64(0), rat_i64(1)],
        }
    }

    /// Rational interval (lo, hi) containing the chosen root of the minimal
    /// polynomial and no other root; the polynomial is negative at lo and
    /// positive at hi, and 1 <= lo.
    pub fn isolating_interval(self) -> (BigRational, BigRational) {
        match self {
            FieldId::SqrtN(n) => (rat_i64(1), rat_i64(n as i64)),
            FieldId::Phi => (rat_i64(1), rat_i64(2)),
            FieldId::Heptagon => (BigRational::new(BigInt::from(3), BigInt::from(2)), rat_i64(2)),
            FieldId::Sqrt2Phi => (rat_i64(2), rat_i64(3)),
        }
    }

    /// Name used in file formats: "sqrt2", "phi", "heptagon", "sqrt2phi".
    pub fn name(self) -> String {
        match self {
            FieldId::SqrtN(n) => format!("sqrt{n}"),
            FieldId::Phi => String::from("phi"),
            FieldId::Heptagon => String::from("heptagon"),
            FieldId::Sqrt2Phi => String::from("sqrt2phi"),
        }
    }

    pub fn parse_name(s: &str) -> Option<FieldId> {
        match s {
            "phi" => return Some(FieldId::Phi),
            "heptagon" => return Some(FieldId::Heptagon),
            "sqrt2phi" => return Some(FieldId::Sqrt2Phi),
            _ => {}
        }
        let digits = s.strip_prefix("sqrt")?;
        let n: u64 = digits.parse().ok()?;
        let (square, free) = squarefree_split(n);
        if square == 1 && free >= 2 {
            Some(FieldId::SqrtN(n))
        } else {
            None
        }
    }

    /// Symbol used when printing elements: coefficients of gamma powers.
    pub(crate) fn symbol(self) -> String {
        match self {
            FieldId::SqrtN(n) => format!("\u{221a}{n}"),
            FieldId::Phi => String::from("\u{3c6}"),
            FieldId::Heptagon => String::from("\u{3b1}"),
            FieldId::Sqrt2Phi => String::from("\u{3b3}"),
        }
    }
}

/// Write n = k^2 * m with m squarefree; returns (k, m).
pub(crate) fn squarefree_split(n: u64) -> (u64, u64) {
    let mut k = 1u64;
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        while m % (d * d) == 0 {
            m /= d * d;
            k *= d;
        }
        d += 1;
    }
    (k, m)
}

/// Horner evaluation, constant coefficient first.
pub(crate) fn eval_poly(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// One bisection step of the gamma interval, steered by the sign of the
/// minimal polynomial at the midpoint. Midpoints are rational and gamma is
/// irrational, so the polynomial never vanishes there.
fn bisect(min_poly: &[BigRational], lo: &mut BigRational, hi: &mut BigRational) {
    let mid = (lo.clone() + hi.clone()) / rat_i64(2);
    if eval_poly(min_poly, &mid).is_negative() {
        *lo = mid;
    } else {
        *hi = mid;
    }
}

/// Evaluate sum c_i x^i over the interval [lo, hi] with 0 < lo, returning an
/// enclosing interval of the value.
fn eval_on_interval(
    coeffs: &[BigRational],
    lo: &BigRational,
    hi: &BigRational,
) -> (BigRational, BigRational) {
    let mut pow_lo = BigRational::one();
    let mut pow_hi = BigRational::one();
    let mut out_lo = BigRational::zero();
    let mut out_hi = BigRational::zero();
    for c in coeffs {
        if c.is_positive() {
            out_lo += c * &pow_lo;
            out_hi += c * &pow_hi;
        } else {
            out_lo += c * &pow_hi;
            out_hi += c * &pow_lo;
        }
        pow_lo *= lo;
        pow_hi *= hi;
    }
    (out_lo, out_hi)
}

/// Exact sign (-1, 0, +1) of sum c_i gamma^i.
pub(crate) fn sign_at_gamma(field: FieldId, coeffs: &[BigRational]) -> i32 {
    if coeffs.iter().all(|c| c.is_zero()) {
        return 0;
    }
    let m = field.min_poly();
    let (mut lo, mut hi) = field.isolating_interval();
    for _ in 0..512 {
        let (vlo, vhi) = eval_on_interval(coeffs, &lo, &hi);
        if vlo.is_positive() {
            return 1;
        }
        if vhi.is_negative() {
            return -1;
        }
        for _ in 0..4 {
            bisect(&m, &mut lo, &mut hi);
        }
    }
    unreachable!("sign refinement did not converge; nonzero element vanished at gamma?")
}

/// gamma enclosed to width 2^-bits, returned as the midpoint.
fn gamma_approx(field: FieldId, bits: u32) -> BigRational {
    let m = field.min_poly();
    let (mut lo, mut hi) = field.isolating_interval();
    let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
    while &hi - &lo > target {
        bisect(&m, &mut lo, &mut hi);
    }
    (lo + hi) / rat_i64(2)
}

/// f64 value of sum c_i gamma^i: evaluated exactly at a tight rational
/// enclosure of gamma, then rounded once.
pub(crate) fn value_f64(field: FieldId, coeffs: &[BigRational]) -> f64 {
    let g = gamma_approx(field, 96);
    eval_poly(coeffs, &g).to_f64().unwrap_or(f64::NAN)
}

// ---- polynomial arithmetic over Q, used for reduction and inversion ----

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    poly_trim(&mut out);
    out
}

/// Remainder and quotient of a by b (b nonzero), coefficients over Q.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = a.to_vec();
    poly_trim(&mut rem);
    let mut bb = b.to_vec();
    poly_trim(&mut bb);
    assert!(!bb.is_empty(), "polynomial division by zero");
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = &rem[dr] / &lead;
        quot[dr - db] = c.clone();
        let shift = dr - db;
        for (i, bi) in bb.iter().enumerate() {
            let t = &c * bi;
            rem[shift + i] -= t;
        }
        poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    (quot, rem)
}

/// Reduce a polynomial in gamma modulo the minimal polynomial; result has
/// exactly field.degree() coefficients.
pub(crate) fn reduce(field: FieldId, coeffs: &[BigRational]) -> Vec<BigRational> {
    let deg = field.degree();
    let mut out = if coeffs.len() > deg {
        let (_, rem) = poly_divmod(coeffs, &field.min_poly());
        rem
    } else {
        coeffs.to_vec()
    };
    out.resize(deg, BigRational::zero());
    out
}

/// Multiplicative inverse of a nonzero element modulo the minimal
/// polynomial, by the extended Euclidean algorithm: the minimal polynomial
/// is irreducible, so the gcd with any nonzero reduced element is constant.
pub(crate) fn invert(field: FieldId, coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut r0 = field.min_poly();
    let mut r1 = coeffs.to_vec();
    poly_trim(&mut r1);
    assert!(!r1.is_empty(), "inverse of zero in {:?}", field);
    let mut t0: Vec<BigRational> = Vec::new();
    let mut t1 = vec![BigRational::one()];
    while r1.len() > 1 {
        let (q, r) = poly_divmod(&r0, &r1);
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = core::mem::replace(&mut r1, r);
        t0 = core::mem::replace(&mut t1, t);
    }
    let c = r1.pop().expect("gcd with irreducible minimal polynomial is a nonzero constant");
    let inv: Vec<BigRational> = t1.iter().map(|t| t / &c).collect();
    reduce(field, &inv)
}
