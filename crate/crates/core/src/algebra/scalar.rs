//! The scalar type shared by every frieze computation.
//!
//! A [`Scalar`] is either an exact rational, an exact element of one of the
//! supported real fields, or an `f64`. Rationals mix freely with algebraic
//! elements (they embed into every field); exact and float never mix, and
//! two distinct algebraic fields never mix. Violations are bugs in the
//! caller, so the arithmetic panics rather than propagating errors; code
//! that accepts user-supplied values checks compatibility up front.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{self, FieldId};

/// Which arithmetic a value (or a whole frieze) lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Float,
}

/// An element of Q(gamma), stored as a coefficient vector of length
/// `field.degree()` in the power basis of gamma.
#[derive(Clone, Debug)]
pub struct AlgebraicElement {
    field: FieldId,
    coeffs: Vec<BigRational>,
}

impl AlgebraicElement {
    pub fn new(field: FieldId, coeffs: Vec<BigRational>) -> Self {
        AlgebraicElement {
            field,
            coeffs: field::reduce(field, &coeffs),
        }
    }

    pub fn from_rational(field: FieldId, r: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); field.degree()];
        coeffs[0] = r;
        AlgebraicElement { field, coeffs }
    }

    pub fn generator(field: FieldId) -> Self {
        let mut coeffs = vec![BigRational::zero(); field.degree()];
        coeffs[1] = BigRational::one();
        AlgebraicElement { field, coeffs }
    }

    pub fn field(&self) -> FieldId {
        self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Some(r) when the element lies in Q.
    pub fn rational_part(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn sign(&self) -> i32 {
        field::sign_at_gamma(self.field, &self.coeffs)
    }

    pub fn to_f64(&self) -> f64 {
        field::value_f64(self.field, &self.coeffs)
    }

    fn add(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        AlgebraicElement { field: self.field, coeffs }
    }

    fn sub(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        AlgebraicElement { field: self.field, coeffs }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut raw = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        AlgebraicElement {
            field: self.field,
            coeffs: field::reduce(self.field, &raw),
        }
    }

    fn inv(&self) -> Self {
        AlgebraicElement {
            field: self.field,
            coeffs: field::invert(self.field, &self.coeffs),
        }
    }

    fn neg(&self) -> Self {
        AlgebraicElement {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for AlgebraicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.field.symbol();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let coeff_part = if k == 0 {
                format!("{mag}")
            } else if mag.is_one() {
                String::new()
            } else if mag.is_integer() {
                format!("{mag}")
            } else {
                format!("({mag})")
            };
            write!(f, "{coeff_part}")?;
            if k >= 1 {
                write!(f, "{sym}")?;
                if k >= 2 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// A frieze entry: exact rational, exact algebraic, or floating point.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Algebraic(AlgebraicElement),
    Float(f64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_int(k: i64) -> Self {
        Scalar::Rational(field::rat_i64(k))
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Scalar::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn float(x: f64) -> Self {
        Scalar::Float(x)
    }

    /// An integer literal in the same backend as `like`, so that family
    /// formulas stay backend-generic.
    pub fn integer_like(k: i64, like: &Scalar) -> Self {
        match like {
            Scalar::Float(_) => Scalar::Float(k as f64),
            _ => Scalar::from_int(k),
        }
    }

    /// Exact square root of a non-negative integer: n = k^2 m with m
    /// squarefree gives k * gamma in Q(sqrt(m)), or a plain integer when m
    /// is 1.
    pub fn sqrt(n: u64) -> Self {
        let (k, m) = field::squarefree_split(n);
        if m == 1 {
            return Scalar::from_int(k as i64);
        }
        let el = AlgebraicElement::new(
            FieldId::SqrtN(m),
            vec![BigRational::zero(), field::rat_i64(k as i64)],
        );
        Scalar::Algebraic(el)
    }

    pub fn generator(field: FieldId) -> Self {
        Scalar::Algebraic(AlgebraicElement::generator(field))
    }

    /// Build a scalar from an algebraic element, demoting to a plain
    /// rational when the non-constant coefficients vanish.
    pub fn algebraic(el: AlgebraicElement) -> Self {
        Scalar::normalized(el)
    }

    /// The golden ratio in Q(phi).
    pub fn phi() -> Self {
        Scalar::generator(FieldId::Phi)
    }

    /// 2cos(pi/7) in the heptagon field.
    pub fn heptagon_alpha() -> Self {
        Scalar::generator(FieldId::Heptagon)
    }

    /// 2cos(pi/7)^2 - 1 = sin(3pi/7)/sin(pi/7) in the heptagon field.
    pub fn heptagon_beta() -> Self {
        Scalar::Algebraic(AlgebraicElement::new(
            FieldId::Heptagon,
            vec![field::rat_i64(-1), field::rat_i64(0), field::rat_i64(1)],
        ))
    }

    /// sqrt(2) phi, the generator of the degree four field it names.
    pub fn sqrt2_phi() -> Self {
        Scalar::generator(FieldId::Sqrt2Phi)
    }

    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Float(_) => Backend::Float,
            _ => Backend::Exact,
        }
    }

    pub fn field(&self) -> Option<FieldId> {
        match self {
            Scalar::Algebraic(el) => Some(el.field()),
            _ => None,
        }
    }

    pub fn as_float(&self) -> Option<f64> {
        match self {
            Scalar::Float(x) => Some(*x),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_algebraic(&self) -> Option<&AlgebraicElement> {
        match self {
            Scalar::Algebraic(el) => Some(el),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Algebraic(el) => el.is_zero(),
            Scalar::Float(x) => *x == 0.0,
        }
    }

    /// Sign of the value: exact for exact backends.
    pub fn sign(&self) -> i32 {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Algebraic(el) => el.sign(),
            Scalar::Float(x) => {
                if *x > 0.0 {
                    1
                } else if *x < 0.0 {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Algebraic(el) => el.to_f64(),
            Scalar::Float(x) => *x,
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::integer_like(1, self);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn recip(&self) -> Scalar {
        &Scalar::integer_like(1, self) / self
    }

    /// True when the two values can appear in one computation: same
    /// backend, and at most one algebraic field between them.
    pub fn compatible(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Float(_), Scalar::Float(_)) => true,
            (Scalar::Float(_), _) | (_, Scalar::Float(_)) => false,
            (Scalar::Algebraic(a), Scalar::Algebraic(b)) => a.field() == b.field(),
            _ => true,
        }
    }

    /// Demote an algebraic element that happens to be rational.
    fn normalized(el: AlgebraicElement) -> Scalar {
        match el.rational_part() {
            Some(r) => Scalar::Rational(r),
            None => Scalar::Algebraic(el),
        }
    }

    fn promote(r: &BigRational, field: FieldId) -> AlgebraicElement {
        AlgebraicElement::from_rational(field, r.clone())
    }
}

enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

fn apply(op: &Op, a: &Scalar, b: &Scalar) -> Scalar {
    match (a, b) {
        (Scalar::Float(x), Scalar::Float(y)) => Scalar::Float(match op {
            Op::Add => x + y,
            Op::Sub => x - y,
            Op::Mul => x * y,
            Op::Div => x / y,
        }),
        (Scalar::Float(_), _) | (_, Scalar::Float(_)) => {
            panic!("mixed float and exact scalars")
        }
        (Scalar::Rational(x), Scalar::Rational(y)) => match op {
            Op::Add => Scalar::Rational(x + y),
            Op::Sub => Scalar::Rational(x - y),
            Op::Mul => Scalar::Rational(x * y),
            Op::Div => {
                assert!(!y.is_zero(), "division by zero");
                Scalar::Rational(x / y)
            }
        },
        _ => {
            let (x, y) = match (a, b) {
                (Scalar::Algebraic(x), Scalar::Algebraic(y)) => {
                    assert!(
                        x.field() == y.field(),
                        "mixed algebraic fields {:?} and {:?}",
                        x.field(),
                        y.field()
                    );
                    (x.clone(), y.clone())
                }
                (Scalar::Rational(r), Scalar::Algebraic(y)) => {
                    (Scalar::promote(r, y.field()), y.clone())
                }
                (Scalar::Algebraic(x), Scalar::Rational(r)) => {
                    let f = x.field();
                    (x.clone(), Scalar::promote(r, f))
                }
                _ => unreachable!(),
            };
            let out = match op {
                Op::Add => x.add(&y),
                Op::Sub => x.sub(&y),
                Op::Mul => x.mul(&y),
                Op::Div => {
                    assert!(!y.is_zero(), "division by zero");
                    x.mul(&y.inv())
                }
            };
            Scalar::normalized(out)
        }
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl core::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                apply(&$op, self, rhs)
            }
        }
        impl core::ops::$trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                apply(&$op, self, &rhs)
            }
        }
        impl core::ops::$trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                apply(&$op, &self, rhs)
            }
        }
        impl core::ops::$trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                apply(&$op, &self, &rhs)
            }
        }
    };
}

impl_binop!(Add, add, Op::Add);
impl_binop!(Sub, sub, Op::Sub);
impl_binop!(Mul, mul, Op::Mul);
impl_binop!(Div, div, Op::Div);

impl core::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Float(x) => Scalar::Float(-x),
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Algebraic(el) => Scalar::Algebraic(el.neg()),
        }
    }
}

impl core::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Value equality. Exact values compare exactly (rationals embed into the
/// field); values of different backends or of two distinct algebraic fields
/// compare unequal.
impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if !self.compatible(other) {
            return false;
        }
        match (self, other) {
            (Scalar::Float(x), Scalar::Float(y)) => x == y,
            _ => (self - other).is_zero(),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if !self.compatible(other) {
            return None;
        }
        match (self, other) {
            (Scalar::Float(x), Scalar::Float(y)) => x.partial_cmp(y),
            _ => Some(match (self - other).sign() {
                1 => Ordering::Greater,
                -1 => Ordering::Less,
                _ => Ordering::Equal,
            }),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Float(x) => write!(f, "{x}"),
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Algebraic(el) => write!(f, "{el}"),
        }
    }
}
