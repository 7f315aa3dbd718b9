//! Chebyshev-style recurrences and quantum integers.

use libm::sin;

use super::scalar::{Backend, Scalar};
use super::AlgebraError;

/// Normalized Chebyshev polynomials: p_{-1} = 0, p_0 = 1,
/// p_{m+1} = x p_m - p_{m-1}, so p_m(2cos t) = sin((m+1)t)/sin t.
pub fn chebyshev(m: i64, x: &Scalar) -> Scalar {
    assert!(m >= -1, "chebyshev index starts at -1, got {m}");
    let mut prev = Scalar::integer_like(0, x);
    let mut cur = Scalar::integer_like(1, x);
    if m == -1 {
        return prev;
    }
    for _ in 0..m {
        let next = &(x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Two-coloured Chebyshev pair (p^x_n, p^y_n):
/// p^x_{-1} = p^y_{-1} = 0, p^x_0 = p^y_0 = 1,
/// p^x_{n+1} = x p^y_n - p^x_{n-1} and symmetrically in y.
pub fn two_colour(n: i64, x: &Scalar, y: &Scalar) -> (Scalar, Scalar) {
    assert!(n >= -1, "two-coloured index starts at -1, got {n}");
    let mut px_prev = Scalar::integer_like(0, x);
    let mut py_prev = px_prev.clone();
    let mut px = Scalar::integer_like(1, x);
    let mut py = px.clone();
    if n == -1 {
        return (px_prev, py_prev);
    }
    for _ in 0..n {
        let px_next = &(x * &py) - &px_prev;
        let py_next = &(y * &px) - &py_prev;
        px_prev = px;
        py_prev = py;
        px = px_next;
        py = py_next;
    }
    (px, py)
}

/// Boundary polynomial q_m(lambda) for even m: the x-component of the
/// two-coloured pair at (x, y) = (1, lambda).
pub fn qpoly(m: u64, lambda: &Scalar) -> Result<Scalar, AlgebraError> {
    if m % 2 != 0 {
        return Err(AlgebraError::OddQuantumPolynomialIndex(m));
    }
    let one = Scalar::integer_like(1, lambda);
    Ok(two_colour(m as i64, &one, lambda).0)
}

/// Quantum integer [k] at the given level: sin(k pi/level)/sin(pi/level).
///
/// The float backend evaluates the sine ratio directly. The exact backend
/// exists at levels 4, 5, 6 and 7, where [2] = 2cos(pi/level) generates
/// Q(sqrt2), Q(phi), Q(sqrt3) and the heptagon field respectively; higher
/// [k] follow from the Chebyshev recurrence.
pub fn qint(k: u64, level: u64, backend: Backend) -> Result<Scalar, AlgebraError> {
    if level < 2 {
        return Err(AlgebraError::LevelTooSmall(level));
    }
    match backend {
        Backend::Float => {
            let step = core::f64::consts::PI / level as f64;
            Ok(Scalar::float(sin(k as f64 * step) / sin(step)))
        }
        Backend::Exact => {
            let gen2 = match level {
                4 => Scalar::sqrt(2),
                5 => Scalar::phi(),
                6 => Scalar::sqrt(3),
                7 => Scalar::heptagon_alpha(),
                _ => return Err(AlgebraError::UnsupportedExactLevel(level)),
            };
            Ok(chebyshev(k as i64 - 1, &gen2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BigRational;

    #[test]
    fn chebyshev_small_table() {
        let x = Scalar::from_int(5);
        assert_eq!(chebyshev(-1, &x), Scalar::from_int(0));
        assert_eq!(chebyshev(0, &x), Scalar::from_int(1));
        assert_eq!(chebyshev(1, &x), Scalar::from_int(5));
        assert_eq!(chebyshev(2, &x), Scalar::from_int(24)); // x^2 - 1
        assert_eq!(chebyshev(3, &x), Scalar::from_int(115)); // x^3 - 2x
    }

    #[test]
    fn chebyshev_cluster_identity() {
        // p_m^2 - p_{m+1} p_{m-1} = 1
        let x = Scalar::rational(7, 3);
        for m in 0..12 {
            let pm = chebyshev(m, &x);
            let up = chebyshev(m + 1, &x);
            let dn = chebyshev(m - 1, &x);
            assert_eq!(&(&pm * &pm) - &(&up * &dn), Scalar::one(), "m = {m}");
        }
    }

    #[test]
    fn two_colour_small_table() {
        let x = Scalar::rational(3, 1);
        let y = Scalar::rational(5, 1);
        assert_eq!(two_colour(1, &x, &y), (x.clone(), y.clone()));
        let (p2x, p2y) = two_colour(2, &x, &y);
        assert_eq!(p2x, Scalar::from_int(14)); // xy - 1
        assert_eq!(p2y, Scalar::from_int(14));
        let (p3x, _) = two_colour(3, &x, &y);
        assert_eq!(p3x, Scalar::from_int(39)); // x(xy - 2)
        let (p4x, p4y) = two_colour(4, &x, &y);
        assert_eq!(p4x, Scalar::from_int(181)); // (xy)^2 - 3xy + 1
        assert_eq!(p4y, p4x);
    }

    #[test]
    fn two_colour_collapses_to_chebyshev() {
        let x = Scalar::rational(9, 4);
        for n in -1..15 {
            let (px, py) = two_colour(n, &x, &x);
            let p = chebyshev(n, &x);
            assert_eq!(px, p);
            assert_eq!(py, p);
        }
    }

    #[test]
    fn two_colour_parity_structure() {
        // Even indices agree; odd indices satisfy y p^x = x p^y.
        let x = Scalar::rational(5, 2);
        let y = Scalar::rational(7, 3);
        for n in 0..16 {
            let (px, py) = two_colour(n, &x, &y);
            if n % 2 == 0 {
                assert_eq!(px, py, "n = {n}");
            } else {
                assert_eq!(&y * &px, &x * &py, "n = {n}");
            }
        }
    }

    #[test]
    fn qint_exact_levels() {
        // [2]^2 = 1 + [3] style checks plus the frieze boundary values
        // [level-1] = 1 and [level] = 0, exactly.
        for level in [4u64, 5, 6, 7] {
            let one = qint(level - 1, level, Backend::Exact).unwrap();
            assert_eq!(one, Scalar::one(), "level {level}");
            let zero = qint(level, level, Backend::Exact).unwrap();
            assert!(zero.is_zero(), "level {level}");
            for k in 1..level {
                let a = qint(k, level, Backend::Exact).unwrap();
                assert!(a.is_positive(), "[{k}] at level {level}");
            }
        }
        assert!(matches!(
            qint(2, 8, Backend::Exact),
            Err(AlgebraError::UnsupportedExactLevel(8))
        ));
    }

    #[test]
    fn qint_float_matches_exact() {
        for level in [4u64, 5, 6, 7] {
            for k in 0..=level {
                let e = qint(k, level, Backend::Exact).unwrap().to_f64();
                let f = qint(k, level, Backend::Float).unwrap().to_f64();
                assert!((e - f).abs() <= 1e-12 * e.abs().max(1.0), "[{k}]_{level}: {e} vs {f}");
            }
        }
    }

    #[test]
    fn qpoly_boundary_value() {
        // q_{w+1}(4 cos^2(pi/(w+3))) = 1 for odd w: the closure condition
        // of the 2-periodic type A family.
        for w in [1u64, 3, 5, 7, 9] {
            let l = (w + 3) as f64;
            let lam = {
                let c = libm::cos(core::f64::consts::PI / l);
                Scalar::float(4.0 * c * c)
            };
            let q = qpoly(w + 1, &lam).unwrap().to_f64();
            assert!((q - 1.0).abs() < 1e-12, "w = {w}: {q}");
        }
        assert!(matches!(
            qpoly(3, &Scalar::from_int(2)),
            Err(AlgebraError::OddQuantumPolynomialIndex(3))
        ));
    }

    #[test]
    fn two_colour_determinant_lemma_exact() {
        // p^x_n p^y_{n-2} = p^x_{n-1} p^y_{n-1} - 1 = p^y_n p^x_{n-2}.
        let x = Scalar::Rational(BigRational::new(13.into(), 7.into()));
        let y = Scalar::Rational(BigRational::new(11.into(), 5.into()));
        for n in 1..=30 {
            let (pxn, pyn) = two_colour(n, &x, &y);
            let (px1, py1) = two_colour(n - 1, &x, &y);
            let (px2, py2) = two_colour(n - 2, &x, &y);
            let mid = &(&px1 * &py1) - &Scalar::one();
            assert_eq!(&pxn * &py2, mid, "n = {n}");
            assert_eq!(&pyn * &px2, mid, "n = {n}");
        }
    }
}
