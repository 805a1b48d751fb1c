//! Small helpers over exact big rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `p/q` as an exact rational.
///
/// # Panics
/// Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// An integer as an exact rational.
pub fn int(p: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(p))
}

/// `base^exp` for a signed integer exponent.
///
/// # Panics
/// Panics when raising zero to a negative power.
pub fn pow_i64(base: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let mag = exp.unsigned_abs();
    let mut result = BigRational::one();
    let mut acc = base.clone();
    let mut e = mag;
    while e > 0 {
        if e & 1 == 1 {
            result *= &acc;
        }
        e >>= 1;
        if e > 0 {
            acc = &acc * &acc;
        }
    }
    if exp < 0 {
        assert!(!result.is_zero(), "zero raised to a negative power");
        result.recip()
    } else {
        result
    }
}

/// Exact square root of a nonnegative rational, when the result is rational.
pub fn sqrt_exact(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

/// Renders `p/q`, omitting the denominator when it is 1.
pub fn format(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with optional leading sign.
pub fn parse(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(p))
        }
    }
}

/// The generalized binomial coefficients `C(1/2, j)` for `j = 0..count`,
/// the coefficients of the series `(1+x)^(1/2) = Σ C(1/2,j) x^j`.
pub fn binomial_half(count: usize) -> Vec<BigRational> {
    let half = ratio(1, 2);
    let mut coeffs = Vec::with_capacity(count);
    let mut current = BigRational::one();
    for j in 0..count {
        if j > 0 {
            let factor = (&half - int(j as i64 - 1)) / int(j as i64);
            current *= factor;
        }
        coeffs.push(current.clone());
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_handles_signs() {
        assert_eq!(pow_i64(&ratio(2, 3), 3), ratio(8, 27));
        assert_eq!(pow_i64(&ratio(2, 3), -2), ratio(9, 4));
        assert_eq!(pow_i64(&ratio(5, 7), 0), int(1));
    }

    #[test]
    fn sqrt_exact_detects_squares() {
        assert_eq!(sqrt_exact(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(sqrt_exact(&int(2)), None);
        assert_eq!(sqrt_exact(&int(-4)), None);
        assert_eq!(sqrt_exact(&int(0)), Some(int(0)));
    }

    #[test]
    fn format_parse_roundtrip() {
        for r in [ratio(-3, 7), int(5), ratio(22, 4), int(0)] {
            assert_eq!(parse(&format(&r)).unwrap(), r);
        }
        assert_eq!(format(&ratio(22, 4)), "11/2");
        assert!(parse("1/0").is_none());
    }

    #[test]
    fn binomial_half_prefix() {
        // 1, 1/2, -1/8, 1/16, -5/128
        let c = binomial_half(5);
        assert_eq!(c[0], int(1));
        assert_eq!(c[1], ratio(1, 2));
        assert_eq!(c[2], ratio(-1, 8));
        assert_eq!(c[3], ratio(1, 16));
        assert_eq!(c[4], ratio(-5, 128));
    }
}
