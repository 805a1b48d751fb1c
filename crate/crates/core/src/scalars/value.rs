//! Exact evaluation of Puiseux terms at an index.
//!
//! A term `c·n^(p/q)` evaluated at a concrete `n` is generally irrational.
//! [`ExactValue`] keeps such values exact as rational combinations of
//! canonical radical monomials: products of prime powers with fractional
//! exponents in `(0,1)`. Distinct canonical monomials are linearly
//! independent over ℚ, so an `ExactValue` is rational exactly when no
//! radical term survives — which makes "is this germ rational at index k"
//! decidable.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::ratio;

/// A canonical radical monomial: `∏ pᵢ^(eᵢ)` with primes `pᵢ` strictly
/// increasing and exponents `eᵢ ∈ (0,1)` rational. The empty product is 1.
pub type RadicalKey = Vec<(u64, BigRational)>;

/// An exact value `Σ c_k · k` over canonical radical monomials `k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExactValue {
    terms: BTreeMap<RadicalKey, BigRational>,
}

impl ExactValue {
    pub fn zero() -> Self {
        ExactValue::default()
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut v = ExactValue::zero();
        v.add_term(Vec::new(), r);
        v
    }

    /// Evaluates `coef·n^exp` exactly, for `n ≥ 1`.
    ///
    /// # Panics
    /// Panics if `n == 0` (no convention is defined here; callers handle
    /// index 0 separately) or if an intermediate integer exponent overflows.
    pub fn monomial(coef: &BigRational, exp: &BigRational, n: u64) -> Self {
        assert!(n >= 1, "evaluation index must be >= 1");
        if coef.is_zero() {
            return ExactValue::zero();
        }
        if n == 1 {
            return ExactValue::from_rational(coef.clone());
        }
        let mut rational = coef.clone();
        let mut key: RadicalKey = Vec::new();
        for (prime, mult) in factor(n) {
            // prime contributes exponent mult*exp = whole + frac, frac ∈ [0,1)
            let total = ratio::int(mult as i64) * exp;
            let whole = total.floor();
            let frac = &total - &whole;
            let whole: i64 =
                i64::try_from(whole.to_integer()).expect("integer part of exponent out of range");
            rational *= ratio::pow_i64(&ratio::int(prime as i64), whole);
            if !frac.is_zero() {
                key.push((prime, frac));
            }
        }
        let mut v = ExactValue::zero();
        v.add_term(key, rational);
        v
    }

    pub fn add_assign(&mut self, other: &ExactValue) {
        for (key, coef) in &other.terms {
            self.add_term(key.clone(), coef.clone());
        }
    }

    fn add_term(&mut self, key: RadicalKey, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        let now_zero = {
            let entry = self
                .terms
                .entry(key.clone())
                .or_insert_with(BigRational::zero);
            *entry += coef;
            entry.is_zero()
        };
        if now_zero {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no radical monomial survives.
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|k| k.is_empty())
    }

    /// The value as a rational, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(coef) = self.terms.get(&Vec::new()) {
                return Some(coef.clone());
            }
        }
        None
    }

    /// Sign of the value when it is rational; `None` otherwise.
    pub fn rational_sign(&self) -> Option<i8> {
        self.as_rational().map(|r| {
            if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }
        })
    }
}

/// Prime factorization of `n ≥ 2` by trial division, `(prime, multiplicity)`
/// pairs in increasing prime order.
pub fn factor(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut mult = 0;
            while n.is_multiple_of(p) {
                n /= p;
                mult += 1;
            }
            out.push((p, mult));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ratio::{int, ratio};

    #[test]
    fn factor_small_numbers() {
        assert_eq!(factor(2), vec![(2, 1)]);
        assert_eq!(factor(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factor(97), vec![(97, 1)]);
        assert_eq!(factor(100), vec![(2, 2), (5, 2)]);
    }

    #[test]
    fn integer_exponents_stay_rational() {
        let v = ExactValue::monomial(&ratio(3, 2), &int(2), 6);
        assert_eq!(v.as_rational(), Some(int(54)));
        let v = ExactValue::monomial(&int(1), &int(-2), 3);
        assert_eq!(v.as_rational(), Some(ratio(1, 9)));
    }

    #[test]
    fn perfect_powers_extract_rational_part() {
        // 4^(1/2) = 2
        let v = ExactValue::monomial(&int(1), &ratio(1, 2), 4);
        assert_eq!(v.as_rational(), Some(int(2)));
        // 8^(1/3) = 2, 16^(1/4) = 2
        let v = ExactValue::monomial(&int(1), &ratio(1, 3), 8);
        assert_eq!(v.as_rational(), Some(int(2)));
        let v = ExactValue::monomial(&int(1), &ratio(1, 4), 16);
        assert_eq!(v.as_rational(), Some(int(2)));
    }

    #[test]
    fn irrational_values_are_detected() {
        let v = ExactValue::monomial(&int(1), &ratio(1, 2), 3);
        assert!(!v.is_rational());
        assert_eq!(v.as_rational(), None);
        // 8^(1/2) = 2·2^(1/2): rational part extracted, radical remains
        let v = ExactValue::monomial(&int(1), &ratio(1, 2), 8);
        assert!(!v.is_rational());
    }

    #[test]
    fn dependent_radicals_cancel() {
        // 8^(1/2) - 2*8^(1/6)... 8^(1/6) = 2^(1/2), 8^(1/2) = 2*2^(1/2),
        // so 8^(1/2) - 2*8^(1/6) = 0 exactly.
        let mut v = ExactValue::monomial(&int(1), &ratio(1, 2), 8);
        v.add_assign(&ExactValue::monomial(&int(-2), &ratio(1, 6), 8));
        assert!(v.is_zero());
        assert_eq!(v.as_rational(), Some(int(0)));
    }

    #[test]
    fn evaluation_at_one_sums_coefficients() {
        let mut v = ExactValue::monomial(&ratio(1, 3), &ratio(7, 2), 1);
        v.add_assign(&ExactValue::monomial(&ratio(2, 3), &ratio(-5, 4), 1));
        assert_eq!(v.as_rational(), Some(int(1)));
    }
}
