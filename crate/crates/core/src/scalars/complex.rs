//! Elements of the complex quotient algebra ℂ_F.
//!
//! A complex element is a pair of real components over the same filter;
//! `w = u + i·v` is zero exactly when both components are. Conjugation is
//! an involution whose fixed points are the embedded reals, and
//! `|z|² = Re(z)² + Im(z)²` stays inside the representation (the absolute
//! value itself generally does not — theorem checks compare squares).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::ratio;
use super::real::RpaReal;
use crate::error::{CoreError, Result};
use crate::filters::FilterSpec;

/// An element of ℂ_F: real and imaginary parts over one filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RpaComplex {
    re: RpaReal,
    im: RpaReal,
}

impl RpaComplex {
    pub fn new(re: RpaReal, im: RpaReal) -> Result<Self> {
        if re.filter() != im.filter() {
            return Err(CoreError::FilterMismatch);
        }
        Ok(RpaComplex { re, im })
    }

    /// Embeds a real element along `u ↦ u + i·0`.
    pub fn from_real(re: RpaReal) -> Self {
        let im = RpaReal::zero(re.filter().clone());
        RpaComplex { re, im }
    }

    /// Embeds a real element along `v ↦ i·v`.
    pub fn from_imag(im: RpaReal) -> Self {
        let re = RpaReal::zero(im.filter().clone());
        RpaComplex { re, im }
    }

    pub fn embed(re: BigRational, im: BigRational, filter: FilterSpec) -> Self {
        RpaComplex {
            re: RpaReal::embed(re, filter.clone()),
            im: RpaReal::embed(im, filter),
        }
    }

    pub fn from_ints(re: i64, im: i64, filter: FilterSpec) -> Self {
        RpaComplex::embed(ratio::int(re), ratio::int(im), filter)
    }

    pub fn zero(filter: FilterSpec) -> Self {
        RpaComplex::from_ints(0, 0, filter)
    }

    pub fn one(filter: FilterSpec) -> Self {
        RpaComplex::from_ints(1, 0, filter)
    }

    /// The imaginary unit.
    pub fn i(filter: FilterSpec) -> Self {
        RpaComplex::from_ints(0, 1, filter)
    }

    pub fn filter(&self) -> &FilterSpec {
        self.re.filter()
    }

    /// The real-component homomorphism.
    pub fn re_part(&self) -> &RpaReal {
        &self.re
    }

    /// The imaginary-component homomorphism.
    pub fn im_part(&self) -> &RpaReal {
        &self.im
    }

    /// Zero iff both components are zero.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn require_same_filter(&self, other: &RpaComplex) -> Result<()> {
        if self.filter() == other.filter() {
            Ok(())
        } else {
            Err(CoreError::FilterMismatch)
        }
    }

    pub fn checked_add(&self, other: &RpaComplex) -> Result<RpaComplex> {
        self.require_same_filter(other)?;
        Ok(RpaComplex {
            re: self.re.checked_add(&other.re)?,
            im: self.im.checked_add(&other.im)?,
        })
    }

    pub fn checked_sub(&self, other: &RpaComplex) -> Result<RpaComplex> {
        self.require_same_filter(other)?;
        Ok(RpaComplex {
            re: self.re.checked_sub(&other.re)?,
            im: self.im.checked_sub(&other.im)?,
        })
    }

    pub fn checked_mul(&self, other: &RpaComplex) -> Result<RpaComplex> {
        self.require_same_filter(other)?;
        let re = self
            .re
            .checked_mul(&other.re)?
            .checked_sub(&self.im.checked_mul(&other.im)?)?;
        let im = self
            .re
            .checked_mul(&other.im)?
            .checked_add(&self.im.checked_mul(&other.re)?)?;
        Ok(RpaComplex { re, im })
    }

    pub fn eq_elem(&self, other: &RpaComplex) -> Result<bool> {
        self.require_same_filter(other)?;
        Ok(self == other)
    }

    /// Complex conjugation, an involution fixing exactly the embedded reals.
    pub fn conj(&self) -> RpaComplex {
        RpaComplex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|² = Re(z)² + Im(z)²`, exact in ℝ_F. Zero iff `z` is zero.
    pub fn abs_squared(&self) -> RpaReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// `|Re z| + |Im z|`: an exact representable over-approximation of the
    /// absolute value, with `|z| ≤ |z|₁ ≤ √2·|z|` pointwise. Used for bound
    /// certificates.
    pub fn abs_one_norm(&self) -> RpaReal {
        &self.re.real_abs() + &self.im.real_abs()
    }

    /// Scales by a real element.
    pub fn scale(&self, c: &RpaReal) -> Result<RpaComplex> {
        Ok(RpaComplex {
            re: self.re.checked_mul(c)?,
            im: self.im.checked_mul(c)?,
        })
    }

    /// Inverse via `z⁻¹ = conj(z) / |z|²`; requires `|z|²` invertible with
    /// representable inverse.
    pub fn try_invert(&self) -> Result<RpaComplex> {
        let inv_norm = self.abs_squared().try_invert()?;
        self.conj().scale(&inv_norm)
    }

    pub fn checked_div(&self, other: &RpaComplex) -> Result<RpaComplex> {
        self.checked_mul(&other.try_invert()?)
    }

    /// Exact rational value (as a re/im pair) at index `n ≥ 1`.
    pub fn eval_at(&self, n: u64) -> Result<(BigRational, BigRational)> {
        Ok((self.re.eval_at(n)?, self.im.eval_at(n)?))
    }
}

impl fmt::Display for RpaComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})*i", self.im)
        } else {
            write!(f, "({}) + ({})*i", self.re, self.im)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &RpaComplex {
            type Output = RpaComplex;
            fn $method(self, rhs: &RpaComplex) -> RpaComplex {
                self.$checked(rhs).expect("filter mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &RpaComplex {
    type Output = RpaComplex;
    fn neg(self) -> RpaComplex {
        RpaComplex {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::germ::Germ;
    use crate::scalars::puiseux::PuiseuxPoly;
    use crate::scalars::ratio::int;

    fn frechet() -> FilterSpec {
        FilterSpec::Frechet
    }

    #[test]
    fn component_arithmetic() {
        let z = RpaComplex::from_ints(1, 2, frechet());
        let w = RpaComplex::from_ints(3, -1, frechet());
        // (1+2i)(3-i) = 5 + 5i
        assert_eq!(&z * &w, RpaComplex::from_ints(5, 5, frechet()));
        assert_eq!(&z + &w, RpaComplex::from_ints(4, 1, frechet()));
        let i = RpaComplex::i(frechet());
        assert_eq!(&i * &i, RpaComplex::from_ints(-1, 0, frechet()));
    }

    #[test]
    fn conjugation_is_an_involution() {
        let z = RpaComplex::from_ints(3, -7, frechet());
        assert_eq!(z.conj().conj(), z);
        // conj(z) = z forces the imaginary part to vanish
        let real = RpaComplex::from_real(RpaReal::omega(frechet()));
        assert_eq!(real.conj(), real);
        assert!(real.im_part().is_zero());
    }

    #[test]
    fn abs_squared_examples() {
        let z = RpaComplex::from_ints(1, 1, frechet());
        assert_eq!(z.abs_squared(), RpaReal::from_int(2, frechet()));
        // |1/n + i·n|² = n⁻² + n²
        let inv_n = RpaReal::new(
            frechet(),
            Germ::uniform(PuiseuxPoly::monomial(int(-1), int(1))),
        )
        .unwrap();
        let z = RpaComplex::new(inv_n, RpaReal::omega(frechet())).unwrap();
        let expected = RpaReal::new(
            frechet(),
            Germ::uniform(PuiseuxPoly::from_terms([
                (int(2), int(1)),
                (int(-2), int(1)),
            ])),
        )
        .unwrap();
        assert_eq!(z.abs_squared(), expected);
        // definiteness
        assert!(RpaComplex::zero(frechet()).abs_squared().is_zero());
        assert!(!z.abs_squared().is_zero());
    }

    #[test]
    fn squared_component_bounds() {
        // |Re z|², |Im z|² ≤ |z|² in the cone order, pointwise exactly
        let z = RpaComplex::from_ints(-3, 4, frechet());
        let abs2 = z.abs_squared();
        let re2 = &z.re_part().clone() * z.re_part();
        let im2 = &z.im_part().clone() * z.im_part();
        assert!(re2.leq(&abs2).unwrap());
        assert!(im2.leq(&abs2).unwrap());
    }

    #[test]
    fn inversion_of_embedded_complexes() {
        let z = RpaComplex::from_ints(3, 4, frechet());
        let inv = z.try_invert().unwrap();
        assert_eq!(&z * &inv, RpaComplex::one(frechet()));
        assert!(RpaComplex::zero(frechet()).try_invert().is_err());
    }

    #[test]
    fn one_norm_dominates_componentwise() {
        let z = RpaComplex::from_ints(-3, 4, frechet());
        assert_eq!(z.abs_one_norm(), RpaReal::from_int(7, frechet()));
        // |z|² ≤ (|z|₁)² exactly
        let one_norm_sq = &z.abs_one_norm() * &z.abs_one_norm();
        assert!(z.abs_squared().leq(&one_norm_sq).unwrap());
    }
}
