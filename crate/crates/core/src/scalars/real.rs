//! Elements of the real quotient algebra ℝ_F.
//!
//! An [`RpaReal`] is a germ in filter-specific normal form:
//!
//! * Fréchet — the germ is modulus-minimized, nothing else (finite edits
//!   are already invisible to germs);
//! * principal at `k` — the germ collapses to the constant equal to the
//!   representative's value at `k`, which must be rational;
//! * superset of `A` — residue classes meeting `A` only finitely often are
//!   zeroed, then the modulus is minimized.
//!
//! After normalization, equality in the quotient is structural identity,
//! and the order, sign, inversion, and classification questions are all
//! decided by leading-term inspection of the relevant residue classes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::germ::Germ;
use super::puiseux::PuiseuxPoly;
use super::ratio;
use crate::error::{CoreError, Result};
use crate::filters::FilterSpec;

/// The infinitesimal / finite / infinitely large trichotomy on one residue
/// class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Infinitesimal,
    Finite,
    InfinitelyLarge,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKind::Infinitesimal => write!(f, "Infinitesimal"),
            ClassKind::Finite => write!(f, "Finite"),
            ClassKind::InfinitelyLarge => write!(f, "InfinitelyLarge"),
        }
    }
}

/// Classification of an element, per relevant residue class. `Mixed` can
/// only arise for modulus > 1 when classes genuinely disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Infinitesimal,
    Finite,
    InfinitelyLarge,
    Mixed(Vec<ClassKind>),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Infinitesimal => write!(f, "Infinitesimal"),
            Classification::Finite => write!(f, "Finite"),
            Classification::InfinitelyLarge => write!(f, "InfinitelyLarge"),
            Classification::Mixed(kinds) => {
                write!(f, "Mixed(")?;
                for (i, k) in kinds.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{k}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Which residue classes at `modulus` the filter can observe infinitely
/// often (principal: the single class of the point).
pub fn relevance_mask(filter: &FilterSpec, modulus: u64) -> Vec<bool> {
    match filter {
        FilterSpec::Frechet => vec![true; modulus as usize],
        FilterSpec::PrincipalAt(k) => {
            let mut mask = vec![false; modulus as usize];
            mask[(k % modulus) as usize] = true;
            mask
        }
        FilterSpec::SupersetOf(base) => {
            let g = modulus.gcd(&base.modulus());
            (0..modulus)
                .map(|r| base.residues().iter().any(|&s| s % g == r % g))
                .collect()
        }
    }
}

/// An element of ℝ_F in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RpaReal {
    filter: FilterSpec,
    germ: Germ,
}

impl RpaReal {
    /// Normalizes `germ` into the quotient by `filter`.
    ///
    /// Under a principal filter the representative's value at the point must
    /// be rational (fractional powers of a non-perfect-power index are not);
    /// otherwise `IrrationalAtIndex` is returned.
    pub fn new(filter: FilterSpec, germ: Germ) -> Result<Self> {
        let germ = match &filter {
            FilterSpec::Frechet => germ,
            FilterSpec::PrincipalAt(k) => {
                let value = if *k == 0 {
                    germ.value_at_zero()
                } else {
                    germ.eval(*k)
                        .as_rational()
                        .ok_or(CoreError::IrrationalAtIndex { index: *k })?
                };
                Germ::constant(value)
            }
            FilterSpec::SupersetOf(base) => {
                let lcm = germ.modulus().lcm(&base.modulus());
                let lifted = germ.lift(lcm);
                let polys = lifted
                    .into_iter()
                    .enumerate()
                    .map(|(r, p)| {
                        if base.residues().contains(&(r as u64 % base.modulus())) {
                            p
                        } else {
                            PuiseuxPoly::zero()
                        }
                    })
                    .collect();
                Germ::new(lcm, polys)
            }
        };
        Ok(RpaReal { filter, germ })
    }

    /// Embeds an ordinary rational as a constant sequence. The embedding is
    /// an injective ring homomorphism for every supported filter.
    pub fn embed(x: BigRational, filter: FilterSpec) -> Self {
        RpaReal::new(filter, Germ::constant(x)).expect("constants are rational at every index")
    }

    pub fn from_int(x: i64, filter: FilterSpec) -> Self {
        RpaReal::embed(ratio::int(x), filter)
    }

    pub fn zero(filter: FilterSpec) -> Self {
        RpaReal::from_int(0, filter)
    }

    pub fn one(filter: FilterSpec) -> Self {
        RpaReal::from_int(1, filter)
    }

    /// The class of the identity sequence `(n)` — the canonical infinitely
    /// large element ω (under a principal filter it collapses to the point).
    pub fn omega(filter: FilterSpec) -> Self {
        RpaReal::new(filter, Germ::index()).expect("integer exponents are rational everywhere")
    }

    /// The class of a germ edited at finitely many indices. Finite edits
    /// vanish under Fréchet and superset filters; under a principal filter
    /// the edited value at the point wins.
    pub fn from_spec(
        germ: Germ,
        patches: &BTreeMap<u64, BigRational>,
        filter: FilterSpec,
    ) -> Result<Self> {
        if let FilterSpec::PrincipalAt(k) = &filter {
            if let Some(v) = patches.get(k) {
                return Ok(RpaReal::embed(v.clone(), filter));
            }
        }
        RpaReal::new(filter, germ)
    }

    pub fn filter(&self) -> &FilterSpec {
        &self.filter
    }

    pub fn germ(&self) -> &Germ {
        &self.germ
    }

    pub fn is_zero(&self) -> bool {
        self.germ.is_zero()
    }

    fn require_same_filter(&self, other: &RpaReal) -> Result<()> {
        if self.filter == other.filter {
            Ok(())
        } else {
            Err(CoreError::FilterMismatch)
        }
    }

    fn rebuild(&self, germ: Germ) -> RpaReal {
        RpaReal::new(self.filter.clone(), germ)
            .expect("normal-form operands produce rational principal values")
    }

    pub fn checked_add(&self, other: &RpaReal) -> Result<RpaReal> {
        self.require_same_filter(other)?;
        Ok(self.rebuild(self.germ.add(&other.germ)))
    }

    pub fn checked_sub(&self, other: &RpaReal) -> Result<RpaReal> {
        self.require_same_filter(other)?;
        Ok(self.rebuild(self.germ.sub(&other.germ)))
    }

    pub fn checked_mul(&self, other: &RpaReal) -> Result<RpaReal> {
        self.require_same_filter(other)?;
        Ok(self.rebuild(self.germ.mul(&other.germ)))
    }

    /// Equality in the quotient: the zero set of the difference belongs to
    /// the filter. Thanks to normal forms this is structural identity.
    pub fn eq_elem(&self, other: &RpaReal) -> Result<bool> {
        self.require_same_filter(other)?;
        Ok(self.germ == other.germ)
    }

    /// Eventual signs of the relevant residue classes.
    fn relevant_signs(&self) -> Vec<i8> {
        let mask = self.germ.relevant_classes(&self.filter);
        self.germ
            .class_polys()
            .iter()
            .zip(mask)
            .filter(|(_, keep)| *keep)
            .map(|(p, _)| p.eventual_sign())
            .collect()
    }

    /// True iff `{n | u_n ≥ 0}` belongs to the filter: every relevant class
    /// polynomial is zero or has positive leading coefficient.
    pub fn is_nonneg(&self) -> bool {
        self.relevant_signs().iter().all(|&s| s >= 0)
    }

    /// True iff `{n | u_n > 0}` belongs to the filter.
    pub fn is_strictly_positive(&self) -> bool {
        self.relevant_signs().iter().all(|&s| s > 0)
    }

    /// The cone partial order: `self ≤ other` iff `other − self` lies in
    /// the nonnegative cone. Both directions may fail simultaneously.
    pub fn leq(&self, other: &RpaReal) -> Result<bool> {
        Ok(other.checked_sub(self)?.is_nonneg())
    }

    /// Exact comparison under the partial order; `None` when incomparable.
    pub fn partial_cmp_elem(&self, other: &RpaReal) -> Result<Option<Ordering>> {
        let le = self.leq(other)?;
        let ge = other.leq(self)?;
        Ok(match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        })
    }

    /// True when the element is invertible in the quotient: every relevant
    /// class polynomial is nonzero (so the representative is eventually
    /// nonzero on every relevant class).
    pub fn is_invertible(&self) -> bool {
        let mask = self.germ.relevant_classes(&self.filter);
        self.germ
            .class_polys()
            .iter()
            .zip(mask)
            .filter(|(_, keep)| *keep)
            .all(|(p, _)| !p.is_zero())
    }

    /// The inverse, when it exists *and* stays in the representation:
    /// every relevant class must be a single term `c·n^e`. A zero or
    /// zero-divisor input reports `NotInvertible`; an invertible input
    /// whose inverse is not a Puiseux polynomial reports `Unrepresentable`.
    pub fn try_invert(&self) -> Result<RpaReal> {
        if !self.is_invertible() {
            return Err(CoreError::NotInvertible);
        }
        let mask = self.germ.relevant_classes(&self.filter);
        if self
            .germ
            .class_polys()
            .iter()
            .zip(&mask)
            .any(|(p, keep)| *keep && !p.is_monomial())
        {
            return Err(CoreError::Unrepresentable);
        }
        let polys = self
            .germ
            .class_polys()
            .iter()
            .zip(&mask)
            .map(|(p, keep)| {
                if *keep {
                    let (e, c) = p.leading().expect("relevant classes are nonzero");
                    PuiseuxPoly::monomial(-e.clone(), c.recip())
                } else {
                    PuiseuxPoly::zero()
                }
            })
            .collect();
        Ok(self.rebuild(Germ::new(self.germ.modulus(), polys)))
    }

    /// Divides by an invertible element with representable inverse.
    pub fn checked_div(&self, other: &RpaReal) -> Result<RpaReal> {
        self.checked_mul(&other.try_invert()?)
    }

    /// Re-expresses `self` in units of `unit`: `self · unit⁻¹`. The
    /// trichotomy of [`RpaReal::classify`] is relative to the unit, so a
    /// finite element can become infinitesimal in ω-units and vice versa.
    pub fn rescale(&self, unit: &RpaReal) -> Result<RpaReal> {
        self.checked_mul(&unit.try_invert()?)
    }

    /// Classifies into infinitesimal / finite / infinitely large per
    /// relevant class; disagreeing classes yield `Mixed`.
    pub fn classify(&self) -> Classification {
        let mask = self.germ.relevant_classes(&self.filter);
        let kinds: Vec<ClassKind> = self
            .germ
            .class_polys()
            .iter()
            .zip(mask)
            .filter(|(_, keep)| *keep)
            .map(|(p, _)| match p.leading() {
                None => ClassKind::Infinitesimal,
                Some((e, _)) => {
                    if e.is_negative() {
                        ClassKind::Infinitesimal
                    } else if e.is_zero() {
                        ClassKind::Finite
                    } else {
                        ClassKind::InfinitelyLarge
                    }
                }
            })
            .collect();
        debug_assert!(!kinds.is_empty(), "some class is always relevant");
        if kinds.iter().all(|k| *k == kinds[0]) {
            match kinds[0] {
                ClassKind::Infinitesimal => Classification::Infinitesimal,
                ClassKind::Finite => Classification::Finite,
                ClassKind::InfinitelyLarge => Classification::InfinitelyLarge,
            }
        } else {
            Classification::Mixed(kinds)
        }
    }

    /// The exact pointwise-eventual absolute value: flips each relevant
    /// class polynomial whose leading coefficient is negative. For
    /// nonnegative elements this is the identity, witnessing that the
    /// absolute value maps onto the nonnegative cone.
    pub fn real_abs(&self) -> RpaReal {
        let mask = self.germ.relevant_classes(&self.filter);
        let polys = self
            .germ
            .class_polys()
            .iter()
            .zip(mask)
            .map(|(p, keep)| {
                if keep && p.eventual_sign() < 0 {
                    p.neg()
                } else {
                    p.clone()
                }
            })
            .collect();
        self.rebuild(Germ::new(self.germ.modulus(), polys))
    }

    /// The pointwise-eventual maximum of two elements: per relevant class
    /// the eventually dominant polynomial. Within the representation this
    /// is the least upper bound, even when the pair is incomparable.
    pub fn classwise_max(&self, other: &RpaReal) -> Result<RpaReal> {
        self.require_same_filter(other)?;
        let lcm = self.germ.modulus().lcm(&other.germ.modulus());
        let a = self.germ.lift(lcm);
        let b = other.germ.lift(lcm);
        let mask = relevance_mask(&self.filter, lcm);
        let polys = a
            .iter()
            .zip(b.iter())
            .zip(mask)
            .map(|((p, q), keep)| {
                if keep {
                    p.max_eventually(q)
                } else {
                    PuiseuxPoly::zero()
                }
            })
            .collect();
        Ok(self.rebuild(Germ::new(lcm, polys)))
    }

    /// Truncated square root of a nonnegative element.
    ///
    /// Per relevant class the result is the binomial expansion of `√poly`
    /// around its leading term `c·n^e` (which needs `√c` rational),
    /// truncated below `e/2 − order·δ` where `δ` is the gap between the two
    /// leading exponents. The residual `result² − self` then has leading
    /// exponent at least `order` gap-steps below that of `self`. On
    /// uniform-gap inputs this keeps exactly `order` terms.
    ///
    /// Theorem checks never rely on this: they compare squared quantities.
    pub fn sqrt_nonneg(&self, order: u32) -> Result<RpaReal> {
        if !self.is_nonneg() {
            return Err(CoreError::NotNonneg);
        }
        let mask = self.germ.relevant_classes(&self.filter);
        let mut polys = Vec::with_capacity(self.germ.class_polys().len());
        for (p, keep) in self.germ.class_polys().iter().zip(mask) {
            if !keep || p.is_zero() {
                polys.push(PuiseuxPoly::zero());
                continue;
            }
            polys.push(sqrt_poly(p, order)?);
        }
        Ok(self.rebuild(Germ::new(self.germ.modulus(), polys)))
    }

    /// Exact rational value of the canonical representative at index
    /// `n ≥ 1`; errors when a fractional power makes it irrational.
    pub fn eval_at(&self, n: u64) -> Result<BigRational> {
        assert!(n >= 1, "evaluation index must be >= 1");
        self.germ
            .eval(n)
            .as_rational()
            .ok_or(CoreError::IrrationalValue { index: n })
    }
}

/// √poly as a truncated binomial series around the leading term.
fn sqrt_poly(p: &PuiseuxPoly, order: u32) -> Result<PuiseuxPoly> {
    let (e, c) = p.leading().expect("caller excludes zero polynomials");
    let sqrt_c = ratio::sqrt_exact(c).ok_or(CoreError::Unrepresentable)?;
    let half_e = e / ratio::int(2);
    if p.is_monomial() {
        return Ok(PuiseuxPoly::monomial(half_e, sqrt_c));
    }
    // p = c·n^e (1 + r), r strictly below 1 in exponent order
    let lead = PuiseuxPoly::monomial(e.clone(), c.clone());
    let tail = p.sub(&lead);
    let r = tail.mul_monomial(&-e.clone(), &c.recip());
    let gap = -r
        .leading()
        .expect("tail is nonzero for non-monomials")
        .0
        .clone();
    // threshold in r-space: drop exponents ≤ −order·gap (their squares land
    // below the residual contract anyway)
    let threshold = -(ratio::int(order as i64) * &gap);
    let coeffs = ratio::binomial_half(order as usize);
    let mut sum = PuiseuxPoly::zero();
    let mut r_pow = PuiseuxPoly::constant(BigRational::one());
    for (j, b) in coeffs.iter().enumerate() {
        if j > 0 {
            r_pow = r_pow.mul(&r).truncate_below(&threshold);
            if r_pow.is_zero() {
                break;
            }
        }
        sum = sum.add(&r_pow.scale(b));
    }
    let result_threshold = &half_e + &threshold;
    Ok(sum
        .mul_monomial(&half_e, &sqrt_c)
        .truncate_below(&result_threshold))
}

impl fmt::Display for RpaReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.germ)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &RpaReal {
            type Output = RpaReal;
            fn $method(self, rhs: &RpaReal) -> RpaReal {
                self.$checked(rhs).expect("filter mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &RpaReal {
    type Output = RpaReal;
    fn neg(self) -> RpaReal {
        self.rebuild(self.germ.neg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::IndexSet;
    use crate::scalars::ratio::{int, ratio};

    fn frechet() -> FilterSpec {
        FilterSpec::Frechet
    }

    fn superset_evens() -> FilterSpec {
        FilterSpec::superset_of(IndexSet::evens()).unwrap()
    }

    fn omega() -> RpaReal {
        RpaReal::omega(frechet())
    }

    fn inv_omega() -> RpaReal {
        RpaReal::new(
            frechet(),
            Germ::uniform(PuiseuxPoly::monomial(int(-1), int(1))),
        )
        .unwrap()
    }

    fn even_indicator(filter: FilterSpec) -> Result<RpaReal> {
        RpaReal::new(
            filter,
            Germ::new(2, vec![PuiseuxPoly::constant(int(1)), PuiseuxPoly::zero()]),
        )
    }

    fn odd_indicator(filter: FilterSpec) -> Result<RpaReal> {
        RpaReal::new(
            filter,
            Germ::new(2, vec![PuiseuxPoly::zero(), PuiseuxPoly::constant(int(1))]),
        )
    }

    #[test]
    fn embed_is_a_ring_homomorphism() {
        let two = RpaReal::embed(int(2), frechet());
        let three = RpaReal::embed(int(3), frechet());
        assert_eq!(&two + &three, RpaReal::embed(int(5), frechet()));
        let x = ratio(7, 3);
        let y = ratio(-5, 4);
        assert_eq!(
            &RpaReal::embed(x.clone(), frechet()) * &RpaReal::embed(y.clone(), frechet()),
            RpaReal::embed(&x * &y, frechet())
        );
    }

    #[test]
    fn from_spec_drops_finite_patches_under_frechet() {
        let patches: BTreeMap<u64, BigRational> = [(1u64, int(99))].into_iter().collect();
        let x = RpaReal::from_spec(Germ::index(), &patches, frechet()).unwrap();
        assert_eq!(x, omega());
    }

    #[test]
    fn from_spec_applies_patch_under_principal() {
        let patches: BTreeMap<u64, BigRational> = [(4u64, int(99))].into_iter().collect();
        let x = RpaReal::from_spec(Germ::index(), &patches, FilterSpec::PrincipalAt(4)).unwrap();
        assert_eq!(x, RpaReal::embed(int(99), FilterSpec::PrincipalAt(4)));
        // without the patch, the value at the point wins
        let y = RpaReal::from_spec(Germ::index(), &BTreeMap::new(), FilterSpec::PrincipalAt(4))
            .unwrap();
        assert_eq!(y, RpaReal::embed(int(4), FilterSpec::PrincipalAt(4)));
    }

    #[test]
    fn from_spec_of_zero_germ_is_zero() {
        for filter in [frechet(), FilterSpec::PrincipalAt(3), superset_evens()] {
            let z = RpaReal::from_spec(Germ::zero(), &BTreeMap::new(), filter.clone()).unwrap();
            assert!(z.is_zero(), "nonzero under {filter}");
        }
    }

    #[test]
    fn reciprocal_times_omega_is_one() {
        assert_eq!(&inv_omega() * &omega(), RpaReal::one(frechet()));
    }

    #[test]
    fn successor_minus_omega_is_one() {
        let n_plus_1 = &omega() + &RpaReal::one(frechet());
        assert_eq!(&n_plus_1 - &omega(), RpaReal::one(frechet()));
    }

    #[test]
    fn indicators_are_zero_divisors_under_frechet() {
        let e = even_indicator(frechet()).unwrap();
        let o = odd_indicator(frechet()).unwrap();
        assert!(!e.is_zero());
        assert!(!o.is_zero());
        assert!((&e * &o).is_zero());
    }

    #[test]
    fn indicators_collapse_under_principal() {
        let e = even_indicator(FilterSpec::PrincipalAt(4)).unwrap();
        assert_eq!(e, RpaReal::one(FilterSpec::PrincipalAt(4)));
        let one = RpaReal::one(FilterSpec::PrincipalAt(4));
        assert!(e.eq_elem(&one).unwrap());
        // under Fréchet the indicator differs from 1
        let e_f = even_indicator(frechet()).unwrap();
        assert!(!e_f.eq_elem(&RpaReal::one(frechet())).unwrap());
    }

    #[test]
    fn eq_requires_matching_filters() {
        let a = RpaReal::one(frechet());
        let b = RpaReal::one(FilterSpec::PrincipalAt(1));
        assert_eq!(a.eq_elem(&b), Err(CoreError::FilterMismatch));
        assert_ne!(a, b);
    }

    #[test]
    fn nonnegativity_is_eventual() {
        // n² − 1000 is eventually nonnegative (n ≥ 32) though negative early
        let p = PuiseuxPoly::from_terms([(int(2), int(1)), (int(0), int(-1000))]);
        let u = RpaReal::new(frechet(), Germ::uniform(p.clone())).unwrap();
        assert!(u.is_nonneg());
        for n in 1..32u64 {
            assert!(p.eval(n).as_rational().unwrap() < int(0));
        }
        for n in 32..64u64 {
            assert!(p.eval(n).as_rational().unwrap() >= int(0));
        }
        let neg = -&inv_omega();
        assert!(!neg.is_nonneg());
        assert!(RpaReal::zero(frechet()).is_nonneg());
    }

    #[test]
    fn order_is_partial() {
        let one = RpaReal::one(frechet());
        assert!(inv_omega().leq(&one).unwrap());
        // mod 2 {1, -1} is incomparable with 0
        let mixed = RpaReal::new(
            frechet(),
            Germ::new(
                2,
                vec![
                    PuiseuxPoly::constant(int(1)),
                    PuiseuxPoly::constant(int(-1)),
                ],
            ),
        )
        .unwrap();
        let zero = RpaReal::zero(frechet());
        assert!(!mixed.leq(&zero).unwrap());
        assert!(!zero.leq(&mixed).unwrap());
        assert_eq!(mixed.partial_cmp_elem(&zero).unwrap(), None);
        assert!(mixed.leq(&mixed).unwrap());
    }

    #[test]
    fn inversion_of_monomials() {
        let n_sq = &omega() * &omega();
        let inv = n_sq.try_invert().unwrap();
        assert_eq!(
            inv,
            RpaReal::new(
                frechet(),
                Germ::uniform(PuiseuxPoly::monomial(int(-2), int(1)))
            )
            .unwrap()
        );
        assert_eq!(&inv * &n_sq, RpaReal::one(frechet()));
    }

    #[test]
    fn zero_divisors_are_not_invertible() {
        let e = even_indicator(frechet()).unwrap();
        assert!(!e.is_invertible());
        assert_eq!(e.try_invert(), Err(CoreError::NotInvertible));
        // ...but under the evens filter the indicator *is* the unit 1
        let e_s = even_indicator(superset_evens()).unwrap();
        assert!(e_s.is_invertible());
    }

    #[test]
    fn non_monomial_inverse_is_unrepresentable() {
        let one_plus_eps = &RpaReal::one(frechet()) + &inv_omega();
        assert!(one_plus_eps.is_invertible());
        assert_eq!(one_plus_eps.try_invert(), Err(CoreError::Unrepresentable));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(inv_omega().classify(), Classification::Infinitesimal);
        let n2_plus_n = &(&omega() * &omega()) + &omega();
        assert_eq!(n2_plus_n.classify(), Classification::InfinitelyLarge);
        let mixed = RpaReal::new(
            frechet(),
            Germ::new(
                2,
                vec![
                    PuiseuxPoly::monomial(int(-1), int(1)),
                    PuiseuxPoly::monomial(int(1), int(1)),
                ],
            ),
        )
        .unwrap();
        assert_eq!(
            mixed.classify(),
            Classification::Mixed(vec![ClassKind::Infinitesimal, ClassKind::InfinitelyLarge])
        );
        assert_eq!(
            RpaReal::zero(frechet()).classify(),
            Classification::Infinitesimal
        );
    }

    #[test]
    fn rescaling_shifts_the_trichotomy() {
        let one = RpaReal::one(frechet());
        let rescaled = one.rescale(&omega()).unwrap();
        assert_eq!(rescaled, inv_omega());
        assert_eq!(rescaled.classify(), Classification::Infinitesimal);
        assert_eq!(omega().rescale(&omega()).unwrap(), RpaReal::one(frechet()));
        // an infinitesimal measured in its own units is finite
        let h0 = inv_omega();
        assert_eq!(
            h0.rescale(&inv_omega()).unwrap().classify(),
            Classification::Finite
        );
    }

    #[test]
    fn superset_normal_form_zeroes_irrelevant_classes() {
        let one = RpaReal::one(superset_evens());
        assert_eq!(one.germ().modulus(), 2);
        assert_eq!(one.germ().class_poly(0), &PuiseuxPoly::constant(int(1)));
        assert_eq!(one.germ().class_poly(1), &PuiseuxPoly::zero());
        assert!(one.is_nonneg());
        assert_eq!(one.classify(), Classification::Finite);
        // the odd indicator is zero in this quotient
        let o = odd_indicator(superset_evens()).unwrap();
        assert!(o.is_zero());
    }

    #[test]
    fn principal_normalization_requires_rational_values() {
        let sqrt_n = Germ::uniform(PuiseuxPoly::monomial(ratio(1, 2), int(1)));
        let ok = RpaReal::new(FilterSpec::PrincipalAt(4), sqrt_n.clone());
        assert_eq!(
            ok.unwrap(),
            RpaReal::embed(int(2), FilterSpec::PrincipalAt(4))
        );
        let err = RpaReal::new(FilterSpec::PrincipalAt(3), sqrt_n);
        assert_eq!(err, Err(CoreError::IrrationalAtIndex { index: 3 }));
    }

    #[test]
    fn principal_at_zero_uses_constant_term_convention() {
        let x = RpaReal::new(FilterSpec::PrincipalAt(0), Germ::index()).unwrap();
        assert!(x.is_zero());
        let c = RpaReal::embed(ratio(5, 2), FilterSpec::PrincipalAt(0));
        assert_eq!(c.eval_at(1).unwrap(), ratio(5, 2));
    }

    #[test]
    fn real_abs_flips_negative_classes() {
        let mixed = RpaReal::new(
            frechet(),
            Germ::new(
                2,
                vec![
                    PuiseuxPoly::constant(int(3)),
                    PuiseuxPoly::constant(int(-4)),
                ],
            ),
        )
        .unwrap();
        let abs = mixed.real_abs();
        assert!(abs.is_nonneg());
        assert_eq!(abs.eval_at(2).unwrap(), int(3));
        assert_eq!(abs.eval_at(3).unwrap(), int(4));
        // abs fixes the nonnegative cone pointwise
        let u = &omega() * &omega();
        assert_eq!(u.real_abs(), u);
    }

    #[test]
    fn classwise_max_dominates() {
        let a = omega();
        let b = inv_omega();
        let m = a.classwise_max(&b).unwrap();
        assert_eq!(m, a);
        let mixed1 = RpaReal::new(
            frechet(),
            Germ::new(2, vec![PuiseuxPoly::constant(int(1)), PuiseuxPoly::zero()]),
        )
        .unwrap();
        let mixed2 = RpaReal::new(
            frechet(),
            Germ::new(2, vec![PuiseuxPoly::zero(), PuiseuxPoly::constant(int(5))]),
        )
        .unwrap();
        let m = mixed1.classwise_max(&mixed2).unwrap();
        assert!(mixed1.leq(&m).unwrap());
        assert!(mixed2.leq(&m).unwrap());
    }

    #[test]
    fn sqrt_of_perfect_monomials() {
        let n_sq = &omega() * &omega();
        assert_eq!(n_sq.sqrt_nonneg(4).unwrap(), omega());
        let four = RpaReal::embed(int(4), frechet());
        assert_eq!(
            four.sqrt_nonneg(1).unwrap(),
            RpaReal::embed(int(2), frechet())
        );
    }

    #[test]
    fn sqrt_binomial_expansion_and_residual() {
        // √(n²+1) ≈ n + (1/2)n⁻¹, residual (n + n⁻¹/2)² − (n²+1) = n⁻²/4
        let u = RpaReal::new(
            frechet(),
            Germ::uniform(PuiseuxPoly::from_terms([
                (int(2), int(1)),
                (int(0), int(1)),
            ])),
        )
        .unwrap();
        let s = u.sqrt_nonneg(2).unwrap();
        let expected = RpaReal::new(
            frechet(),
            Germ::uniform(PuiseuxPoly::from_terms([
                (int(1), int(1)),
                (int(-1), ratio(1, 2)),
            ])),
        )
        .unwrap();
        assert_eq!(s, expected);
        let residual = &(&s * &s) - &u;
        let quarter = RpaReal::new(
            frechet(),
            Germ::uniform(PuiseuxPoly::monomial(int(-2), ratio(1, 4))),
        )
        .unwrap();
        assert_eq!(residual, quarter);
    }

    #[test]
    fn sqrt_rejects_negative_and_non_square_leads() {
        let minus_one = RpaReal::from_int(-1, frechet());
        assert_eq!(minus_one.sqrt_nonneg(2), Err(CoreError::NotNonneg));
        let two = RpaReal::embed(int(2), frechet());
        assert_eq!(two.sqrt_nonneg(2), Err(CoreError::Unrepresentable));
    }

    #[test]
    fn eval_at_examples() {
        let n_sq = &omega() * &omega();
        assert_eq!(n_sq.eval_at(3).unwrap(), int(9));
        let e = even_indicator(frechet()).unwrap();
        assert_eq!(e.eval_at(4).unwrap(), int(1));
        assert_eq!(e.eval_at(7).unwrap(), int(0));
        let sqrt_n = RpaReal::new(
            frechet(),
            Germ::uniform(PuiseuxPoly::monomial(ratio(1, 2), int(1))),
        )
        .unwrap();
        assert_eq!(sqrt_n.eval_at(9).unwrap(), int(3));
        assert_eq!(
            sqrt_n.eval_at(2),
            Err(CoreError::IrrationalValue { index: 2 })
        );
    }

    #[test]
    fn eval_at_is_pointwise_additive() {
        let a = RpaReal::new(
            frechet(),
            Germ::uniform(PuiseuxPoly::from_terms([
                (int(2), ratio(1, 3)),
                (int(-1), int(2)),
            ])),
        )
        .unwrap();
        let b = &omega() + &RpaReal::embed(ratio(7, 5), frechet());
        for n in [1u64, 2, 5, 12] {
            assert_eq!(
                (&a + &b).eval_at(n).unwrap(),
                a.eval_at(n).unwrap() + b.eval_at(n).unwrap()
            );
        }
    }
}
