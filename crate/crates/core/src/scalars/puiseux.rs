//! Puiseux polynomials: finite sums `Σ cᵢ·n^(eᵢ)` with exact rational
//! coefficients and rational exponents, viewed as functions of `n ≥ 1`.
//!
//! Terms are kept sorted by strictly decreasing exponent with no zero
//! coefficients, so the leading term is `terms[0]` and structural equality
//! is function equality (a nonzero Puiseux polynomial has only finitely
//! many positive roots).

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::value::ExactValue;

/// A Puiseux polynomial in normal form. The empty term list is the zero
/// function.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct PuiseuxPoly {
    terms: Vec<(BigRational, BigRational)>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        PuiseuxPoly::default()
    }

    /// The constant polynomial `c`.
    pub fn constant(c: BigRational) -> Self {
        PuiseuxPoly::monomial(BigRational::zero(), c)
    }

    /// The single term `coef·n^exp`.
    pub fn monomial(exp: BigRational, coef: BigRational) -> Self {
        if coef.is_zero() {
            PuiseuxPoly::zero()
        } else {
            PuiseuxPoly {
                terms: vec![(exp, coef)],
            }
        }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (BigRational, BigRational)>) -> Self {
        let mut poly = PuiseuxPoly::zero();
        for (exp, coef) in pairs {
            poly.add_term(exp, coef);
        }
        poly
    }

    fn add_term(&mut self, exp: BigRational, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        // terms are sorted by strictly decreasing exponent
        match self.terms.binary_search_by(|(e, _)| exp.cmp(e)) {
            Ok(i) => {
                self.terms[i].1 += coef;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (exp, coef)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` of the dominant term, if any.
    pub fn leading(&self) -> Option<(&BigRational, &BigRational)> {
        self.terms.first().map(|(e, c)| (e, c))
    }

    /// True when the polynomial is a single term (or zero is excluded by
    /// the caller); monomials are the representable invertible shapes.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when the polynomial is a constant (including zero).
    pub fn is_constant(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [(e, _)] => e.is_zero(),
            _ => false,
        }
    }

    /// The coefficient of `n^0`.
    pub fn constant_term(&self) -> BigRational {
        self.terms
            .iter()
            .find(|(e, _)| e.is_zero())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, &BigRational)> {
        self.terms.iter().map(|(e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn neg(&self) -> Self {
        PuiseuxPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = PuiseuxPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return PuiseuxPoly::zero();
        }
        PuiseuxPoly {
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by the monomial `coef·n^exp`.
    pub fn mul_monomial(&self, exp: &BigRational, coef: &BigRational) -> Self {
        if coef.is_zero() {
            return PuiseuxPoly::zero();
        }
        PuiseuxPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exp, c * coef))
                .collect(),
        }
    }

    /// Drops all terms with exponent ≤ `threshold`.
    pub fn truncate_below(&self, threshold: &BigRational) -> Self {
        PuiseuxPoly {
            terms: self
                .terms
                .iter()
                .take_while(|(e, _)| e > threshold)
                .cloned()
                .collect(),
        }
    }

    /// Exact evaluation at `n ≥ 1`.
    pub fn eval(&self, n: u64) -> ExactValue {
        let mut v = ExactValue::zero();
        for (e, c) in &self.terms {
            v.add_assign(&ExactValue::monomial(c, e, n));
        }
        v
    }

    /// Sign of the function for all sufficiently large `n`: the sign of the
    /// leading coefficient, or 0 for the zero polynomial.
    pub fn eventual_sign(&self) -> i8 {
        match self.leading() {
            None => 0,
            Some((_, c)) => {
                if c.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Compares two polynomials as functions for all sufficiently large `n`.
    /// This is a total order for each fixed pair (eventual trichotomy).
    pub fn cmp_eventually(&self, other: &Self) -> Ordering {
        match self.sub(other).eventual_sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    /// The eventually larger of the two polynomials.
    pub fn max_eventually(&self, other: &Self) -> Self {
        if self.cmp_eventually(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }
}

/// Renders the polynomial in the expression grammar, e.g.
/// `n^(3/2) - 2*n + 7/3`; the zero polynomial prints as `0`.
impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exp, coef)) in self.terms.iter().enumerate() {
            let neg = coef.is_negative();
            let mag = coef.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let power = if exp.is_zero() {
                None
            } else if exp.is_one() {
                Some("n".to_string())
            } else {
                Some(format!("n^({})", super::ratio::format(exp)))
            };
            match power {
                None => write!(f, "{}", super::ratio::format(&mag))?,
                Some(p) => {
                    if mag.is_one() {
                        write!(f, "{p}")?;
                    } else {
                        write!(f, "{}*{p}", super::ratio::format(&mag))?;
                    }
                }
            }
        }
        Ok(())
    }
}
