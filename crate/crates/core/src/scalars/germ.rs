//! Sequence representatives: one Puiseux polynomial per residue class.
//!
//! A germ with modulus `m` and class polynomials `p₀ … p₋₁` denotes the
//! sequence `n ↦ p_{n mod m}(n)` for `n ≥ 1`. At index 0 the denoted value
//! is the constant term of `p₀` (the convention `0^e = 0` for `e ≠ 0`);
//! only the principal filter at 0 can observe that choice.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;

use super::puiseux::PuiseuxPoly;
use super::value::ExactValue;
use crate::filters::FilterSpec;

/// A residue-class family of Puiseux polynomials with minimal modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Germ {
    modulus: u64,
    class_polys: Vec<PuiseuxPoly>,
}

impl Germ {
    /// Builds a germ from one polynomial per residue class, minimizing the
    /// modulus.
    ///
    /// # Panics
    /// Panics if `modulus == 0` or the polynomial count differs from it.
    pub fn new(modulus: u64, class_polys: Vec<PuiseuxPoly>) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        assert_eq!(
            class_polys.len() as u64,
            modulus,
            "expected one polynomial per residue class"
        );
        Germ {
            modulus,
            class_polys,
        }
        .minimize()
    }

    /// A single polynomial on every class.
    pub fn uniform(poly: PuiseuxPoly) -> Self {
        Germ {
            modulus: 1,
            class_polys: vec![poly],
        }
    }

    pub fn zero() -> Self {
        Germ::uniform(PuiseuxPoly::zero())
    }

    pub fn constant(c: BigRational) -> Self {
        Germ::uniform(PuiseuxPoly::constant(c))
    }

    /// The identity sequence `n`.
    pub fn index() -> Self {
        Germ::uniform(PuiseuxPoly::monomial(
            BigRational::from_integer(1.into()),
            BigRational::from_integer(1.into()),
        ))
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn class_polys(&self) -> &[PuiseuxPoly] {
        &self.class_polys
    }

    pub fn class_poly(&self, class: u64) -> &PuiseuxPoly {
        &self.class_polys[(class % self.modulus) as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.class_polys.iter().all(PuiseuxPoly::is_zero)
    }

    /// Two distinct polynomials agree at only finitely many points, so the
    /// minimal modulus representing the same sequence divides the current
    /// one: it is the smallest divisor whose classes carry equal polynomials.
    fn minimize(self) -> Self {
        if self.modulus == 1 {
            return self;
        }
        for d in divisors(self.modulus) {
            let matches = (0..self.modulus)
                .all(|r| self.class_polys[r as usize] == self.class_polys[(r % d) as usize]);
            if matches {
                if d == self.modulus {
                    return self;
                }
                return Germ {
                    modulus: d,
                    class_polys: self.class_polys[..d as usize].to_vec(),
                };
            }
        }
        unreachable!("modulus divides itself");
    }

    /// The same sequence expressed at a larger modulus (`target` must be a
    /// multiple of the current one).
    pub fn lift(&self, target: u64) -> Vec<PuiseuxPoly> {
        debug_assert!(target.is_multiple_of(self.modulus));
        (0..target)
            .map(|r| self.class_polys[(r % self.modulus) as usize].clone())
            .collect()
    }

    /// Classwise binary operation at the merged modulus.
    pub fn zip_with(
        &self,
        other: &Germ,
        op: impl Fn(&PuiseuxPoly, &PuiseuxPoly) -> PuiseuxPoly,
    ) -> Germ {
        let lcm = self.modulus.lcm(&other.modulus);
        let a = self.lift(lcm);
        let b = other.lift(lcm);
        let polys = a.iter().zip(b.iter()).map(|(p, q)| op(p, q)).collect();
        Germ::new(lcm, polys)
    }

    /// Classwise unary operation.
    pub fn map(&self, op: impl Fn(&PuiseuxPoly) -> PuiseuxPoly) -> Germ {
        Germ::new(self.modulus, self.class_polys.iter().map(op).collect())
    }

    pub fn add(&self, other: &Germ) -> Germ {
        self.zip_with(other, PuiseuxPoly::add)
    }

    pub fn sub(&self, other: &Germ) -> Germ {
        self.zip_with(other, PuiseuxPoly::sub)
    }

    pub fn mul(&self, other: &Germ) -> Germ {
        self.zip_with(other, PuiseuxPoly::mul)
    }

    pub fn neg(&self) -> Germ {
        self.map(PuiseuxPoly::neg)
    }

    /// Exact value of the denoted sequence at `n ≥ 1`.
    pub fn eval(&self, n: u64) -> ExactValue {
        assert!(n >= 1);
        self.class_poly(n).eval(n)
    }

    /// The denoted value at index 0 (constant-term convention).
    pub fn value_at_zero(&self) -> BigRational {
        self.class_polys[0].constant_term()
    }

    /// Which residue classes (at this germ's modulus) matter to the filter:
    /// classes whose intersection with every filter set is infinite (for
    /// Fréchet and SupersetOf) or which contain the principal point.
    pub fn relevant_classes(&self, filter: &FilterSpec) -> Vec<bool> {
        match filter {
            FilterSpec::Frechet => vec![true; self.modulus as usize],
            FilterSpec::PrincipalAt(k) => {
                let mut mask = vec![false; self.modulus as usize];
                mask[(k % self.modulus) as usize] = true;
                mask
            }
            FilterSpec::SupersetOf(base) => {
                // class r (mod m) meets the base in an infinite set iff some
                // base residue is congruent to r modulo gcd(m, base modulus)
                let g = self.modulus.gcd(&base.modulus());
                (0..self.modulus)
                    .map(|r| base.residues().iter().any(|&s| s % g == r % g))
                    .collect()
            }
        }
    }
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 1 {
            return write!(f, "{}", self.class_polys[0]);
        }
        write!(f, "class mod {} {{ ", self.modulus)?;
        for (i, p) in self.class_polys.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, " }}")
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::IndexSet;
    use crate::scalars::ratio::{int, ratio};

    fn mono(e: i64, c: i64) -> PuiseuxPoly {
        PuiseuxPoly::monomial(int(e), int(c))
    }

    #[test]
    fn minimization_collapses_equal_classes() {
        let g = Germ::new(4, vec![mono(1, 1), mono(0, 2), mono(1, 1), mono(0, 2)]);
        assert_eq!(g.modulus(), 2);
        let g = Germ::new(2, vec![mono(1, 1), mono(1, 1)]);
        assert_eq!(g.modulus(), 1);
    }

    #[test]
    fn zip_lifts_to_lcm() {
        let a = Germ::new(2, vec![mono(0, 1), PuiseuxPoly::zero()]);
        let b = Germ::new(
            3,
            vec![mono(0, 1), PuiseuxPoly::zero(), PuiseuxPoly::zero()],
        );
        let s = a.add(&b);
        assert_eq!(s.modulus(), 6);
        // n ≡ 0 (mod 6): both indicators are 1
        assert_eq!(s.class_poly(0), &mono(0, 2));
        assert_eq!(s.class_poly(2), &mono(0, 1));
        assert_eq!(s.class_poly(5), &PuiseuxPoly::zero());
    }

    #[test]
    fn eval_picks_the_right_class() {
        let g = Germ::new(2, vec![mono(0, 1), PuiseuxPoly::zero()]);
        assert_eq!(g.eval(4).as_rational(), Some(int(1)));
        assert_eq!(g.eval(7).as_rational(), Some(int(0)));
        assert_eq!(g.value_at_zero(), int(1));
    }

    #[test]
    fn index_times_reciprocal_is_one() {
        let n = Germ::index();
        let inv = Germ::uniform(PuiseuxPoly::monomial(int(-1), int(1)));
        assert_eq!(n.mul(&inv), Germ::constant(ratio(1, 1)));
    }

    #[test]
    fn relevance_masks() {
        let g = Germ::new(2, vec![mono(1, 1), mono(0, 1)]);
        assert_eq!(g.relevant_classes(&FilterSpec::Frechet), vec![true, true]);
        assert_eq!(
            g.relevant_classes(&FilterSpec::PrincipalAt(7)),
            vec![false, true]
        );
        let evens = FilterSpec::superset_of(IndexSet::evens()).unwrap();
        assert_eq!(g.relevant_classes(&evens), vec![true, false]);
        // modulus 3 vs evens (modulus 2): gcd 1, every class meets the base
        let g3 = Germ::new(3, vec![mono(1, 1), mono(0, 1), mono(2, 1)]);
        assert_eq!(g3.relevant_classes(&evens), vec![true, true, true]);
    }
}
