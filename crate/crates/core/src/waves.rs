//! Step-function wave spaces over ℝ_F grids.
//!
//! A wave is a finite sum `Σ γ_h·H_h` where `H_h` is the indicator of the
//! interval `[a_{h−1}, a_h)` and the coefficients live in ℂ_F. Breakpoints
//! live in ℝ_F as well, so "infinite" intervals are first-class: the right
//! endpoint can be the infinitely large element ω (the class of `(n)`),
//! and integration is plain exact algebra — no integrability condition is
//! ever imposed, even for infinite lengths times infinite coefficients.

use std::fmt;

use crate::error::{CoreError, Result};
use crate::filters::FilterSpec;
use crate::scalars::{RpaComplex, RpaReal};

/// Strictly increasing breakpoints `a₀ < a₁ < … < a_m` in ℝ_F with their
/// certified positive lengths `w_h = a_h − a_{h−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    breakpoints: Vec<RpaReal>,
    lengths: Vec<RpaReal>,
}

impl Grid {
    /// Certifies that consecutive differences are strictly positive (every
    /// relevant residue class has a nonzero polynomial with positive leading
    /// coefficient).
    ///
    /// A difference that is comparable with zero but not strictly positive
    /// reports `NonIncreasingBreakpoints`; one with residue classes of
    /// opposite eventual sign reports `IncomparableBreakpoints`.
    pub fn new(breakpoints: Vec<RpaReal>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(CoreError::DimensionMismatch);
        }
        let filter = breakpoints[0].filter().clone();
        if breakpoints.iter().any(|b| b.filter() != &filter) {
            return Err(CoreError::FilterMismatch);
        }
        let mut lengths = Vec::with_capacity(breakpoints.len() - 1);
        for (h, pair) in breakpoints.windows(2).enumerate() {
            let diff = pair[1].checked_sub(&pair[0])?;
            if diff.is_strictly_positive() {
                lengths.push(diff);
            } else if !diff.is_nonneg() && !(-&diff).is_nonneg() {
                return Err(CoreError::IncomparableBreakpoints);
            } else {
                return Err(CoreError::NonIncreasingBreakpoints { position: h + 1 });
            }
        }
        Ok(Grid {
            breakpoints,
            lengths,
        })
    }

    /// A grid with the given rational breakpoints.
    pub fn from_ints(points: &[i64], filter: FilterSpec) -> Result<Self> {
        Grid::new(
            points
                .iter()
                .map(|&p| RpaReal::from_int(p, filter.clone()))
                .collect(),
        )
    }

    pub fn breakpoints(&self) -> &[RpaReal] {
        &self.breakpoints
    }

    /// The certified interval lengths `w_h`.
    pub fn lengths(&self) -> &[RpaReal] {
        &self.lengths
    }

    pub fn interval_count(&self) -> usize {
        self.lengths.len()
    }

    pub fn filter(&self) -> &FilterSpec {
        self.breakpoints[0].filter()
    }
}

/// A step-function wave: a grid plus one ℂ_F coefficient per interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepWave {
    grid: Grid,
    coeffs: Vec<RpaComplex>,
}

impl StepWave {
    /// No integrability condition is imposed: coefficients may be
    /// infinitely large on infinitely long intervals.
    pub fn new(grid: Grid, coeffs: Vec<RpaComplex>) -> Result<Self> {
        if coeffs.len() != grid.interval_count() {
            return Err(CoreError::DimensionMismatch);
        }
        if coeffs.iter().any(|c| c.filter() != grid.filter()) {
            return Err(CoreError::FilterMismatch);
        }
        Ok(StepWave { grid, coeffs })
    }

    pub fn zero(grid: Grid) -> Self {
        let coeffs = vec![RpaComplex::zero(grid.filter().clone()); grid.interval_count()];
        StepWave { grid, coeffs }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn coeffs(&self) -> &[RpaComplex] {
        &self.coeffs
    }

    pub fn filter(&self) -> &FilterSpec {
        self.grid.filter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RpaComplex::is_zero)
    }

    /// `∫ψ = Σ (a_h − a_{h−1})·γ_h`, always a well-defined element of ℂ_F.
    pub fn integrate(&self) -> RpaComplex {
        let mut acc = RpaComplex::zero(self.filter().clone());
        for (w, c) in self.grid.lengths().iter().zip(&self.coeffs) {
            acc = &acc + &c.scale(w).expect("grid and coefficients share a filter");
        }
        acc
    }

    /// Merges two grids into a common refinement and replicates both
    /// waves' coefficients onto it; intervals outside a wave's span get 0.
    /// Fails with `IncomparableBreakpoints` when the union of breakpoints
    /// is not pairwise comparable.
    pub fn refine_common(
        &self,
        other: &StepWave,
    ) -> Result<(Grid, Vec<RpaComplex>, Vec<RpaComplex>)> {
        if self.filter() != other.filter() {
            return Err(CoreError::FilterMismatch);
        }
        let merged = merge_breakpoints(self.grid.breakpoints(), other.grid.breakpoints())?;
        let mine = spread_coeffs(&merged, &self.grid, &self.coeffs)?;
        let theirs = spread_coeffs(&merged, &other.grid, &other.coeffs)?;
        Ok((Grid::new(merged)?, mine, theirs))
    }

    /// Pointwise sum on the common refinement.
    pub fn add(&self, other: &StepWave) -> Result<StepWave> {
        let (grid, a, b) = self.refine_common(other)?;
        let coeffs = a
            .iter()
            .zip(&b)
            .map(|(x, y)| x.checked_add(y))
            .collect::<Result<_>>()?;
        StepWave::new(grid, coeffs)
    }

    /// Pointwise product on the common refinement (the commutative algebra
    /// structure of the wave space).
    pub fn pointwise_mul(&self, other: &StepWave) -> Result<StepWave> {
        let (grid, a, b) = self.refine_common(other)?;
        let coeffs = a
            .iter()
            .zip(&b)
            .map(|(x, y)| x.checked_mul(y))
            .collect::<Result<_>>()?;
        StepWave::new(grid, coeffs)
    }

    /// Scales every coefficient by `c`.
    pub fn scalar_mul(&self, c: &RpaComplex) -> Result<StepWave> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| x.checked_mul(c))
            .collect::<Result<_>>()?;
        StepWave::new(self.grid.clone(), coeffs)
    }

    /// The weighted scalar product `⟨ψ,χ⟩ = Σ w_h·conj(γ_h)·δ_h` on the
    /// common refinement — the exact value of `∫ conj(ψ)χ`.
    pub fn inner_product(&self, other: &StepWave) -> Result<RpaComplex> {
        let (grid, a, b) = self.refine_common(other)?;
        let mut acc = RpaComplex::zero(self.filter().clone());
        for ((w, x), y) in grid.lengths().iter().zip(&a).zip(&b) {
            acc = &acc + &x.conj().checked_mul(y)?.scale(w)?;
        }
        Ok(acc)
    }

    /// The squared Schwarz inequality `⟨ψ,ψ⟩·⟨χ,χ⟩ ≥ |⟨ψ,χ⟩|²`, decided
    /// exactly (the difference is pointwise nonnegative at every index
    /// where the lengths are positive, hence eventually on every class).
    pub fn schwarz_holds(&self, other: &StepWave) -> Result<bool> {
        let ss = self.inner_product(self)?;
        let cc = other.inner_product(other)?;
        let sc = self.inner_product(other)?;
        let lhs = ss.re_part().checked_mul(cc.re_part())?;
        let diff = lhs.checked_sub(&sc.abs_squared())?;
        Ok(diff.is_nonneg())
    }

    /// The exact square of the sup norm: the pointwise-eventual maximum of
    /// `|γ_h|²` per relevant residue class. This is the representable least
    /// upper bound even when some coefficient pairs are incomparable.
    pub fn norm_squared(&self) -> RpaReal {
        let mut acc = RpaReal::zero(self.filter().clone());
        for c in &self.coeffs {
            acc = acc
                .classwise_max(&c.abs_squared())
                .expect("coefficients share a filter");
        }
        acc
    }

    /// Truncated square root of [`StepWave::norm_squared`].
    pub fn norm_approx(&self, order: u32) -> Result<RpaReal> {
        self.norm_squared().sqrt_nonneg(order)
    }

    /// Equality as functions: compares coefficients on the common
    /// refinement (waves on different grids can denote the same function).
    pub fn eq_as_function(&self, other: &StepWave) -> Result<bool> {
        let (_, a, b) = self.refine_common(other)?;
        for (x, y) in a.iter().zip(&b) {
            if !x.eq_elem(y)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn merge_breakpoints(a: &[RpaReal], b: &[RpaReal]) -> Result<Vec<RpaReal>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i]
            .partial_cmp_elem(&b[j])?
            .ok_or(CoreError::IncomparableBreakpoints)?
        {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Ok(out)
}

/// Replicates `coeffs` (defined on `grid`) onto the intervals of the
/// refined breakpoint list; intervals outside the grid's span get zero.
fn spread_coeffs(
    merged: &[RpaReal],
    grid: &Grid,
    coeffs: &[RpaComplex],
) -> Result<Vec<RpaComplex>> {
    let zero = RpaComplex::zero(grid.filter().clone());
    let points = grid.breakpoints();
    let mut out = Vec::with_capacity(merged.len() - 1);
    let mut h = 0; // number of original breakpoints ≤ current interval start
    for lo in &merged[..merged.len() - 1] {
        while h < points.len() && points[h].leq(lo)? {
            h += 1;
        }
        // the merged interval [lo, next) sits inside [points[h-1], points[h])
        // because every original breakpoint appears in the merged list
        if h >= 1 && h <= coeffs.len() {
            out.push(coeffs[h - 1].clone());
        } else {
            out.push(zero.clone());
        }
    }
    Ok(out)
}

impl fmt::Display for StepWave {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "wave {{ breaks = [")?;
        for (i, b) in self.grid.breakpoints().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]; coeffs = [")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] }}")
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

    fn inv_omega_complex() -> RpaComplex {
        RpaComplex::from_real(
            RpaReal::new(
                frechet(),
                Germ::uniform(PuiseuxPoly::monomial(int(-1), int(1))),
            )
            .unwrap(),
        )
    }

    fn indicator_01() -> StepWave {
        let grid = Grid::from_ints(&[0, 1], frechet()).unwrap();
        StepWave::new(grid, vec![RpaComplex::one(frechet())]).unwrap()
    }

    #[test]
    fn unit_indicator_integrates_to_one() {
        assert_eq!(indicator_01().integrate(), RpaComplex::one(frechet()));
    }

    #[test]
    fn infinite_interval_with_infinitesimal_amplitude() {
        // ∫ over [0, ω) of the 1/n-amplitude wave: ω·(1/n) = 1 exactly
        let grid = Grid::new(vec![RpaReal::zero(frechet()), RpaReal::omega(frechet())]).unwrap();
        let wave = StepWave::new(grid, vec![inv_omega_complex()]).unwrap();
        assert_eq!(wave.integrate(), RpaComplex::one(frechet()));
    }

    #[test]
    fn multi_interval_integration() {
        let grid = Grid::from_ints(&[0, 1, 2], frechet()).unwrap();
        let wave = StepWave::new(
            grid,
            vec![
                RpaComplex::from_ints(2, 0, frechet()),
                RpaComplex::from_ints(3, 0, frechet()),
            ],
        )
        .unwrap();
        assert_eq!(wave.integrate(), RpaComplex::from_ints(5, 0, frechet()));
    }

    #[test]
    fn grid_rejects_bad_breakpoints() {
        let f = frechet();
        assert_eq!(
            Grid::from_ints(&[0, 1, 1], f.clone()).unwrap_err(),
            CoreError::NonIncreasingBreakpoints { position: 2 }
        );
        assert_eq!(
            Grid::from_ints(&[0, -1], f.clone()).unwrap_err(),
            CoreError::NonIncreasingBreakpoints { position: 1 }
        );
        // a mixed-sign germ is incomparable with 0
        let mixed = RpaReal::new(
            f.clone(),
            Germ::new(
                2,
                vec![
                    PuiseuxPoly::constant(int(1)),
                    PuiseuxPoly::constant(int(-1)),
                ],
            ),
        )
        .unwrap();
        assert_eq!(
            Grid::new(vec![RpaReal::zero(f), mixed]).unwrap_err(),
            CoreError::IncomparableBreakpoints
        );
    }

    #[test]
    fn refinement_replicates_coefficients() {
        let fine = Grid::from_ints(&[0, 1, 2], frechet()).unwrap();
        let coarse = Grid::from_ints(&[0, 2], frechet()).unwrap();
        let psi = StepWave::new(
            fine,
            vec![
                RpaComplex::from_ints(1, 0, frechet()),
                RpaComplex::from_ints(2, 0, frechet()),
            ],
        )
        .unwrap();
        let chi = StepWave::new(coarse, vec![RpaComplex::from_ints(7, 0, frechet())]).unwrap();
        let (grid, a, b) = psi.refine_common(&chi).unwrap();
        assert_eq!(grid.interval_count(), 2);
        assert_eq!(a, psi.coeffs().to_vec());
        assert_eq!(b[0], RpaComplex::from_ints(7, 0, frechet()));
        assert_eq!(b[1], RpaComplex::from_ints(7, 0, frechet()));
        // integration is invariant under refinement
        let rechi = StepWave::new(grid, b).unwrap();
        assert_eq!(rechi.integrate(), chi.integrate());
    }

    #[test]
    fn disjoint_spans_fill_with_zero() {
        let left = StepWave::new(
            Grid::from_ints(&[0, 1], frechet()).unwrap(),
            vec![RpaComplex::from_ints(1, 0, frechet())],
        )
        .unwrap();
        let right = StepWave::new(
            Grid::from_ints(&[5, 6], frechet()).unwrap(),
            vec![RpaComplex::from_ints(3, 0, frechet())],
        )
        .unwrap();
        let sum = left.add(&right).unwrap();
        assert_eq!(sum.grid().interval_count(), 3);
        assert_eq!(sum.integrate(), RpaComplex::from_ints(4, 0, frechet()));
        // pointwise product of disjoint supports is the zero wave
        let prod = left.pointwise_mul(&right).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn wave_plus_zero_is_unchanged() {
        let psi = indicator_01();
        let zero = StepWave::zero(Grid::from_ints(&[0, 1], frechet()).unwrap());
        let sum = psi.add(&zero).unwrap();
        assert!(sum.eq_as_function(&psi).unwrap());
    }

    #[test]
    fn inner_product_basics() {
        let psi = indicator_01();
        assert_eq!(psi.inner_product(&psi).unwrap(), RpaComplex::one(frechet()));
        // orthogonal pair on a shared grid
        let grid = Grid::from_ints(&[0, 1, 2], frechet()).unwrap();
        let a = StepWave::new(
            grid.clone(),
            vec![RpaComplex::one(frechet()), RpaComplex::zero(frechet())],
        )
        .unwrap();
        let b = StepWave::new(
            grid,
            vec![RpaComplex::zero(frechet()), RpaComplex::one(frechet())],
        )
        .unwrap();
        assert!(a.inner_product(&b).unwrap().is_zero());
        assert!(a.schwarz_holds(&b).unwrap());
    }

    #[test]
    fn inner_product_conjugate_symmetry() {
        let grid = Grid::from_ints(&[0, 2, 3], frechet()).unwrap();
        let psi = StepWave::new(
            grid.clone(),
            vec![
                RpaComplex::from_ints(1, 2, frechet()),
                RpaComplex::from_ints(0, -1, frechet()),
            ],
        )
        .unwrap();
        let chi = StepWave::new(
            grid,
            vec![RpaComplex::from_ints(3, -1, frechet()), inv_omega_complex()],
        )
        .unwrap();
        let pc = psi.inner_product(&chi).unwrap();
        let cp = chi.inner_product(&psi).unwrap();
        assert_eq!(pc, cp.conj());
        assert!(psi.schwarz_holds(&chi).unwrap());
    }

    #[test]
    fn norm_squared_examples() {
        let grid = Grid::from_ints(&[0, 1, 2], frechet()).unwrap();
        // coeffs (2, 3i): sup |γ|² = 9
        let psi = StepWave::new(
            grid.clone(),
            vec![
                RpaComplex::from_ints(2, 0, frechet()),
                RpaComplex::from_ints(0, 3, frechet()),
            ],
        )
        .unwrap();
        assert_eq!(psi.norm_squared(), RpaReal::from_int(9, frechet()));
        assert_eq!(psi.norm_approx(4).unwrap(), RpaReal::from_int(3, frechet()));
        // coeffs (n, 1/n): the n class dominates eventually
        let chi = StepWave::new(
            grid.clone(),
            vec![
                RpaComplex::from_real(RpaReal::omega(frechet())),
                inv_omega_complex(),
            ],
        )
        .unwrap();
        let n_sq = &RpaReal::omega(frechet()) * &RpaReal::omega(frechet());
        assert_eq!(chi.norm_squared(), n_sq);
        // zero wave: norm 0, and definiteness
        let zero = StepWave::zero(grid);
        assert!(zero.norm_squared().is_zero());
        assert!(!chi.norm_squared().is_zero());
    }
}
