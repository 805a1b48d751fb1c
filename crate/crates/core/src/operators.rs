//! Linear operators on waves sharing a fixed grid, as matrices over ℂ_F.
//!
//! On a fixed grid the wave space is a finitely generated free module over
//! ℂ_F with basis the interval indicators, so every linear operator is a
//! matrix acting on the coefficient vector. The weighted scalar product
//! turns the Hermitian condition into the decidable entry condition
//! `w_i·a_{ij} = w_j·conj(a_{ji})`, and the usual expectation / variance /
//! commutator quantities become exact germ computations. Uncertainty
//! statements are checked in squared form; normalization `⟨ψ,ψ⟩ = 1` is
//! replaced by exact division, which requires `⟨ψ,ψ⟩` to have a
//! representable inverse.

use std::fmt;

use crate::error::{CoreError, Result};
use crate::filters::FilterSpec;
use crate::scalars::{RpaComplex, RpaReal};
use crate::waves::{Grid, StepWave};

/// A linear operator on the waves of one grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridOperator {
    grid: Grid,
    matrix: Vec<Vec<RpaComplex>>,
}

/// How a boundedness certificate was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMethod {
    /// Row sums of entrywise `|·|₁` norms, maximized classwise over rows.
    RowSumOneNorm,
}

/// An explicit witness `M` with `‖Aψ‖ ≤ M·‖ψ‖` for every wave ψ on the
/// grid, verified on demand in exact squared form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    bound: RpaReal,
    method: BoundMethod,
}

impl BoundCertificate {
    pub fn bound(&self) -> &RpaReal {
        &self.bound
    }

    pub fn method(&self) -> BoundMethod {
        self.method
    }

    /// Checks `‖Aψ‖² ≤ bound²·‖ψ‖²` exactly.
    pub fn certifies(&self, op: &GridOperator, psi: &StepWave) -> Result<bool> {
        let image = op.apply(psi)?;
        let bound_sq = self.bound.checked_mul(&self.bound)?;
        let rhs = bound_sq.checked_mul(&psi.norm_squared())?;
        let diff = rhs.checked_sub(&image.norm_squared())?;
        Ok(diff.is_nonneg())
    }

    /// Any element dominating a valid bound is again a valid bound
    /// (upward closure of the certificate set).
    pub fn relaxed(&self, larger: RpaReal) -> Result<BoundCertificate> {
        if !self.bound.leq(&larger)? {
            return Err(CoreError::NotNonneg);
        }
        Ok(BoundCertificate {
            bound: larger,
            method: self.method,
        })
    }
}

impl GridOperator {
    pub fn new(grid: Grid, matrix: Vec<Vec<RpaComplex>>) -> Result<Self> {
        let m = grid.interval_count();
        if matrix.len() != m || matrix.iter().any(|row| row.len() != m) {
            return Err(CoreError::DimensionMismatch);
        }
        if matrix.iter().flatten().any(|e| e.filter() != grid.filter()) {
            return Err(CoreError::FilterMismatch);
        }
        Ok(GridOperator { grid, matrix })
    }

    pub fn identity(grid: Grid) -> Self {
        let m = grid.interval_count();
        let filter = grid.filter().clone();
        let matrix = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            RpaComplex::one(filter.clone())
                        } else {
                            RpaComplex::zero(filter.clone())
                        }
                    })
                    .collect()
            })
            .collect();
        GridOperator { grid, matrix }
    }

    pub fn zero(grid: Grid) -> Self {
        let m = grid.interval_count();
        let matrix = vec![vec![RpaComplex::zero(grid.filter().clone()); m]; m];
        GridOperator { grid, matrix }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn matrix(&self) -> &[Vec<RpaComplex>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &RpaComplex {
        &self.matrix[i][j]
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn filter(&self) -> &FilterSpec {
        self.grid.filter()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(RpaComplex::is_zero)
    }

    fn require_same_grid(&self, other: &GridOperator) -> Result<()> {
        if self.grid == other.grid {
            Ok(())
        } else {
            Err(CoreError::GridMismatch)
        }
    }

    pub fn add(&self, other: &GridOperator) -> Result<GridOperator> {
        self.require_same_grid(other)?;
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(r1, r2)| {
                r1.iter()
                    .zip(r2)
                    .map(|(a, b)| a.checked_add(b))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GridOperator {
            grid: self.grid.clone(),
            matrix,
        })
    }

    pub fn sub(&self, other: &GridOperator) -> Result<GridOperator> {
        self.require_same_grid(other)?;
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(r1, r2)| {
                r1.iter()
                    .zip(r2)
                    .map(|(a, b)| a.checked_sub(b))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GridOperator {
            grid: self.grid.clone(),
            matrix,
        })
    }

    pub fn scalar_mul(&self, c: &RpaComplex) -> Result<GridOperator> {
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|a| a.checked_mul(c))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GridOperator {
            grid: self.grid.clone(),
            matrix,
        })
    }

    pub fn matmul(&self, other: &GridOperator) -> Result<GridOperator> {
        self.require_same_grid(other)?;
        let m = self.dim();
        let filter = self.filter().clone();
        let mut matrix = Vec::with_capacity(m);
        for row_i in &self.matrix {
            let mut out_row = Vec::with_capacity(m);
            for j in 0..m {
                let mut acc = RpaComplex::zero(filter.clone());
                for (k, row_k) in other.matrix.iter().enumerate() {
                    acc = acc.checked_add(&row_i[k].checked_mul(&row_k[j])?)?;
                }
                out_row.push(acc);
            }
            matrix.push(out_row);
        }
        Ok(GridOperator {
            grid: self.grid.clone(),
            matrix,
        })
    }

    pub fn pow(&self, n: u32) -> Result<GridOperator> {
        let mut acc = GridOperator::identity(self.grid.clone());
        for _ in 0..n {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    /// Applies the operator to a wave's coefficient vector.
    pub fn apply(&self, psi: &StepWave) -> Result<StepWave> {
        if psi.grid() != &self.grid {
            return Err(CoreError::GridMismatch);
        }
        let filter = self.filter().clone();
        let coeffs = self
            .matrix
            .iter()
            .map(|row| {
                let mut acc = RpaComplex::zero(filter.clone());
                for (a, c) in row.iter().zip(psi.coeffs()) {
                    acc = acc.checked_add(&a.checked_mul(c)?)?;
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        StepWave::new(self.grid.clone(), coeffs)
    }

    /// The Hermitian test `⟨Aψ,χ⟩ = ⟨ψ,Aχ⟩` for all waves on the grid,
    /// decided by the weighted entry condition `w_i·a_{ij} = w_j·conj(a_{ji})`
    /// (expand both scalar products and match the coefficient of
    /// `conj(ψ_i)·χ_j`; the lengths are the scalar-product weights).
    pub fn is_hermitian(&self) -> bool {
        let w = self.grid.lengths();
        let m = self.dim();
        for i in 0..m {
            for j in 0..m {
                let lhs = self.matrix[i][j]
                    .scale(&w[i])
                    .expect("operator entries share the grid filter");
                let rhs = self.matrix[j][i]
                    .conj()
                    .scale(&w[j])
                    .expect("operator entries share the grid filter");
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The division-normalized expectation `⟨ψ,Aψ⟩ / ⟨ψ,ψ⟩` (equal to the
    /// plain expectation when `⟨ψ,ψ⟩ = 1`). States whose `⟨ψ,ψ⟩` is zero, a
    /// zero divisor, or has unrepresentable inverse are `NotNormalizable`.
    pub fn expectation(&self, psi: &StepWave) -> Result<RpaComplex> {
        if psi.grid() != &self.grid {
            return Err(CoreError::GridMismatch);
        }
        let norm = psi.inner_product(psi)?;
        let inv_norm = norm
            .re_part()
            .try_invert()
            .map_err(|_| CoreError::NotNormalizable)?;
        let raw = psi.inner_product(&self.apply(psi)?)?;
        raw.scale(&inv_norm)
    }

    /// For Hermitian operators the expectation is conjugation-fixed, i.e.
    /// lies in the embedded ℝ_F.
    pub fn expectation_is_real(&self, psi: &StepWave) -> Result<bool> {
        Ok(self.expectation(psi)?.im_part().is_zero())
    }

    /// The exact variance `⟨A²⟩_ψ − (⟨A⟩_ψ)²` of a Hermitian operator;
    /// always in the nonnegative cone.
    pub fn variance(&self, psi: &StepWave) -> Result<RpaReal> {
        if !self.is_hermitian() {
            return Err(CoreError::NotHermitian);
        }
        let mean = self.expectation(psi)?;
        let mean_sq_op = self.matmul(self)?.expectation(psi)?;
        let var = mean_sq_op.checked_sub(&mean.checked_mul(&mean)?)?;
        debug_assert!(var.im_part().is_zero());
        Ok(var.re_part().clone())
    }

    /// Truncated square root of the variance.
    pub fn uncertainty_approx(&self, psi: &StepWave, order: u32) -> Result<RpaReal> {
        self.variance(psi)?.sqrt_nonneg(order)
    }

    /// Centers the operator on its expectation: `A − ⟨A⟩_ψ·I`. Preserves
    /// hermiticity, leaves commutators unchanged, and satisfies
    /// `⟨A₁ψ,A₁ψ⟩/⟨ψ,ψ⟩ = variance`.
    pub fn center(&self, psi: &StepWave) -> Result<GridOperator> {
        let mean = self.expectation(psi)?;
        let shift = GridOperator::identity(self.grid.clone()).scalar_mul(&mean)?;
        self.sub(&shift)
    }

    /// `[A,B] = AB − BA`.
    pub fn commutator(&self, other: &GridOperator) -> Result<GridOperator> {
        self.matmul(other)?.sub(&other.matmul(self)?)
    }

    /// The matrix trace; vanishes on every commutator because the scalar
    /// ring is commutative.
    pub fn trace(&self) -> RpaComplex {
        let mut acc = RpaComplex::zero(self.filter().clone());
        for i in 0..self.dim() {
            acc = acc
                .checked_add(&self.matrix[i][i])
                .expect("entries share a filter");
        }
        acc
    }

    /// The uncertainty relation in exact squared form: returns
    /// `4·var(A)·var(B) − |⟨[A,B]⟩|²` and whether it lies in the
    /// nonnegative cone (which is the relation's claim for Hermitian `A`,
    /// `B` and admissible ψ).
    pub fn heisenberg_holds(
        &self,
        other: &GridOperator,
        psi: &StepWave,
    ) -> Result<(bool, RpaReal)> {
        self.require_same_grid(other)?;
        if !self.is_hermitian() || !other.is_hermitian() {
            return Err(CoreError::NotHermitian);
        }
        let var_a = self.variance(psi)?;
        let var_b = other.variance(psi)?;
        let comm_mean = self.commutator(other)?.expectation(psi)?;
        let four = RpaReal::from_int(4, self.filter().clone());
        let lhs = four.checked_mul(&var_a)?.checked_mul(&var_b)?;
        let residual = lhs.checked_sub(&comm_mean.abs_squared())?;
        Ok((residual.is_nonneg(), residual))
    }

    /// A boundedness witness: the classwise-eventual maximum over rows of
    /// `Σ_j |a_{ij}|₁`. Because `|z| ≤ |z|₁` pointwise and the norm is the
    /// sup of coefficient magnitudes, the row-sum bound certifies
    /// `‖Aψ‖² ≤ bound²·‖ψ‖²` exactly for every wave (at the cost of a
    /// factor ≤ √2 per entry of coarseness).
    pub fn bound_certificate(&self) -> BoundCertificate {
        let filter = self.filter().clone();
        let mut bound = RpaReal::zero(filter.clone());
        for row in &self.matrix {
            let mut row_sum = RpaReal::zero(filter.clone());
            for a in row {
                row_sum = row_sum
                    .checked_add(&a.abs_one_norm())
                    .expect("entries share a filter");
            }
            bound = bound
                .classwise_max(&row_sum)
                .expect("entries share a filter");
        }
        BoundCertificate {
            bound,
            method: BoundMethod::RowSumOneNorm,
        }
    }

    /// Certificates for `A+B`, `c·A`, and `A·B`, whose bounds satisfy the
    /// exact germ inequalities `bound(A+B) ≤ bound(A)+bound(B)`,
    /// `bound(cA) ≤ |c|₁·bound(A)`, `bound(AB) ≤ bound(A)·bound(B)`.
    /// (The scalar inequality is stated with `|c|`; since `|c| ≤ |c|₁` the
    /// certificate here is coarser than that, not tighter.)
    pub fn bound_combinators(
        &self,
        other: &GridOperator,
        c: &RpaComplex,
    ) -> Result<(BoundCertificate, BoundCertificate, BoundCertificate)> {
        self.require_same_grid(other)?;
        let sum = self.add(other)?.bound_certificate();
        let scaled = self.scalar_mul(c)?.bound_certificate();
        let product = self.matmul(other)?.bound_certificate();
        Ok((sum, scaled, product))
    }

    /// `[A,B] − c·I`: the residual of the non-commutation relation. For
    /// `c ≠ 0` it is never the zero operator — its trace is `−c·m`, and the
    /// scalar ring has characteristic zero — which is the finite-dimensional
    /// witness that `[A,B] = c·I` is impossible for bounded operators.
    pub fn wintner_residual(&self, other: &GridOperator, c: &RpaComplex) -> Result<GridOperator> {
        let shift = GridOperator::identity(self.grid.clone()).scalar_mul(c)?;
        self.commutator(other)?.sub(&shift)
    }

    /// `(A·Bⁿ − Bⁿ·A) − Σ_{k<n} Bᵏ·[A,B]·B^{n−1−k}`, identically zero for
    /// all operators: the telescoping identity behind the induction
    /// `n·B^{n−1} = A·Bⁿ − Bⁿ·A` when `[A,B] = c·I`.
    pub fn power_commutator_residual(&self, other: &GridOperator, n: u32) -> Result<GridOperator> {
        self.require_same_grid(other)?;
        assert!(n >= 1, "power must be at least 1");
        let mut powers = Vec::with_capacity(n as usize + 1);
        powers.push(GridOperator::identity(self.grid.clone()));
        for _ in 0..n {
            powers.push(powers.last().unwrap().matmul(other)?);
        }
        let b_n = &powers[n as usize];
        let lhs = self.matmul(b_n)?.sub(&b_n.matmul(self)?)?;
        let comm = self.commutator(other)?;
        let mut sum = GridOperator::zero(self.grid.clone());
        for k in 0..n as usize {
            let term = powers[k]
                .matmul(&comm)?
                .matmul(&powers[n as usize - 1 - k])?;
            sum = sum.add(&term)?;
        }
        lhs.sub(&sum)
    }
}

impl fmt::Display for GridOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "op {{ grid = [")?;
        for (i, b) in self.grid.breakpoints().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]; matrix = [")?;
        for (i, row) in self.matrix.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "] }}")
    }
}
