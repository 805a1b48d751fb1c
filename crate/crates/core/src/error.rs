//! Error type shared by all algebra modules.

use thiserror::Error;

/// Errors raised by quotient-algebra operations.
///
/// Every variant carries a stable machine-readable code (see
/// [`CoreError::code`]) so front ends can map failures without string
/// matching.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// Two operands live in quotients by different filters.
    #[error("operands belong to different filter quotients")]
    FilterMismatch,

    /// Normalizing under a principal filter requires the representative's
    /// value at the index to be rational; this germ's value is not.
    #[error("germ value at index {index} is irrational")]
    IrrationalAtIndex { index: u64 },

    /// `eval_at` hit a fractional power with no rational value at the index.
    #[error("representative value at index {index} is irrational")]
    IrrationalValue { index: u64 },

    /// Element is zero or a zero divisor; no inverse exists in the quotient.
    #[error("element is not invertible in the quotient")]
    NotInvertible,

    /// The element is invertible, but its inverse (or square root) leaves
    /// the residue-class Puiseux polynomial representation.
    #[error("result exists but is not representable as a Puiseux-polynomial germ")]
    Unrepresentable,

    /// A square root was requested of an element outside the nonnegative cone.
    #[error("element is not nonnegative under the filter order")]
    NotNonneg,

    /// A grid breakpoint difference failed the strict positivity certificate.
    #[error("breakpoints not strictly increasing at position {position}")]
    NonIncreasingBreakpoints { position: usize },

    /// Two breakpoints cannot be ordered: their difference has residue
    /// classes of opposite eventual sign.
    #[error("breakpoints are incomparable under the partial order")]
    IncomparableBreakpoints,

    /// Wave and operator (or two operators) do not share a grid.
    #[error("values are defined on different grids")]
    GridMismatch,

    /// Wave/operator construction with inconsistent dimensions.
    #[error("coefficient or matrix dimensions do not match the grid")]
    DimensionMismatch,

    /// ⟨ψ,ψ⟩ is zero, a zero divisor, or has no representable inverse, so
    /// division-normalized expectations are undefined for this state.
    #[error("state cannot be normalized: <psi,psi> has no representable inverse")]
    NotNormalizable,

    /// An operation that requires a Hermitian operator received one that
    /// fails the weighted symmetry condition.
    #[error("operator is not Hermitian for the grid's scalar product")]
    NotHermitian,
}

impl CoreError {
    /// Stable error code, one per variant.
    pub fn code(&self) -> &'static str {
        match self {
            CoreError::FilterMismatch => "E_FILTER_MISMATCH",
            CoreError::IrrationalAtIndex { .. } => "E_IRRATIONAL_AT_INDEX",
            CoreError::IrrationalValue { .. } => "E_IRRATIONAL_VALUE",
            CoreError::NotInvertible => "E_NOT_INVERTIBLE",
            CoreError::Unrepresentable => "E_UNREPRESENTABLE",
            CoreError::NotNonneg => "E_NOT_NONNEG",
            CoreError::NonIncreasingBreakpoints { .. } => "E_NON_INCREASING_BREAKPOINTS",
            CoreError::IncomparableBreakpoints => "E_INCOMPARABLE_BREAKPOINTS",
            CoreError::GridMismatch => "E_GRID_MISMATCH",
            CoreError::DimensionMismatch => "E_DIMENSION_MISMATCH",
            CoreError::NotNormalizable => "E_NOT_NORMALIZABLE",
            CoreError::NotHermitian => "E_NOT_HERMITIAN",
        }
    }
}

pub type Result<T> = std::result::Result<T, CoreError>;
