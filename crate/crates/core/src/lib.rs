//! Exact arithmetic in reduced power algebras.
//!
//! A filter `F` on the naturals turns the sequence algebra ℝ^ℕ into a
//! quotient ℝ_F by the ideal of sequences vanishing on a filter set. The
//! quotients are commutative, non-Archimedean extensions of ℝ (and ℂ):
//! they contain infinitesimal and infinitely large elements, and for
//! non-ultrafilters they have zero divisors and a genuinely partial order.
//!
//! This crate computes in those quotients exactly:
//!
//! * [`filters`] — computable index sets and the three supported filter
//!   kinds, with a decidable membership test.
//! * [`scalars`] — elements of ℝ_F and ℂ_F as residue-class Puiseux
//!   polynomial germs in filter-specific normal form; ring arithmetic,
//!   order, classification, absolute values.
//! * [`waves`] — step-function wave spaces over ℝ_F grids: integration,
//!   the weighted scalar product, the sup norm.
//! * [`operators`] — matrices over ℂ_F acting on a fixed grid: Hermitian
//!   tests, expectations, variances, the uncertainty relation residual,
//!   boundedness certificates, and commutator identities.
//! * [`suites`] — deterministic seeded property campaigns over all of the
//!   above, with serializable counterexamples.

pub mod error;
pub mod filters;
pub mod operators;
pub mod scalars;
pub mod suites;
pub mod waves;

pub use error::CoreError;
pub use filters::{FilterSpec, IndexSet};
pub use operators::{BoundCertificate, GridOperator};
pub use scalars::{Classification, Germ, PuiseuxPoly, RpaComplex, RpaReal};
pub use waves::{Grid, StepWave};
