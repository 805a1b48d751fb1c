//! Exact arithmetic in the quotient algebras ℝ_F and ℂ_F.
//!
//! Elements are represented by *germs*: one Puiseux polynomial in the index
//! variable per residue class modulo a small period. The representation is
//! closed under ring arithmetic, and leading-term inspection decides
//! equality, sign, order, and the infinitesimal/finite/infinitely-large
//! classification relative to the chosen filter.
//!
//! Construction normalizes every element to a filter-specific normal form
//! (see [`RpaReal::new`]), after which equality in the quotient is plain
//! structural identity.

pub mod complex;
pub mod germ;
pub mod puiseux;
pub mod ratio;
pub mod real;
pub mod value;

pub use complex::RpaComplex;
pub use germ::Germ;
pub use puiseux::PuiseuxPoly;
pub use real::{ClassKind, Classification, RpaReal};
pub use value::ExactValue;
