//! Exact-arithmetic toolkit for Poincare-Dulac normal forms.
//!
//! A diagonalizable-plus-nilpotent linear part is described by an
//! [`EigenSpectrum`](spectrum::EigenSpectrum): each eigenvalue is stored by
//! its rational coordinates over an implicit basis of the rational span of
//! the spectrum, so resonance tests are exact even when the eigenvalues are
//! irrational. On top of that the crate provides
//!
//! * resonance sets, degree bounds and degree ladders ([`resonance`]),
//! * sparse polynomial vector fields with truncation bookkeeping ([`field`]),
//! * centralizers and normalizers of normal forms ([`centralizer`]),
//! * invariant generators and reduction by invariants ([`invariants`]),
//! * inverse Jacobi multipliers ([`jacobi`]),
//!
//! all over `BigRational` with no floating point anywhere.

pub mod centralizer;
pub mod error;
pub mod field;
pub mod invariants;
pub mod jacobi;
pub mod json;
pub mod linalg;
pub mod normal_form;
pub mod resonance;
pub mod spectrum;

pub use error::{Error, Result};
pub use field::{MultiIndex, PolySeries, PolyVectorField, Polynomial, Truncation};
pub use linalg::{RatMatrix, Rational};
pub use spectrum::EigenSpectrum;
