//! An exact-arithmetic commutative-algebra laboratory.
//!
//! The crate computes with torsion functors, Koszul and Čech (co)complexes
//! and weak proregularity over a fixed corpus of rings — polynomial and
//! monomial-quotient algebras, the monoid algebra of the non-negative
//! rationals, a valuation-flavoured tower ring, idealizations, truncated
//! perfect-closure tensor squares and eventually-periodic sequence rings —
//! and mechanically verifies a catalogue of desk-scale claims about them,
//! reporting pass/fail/unknown verdicts with explicit witnesses and bounds.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals,
//! prime-field elements or localized integers, and all homological data is
//! obtained from echelon forms and Smith normal forms of exact matrices.
//!
//! Start with the `examples/` directory (one runnable example per major
//! capability) or the `torsionlab` binary, which exposes the verification
//! corpus behind a small CLI.

pub mod corpus;
pub mod graded;
pub mod homology;
pub mod linalg;
pub mod rings;
pub mod scalar;
pub mod torsion;

pub use linalg::{ExactMatrix, LinalgError};
pub use scalar::{Scalar, ScalarDomain};
