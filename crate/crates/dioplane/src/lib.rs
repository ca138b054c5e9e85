//! Exact-arithmetic classification pipeline for the trilinear Diophantine
//! equation `knm = 2kn + 2km + 2nm` and its six sibling cancellation
//! patterns.
//!
//! The crate is organised in layers:
//!
//! - [`exact`] — arbitrary-precision rationals, cyclotomic field elements
//!   and integer Laurent polynomials; everything above is built on these.
//! - [`dioph`] — the equation catalog, exact solution enumeration within a
//!   bound, and the family/isolated classification of solutions.
//! - [`vogel`] — projective (α:β:γ) points modulo permutation and rescaling,
//!   the universal dimension formula, the solution → point map, and
//!   identification against the classical algebra families.
//! - [`character`] — the universal adjoint character as a finite exponential
//!   sum: regularity test, expansion, dimension and rank extraction.
//! - [`geometry`] — polyhedral readings of solutions: Platonic solids on the
//!   sphere and equivelar maps on the genus-2 surface.
//! - [`mckay`] — finite subgroups of SU(2) as exact quaternion groups,
//!   character tables, the V ⊗ Vᵢ adjacency graph and its affine ADE label.
//! - [`report`] — record types and table builders behind the CLI: solution
//!   tables, per-point records, and the side-by-side comparison of the
//!   McKay and Diophantine routes.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod character;
pub mod dioph;
pub mod exact;
pub mod geometry;
pub mod mckay;
pub mod report;
pub mod vogel;

pub use dioph::{SolutionClassification, SolutionKind, SolutionTriple, TrilinearEquation};
pub use exact::{CyclotomicNumber, LaurentPoly, Rational};
pub use vogel::{AlgebraIdentity, VogelPoint};
