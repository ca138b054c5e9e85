//! Exact scalar and polynomial arithmetic: arbitrary-precision rationals,
//! cyclotomic field elements, and integer Laurent polynomials.
//!
//! Every value in this module is immutable after construction and every
//! operation is a pure function, so values can be shared or sent between
//! threads freely.

mod cyclotomic;
mod laurent;
mod rational;

pub use cyclotomic::CyclotomicNumber;
pub use laurent::{cyclotomic_multiplicity, LaurentPoly};
pub use rational::{checked_div, rational, rational_from, Rational};

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// Division by the zero rational.
    #[error("division by zero")]
    DivisionByZero,
    /// Laurent division left a nonzero remainder; the quotient is not a
    /// Laurent polynomial. Carries the remainder at the point of failure.
    #[error("nonzero remainder in exact Laurent division: {0}")]
    NonzeroRemainder(LaurentPoly),
    /// An order coercion was requested to a field that does not contain the
    /// source field (target order not a multiple of the source order).
    #[error("cannot coerce cyclotomic order {from} into order {to}")]
    BadCoercion { from: u32, to: u32 },
}
