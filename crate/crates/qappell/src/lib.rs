//! Exact symbolic computation for the q-Bernoulli, q-Euler, q-Genocchi and
//! q-tangent number and polynomial families over the field Q(q), together
//! with a verification engine that checks the families' defining identities
//! as exact polynomial equalities.
//!
//! Everything is computed twice where it matters: number tables come from
//! both a triangular recurrence and generating-series extraction, and the
//! identity suite compares independently constructed sides symbolically, so
//! a pass means an exact algebraic equality, never a tolerance.

pub mod qcombinatorics;
pub mod qnumbers;
pub mod qpolynomials;
pub mod qseries;
pub mod qfield;

pub use qfield::{FieldError, IntPoly, RationalFunction};
