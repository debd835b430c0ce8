//! Exact arithmetic in Q(q): integer polynomials in q and their reduced
//! ratios. q is treated as a formal indeterminate throughout, so every
//! identity downstream is decided by exact polynomial algebra.

mod intpoly;
mod rational;

pub use intpoly::IntPoly;
pub use rational::RationalFunction;

use std::fmt;

/// Errors from Q(q) arithmetic and evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldError {
    /// A rational function was constructed with a zero denominator.
    ZeroDenominator,
    /// Division by the zero rational function.
    DivisionByZero,
    /// Zero raised to a negative power.
    ZeroToNegativePower,
    /// The reduced denominator vanishes at the evaluation point.
    PoleAtPoint,
    /// The reduced denominator vanishes at q = 1.
    PoleAtOne,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::ZeroDenominator => write!(f, "zero denominator"),
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::ZeroToNegativePower => write!(f, "zero raised to a negative power"),
            FieldError::PoleAtPoint => write!(f, "pole at the evaluation point"),
            FieldError::PoleAtOne => write!(f, "pole at q = 1"),
        }
    }
}

impl std::error::Error for FieldError {}
