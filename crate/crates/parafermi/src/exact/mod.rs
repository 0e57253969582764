//! Exact scalar and matrix arithmetic underlying every other module.

mod matrix;
mod scalar;

pub use matrix::{is_paraorder, OperatorMatrix};
pub use scalar::{ExactScalar, Rational};

/// Canonical √n: c·√d with d squarefree and c²·d = n.
pub fn normalize_sqrt(n: u64) -> ExactScalar {
    ExactScalar::sqrt_of(n)
}
