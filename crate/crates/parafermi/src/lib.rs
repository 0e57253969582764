//! An exact-arithmetic workbench for parafermi operators and their
//! relatives: Green's matrix representation, the recursively built
//! root-f/d/h nilpotent sequences, the Catalan and mod-8 structure of
//! their coefficient triangles, the heterotic variant of the algebra,
//! the difference calculus connecting the coefficients to kissing
//! numbers, the factorization side of the representatives, and the
//! planar cardioid model with its arbitrary-precision continued
//! fractions.
//!
//! Everything algebraic is exact: big rationals, formal sums of square
//! roots of squarefree integers, big-integer matrices. The numeric side
//! (arclengths, Γ at rational arguments, continued fractions) runs on
//! fixed-point big decimals, and every reported quotient is certified by
//! recomputation at doubled precision.
//!
//! Start with the runnable examples (`cargo run --example ...`), or the
//! `parafermi` binary for the subcommand interface.

pub mod blockstruct;
pub mod cardioid;
pub mod cli;
pub mod diffs;
pub mod error;
pub mod exact;
pub mod falg;
pub mod green;
pub mod intmat;
pub mod mod8;
pub mod numbers;
pub mod primesfact;
pub mod report;
pub mod rootseq;
pub mod tables;

pub use error::{Error, Result};
