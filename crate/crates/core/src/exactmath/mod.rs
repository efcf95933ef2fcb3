//! Exact arithmetic over Q and Q(q), and dense exact linear algebra.

mod linsolve;
mod matrix;
mod parse;
mod poly;
mod scalar;

pub use linsolve::{solve_linear, SolutionSpace};
pub use matrix::Matrix;
pub use poly::Poly;
pub use scalar::{FieldDesc, Scalar};
