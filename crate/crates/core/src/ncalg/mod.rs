//! Free associative algebras, finite presentations and truncated ideal
//! membership.

mod maps;
mod membership;
mod ncpoly;
mod parse;
mod presentation;
mod tensor;
mod word;

pub use maps::{eval_scalar, GenMap};
pub use membership::{ideal_membership, normal_form, tensor_ideal_membership, Membership, SpanBasis};
pub use ncpoly::NCPoly;
pub use presentation::{Presentation, Representation};
pub use tensor::TensorPoly;
pub use word::{GenSet, Word};
