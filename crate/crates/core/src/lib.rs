//! Exact verification workbench for cosovereign Hopf algebras.

pub mod algebra;
pub mod cobraid;
pub mod corep;
pub mod error;
pub mod exactmath;
pub mod forms;
pub mod hopf_fd;
pub mod hopf_pres;
pub mod universal;
pub mod ncalg;
pub mod sle;
pub mod verdict;

pub use algebra::{GenCharacter, HopfAlgebra};
pub use error::{Error, Result};
pub use verdict::{Bound, Report, Verdict};
