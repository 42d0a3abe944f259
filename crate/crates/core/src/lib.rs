//! Exact symbolic engine for the conformal superalgebra `K'_4`, its annihilation
//! superalgebra `K(1,4)_+ ⊕ ℂC`, the generalized Verma modules over it and their
//! singular vectors.

pub mod annihilation;
pub mod conformal_algebra;
pub mod dual_rep;
pub mod exact;
pub mod grassmann;
pub mod linear;
pub mod morphisms;
pub mod report;
pub mod singular_solver;
pub mod verma;
pub mod weight_modules;

pub use exact::{ExactError, ExactMatrix, ExactScalar};
pub use grassmann::{IndexSeq, SignedMonomial};
pub use report::CheckReport;
