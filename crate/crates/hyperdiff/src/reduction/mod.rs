//! Differential reduction of integer-shifted `p+1Fp` to a θ-derivative basis.

pub mod exceptional;
pub mod reduce;
pub mod step;

pub use exceptional::{count_nontrivial_basis, detect_exceptional, ExceptionalReport};
pub use reduce::{align, canonical_path, reduce_along, reduce_to_basis, verify_reduction, ReductionResult};
pub use step::{step_matrix, OpMatrix, Step, Which};
