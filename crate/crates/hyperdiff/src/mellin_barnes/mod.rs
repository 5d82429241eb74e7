//! Mellin–Barnes integrands, their residue sums and master-integral counts.

pub mod convert;
pub mod count;
pub mod gamma;
pub mod mbrepr;
pub mod presets;
pub mod raw;

pub use convert::{mb_to_hyper, Bindings, HyperSum, HyperTerm};
pub use count::{count_master_integrals, dressed_propagator_shift, TermCount};
pub use gamma::GammaProduct;
pub use mbrepr::{check_dim, MBRepr};
pub use raw::{RawFactor, RawMB};
