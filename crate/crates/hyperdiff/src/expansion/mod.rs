//! eps-expansion into Goncharov polylogarithms and the rational-parametrization conditions.

pub mod coeff;
pub mod dlog;
pub mod expand;
pub mod f3;
pub mod factorization;
pub mod gauss;
pub mod gpl;
pub mod system;
pub mod three_f2;
pub mod verify;

pub use coeff::Coeff;
pub use dlog::DlogSystem;
pub use expand::{classify, epsilon_expand, expand, ExpParam, Expansion, ExpansionClass, HyperSpec};
pub use f3::{f3_parametrization_check, F3Form, F3Report};
pub use factorization::{elementary_symmetric, factorization_conditions, CaseTag, FactorizationReport, GaussTags};
pub use gauss::gauss_triangular_system;
pub use gpl::{gpl_series, GplWord, PolyLogExpr};
pub use system::TriangularSystem;
pub use three_f2::three_f2_system;
pub use verify::{verify_expansion, verify_symbolic};
