//! Exact rational, eps-linear, rational-function, θ-operator and truncated-series arithmetic.

pub mod epslin;
pub mod expr;
pub mod field;
pub mod linear_form;
pub mod param;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod series;
pub mod sympoly;
pub mod theta;

pub use epslin::EpsLin;
pub use field::{Field, Ring};
pub use linear_form::LinearForm;
pub use param::{eps_value, eps_var, ParamField};
pub use poly::Poly;
pub use rat::{int, rat, Rat};
pub use ratfunc::{EpsField, RatFunc};
pub use series::{inv_pochhammer_eps, pochhammer_eps, BiSeries};
pub use sympoly::SymPoly;
pub use theta::ThetaOp;

/// Rational functions in z over ℚ(eps).
pub type ZField = RatFunc<EpsField>;
