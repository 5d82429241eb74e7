//! One-fold Mellin–Barnes integrands
//! `∫dt (kappa z)^t Γ(−t) ∏Γ(A_i+t)∏Γ(C_k−t) / ∏Γ(B_j+t)∏Γ(D_l−t)`.

use serde::Serialize;

use super::gamma::GammaProduct;
use crate::algebra::epslin::rat_serde;
use crate::algebra::{LinearForm, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MBRepr {
    /// Names of the symbols addressed by `LinearForm::j_coeffs`; `n` is implicit.
    pub symbols: Vec<String>,
    #[serde(with = "rat_serde")]
    pub kappa: Rat,
    pub var: String,
    pub a_forms: Vec<LinearForm>,
    pub b_forms: Vec<LinearForm>,
    pub c_forms: Vec<LinearForm>,
    pub d_forms: Vec<LinearForm>,
    pub prefactor: GammaProduct,
}

/// `dim A + dim D − dim B − dim C = 1`.
pub fn dims_ok(a: usize, b: usize, c: usize, d: usize) -> bool {
    a + d == b + c + 1
}

pub fn check_dim(m: &MBRepr) -> bool {
    dims_ok(m.a_forms.len(), m.b_forms.len(), m.c_forms.len(), m.d_forms.len())
}

impl MBRepr {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        symbols: Vec<String>,
        kappa: Rat,
        var: &str,
        a_forms: Vec<LinearForm>,
        b_forms: Vec<LinearForm>,
        c_forms: Vec<LinearForm>,
        d_forms: Vec<LinearForm>,
        prefactor: GammaProduct,
    ) -> Result<Self> {
        let m = MBRepr { symbols, kappa, var: var.to_string(), a_forms, b_forms, c_forms, d_forms, prefactor };
        if !check_dim(&m) {
            return Err(Error::Dimension(format!(
                "dims (A, B, C, D) = ({}, {}, {}, {}) give {} instead of 1",
                m.a_forms.len(),
                m.b_forms.len(),
                m.c_forms.len(),
                m.d_forms.len(),
                m.a_forms.len() as i64 + m.d_forms.len() as i64 - m.b_forms.len() as i64 - m.c_forms.len() as i64
            )));
        }
        Ok(m)
    }

    /// Number of pole families closed on the right.
    pub fn family_count(&self) -> usize {
        1 + self.c_forms.len()
    }
}
