//! Coefficient fields that can host hypergeometric parameters.

use super::epslin::EpsLin;
use super::field::{Field, Ring};
use super::poly::Poly;
use super::rat::Rat;
use super::ratfunc::{EpsField, RatFunc};
use super::series::{eps_inv, eps_mul};
use crate::error::{Error, Result};

/// A field containing every parameter value, with an eps expansion map.
pub trait ParamField: Field {
    /// `None` when the value needs eps but the field has none.
    fn from_epslin(e: &EpsLin) -> Option<Self>;
    /// Truncated eps expansion to order `k`.
    fn eps_series(&self, k: usize) -> Result<Vec<Rat>>;
    fn to_eps_field(&self) -> EpsField;
}

impl ParamField for Rat {
    fn from_epslin(e: &EpsLin) -> Option<Self> {
        e.eps_part.is_zero().then(|| e.const_part.clone())
    }
    fn eps_series(&self, k: usize) -> Result<Vec<Rat>> {
        let mut v = vec![Rat::zero(); k + 1];
        v[0] = self.clone();
        Ok(v)
    }
    fn to_eps_field(&self) -> EpsField {
        EpsField::constant(self.clone())
    }
}

impl ParamField for EpsField {
    fn from_epslin(e: &EpsLin) -> Option<Self> {
        Some(eps_value(e))
    }
    fn eps_series(&self, k: usize) -> Result<Vec<Rat>> {
        let pad = |p: &Poly<Rat>| (0..=k).map(|i| p.coeff(i)).collect::<Vec<_>>();
        if self.den().coeff(0).is_zero() {
            return Err(Error::PoleAtEpsZero(format!("coefficient {} is singular at eps = 0", self.render(&["eps"]))));
        }
        Ok(eps_mul(&pad(self.num()), &eps_inv(&pad(self.den()), k)?, k))
    }
    fn to_eps_field(&self) -> EpsField {
        self.clone()
    }
}

/// `A + a*eps` as an element of ℚ(eps).
pub fn eps_value(e: &EpsLin) -> EpsField {
    RatFunc::from_poly(Poly::new(vec![e.const_part.clone(), e.eps_part.clone()]))
}

/// The variable eps.
pub fn eps_var() -> EpsField {
    RatFunc::var()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    #[test]
    fn expansion_of_inverse() {
        let x = eps_value(&EpsLin::new(int(1), int(2))).inv_ref();
        assert_eq!(x.eps_series(2).unwrap(), vec![int(1), int(-2), int(4)]);
        let e = eps_var().inv_ref();
        assert!(e.eps_series(1).is_err());
        assert!(Rat::from_epslin(&EpsLin::eps(int(1))).is_none());
    }
}
