//! Generalized hypergeometric functions `p+1Fp[upper; lower; kappa*z]` and their series.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::epslin::rat_serde;
use crate::algebra::field::Ring;
use crate::algebra::param::ParamField;
use crate::algebra::poly::Poly;
use crate::algebra::rat::{fmt_rat, int, Rat};
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::series::{eps_inv, eps_mul, BiSeries};
use crate::algebra::{EpsLin, ThetaOp};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HyperFn {
    pub upper: Vec<EpsLin>,
    pub lower: Vec<EpsLin>,
    #[serde(with = "rat_serde")]
    pub kappa: Rat,
    pub var: String,
}

impl PartialEq for HyperFn {
    /// Parameter order does not matter.
    fn eq(&self, o: &Self) -> bool {
        let sorted = |v: &[EpsLin]| {
            let mut v = v.to_vec();
            v.sort();
            v
        };
        self.kappa == o.kappa && self.var == o.var && sorted(&self.upper) == sorted(&o.upper) && sorted(&self.lower) == sorted(&o.lower)
    }
}

impl HyperFn {
    pub fn new(upper: Vec<EpsLin>, lower: Vec<EpsLin>, kappa: Rat, var: &str) -> Result<Self> {
        if upper.len() != lower.len() + 1 {
            return Err(Error::Invalid(format!(
                "{} upper and {} lower parameters; a p+1Fp needs one more upper than lower",
                upper.len(),
                lower.len()
            )));
        }
        Ok(HyperFn { upper, lower, kappa, var: var.to_string() })
    }

    /// Argument `z` with unit prefactor.
    pub fn simple(upper: Vec<EpsLin>, lower: Vec<EpsLin>) -> Result<Self> {
        Self::new(upper, lower, int(1), "z")
    }

    /// The `p` of `p+1Fp`.
    pub fn p(&self) -> usize {
        self.lower.len()
    }

    /// True when no parameter carries eps.
    pub fn is_eps_free(&self) -> bool {
        self.upper.iter().chain(&self.lower).all(|x| x.eps_part == Rat::zero())
    }

    /// Drops upper/lower pairs that are identical.
    pub fn cancel_pairs(&self) -> HyperFn {
        let mut upper = self.upper.clone();
        let mut lower = Vec::new();
        for b in &self.lower {
            if let Some(i) = upper.iter().position(|a| a == b) {
                upper.remove(i);
            } else {
                lower.push(b.clone());
            }
        }
        HyperFn { upper, lower, kappa: self.kappa.clone(), var: self.var.clone() }
    }

    pub fn with_upper(&self, i: usize, v: EpsLin) -> HyperFn {
        let mut f = self.clone();
        f.upper[i] = v;
        f
    }

    pub fn with_lower(&self, i: usize, v: EpsLin) -> HyperFn {
        let mut f = self.clone();
        f.lower[i] = v;
        f
    }

    /// Argument text such as `z`, `-z` or `1/4*z`.
    pub fn argument(&self) -> String {
        let k = &self.kappa;
        if *k == int(1) {
            self.var.clone()
        } else if *k == int(-1) {
            format!("-{}", self.var)
        } else {
            format!("{}*{}", fmt_rat(k), self.var)
        }
    }
}

impl fmt::Display for HyperFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[EpsLin]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "{}F{}[{}; {}; {}]", self.p() + 1, self.p(), join(&self.upper), join(&self.lower), self.argument())
    }
}

/// Truncated double series of `f` in z (to `n`) and eps (to `k`).
pub fn series_of_hyper(f: &HyperFn, n: usize, k: usize) -> Result<BiSeries> {
    let mut out = BiSeries::zero(n, k);
    let mut term = vec![Rat::zero(); k + 1];
    term[0] = Rat::one();
    out.set(0, 0, Rat::one());
    for j in 1..=n {
        let m = (j - 1) as i64;
        for a in &f.upper {
            term = eps_mul(&term, &a.add_int(m).eps_poly(k), k);
        }
        for b in &f.lower {
            let d = b.add_int(m);
            if d.const_part == Rat::zero() {
                return Err(Error::PoleAtEpsZero(format!("lower parameter {b} gives ({b})_{j} = 0 at eps = 0")));
            }
            term = eps_mul(&term, &eps_inv(&d.eps_poly(k), k)?, k);
        }
        let scale = &f.kappa / int(j as i64);
        for t in term.iter_mut() {
            *t *= &scale;
        }
        for (e, v) in term.iter().enumerate() {
            out.set(j, e, v.clone());
        }
    }
    Ok(out)
}

/// Converts a parameter into the coefficient field.
pub fn field_value<F: ParamField>(e: &EpsLin) -> Result<F> {
    F::from_epslin(e).ok_or_else(|| Error::Invalid(format!("parameter {e} needs eps in the coefficient field")))
}

/// `∏ (θ + c_i)` as a polynomial in θ.
pub fn theta_product<F: ParamField>(cs: &[F]) -> Poly<F> {
    cs.iter().fold(Poly::one(), |acc, c| acc.mul(&Poly::new(vec![c.clone(), F::one()])))
}

/// `kappa*z ∏(θ + A_i) − θ ∏(θ + B_k − 1)`.
pub fn ode_operator<F: ParamField>(f: &HyperFn) -> Result<ThetaOp<F>> {
    let a: Vec<F> = f.upper.iter().map(field_value).collect::<Result<_>>()?;
    let b: Vec<F> = f.lower.iter().map(|x| field_value(&x.add_int(-1))).collect::<Result<_>>()?;
    let kz = RatFunc::from_poly(Poly::monomial(F::from_rat(&f.kappa), 1));
    let left = ThetaOp::from_theta_poly(&theta_product(&a)).left_mul(&kz);
    let right = ThetaOp::from_theta_poly(&theta_product(&b).shift(1));
    Ok(left.sub(&right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;
    use crate::algebra::EpsField;

    fn e(c: Rat, x: Rat) -> EpsLin {
        EpsLin::new(c, x)
    }

    #[test]
    fn two_f_one_one_one_two() {
        let f = HyperFn::simple(vec![EpsLin::int(1), EpsLin::int(1)], vec![EpsLin::int(2)]).unwrap();
        let s = series_of_hyper(&f, 6, 0).unwrap();
        for j in 0..=6 {
            assert_eq!(s.get(j, 0), &rat(1, j as i64 + 1));
        }
    }

    #[test]
    fn eps_squared_z_squared() {
        let (a, b, c) = (int(2), int(3), int(5));
        let f = HyperFn::simple(vec![e(int(0), a.clone()), e(int(0), b.clone())], vec![e(int(1), c)]).unwrap();
        let s = series_of_hyper(&f, 3, 2).unwrap();
        assert_eq!(s.get(2, 2), &(a * b / int(4)));
        assert_eq!(s.get(0, 0), &int(1));
    }

    #[test]
    fn ode_annihilates() {
        let f = HyperFn::new(vec![e(rat(1, 2), int(1)), e(rat(-1, 3), int(2))], vec![e(rat(5, 7), int(-1))], rat(1, 4), "z").unwrap();
        let l = ode_operator::<EpsField>(&f).unwrap();
        assert_eq!(l.degree(), Some(2));
        let s = series_of_hyper(&f, 20, 3).unwrap();
        assert!(l.apply(&s).unwrap().is_zero());
    }

    #[test]
    fn arity_and_display() {
        assert!(HyperFn::simple(vec![EpsLin::int(1)], vec![EpsLin::int(2)]).is_err());
        let f = HyperFn::new(vec![e(rat(1, 2), int(1)), e(int(0), int(-1))], vec![e(int(1), int(2))], int(-1), "x").unwrap();
        assert_eq!(f.to_string(), "2F1[1/2+eps, -eps; 1+2*eps; -x]");
    }

    #[test]
    fn pair_cancellation() {
        let f = HyperFn::simple(vec![EpsLin::int(1), EpsLin::int(2), EpsLin::constant(rat(1, 2))], vec![EpsLin::int(2), EpsLin::int(3)]).unwrap();
        let g = f.cancel_pairs();
        assert_eq!(g.p(), 1);
        assert_eq!(g.upper, vec![EpsLin::int(1), EpsLin::constant(rat(1, 2))]);
    }
}
