//! The `(omega, rho)` system of `2F1(p1/q + a1 eps, p2/q + a2 eps; 1 − r/q + c eps; z)`.

use super::system::TriangularSystem;
use crate::algebra::rat::{fmt_rat, int, Rat};
use crate::algebra::{EpsField, Field, Poly, RatFunc, Ring, ZField};
use crate::error::{Error, Result};

fn lin(c: Rat, e: Rat) -> EpsField {
    RatFunc::from_poly(Poly::new(vec![c, e]))
}

fn k(x: EpsField) -> ZField {
    ZField::constant(x)
}

/// `rho = (θ + beta) omega`; triangular iff the eps^0 coefficient of `omega` in the `rho` equation vanishes.
#[allow(clippy::too_many_arguments)]
pub fn gauss_triangular_system(p1: i64, p2: i64, r: i64, q: i64, a1: &Rat, a2: &Rat, c: &Rat, beta: &Rat) -> Result<TriangularSystem> {
    if q == 0 {
        return Err(Error::Invalid("q must be nonzero".into()));
    }
    let f = |x: i64| Rat::new(x.into(), q.into());
    let (big_p1, big_p2) = (lin(f(p1), a1.clone()), lin(f(p2), a2.clone()));
    let big_r = lin(-f(r), c.clone());
    let b = EpsField::from_rat(beta);
    let z = ZField::var();
    let zinv = z.inv_ref();
    let zm1inv = z.sub_ref(&ZField::one()).inv_ref();
    // (z − 1) rho' = [beta − P1 − P2 + (R − beta)/z] rho − [(beta − P1)(beta − P2) + beta (R − beta)/z] omega
    let x = k(b.sub_ref(&big_p1).sub_ref(&big_p2)).add_ref(&k(big_r.sub_ref(&b)).mul_ref(&zinv));
    let y = k(b.sub_ref(&big_p1).mul_ref(&b.sub_ref(&big_p2))).add_ref(&k(b.mul_ref(&big_r.sub_ref(&b))).mul_ref(&zinv));
    let matrix = vec![vec![k(b.neg_ref()).mul_ref(&zinv), zinv.clone()], vec![y.neg_ref().mul_ref(&zm1inv), x.mul_ref(&zm1inv)]];
    let bracket0 = (beta - f(p1)) * (beta - f(p2));
    let bracket1 = beta * (beta + f(r));
    if bracket0 != int(0) || bracket1 != int(0) {
        return Err(Error::NotTriangular(format!("omega couples at eps^0 with constant {} and 1/z part {}", fmt_rat(&bracket0), fmt_rat(&bracket1))));
    }
    Ok(TriangularSystem {
        var: "z".into(),
        unknowns: vec!["omega".into(), "rho".into()],
        matrix,
        boundary: vec![EpsField::one(), b],
        constants: vec![("beta".into(), beta.clone())],
        substitutions: vec!["omega = 2F1".into(), format!("rho = (theta + {}) omega", fmt_rat(beta))],
    })
}
