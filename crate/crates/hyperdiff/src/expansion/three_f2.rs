//! `3F2(r/q + a1 eps, a2 eps, a3 eps; 1 + r/q + b1 eps, 1 − p/q + b2 eps; z)`.

use super::factorization::{parametrization_for, Candidate, CaseTag, FactorizationReport, HExponents};
use super::system::TriangularSystem;
use crate::algebra::rat::{fmt_rat, int, Rat};
use crate::algebra::{EpsField, Field, Poly, RatFunc, Ring, ZField};
use crate::error::{Error, Result};

fn eps_poly(c: &[Rat]) -> ZField {
    ZField::constant(RatFunc::from_poly(Poly::new(c.to_vec())))
}

/// Unknowns `omega`, `theta omega` and `(theta + r/q) theta omega`.
pub fn three_f2_system(r: i64, p: i64, q: i64, a: [Rat; 3], b: [Rat; 2]) -> Result<(TriangularSystem, FactorizationReport)> {
    if q == 0 {
        return Err(Error::Invalid("q must be nonzero".into()));
    }
    if a.iter().any(|x| *x == int(0)) {
        return Err(Error::Invalid("a1, a2, a3 must be nonzero".into()));
    }
    let s = Rat::new(r.into(), q.into());
    let t = Rat::new(p.into(), q.into());
    let [a1, a2, a3] = &a;
    let [b1, b2] = &b;
    let zero = int(0);
    let deltas = [-(a1 * &s), a1 * a2 + a1 * a3 + a2 * a3, b1 * Rat::new((p + r).into(), q.into()), -(b1 * b2)];
    let z = ZField::var();
    let zinv = z.inv_ref();
    let omz_inv = ZField::one().sub_ref(&z).inv_ref();
    // (1 − z) u2' = [t/z + (a1 + a2 + a3) eps − (b1 + b2) eps/z] u2 + (...) u0 + (...) u1
    let c22 = eps_poly(&[zero.clone(), a1 + a2 + a3]).add_ref(&eps_poly(&[t.clone(), -(b1 + b2)]).mul_ref(&zinv));
    let c20 = eps_poly(&[zero.clone(), zero.clone(), a2 * a3 * &s, a1 * a2 * a3]);
    let c21 = eps_poly(&[zero.clone(), deltas[0].clone(), deltas[1].clone()])
        .add_ref(&eps_poly(&[zero.clone(), deltas[2].clone(), deltas[3].clone()]).mul_ref(&zinv));
    let matrix = vec![
        vec![ZField::zero(), zinv.clone(), ZField::zero()],
        vec![ZField::zero(), eps_poly(&[-s.clone()]).mul_ref(&zinv), zinv.clone()],
        vec![c20.mul_ref(&omz_inv), c21.mul_ref(&omz_inv), c22.mul_ref(&omz_inv)],
    ];
    let system = TriangularSystem {
        var: "z".into(),
        unknowns: vec!["omega".into(), "sigma".into(), "phi".into()],
        matrix,
        boundary: vec![EpsField::one(), EpsField::zero(), EpsField::zero()],
        constants: ["delta1", "delta2", "delta3", "delta4"].iter().map(|n| n.to_string()).zip(deltas).collect(),
        substitutions: vec![
            "omega = 3F2".into(),
            format!("sigma = theta omega, rescaled by z^({}) after the redefinition", fmt_rat(&s)),
            format!("phi = (theta + {}) theta omega, rescaled by ((z-1)/z)^({})", fmt_rat(&s), fmt_rat(&t)),
        ],
    };
    // h(z) = z^((p+r)/q) (z − 1)^(−p/q)
    let r2 = -Rat::new((p + r).into(), q.into());
    let r1 = &r2 + &t;
    let h = HExponents::of(&r1, &r2);
    let possible = p == -r;
    let case = if possible { CaseTag::R2Zero } else { CaseTag::None };
    let mut cases = Vec::new();
    if r1 == r2 {
        cases.push(CaseTag::EqualR);
    }
    if r1 == zero {
        cases.push(CaseTag::R1Zero);
    }
    if r2 == zero {
        cases.push(CaseTag::R2Zero);
    }
    let report = FactorizationReport {
        case,
        beta: s.clone(),
        candidates: vec![Candidate { beta: s, r1: r1.clone(), r2: r2.clone(), cases }],
        parametrization: if possible { Some(format!("xi = (z/(z-1))^(1/{q})")) } else { parametrization_for(CaseTag::None, &h) },
        r1,
        r2,
        h,
        gauss: None,
    };
    Ok((system, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;
    use crate::algebra::EpsLin;
    use crate::hyper::HyperFn;
    use crate::series_of_hyper;

    fn data() -> ([Rat; 3], [Rat; 2]) {
        ([rat(1, 2), rat(-1, 3), int(2)], [rat(2, 7), rat(-3, 4)])
    }

    #[test]
    fn system_annihilates_oracle() {
        for (r, p, q) in [(1, -1, 2), (1, 1, 3), (0, 0, 1), (2, -1, 3)] {
            let (a, b) = data();
            let (sys, _) = three_f2_system(r, p, q, a.clone(), b.clone()).unwrap();
            let s = Rat::new(r.into(), q.into());
            let t = Rat::new(p.into(), q.into());
            let h = HyperFn::simple(
                vec![EpsLin::new(s.clone(), a[0].clone()), EpsLin::eps(a[1].clone()), EpsLin::eps(a[2].clone())],
                vec![EpsLin::new(int(1) + &s, b[0].clone()), EpsLin::new(int(1) - &t, b[1].clone())],
            )
            .unwrap();
            let w = series_of_hyper(&h, 14, 4).unwrap();
            let u1 = w.theta();
            let u2 = u1.theta().add(&u1.scale(&s));
            assert!(sys.check_series(&[w, u1, u2]).unwrap().passed(), "(r, p, q) = ({r}, {p}, {q})");
            assert!(sys.is_triangular().unwrap());
        }
    }

    #[test]
    fn parametrization_iff_p_minus_r() {
        let (a, b) = data();
        assert!(three_f2_system(1, -1, 2, a.clone(), b.clone()).unwrap().1.parametrization.is_some());
        assert!(three_f2_system(1, 1, 2, a.clone(), b.clone()).unwrap().1.parametrization.is_none());
        let (_, rep) = three_f2_system(0, 0, 1, a, b).unwrap();
        assert_eq!((rep.h.z_exp.clone(), rep.h.zm1_exp.clone()), (int(0), int(0)));
    }
}
