//! Composition of step operators into `S·F(target) = Σ R_j θ^j F(basis) + R̃`.

use serde::Serialize;

use super::step::{direct_matrix, is_unit, Step, Which};
use crate::algebra::field::{Field, Ring};
use crate::algebra::param::ParamField;
use crate::algebra::poly::Poly;
use crate::algebra::rat::{to_i64, Rat};
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::theta::poly_series;
use crate::algebra::{EpsField, EpsLin, ZField};
use crate::error::{Error, Result};
use crate::hyper::{field_value, series_of_hyper, theta_product, HyperFn};
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionResult {
    pub target: HyperFn,
    pub basis: HyperFn,
    /// Polynomial in z with coefficients in ℚ[eps].
    pub s_poly: ZField,
    /// `r_polys[j]` multiplies `θ^j F(basis)`.
    pub r_polys: Vec<ZField>,
    pub algebraic_tail: ZField,
}

impl ReductionResult {
    pub fn render(&self) -> ReductionText {
        let v = [self.basis.var.as_str(), "eps"];
        ReductionText { s: self.s_poly.render(&v), r: self.r_polys.iter().map(|r| r.render(&v)).collect(), tail: self.algebraic_tail.render(&v) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionText {
    pub s: String,
    pub r: Vec<String>,
    pub tail: String,
}

/// Integer difference `a - b` when the eps parts agree.
pub fn integer_gap(a: &EpsLin, b: &EpsLin) -> Option<i64> {
    a.sub(b).as_integer()
}

/// Reorders the target parameters so that each differs from the basis one by an integer.
pub fn align(target: &HyperFn, basis: &HyperFn) -> Result<HyperFn> {
    let pick = |from: &[EpsLin], to: &[EpsLin], what: &str| -> Result<Vec<EpsLin>> {
        let mut used = vec![false; from.len()];
        to.iter()
            .map(|b| {
                let best = (0..from.len()).filter(|&i| !used[i]).filter_map(|i| integer_gap(&from[i], b).map(|d| (d.abs(), i))).min();
                let (_, i) =
                    best.ok_or_else(|| Error::NotIntegerShift(format!("no {what} parameter of the target differs from {b} by an integer")))?;
                used[i] = true;
                Ok(from[i].clone())
            })
            .collect()
    };
    let (target, basis) = if target.p() != basis.p() { (target.cancel_pairs(), basis.cancel_pairs()) } else { (target.clone(), basis.clone()) };
    if target.p() != basis.p() {
        return Err(Error::NotIntegerShift(format!("{target} and {basis} have different orders")));
    }
    if target.kappa != basis.kappa {
        return Err(Error::Invalid("target and basis have different arguments".into()));
    }
    let upper = pick(&target.upper, &basis.upper, "upper")?;
    let lower = pick(&target.lower, &basis.lower, "lower")?;
    HyperFn::new(upper, lower, basis.kappa.clone(), &basis.var)
}

/// Canonical path: uppers left to right, then lowers left to right.
pub fn canonical_path(target: &HyperFn, basis: &HyperFn) -> Result<Vec<Step>> {
    let mut path = Vec::new();
    let lists = [(Which::Upper, &target.upper, &basis.upper), (Which::Lower, &target.lower, &basis.lower)];
    for (which, t, b) in lists {
        if t.len() != b.len() {
            return Err(Error::NotIntegerShift("parameter lists differ in length".into()));
        }
        for (index, (x, y)) in t.iter().zip(b.iter()).enumerate() {
            let d = integer_gap(x, y).ok_or_else(|| Error::NotIntegerShift(format!("{x} - {y} is not an integer")))?;
            let direction = d.signum() as i32;
            path.extend((0..d.unsigned_abs()).map(|_| Step { which, index, direction }));
        }
    }
    Ok(path)
}

/// Reduction along the canonical path, aligning parameter order first.
pub fn reduce_to_basis(target: &HyperFn, basis: &HyperFn) -> Result<ReductionResult> {
    let basis_c = if target.p() != basis.p() { basis.cancel_pairs() } else { basis.clone() };
    let target = align(target, &basis_c)?;
    let path = canonical_path(&target, &basis_c)?;
    reduce_along(&basis_c, &path)
}

/// Reduction of `basis` shifted by `path`.
pub fn reduce_along(basis: &HyperFn, path: &[Step]) -> Result<ReductionResult> {
    if basis.is_eps_free() {
        reduce_in::<Rat>(basis, path)
    } else {
        reduce_in::<EpsField>(basis, path)
    }
}

fn reduce_in<F: ParamField>(basis: &HyperFn, path: &[Step]) -> Result<ReductionResult> {
    let mut fns = vec![basis.clone()];
    for s in path {
        fns.push(s.apply(fns.last().unwrap()));
    }
    let target = fns.last().unwrap().clone();
    let n = basis.p() + 1;
    let mut row: Vec<RatFunc<F>> = (0..n).map(|i| if i == 0 { RatFunc::one() } else { RatFunc::zero() }).collect();
    for (i, s) in path.iter().enumerate().rev() {
        row = if s.is_direct() {
            direct_matrix::<F>(&fns[i], s.which, s.index)?.left_apply(&row)
        } else {
            direct_matrix::<F>(&fns[i + 1], s.which, s.index)?
                .left_solve(&row)
                .ok_or_else(|| Error::SingularStep(format!("step from {} to {} is not invertible", fns[i], fns[i + 1])))?
        };
    }
    let (row, tail) = match basis.upper.iter().position(is_unit) {
        Some(i0) => eliminate_top(basis, i0, row)?,
        None => (row, RatFunc::zero()),
    };
    let lift = |r: &RatFunc<F>| r.map_coeffs(|c| c.to_eps_field());
    let row: Vec<ZField> = row.iter().map(lift).collect();
    let (s_poly, r_polys, algebraic_tail) = normalize(row, lift(&tail));
    Ok(ReductionResult { target, basis: basis.clone(), s_poly, r_polys, algebraic_tail })
}

/// With a unit upper parameter, `L = θ L'` and `L'F = −∏(b_k − 1)`; this removes `θ^p F`.
fn eliminate_top<F: ParamField>(basis: &HyperFn, i0: usize, mut row: Vec<RatFunc<F>>) -> Result<(Vec<RatFunc<F>>, RatFunc<F>)> {
    let p = basis.p();
    let others: Vec<F> = basis.upper.iter().enumerate().filter(|&(i, _)| i != i0).map(|(_, a)| field_value(a)).collect::<Result<_>>()?;
    let lowers: Vec<F> = basis.lower.iter().map(|b| field_value(&b.add_int(-1))).collect::<Result<_>>()?;
    let kz = Poly::monomial(F::from_rat(&basis.kappa), 1);
    // coefficients of L' in θ, each a polynomial in z
    let zpart = theta_product(&others);
    let cpart = theta_product(&lowers);
    let lprime: Vec<RatFunc<F>> = (0..=p).map(|k| RatFunc::from_poly(kz.scale(&zpart.coeff(k)).sub(&Poly::constant(cpart.coeff(k))))).collect();
    let value = lowers.iter().fold(F::one(), |acc, b| acc.mul_ref(b)).neg_ref();
    let top = row.pop().unwrap();
    let q = top.div_ref(&lprime[p]);
    for (k, r) in row.iter_mut().enumerate() {
        *r = r.sub_ref(&q.mul_ref(&lprime[k]));
    }
    Ok((row, q.mul_ref(&RatFunc::constant(value))))
}

fn lcm(a: &Poly<EpsField>, b: &Poly<EpsField>) -> Poly<EpsField> {
    a.mul(b).div_exact(&a.gcd(b))
}

/// Clears z and eps denominators and fixes the scale so the result is canonical.
fn normalize(row: Vec<ZField>, tail: ZField) -> (ZField, Vec<ZField>, ZField) {
    let all: Vec<&ZField> = row.iter().chain([&tail]).collect();
    let d = all.iter().fold(Poly::one(), |acc, r| lcm(&acc, r.den()));
    let polys: Vec<Poly<EpsField>> = std::iter::once(d.clone()).chain(all.iter().map(|r| r.num().mul(&d.div_exact(r.den())))).collect();
    let coeffs: Vec<&EpsField> = polys.iter().flat_map(|p| p.coeffs()).collect();
    let den_l = coeffs.iter().fold(Poly::<Rat>::one(), |acc, c| acc.mul(c.den()).div_exact(&acc.gcd(c.den())));
    let cleared: Vec<Poly<Rat>> = coeffs.iter().map(|c| c.num().mul(&den_l.div_exact(c.den()))).collect();
    let g = cleared.iter().fold(Poly::<Rat>::zero(), |acc, c| acc.gcd(c));
    let lead = polys[0].lc().num().mul(&den_l.div_exact(polys[0].lc().den())).div_exact(&g).lc();
    let factor = RatFunc::new(den_l, g.scale(&lead));
    let to_z = |p: &Poly<EpsField>| RatFunc::from_poly(p.scale(&factor));
    let mut it = polys.iter().map(to_z);
    let s = it.next().unwrap();
    let mut rest: Vec<ZField> = it.collect();
    let t = rest.pop().unwrap();
    (s, rest, t)
}

/// Substitutes the oracle series into both sides and compares to `z^n`, `eps^k`.
pub fn verify_reduction(r: &ReductionResult, n: usize, k: usize) -> Result<Verdict> {
    let lhs = poly_series(r.s_poly.num(), n, k)?.mul(&series_of_hyper(&r.target, n, k)?);
    let base = series_of_hyper(&r.basis, n, k)?;
    let mut rhs = poly_series(r.algebraic_tail.num(), n, k)?;
    let mut cur = base;
    for (j, rj) in r.r_polys.iter().enumerate() {
        if j > 0 {
            cur = cur.theta();
        }
        rhs = rhs.add(&poly_series(rj.num(), n, k)?.mul(&cur));
    }
    Ok(Verdict::from_mismatch(lhs.first_mismatch(&rhs)))
}

/// Largest absolute shift in a path, for reporting.
pub fn shift_length(target: &HyperFn, basis: &HyperFn) -> Option<u64> {
    let t = align(target, basis).ok()?;
    let gaps = t.upper.iter().zip(&basis.upper).chain(t.lower.iter().zip(&basis.lower));
    gaps.map(|(a, b)| to_i64(&a.sub(b).const_part).map(|d| d.unsigned_abs())).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    fn e(c: Rat, x: Rat) -> EpsLin {
        EpsLin::new(c, x)
    }

    fn gauss(a: EpsLin, b: EpsLin, c: EpsLin) -> HyperFn {
        HyperFn::simple(vec![a, b], vec![c]).unwrap()
    }

    #[test]
    fn identity_reduction() {
        let f = gauss(e(rat(1, 3), int(1)), e(rat(1, 5), int(0)), e(rat(2, 7), int(2)));
        let r = reduce_to_basis(&f, &f).unwrap();
        assert_eq!(r.s_poly, ZField::one());
        assert_eq!(r.r_polys, vec![ZField::one(), ZField::zero()]);
        assert!(r.algebraic_tail.is_zero());
        assert!(verify_reduction(&r, 10, 2).unwrap().passed());
    }

    #[test]
    fn lowered_c_two_term_relation() {
        let (a, b, c) = (rat(1, 3), rat(2, 5), rat(3, 7));
        let basis = gauss(EpsLin::constant(a.clone()), EpsLin::constant(b.clone()), EpsLin::constant(c.clone()));
        let target = gauss(EpsLin::constant(a), EpsLin::constant(b), EpsLin::constant(c - int(1)));
        let r = reduce_to_basis(&target, &basis).unwrap();
        assert!(r.r_polys.iter().all(|x| !x.is_zero()));
        assert_eq!(verify_reduction(&r, 30, 0).unwrap(), Verdict::Pass);
    }

    #[test]
    fn upper_raise_on_unit_parameter() {
        // F(2,b;c) = (θ+1)F(1,b;c), then θ^1 is traded for the tail
        let basis = gauss(EpsLin::int(1), e(rat(1, 3), int(1)), e(rat(5, 4), int(-1)));
        let target = basis.with_upper(0, EpsLin::int(2));
        let r = reduce_to_basis(&target, &basis).unwrap();
        assert_eq!(r.r_polys.len(), 1);
        assert!(!r.algebraic_tail.is_zero());
        assert_eq!(verify_reduction(&r, 30, 2).unwrap(), Verdict::Pass);
    }

    #[test]
    fn corrupted_coefficient_is_caught() {
        let basis = gauss(e(rat(1, 3), int(1)), e(rat(2, 5), int(0)), e(rat(3, 7), int(0)));
        let target = basis.with_lower(0, e(rat(10, 7), int(0)));
        let mut r = reduce_to_basis(&target, &basis).unwrap();
        r.r_polys[1] = r.r_polys[1].add_ref(&ZField::var().mul_ref(&ZField::var()));
        assert_eq!(verify_reduction(&r, 30, 2).unwrap(), Verdict::Mismatch { z_power: 3, eps_power: 0 });
    }

    #[test]
    fn non_integer_shift_rejected() {
        let basis = gauss(e(rat(1, 3), int(1)), e(rat(2, 5), int(0)), e(rat(3, 7), int(0)));
        let target = basis.with_upper(0, e(rat(1, 2), int(1)));
        assert!(matches!(reduce_to_basis(&target, &basis), Err(Error::NotIntegerShift(_))));
    }
}
