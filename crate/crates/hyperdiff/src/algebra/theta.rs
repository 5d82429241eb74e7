//! Operators `Σ c_k(z) θ^k` with `θ = z d/dz`.

use super::field::{render_term, Field, Ring};
use super::param::ParamField;
use super::poly::Poly;
use super::rat::binomial;
use super::ratfunc::RatFunc;
use super::series::BiSeries;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaOp<F: Field> {
    coeffs: Vec<RatFunc<F>>,
}

impl<F: Field> ThetaOp<F> {
    pub fn new(mut coeffs: Vec<RatFunc<F>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ThetaOp { coeffs }
    }

    pub fn zero() -> Self {
        ThetaOp { coeffs: vec![] }
    }

    pub fn identity() -> Self {
        Self::new(vec![RatFunc::one()])
    }

    pub fn theta() -> Self {
        Self::new(vec![RatFunc::zero(), RatFunc::one()])
    }

    /// Multiplication by a function of z.
    pub fn mul_by(c: RatFunc<F>) -> Self {
        Self::new(vec![c])
    }

    /// A polynomial in θ with constant coefficients.
    pub fn from_theta_poly(p: &Poly<F>) -> Self {
        Self::new(p.coeffs().iter().map(|c| RatFunc::constant(c.clone())).collect())
    }

    /// `θ + a`.
    pub fn theta_plus(a: F) -> Self {
        Self::new(vec![RatFunc::constant(a), RatFunc::one()])
    }

    pub fn coeffs(&self) -> &[RatFunc<F>] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFunc<F> {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add_ref(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub_ref(&o.coeff(i))).collect())
    }

    /// Left multiplication by a function of z.
    pub fn left_mul(&self, c: &RatFunc<F>) -> Self {
        Self::new(self.coeffs.iter().map(|a| c.mul_ref(a)).collect())
    }

    /// `self ∘ o`, using `θ^i c = Σ_l C(i,l) θ^l(c) θ^(i-l)`.
    pub fn compose(&self, o: &Self) -> Self {
        let (Some(da), Some(db)) = (self.degree(), o.degree()) else {
            return Self::zero();
        };
        let mut out = vec![RatFunc::zero(); da + db + 1];
        // derivs[j][l] = θ^l(b_j)
        let derivs: Vec<Vec<RatFunc<F>>> = o
            .coeffs
            .iter()
            .map(|b| {
                let mut v = vec![b.clone()];
                for l in 1..=da {
                    let t = v[l - 1].theta();
                    v.push(t);
                }
                v
            })
            .collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, dj) in derivs.iter().enumerate() {
                for l in 0..=i {
                    let d = &dj[l];
                    if d.is_zero() {
                        continue;
                    }
                    let t = a.mul_ref(d).scale(&binomial(i, l));
                    let idx = i - l + j;
                    out[idx] = out[idx].add_ref(&t);
                }
            }
        }
        Self::new(out)
    }

    pub fn render(&self, vars: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "theta".into(),
                _ => format!("theta^{k}"),
            };
            out += &render_term(c, &mono, vars, out.is_empty());
        }
        out
    }
}

impl<F: ParamField> ThetaOp<F> {
    /// The operator acting on a truncated series.
    pub fn apply(&self, s: &BiSeries) -> Result<BiSeries> {
        let mut acc: Option<BiSeries> = None;
        let mut cur = s.clone();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                cur = cur.theta();
            }
            if c.is_zero() {
                continue;
            }
            let t = ratfunc_times(c, &cur)?;
            acc = Some(match acc {
                None => t,
                Some(a) => a.add(&t),
            });
        }
        Ok(acc.unwrap_or_else(|| BiSeries::zero(s.z_order(), s.eps_order())))
    }
}

/// Series of a z-polynomial with field coefficients.
pub fn poly_series<F: ParamField>(p: &Poly<F>, n: usize, k: usize) -> Result<BiSeries> {
    let rows = (0..=n.min(p.coeffs().len().saturating_sub(1))).map(|j| p.coeff(j).eps_series(k)).collect::<Result<Vec<_>>>()?;
    Ok(BiSeries::from_rows(n, k, &rows))
}

/// `c(z) * s`, dividing out any power of z in the denominator of `c`.
pub fn ratfunc_times<F: ParamField>(c: &RatFunc<F>, s: &BiSeries) -> Result<BiSeries> {
    let (n, k) = (s.z_order(), s.eps_order());
    let num = poly_series(c.num(), n, k)?;
    let m = c.den().valuation();
    let mut prod = num.mul(s);
    if c.den().degree() != Some(m) || !c.den().coeff(m).is_one() {
        let d0 = Poly::new(c.den().coeffs()[m..].to_vec());
        prod = prod.mul(&poly_series(&d0, n, k)?.inv()?);
    }
    if m > 0 {
        prod = prod.shift_down(m)?;
    }
    Ok(prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, Rat};

    type Op = ThetaOp<Rat>;

    fn z() -> RatFunc<Rat> {
        RatFunc::var()
    }

    #[test]
    fn theta_times_z() {
        let t = Op::theta().compose(&Op::mul_by(z()));
        assert_eq!(t.coeffs(), &[z(), z()]);
        let id = Op::identity();
        let p = Op::theta_plus(int(3)).left_mul(&z());
        assert_eq!(id.compose(&p), p);
    }

    #[test]
    fn theta_on_series() {
        // θ Σ z^j/j = Σ z^j
        let s = BiSeries::from_fn(10, 0, |j, _| if j == 0 { int(0) } else { Rat::new(1.into(), (j as i64).into()) });
        let t = Op::theta().apply(&s).unwrap();
        for j in 1..=10 {
            assert_eq!(t.get(j, 0), &int(1));
        }
    }

    #[test]
    fn inverse_z_needs_vanishing_constant() {
        let op = Op::mul_by(z().inv_ref());
        assert!(op.apply(&BiSeries::one(5, 0)).is_err());
        let s = BiSeries::one(5, 0).shift_up(1);
        assert_eq!(op.apply(&s).unwrap().z_order(), 4);
    }
}
