//! Truncated eps-polynomials, Pochhammer symbols and the two-variable series `BiSeries`.

use num_traits::{One, Zero};

use super::epslin::EpsLin;
use super::rat::{int, Rat};
use crate::error::{Error, Result};

/// Product of two eps-series truncated at order `k`.
pub fn eps_mul(a: &[Rat], b: &[Rat], k: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); k + 1];
    for (i, x) in a.iter().enumerate().take(k + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(k + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inverse of an eps-series truncated at order `k`; the constant term must be nonzero.
pub fn eps_inv(a: &[Rat], k: usize) -> Result<Vec<Rat>> {
    let a0 = a.first().cloned().unwrap_or_else(Rat::zero);
    if a0.is_zero() {
        return Err(Error::PoleAtEpsZero("inverse of a series vanishing at eps = 0".into()));
    }
    let inv0 = a0.recip();
    let mut out = vec![Rat::zero(); k + 1];
    out[0] = inv0.clone();
    for n in 1..=k {
        let mut s = Rat::zero();
        for i in 1..=n.min(a.len().saturating_sub(1)) {
            s += &a[i] * &out[n - i];
        }
        out[n] = -s * &inv0;
    }
    Ok(out)
}

/// `(x)_j` expanded in eps to order `k`.
pub fn pochhammer_eps(x: &EpsLin, j: usize, k: usize) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); k + 1];
    acc[0] = Rat::one();
    for m in 0..j {
        acc = eps_mul(&acc, &x.add_int(m as i64).eps_poly(k), k);
    }
    acc
}

/// `1/(x)_j` expanded in eps to order `k`.
pub fn inv_pochhammer_eps(x: &EpsLin, j: usize, k: usize) -> Result<Vec<Rat>> {
    for m in 0..j {
        if (&x.const_part + int(m as i64)).is_zero() {
            return Err(Error::PoleAtEpsZero(format!("({x})_{j} vanishes at eps = 0")));
        }
    }
    eps_inv(&pochhammer_eps(x, j, k), k)
}

/// Power series in z whose coefficients are truncated series in eps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    z_order: usize,
    eps_order: usize,
    coeffs: Vec<Vec<Rat>>,
}

impl BiSeries {
    pub fn zero(n: usize, k: usize) -> Self {
        BiSeries { z_order: n, eps_order: k, coeffs: vec![vec![Rat::zero(); k + 1]; n + 1] }
    }

    pub fn one(n: usize, k: usize) -> Self {
        let mut s = Self::zero(n, k);
        s.coeffs[0][0] = Rat::one();
        s
    }

    pub fn from_fn(n: usize, k: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        BiSeries { z_order: n, eps_order: k, coeffs: (0..=n).map(|j| (0..=k).map(|e| f(j, e)).collect()).collect() }
    }

    /// Build from per-z-power eps-series; missing entries are zero.
    pub fn from_rows(n: usize, k: usize, rows: &[Vec<Rat>]) -> Self {
        Self::from_fn(n, k, |j, e| rows.get(j).and_then(|r| r.get(e)).cloned().unwrap_or_else(Rat::zero))
    }

    pub fn z_order(&self) -> usize {
        self.z_order
    }

    pub fn eps_order(&self) -> usize {
        self.eps_order
    }

    pub fn get(&self, j: usize, k: usize) -> &Rat {
        &self.coeffs[j][k]
    }

    pub fn set(&mut self, j: usize, k: usize, v: Rat) {
        self.coeffs[j][k] = v;
    }

    /// The eps-series multiplying `z^j`.
    pub fn row(&self, j: usize) -> &[Rat] {
        &self.coeffs[j]
    }

    /// The z-series at eps order `k`.
    pub fn eps_layer(&self, k: usize) -> Vec<Rat> {
        self.coeffs.iter().map(|r| r[k].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    pub fn truncate(&self, n: usize, k: usize) -> Self {
        let (n, k) = (n.min(self.z_order), k.min(self.eps_order));
        Self::from_fn(n, k, |j, e| self.coeffs[j][e].clone())
    }

    fn common(&self, o: &Self) -> (usize, usize) {
        (self.z_order.min(o.z_order), self.eps_order.min(o.eps_order))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (n, k) = self.common(o);
        Self::from_fn(n, k, |j, e| &self.coeffs[j][e] + &o.coeffs[j][e])
    }

    pub fn sub(&self, o: &Self) -> Self {
        let (n, k) = self.common(o);
        Self::from_fn(n, k, |j, e| &self.coeffs[j][e] - &o.coeffs[j][e])
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.z_order, self.eps_order, |j, e| -&self.coeffs[j][e])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (n, k) = self.common(o);
        let mut out = Self::zero(n, k);
        for a in 0..=n {
            for b in 0..=(n - a) {
                let prod = eps_mul(&self.coeffs[a], &o.coeffs[b], k);
                for (e, v) in prod.into_iter().enumerate() {
                    out.coeffs[a + b][e] += v;
                }
            }
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::from_fn(self.z_order, self.eps_order, |j, e| &self.coeffs[j][e] * r)
    }

    /// Multiply by an eps-series independent of z.
    pub fn mul_eps(&self, c: &[Rat]) -> Self {
        let k = self.eps_order;
        let rows: Vec<Vec<Rat>> = self.coeffs.iter().map(|r| eps_mul(r, c, k)).collect();
        BiSeries { z_order: self.z_order, eps_order: k, coeffs: rows }
    }

    /// `z d/dz` termwise.
    pub fn theta(&self) -> Self {
        Self::from_fn(self.z_order, self.eps_order, |j, e| &self.coeffs[j][e] * int(j as i64))
    }

    /// Multiply by `z^m`, keeping the truncation order.
    pub fn shift_up(&self, m: usize) -> Self {
        Self::from_fn(self.z_order, self.eps_order, |j, e| if j >= m { self.coeffs[j - m][e].clone() } else { Rat::zero() })
    }

    /// Divide by `z^m`; the truncation order drops by `m`.
    pub fn shift_down(&self, m: usize) -> Result<Self> {
        if m > self.z_order {
            return Err(Error::UncancelledPole(format!("z^-{m} exceeds truncation order {}", self.z_order)));
        }
        for j in 0..m {
            if self.coeffs[j].iter().any(|x| !x.is_zero()) {
                return Err(Error::UncancelledPole(format!("z^-{m} meets a nonzero z^{j} coefficient")));
            }
        }
        Ok(Self::from_fn(self.z_order - m, self.eps_order, |j, e| self.coeffs[j + m][e].clone()))
    }

    /// Multiplicative inverse; needs an invertible constant term at eps = 0.
    pub fn inv(&self) -> Result<Self> {
        let (n, k) = (self.z_order, self.eps_order);
        let c0 = eps_inv(&self.coeffs[0], k)?;
        let mut out = Self::zero(n, k);
        out.coeffs[0] = c0.clone();
        for j in 1..=n {
            let mut s = vec![Rat::zero(); k + 1];
            for i in 1..=j {
                let t = eps_mul(&self.coeffs[i], &out.coeffs[j - i], k);
                for (e, v) in t.into_iter().enumerate() {
                    s[e] += v;
                }
            }
            let neg: Vec<Rat> = s.into_iter().map(|x| -x).collect();
            out.coeffs[j] = eps_mul(&neg, &c0, k);
        }
        Ok(out)
    }

    /// Lowest `(j, k)` where the two series differ, ordered by z power first.
    pub fn first_mismatch(&self, o: &Self) -> Option<(usize, usize)> {
        let (n, k) = self.common(o);
        for j in 0..=n {
            for e in 0..=k {
                if self.coeffs[j][e] != o.coeffs[j][e] {
                    return Some((j, e));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn pochhammer_examples() {
        let x = EpsLin::new(rat(1, 2), int(1));
        assert_eq!(pochhammer_eps(&x, 2, 2), vec![rat(3, 4), int(2), int(1)]);
        assert_eq!(pochhammer_eps(&x, 0, 3), vec![int(1), int(0), int(0), int(0)]);
        let a = EpsLin::eps(int(5));
        // 5eps(1+5eps)(2+5eps): eps^1 coefficient 5*2!
        assert_eq!(pochhammer_eps(&a, 3, 1), vec![int(0), int(10)]);
    }

    #[test]
    fn inverse_pochhammer() {
        let x = EpsLin::new(int(1), int(3));
        assert_eq!(inv_pochhammer_eps(&x, 1, 2).unwrap(), vec![int(1), int(-3), int(9)]);
        let bad = EpsLin::new(int(-1), int(3));
        assert!(matches!(inv_pochhammer_eps(&bad, 2, 1), Err(Error::PoleAtEpsZero(_))));
        assert_eq!(inv_pochhammer_eps(&bad, 0, 1).unwrap(), vec![int(1), int(0)]);
    }

    #[test]
    fn truncation_takes_minimum() {
        let a = BiSeries::one(5, 3);
        let b = BiSeries::one(3, 4);
        let c = a.mul(&b);
        assert_eq!((c.z_order(), c.eps_order()), (3, 3));
    }

    #[test]
    fn inverse_of_one_minus_z() {
        let s = BiSeries::from_rows(6, 1, &[vec![int(1)], vec![int(-1)]]);
        let inv = s.inv().unwrap();
        for j in 0..=6 {
            assert_eq!(inv.get(j, 0), &int(1));
        }
        assert!(s.mul(&inv).sub(&BiSeries::one(6, 1)).is_zero());
    }

    #[test]
    fn shifts() {
        let s = BiSeries::from_rows(4, 0, &[vec![int(0)], vec![int(2)]]);
        let d = s.shift_down(1).unwrap();
        assert_eq!(d.z_order(), 3);
        assert_eq!(d.get(0, 0), &int(2));
        assert!(BiSeries::one(3, 0).shift_down(1).is_err());
    }
}
