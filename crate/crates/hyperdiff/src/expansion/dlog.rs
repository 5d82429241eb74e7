//! Linear systems `f' = Σ_l M_l(eps) f / (z − l)` solved order by order in eps.

use std::collections::BTreeMap;

use super::coeff::Coeff;
use super::gpl::PolyLogExpr;
use crate::algebra::rat::Rat;
use crate::algebra::Poly;
use crate::error::{Error, Result};

/// Matrix entries are polynomials in eps.
#[derive(Clone, Debug, PartialEq)]
pub struct DlogSystem<C> {
    pub var: String,
    pub unknowns: Vec<String>,
    pub letters: BTreeMap<Rat, Vec<Vec<Poly<C>>>>,
    /// Values at `z = 0`.
    pub boundary: Vec<Poly<C>>,
}

impl<C: Coeff> DlogSystem<C> {
    pub fn new(var: &str, unknowns: &[&str]) -> Self {
        DlogSystem {
            var: var.to_string(),
            unknowns: unknowns.iter().map(|s| s.to_string()).collect(),
            letters: BTreeMap::new(),
            boundary: vec![Poly::zero(); unknowns.len()],
        }
    }

    pub fn dim(&self) -> usize {
        self.unknowns.len()
    }

    /// Adds `c(eps) f_j / (z − l)` to the equation for `f_i'`.
    pub fn add(&mut self, l: Rat, i: usize, j: usize, c: Poly<C>) {
        let d = self.dim();
        let m = self.letters.entry(l).or_insert_with(|| vec![vec![Poly::zero(); d]; d]);
        m[i][j] = m[i][j].add(&c);
    }

    pub fn entry(&self, l: &Rat, i: usize, j: usize) -> Poly<C> {
        self.letters.get(l).map_or_else(Poly::zero, |m| m[i][j].clone())
    }

    fn eps0_coupled(&self, i: usize, j: usize) -> bool {
        self.letters.values().any(|m| !m[i][j].coeff(0).is_zero())
    }

    /// Unknowns ordered so that every eps^0 coupling points to an earlier one.
    pub fn solve_order(&self) -> Result<Vec<usize>> {
        let d = self.dim();
        for i in 0..d {
            if self.eps0_coupled(i, i) {
                return Err(Error::NotTriangular(format!("{} couples to itself at eps^0", self.unknowns[i])));
            }
        }
        let mut order = Vec::new();
        let mut done = vec![false; d];
        while order.len() < d {
            let next = (0..d).find(|&i| !done[i] && (0..d).all(|j| done[j] || j == i || !self.eps0_coupled(i, j)));
            match next {
                Some(i) => {
                    done[i] = true;
                    order.push(i);
                }
                None => return Err(Error::NotTriangular("eps^0 couplings form a cycle".into())),
            }
        }
        Ok(order)
    }

    /// `out[i][m]` is the eps^m coefficient of unknown `i`, for `m ≤ k`.
    pub fn solve(&self, k: usize) -> Result<Vec<Vec<PolyLogExpr<C>>>> {
        let order = self.solve_order()?;
        let d = self.dim();
        let mut sol: Vec<Vec<PolyLogExpr<C>>> = vec![Vec::with_capacity(k + 1); d];
        for m in 0..=k {
            let mut layer: Vec<Option<PolyLogExpr<C>>> = vec![None; d];
            for &i in &order {
                let mut f = PolyLogExpr::constant(self.boundary[i].coeff(m), &self.var);
                for (l, mat) in &self.letters {
                    let mut integrand = PolyLogExpr::zero(&self.var);
                    for j in 0..d {
                        for (e, c) in mat[i][j].coeffs().iter().enumerate().take(m + 1) {
                            if c.is_zero() {
                                continue;
                            }
                            let fj = if e == 0 { layer[j].as_ref().expect("solve order") } else { &sol[j][m - e] };
                            integrand = integrand.add(&fj.mul_coeff(c));
                        }
                    }
                    if !integrand.is_zero() {
                        f = f.add(&integrand.integrate(l)?);
                    }
                }
                layer[i] = Some(f);
            }
            for (i, f) in layer.into_iter().enumerate() {
                sol[i].push(f.expect("every unknown solved"));
            }
        }
        Ok(sol)
    }
}
