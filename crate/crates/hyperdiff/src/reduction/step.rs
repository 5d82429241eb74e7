//! Contiguous step operators represented in the quotient module modulo the ODE.

use serde::{Deserialize, Serialize};

use crate::algebra::field::{Field, Ring};
use crate::algebra::param::ParamField;
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::{EpsLin, ThetaOp};
use crate::error::{Error, Result};
use crate::hyper::{field_value, ode_operator, HyperFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Which {
    Upper,
    Lower,
}

/// One unit shift of one parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub which: Which,
    pub index: usize,
    /// +1 or -1.
    pub direction: i32,
}

impl Step {
    pub fn apply(&self, f: &HyperFn) -> HyperFn {
        let d = self.direction as i64;
        match self.which {
            Which::Upper => f.with_upper(self.index, f.upper[self.index].add_int(d)),
            Which::Lower => f.with_lower(self.index, f.lower[self.index].add_int(d)),
        }
    }

    /// Upper raise and lower lowering have a direct operator; the others need an inverse.
    pub fn is_direct(&self) -> bool {
        matches!((self.which, self.direction), (Which::Upper, 1) | (Which::Lower, -1))
    }
}

/// Square matrix over rational functions, acting on `(F, θF, …, θ^p F)`.
#[derive(Clone, Debug, PartialEq)]
pub struct OpMatrix<F: Field> {
    rows: Vec<Vec<RatFunc<F>>>,
}

impl<F: Field> OpMatrix<F> {
    pub fn new(rows: Vec<Vec<RatFunc<F>>>) -> Self {
        OpMatrix { rows }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).map(|i| (0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<RatFunc<F>>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc<F> {
        &self.rows[i][j]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.dim();
        Self::new(
            (0..n)
                .map(|i| (0..n).map(|j| (0..n).fold(RatFunc::zero(), |acc, k| acc.add_ref(&self.rows[i][k].mul_ref(&o.rows[k][j])))).collect())
                .collect(),
        )
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, row: &[RatFunc<F>]) -> Vec<RatFunc<F>> {
        let n = self.dim();
        (0..n).map(|j| (0..n).fold(RatFunc::zero(), |acc, k| acc.add_ref(&row[k].mul_ref(&self.rows[k][j])))).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        Self::new((0..n).map(|i| (0..n).map(|j| self.rows[j][i].clone()).collect()).collect())
    }

    /// Solves `A x = b` by Gaussian elimination; `None` if singular.
    pub fn solve(&self, b: &[RatFunc<F>]) -> Option<Vec<RatFunc<F>>> {
        let n = self.dim();
        let mut a: Vec<Vec<RatFunc<F>>> = self.rows.iter().zip(b).map(|(r, x)| r.iter().cloned().chain([x.clone()]).collect()).collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            let inv = a[col][col].inv_ref();
            for c in col..=n {
                a[col][c] = a[col][c].mul_ref(&inv);
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..=n {
                        let t = f.mul_ref(&a[col][c]);
                        a[r][c] = a[r][c].sub_ref(&t);
                    }
                }
            }
        }
        Some(a.into_iter().map(|r| r[n].clone()).collect())
    }

    /// Row vector times the inverse, i.e. `x` with `x M = row`.
    pub fn left_solve(&self, row: &[RatFunc<F>]) -> Option<Vec<RatFunc<F>>> {
        self.transpose().solve(row)
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim();
        let id = Self::identity(n);
        let cols: Option<Vec<Vec<RatFunc<F>>>> = (0..n).map(|j| self.solve(&id.transpose().rows[j])).collect();
        Some(Self::new(cols?).transpose())
    }
}

/// Reduces `op` modulo `l` (left ideal) to θ-degree below `deg l`.
pub fn reduce_mod<F: Field>(op: &ThetaOp<F>, l: &ThetaOp<F>) -> ThetaOp<F> {
    let dl = l.degree().expect("nonzero ODE operator");
    let lc_inv = l.coeff(dl).inv_ref();
    let mut op = op.clone();
    let mut shifted: Vec<ThetaOp<F>> = vec![l.clone()];
    while let Some(d) = op.degree().filter(|&d| d >= dl) {
        let m = d - dl;
        while shifted.len() <= m {
            let next = ThetaOp::theta().compose(shifted.last().unwrap());
            shifted.push(next);
        }
        let q = op.coeff(d).mul_ref(&lc_inv);
        op = op.sub(&shifted[m].left_mul(&q));
    }
    op
}

/// Matrix of the direct operator at `f`: `(θ+a)/a` for an upper, `(θ+b−1)/(b−1)` for a lower.
pub fn direct_matrix<F: ParamField>(f: &HyperFn, which: Which, index: usize) -> Result<OpMatrix<F>> {
    let shift = match which {
        Which::Upper => f.upper[index].clone(),
        Which::Lower => f.lower[index].add_int(-1),
    };
    if shift.is_zero() {
        return Err(Error::SingularStep(format!(
            "{} parameter {index} of {f} makes the contiguous operator degenerate",
            if which == Which::Upper { "upper" } else { "lower" }
        )));
    }
    let c: F = field_value(&shift)?;
    let op = ThetaOp::theta_plus(c.clone()).left_mul(&RatFunc::constant(c.inv_ref()));
    let l = ode_operator::<F>(f)?;
    let n = f.p() + 1;
    let mut rows = Vec::with_capacity(n);
    let mut cur = op;
    for k in 0..n {
        if k > 0 {
            cur = ThetaOp::theta().compose(&cur);
        }
        let red = reduce_mod(&cur, &l);
        rows.push((0..n).map(|i| red.coeff(i)).collect());
    }
    Ok(OpMatrix::new(rows))
}

/// Matrix `M` with `basis(shifted f) = M · basis(f)`.
pub fn step_matrix<F: ParamField>(f: &HyperFn, which: Which, index: usize, direction: i32) -> Result<OpMatrix<F>> {
    let step = Step { which, index, direction };
    match direction {
        0 => Ok(OpMatrix::identity(f.p() + 1)),
        1 | -1 if step.is_direct() => direct_matrix(f, which, index),
        1 | -1 => {
            let g = step.apply(f);
            direct_matrix::<F>(&g, which, index)?
                .inverse()
                .ok_or_else(|| Error::SingularStep(format!("inverse step from {f} to {g} is not invertible")))
        }
        _ => Err(Error::Invalid(format!("step direction {direction} is not in {{-1, 0, 1}}"))),
    }
}

/// True when a parameter equals exactly one.
pub fn is_unit(e: &EpsLin) -> bool {
    *e == EpsLin::int(1)
}
