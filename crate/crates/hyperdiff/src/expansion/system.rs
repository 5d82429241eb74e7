//! First-order systems `f' = A(z, eps) f` with rational entries.

use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use super::dlog::DlogSystem;
use crate::algebra::rat::{int, Rat};
use crate::algebra::theta::ratfunc_times;
use crate::algebra::{BiSeries, EpsField, Field, ParamField, Poly, RatFunc, Ring, ZField};
use crate::error::{Error, Result};
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq)]
pub struct TriangularSystem {
    pub var: String,
    pub unknowns: Vec<String>,
    pub matrix: Vec<Vec<ZField>>,
    /// Values at `z = 0`.
    pub boundary: Vec<EpsField>,
    pub constants: Vec<(String, Rat)>,
    /// How each unknown relates to the hypergeometric function.
    pub substitutions: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SystemText {
    pub var: String,
    pub unknowns: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub boundary: Vec<String>,
    pub constants: Vec<(String, String)>,
    pub substitutions: Vec<String>,
    pub triangular: bool,
}

/// Entry with eps set to 0.
pub fn at_eps0(f: &ZField) -> Result<RatFunc<Rat>> {
    let c0 = |p: &Poly<EpsField>| -> Result<Poly<Rat>> {
        Ok(Poly::new(p.coeffs().iter().map(|c| c.eps_series(0).map(|v| v[0].clone())).collect::<Result<Vec<_>>>()?))
    };
    let den = c0(f.den())?;
    if den.is_zero() {
        return Err(Error::PoleAtEpsZero(format!("entry {} is singular at eps = 0", f.render(&["z", "eps"]))));
    }
    Ok(RatFunc::new(c0(f.num())?, den))
}

impl TriangularSystem {
    pub fn dim(&self) -> usize {
        self.unknowns.len()
    }

    /// `(i, j)` pairs with `i ≠ j` coupled at eps^0.
    pub fn eps0_couplings(&self) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if i != j && !at_eps0(&self.matrix[i][j])?.is_zero() {
                    out.push((i, j));
                }
            }
        }
        Ok(out)
    }

    /// The eps^0 couplings between different unknowns contain no cycle.
    pub fn is_triangular(&self) -> Result<bool> {
        let edges = self.eps0_couplings()?;
        let d = self.dim();
        let mut done = vec![false; d];
        for _ in 0..d {
            let Some(i) = (0..d).find(|&i| !done[i] && edges.iter().all(|&(a, b)| a != i || done[b])) else {
                return Ok(false);
            };
            done[i] = true;
        }
        Ok(true)
    }

    /// First coefficient where `θ f_i = z A_ij f_j` fails on the given series.
    pub fn check_series(&self, f: &[BiSeries]) -> Result<Verdict> {
        let z = ZField::var();
        let mut worst: Option<(usize, usize)> = None;
        for (i, row) in self.matrix.iter().enumerate() {
            let mut rhs: Option<BiSeries> = None;
            for (a, s) in row.iter().zip(f) {
                if a.is_zero() {
                    continue;
                }
                let t = ratfunc_times(&z.mul_ref(a), s)?;
                rhs = Some(match rhs {
                    None => t,
                    Some(r) => r.add(&t),
                });
            }
            let lhs = f[i].theta();
            let rhs = rhs.unwrap_or_else(|| BiSeries::zero(lhs.z_order(), lhs.eps_order()));
            if let Some(m) = lhs.first_mismatch(&rhs) {
                worst = Some(worst.map_or(m, |w| w.min(m)));
            }
        }
        Ok(Verdict::from_mismatch(worst))
    }

    /// Partial fractions into `Σ_l M_l/(z − l)`; entries must have simple rational poles and eps-polynomial residues.
    pub fn to_dlog(&self) -> Result<DlogSystem<Rat>> {
        let names: Vec<&str> = self.unknowns.iter().map(String::as_str).collect();
        let mut out = DlogSystem::new(&self.var, &names);
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (l, res) in partial_fractions(a)? {
                    out.add(l, i, j, res);
                }
            }
        }
        out.boundary = self.boundary.iter().map(eps_poly).collect::<Result<_>>()?;
        Ok(out)
    }

    pub fn render(&self) -> Result<SystemText> {
        let vars = [self.var.as_str(), "eps"];
        Ok(SystemText {
            var: self.var.clone(),
            unknowns: self.unknowns.clone(),
            matrix: self.matrix.iter().map(|r| r.iter().map(|a| a.render(&vars)).collect()).collect(),
            boundary: self.boundary.iter().map(|b| b.render(&["eps"])).collect(),
            constants: self.constants.iter().map(|(n, v)| (n.clone(), crate::algebra::rat::fmt_rat(v))).collect(),
            substitutions: self.substitutions.clone(),
            triangular: self.is_triangular()?,
        })
    }
}

fn eps_poly(e: &EpsField) -> Result<Poly<Rat>> {
    if e.den().degree() != Some(0) {
        return Err(Error::UnsupportedClass(format!("{} is not polynomial in eps", e.render(&["eps"]))));
    }
    Ok(e.num().scale(&e.den().coeff(0).inv_ref()))
}

/// Rational roots of a polynomial, each once.
pub fn rational_roots(p: &Poly<Rat>) -> Vec<Rat> {
    let mut roots = Vec::new();
    let mut p = p.clone();
    while p.degree().is_some_and(|d| d > 0) && p.coeff(0).is_zero() {
        if !roots.contains(&int(0)) {
            roots.push(int(0));
        }
        p = Poly::new(p.coeffs()[1..].to_vec());
    }
    let Some(d) = p.degree() else { return roots };
    if d == 0 {
        return roots;
    }
    let l = crate::algebra::rat::lcm_denoms(p.coeffs());
    let ints: Vec<num_bigint::BigInt> = p.coeffs().iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    let divisors = |n: &num_bigint::BigInt| -> Vec<num_bigint::BigInt> {
        let n = n.abs();
        let mut v = Vec::new();
        let mut k = num_bigint::BigInt::from(1);
        while &k * &k <= n {
            if n.is_multiple_of(&k) {
                v.push(k.clone());
                v.push(&n / &k);
            }
            k += 1;
        }
        v
    };
    for a in divisors(&ints[0]) {
        for b in divisors(&ints[d]) {
            for s in [1, -1] {
                let r = Rat::new(&a * s, b.clone());
                if !roots.contains(&r) && p.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

fn partial_fractions(a: &ZField) -> Result<Vec<(Rat, Poly<Rat>)>> {
    let bad = |why: &str| Error::UnsupportedClass(format!("entry {} {why}", a.render(&["z", "eps"])));
    let den: Poly<Rat> =
        Poly::new(a.den().coeffs().iter().map(|c| c.as_constant().ok_or_else(|| bad("has an eps-dependent denominator"))).collect::<Result<_>>()?);
    let dd = den.degree().unwrap_or(0);
    if a.num().degree().is_some_and(|n| n >= dd) {
        return Err(bad("is not a pure sum of simple poles"));
    }
    let roots = rational_roots(&den);
    if roots.len() != dd {
        return Err(bad("has repeated or irrational poles"));
    }
    let dprime = den.derivative();
    roots
        .into_iter()
        .map(|l| {
            let num = a.num().eval(&EpsField::from_rat(&l));
            let res = num.div_ref(&EpsField::from_rat(&dprime.eval(&l)));
            Ok((l, eps_poly(&res)?))
        })
        .collect()
}
