//! Residue closure of an MB integrand into a sum of hypergeometric functions.

use std::collections::BTreeMap;

use serde::Serialize;

use super::gamma::GammaProduct;
use super::mbrepr::{check_dim, MBRepr};
use crate::algebra::epslin::rat_serde;
use crate::algebra::rat::{int, is_int};
use crate::algebra::{EpsLin, LinearForm, Rat};
use crate::error::{Error, Result};
use crate::hyper::HyperFn;

/// One residue family: `coefficient * (kappa z)^power * p+1Fp(upper; lower; kappa' z)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HyperTerm {
    pub coefficient: GammaProduct,
    pub power: LinearForm,
    pub upper: Vec<LinearForm>,
    pub lower: Vec<LinearForm>,
    /// Argument prefactor of the hypergeometric function, sign included.
    #[serde(with = "rat_serde")]
    pub kappa: Rat,
    pub var: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HyperSum {
    pub symbols: Vec<String>,
    pub terms: Vec<HyperTerm>,
}

/// Values for `n` and the named symbols.
#[derive(Clone, Debug, PartialEq)]
pub struct Bindings {
    pub n: EpsLin,
    pub values: BTreeMap<String, EpsLin>,
}

impl Default for Bindings {
    /// `n = 4 − 2 eps`, nothing else bound.
    fn default() -> Self {
        Bindings { n: EpsLin::new(int(4), int(-2)), values: BTreeMap::new() }
    }
}

impl Bindings {
    pub fn with(mut self, name: &str, v: EpsLin) -> Self {
        self.values.insert(name.to_string(), v);
        self
    }

    pub fn with_int(self, name: &str, v: i64) -> Self {
        self.with(name, EpsLin::int(v))
    }

    pub fn vector(&self, symbols: &[String]) -> Result<Vec<EpsLin>> {
        symbols.iter().map(|s| self.values.get(s).cloned().ok_or_else(|| Error::Invalid(format!("symbol {s} is not bound")))).collect()
    }

    pub fn eval(&self, f: &LinearForm, symbols: &[String]) -> Result<EpsLin> {
        let js = self.vector(symbols)?;
        f.eval(&self.n, &js).ok_or_else(|| Error::Invalid("linear form references an unknown symbol".into()))
    }
}

fn sorted(v: &[LinearForm]) -> Vec<LinearForm> {
    let mut v = v.to_vec();
    v.sort();
    v
}

impl HyperTerm {
    /// Same function and prefactor power, parameter order ignored.
    pub fn same_function(&self, o: &HyperTerm) -> bool {
        self.power == o.power && self.same_series(o)
    }

    /// Same hypergeometric function, prefactor power not compared.
    pub fn same_series(&self, o: &HyperTerm) -> bool {
        self.kappa == o.kappa && sorted(&self.upper) == sorted(&o.upper) && sorted(&self.lower) == sorted(&o.lower)
    }

    pub fn bind(&self, b: &Bindings, symbols: &[String]) -> Result<HyperFn> {
        let ev = |v: &[LinearForm]| v.iter().map(|f| b.eval(f, symbols)).collect::<Result<Vec<_>>>();
        HyperFn::new(ev(&self.upper)?, ev(&self.lower)?, self.kappa.clone(), &self.var)
    }

    pub fn render(&self, symbols: &[String]) -> String {
        let list = |v: &[LinearForm]| v.iter().map(|f| f.render(symbols)).collect::<Vec<_>>().join(", ");
        let arg = HyperFn { upper: vec![], lower: vec![], kappa: self.kappa.clone(), var: self.var.clone() }.argument();
        let pow = if self.power.as_constant().is_some_and(|c| *c == int(0)) {
            String::new()
        } else {
            format!(" * (kappa*{})^({})", self.var, self.power.render(symbols))
        };
        format!(
            "{}{pow} * {}F{}[{}; {}; {arg}]",
            self.coefficient.render(symbols),
            self.upper.len(),
            self.lower.len(),
            list(&self.upper),
            list(&self.lower)
        )
    }
}

impl HyperSum {
    pub fn bind_all(&self, b: &Bindings) -> Result<Vec<HyperFn>> {
        self.terms.iter().map(|t| t.bind(b, &self.symbols)).collect()
    }

    /// Every term of `self` matches a distinct term of `o`.
    pub fn same_functions(&self, o: &HyperSum) -> bool {
        self.matching(o, HyperTerm::same_function).is_some()
    }

    /// Like `same_functions`, but the powers only have to agree up to one overall shift.
    pub fn same_functions_up_to_overall_power(&self, o: &HyperSum) -> bool {
        let Some(pairs) = self.matching(o, HyperTerm::same_series) else { return false };
        let mut shifts = pairs.iter().map(|&(i, j)| self.terms[i].power.sub(&o.terms[j].power));
        match shifts.next() {
            Some(first) => shifts.all(|d| d == first),
            None => true,
        }
    }

    fn matching(&self, o: &HyperSum, eq: impl Fn(&HyperTerm, &HyperTerm) -> bool) -> Option<Vec<(usize, usize)>> {
        if self.terms.len() != o.terms.len() {
            return None;
        }
        let mut used = vec![false; o.terms.len()];
        let mut pairs = Vec::new();
        for (i, t) in self.terms.iter().enumerate() {
            let j = (0..o.terms.len()).find(|&j| !used[j] && eq(t, &o.terms[j]))?;
            used[j] = true;
            pairs.push((i, j));
        }
        Some(pairs)
    }
}

fn integer_constant(f: &LinearForm) -> bool {
    f.as_constant().is_some_and(is_int)
}

/// Closes the contour to the right: one term for `t = m` and one for each `t = C_k + m`.
pub fn mb_to_hyper(m: &MBRepr) -> Result<HyperSum> {
    if !check_dim(m) {
        return Err(Error::Dimension("MB integrand violates dim A + dim D - dim B - dim C = 1".into()));
    }
    let c = &m.c_forms;
    for (i, ci) in c.iter().enumerate() {
        if integer_constant(ci) {
            return Err(Error::DegeneratePoles(format!("C_{} = {} collides with the Gamma(-t) poles", i + 1, ci.render(&m.symbols))));
        }
        for (j, cj) in c.iter().enumerate().skip(i + 1) {
            if integer_constant(&ci.sub(cj)) {
                return Err(Error::DegeneratePoles(format!("C_{} - C_{} is an integer", i + 1, j + 1)));
            }
        }
    }
    let sign = if (1 + m.c_forms.len() + m.d_forms.len()).is_multiple_of(2) { int(1) } else { int(-1) };
    let kappa = &m.kappa * sign;
    let one = LinearForm::constant(int(1));
    let mut terms = Vec::new();
    let zero = LinearForm::constant(int(0));
    // family 0 has shift 0; family k has shift C_k
    let shifts = std::iter::once((None, zero)).chain(c.iter().cloned().enumerate().map(|(k, ck)| (Some(k), ck)));
    for (fam, s) in shifts {
        let mut upper: Vec<LinearForm> = m.a_forms.iter().map(|a| a.add(&s)).collect();
        upper.extend(m.d_forms.iter().map(|d| one.sub(d).add(&s)));
        let mut lower: Vec<LinearForm> = m.b_forms.iter().map(|b| b.add(&s)).collect();
        let mut numer: Vec<LinearForm> = m.a_forms.iter().map(|a| a.add(&s)).collect();
        let mut denom: Vec<LinearForm> = m.b_forms.iter().map(|b| b.add(&s)).collect();
        denom.extend(m.d_forms.iter().map(|d| d.sub(&s)));
        if fam.is_some() {
            lower.push(one.add(&s));
            numer.push(s.neg());
        }
        for (j, cj) in c.iter().enumerate() {
            if Some(j) != fam {
                lower.push(one.sub(cj).add(&s));
                numer.push(cj.sub(&s));
            }
        }
        let coefficient = m.prefactor.times(&GammaProduct { numer, denom, powers: vec![] });
        terms.push(HyperTerm { coefficient, power: s, upper, lower, kappa: kappa.clone(), var: m.var.clone() });
    }
    Ok(HyperSum { symbols: m.symbols.clone(), terms })
}
