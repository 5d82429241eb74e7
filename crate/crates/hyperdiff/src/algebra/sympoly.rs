//! Multivariate polynomials over ℚ in named symbols.

use std::collections::BTreeMap;

use super::field::{render_term, Ring};
use super::rat::Rat;

/// Sorted `(symbol, exponent)` pairs; empty for the constant monomial.
pub type Monomial = Vec<(String, u32)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SymPoly {
    terms: BTreeMap<Monomial, Rat>,
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut m: BTreeMap<String, u32> = a.iter().cloned().collect();
    for (s, e) in b {
        *m.entry(s.clone()).or_insert(0) += e;
    }
    m.into_iter().collect()
}

fn mono_render(m: &Monomial) -> String {
    m.iter().map(|(s, e)| if *e == 1 { s.clone() } else { format!("{s}^{e}") }).collect::<Vec<_>>().join("*")
}

impl SymPoly {
    pub fn constant(r: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(vec![], r);
        }
        SymPoly { terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(name.to_string(), 1)], Rat::from_integer(1.into()));
        SymPoly { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rat> {
        &self.terms
    }

    fn insert(&mut self, m: Monomial, c: Rat) {
        let e = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// The rational value if no symbol occurs.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&vec![]).cloned(),
            _ => None,
        }
    }

    pub fn symbols(&self) -> Vec<String> {
        let mut v: Vec<String> = self.terms.keys().flat_map(|m| m.iter().map(|(s, _)| s.clone())).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn degree_in(&self, sym: &str) -> u32 {
        self.terms.keys().map(|m| m.iter().find(|(s, _)| s == sym).map_or(0, |(_, e)| *e)).max().unwrap_or(0)
    }

    /// Coefficient of `sym^d`, as a polynomial in the other symbols.
    pub fn coeff_of(&self, sym: &str, d: u32) -> SymPoly {
        let mut out = SymPoly::default();
        for (m, c) in &self.terms {
            let e = m.iter().find(|(s, _)| s == sym).map_or(0, |(_, e)| *e);
            if e == d {
                let rest: Monomial = m.iter().filter(|(s, _)| s != sym).cloned().collect();
                out.insert(rest, c.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> SymPoly {
        (0..e).fold(SymPoly::one(), |acc, _| acc.mul_ref(self))
    }

    /// Value with every symbol bound; `None` if one is missing.
    pub fn eval(&self, values: &BTreeMap<String, Rat>) -> Option<Rat> {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (s, e) in m {
                let v = values.get(s)?;
                for _ in 0..*e {
                    t *= v;
                }
            }
            acc += t;
        }
        Some(acc)
    }
}

impl Ring for SymPoly {
    fn zero() -> Self {
        SymPoly::default()
    }
    fn one() -> Self {
        SymPoly::constant(Rat::from_integer(1.into()))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let mut out = SymPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.insert(mono_mul(m1, m2), c1 * c2);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        SymPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn from_rat(r: &Rat) -> Self {
        SymPoly::constant(r.clone())
    }
    fn render(&self, _vars: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().filter(|(m, _)| !m.is_empty()) {
            out += &render_term(c, &mono_render(m), &[], out.is_empty());
        }
        if let Some(c) = self.terms.get(&vec![]) {
            out += &render_term(c, "", &[], out.is_empty());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    #[test]
    fn arithmetic_and_render() {
        let a = SymPoly::var("a");
        let b = SymPoly::var("b");
        let p = a.add_ref(&b).mul_ref(&a.sub_ref(&b));
        assert_eq!(p.render(&[]), "a^2 - b^2");
        assert_eq!(p.degree_in("a"), 2);
        assert_eq!(p.coeff_of("b", 2), SymPoly::constant(int(-1)));
        let q = a.mul_ref(&b).scale(&rat(-1, 2)).add_ref(&SymPoly::constant(int(3)));
        assert_eq!(q.render(&[]), "-1/2*a*b + 3");
        let vals: BTreeMap<String, Rat> = [("a".to_string(), int(2)), ("b".to_string(), int(3))].into();
        assert_eq!(q.eval(&vals), Some(int(0)));
    }
}
