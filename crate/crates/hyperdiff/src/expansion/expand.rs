//! eps-expansion of hypergeometric functions into Goncharov polylogarithms.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::coeff::Coeff;
use super::dlog::DlogSystem;
use super::gpl::PolyLogExpr;
use crate::algebra::rat::{fmt_rat, int, rat, Rat};
use crate::algebra::{EpsLin, Poly, SymPoly};
use crate::error::{Error, Result};
use crate::hyper::HyperFn;

/// `const_part + eps_part * eps`, the eps coefficient possibly symbolic.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpParam<C> {
    pub const_part: Rat,
    pub eps_part: C,
}

impl<C: Coeff> ExpParam<C> {
    pub fn new(const_part: Rat, eps_part: C) -> Self {
        ExpParam { const_part, eps_part }
    }

    pub fn eps_poly(&self) -> Poly<C> {
        Poly::new(vec![C::from_rat(&self.const_part), self.eps_part.clone()])
    }

    /// The eps part alone, as a polynomial in eps.
    fn eps_only(&self) -> Poly<C> {
        Poly::new(vec![C::zero(), self.eps_part.clone()])
    }

    pub fn bind(&self, values: &BTreeMap<String, Rat>) -> Option<EpsLin> {
        Some(EpsLin::new(self.const_part.clone(), self.eps_part.bind(values)?))
    }
}

impl<C: Coeff> fmt::Display for ExpParam<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(bound) = self.bind(&BTreeMap::new()).filter(|_| self.eps_part.symbols().is_empty()) {
            return write!(f, "{bound}");
        }
        let s = self.eps_part.render(&[]);
        let simple = !s.chars().skip(1).any(|c| c == '+' || c == '-' || c == ' ');
        let e = if simple { format!("{s}*eps") } else { format!("({s})*eps") };
        if self.const_part == int(0) {
            write!(f, "{e}")
        } else if e.starts_with('-') {
            write!(f, "{}{e}", fmt_rat(&self.const_part))
        } else {
            write!(f, "{}+{e}", fmt_rat(&self.const_part))
        }
    }
}

/// `p+1Fp(upper; lower; kappa * var)` with possibly symbolic eps coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperSpec<C> {
    pub upper: Vec<ExpParam<C>>,
    pub lower: Vec<ExpParam<C>>,
    pub kappa: Rat,
    pub var: String,
}

impl<C: Coeff> HyperSpec<C> {
    pub fn new(upper: Vec<ExpParam<C>>, lower: Vec<ExpParam<C>>, kappa: Rat, var: &str) -> Result<Self> {
        if upper.len() != lower.len() + 1 {
            return Err(Error::Invalid(format!(
                "a p+1Fp function needs one more upper than lower parameter, found {} and {}",
                upper.len(),
                lower.len()
            )));
        }
        Ok(HyperSpec { upper, lower, kappa, var: var.to_string() })
    }

    pub fn symbols(&self) -> Vec<String> {
        let mut v: Vec<String> = self.upper.iter().chain(&self.lower).flat_map(|p| p.eps_part.symbols()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Drops identical upper/lower pairs.
    pub fn cancel_pairs(&self) -> Self {
        let mut upper = self.upper.clone();
        let mut lower = Vec::new();
        for l in &self.lower {
            match upper.iter().position(|u| u == l) {
                Some(i) => {
                    upper.remove(i);
                }
                None => lower.push(l.clone()),
            }
        }
        HyperSpec { upper, lower, kappa: self.kappa.clone(), var: self.var.clone() }
    }

    pub fn bind(&self, values: &BTreeMap<String, Rat>) -> Result<HyperFn> {
        let ev = |ps: &[ExpParam<C>]| {
            ps.iter().map(|p| p.bind(values).ok_or_else(|| Error::Invalid(format!("unbound symbol in {p}")))).collect::<Result<Vec<_>>>()
        };
        HyperFn::new(ev(&self.upper)?, ev(&self.lower)?, self.kappa.clone(), &self.var)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> HyperSpec<D> {
        let m = |ps: &[ExpParam<C>]| ps.iter().map(|p| ExpParam::new(p.const_part.clone(), f(&p.eps_part))).collect();
        HyperSpec { upper: m(&self.upper), lower: m(&self.lower), kappa: self.kappa.clone(), var: self.var.clone() }
    }

    pub fn argument(&self) -> String {
        HyperFn { upper: vec![], lower: vec![], kappa: self.kappa.clone(), var: self.var.clone() }.argument()
    }
}

impl<C: Coeff> fmt::Display for HyperSpec<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ps: &[ExpParam<C>]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "{}F{}[{}; {}; {}]", self.upper.len(), self.lower.len(), list(&self.upper), list(&self.lower), self.argument())
    }
}

impl From<&HyperFn> for HyperSpec<Rat> {
    fn from(h: &HyperFn) -> Self {
        let m = |ps: &[EpsLin]| ps.iter().map(|p| ExpParam::new(p.const_part.clone(), p.eps_part.clone())).collect();
        HyperSpec { upper: m(&h.upper), lower: m(&h.lower), kappa: h.kappa.clone(), var: h.var.clone() }
    }
}

impl HyperSpec<SymPoly> {
    pub fn from_numeric(h: &HyperSpec<Rat>) -> Self {
        h.map(|r| SymPoly::constant(r.clone()))
    }

    /// The numeric spec if no symbol occurs.
    pub fn as_numeric(&self) -> Option<HyperSpec<Rat>> {
        self.symbols().is_empty().then(|| self.map(|p| p.as_constant().unwrap_or_else(|| int(0))))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpansionClass {
    /// Uppers `a_i eps`, lowers `1 + b_k eps`.
    IntegerChain,
    /// As above plus one upper `1 + a eps`.
    IntegerUnitUpper,
    /// `2F1(1/2 + a1 eps, 1/2 + a2 eps; 3/2 + c eps; z)` in `xi = (z/(z-1))^(1/2)`.
    GaussHalfInteger,
}

impl ExpansionClass {
    pub fn name(&self) -> &'static str {
        match self {
            ExpansionClass::IntegerChain => "integer_chain",
            ExpansionClass::IntegerUnitUpper => "integer_unit_upper",
            ExpansionClass::GaussHalfInteger => "gauss_half_integer",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [ExpansionClass::IntegerChain, ExpansionClass::IntegerUnitUpper, ExpansionClass::GaussHalfInteger].into_iter().find(|c| c.name() == s)
    }
}

/// `F = prefactor * Σ_k eps^k orders[k]`, each order in the variable `var`.
#[derive(Clone, Debug, PartialEq)]
pub struct Expansion<C> {
    pub function: HyperSpec<C>,
    pub class: ExpansionClass,
    pub var: String,
    pub orders: Vec<PolyLogExpr<C>>,
}

impl<C: Coeff> Expansion<C> {
    pub fn order(&self) -> usize {
        self.orders.len().saturating_sub(1)
    }

    pub fn prefactor(&self) -> Option<String> {
        (self.class == ExpansionClass::GaussHalfInteger).then(|| format!("sqrt(1-{v}^2)/{v}", v = self.var))
    }

    pub fn change_of_variable(&self) -> Option<String> {
        (self.class == ExpansionClass::GaussHalfInteger).then(|| format!("{} = ({z}/({z}-1))^(1/2)", self.var, z = self.function.var))
    }

    /// The eps^0 term is a constant.
    pub fn leading_term_rational(&self) -> bool {
        self.prefactor().is_none() && self.orders.first().is_some_and(|o| o.terms().is_empty())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Expansion<D> {
        Expansion {
            function: self.function.map(&f),
            class: self.class,
            var: self.var.clone(),
            orders: self.orders.iter().map(|o| o.map(&f)).collect(),
        }
    }

    pub fn render(&self) -> String {
        let mut s = format!("{} =", self.function);
        if let Some(p) = self.prefactor() {
            s += &format!(" {p} *");
        }
        s += " sum_k eps^k w_k";
        if let Some(c) = self.change_of_variable() {
            s += &format!(", {c}");
        }
        for (k, o) in self.orders.iter().enumerate() {
            s += &format!("\n  w_{k} = {}", o.render());
        }
        s
    }
}

/// Polynomials in `x` with eps-polynomial coefficients, low degree first.
type XPoly<C> = Vec<Poly<C>>;

fn times_linear<C: Coeff>(p: &XPoly<C>, c: &Poly<C>) -> XPoly<C> {
    let mut out = vec![Poly::zero(); p.len() + 1];
    for (i, a) in p.iter().enumerate() {
        out[i + 1] = out[i + 1].add(a);
        out[i] = out[i].add(&a.mul(c));
    }
    out
}

fn product<C: Coeff>(roots: &[Poly<C>]) -> XPoly<C> {
    roots.iter().fold(vec![Poly::one()], |acc, r| times_linear(&acc, r))
}

/// Coordinates of `p` in the monic basis `basis[k]` of degree `k`.
fn in_basis<C: Coeff>(p: &XPoly<C>, basis: &[XPoly<C>]) -> Vec<Poly<C>> {
    let mut r = p.clone();
    let mut out = vec![Poly::zero(); basis.len()];
    for k in (0..basis.len()).rev() {
        let g = r.get(k).cloned().unwrap_or_else(Poly::zero);
        if g.is_zero() {
            continue;
        }
        for (i, b) in basis[k].iter().enumerate() {
            r[i] = r[i].sub(&b.mul(&g));
        }
        out[k] = g;
    }
    debug_assert!(r.iter().all(Poly::is_zero));
    out
}

fn constant_poly<C: Coeff>(r: Rat) -> Poly<C> {
    Poly::constant(C::from_rat(&r))
}

pub fn classify<C: Coeff>(f: &HyperSpec<C>) -> Result<ExpansionClass> {
    let consts = |ps: &[ExpParam<C>]| ps.iter().map(|p| p.const_part.clone()).collect::<Vec<_>>();
    let (up, lo) = (consts(&f.upper), consts(&f.lower));
    let half = rat(1, 2);
    if up.len() == 2 && up.iter().all(|a| *a == half) && lo[0] == rat(3, 2) {
        if f.kappa != int(1) {
            return Err(Error::UnsupportedClass("the half-integer Gauss case needs the argument z itself".into()));
        }
        return Ok(ExpansionClass::GaussHalfInteger);
    }
    let n0 = up.iter().filter(|a| **a == int(0)).count();
    let n1 = up.iter().filter(|a| **a == int(1)).count();
    let lowers_ok = lo.iter().all(|b| *b == int(1));
    match (n0 + n1 == up.len() && lowers_ok, n1) {
        (true, 0) => Ok(ExpansionClass::IntegerChain),
        (true, 1) if n0 >= 1 => Ok(ExpansionClass::IntegerUnitUpper),
        _ => Err(Error::UnsupportedClass(format!(
            "{f}: supported are uppers with constant parts 0 (at most one 1) over lowers with constant part 1, and 2F1(1/2+., 1/2+.; 3/2+.; z)"
        ))),
    }
}

/// `epsilon_expand` for numeric parameters.
pub fn epsilon_expand(f: &HyperFn, k: usize) -> Result<Expansion<Rat>> {
    expand(&HyperSpec::from(f), k)
}

pub fn expand<C: Coeff>(f: &HyperSpec<C>, k: usize) -> Result<Expansion<C>> {
    let g = f.cancel_pairs();
    let class = classify(&g)?;
    let (sys, var) = match class {
        ExpansionClass::IntegerChain => (chain_system(&g), g.var.clone()),
        ExpansionClass::IntegerUnitUpper => (unit_upper_system(&g), g.var.clone()),
        ExpansionClass::GaussHalfInteger => (gauss_half_system(&g), "xi".to_string()),
    };
    let mut sol = sys.solve(k)?;
    Ok(Expansion { function: f.clone(), class, var, orders: sol.swap_remove(0) })
}

/// `w_0 = F`, `w_(k+1) = (θ + b_k eps) w_k` with `b_0 = 0`.
fn chain_system<C: Coeff>(f: &HyperSpec<C>) -> DlogSystem<C> {
    let p = f.upper.len();
    let names: Vec<String> = (0..p).map(|i| format!("w{i}")).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut s = DlogSystem::new(&f.var, &names);
    let one = f.kappa.recip();
    let mut b: Vec<Poly<C>> = vec![Poly::zero()];
    b.extend(f.lower.iter().map(ExpParam::eps_only));
    let mut basis: Vec<XPoly<C>> = vec![vec![Poly::one()]];
    for bk in &b {
        let next = times_linear(basis.last().expect("nonempty"), bk);
        basis.push(next);
    }
    let roots: Vec<Poly<C>> = f.upper.iter().map(ExpParam::eps_poly).collect();
    let gamma = in_basis(&product(&roots), &basis);
    for i in 0..p - 1 {
        s.add(int(0), i, i + 1, Poly::one());
        s.add(int(0), i, i, b[i].neg());
    }
    for (j, g) in gamma.iter().enumerate().take(p) {
        s.add(one.clone(), p - 1, j, g.neg());
    }
    s.add(int(0), p - 1, p - 1, b[p - 1].neg());
    s.boundary[0] = Poly::one();
    s
}

/// `u_k = ∏_(i≤k) (θ + a_i eps) F` and `psi = (1 − x) u_(p−1)`, one upper being `1 + a' eps`.
fn unit_upper_system<C: Coeff>(f: &HyperSpec<C>) -> DlogSystem<C> {
    let p = f.upper.len();
    let iu = f.upper.iter().position(|u| u.const_part == int(1)).expect("classified");
    let a_prime = f.upper[iu].eps_only();
    let a: Vec<Poly<C>> = f.upper.iter().enumerate().filter(|(i, _)| *i != iu).map(|(_, u)| u.eps_only()).collect();
    let mut names: Vec<String> = (0..p - 1).map(|i| format!("u{i}")).collect();
    names.push("psi".into());
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut s = DlogSystem::new(&f.var, &names);
    let one = f.kappa.recip();
    let psi = p - 1;
    // U_0 = 1, U_k = U_(k−1) (x + a_k)
    let mut basis: Vec<XPoly<C>> = vec![vec![Poly::one()]];
    for ak in &a {
        let next = times_linear(basis.last().expect("nonempty"), ak);
        basis.push(next);
    }
    // B(x) = x ∏(x + b_k) = (x + mu) U_(p−1) + Σ_(k<p−1) delta_k U_k
    let mut roots: Vec<Poly<C>> = vec![Poly::zero()];
    roots.extend(f.lower.iter().map(ExpParam::eps_only));
    let mut rest = product(&roots);
    let top = times_linear(&basis[p - 1], &Poly::zero());
    for (i, t) in top.iter().enumerate() {
        rest[i] = rest[i].sub(t);
    }
    let coords = in_basis(&rest, &basis);
    let mu = coords[p - 1].clone();
    for kk in 0..p - 1 {
        let next = if kk + 1 == psi { psi } else { kk + 1 };
        s.add(int(0), kk, next, Poly::one());
        s.add(int(0), kk, kk, a[kk].neg());
        if next == psi {
            s.add(one.clone(), kk, psi, constant_poly(int(-1)));
        }
    }
    // psi' = psi [−mu/x + (mu − a')/(x − 1)] − Σ delta_k u_k / x
    s.add(int(0), psi, psi, mu.neg());
    s.add(one, psi, psi, mu.sub(&a_prime));
    for (kk, d) in coords.iter().enumerate().take(p - 1) {
        s.add(int(0), psi, kk, d.neg());
    }
    let mut acc = Poly::one();
    for (kk, ak) in a.iter().enumerate() {
        s.boundary[kk] = acc.clone();
        acc = acc.mul(ak);
    }
    s.boundary[psi] = acc;
    s
}

/// Unknowns `P = sqrt(−z) F` and `T`, both in `xi`.
fn gauss_half_system<C: Coeff>(f: &HyperSpec<C>) -> DlogSystem<C> {
    let mut s = DlogSystem::new("xi", &["P", "T"]);
    let e = |c: &C| Poly::new(vec![C::zero(), c.clone()]);
    let (a1, a2, c) = (&f.upper[0].eps_part, &f.upper[1].eps_part, &f.lower[0].eps_part);
    let (m1, p1, z0) = (int(-1), int(1), int(0));
    s.add(m1.clone(), 0, 0, e(c));
    s.add(p1.clone(), 0, 0, e(c));
    s.add(z0, 0, 0, e(c).scale(&C::from_rat(&int(-2))));
    s.add(m1.clone(), 0, 1, Poly::one());
    s.add(p1.clone(), 0, 1, constant_poly(int(-1)));
    let k2 = a1.sub_ref(c).mul_ref(&a2.sub_ref(c));
    let tt = Poly::new(vec![C::zero(), C::zero(), k2]);
    s.add(p1.clone(), 1, 0, tt.clone());
    s.add(m1.clone(), 1, 0, tt.neg());
    let k1 = e(&a1.add_ref(a2).sub_ref(c));
    s.add(m1, 1, 1, k1.clone());
    s.add(p1, 1, 1, k1);
    s.boundary[1] = Poly::new(vec![C::from_rat(&rat(1, 2)), c.clone()]);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;
    use crate::algebra::Ring;
    use crate::expansion::gpl::GplWord;
    use crate::expansion::verify::{verify_expansion, verify_symbolic};

    fn h(up: &[(Rat, Rat)], lo: &[(Rat, Rat)]) -> HyperFn {
        let m = |v: &[(Rat, Rat)]| v.iter().map(|(c, e)| EpsLin::new(c.clone(), e.clone())).collect();
        HyperFn::simple(m(up), m(lo)).unwrap()
    }

    #[test]
    fn gauss_eps_eps_is_dilog() {
        let (a, b, c) = (rat(2, 3), rat(-5, 7), rat(3, 11));
        let f = h(&[(int(0), a.clone()), (int(0), b.clone())], &[(int(1), c)]);
        let e = epsilon_expand(&f, 4).unwrap();
        assert_eq!(e.class, ExpansionClass::IntegerChain);
        assert!(verify_expansion(&f, &e, 30).unwrap().passed());
        assert!(e.orders[1].is_zero());
        // eps^2 layer: ab Li2(z) = −ab G(0,1;z)
        let li2 = PolyLogExpr::word(GplWord::new(vec![int(0), int(1)], "z").unwrap(), -(&a * &b));
        assert_eq!(e.orders[2], li2);
        for (k, o) in e.orders.iter().enumerate().skip(1) {
            assert!(o.is_zero() || (o.weight() == k && o.min_weight() == k), "order {k}");
        }
    }

    #[test]
    fn one_eps_over_one_plus_eps() {
        let f = h(&[(int(1), int(0)), (int(0), int(1))], &[(int(1), int(1))]);
        let e = epsilon_expand(&f, 4).unwrap();
        assert_eq!(e.class, ExpansionClass::IntegerUnitUpper);
        assert!(verify_expansion(&f, &e, 30).unwrap().passed());
        let s = e.orders[3].series(6);
        for j in 1..=6 {
            assert_eq!(s[j], rat(1, (j * j * j) as i64));
        }
        assert_eq!(e.orders[1].render(), "-G(1;z)");
    }

    #[test]
    fn higher_order_chain_and_unit() {
        let f = h(&[(int(0), rat(1, 2)), (int(0), rat(-1, 3)), (int(0), int(2))], &[(int(1), rat(2, 5)), (int(1), rat(-3, 4))]);
        let e = epsilon_expand(&f, 4).unwrap();
        assert!(verify_expansion(&f, &e, 30).unwrap().passed());
        let f = h(&[(int(1), rat(1, 2)), (int(0), rat(-1, 3)), (int(0), int(2))], &[(int(1), rat(2, 5)), (int(1), rat(-3, 4))]);
        let e = epsilon_expand(&f, 4).unwrap();
        assert_eq!(e.class, ExpansionClass::IntegerUnitUpper);
        assert!(verify_expansion(&f, &e, 30).unwrap().passed());
    }

    #[test]
    fn scaled_argument() {
        let mut f = h(&[(int(0), rat(1, 2)), (int(0), int(1))], &[(int(1), rat(1, 3))]);
        f.kappa = rat(-1, 4);
        let e = epsilon_expand(&f, 3).unwrap();
        assert!(verify_expansion(&f, &e, 20).unwrap().passed());
        assert!(e.orders[2].terms().keys().all(|w| w.iter().all(|l| *l == int(0) || *l == int(-4))));
    }

    #[test]
    fn half_integer_gauss() {
        let f = h(&[(rat(1, 2), rat(1, 3)), (rat(1, 2), rat(-2, 5))], &[(rat(3, 2), rat(3, 7))]);
        let e = epsilon_expand(&f, 3).unwrap();
        assert_eq!(e.class, ExpansionClass::GaussHalfInteger);
        assert!(verify_expansion(&f, &e, 24).unwrap().passed());
        // eps^0: artanh(xi)
        let half = |l: i64, c: Rat| PolyLogExpr::word(GplWord::new(vec![int(l)], "xi").unwrap(), c);
        assert_eq!(e.orders[0], half(-1, rat(1, 2)).add(&half(1, rat(-1, 2))));
        assert!(!e.leading_term_rational());
    }

    #[test]
    fn symbolic_coefficients() {
        let v = |s: &str| SymPoly::var(s);
        let f = HyperSpec::new(vec![ExpParam::new(int(0), v("a")), ExpParam::new(int(0), v("b"))], vec![ExpParam::new(int(1), v("c"))], int(1), "z")
            .unwrap();
        assert_eq!(f.to_string(), "2F1[a*eps, b*eps; 1+c*eps; z]");
        let e = expand(&f, 3).unwrap();
        assert!(verify_symbolic(&e, 20).unwrap().passed());
        let ab = v("a").mul_ref(&v("b"));
        assert_eq!(e.orders[2].coefficient(&[int(0), int(1)]), ab.neg_ref());
    }

    #[test]
    fn corrupted_coefficient_detected_at_lowest_order() {
        let f = h(&[(int(0), int(1)), (int(0), int(2))], &[(int(1), int(3))]);
        let mut e = epsilon_expand(&f, 3).unwrap();
        // G(0,0,1) starts at z^1, so the error shows at z^1 eps^3
        let bump = PolyLogExpr::word(GplWord::new(vec![int(0), int(0), int(1)], "z").unwrap(), rat(1, 5));
        e.orders[3] = e.orders[3].add(&bump);
        assert_eq!(verify_expansion(&f, &e, 30).unwrap(), crate::verdict::Verdict::Mismatch { z_power: 1, eps_power: 3 });
    }

    #[test]
    fn unsupported_and_cancellation() {
        let f = h(&[(int(2), int(1)), (int(0), int(1))], &[(int(1), int(1))]);
        assert!(matches!(epsilon_expand(&f, 2), Err(Error::UnsupportedClass(_))));
        let f = h(&[(rat(-1, 2), int(1)), (rat(1, 2), int(1))], &[(rat(1, 2), int(0))]);
        assert!(matches!(epsilon_expand(&f, 2), Err(Error::UnsupportedClass(_))));
        // 1 + 2eps cancels
        let f = h(&[(int(1), int(2)), (int(0), int(1))], &[(int(1), int(2))]);
        let e = epsilon_expand(&f, 3).unwrap();
        assert!(verify_expansion(&f, &e, 20).unwrap().passed());
    }
}
