//! Univariate rational functions over a field, kept gcd-reduced with a monic denominator.

use super::field::{is_simple, Field, Ring};
use super::poly::Poly;
use super::rat::Rat;

#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

/// Rational functions in ε over ℚ.
pub type EpsField = RatFunc<Rat>;

impl<F: Field> RatFunc<F> {
    /// Panics if `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        let lc = den.lc();
        if !lc.is_one() {
            let inv = lc.inv_ref();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(x: F) -> Self {
        Self::from_poly(Poly::constant(x))
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The constant value if this is a constant.
    pub fn as_constant(&self) -> Option<F> {
        match (self.num.degree(), self.is_poly()) {
            (None, _) => Some(F::zero()),
            (Some(0), true) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        Self::new(n, self.den.mul(&self.den))
    }

    /// `x d/dx`.
    pub fn theta(&self) -> Self {
        let n = self.num.theta().mul(&self.den).sub(&self.num.mul(&self.den.theta()));
        Self::new(n, self.den.mul(&self.den))
    }

    /// Value at `x`; `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).div_ref(&d))
    }

    /// Substitute the variable by another rational function.
    pub fn compose(&self, x: &Self) -> Self {
        let n = self.num.eval_in(x, |a| Self::constant(a.clone()));
        let d = self.den.eval_in(x, |a| Self::constant(a.clone()));
        n.div_ref(&d)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }
}

impl<F: Field> Ring for RatFunc<F> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_poly() && o.is_poly() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg_ref(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(F::from_rat(r))
    }
    fn render(&self, vars: &[&str]) -> String {
        let n = self.num.render(vars);
        if self.is_poly() {
            return n;
        }
        let d = self.den.render(vars);
        let n = if is_simple(n.trim_start_matches('-')) { n } else { format!("({n})") };
        let d = if is_simple(&d) { d } else { format!("({d})") };
        format!("{n}/{d}")
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn inv_ref(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        Self::new(self.den.clone(), self.num.clone())
    }
}
