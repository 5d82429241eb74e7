//! Coefficient traits shared by polynomials, rational functions and series.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rat::{fmt_rat, Rat};

/// Commutative ring with exact equality.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scale(&self, r: &Rat) -> Self {
        self.mul_ref(&Self::from_rat(r))
    }

    /// Text form; `vars[0]` names this level's variable, deeper levels use the rest.
    fn render(&self, vars: &[&str]) -> String;
}

pub trait Field: Ring {
    /// Panics on zero; callers check `is_zero` first.
    fn inv_ref(&self) -> Self;

    fn div_ref(&self, o: &Self) -> Self {
        self.mul_ref(&o.inv_ref())
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn render(&self, _vars: &[&str]) -> String {
        fmt_rat(self)
    }
}

impl Field for Rat {
    fn inv_ref(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
}

/// Renders `coeff * mono` as one signed term of a sum; `mono` empty means the constant term.
pub(crate) fn render_term<R: Ring>(coeff: &R, mono: &str, vars: &[&str], first: bool) -> String {
    let s = coeff.render(vars);
    let (neg, mag) = match s.strip_prefix('-') {
        Some(rest) if is_simple(rest) => (true, rest.to_string()),
        _ if is_simple(&s) => (false, s.clone()),
        _ => (false, format!("({s})")),
    };
    let body = if mono.is_empty() {
        mag
    } else if mag == "1" {
        mono.to_string()
    } else {
        format!("{mag}*{mono}")
    };
    match (first, neg) {
        (true, true) => format!("-{body}"),
        (true, false) => body,
        (false, true) => format!(" - {body}"),
        (false, false) => format!(" + {body}"),
    }
}

pub(crate) fn is_simple(s: &str) -> bool {
    !s.is_empty() && !s.contains([' ', '+', '-'])
}
