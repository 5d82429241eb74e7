//! Admissibility of Appell `F3(p1/q + a1 eps, p2/q + a2 eps, r1/q + b1 eps, r2/q + b2 eps; 1 − p/q + c eps; x, y)`.

use serde::Serialize;

use crate::algebra::epslin::rat_serde;
use crate::algebra::rat::{int, Rat};
use crate::error::{Error, Result};

/// `(−1)^sign * x^x_exp * (x − 1)^xm1_exp`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingleH {
    #[serde(with = "rat_serde")]
    pub sign_exp: Rat,
    #[serde(with = "rat_serde")]
    pub x_exp: Rat,
    #[serde(with = "rat_serde")]
    pub xm1_exp: Rat,
}

/// `(−1)^sign * x^x_exp * y^y_exp * (xy − x − y)^poly_exp`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairH {
    #[serde(with = "rat_serde")]
    pub sign_exp: Rat,
    #[serde(with = "rat_serde")]
    pub x_exp: Rat,
    #[serde(with = "rat_serde")]
    pub y_exp: Rat,
    #[serde(with = "rat_serde")]
    pub poly_exp: Rat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum F3Form {
    /// One non-integer upper, lower congruent to it.
    LowerMatchesUpper,
    /// At most one non-integer upper, integer lower.
    IntegerLower,
    /// All parameters integer; both forms apply.
    Both,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct F3Report {
    pub pass: bool,
    pub s1: i64,
    pub s2: i64,
    pub h1: SingleH,
    pub h2: SingleH,
    pub h: PairH,
    pub form: F3Form,
    /// The lower constant is an integer ≤ 0.
    pub nonpositive_lower: bool,
}

pub fn f3_parametrization_check(p1: i64, p2: i64, r1: i64, r2: i64, p: i64, q: i64) -> Result<F3Report> {
    if q < 1 {
        return Err(Error::Invalid("q must be at least 1".into()));
    }
    let f = |x: i64| Rat::new(x.into(), q.into());
    let (s1, s2) = (p1 + r1, p2 + r2);
    let single = |s: i64| SingleH { sign_exp: f(s), x_exp: f(p), xm1_exp: -f(s + p) };
    let uppers = [f(p1), f(p2), f(r1), f(r2)];
    let lower = int(1) - f(p);
    let frac: Vec<&Rat> = uppers.iter().filter(|u| !u.is_integer()).collect();
    let form = match (frac.as_slice(), lower.is_integer()) {
        ([], true) => F3Form::Both,
        ([_], true) => F3Form::IntegerLower,
        ([u], false) if (&lower - *u).is_integer() => F3Form::LowerMatchesUpper,
        _ => F3Form::Neither,
    };
    Ok(F3Report {
        pass: p1 * r1 == 0 && p2 * r2 == 0,
        s1,
        s2,
        h1: single(s1),
        h2: single(s2),
        h: PairH { sign_exp: f(s1 + s2), x_exp: f(s2 + p), y_exp: f(s1 + p), poly_exp: -f(s1 + s2 + p) },
        form,
        nonpositive_lower: lower.is_integer() && lower <= int(0),
    })
}
