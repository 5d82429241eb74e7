//! Factorization of the eps^0 operator and the rational-parametrization cases.

use serde::Serialize;

use crate::algebra::epslin::rat_serde;
use crate::algebra::rat::{fmt_rat, int, Rat};
use crate::algebra::EpsLin;
use crate::error::{Error, Result};

/// `e_j(r)`: coefficient of `z^(n−j)` in `∏(z + r_k)`.
pub fn elementary_symmetric(r: &[Rat], j: usize) -> Rat {
    let mut e = vec![int(0); r.len() + 1];
    e[0] = int(1);
    for (k, x) in r.iter().enumerate() {
        for i in (1..=k + 1).rev() {
            e[i] = &e[i] + &e[i - 1] * x;
        }
    }
    e.get(j).cloned().unwrap_or_else(|| int(0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    #[serde(rename = "R1=R2")]
    EqualR,
    #[serde(rename = "R1=0")]
    R1Zero,
    #[serde(rename = "R2=0")]
    R2Zero,
    #[serde(rename = "none")]
    None,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CaseTag::EqualR => "R1=R2",
            CaseTag::R1Zero => "R1=0",
            CaseTag::R2Zero => "R2=0",
            CaseTag::None => "none",
        })
    }
}

/// One root `beta` shared by both quadratics.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Candidate {
    #[serde(with = "rat_serde")]
    pub beta: Rat,
    #[serde(with = "rat_serde")]
    pub r1: Rat,
    #[serde(with = "rat_serde")]
    pub r2: Rat,
    pub cases: Vec<CaseTag>,
}

/// `h(z) = C z^z_exp (z − 1)^zm1_exp`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HExponents {
    #[serde(with = "rat_serde")]
    pub z_exp: Rat,
    #[serde(with = "rat_serde")]
    pub zm1_exp: Rat,
}

impl HExponents {
    pub fn of(r1: &Rat, r2: &Rat) -> Self {
        HExponents { z_exp: -r2.clone(), zm1_exp: r2 - r1 }
    }
}

/// Extra checks for `2F1(p1/q + a1 eps, p2/q + a2 eps; 1 − r/q + c eps; z)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaussTags {
    pub p1p2_zero: bool,
    pub p1_zero: bool,
    /// `beta = −r/q = p1/q` with either upper as `p1`.
    pub beta_r_p1: bool,
    /// `beta = −r/q = p1/q = p2/q`.
    pub half_integer: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FactorizationReport {
    pub case: CaseTag,
    #[serde(with = "rat_serde")]
    pub beta: Rat,
    #[serde(with = "rat_serde")]
    pub r1: Rat,
    #[serde(with = "rat_serde")]
    pub r2: Rat,
    pub candidates: Vec<Candidate>,
    pub h: HExponents,
    pub parametrization: Option<String>,
    pub gauss: Option<GaussTags>,
}

fn sorted_cases(r1: &Rat, r2: &Rat) -> Vec<CaseTag> {
    let zero = int(0);
    let mut v = Vec::new();
    if r1 == r2 {
        v.push(CaseTag::EqualR);
    }
    if *r1 == zero {
        v.push(CaseTag::R1Zero);
    }
    if *r2 == zero {
        v.push(CaseTag::R2Zero);
    }
    v
}

/// Describes the change of variable making `h` rational, if the case has one.
pub fn parametrization_for(case: CaseTag, h: &HExponents) -> Option<String> {
    let q = |r: &Rat| r.denom().clone();
    match case {
        CaseTag::EqualR if h.z_exp.is_integer() => Some("rational in z".into()),
        CaseTag::EqualR => Some(format!("xi = z^(1/{})", q(&h.z_exp))),
        CaseTag::R1Zero if h.z_exp.is_integer() => Some("rational in z".into()),
        CaseTag::R1Zero => Some(format!("xi = (z/(z-1))^(1/{})", q(&h.z_exp))),
        CaseTag::R2Zero if h.zm1_exp.is_integer() => Some("rational in z".into()),
        CaseTag::R2Zero => Some(format!("xi = (1-z)^(1/{})", q(&h.zm1_exp))),
        CaseTag::None => None,
    }
}

/// Uppers with constant part 0 and lowers with constant part 1 are trivial; at most two of each remain.
pub fn factorization_conditions(upper: &[EpsLin], lower: &[EpsLin]) -> Result<FactorizationReport> {
    let mut a: Vec<Rat> = upper.iter().map(|u| u.const_part.clone()).filter(|c| *c != int(0)).collect();
    let mut b: Vec<Rat> = lower.iter().map(|l| &l.const_part - int(1)).filter(|c| *c != int(0)).collect();
    if a.len() > 2 || b.len() > 2 {
        return Err(Error::Invalid(format!("expected at most two nontrivial uppers and lowers, found {} and {}", a.len(), b.len())));
    }
    a.resize(2, int(0));
    b.resize(2, int(0));
    let mut candidates: Vec<Candidate> = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            if a[i] != b[j] || candidates.iter().any(|c| c.beta == a[i] && c.r1 == a[1 - i] && c.r2 == b[1 - j]) {
                continue;
            }
            let (r1, r2) = (a[1 - i].clone(), b[1 - j].clone());
            candidates.push(Candidate { beta: a[i].clone(), cases: sorted_cases(&r1, &r2), r1, r2 });
        }
    }
    let Some(best) = candidates.iter().find(|c| !c.cases.is_empty()).or(candidates.first()).cloned() else {
        return Err(Error::NoFactorization(format!(
            "no common root: A = ({}, {}), B - 1 = ({}, {})",
            fmt_rat(&a[0]),
            fmt_rat(&a[1]),
            fmt_rat(&b[0]),
            fmt_rat(&b[1])
        )));
    };
    let case = best.cases.first().copied().unwrap_or(CaseTag::None);
    let h = HExponents::of(&best.r1, &best.r2);
    let gauss = (upper.len() == 2 && lower.len() == 1).then(|| gauss_tags(&upper[0].const_part, &upper[1].const_part, &lower[0].const_part));
    Ok(FactorizationReport { case, parametrization: parametrization_for(case, &h), beta: best.beta, r1: best.r1, r2: best.r2, candidates, h, gauss })
}

/// `p1/q`, `p2/q` are the upper constants and `1 − r/q` the lower one.
pub fn gauss_tags(p1: &Rat, p2: &Rat, lower: &Rat) -> GaussTags {
    let zero = int(0);
    let beta = lower - int(1);
    GaussTags {
        p1p2_zero: *p1 == zero || *p2 == zero,
        p1_zero: *p1 == zero,
        beta_r_p1: *p1 == beta || *p2 == beta,
        half_integer: *p1 == beta && *p2 == beta,
    }
}

/// Tags for integer data `(p1, p2, r, q)`.
pub fn gauss_tags_int(p1: i64, p2: i64, r: i64, q: i64) -> GaussTags {
    let (p1, p2) = (Rat::new(p1.into(), q.into()), Rat::new(p2.into(), q.into()));
    gauss_tags(&p1, &p2, &(int(1) - Rat::new(r.into(), q.into())))
}
