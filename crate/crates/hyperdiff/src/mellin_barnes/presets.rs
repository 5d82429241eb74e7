//! Built-in diagrams: the MB integrands and the hypergeometric sums as printed.

use super::convert::{HyperSum, HyperTerm};
use super::gamma::GammaProduct;
use super::mbrepr::MBRepr;
use super::raw::{RawFactor, RawMB};
use crate::algebra::expr::parse_linear_form;
use crate::algebra::rat::{int, rat};
use crate::algebra::{LinearForm, Rat};
use crate::error::{Error, Result};

pub const PRESETS: [&str; 3] = ["c3", "c1", "v1200"];

fn syms(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn forms(texts: &[&str], symbols: &[String]) -> Vec<LinearForm> {
    texts.iter().map(|t| parse_linear_form(t, symbols).expect("preset form")).collect()
}

fn term(symbols: &[String], power: &str, upper: &[&str], lower: &[&str], kappa: Rat, var: &str) -> HyperTerm {
    HyperTerm {
        coefficient: GammaProduct::default(),
        power: parse_linear_form(power, symbols).expect("preset power"),
        upper: forms(upper, symbols),
        lower: forms(lower, symbols),
        kappa,
        var: var.into(),
    }
}

/// One-loop propagator-type diagram; `z = (p1-p2)^2/m^2`, argument `z/4`.
pub fn c3_mb() -> MBRepr {
    let s = syms(&["j1", "j2", "sigma"]);
    MBRepr::new(
        s.clone(),
        rat(-1, 4),
        "z",
        forms(&["j1+j2+sigma-n/2", "j1", "j2", "n/2-sigma"], &s),
        forms(&["n/2", "(j1+j2)/2", "(j1+j2+1)/2"], &s),
        vec![],
        vec![],
        GammaProduct::default(),
    )
    .expect("c3 dimensions")
}

pub fn c3_printed() -> HyperSum {
    let s = syms(&["j1", "j2", "sigma"]);
    let t = term(&s, "0", &["j1+j2+sigma-n/2", "j1", "j2", "n/2-sigma"], &["n/2", "(j1+j2)/2", "(j1+j2+1)/2"], rat(1, 4), "z");
    HyperSum { symbols: s, terms: vec![t] }
}

/// Vertex-type diagram; `z = (p1-p2)^2/m^2`, argument `-z`.
pub fn c1_mb() -> MBRepr {
    let s = syms(&["rho", "sigma1", "sigma2"]);
    MBRepr::new(
        s.clone(),
        int(-1),
        "z",
        forms(&["rho+sigma1+sigma2-n/2", "sigma1", "sigma2"], &s),
        forms(&["n/2"], &s),
        forms(&["n/2-sigma1-sigma2"], &s),
        vec![],
        GammaProduct::default(),
    )
    .expect("c1 dimensions")
}

pub fn c1_printed() -> HyperSum {
    let s = syms(&["rho", "sigma1", "sigma2"]);
    let t1 = term(&s, "0", &["rho+sigma1+sigma2-n/2", "sigma1", "sigma2"], &["n/2", "1+sigma1+sigma2-n/2"], int(-1), "z");
    let t2 = term(&s, "n/2-sigma1-sigma2", &["rho", "n/2-sigma1", "n/2-sigma2"], &["n-sigma1-sigma2", "n/2-sigma1-sigma2+1"], int(-1), "z");
    HyperSum { symbols: s, terms: vec![t1, t2] }
}

/// Two-loop sunset as printed, `∫ds (M^2/m^2)^s …`.
pub fn v1200_raw() -> RawMB {
    let s = syms(&["alpha", "beta", "sigma", "rho"]);
    let f = |t: &str, c: i32| RawFactor::new(parse_linear_form(t, &s).expect("preset form"), c);
    RawMB {
        symbols: s.clone(),
        kappa: int(1),
        var: "M^2/m^2".into(),
        numer: vec![f("0", -1), f("n/2-sigma", -1), f("2*n-2*alpha-2*beta-2*sigma-rho", -2), f("alpha+beta+sigma+rho-n", 1), f("alpha+sigma-n/2", 1)],
        denom: vec![f("n-alpha-sigma", -1), f("3*n/2-alpha-beta-sigma-rho", -1)],
    }
}

/// Closed on the small-`m^2/M^2` side: reflected and shifted onto `Γ(alpha+sigma-n/2-t)`.
pub fn v1200_mb() -> MBRepr {
    v1200_raw().normalize(Some("m^2/M^2"), 1).expect("v1200 normalization")
}

pub fn v1200_printed() -> HyperSum {
    let s = syms(&["alpha", "beta", "sigma", "rho"]);
    let v = "m^2/M^2";
    let t1 = term(
        &s,
        "n/2-beta-rho",
        &["alpha", "alpha+sigma-n/2", "(n-rho)/2-beta", "(n+1-rho)/2-beta"],
        &["n/2", "n-beta-rho", "n/2+1-beta-rho"],
        int(4),
        v,
    );
    let t2 =
        term(&s, "0", &["alpha+beta+sigma+rho-n", "alpha+beta+rho-n/2", "rho/2", "(rho+1)/2"], &["n/2", "beta+rho", "1+beta+rho-n/2"], int(4), v);
    HyperSum { symbols: s, terms: vec![t1, t2] }
}

pub fn preset_mb(name: &str) -> Result<MBRepr> {
    match name {
        "c3" => Ok(c3_mb()),
        "c1" => Ok(c1_mb()),
        "v1200" => Ok(v1200_mb()),
        _ => Err(Error::Invalid(format!("unknown preset @{name}; known: {}", PRESETS.join(", ")))),
    }
}

pub fn preset_printed(name: &str) -> Result<HyperSum> {
    match name {
        "c3" => Ok(c3_printed()),
        "c1" => Ok(c1_printed()),
        "v1200" => Ok(v1200_printed()),
        _ => Err(Error::Invalid(format!("unknown preset @{name}; known: {}", PRESETS.join(", ")))),
    }
}
