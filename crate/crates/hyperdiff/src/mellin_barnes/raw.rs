//! MB integrands as printed, with `Γ(X ± s)` and `Γ(X ± 2s)` factors, brought to the closed form.

use super::gamma::GammaProduct;
use super::mbrepr::MBRepr;
use crate::algebra::rat::{int, rat};
use crate::algebra::{LinearForm, Rat};
use crate::error::{Error, Result};

/// `Γ(arg + s_coeff * s)` with `s_coeff ∈ {±1, ±2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RawFactor {
    pub arg: LinearForm,
    pub s_coeff: i32,
}

impl RawFactor {
    pub fn new(arg: LinearForm, s_coeff: i32) -> Self {
        RawFactor { arg, s_coeff }
    }
}

/// `∫ds (kappa*var)^s ∏numer / ∏denom`.
#[derive(Clone, Debug, PartialEq)]
pub struct RawMB {
    pub symbols: Vec<String>,
    pub kappa: Rat,
    pub var: String,
    pub numer: Vec<RawFactor>,
    pub denom: Vec<RawFactor>,
}

impl RawMB {
    /// `reflect` substitutes `s = −t` and names the inverted variable; `pivot` picks which
    /// `Γ(Y − t)` numerator factor becomes `Γ(−t)` after the shift `t → t + Y`.
    pub fn normalize(&self, reflect: Option<&str>, pivot: usize) -> Result<MBRepr> {
        let sgn = if reflect.is_some() { -1 } else { 1 };
        let (mut kappa, var) = match reflect {
            Some(v) => (self.kappa.recip(), v.to_string()),
            None => (self.kappa.clone(), self.var.clone()),
        };
        let mut prefactor = GammaProduct::default();
        let mut split = |fs: &[RawFactor], numer: bool| -> Result<Vec<(LinearForm, i32)>> {
            let mut out = Vec::new();
            for f in fs {
                let c = f.s_coeff * sgn;
                match c.abs() {
                    1 => out.push((f.arg.clone(), c)),
                    2 => {
                        // Γ(X ± 2t) = 2^(X ± 2t − 1) π^(−1/2) Γ(X/2 ± t) Γ(X/2 + 1/2 ± t)
                        let half = f.arg.scale(&rat(1, 2));
                        out.push((half.clone(), c / 2));
                        out.push((half.add_rat(&rat(1, 2)), c / 2));
                        let four = if c > 0 { int(4) } else { rat(1, 4) };
                        kappa = if numer { &kappa * &four } else { &kappa / &four };
                        let s = if numer { int(1) } else { int(-1) };
                        prefactor.powers.push(("2".into(), f.arg.add_rat(&int(-1)).scale(&s)));
                        prefactor.powers.push(("pi".into(), LinearForm::constant(rat(-1, 2) * s)));
                    }
                    _ => return Err(Error::Invalid(format!("Gamma argument slope {c} is not supported"))),
                }
            }
            Ok(out)
        };
        let numer = split(&self.numer, true)?;
        let denom = split(&self.denom, false)?;
        let minus: Vec<&LinearForm> = numer.iter().filter(|f| f.1 < 0).map(|f| &f.0).collect();
        let c0 = minus.get(pivot).cloned().cloned().ok_or_else(|| Error::Invalid(format!("no Gamma(Y - t) numerator factor with index {pivot}")))?;
        let mut a = Vec::new();
        let mut c = Vec::new();
        let mut seen = 0;
        for (f, s) in &numer {
            if *s > 0 {
                a.push(f.add(&c0));
            } else {
                if seen != pivot {
                    c.push(f.sub(&c0));
                }
                seen += 1;
            }
        }
        let b = denom.iter().filter(|f| f.1 > 0).map(|f| f.0.add(&c0)).collect();
        let d = denom.iter().filter(|f| f.1 < 0).map(|f| f.0.sub(&c0)).collect();
        prefactor.powers.push((format!("({}*{var})", crate::algebra::rat::fmt_rat(&kappa)), c0));
        MBRepr::new(self.symbols.clone(), kappa, &var, a, b, c, d, prefactor)
    }
}
