//! Unevaluated products of Γ-functions and powers, kept for display.

use serde::Serialize;

use crate::algebra::LinearForm;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GammaProduct {
    pub numer: Vec<LinearForm>,
    pub denom: Vec<LinearForm>,
    /// `(base, exponent)` factors such as `("2", X - 1)` from the duplication formula.
    pub powers: Vec<(String, LinearForm)>,
}

impl GammaProduct {
    pub fn times(&self, o: &GammaProduct) -> GammaProduct {
        GammaProduct {
            numer: self.numer.iter().chain(&o.numer).cloned().collect(),
            denom: self.denom.iter().chain(&o.denom).cloned().collect(),
            powers: self.powers.iter().chain(&o.powers).cloned().collect(),
        }
    }

    pub fn render(&self, symbols: &[String]) -> String {
        let g = |v: &[LinearForm]| v.iter().map(|f| format!("Gamma({})", f.render(symbols))).collect::<Vec<_>>();
        let mut num = g(&self.numer);
        num.extend(self.powers.iter().map(|(b, e)| format!("{b}^({})", e.render(symbols))));
        let num = if num.is_empty() { "1".to_string() } else { num.join("*") };
        if self.denom.is_empty() {
            num
        } else {
            format!("{num}/({})", g(&self.denom).join("*"))
        }
    }
}
