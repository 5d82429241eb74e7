//! Expansion coefficients: exact rationals or polynomials in symbolic eps-coefficients.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::algebra::rat::{decode_rat, encode_rat, Rat};
use crate::algebra::{Ring, SymPoly};
use crate::error::{Error, Result};

pub trait Coeff: Ring {
    fn symbols(&self) -> Vec<String>;
    /// Value with every symbol bound.
    fn bind(&self, values: &BTreeMap<String, Rat>) -> Option<Rat>;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl Coeff for Rat {
    fn symbols(&self) -> Vec<String> {
        vec![]
    }
    fn bind(&self, _: &BTreeMap<String, Rat>) -> Option<Rat> {
        Some(self.clone())
    }
    fn to_json(&self) -> Value {
        Value::String(encode_rat(self))
    }
    fn from_json(v: &Value) -> Result<Self> {
        v.as_str().and_then(decode_rat).ok_or_else(|| Error::Invalid(format!("expected a num/den string, found {v}")))
    }
}

/// A polynomial is a list of `{coefficient, monomial}` records.
impl Coeff for SymPoly {
    fn symbols(&self) -> Vec<String> {
        SymPoly::symbols(self)
    }
    fn bind(&self, values: &BTreeMap<String, Rat>) -> Option<Rat> {
        self.eval(values)
    }
    fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .iter()
            .map(|(m, c)| {
                let mono: serde_json::Map<String, Value> = m.iter().map(|(s, e)| (s.clone(), json!(e))).collect();
                json!({ "coefficient": encode_rat(c), "monomial": mono })
            })
            .collect();
        Value::Array(terms)
    }
    fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Invalid(format!("malformed symbolic coefficient {v}"));
        if let Some(s) = v.as_str() {
            return decode_rat(s).map(SymPoly::constant).ok_or_else(bad);
        }
        let mut out = SymPoly::zero();
        for t in v.as_array().ok_or_else(bad)? {
            let c = t["coefficient"].as_str().and_then(decode_rat).ok_or_else(bad)?;
            let mut term = SymPoly::constant(c);
            for (s, e) in t["monomial"].as_object().ok_or_else(bad)? {
                let e = e.as_u64().ok_or_else(bad)? as u32;
                term = term.mul_ref(&SymPoly::var(s).pow(e));
            }
            out = out.add_ref(&term);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn json_round_trip() {
        let p = SymPoly::var("a").mul_ref(&SymPoly::var("b")).add_ref(&SymPoly::constant(rat(-3, 2)));
        assert_eq!(SymPoly::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(Rat::from_json(&rat(5, 7).to_json()).unwrap(), rat(5, 7));
        assert_eq!(rat(4, 1).to_json(), json!("4/1"));
    }
}
