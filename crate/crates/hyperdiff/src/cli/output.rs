//! Line-delimited records with exact `num/den` rationals, plus a plain-text rendering.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::rat::{decode_rat, encode_rat, Rat};
use crate::algebra::{EpsField, Poly, RatFunc, ZField};
use crate::error::{Error, Result};
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Jsonl,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "jsonl" | "json" => Ok(Format::Jsonl),
            "text" | "txt" => Ok(Format::Text),
            _ => Err(Error::Invalid(format!("unknown output format {s:?} (use jsonl or text)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Jsonl => "jsonl",
            Format::Text => "text",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub status: Status,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    /// Lowest differing `(z power, eps power)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mismatch: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Verification {
    pub fn series(v: &Verdict, n: usize, k: usize, method: &str) -> Self {
        let (status, mismatch) = match v {
            Verdict::Pass => (Status::Pass, None),
            Verdict::Mismatch { z_power, eps_power } => (Status::Fail, Some((*z_power, *eps_power))),
        };
        Verification { status, method: method.into(), n: Some(n), k: Some(k), mismatch, detail: None }
    }

    pub fn check(ok: bool, method: &str, detail: Option<String>) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Verification { status, method: method.into(), n: None, k: None, mismatch: None, detail }
    }

    pub fn skipped() -> Self {
        Verification { status: Status::Skipped, method: "disabled".into(), n: None, k: None, mismatch: None, detail: None }
    }

    pub fn none() -> Self {
        Verification { status: Status::NotApplicable, method: "none".into(), n: None, k: None, mismatch: None, detail: None }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
            Status::NotApplicable => "n/a",
        };
        write!(f, "{status} ({}", self.method)?;
        if let (Some(n), Some(k)) = (self.n, self.k) {
            write!(f, ", N={n}, K={k}")?;
        }
        write!(f, ")")?;
        if let Some((z, e)) = self.mismatch {
            write!(f, ", first mismatch at z^{z} eps^{e}")?;
        }
        if let Some(d) = &self.detail {
            write!(f, ", {d}")?;
        }
        Ok(())
    }
}

/// One result line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub command: String,
    pub input: String,
    #[serde(default)]
    pub options: BTreeMap<String, String>,
    pub result: Value,
    pub verification: Verification,
    /// Human-readable lines for the text format.
    #[serde(skip)]
    pub summary: Vec<String>,
}

impl Record {
    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.command, self.input);
        for (k, v) in &self.options {
            s += &format!("  {k} = {v}\n");
        }
        if self.summary.is_empty() {
            for l in scalar_lines(&self.result) {
                s += &format!("  {l}\n");
            }
        } else {
            for l in &self.summary {
                s += &format!("  {l}\n");
            }
        }
        s += &format!("  verification: {}\n", self.verification);
        s
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Jsonl => self.to_jsonl() + "\n",
            Format::Text => self.to_text(),
        }
    }
}

/// Top-level scalars and string lists of a result; nested structures are left to the JSON form.
fn scalar_lines(v: &Value) -> Vec<String> {
    let Some(m) = v.as_object() else { return vec![v.to_string()] };
    let mut out = Vec::new();
    for (k, x) in m {
        match x {
            Value::String(t) => out.push(format!("{k}: {t}")),
            Value::Number(_) | Value::Bool(_) => out.push(format!("{k}: {x}")),
            Value::Array(a) if a.iter().all(Value::is_string) => {
                out.extend(a.iter().enumerate().map(|(i, t)| format!("{k}[{i}]: {}", t.as_str().unwrap_or_default())));
            }
            _ => {}
        }
    }
    out
}

pub fn parse_records(text: &str) -> Result<Vec<Record>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Error::Parse {
                line: i + 1,
                column: e.column(),
                message: format!("malformed record: {e}"),
                expected: vec!["a JSON record per line".into()],
            })
        })
        .collect()
}

fn rats(p: &Poly<Rat>) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(encode_rat(c))).collect())
}

fn unrats(v: &Value) -> Result<Poly<Rat>> {
    let bad = || Error::Invalid(format!("expected a list of num/den strings, found {v}"));
    let c = v.as_array().ok_or_else(bad)?.iter().map(|x| x.as_str().and_then(decode_rat).ok_or_else(bad)).collect::<Result<_>>()?;
    Ok(Poly::new(c))
}

/// `{num, den}` coefficient lists in eps, lowest power first.
pub fn encode_eps(e: &EpsField) -> Value {
    json!({ "num": rats(e.num()), "den": rats(e.den()) })
}

pub fn decode_eps(v: &Value) -> Result<EpsField> {
    let den = unrats(&v["den"])?;
    if den.is_zero() {
        return Err(Error::Invalid("zero denominator".into()));
    }
    Ok(RatFunc::new(unrats(&v["num"])?, den))
}

fn eps_list(p: &Poly<EpsField>) -> Value {
    Value::Array(p.coeffs().iter().map(encode_eps).collect())
}

fn uneps_list(v: &Value) -> Result<Poly<EpsField>> {
    let bad = || Error::Invalid(format!("expected a list of eps coefficients, found {v}"));
    let c = v.as_array().ok_or_else(bad)?.iter().map(decode_eps).collect::<Result<_>>()?;
    Ok(Poly::new(c))
}

/// `{num, den}` coefficient lists in z, each coefficient a rational function of eps.
pub fn encode_z(f: &ZField) -> Value {
    json!({ "num": eps_list(f.num()), "den": eps_list(f.den()) })
}

pub fn decode_z(v: &Value) -> Result<ZField> {
    let den = uneps_list(&v["den"])?;
    if den.is_zero() {
        return Err(Error::Invalid("zero denominator".into()));
    }
    Ok(RatFunc::new(uneps_list(&v["num"])?, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};
    use crate::algebra::Ring;

    #[test]
    fn zfield_round_trip() {
        let e = RatFunc::new(Poly::new(vec![rat(1, 3), int(2)]), Poly::new(vec![int(1), rat(-5, 7)]));
        let z = ZField::new(Poly::new(vec![e.clone(), EpsField::one()]), Poly::new(vec![EpsField::zero(), e.clone()]));
        assert_eq!(decode_z(&encode_z(&z)).unwrap(), z);
        assert_eq!(decode_eps(&encode_eps(&e)).unwrap(), e);
    }

    #[test]
    fn record_round_trip() {
        let r = Record {
            command: "expand".into(),
            input: "2F1[eps, eps; 1; z]".into(),
            options: BTreeMap::from([("order".into(), "2".into())]),
            result: json!({"x": "1/2"}),
            verification: Verification::series(&Verdict::Mismatch { z_power: 1, eps_power: 3 }, 30, 4, "series oracle"),
            summary: vec![],
        };
        let back = parse_records(&r.to_jsonl()).unwrap();
        assert_eq!(back, vec![r.clone()]);
        assert!(r.to_text().contains("first mismatch at z^1 eps^3"));
        assert!(parse_records("{").is_err());
    }

    #[test]
    fn formats() {
        assert_eq!("TEXT".parse::<Format>().unwrap(), Format::Text);
        assert!("xml".parse::<Format>().is_err());
    }
}
