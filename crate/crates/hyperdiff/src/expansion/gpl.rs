//! Goncharov polylogarithms `G(a1, ..., an; z)` with `G(a; z) = ∫_0^z dt/(t − a)`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::coeff::Coeff;
use crate::algebra::rat::{fmt_rat, Rat};
use crate::algebra::Ring;
use crate::error::{Error, Result};

/// A word of letters; the first letter is the outermost integration.
pub type Word = Vec<Rat>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GplWord {
    #[serde(serialize_with = "ser_letters")]
    pub letters: Word,
    pub var: String,
}

fn ser_letters<S: serde::Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(w.iter().map(crate::algebra::rat::encode_rat))
}

impl GplWord {
    /// Rejects empty words and trailing zeros.
    pub fn new(letters: Word, var: &str) -> Result<Self> {
        match letters.last() {
            None => Err(Error::Invalid("a GPL word needs at least one letter".into())),
            Some(l) if l.is_zero() => Err(Error::Invalid("a GPL word may not end in the letter 0".into())),
            Some(_) => Ok(GplWord { letters, var: var.to_string() }),
        }
    }

    pub fn weight(&self) -> usize {
        self.letters.len()
    }
}

pub fn render_word(w: &Word, var: &str) -> String {
    let ls = w.iter().map(fmt_rat).collect::<Vec<_>>().join(",");
    format!("G({ls};{var})")
}

/// `constant + Σ coeff·G(word; var)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyLogExpr<C> {
    pub var: String,
    pub constant: C,
    terms: BTreeMap<Word, C>,
}

impl<C: Ring> PolyLogExpr<C> {
    pub fn zero(var: &str) -> Self {
        PolyLogExpr { var: var.to_string(), constant: C::zero(), terms: BTreeMap::new() }
    }

    pub fn constant(c: C, var: &str) -> Self {
        PolyLogExpr { var: var.to_string(), constant: c, terms: BTreeMap::new() }
    }

    pub fn word(w: GplWord, c: C) -> Self {
        let mut e = Self::zero(&w.var);
        e.add_term(w.letters, c);
        e
    }

    pub fn terms(&self) -> &BTreeMap<Word, C> {
        &self.terms
    }

    pub fn coefficient(&self, w: &[Rat]) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn words(&self) -> impl Iterator<Item = (GplWord, &C)> + '_ {
        self.terms.iter().map(|(w, c)| (GplWord { letters: w.clone(), var: self.var.clone() }, c))
    }

    fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = x.add_ref(&c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    /// Longest word, 0 for a constant.
    pub fn weight(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_weight(&self) -> usize {
        if !self.constant.is_zero() {
            return 0;
        }
        self.terms.keys().map(Vec::len).min().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.constant = out.constant.add_ref(&o.constant);
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.mul_coeff(&C::one().neg_ref())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.var);
        out.constant = self.constant.mul_ref(c);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.mul_ref(c));
        }
        out
    }

    /// `∫_0^z dt/(t − l) · self(t)`; the letter 0 needs a vanishing constant term.
    pub fn integrate(&self, l: &Rat) -> Result<Self> {
        if l.is_zero() && !self.constant.is_zero() {
            return Err(Error::UncancelledPole(format!("dt/t integration of an integrand with constant term {}", self.constant.render(&[]))));
        }
        let mut out = Self::zero(&self.var);
        if !self.constant.is_zero() {
            out.add_term(vec![l.clone()], self.constant.clone());
        }
        for (w, c) in &self.terms {
            let mut nw = Vec::with_capacity(w.len() + 1);
            nw.push(l.clone());
            nw.extend(w.iter().cloned());
            out.add_term(nw, c.clone());
        }
        Ok(out)
    }

    /// Shuffle product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(&self.var);
        out.constant = self.constant.mul_ref(&o.constant);
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.mul_ref(&self.constant));
        }
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul_ref(&o.constant));
            for (v, d) in &o.terms {
                let cd = c.mul_ref(d);
                for (s, n) in shuffle(w, v) {
                    out.add_term(s, cd.scale(&Rat::from_integer(n.into())));
                }
            }
        }
        out
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> PolyLogExpr<D> {
        let mut out = PolyLogExpr::zero(&self.var);
        out.constant = f(&self.constant);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Rescales every letter: `G(w; λ z) = G(w/λ; z)`.
    pub fn rescale_letters(&self, lambda: &Rat) -> Self {
        let mut out = Self::constant(self.constant.clone(), &self.var);
        for (w, c) in &self.terms {
            out.add_term(w.iter().map(|l| l / lambda).collect(), c.clone());
        }
        out
    }

    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !self.constant.is_zero() {
            parts.push(self.constant.render(&[]));
        }
        for (w, c) in &self.terms {
            let g = render_word(w, &self.var);
            let cs = c.render(&[]);
            parts.push(if c.is_one() {
                g
            } else if c.neg_ref().is_one() {
                format!("-{g}")
            } else if is_atomic(&cs) {
                format!("{cs}*{g}")
            } else {
                format!("({cs})*{g}")
            });
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    s.push_str(" - ");
                    s.push_str(rest);
                }
                None => {
                    s.push_str(" + ");
                    s.push_str(p);
                }
            }
        }
        s
    }
}

fn is_atomic(s: &str) -> bool {
    !s.chars().skip(1).any(|c| c == '+' || c == '-' || c == ' ')
}

impl<C: Coeff> PolyLogExpr<C> {
    /// Power series `Σ_{j≤n} c_j z^j`.
    pub fn series(&self, n: usize) -> Vec<C> {
        let mut memo: HashMap<Word, Vec<Rat>> = HashMap::new();
        let mut out = vec![C::zero(); n + 1];
        out[0] = self.constant.clone();
        for (w, c) in &self.terms {
            let s = word_series(w, n, &mut memo);
            for (j, x) in s.iter().enumerate() {
                if !x.is_zero() {
                    out[j] = out[j].add_ref(&c.scale(x));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                serde_json::json!({
                    "coefficient": c.to_json(),
                    "letters": w.iter().map(crate::algebra::rat::encode_rat).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "var": self.var, "constant": self.constant.to_json(), "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::Invalid(format!("malformed polylog expression: {m}"));
        let var = v["var"].as_str().ok_or_else(|| bad("var"))?;
        let mut out = Self::constant(C::from_json(&v["constant"])?, var);
        for t in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let letters = t["letters"]
                .as_array()
                .ok_or_else(|| bad("letters"))?
                .iter()
                .map(|l| l.as_str().and_then(crate::algebra::rat::decode_rat).ok_or_else(|| bad("letter")))
                .collect::<Result<Word>>()?;
            let w = GplWord::new(letters, var)?;
            out.add_term(w.letters, C::from_json(&t["coefficient"])?);
        }
        Ok(out)
    }
}

/// Series of a single word, truncated at `z^n`.
pub fn word_series(w: &[Rat], n: usize, memo: &mut HashMap<Word, Vec<Rat>>) -> Vec<Rat> {
    if w.is_empty() {
        let mut one = vec![Rat::zero(); n + 1];
        one[0] = Rat::one();
        return one;
    }
    if let Some(s) = memo.get(w) {
        return s.clone();
    }
    let inner = word_series(&w[1..], n, memo);
    let a = &w[0];
    let mut out = vec![Rat::zero(); n + 1];
    if a.is_zero() {
        // inner has no constant term by the trailing-letter invariant
        for j in 1..=n {
            out[j] = &inner[j] / Rat::from_integer((j as i64).into());
        }
    } else {
        // 1/(t − a) = −Σ t^i / a^(i+1)
        let ainv = a.recip();
        let mut acc = Rat::zero();
        for m in 0..n {
            acc = &acc * &ainv + &inner[m] * &ainv;
            out[m + 1] = -&acc / Rat::from_integer(((m + 1) as i64).into());
        }
    }
    memo.insert(w.to_vec(), out.clone());
    out
}

/// Series of `G(w; z)` with trailing-zero words rejected.
pub fn gpl_series<C: Coeff>(e: &PolyLogExpr<C>, n: usize) -> Vec<C> {
    e.series(n)
}

/// Shuffle of two words with multiplicities.
pub fn shuffle(a: &[Rat], b: &[Rat]) -> BTreeMap<Word, u64> {
    let mut out = BTreeMap::new();
    if a.is_empty() || b.is_empty() {
        out.insert([a, b].concat(), 1);
        return out;
    }
    for (w, n) in shuffle(&a[1..], b) {
        let mut x = vec![a[0].clone()];
        x.extend(w);
        *out.entry(x).or_insert(0) += n;
    }
    for (w, n) in shuffle(a, &b[1..]) {
        let mut x = vec![b[0].clone()];
        x.extend(w);
        *out.entry(x).or_insert(0) += n;
    }
    out
}
