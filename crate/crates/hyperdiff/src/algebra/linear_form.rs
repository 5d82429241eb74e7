//! Linear forms `c_n*n + Σ c_k*j_k + c_0` in the dimension `n` and named symbols.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::epslin::{rat_serde, EpsLin};
use super::field::render_term;
use super::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearForm {
    #[serde(with = "rat_serde")]
    pub n_coeff: Rat,
    #[serde(with = "rat_vec")]
    pub j_coeffs: Vec<Rat>,
    #[serde(with = "rat_serde")]
    pub constant: Rat,
}

impl LinearForm {
    pub fn new(n_coeff: Rat, mut j_coeffs: Vec<Rat>, constant: Rat) -> Self {
        while j_coeffs.last().is_some_and(|c| c.is_zero()) {
            j_coeffs.pop();
        }
        LinearForm { n_coeff, j_coeffs, constant }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(Rat::zero(), vec![], c)
    }

    /// `c*n`.
    pub fn n(c: Rat) -> Self {
        Self::new(c, vec![], Rat::zero())
    }

    /// `c * symbol_k`.
    pub fn sym(k: usize, c: Rat) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::new(Rat::zero(), v, Rat::zero())
    }

    pub fn j(&self, k: usize) -> Rat {
        self.j_coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let len = self.j_coeffs.len().max(o.j_coeffs.len());
        Self::new(&self.n_coeff + &o.n_coeff, (0..len).map(|k| self.j(k) + o.j(k)).collect(), &self.constant + &o.constant)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rat::from_integer((-1).into()))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(&self.n_coeff * r, self.j_coeffs.iter().map(|c| c * r).collect(), &self.constant * r)
    }

    pub fn add_rat(&self, r: &Rat) -> Self {
        Self::new(self.n_coeff.clone(), self.j_coeffs.clone(), &self.constant + r)
    }

    /// Only a constant term.
    pub fn as_constant(&self) -> Option<&Rat> {
        (self.n_coeff.is_zero() && self.j_coeffs.is_empty()).then_some(&self.constant)
    }

    /// Exact value at `n` and symbol values `js` (missing symbols are an error).
    pub fn eval(&self, n: &EpsLin, js: &[EpsLin]) -> Option<EpsLin> {
        let mut acc = n.scale(&self.n_coeff).add_rat(&self.constant);
        for (k, c) in self.j_coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&js.get(k)?.scale(c));
        }
        Some(acc)
    }

    /// Text form using `symbols` for the j slots.
    pub fn render(&self, symbols: &[String]) -> String {
        let mut out = String::new();
        for (k, c) in self.j_coeffs.iter().enumerate() {
            if !c.is_zero() {
                let name = symbols.get(k).cloned().unwrap_or_else(|| format!("j{}", k + 1));
                out += &render_term(c, &name, &[], out.is_empty());
            }
        }
        if !self.n_coeff.is_zero() {
            out += &render_term(&self.n_coeff, "n", &[], out.is_empty());
        }
        if !self.constant.is_zero() || out.is_empty() {
            out += &render_term(&self.constant, "", &[], out.is_empty());
        }
        out
    }
}

pub(crate) mod rat_vec {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::algebra::rat::{decode_rat, encode_rat, Rat};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(encode_rat))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| decode_rat(s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))).collect()
    }
}
