//! Parameters of the form `A + a*eps`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rat::{fmt_rat, int, is_int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EpsLin {
    #[serde(with = "rat_serde")]
    pub const_part: Rat,
    #[serde(with = "rat_serde")]
    pub eps_part: Rat,
}

impl EpsLin {
    pub fn new(const_part: Rat, eps_part: Rat) -> Self {
        EpsLin { const_part, eps_part }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(c, Rat::zero())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// `c*eps`.
    pub fn eps(c: Rat) -> Self {
        Self::new(Rat::zero(), c)
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn is_zero(&self) -> bool {
        self.const_part.is_zero() && self.eps_part.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.const_part + &o.const_part, &self.eps_part + &o.eps_part)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.const_part - &o.const_part, &self.eps_part - &o.eps_part)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.const_part, -&self.eps_part)
    }

    pub fn add_rat(&self, r: &Rat) -> Self {
        Self::new(&self.const_part + r, self.eps_part.clone())
    }

    pub fn add_int(&self, n: i64) -> Self {
        self.add_rat(&int(n))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(&self.const_part * r, &self.eps_part * r)
    }

    /// Integer-valued: no eps part and an integer constant.
    pub fn is_integer(&self) -> bool {
        self.eps_part.is_zero() && is_int(&self.const_part)
    }

    pub fn as_integer(&self) -> Option<i64> {
        if self.eps_part.is_zero() {
            super::rat::to_i64(&self.const_part)
        } else {
            None
        }
    }

    /// Non-positive integer at eps = 0 (pole of a lower parameter, truncation of an upper).
    pub fn const_is_nonpositive_int(&self) -> bool {
        is_int(&self.const_part) && self.const_part <= Rat::zero()
    }

    /// The truncated eps expansion `[A, a, 0, ...]` of length `k+1`.
    pub fn eps_poly(&self, k: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); k + 1];
        v[0] = self.const_part.clone();
        if k >= 1 {
            v[1] = self.eps_part.clone();
        }
        v
    }
}

impl fmt::Display for EpsLin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.eps_part;
        let eps = if e.is_zero() {
            String::new()
        } else if e.is_one() {
            "eps".into()
        } else if *e == -Rat::one() {
            "-eps".into()
        } else {
            format!("{}*eps", fmt_rat(e))
        };
        match (self.const_part.is_zero(), eps.is_empty()) {
            (true, true) => write!(f, "0"),
            (true, false) => write!(f, "{eps}"),
            (false, true) => write!(f, "{}", fmt_rat(&self.const_part)),
            (false, false) => {
                if eps.starts_with('-') {
                    write!(f, "{}{eps}", fmt_rat(&self.const_part))
                } else {
                    write!(f, "{}+{eps}", fmt_rat(&self.const_part))
                }
            }
        }
    }
}

pub(crate) mod rat_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::algebra::rat::{decode_rat, encode_rat, Rat};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&encode_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        decode_rat(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}
