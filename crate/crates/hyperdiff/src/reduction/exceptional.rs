//! Exceptional parameters and the size of the nontrivial basis.

use serde::Serialize;

use super::reduce::integer_gap;
use crate::hyper::HyperFn;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExceptionalReport {
    /// Uppers with no eps part and an integer value.
    pub integer_uppers: Vec<usize>,
    /// `(upper, lower, upper - lower)` with a non-negative integer difference.
    pub shifted_pairs: Vec<(usize, usize, i64)>,
    /// Identical upper/lower pairs.
    pub cancellable_pairs: Vec<(usize, usize)>,
    /// Greedy one-to-one matching used for counting.
    pub matching: Vec<(usize, usize)>,
    /// Integer uppers left after matching.
    pub unmatched_integer_uppers: Vec<usize>,
    pub notes: Vec<String>,
}

impl ExceptionalReport {
    pub fn is_generic(&self) -> bool {
        self.integer_uppers.is_empty() && self.shifted_pairs.is_empty()
    }
}

pub fn detect_exceptional(f: &HyperFn) -> ExceptionalReport {
    let mut r = ExceptionalReport { integer_uppers: (0..f.upper.len()).filter(|&i| f.upper[i].is_integer()).collect(), ..Default::default() };
    for (i, a) in f.upper.iter().enumerate() {
        for (l, b) in f.lower.iter().enumerate() {
            if let Some(d) = integer_gap(a, b).filter(|&d| d >= 0) {
                r.shifted_pairs.push((i, l, d));
                if d == 0 {
                    r.cancellable_pairs.push((i, l));
                }
            }
        }
    }
    let mut used = vec![false; f.lower.len()];
    for i in 0..f.upper.len() {
        let best = r.shifted_pairs.iter().filter(|&&(u, l, _)| u == i && !used[l]).min_by_key(|&&(_, l, d)| (d, l));
        if let Some(&(_, l, _)) = best {
            used[l] = true;
            r.matching.push((i, l));
        }
    }
    for &i in &r.integer_uppers {
        if r.matching.iter().any(|&(u, _)| u == i) {
            r.notes.push(format!("integer upper {} is also matched to a lower parameter and counted once", f.upper[i]));
        } else {
            r.unmatched_integer_uppers.push(i);
        }
    }
    if r.unmatched_integer_uppers.len() > 1 {
        r.notes.push("several unmatched integer uppers remove a single basis element".into());
    }
    if r.unmatched_integer_uppers.iter().any(|&i| f.upper[i].const_is_nonpositive_int()) {
        r.notes.push("a non-positive integer upper parameter truncates the series to a polynomial".into());
    }
    r
}

/// `(p+1)` minus matched pairs minus one if any integer upper is left; zero for polynomials.
pub fn count_nontrivial_basis(f: &HyperFn) -> usize {
    let r = detect_exceptional(f);
    if r.unmatched_integer_uppers.iter().any(|&i| f.upper[i].const_is_nonpositive_int()) {
        return 0;
    }
    let integer = usize::from(!r.unmatched_integer_uppers.is_empty());
    (f.p() + 1).saturating_sub(r.matching.len() + integer)
}
