//! Master-integral counting across the terms of a hypergeometric sum.

use serde::Serialize;

use super::convert::{Bindings, HyperSum};
use crate::algebra::rat::{int, Rat};
use crate::algebra::LinearForm;
use crate::error::{Error, Result};
use crate::hyper::HyperFn;
use crate::reduction::{count_nontrivial_basis, detect_exceptional, ExceptionalReport};

#[derive(Clone, Debug, Serialize)]
pub struct TermCount {
    pub function: String,
    pub count: usize,
    pub report: ExceptionalReport,
}

/// Common `L` of all terms, or `CriterionViolation` with the per-term counts.
pub fn count_master_integrals(h: &HyperSum, b: &Bindings) -> Result<(usize, Vec<TermCount>)> {
    let fns: Vec<HyperFn> = h.bind_all(b)?;
    let per: Vec<TermCount> =
        fns.iter().map(|f| TermCount { function: f.to_string(), count: count_nontrivial_basis(f), report: detect_exceptional(f) }).collect();
    let counts: Vec<usize> = per.iter().map(|t| t.count).collect();
    match counts.first() {
        Some(&l) if counts.iter().all(|&c| c == l) => Ok((l, per)),
        Some(_) => Err(Error::CriterionViolation(counts)),
        None => Err(Error::Invalid("empty hypergeometric sum".into())),
    }
}

/// Effective power `Σσ_k − (n/2) q` of a dressed propagator built from `q+1` factors.
pub fn dressed_propagator_shift(sigmas: &[Rat], q: usize) -> Result<LinearForm> {
    if sigmas.len() != q + 1 {
        return Err(Error::Invalid(format!("a dressed propagator with q = {q} needs {} powers", q + 1)));
    }
    let total = sigmas.iter().fold(int(0), |a, s| a + s);
    Ok(LinearForm::new(Rat::new((-(q as i64)).into(), 2.into()), vec![], total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::EpsLin;

    #[test]
    fn dressed_shift_examples() {
        let n = EpsLin::new(int(4), int(-2));
        let s0 = dressed_propagator_shift(&[int(1)], 0).unwrap();
        assert_eq!(s0, LinearForm::constant(int(1)));
        let s1 = dressed_propagator_shift(&[int(1), int(1)], 1).unwrap();
        assert_eq!(s1.render(&[]), "-1/2*n + 2");
        assert_eq!(s1.eval(&n, &[]).unwrap(), EpsLin::eps(int(1)));
        let s2 = dressed_propagator_shift(&[int(1), int(1), int(1)], 2).unwrap();
        assert_eq!(s2.render(&[]), "-n + 3");
        assert!(dressed_propagator_shift(&[int(1)], 1).is_err());
    }
}
