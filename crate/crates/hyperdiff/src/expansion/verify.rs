//! Oracle comparison of eps-expansions against the hypergeometric series.

use std::collections::BTreeMap;

use super::coeff::Coeff;
use super::expand::{Expansion, ExpansionClass};
use crate::algebra::rat::{binomial, int, Rat};
use crate::algebra::{BiSeries, SymPoly};
use crate::error::{Error, Result};
use crate::hyper::{series_of_hyper, HyperFn};
use crate::verdict::Verdict;

/// `Σ_k eps^k orders[k]` as a two-variable series.
pub fn expansion_series(e: &Expansion<Rat>, n: usize) -> BiSeries {
    let layers: Vec<Vec<Rat>> = e.orders.iter().map(|o| o.series(n)).collect();
    BiSeries::from_fn(n, e.order(), |j, k| layers[k][j].clone())
}

/// `z = xi^2/(xi^2 − 1)` substituted into `s`, then multiplied by `xi/sqrt(1 − xi^2)`.
pub fn to_half_variable(s: &BiSeries) -> BiSeries {
    let (n, k) = (s.z_order(), s.eps_order());
    let zx = BiSeries::from_fn(n, k, |j, e| if e == 0 && j >= 2 && j % 2 == 0 { int(-1) } else { int(0) });
    let mut pow = BiSeries::one(n, k);
    let mut acc = BiSeries::zero(n, k);
    for j in 0..=n {
        acc = acc.add(&pow.mul_eps(s.row(j)));
        pow = pow.mul(&zx);
    }
    // xi (1 − xi^2)^(−1/2) = Σ C(2i, i)/4^i xi^(2i+1)
    let q = BiSeries::from_fn(n, k, |j, e| {
        if e != 0 || j % 2 == 0 {
            return int(0);
        }
        let i = j / 2;
        binomial(2 * i, i) / Rat::from_integer(num_bigint::BigInt::from(4).pow(i as u32))
    });
    acc.mul(&q)
}

/// The oracle in the expansion's own variable, with its prefactor divided out.
pub fn oracle_series(f: &HyperFn, class: ExpansionClass, n: usize, k: usize) -> Result<BiSeries> {
    let s = series_of_hyper(f, n, k)?;
    Ok(match class {
        ExpansionClass::GaussHalfInteger => to_half_variable(&s),
        _ => s,
    })
}

/// Compares each order with the eps^k layer of the oracle up to `var^n`.
pub fn verify_expansion(f: &HyperFn, e: &Expansion<Rat>, n: usize) -> Result<Verdict> {
    let oracle = oracle_series(f, e.class, n, e.order())?;
    Ok(Verdict::from_mismatch(expansion_series(e, n).first_mismatch(&oracle)))
}

/// Deterministic sample values for symbolic eps-coefficients.
pub fn sample_points(symbols: &[String]) -> Vec<BTreeMap<String, Rat>> {
    let values = [[(2, 3), (-5, 7), (3, 11), (-7, 5), (4, 13), (-9, 17)], [(-3, 4), (7, 9), (-2, 13), (5, 3), (-11, 6), (8, 15)]];
    values
        .iter()
        .map(|row| {
            symbols
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let (a, b) = row[i % row.len()];
                    (s.clone(), Rat::new((a + i as i64 / row.len() as i64).into(), b.into()))
                })
                .collect()
        })
        .collect()
}

/// Symbolic expansions are checked at each sample point in turn.
pub fn verify_symbolic(e: &Expansion<SymPoly>, n: usize) -> Result<Verdict> {
    let symbols = e.function.symbols();
    for values in sample_points(&symbols) {
        let f = e.function.bind(&values)?;
        let bound = e.map(|c| c.bind(&values).unwrap_or_else(|| int(0)));
        let v = verify_expansion(&f, &bound, n)?;
        if !v.passed() {
            return Ok(v);
        }
        if symbols.is_empty() {
            break;
        }
    }
    Ok(Verdict::Pass)
}

/// Checks that no symbol in the expansion is missing from the function.
pub fn check_symbols(e: &Expansion<SymPoly>) -> Result<()> {
    let known = e.function.symbols();
    for o in &e.orders {
        for s in o.terms().values().flat_map(Coeff::symbols) {
            if !known.contains(&s) {
                return Err(Error::Invalid(format!("symbol {s} does not occur in {}", e.function)));
            }
        }
    }
    Ok(())
}
