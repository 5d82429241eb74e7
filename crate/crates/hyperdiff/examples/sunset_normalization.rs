// Normalize a raw Gamma-ratio integrand: reflect the variable and shift the contour.

use hyperdiff::mellin_barnes::mb_to_hyper;
use hyperdiff::mellin_barnes::presets::{v1200_printed, v1200_raw};

fn main() {
    let raw = v1200_raw();
    println!("raw integrand in {} with {} numerator and {} denominator Gammas", raw.var, raw.numer.len(), raw.denom.len());
    let m = raw.normalize(Some("m^2/M^2"), 1).unwrap();
    println!("normalized: kappa = {}, var = {}", m.kappa, m.var);
    println!("prefactor: {}", m.prefactor.render(&m.symbols));
    let h = mb_to_hyper(&m).unwrap();
    for t in &h.terms {
        println!("  {}", t.render(&h.symbols));
    }
    assert!(h.same_functions_up_to_overall_power(&v1200_printed()));
}
