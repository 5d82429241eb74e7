// Close MB integrands to the right into sums of hypergeometric functions.

use hyperdiff::cli::parse_mb;
use hyperdiff::mellin_barnes::mb_to_hyper;
use hyperdiff::mellin_barnes::presets::{c1_mb, c1_printed, c3_mb, c3_printed};

fn main() {
    for (name, m, printed) in [("C3", c3_mb(), c3_printed()), ("C1", c1_mb(), c1_printed())] {
        let h = mb_to_hyper(&m).unwrap();
        println!("{name}: {} term(s)", h.terms.len());
        for t in &h.terms {
            println!("  {}", t.render(&h.symbols));
        }
        assert!(h.same_functions(&printed));
    }

    // A user-written integrand with a second pole family from C.
    let m = parse_mb("MB{ symbols: a, b, c; kappa: -1; var: x; A: a, b, a+b; B: c; C: a-c+1/2; D: }").unwrap();
    let h = mb_to_hyper(&m).unwrap();
    println!("custom: {} term(s)", h.terms.len());
    for t in &h.terms {
        println!("  {}", t.render(&h.symbols));
    }
    assert_eq!(h.terms.len(), 2);
}
