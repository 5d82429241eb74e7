// Expansion with symbolic eps-coefficients, checked at sample points.

use hyperdiff::cli::parse_hyper_spec;
use hyperdiff::expansion::{expand, verify_symbolic};

fn main() {
    let f = parse_hyper_spec("3F2[a*eps, b*eps, 1+d*eps; 1+c*eps, 1-c*eps; -z]").unwrap();
    let e = expand(&f, 3).unwrap();
    println!("{}", e.render());
    let v = verify_symbolic(&e, 20).unwrap();
    println!("sample-point check: {v}");
    assert!(v.passed());
}
