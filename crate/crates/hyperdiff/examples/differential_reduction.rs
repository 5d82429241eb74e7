// Reduce an integer-shifted 2F1 onto its unshifted neighbour and its theta-derivative.

use hyperdiff::algebra::{int, rat, EpsLin};
use hyperdiff::reduction::{canonical_path, reduce_to_basis, verify_reduction};
use hyperdiff::HyperFn;

fn main() {
    let basis = HyperFn::simple(vec![EpsLin::new(rat(1, 3), int(1)), EpsLin::new(rat(2, 5), int(-1))], vec![EpsLin::new(rat(3, 4), int(2))]).unwrap();
    let target = basis.with_upper(0, basis.upper[0].add_int(2)).with_lower(0, basis.lower[0].add_int(-1));
    println!("target {target}\nbasis  {basis}");
    println!("path: {:?}", canonical_path(&target, &basis).unwrap());
    let r = reduce_to_basis(&target, &basis).unwrap();
    let t = r.render();
    println!("S(z) F(target) = R0 F + R1 theta F + tail");
    println!("  S    = {}", t.s);
    for (j, x) in t.r.iter().enumerate() {
        println!("  R{j}   = {x}");
    }
    println!("  tail = {}", t.tail);
    let v = verify_reduction(&r, 30, 3).unwrap();
    println!("oracle check through z^30 eps^3: {v}");
    assert!(v.passed());
}
