// Number of master integrals of the built-in diagrams, and agreement across terms.

use hyperdiff::algebra::{int, EpsLin};
use hyperdiff::mellin_barnes::presets::{c1_mb, c3_mb, v1200_mb};
use hyperdiff::mellin_barnes::{count_master_integrals, mb_to_hyper, Bindings};

fn main() {
    let b = Bindings::default().with_int("j1", 1).with_int("j2", 1).with_int("sigma", 1);
    let (l, per) = count_master_integrals(&mb_to_hyper(&c3_mb()).unwrap(), &b).unwrap();
    println!("C3 with j1 = j2 = sigma = 1: L = {l}");
    for t in &per {
        println!("  {} -> {}", t.function, t.count);
    }
    assert_eq!(l, 2);

    let c1 = mb_to_hyper(&c1_mb()).unwrap();
    let generic = Bindings::default().with_int("rho", 1).with("sigma1", EpsLin::eps(int(1))).with("sigma2", EpsLin::eps(int(2)));
    let integer = Bindings::default().with_int("rho", 1).with_int("sigma1", 1).with_int("sigma2", 1);
    let (lg, _) = count_master_integrals(&c1, &generic).unwrap();
    let (li, _) = count_master_integrals(&c1, &integer).unwrap();
    println!("C1 generic: L = {lg}; integer powers: L = {li}");
    assert_eq!((lg, li), (2, 1));

    let b = Bindings::default().with_int("alpha", 1).with_int("beta", 1).with_int("sigma", 1).with_int("rho", 1);
    let (l, _) = count_master_integrals(&mb_to_hyper(&v1200_mb()).unwrap(), &b).unwrap();
    println!("V1200 with unit powers: L = {l}");
    assert_eq!(l, 2);
}
