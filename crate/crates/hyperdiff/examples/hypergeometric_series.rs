// Exact double series of a pFq in z and eps, and the differential operator that annihilates it.

use hyperdiff::algebra::{int, rat, EpsField, EpsLin};
use hyperdiff::{ode_operator, series_of_hyper, HyperFn};

fn main() {
    // 2F1(1/2 + eps, -1/3 + 2 eps; 5/7 - eps; z/4)
    let f =
        HyperFn::new(vec![EpsLin::new(rat(1, 2), int(1)), EpsLin::new(rat(-1, 3), int(2))], vec![EpsLin::new(rat(5, 7), int(-1))], rat(1, 4), "z")
            .unwrap();
    let s = series_of_hyper(&f, 8, 2).unwrap();
    println!("{f}");
    for j in 0..=3 {
        println!("  z^{j}: {:?}", s.row(j).iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    let l = ode_operator::<EpsField>(&f).unwrap();
    println!("L = {}", l.render(&["z", "eps"]));
    assert!(l.apply(&series_of_hyper(&f, 30, 4).unwrap()).unwrap().is_zero());
    println!("L annihilates the series through z^30 eps^4");
}
