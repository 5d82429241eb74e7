// 2F1(1/2 + a1 eps, 1/2 + a2 eps; 3/2 + c eps; z) in the variable xi = (z/(z-1))^(1/2).

use hyperdiff::algebra::{rat, EpsLin};
use hyperdiff::expansion::{epsilon_expand, verify_expansion};
use hyperdiff::HyperFn;

fn main() {
    let f = HyperFn::simple(vec![EpsLin::new(rat(1, 2), rat(1, 3)), EpsLin::new(rat(1, 2), rat(-1, 2))], vec![EpsLin::new(rat(3, 2), rat(1, 4))])
        .unwrap();
    let e = epsilon_expand(&f, 2).unwrap();
    println!("{}", e.render());
    let v = verify_expansion(&f, &e, 24).unwrap();
    println!("check in xi through xi^24: {v}");
    assert!(v.passed());
}
