// Expand 2F1 functions in eps into Goncharov polylogarithms and check them against the series.

use hyperdiff::algebra::{int, rat, EpsLin};
use hyperdiff::expansion::{epsilon_expand, verify_expansion};
use hyperdiff::HyperFn;

fn main() {
    let (a, b, c) = (rat(2, 3), rat(-5, 7), rat(3, 11));
    let f = HyperFn::simple(vec![EpsLin::eps(a.clone()), EpsLin::eps(b.clone())], vec![EpsLin::new(int(1), c)]).unwrap();
    let e = epsilon_expand(&f, 4).unwrap();
    println!("{}", e.render());
    assert_eq!(e.orders[2].coefficient(&[int(0), int(1)]), -(a * b));
    assert!(verify_expansion(&f, &e, 30).unwrap().passed());

    let g = HyperFn::simple(vec![EpsLin::int(1), EpsLin::eps(int(1))], vec![EpsLin::new(int(1), int(1))]).unwrap();
    let e = epsilon_expand(&g, 4).unwrap();
    println!("{}", e.render());
    assert!(verify_expansion(&g, &e, 30).unwrap().passed());
    println!("both expansions match the series through z^30 eps^4");
}
