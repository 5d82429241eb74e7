// Integer parameters shrink the nontrivial basis; exceptional steps are refused.

use hyperdiff::algebra::{int, rat, EpsLin};
use hyperdiff::reduction::{count_nontrivial_basis, detect_exceptional, reduce_to_basis};
use hyperdiff::{Error, HyperFn};

fn main() {
    let cases = [
        HyperFn::simple(vec![EpsLin::new(rat(1, 3), int(1)), EpsLin::eps(int(1))], vec![EpsLin::new(rat(1, 2), int(1))]).unwrap(),
        HyperFn::simple(vec![EpsLin::int(1), EpsLin::eps(int(1))], vec![EpsLin::new(int(1), int(1))]).unwrap(),
        HyperFn::simple(vec![EpsLin::int(1), EpsLin::new(int(1), int(1)), EpsLin::eps(int(2))], vec![EpsLin::int(2), EpsLin::new(int(1), int(3))])
            .unwrap(),
        HyperFn::simple(vec![EpsLin::int(-2), EpsLin::eps(int(1))], vec![EpsLin::new(rat(1, 2), int(1))]).unwrap(),
    ];
    for f in &cases {
        let r = detect_exceptional(f);
        println!("{f}: L = {}  integer uppers {:?}  matched pairs {:?}", count_nontrivial_basis(f), r.integer_uppers, r.matching);
        for n in &r.notes {
            println!("    {n}");
        }
    }
    assert_eq!(count_nontrivial_basis(&cases[0]), 2);
    assert_eq!(count_nontrivial_basis(&cases[3]), 0);

    let g = HyperFn::simple(vec![EpsLin::int(1), EpsLin::constant(rat(1, 3))], vec![EpsLin::int(2)]).unwrap();
    let err = reduce_to_basis(&g, &g.with_lower(0, EpsLin::int(1))).unwrap_err();
    println!("lowering the lower parameter 2 -> 1: {err}");
    assert!(matches!(err, Error::SingularStep(_)));
}
