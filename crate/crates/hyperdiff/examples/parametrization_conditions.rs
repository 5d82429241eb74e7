// When does a rational change of variable make the eps-expansion polylogarithmic?

use hyperdiff::algebra::{int, rat, EpsLin};
use hyperdiff::expansion::factorization::gauss_tags_int;
use hyperdiff::expansion::{f3_parametrization_check, factorization_conditions, gauss_triangular_system, three_f2_system};

fn main() {
    let upper = [EpsLin::new(rat(1, 2), int(1)), EpsLin::new(rat(1, 3), int(1))];
    let lower = [EpsLin::new(rat(3, 2), int(1))];
    let rep = factorization_conditions(&upper, &lower).unwrap();
    println!("2F1(1/2+eps, 1/3+eps; 3/2+eps): case {}, beta = {}, {:?}", rep.case, rep.beta, rep.parametrization);

    let tags = gauss_tags_int(1, 1, -1, 2);
    println!("2F1(1/2+.., 1/2+..; 3/2+..): {tags:?}");
    let sys = gauss_triangular_system(1, 1, -1, 2, &rat(1, 3), &rat(-2, 5), &rat(3, 7), &rat(1, 2)).unwrap();
    println!("triangular at beta = 1/2: {}", sys.is_triangular().unwrap());
    assert!(tags.half_integer && gauss_triangular_system(1, 3, 0, 2, &int(1), &int(1), &int(1), &int(0)).is_err());

    let data = ([rat(1, 2), rat(-1, 3), int(2)], [rat(2, 7), rat(-3, 4)]);
    for (r, p, q) in [(1, -1, 2), (1, 1, 2), (2, -2, 3)] {
        let (_, rep) = three_f2_system(r, p, q, data.0.clone(), data.1.clone()).unwrap();
        println!("3F2 (r, p, q) = ({r}, {p}, {q}): {:?}", rep.parametrization);
        assert_eq!(rep.parametrization.is_some(), p == -r);
    }

    for (p1, p2, r1, r2) in [(1, 0, 0, 1), (1, 0, 1, 0)] {
        let rep = f3_parametrization_check(p1, p2, r1, r2, 0, 2).unwrap();
        println!("F3 ({p1}, {p2}, {r1}, {r2}) over q = 2: pass = {}, form {:?}", rep.pass, rep.form);
    }
}
