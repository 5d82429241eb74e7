// Two different step orders give the same reduction after normalization.

use hyperdiff::algebra::{int, rat, EpsLin};
use hyperdiff::reduction::{canonical_path, reduce_along, reduce_to_basis};
use hyperdiff::HyperFn;

fn main() {
    let basis = HyperFn::simple(
        vec![EpsLin::new(rat(1, 3), int(1)), EpsLin::eps(int(2)), EpsLin::new(rat(1, 6), int(-1))],
        vec![EpsLin::new(rat(3, 4), int(1)), EpsLin::new(rat(5, 4), int(3))],
    )
    .unwrap();
    let target = basis.with_upper(1, basis.upper[1].add_int(1)).with_lower(1, basis.lower[1].add_int(1));
    let path = canonical_path(&target, &basis).unwrap();
    let mut reversed = path.clone();
    reversed.reverse();
    let a = reduce_along(&basis, &path).unwrap();
    let b = reduce_along(&basis, &reversed).unwrap();
    println!("{target} from {basis}");
    println!("forward  S = {}", a.render().s);
    println!("reversed S = {}", b.render().s);
    assert_eq!(a, b);
    assert_eq!(a, reduce_to_basis(&target, &basis).unwrap());
    println!("both paths agree");
}
