// Solve a triangular system f' = sum_l M_l(eps) f / (z - l) order by order in eps.

use hyperdiff::algebra::{int, Poly, Rat};
use hyperdiff::expansion::DlogSystem;

fn main() {
    // f0' = 0, f1' = eps f0 / (z - 1), f2' = eps f1 / z: f2 = eps^2 G(0,1;z)
    let mut s = DlogSystem::<Rat>::new("z", &["f0", "f1", "f2"]);
    s.add(int(1), 1, 0, Poly::new(vec![int(0), int(1)]));
    s.add(int(0), 2, 1, Poly::new(vec![int(0), int(1)]));
    s.boundary[0] = Poly::constant(int(1));
    println!("solve order: {:?}", s.solve_order().unwrap());
    let sol = s.solve(3).unwrap();
    for (i, name) in s.unknowns.iter().enumerate() {
        for (k, o) in sol[i].iter().enumerate() {
            if !o.is_zero() {
                println!("{name} at eps^{k}: {}", o.render());
            }
        }
    }
    assert_eq!(sol[2][2].coefficient(&[int(0), int(1)]), int(1));
}
