// Shuffle products, integration and series of Goncharov polylogarithms.

use hyperdiff::algebra::{int, Rat};
use hyperdiff::expansion::gpl::{render_word, shuffle};
use hyperdiff::expansion::{gpl_series, GplWord, PolyLogExpr};

fn main() {
    let g = |w: &[i64]| PolyLogExpr::word(GplWord::new(w.iter().map(|&x| int(x)).collect(), "z").unwrap(), int(1));
    let a = g(&[1]);
    let b = g(&[0, -1]);
    let p = a.mul(&b);
    println!("G(1;z) G(0,-1;z) = {}", p.render());
    for (w, m) in shuffle(&[int(1)], &[int(0), int(-1)]) {
        println!("  {} with multiplicity {m}", render_word(&w, "z"));
    }
    let n = 12;
    let (sa, sb, sp) = (gpl_series(&a, n), gpl_series(&b, n), gpl_series(&p, n));
    let mut prod = vec![Rat::from_integer(0.into()); n + 1];
    for i in 0..=n {
        for j in 0..=n - i {
            prod[i + j] += &sa[i] * &sb[j];
        }
    }
    assert_eq!(prod, sp);
    println!("series of the product equals the product of series through z^{n}");

    let li2 = g(&[0, 1]).neg();
    let s = gpl_series(&li2, 5);
    println!("Li2(z) = -G(0,1;z) = {}", (1..=5).map(|k| format!("{}z^{k}", s[k])).collect::<Vec<_>>().join(" + "));
    let h = a.integrate(&int(0)).unwrap();
    println!("integral of G(1;t)/t = {}", h.render());
}
