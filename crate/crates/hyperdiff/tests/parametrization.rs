use hyperdiff::algebra::rat::{int, rat};
use hyperdiff::algebra::Rat;
use hyperdiff::expansion::factorization::gauss_tags_int;
use hyperdiff::expansion::{elementary_symmetric, f3_parametrization_check, gauss_triangular_system, three_f2_system};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Sum over all `j`-subsets, by bitmask.
fn e_brute(r: &[Rat], j: usize) -> Rat {
    (0u32..1 << r.len())
        .filter(|m| m.count_ones() as usize == j)
        .map(|m| (0..r.len()).filter(|i| m >> i & 1 == 1).fold(Rat::one(), |p, i| p * &r[i]))
        .fold(Rat::zero(), |s, x| s + x)
}

proptest! {
    #[test]
    fn elementary_symmetric_matches_subsets(v in prop::collection::vec((-9i64..9, 1i64..6), 0..6), j in 0usize..7) {
        let r: Vec<Rat> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
        prop_assert_eq!(elementary_symmetric(&r, j), e_brute(&r, j));
    }

    #[test]
    fn f3_rule(p1 in -3i64..=3, p2 in -3i64..=3, r1 in -3i64..=3, r2 in -3i64..=3, q in 1i64..=3) {
        let rep = f3_parametrization_check(p1, p2, r1, r2, 0, q).unwrap();
        prop_assert_eq!(rep.pass, p1 * r1 == 0 && p2 * r2 == 0);
        prop_assert_eq!((rep.s1, rep.s2), (p1 + r1, p2 + r2));
    }

    #[test]
    fn three_f2_rule(r in -3i64..=3, p in -3i64..=3, q in 1i64..=3) {
        let (_, rep) = three_f2_system(r, p, q, [rat(1, 2), rat(-1, 3), int(2)], [rat(2, 7), rat(-3, 4)]).unwrap();
        prop_assert_eq!(rep.parametrization.is_some(), p == -r);
    }
}

#[test]
fn gauss_half_integer_family() {
    let tags = gauss_tags_int(1, 1, -1, 2);
    assert!(tags.half_integer);
    let sys = gauss_triangular_system(1, 1, -1, 2, &rat(1, 3), &rat(-2, 5), &rat(3, 7), &rat(1, 2)).unwrap();
    assert!(sys.is_triangular().unwrap());
    for (p1, p2, r) in [(1, 3, -1), (1, 1, 0), (1, 1, 1), (3, 3, -1)] {
        assert!(!gauss_tags_int(p1, p2, r, 2).half_integer, "({p1}, {p2}, {r})");
    }
}
