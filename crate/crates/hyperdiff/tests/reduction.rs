mod common;

use common::{add, generic_params, hyper_at, mul, theta, zpoly_at};
use hyperdiff::algebra::rat::{int, rat};
use hyperdiff::algebra::{EpsLin, Rat, Ring};
use hyperdiff::reduction::{
    canonical_path, count_nontrivial_basis, detect_exceptional, reduce_along, reduce_to_basis, verify_reduction, ReductionResult, Step, Which,
};
use hyperdiff::{Error, HyperFn};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn random_basis(rng: &mut StdRng, p: usize) -> HyperFn {
    let mut all = generic_params(rng, 2 * p + 1);
    let lower = all.split_off(p + 1);
    HyperFn::simple(all, lower).unwrap()
}

fn random_shift(rng: &mut StdRng, basis: &HyperFn, max_len: usize) -> HyperFn {
    let mut t = basis.clone();
    let n = basis.upper.len() + basis.lower.len();
    for _ in 0..rng.gen_range(1..=max_len) {
        let i = rng.gen_range(0..n);
        let d = if rng.gen_bool(0.5) { 1 } else { -1 };
        t = if i < t.upper.len() {
            t.with_upper(i, t.upper[i].add_int(d))
        } else {
            t.with_lower(i - t.upper.len(), t.lower[i - t.upper.len()].add_int(d))
        };
    }
    t
}

/// Checks `S F(target) = Σ r_j θ^j F(basis) + tail` as z-series with eps set to a number.
fn holds_at(r: &ReductionResult, eps: &Rat, n: usize) -> bool {
    let ft = hyper_at(&r.target.upper, &r.target.lower, &r.target.kappa, eps, n);
    let fb = hyper_at(&r.basis.upper, &r.basis.lower, &r.basis.kappa, eps, n);
    let lhs = mul(&zpoly_at(&r.s_poly, eps, n), &ft);
    let mut rhs = zpoly_at(&r.algebraic_tail, eps, n);
    let mut cur = fb;
    for rj in &r.r_polys {
        rhs = add(&rhs, &mul(&zpoly_at(rj, eps, n), &cur));
        cur = theta(&cur);
    }
    lhs == rhs
}

#[test]
fn random_shifts_satisfy_the_identity() {
    let mut rng = StdRng::seed_from_u64(7);
    for i in 0..30 {
        let basis = random_basis(&mut rng, 1 + i % 2);
        let target = random_shift(&mut rng, &basis, 4);
        if target == basis {
            continue;
        }
        let r = reduce_to_basis(&target, &basis).unwrap();
        assert!(verify_reduction(&r, 30, 2).unwrap().passed(), "{target} from {basis}");
        for eps in [rat(3, 11), rat(-2, 13)] {
            assert!(holds_at(&r, &eps, 30), "{target} from {basis} at eps = {eps}");
        }
    }
}

#[test]
fn shuffled_and_detour_paths_agree() {
    let mut rng = StdRng::seed_from_u64(11);
    for i in 0..10 {
        let basis = random_basis(&mut rng, 1 + i % 2);
        let target = random_shift(&mut rng, &basis, 3);
        let Ok(canonical) = reduce_to_basis(&target, &basis) else { continue };
        let mut path = canonical_path(&hyperdiff::reduction::align(&target, &basis).unwrap(), &basis).unwrap();
        path.shuffle(&mut rng);
        assert_eq!(reduce_along(&basis, &path).unwrap(), canonical, "shuffled path for {target}");
        let up = Step { which: Which::Lower, index: 0, direction: 1 };
        let down = Step { which: Which::Lower, index: 0, direction: -1 };
        let mut detour = vec![up];
        detour.extend(path);
        detour.push(down);
        assert_eq!(reduce_along(&basis, &detour).unwrap(), canonical, "detour path for {target}");
    }
}

#[test]
fn identity_reduction_is_trivial() {
    let mut rng = StdRng::seed_from_u64(3);
    let basis = random_basis(&mut rng, 2);
    let r = reduce_to_basis(&basis, &basis).unwrap();
    assert!(r.algebraic_tail.is_zero());
    assert!(r.r_polys.iter().skip(1).all(|p| p.is_zero()));
}

#[test]
fn integer_upper_basis_has_a_tail() {
    // 2F1(1, eps; 1 + eps; z) satisfies a first-order inhomogeneous equation
    let basis = HyperFn::simple(vec![EpsLin::int(1), EpsLin::eps(int(1))], vec![EpsLin::new(int(1), int(1))]).unwrap();
    assert_eq!(count_nontrivial_basis(&basis), 1);
    let target = basis.with_upper(1, basis.upper[1].add_int(2));
    let r = reduce_to_basis(&target, &basis).unwrap();
    assert!(verify_reduction(&r, 30, 3).unwrap().passed());
    assert!(holds_at(&r, &rat(5, 7), 30));
}

#[test]
fn exceptional_step_is_singular() {
    let g = HyperFn::simple(vec![EpsLin::int(1), EpsLin::constant(rat(1, 3))], vec![EpsLin::int(2)]).unwrap();
    let base = g.with_lower(0, EpsLin::int(1));
    assert!(matches!(reduce_to_basis(&g, &base), Err(Error::SingularStep(_))));
    assert!(!detect_exceptional(&base).is_generic());
}

#[test]
fn non_integer_shift_is_rejected() {
    let a = HyperFn::simple(vec![EpsLin::constant(rat(1, 3)), EpsLin::constant(rat(1, 5))], vec![EpsLin::constant(rat(1, 7))]).unwrap();
    let b = a.with_upper(0, EpsLin::constant(rat(1, 2)));
    assert!(matches!(reduce_to_basis(&a, &b), Err(Error::NotIntegerShift(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn reduction_property(seed in 0u64..100_000, p in 1usize..=2, len in 1usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let basis = random_basis(&mut rng, p);
        let target = random_shift(&mut rng, &basis, len);
        let r = reduce_to_basis(&target, &basis).unwrap();
        prop_assert!(holds_at(&r, &rat(2, 9), 20));
    }

    #[test]
    fn counts_are_bounded(seed in 0u64..100_000, p in 1usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = random_basis(&mut rng, p);
        prop_assert_eq!(count_nontrivial_basis(&f), p + 1);
        let g = f.with_upper(0, EpsLin::int(rng.gen_range(1..4)));
        prop_assert!(count_nontrivial_basis(&g) <= p);
    }
}
