mod common;

use common::{generic_params, oracle_bi, random_rat};
use hyperdiff::algebra::rat::{int, rat};
use hyperdiff::algebra::{EpsField, EpsLin, Rat};
use hyperdiff::{ode_operator, series_of_hyper, HyperFn};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn random_fn(seed: u64, p: usize) -> HyperFn {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut upper = generic_params(&mut rng, p + 1);
    let lower = generic_params(&mut rng, p);
    // uppers may be anything, including non-positive integers
    if seed.is_multiple_of(3) {
        upper[0] = EpsLin::new(int(-(seed as i64 % 4)), random_rat(&mut rng, 3, 2));
    }
    let kappa = [int(1), int(-1), rat(1, 4), rat(-3, 2)][(seed % 4) as usize].clone();
    HyperFn::new(upper, lower, kappa, "z").unwrap()
}

#[test]
fn library_series_matches_oracle() {
    for seed in 0..12 {
        let f = random_fn(seed, 1 + (seed as usize % 3));
        let lib = series_of_hyper(&f, 25, 4).unwrap();
        let oracle = oracle_bi(&f.upper, &f.lower, &f.kappa, 25, 4);
        assert_eq!(lib.first_mismatch(&oracle), None, "{f}");
    }
}

#[test]
fn operator_annihilates_oracle_series() {
    for seed in 20..30 {
        let f = random_fn(seed, 1 + (seed as usize % 3));
        let s = oracle_bi(&f.upper, &f.lower, &f.kappa, 30, 4);
        let l = ode_operator::<EpsField>(&f).unwrap();
        assert_eq!(l.degree(), Some(f.p() + 1));
        assert!(l.apply(&s).unwrap().is_zero(), "{f}");
    }
}

#[test]
fn operator_rejects_a_perturbed_series() {
    let f = random_fn(5, 2);
    let mut s = oracle_bi(&f.upper, &f.lower, &f.kappa, 20, 2);
    let v = s.get(7, 1) + rat(1, 1000);
    s.set(7, 1, v);
    let out = ode_operator::<EpsField>(&f).unwrap().apply(&s).unwrap();
    assert!(!out.is_zero());
}

#[test]
fn lower_pole_at_eps_zero_is_reported() {
    let f = HyperFn::simple(vec![EpsLin::int(1), EpsLin::eps(int(1))], vec![EpsLin::new(int(-2), int(1))]).unwrap();
    assert!(matches!(series_of_hyper(&f, 5, 2), Err(hyperdiff::Error::PoleAtEpsZero(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ode_annihilation_property(seed in 0u64..10_000, p in 1usize..=3) {
        let f = random_fn(seed, p);
        let s = series_of_hyper(&f, 16, 2).unwrap();
        prop_assert!(ode_operator::<EpsField>(&f).unwrap().apply(&s).unwrap().is_zero());
    }

    #[test]
    fn series_leading_terms(seed in 0u64..10_000) {
        let f = random_fn(seed, 1);
        let s = series_of_hyper(&f, 2, 0).unwrap();
        let at0 = |e: &EpsLin| e.const_part.clone();
        let expect: Rat = at0(&f.upper[0]) * at0(&f.upper[1]) / at0(&f.lower[0]) * &f.kappa;
        prop_assert_eq!(s.get(0, 0).clone(), int(1));
        prop_assert_eq!(s.get(1, 0).clone(), expect);
    }
}
