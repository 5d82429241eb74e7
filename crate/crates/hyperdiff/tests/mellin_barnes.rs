mod common;

use common::{hermite_pade_order, hyper_at, residue_series};
use hyperdiff::algebra::rat::{int, rat};
use hyperdiff::algebra::{EpsLin, LinearForm, Rat};
use hyperdiff::mellin_barnes::presets::{c1_mb, c1_printed, c3_mb, c3_printed, preset_mb, v1200_mb, v1200_printed, PRESETS};
use hyperdiff::mellin_barnes::{check_dim, count_master_integrals, dressed_propagator_shift, mb_to_hyper, Bindings, MBRepr};
use hyperdiff::reduction::count_nontrivial_basis;
use hyperdiff::{series_of_hyper, Error, HyperFn};
use proptest::prelude::*;

const MAX_R: usize = 4;
const DEG: usize = 3;
const LEN: usize = (MAX_R + 2) * (DEG + 1) + 12;

/// Minimal inhomogeneous ODE order with eps set to a generic number.
fn oracle_count(f: &HyperFn) -> usize {
    let eps = rat(2, 29);
    let s = hyper_at(&f.upper, &f.lower, &f.kappa, &eps, LEN);
    hermite_pade_order(&s, MAX_R, DEG).expect("a relation within the ansatz")
}

fn e(c: Rat, x: Rat) -> EpsLin {
    EpsLin::new(c, x)
}

#[test]
fn counting_matches_hermite_pade() {
    let cases = vec![
        HyperFn::simple(vec![e(rat(1, 3), int(1)), e(rat(2, 7), int(-1))], vec![e(rat(3, 5), int(2))]).unwrap(),
        HyperFn::simple(vec![EpsLin::int(1), EpsLin::eps(int(1))], vec![e(int(1), int(1))]).unwrap(),
        HyperFn::simple(vec![EpsLin::int(1), EpsLin::constant(rat(1, 3))], vec![EpsLin::int(2)]).unwrap(),
        HyperFn::simple(vec![EpsLin::int(2), e(rat(1, 3), int(1))], vec![e(rat(3, 4), int(1))]).unwrap(),
        HyperFn::simple(vec![EpsLin::int(-2), e(rat(1, 3), int(1))], vec![e(rat(3, 4), int(1))]).unwrap(),
        HyperFn::simple(vec![e(rat(5, 2), int(1)), e(rat(1, 3), int(2)), e(rat(1, 7), int(-1))], vec![e(rat(1, 2), int(1)), e(rat(4, 5), int(1))])
            .unwrap(),
        HyperFn::simple(vec![e(rat(1, 2), int(1)), e(rat(1, 3), int(2)), e(rat(1, 7), int(-1))], vec![e(rat(5, 2), int(1)), e(rat(4, 5), int(1))])
            .unwrap(),
        HyperFn::simple(vec![EpsLin::int(1), EpsLin::int(1), e(rat(1, 3), int(1))], vec![e(rat(3, 4), int(1)), e(rat(2, 5), int(-1))]).unwrap(),
    ];
    for f in cases {
        assert_eq!(count_nontrivial_basis(&f), oracle_count(&f), "{f}");
    }
}

#[test]
fn preset_counts_match_hermite_pade() {
    let cases = [
        ("c3", Bindings::default().with_int("j1", 1).with_int("j2", 1).with_int("sigma", 1), 2),
        ("c1", Bindings::default().with_int("rho", 1).with("sigma1", EpsLin::eps(int(1))).with("sigma2", EpsLin::eps(int(2))), 2),
        ("c1", Bindings::default().with_int("rho", 1).with_int("sigma1", 1).with_int("sigma2", 1), 1),
        ("v1200", Bindings::default().with_int("alpha", 1).with_int("beta", 1).with_int("sigma", 1).with_int("rho", 1), 2),
    ];
    for (name, b, want) in cases {
        let h = mb_to_hyper(&preset_mb(name).unwrap()).unwrap();
        let (l, per) = count_master_integrals(&h, &b).unwrap();
        assert_eq!(l, want, "{name}");
        for f in h.bind_all(&b).unwrap() {
            assert_eq!(oracle_count(&f), want, "{name}: {f}");
        }
        assert!(per.iter().all(|t| t.count == want));
    }
}

#[test]
fn c3_residues_match_the_assembled_function() {
    let m = c3_mb();
    let b = Bindings::default().with_int("j1", 1).with_int("j2", 1).with_int("sigma", 1);
    let eval = |fs: &[LinearForm]| fs.iter().map(|f| b.eval(f, &m.symbols).unwrap()).collect::<Vec<_>>();
    let (a, bs) = (eval(&m.a_forms), eval(&m.b_forms));
    let oracle = residue_series(&a, &bs, &m.kappa, 20, 2);
    let h = mb_to_hyper(&m).unwrap();
    assert_eq!(h.terms.len(), 1);
    let f = h.terms[0].bind(&b, &h.symbols).unwrap();
    let lib = series_of_hyper(&f, 20, 2).unwrap();
    for (j, row) in oracle.iter().enumerate() {
        assert_eq!(lib.row(j), row.as_slice(), "z^{j}");
    }
}

#[test]
fn presets_close_onto_printed_forms() {
    assert!(mb_to_hyper(&c3_mb()).unwrap().same_functions(&c3_printed()));
    let c1 = mb_to_hyper(&c1_mb()).unwrap();
    assert_eq!(c1.terms.len(), 2);
    assert!(c1.same_functions(&c1_printed()));
    let v = mb_to_hyper(&v1200_mb()).unwrap();
    assert_eq!(v.terms.len(), 2);
    assert!(v.same_functions_up_to_overall_power(&v1200_printed()));
}

#[test]
fn criterion_i_on_all_presets() {
    for name in PRESETS {
        let m = preset_mb(name).unwrap();
        let h = mb_to_hyper(&m).unwrap();
        let k = m.symbols.len() as u32;
        for code in 0..3usize.pow(k) {
            let b = m.symbols.iter().enumerate().fold(Bindings::default(), |b, (i, s)| b.with_int(s, 1 + (code / 3usize.pow(i as u32) % 3) as i64));
            assert!(count_master_integrals(&h, &b).is_ok(), "{name} at {:?}", b.values);
        }
    }
}

#[test]
fn dressed_propagator_substitution() {
    // sigma = s1 + s2 − n/2 for q = 1
    let f = dressed_propagator_shift(&[int(1), int(2)], 1).unwrap();
    assert_eq!(f.n_coeff, rat(-1, 2));
    assert_eq!(f.constant, int(3));
    let sigma = f.eval(&Bindings::default().n, &[]).unwrap();
    assert_eq!(sigma, e(int(1), int(1)));
    let h = mb_to_hyper(&c3_mb()).unwrap();
    let b = Bindings::default().with_int("j1", 1).with_int("j2", 1).with("sigma", sigma);
    let (l, _) = count_master_integrals(&h, &b).unwrap();
    for f in h.bind_all(&b).unwrap() {
        assert_eq!(oracle_count(&f), l, "{f}");
    }
    assert!(dressed_propagator_shift(&[int(1)], 1).is_err());
}

#[test]
fn dimension_rule_and_degenerate_poles() {
    let mut m = c1_mb();
    assert!(check_dim(&m));
    m.b_forms.push(LinearForm::constant(rat(1, 3)));
    assert!(matches!(mb_to_hyper(&m), Err(Error::Dimension(_))));
    let mut m: MBRepr = c1_mb();
    m.c_forms[0] = LinearForm::constant(int(2));
    assert!(matches!(mb_to_hyper(&m), Err(Error::DegeneratePoles(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn c1_terms_agree_for_eps_powers(k1 in 1i64..4, k2 in 1i64..4, rho in 1i64..4) {
        prop_assume!(k1 != k2);
        let h = mb_to_hyper(&c1_mb()).unwrap();
        let b = Bindings::default().with_int("rho", rho).with("sigma1", EpsLin::eps(int(k1))).with("sigma2", EpsLin::eps(int(k2)));
        let (l, _) = count_master_integrals(&h, &b).unwrap();
        prop_assert_eq!(l, 2);
    }
}
