use hyperdiff::algebra::rat::{int, rat};
use hyperdiff::algebra::{EpsLin, Rat};
use hyperdiff::cli::{parse_hyper, parse_input, parse_mb, print_hyper, print_mb, Input};
use hyperdiff::mellin_barnes::presets::{c1_mb, c3_mb, v1200_mb};
use hyperdiff::{Error, HyperFn};
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
}

fn arb_param() -> impl Strategy<Value = EpsLin> {
    (arb_rat(), arb_rat()).prop_map(|(c, e)| EpsLin::new(c, e))
}

fn arb_lower() -> impl Strategy<Value = EpsLin> {
    arb_param().prop_filter("no pole at eps = 0", |p| !p.const_is_nonpositive_int())
}

fn arb_hyper() -> impl Strategy<Value = HyperFn> {
    (1usize..4).prop_flat_map(|p| {
        (prop::collection::vec(arb_param(), p + 1), prop::collection::vec(arb_lower(), p), arb_rat().prop_filter("nonzero", |k| *k != int(0)))
            .prop_map(|(u, l, k)| HyperFn::new(u, l, k, "z").unwrap())
    })
}

proptest! {
    #[test]
    fn hyper_round_trip(f in arb_hyper()) {
        let text = print_hyper(&f);
        let back = parse_hyper(&text).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn garbage_never_panics(s in "[ -~]{0,40}") {
        let _ = parse_input(&s);
    }
}

#[test]
fn mb_round_trip() {
    for m in [c3_mb(), c1_mb(), v1200_mb()] {
        let text = print_mb(&m);
        let back = parse_mb(&text).unwrap();
        assert_eq!(
            (back.kappa.clone(), &back.a_forms, &back.b_forms, &back.c_forms, &back.d_forms),
            (m.kappa.clone(), &m.a_forms, &m.b_forms, &m.c_forms, &m.d_forms),
            "{text}"
        );
        assert_eq!(back.var, m.var);
    }
}

#[test]
fn input_kinds() {
    assert!(matches!(parse_input("@c3").unwrap(), Input::Preset(_)));
    assert!(matches!(parse_input("2F1[1/2 + eps, 1/3; 3/4 - 2*eps; z]").unwrap(), Input::Hyper(_)));
    assert!(matches!(parse_input("gauss(p1=1, p2=1, r=-1, q=2)").unwrap(), Input::Family(_)));
    assert!(matches!(parse_input(&print_mb(&c1_mb())).unwrap(), Input::MB(_)));
}

#[test]
fn errors_carry_positions() {
    for (text, col) in [("2F1[1, 2; 3; z", 15), ("2F1[1, eps^2; 3; z]", 8)] {
        match parse_hyper(text) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, col), "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
    let Err(Error::Parse { message, .. }) = parse_hyper("2F1[1; 2; z]") else { panic!() };
    assert!(message.contains("1 upper"), "{message}");
}
