//! Built-in self-checks run by `verify --suite`, one worker thread per check.

use std::collections::BTreeMap;

use serde_json::json;

use super::output::{Record, Verification};
use crate::algebra::rat::{int, rat, Rat};
use crate::algebra::Ring;
use crate::algebra::{EpsField, EpsLin};
use crate::error::{Error, Result};
use crate::expansion::factorization::gauss_tags_int;
use crate::expansion::{epsilon_expand, f3_parametrization_check, three_f2_system, verify_expansion};
use crate::hyper::{ode_operator, series_of_hyper, HyperFn};
use crate::mellin_barnes::presets::{preset_mb, preset_printed, PRESETS};
use crate::mellin_barnes::{count_master_integrals, mb_to_hyper, Bindings};
use crate::reduction::{reduce_to_basis, verify_reduction};

type Check = fn() -> Result<(bool, String)>;

pub const CHECKS: [(&str, Check); 8] = [
    ("ode-annihilation", ode_annihilation),
    ("reduction-identities", reduction_identities),
    ("master-counts", master_counts),
    ("mb-conversion", mb_conversion),
    ("eps-expansion", eps_expansion),
    ("criterion-i", criterion_i),
    ("parametrization-classifiers", classifiers),
    ("negative-controls", negative_controls),
];

fn e(c: Rat, x: Rat) -> EpsLin {
    EpsLin::new(c, x)
}

fn ode_annihilation() -> Result<(bool, String)> {
    let fns = [
        HyperFn::new(vec![e(rat(1, 2), int(1)), e(rat(-1, 3), int(2))], vec![e(rat(5, 7), int(-1))], rat(1, 4), "z")?,
        HyperFn::simple(vec![e(rat(1, 3), int(1)), e(int(2), rat(1, 2)), e(rat(-3, 5), int(0))], vec![e(rat(7, 4), int(1)), e(rat(1, 6), int(-2))])?,
        HyperFn::new(
            vec![e(rat(1, 5), int(1)), e(int(1), int(-1)), e(rat(2, 3), int(3)), e(rat(-1, 2), int(1))],
            vec![e(rat(3, 2), int(0)), e(rat(4, 3), int(1)), e(rat(9, 7), rat(1, 2))],
            int(-1),
            "z",
        )?,
    ];
    for f in &fns {
        if !ode_operator::<EpsField>(f)?.apply(&series_of_hyper(f, 30, 4)?)?.is_zero() {
            return Ok((false, format!("{f} is not annihilated")));
        }
    }
    Ok((true, format!("{} functions at N=30, K=4", fns.len())))
}

fn reduction_identities() -> Result<(bool, String)> {
    let basis = HyperFn::simple(vec![e(rat(1, 3), int(1)), e(rat(2, 5), int(-1))], vec![e(rat(3, 4), int(2))])?;
    let shifts: [(i64, i64, i64); 4] = [(1, 0, 0), (0, -1, 1), (2, 1, -1), (-1, 0, 2)];
    for (da, db, dc) in shifts {
        let t = basis.with_upper(0, basis.upper[0].add_int(da)).with_upper(1, basis.upper[1].add_int(db)).with_lower(0, basis.lower[0].add_int(dc));
        let r = reduce_to_basis(&t, &basis)?;
        if !verify_reduction(&r, 30, 3)?.passed() {
            return Ok((false, format!("{t} does not reduce to {basis}")));
        }
    }
    Ok((true, format!("{} shifts of {basis} at N=30, K=3", shifts.len())))
}

fn bindings(pairs: &[(&str, EpsLin)]) -> Bindings {
    pairs.iter().fold(Bindings::default(), |b, (k, v)| b.with(k, v.clone()))
}

fn master_counts() -> Result<(bool, String)> {
    let i = |n: i64| EpsLin::int(n);
    let cases = [
        ("c3", bindings(&[("j1", i(1)), ("j2", i(1)), ("sigma", i(1))]), 2),
        ("c1", bindings(&[("rho", i(1)), ("sigma1", EpsLin::eps(int(1))), ("sigma2", EpsLin::eps(int(2)))]), 2),
        ("c1", bindings(&[("rho", i(1)), ("sigma1", i(1)), ("sigma2", i(1))]), 1),
        ("v1200", bindings(&[("alpha", i(1)), ("beta", i(1)), ("sigma", i(1)), ("rho", i(1))]), 2),
    ];
    let mut got = Vec::new();
    for (name, b, want) in &cases {
        let (l, _) = count_master_integrals(&mb_to_hyper(&preset_mb(name)?)?, b)?;
        got.push(format!("{name}: L={l}"));
        if l != *want {
            return Ok((false, format!("{name}: L={l}, expected {want}")));
        }
    }
    Ok((true, got.join(", ")))
}

fn mb_conversion() -> Result<(bool, String)> {
    for name in PRESETS {
        let h = mb_to_hyper(&preset_mb(name)?)?;
        let printed = preset_printed(name)?;
        let ok = if name == "v1200" { h.same_functions_up_to_overall_power(&printed) } else { h.same_functions(&printed) };
        if !ok {
            return Ok((false, format!("{name} does not close onto the printed functions")));
        }
    }
    Ok((true, "c3, c1 and v1200 match".into()))
}

fn eps_expansion() -> Result<(bool, String)> {
    let (a, b, c) = (rat(2, 3), rat(-5, 7), rat(3, 11));
    let f = HyperFn::simple(vec![EpsLin::eps(a.clone()), EpsLin::eps(b.clone())], vec![e(int(1), c)])?;
    let g = HyperFn::simple(vec![EpsLin::int(1), EpsLin::eps(int(1))], vec![e(int(1), int(1))])?;
    for h in [&f, &g] {
        let x = epsilon_expand(h, 4)?;
        let v = verify_expansion(h, &x, 30)?;
        if !v.passed() {
            return Ok((false, format!("{h}: {v}")));
        }
    }
    let x = epsilon_expand(&f, 2)?;
    let li2 = x.orders[2].coefficient(&[int(0), int(1)]);
    let ok = li2 == -(a * b);
    Ok((ok, "both functions to K=4 at N=30; eps^2 layer is ab Li2(z)".into()))
}

fn criterion_i() -> Result<(bool, String)> {
    let mut checked = 0;
    for name in PRESETS {
        let m = preset_mb(name)?;
        let h = mb_to_hyper(&m)?;
        let k = m.symbols.len() as u32;
        for code in 0..3usize.pow(k) {
            let b = m.symbols.iter().enumerate().fold(Bindings::default(), |b, (i, s)| b.with_int(s, 1 + (code / 3usize.pow(i as u32) % 3) as i64));
            match count_master_integrals(&h, &b) {
                Ok(_) => checked += 1,
                Err(Error::CriterionViolation(c)) => return Ok((false, format!("{name}: counts {c:?}"))),
                Err(e) => return Err(e),
            }
        }
    }
    Ok((true, format!("{checked} integer bindings")))
}

fn classifiers() -> Result<(bool, String)> {
    let data = ([rat(1, 2), rat(-1, 3), int(2)], [rat(2, 7), rat(-3, 4)]);
    for q in 1..=3i64 {
        for r in -2..=2i64 {
            for p in -2..=2i64 {
                let (_, rep) = three_f2_system(r, p, q, data.0.clone(), data.1.clone())?;
                if rep.parametrization.is_some() != (p == -r) {
                    return Ok((false, format!("3F2 (r, p, q) = ({r}, {p}, {q})")));
                }
            }
        }
    }
    let range = -1..=1i64;
    for p1 in range.clone() {
        for p2 in range.clone() {
            for r1 in range.clone() {
                for r2 in range.clone() {
                    let rep = f3_parametrization_check(p1, p2, r1, r2, 0, 2)?;
                    if rep.pass != (p1 * r1 == 0 && p2 * r2 == 0) {
                        return Ok((false, format!("F3 ({p1}, {p2}, {r1}, {r2})")));
                    }
                }
            }
        }
    }
    let accepted = gauss_tags_int(1, 1, -1, 2).half_integer;
    let rejected = !gauss_tags_int(1, 3, -1, 2).half_integer && !gauss_tags_int(1, 1, 0, 2).half_integer;
    Ok((accepted && rejected, "3F2 accepts iff p = -r; F3 accepts iff p_j r_j = 0; Gauss half-integer condition".into()))
}

fn negative_controls() -> Result<(bool, String)> {
    let basis = HyperFn::simple(vec![e(rat(1, 3), int(1)), e(rat(2, 5), int(-1))], vec![e(rat(3, 4), int(2))])?;
    let t = basis.with_upper(0, basis.upper[0].add_int(1));
    let mut r = reduce_to_basis(&t, &basis)?;
    r.algebraic_tail = r.algebraic_tail.add_ref(&crate::algebra::ZField::constant(EpsField::one()));
    let red = !verify_reduction(&r, 30, 2)?.passed();
    let f = HyperFn::simple(vec![EpsLin::eps(int(1)), EpsLin::eps(int(2))], vec![e(int(1), int(3))])?;
    let mut x = epsilon_expand(&f, 3)?;
    x.orders[3] = x.orders[3].add(&crate::expansion::PolyLogExpr::constant(int(1), "z"));
    let exp = verify_expansion(&f, &x, 30)? == crate::verdict::Verdict::Mismatch { z_power: 0, eps_power: 3 };
    let g = HyperFn::simple(vec![EpsLin::int(1), EpsLin::constant(rat(1, 3))], vec![EpsLin::int(2)])?;
    let base = g.with_lower(0, EpsLin::int(1));
    let sing = matches!(reduce_to_basis(&g, &base), Err(Error::SingularStep(_)));
    Ok((red && exp && sing, format!("reduction detected: {red}, expansion detected: {exp}, singular step raised: {sing}")))
}

/// Runs every check concurrently; records come back in a fixed order.
pub fn run_suite() -> Vec<Record> {
    let results: Vec<Result<(bool, String)>> = std::thread::scope(|s| {
        let handles: Vec<_> = CHECKS.iter().map(|(_, f)| s.spawn(f)).collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| Err(Error::Invalid("check panicked".into())))).collect()
    });
    CHECKS
        .iter()
        .zip(results)
        .map(|((name, _), res)| {
            let (v, detail) = match res {
                Ok((ok, d)) => (Verification::check(ok, "self-check", None), d),
                Err(e) => (Verification::check(false, "self-check", Some(e.to_string())), String::new()),
            };
            Record {
                command: "verify".into(),
                input: "--suite".into(),
                options: BTreeMap::from([("check".into(), name.to_string())]),
                result: json!({ "check": name, "detail": detail }),
                summary: vec![format!("{name}: {detail}")],
                verification: v,
            }
        })
        .collect()
}
