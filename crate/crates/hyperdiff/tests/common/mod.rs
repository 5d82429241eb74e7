//! Reference computations written independently of the library internals.

#![allow(dead_code)]

use hyperdiff::algebra::rat::{int, rat};
use hyperdiff::algebra::BiSeries;
use hyperdiff::algebra::{EpsLin, Rat, ZField};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::Rng;

/// Truncated product of eps-series.
pub fn eps_mul(a: &[Rat], b: &[Rat], k: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); k + 1];
    for (i, x) in a.iter().enumerate().take(k + 1) {
        for (j, y) in b.iter().enumerate().take(k + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `x0 + x1 eps` as a series.
fn lin(x0: &Rat, x1: &Rat, k: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); k + 1];
    v[0] = x0.clone();
    if k > 0 {
        v[1] = x1.clone();
    }
    v
}

/// `1/(x0 + x1 eps) = (1/x0) Σ (−x1/x0)^m eps^m`.
fn inv_lin(x0: &Rat, x1: &Rat, k: usize) -> Vec<Rat> {
    assert!(!x0.is_zero(), "pole at eps = 0");
    let r = -(x1 / x0);
    let mut out = Vec::with_capacity(k + 1);
    let mut p = x0.recip();
    for _ in 0..=k {
        out.push(p.clone());
        p *= &r;
    }
    out
}

/// Coefficients `[z^j][eps^e]` of `Σ ∏(a)_j/∏(b)_j (kappa z)^j/j!`.
pub fn hyper_eps_series(upper: &[EpsLin], lower: &[EpsLin], kappa: &Rat, n: usize, k: usize) -> Vec<Vec<Rat>> {
    let mut rows = Vec::with_capacity(n + 1);
    let mut term = lin(&int(1), &int(0), k);
    rows.push(term.clone());
    for j in 1..=n {
        let m = int(j as i64 - 1);
        for a in upper {
            term = eps_mul(&term, &lin(&(&a.const_part + &m), &a.eps_part, k), k);
        }
        for b in lower {
            term = eps_mul(&term, &inv_lin(&(&b.const_part + &m), &b.eps_part, k), k);
        }
        let s = kappa / int(j as i64);
        term.iter_mut().for_each(|t| *t *= &s);
        rows.push(term.clone());
    }
    rows
}

pub fn oracle_bi(upper: &[EpsLin], lower: &[EpsLin], kappa: &Rat, n: usize, k: usize) -> BiSeries {
    BiSeries::from_rows(n, k, &hyper_eps_series(upper, lower, kappa, n, k))
}

pub fn at(e: &EpsLin, eps: &Rat) -> Rat {
    &e.const_part + &e.eps_part * eps
}

/// z-series of `p+1Fp` with eps replaced by a number.
pub fn hyper_at(upper: &[EpsLin], lower: &[EpsLin], kappa: &Rat, eps: &Rat, n: usize) -> Vec<Rat> {
    let up: Vec<Rat> = upper.iter().map(|a| at(a, eps)).collect();
    let lo: Vec<Rat> = lower.iter().map(|b| at(b, eps)).collect();
    hyper_numeric(&up, &lo, kappa, n)
}

pub fn hyper_numeric(up: &[Rat], lo: &[Rat], kappa: &Rat, n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::one()];
    let mut t = Rat::one();
    for j in 1..=n {
        let m = int(j as i64 - 1);
        for a in up {
            t *= a + &m;
        }
        for b in lo {
            let d = b + &m;
            assert!(!d.is_zero(), "lower parameter hits a pole");
            t /= d;
        }
        t = t * kappa / int(j as i64);
        out.push(t.clone());
    }
    out
}

pub fn mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().min(b.len());
    (0..n).map(|j| (0..=j).map(|i| &a[i] * &b[j - i]).fold(Rat::zero(), |s, x| s + x)).collect()
}

pub fn theta(a: &[Rat]) -> Vec<Rat> {
    a.iter().enumerate().map(|(j, c)| c * int(j as i64)).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    (0..a.len().min(b.len())).map(|j| &a[j] + &b[j]).collect()
}

/// Polynomial in z with eps set to a number; the denominator must be free of z.
pub fn zpoly_at(f: &ZField, eps: &Rat, n: usize) -> Vec<Rat> {
    let den = f.den().coeffs();
    assert_eq!(den.len(), 1, "expected a polynomial in z");
    let d = den[0].eval(eps).expect("denominator defined");
    let mut out: Vec<Rat> = f.num().coeffs().iter().map(|c| c.eval(eps).expect("coefficient defined") / &d).collect();
    out.resize(n + 1, Rat::zero());
    out.truncate(n + 1);
    out
}

/// Rank of a matrix over ℚ by Gaussian elimination.
pub fn rank(mut m: Vec<Vec<Rat>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        let pivot: Vec<Rat> = m[r].iter().map(|x| x * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        m[r] = pivot;
        r += 1;
    }
    r
}

/// Smallest `r` such that `F, θF, …, θ^r F, 1` satisfy a linear relation with
/// polynomial coefficients of degree ≤ `deg`; zero when `F` itself is rational.
pub fn hermite_pade_order(f: &[Rat], max_r: usize, deg: usize) -> Option<usize> {
    let mut gens = vec![f.to_vec()];
    for _ in 0..max_r {
        gens.push(theta(gens.last().unwrap()));
    }
    let mut one = vec![Rat::zero(); f.len()];
    one[0] = Rat::one();
    for r in 0..=max_r {
        let mut cols: Vec<Vec<Rat>> = Vec::new();
        for g in gens.iter().take(r + 1).chain(std::iter::once(&one)) {
            for d in 0..=deg {
                let mut c = vec![Rat::zero(); d];
                c.extend(g.iter().take(f.len() - d).cloned());
                cols.push(c);
            }
        }
        let unknowns = cols.len();
        assert!(f.len() > unknowns + 8, "series too short for the ansatz");
        let rows: Vec<Vec<Rat>> = (0..f.len()).map(|j| cols.iter().map(|c| c[j].clone()).collect()).collect();
        if rank(rows) < unknowns {
            return Some(r);
        }
    }
    None
}

/// Residue series of a one-fold MB integrand from the `Γ(−t)` poles alone:
/// the coefficient of `z^m` relative to `m = 0` is `(−1)^m/m! · kappa^m · ∏Γ(A+m)/Γ(A) · ∏Γ(B)/Γ(B+m)`.
pub fn residue_series(a: &[EpsLin], b: &[EpsLin], kappa: &Rat, n: usize, k: usize) -> Vec<Vec<Rat>> {
    let mut rows = Vec::with_capacity(n + 1);
    let mut term = lin(&int(1), &int(0), k);
    rows.push(term.clone());
    for m in 0..n {
        let mut num = lin(&int(1), &int(0), k);
        for x in a {
            num = eps_mul(&num, &lin(&(&x.const_part + int(m as i64)), &x.eps_part, k), k);
        }
        for x in b {
            num = eps_mul(&num, &inv_lin(&(&x.const_part + int(m as i64)), &x.eps_part, k), k);
        }
        // Γ(−t) residue ratio between t = m+1 and t = m
        let s = -kappa / int(m as i64 + 1);
        term = eps_mul(&term, &num, k);
        term.iter_mut().for_each(|t| *t *= &s);
        rows.push(term.clone());
    }
    rows
}

/// Series of `G(a_1, …, a_w; z)` with `G(a; z) = ∫_0^z dt/(t − a)`, last letter nonzero.
pub fn gpl(word: &[Rat], n: usize) -> Vec<Rat> {
    let mut s = vec![Rat::zero(); n + 1];
    if word.is_empty() {
        s[0] = Rat::one();
        return s;
    }
    let inner = gpl(&word[1..], n);
    let a = &word[0];
    // integrand coefficients of G(rest; t)/(t − a)
    let mut integrand = vec![Rat::zero(); n + 1];
    if a.is_zero() {
        integrand[..n].clone_from_slice(&inner[1..]);
        assert!(inner[0].is_zero(), "trailing zero letters are not series");
    } else {
        let geo: Vec<Rat> = (0..=n).map(|i| -(a.recip().pow(i as i32 + 1))).collect();
        integrand = mul(&inner, &geo);
    }
    for j in 1..=n {
        s[j] = &integrand[j - 1] / int(j as i64);
    }
    s
}

/// `Li_2(z) = Σ z^j/j^2`.
pub fn li2(n: usize) -> Vec<Rat> {
    (0..=n).map(|j| if j == 0 { Rat::zero() } else { rat(1, (j * j) as i64) }).collect()
}

/// Random rational `num/den` with `|num| ≤ span` and `den ∈ [1, max_den]`.
pub fn random_rat(rng: &mut StdRng, span: i64, max_den: i64) -> Rat {
    rat(rng.gen_range(-span..=span), rng.gen_range(1..=max_den))
}

/// A non-integer rational with denominator in `2..=max_den`.
pub fn random_fraction(rng: &mut StdRng, span: i64, max_den: i64) -> Rat {
    loop {
        let r = rat(rng.gen_range(-span..=span), rng.gen_range(2..=max_den));
        if !r.is_integer() {
            return r;
        }
    }
}

/// Parameters whose pairwise differences and constants avoid integers.
pub fn generic_params(rng: &mut StdRng, count: usize) -> Vec<EpsLin> {
    let mut out: Vec<EpsLin> = Vec::new();
    while out.len() < count {
        let c = random_fraction(rng, 7, 9);
        if out.iter().all(|p| !(&p.const_part - &c).is_integer()) {
            let e = random_rat(rng, 5, 4);
            out.push(EpsLin::new(c, if e.is_zero() { int(1) } else { e }));
        }
    }
    out
}
