//! Text forms of hypergeometric functions, MB integrands and classifier queries.
//!
//! ```text
//! 2F1[1/2+eps, -eps; 1+2*eps; z]
//! 3F2[a*eps, 1, b*eps; 1+c*eps, 1; -1/4*x]
//! MB{ symbols: j1, j2; kappa: -1; var: z; A: j1+j2-n/2, j1; B: n/2; C: ; D: }
//! @c3   @c1   @v1200
//! gauss(p1=1, p2=1, r=-1, q=2)   3f2(r=1, p=-1, q=2)   f3(p1=1, p2=0, r1=0, r2=1, p=0, q=2)
//! ```

use std::collections::BTreeMap;

use crate::algebra::expr::{describe, to_linear_form, Parser, Tok};
use crate::algebra::rat::{fmt_rat, Rat};
use crate::algebra::{EpsLin, LinearForm, Ring, SymPoly};
use crate::error::{Error, Result};
use crate::expansion::{ExpParam, HyperSpec};
use crate::hyper::HyperFn;
use crate::mellin_barnes::gamma::GammaProduct;
use crate::mellin_barnes::presets::preset_mb;
use crate::mellin_barnes::MBRepr;

pub const EPS: &str = "eps";

#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Hyper(HyperSpec<SymPoly>),
    MB(MBRepr),
    Preset(String),
    Family(Family),
}

/// Integer data for the classifier families.
#[derive(Clone, Debug, PartialEq)]
pub struct Family {
    pub name: String,
    pub args: BTreeMap<String, Rat>,
}

impl Family {
    pub fn int(&self, key: &str) -> Result<i64> {
        let v = self.args.get(key).ok_or_else(|| Error::Invalid(format!("{}(...) needs {key}", self.name)))?;
        crate::algebra::rat::to_i64(v).filter(|_| v.is_integer()).ok_or_else(|| Error::Invalid(format!("{key} must be an integer")))
    }

    pub fn rat_or(&self, key: &str, default: Rat) -> Rat {
        self.args.get(key).cloned().unwrap_or(default)
    }
}

pub fn parse_input(text: &str) -> Result<Input> {
    let mut p = Parser::new(text)?;
    let out = match p.peek().clone() {
        Tok::Sym('@') => {
            p.advance();
            let name = p.ident()?;
            preset_mb(&name).map_err(|_| p.error(format!("unknown preset @{name}"), &["@c3", "@c1", "@v1200"]))?;
            Input::Preset(name)
        }
        Tok::Ident(s) if s == "MB" => Input::MB(mb(&mut p)?),
        Tok::Ident(s) if s == "gauss" || s == "f3" => Input::Family(family(&mut p, s.clone())?),
        Tok::Num(n) if *p.peek_at(1) == Tok::Ident("f2".into()) && n == 3.into() => {
            p.advance();
            Input::Family(family(&mut p, "3f2".into())?)
        }
        Tok::Num(_) => Input::Hyper(hyper(&mut p)?),
        t => return Err(p.error(format!("found {}", describe(&t)), &["pFq[...]", "MB{...}", "@preset", "gauss(...)", "3f2(...)", "f3(...)"])),
    };
    p.expect_eof()?;
    Ok(out)
}

/// A numeric hypergeometric function.
pub fn parse_hyper(text: &str) -> Result<HyperFn> {
    let spec = parse_hyper_spec(text)?;
    numeric(&spec).ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: format!("symbolic coefficients {:?} are only allowed for expand", spec.symbols()),
        expected: vec!["rational parameters".into()],
    })
}

pub fn numeric(spec: &HyperSpec<SymPoly>) -> Option<HyperFn> {
    let s = spec.as_numeric()?;
    s.bind(&BTreeMap::new()).ok()
}

pub fn parse_hyper_spec(text: &str) -> Result<HyperSpec<SymPoly>> {
    let mut p = Parser::new(text)?;
    let h = hyper(&mut p)?;
    p.expect_eof()?;
    Ok(h)
}

pub fn parse_mb(text: &str) -> Result<MBRepr> {
    match parse_input(text)? {
        Input::MB(m) => Ok(m),
        Input::Preset(name) => preset_mb(&name),
        _ => Err(Error::Parse { line: 1, column: 1, message: "not an MB integrand".into(), expected: vec!["MB{...}".into(), "@preset".into()] }),
    }
}

/// `const + c*eps` with a rational constant.
fn param(p: &mut Parser) -> Result<ExpParam<SymPoly>> {
    let pos = p.position();
    let e = p.expr()?;
    to_param(&e, pos)
}

fn to_param(e: &SymPoly, (line, column): (usize, usize)) -> Result<ExpParam<SymPoly>> {
    let err = |m: &str| Error::Parse { line, column, message: m.into(), expected: vec!["A + a*eps".into()] };
    if e.degree_in(EPS) > 1 {
        return Err(err("parameter is not linear in eps"));
    }
    let c = e.coeff_of(EPS, 0).as_constant().ok_or_else(|| err("the eps^0 part must be a rational number"))?;
    Ok(ExpParam::new(c, e.coeff_of(EPS, 1)))
}

fn list(p: &mut Parser, end: char, item: &mut dyn FnMut(&mut Parser) -> Result<()>) -> Result<()> {
    if p.at(end) || p.at('}') {
        return Ok(());
    }
    loop {
        item(p)?;
        if !p.eat(',') {
            return Ok(());
        }
    }
}

fn hyper(p: &mut Parser) -> Result<HyperSpec<SymPoly>> {
    let n_up = match p.advance() {
        Tok::Num(n) => n,
        t => return Err(p.error(format!("found {}", describe(&t)), &["pFq"])),
    };
    let n_lo = match p.peek().clone() {
        Tok::Ident(s) if s.starts_with('F') && s[1..].parse::<usize>().is_ok() => {
            p.advance();
            s[1..].parse::<usize>().unwrap()
        }
        t => return Err(p.error(format!("found {}", describe(&t)), &["F<q> after the upper count"])),
    };
    p.expect('[')?;
    let mut upper = Vec::new();
    list(p, ';', &mut |p| {
        upper.push((p.position(), p.expr()?));
        Ok(())
    })?;
    p.expect(';')?;
    let mut lower = Vec::new();
    list(p, ';', &mut |p| {
        lower.push((p.position(), p.expr()?));
        Ok(())
    })?;
    p.expect(';')?;
    let arg = p.expr()?;
    p.expect(']')?;
    let (kappa, var) = argument(p, &arg)?;
    if n_up != upper.len().into() || lower.len() != n_lo {
        return Err(
            p.error(format!("{n_up}F{n_lo} given {} upper and {} lower parameters", upper.len(), lower.len()), &["matching parameter counts"])
        );
    }
    let conv = |v: Vec<((usize, usize), SymPoly)>| v.into_iter().map(|(pos, e)| to_param(&e, pos)).collect::<Result<Vec<_>>>();
    HyperSpec::new(conv(upper)?, conv(lower)?, kappa, &var).map_err(|e| p.error(e.to_string(), &["p+1 upper and p lower parameters"]))
}

fn argument(p: &Parser, arg: &SymPoly) -> Result<(Rat, String)> {
    let bad = || p.error("argument must be a rational multiple of one variable", &["kappa*z"]);
    let syms = arg.symbols();
    let [v] = syms.as_slice() else { return Err(bad()) };
    if v == EPS || arg.degree_in(v) != 1 || !arg.coeff_of(v, 0).is_zero() {
        return Err(bad());
    }
    let k = arg.coeff_of(v, 1).as_constant().ok_or_else(bad)?;
    Ok((k, v.clone()))
}

/// Concatenated tokens up to `;` or `}`, for variable names like `m^2/M^2`.
fn raw_text(p: &mut Parser) -> Result<String> {
    let mut s = String::new();
    while !p.at(';') && !p.at('}') && *p.peek() != Tok::Eof {
        s += &match p.advance() {
            Tok::Num(n) => n.to_string(),
            Tok::Ident(i) => i,
            Tok::Sym(c) => c.to_string(),
            Tok::Eof => unreachable!(),
        };
    }
    if s.is_empty() {
        return Err(p.error("empty value", &["text"]));
    }
    Ok(s)
}

/// A parsed form and where it started.
type Located = (SymPoly, (usize, usize));

fn mb(p: &mut Parser) -> Result<MBRepr> {
    p.advance();
    p.expect('{')?;
    let mut symbols: Option<Vec<String>> = None;
    let mut kappa = None;
    let mut var = None;
    let mut forms: BTreeMap<String, Vec<Located>> = BTreeMap::new();
    loop {
        if p.eat('}') {
            break;
        }
        let key = p.ident()?;
        p.expect(':')?;
        match key.as_str() {
            "symbols" => {
                let mut v = Vec::new();
                list(p, ';', &mut |p| {
                    v.push(p.ident()?);
                    Ok(())
                })?;
                symbols = Some(v);
            }
            "kappa" => {
                let e = p.expr()?;
                kappa = Some(e.as_constant().ok_or_else(|| p.error("kappa must be rational", &["rational number"]))?);
            }
            "var" => var = Some(raw_text(p)?),
            "A" | "B" | "C" | "D" => {
                let mut v = Vec::new();
                list(p, ';', &mut |p| {
                    let pos = p.position();
                    v.push((p.expr()?, pos));
                    Ok(())
                })?;
                forms.insert(key.clone(), v);
            }
            _ => return Err(p.error(format!("unknown field {key}"), &["symbols", "kappa", "var", "A", "B", "C", "D"])),
        }
        if !p.eat(';') {
            p.expect('}')?;
            break;
        }
    }
    let symbols = symbols.unwrap_or_default();
    let mut conv = |k: &str| -> Result<Vec<LinearForm>> {
        forms
            .remove(k)
            .unwrap_or_default()
            .into_iter()
            .map(|(e, (line, column))| {
                to_linear_form(&e, &symbols).map_err(|err| Error::Parse {
                    line,
                    column,
                    message: err.to_string(),
                    expected: vec!["linear form".into()],
                })
            })
            .collect()
    };
    let (a, b, c, d) = (conv("A")?, conv("B")?, conv("C")?, conv("D")?);
    let kappa = kappa.ok_or_else(|| p.error("missing kappa", &["kappa: <rational>"]))?;
    let var = var.unwrap_or_else(|| "z".into());
    MBRepr::new(symbols, kappa, &var, a, b, c, d, GammaProduct::default()).map_err(|e| p.error(e.to_string(), &["dim A + dim D - dim B - dim C = 1"]))
}

fn family(p: &mut Parser, name: String) -> Result<Family> {
    p.advance();
    p.expect('(')?;
    let mut args = BTreeMap::new();
    list(p, ')', &mut |p| {
        let k = p.ident()?;
        p.expect('=')?;
        let v = p.expr()?;
        let v = v.as_constant().ok_or_else(|| p.error(format!("{k} must be a number"), &["rational number"]))?;
        args.insert(k, v);
        Ok(())
    })?;
    p.expect(')')?;
    Ok(Family { name, args })
}

/// An eps-linear value such as `4-2*eps`.
pub fn parse_epslin(text: &str) -> Result<EpsLin> {
    let mut p = Parser::new(text)?;
    let e = param(&mut p)?;
    p.expect_eof()?;
    let c = e.eps_part.as_constant().ok_or_else(|| p.error("only eps may appear", &["A + a*eps"]))?;
    Ok(EpsLin::new(e.const_part, c))
}

pub fn print_hyper(f: &HyperFn) -> String {
    f.to_string()
}

pub fn print_mb(m: &MBRepr) -> String {
    let l = |v: &[LinearForm]| v.iter().map(|f| f.render(&m.symbols)).collect::<Vec<_>>().join(", ");
    format!(
        "MB{{ symbols: {}; kappa: {}; var: {}; A: {}; B: {}; C: {}; D: {} }}",
        m.symbols.join(", "),
        fmt_rat(&m.kappa),
        m.var,
        l(&m.a_forms),
        l(&m.b_forms),
        l(&m.c_forms),
        l(&m.d_forms)
    )
}

pub fn print_family(f: &Family) -> String {
    let args = f.args.iter().map(|(k, v)| format!("{k}={}", fmt_rat(v))).collect::<Vec<_>>().join(", ");
    format!("{}({args})", f.name)
}
