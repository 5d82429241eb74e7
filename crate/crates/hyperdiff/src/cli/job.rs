//! Job specifications and their execution.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use super::grammar::{numeric, parse_epslin, parse_hyper, parse_hyper_spec, parse_input, print_family, print_mb, Family, Input};
use super::output::{decode_z, encode_z, Format, Record, Verification};
use super::suite::run_suite;
use crate::algebra::rat::{fmt_rat, int, rat, Rat};
use crate::algebra::{BiSeries, EpsLin, SymPoly};
use crate::error::{Error, Result};
use crate::expansion::factorization::gauss_tags_int;
use crate::expansion::verify::verify_expansion;
use crate::expansion::{
    expand, f3_parametrization_check, factorization_conditions, gauss_triangular_system, three_f2_system, verify_symbolic, Coeff, Expansion,
    ExpansionClass, GaussTags, HyperSpec, PolyLogExpr, TriangularSystem,
};
use crate::hyper::{series_of_hyper, HyperFn};
use crate::mellin_barnes::presets::preset_printed;
use crate::mellin_barnes::{count_master_integrals, mb_to_hyper, Bindings, HyperSum, MBRepr};
use crate::reduction::reduce::shift_length;
use crate::reduction::{count_nontrivial_basis, detect_exceptional, reduce_to_basis, verify_reduction, ReductionResult};

pub const MAX_TERMS: usize = 200;
pub const MAX_ORDER: usize = 8;
pub const DEFAULT_TERMS: usize = 30;
pub const DEFAULT_ORDER: usize = 2;
/// Highest eps order checked by automatic verification.
pub const AUTO_VERIFY_ORDER: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Reduce,
    CountBasis,
    Mb,
    CountMasters,
    Expand,
    CheckParametrization,
    Verify,
}

impl Command {
    pub const ALL: [Command; 7] =
        [Command::Reduce, Command::CountBasis, Command::Mb, Command::CountMasters, Command::Expand, Command::CheckParametrization, Command::Verify];

    pub fn name(&self) -> &'static str {
        match self {
            Command::Reduce => "reduce",
            Command::CountBasis => "count-basis",
            Command::Mb => "mb",
            Command::CountMasters => "count-masters",
            Command::Expand => "expand",
            Command::CheckParametrization => "check-parametrization",
            Command::Verify => "verify",
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Invalid(format!("unknown command {s:?}")))
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One invocation of the tool.
#[derive(Clone, Debug, PartialEq)]
pub struct JobSpec {
    pub command: Command,
    /// Expression text, or a record file for `verify`.
    pub input: String,
    pub basis: Option<String>,
    /// Series order N in z.
    pub terms: usize,
    /// Order K in eps.
    pub order: usize,
    pub verify: bool,
    /// Symbol values such as `("j1", "1")` or `("n", "4-2*eps")`.
    pub bindings: Vec<(String, String)>,
    pub suite: bool,
    pub format: Format,
}

impl JobSpec {
    pub fn new(command: Command, input: &str) -> Self {
        JobSpec {
            command,
            input: input.to_string(),
            basis: None,
            terms: DEFAULT_TERMS,
            order: DEFAULT_ORDER,
            verify: true,
            bindings: vec![],
            suite: false,
            format: Format::Jsonl,
        }
    }

    pub fn order(mut self, k: usize) -> Self {
        self.order = k;
        self
    }

    pub fn terms(mut self, n: usize) -> Self {
        self.terms = n;
        self
    }

    pub fn basis(mut self, b: &str) -> Self {
        self.basis = Some(b.to_string());
        self
    }

    pub fn bind(mut self, name: &str, value: &str) -> Self {
        self.bindings.push((name.to_string(), value.to_string()));
        self
    }

    pub fn no_verify(mut self) -> Self {
        self.verify = false;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.terms == 0 || self.terms > MAX_TERMS {
            return Err(Error::Invalid(format!("series order N must be in 1..={MAX_TERMS}, got {}", self.terms)));
        }
        if self.order > MAX_ORDER {
            return Err(Error::Invalid(format!("eps order K must be at most {MAX_ORDER}, got {}", self.order)));
        }
        if self.command == Command::Verify && !self.suite && self.input.is_empty() {
            return Err(Error::Invalid("verify needs a record file or --suite".into()));
        }
        Ok(())
    }

    /// Options that determine the result, stored with each record.
    fn options(&self) -> BTreeMap<String, String> {
        let mut o = BTreeMap::new();
        if matches!(self.command, Command::Reduce | Command::Expand | Command::CheckParametrization) {
            o.insert("order".into(), self.order.to_string());
            o.insert("terms".into(), self.terms.to_string());
        }
        if let Some(b) = &self.basis {
            o.insert("basis".into(), b.clone());
        }
        for (k, v) in &self.bindings {
            o.insert(format!("bind:{k}"), v.clone());
        }
        o
    }

    /// The job that produced `r`.
    pub fn from_record(r: &Record) -> Result<Self> {
        let mut j = JobSpec::new(r.command.parse()?, &r.input);
        for (k, v) in &r.options {
            let num = || v.parse::<usize>().map_err(|_| Error::Invalid(format!("option {k} = {v:?} is not a count")));
            match k.as_str() {
                "order" => j.order = num()?,
                "terms" => j.terms = num()?,
                "basis" => j.basis = Some(v.clone()),
                _ => match k.strip_prefix("bind:") {
                    Some(s) => j.bindings.push((s.to_string(), v.clone())),
                    None => return Err(Error::Invalid(format!("unknown option {k}"))),
                },
            }
        }
        Ok(j)
    }

    fn bindings(&self, symbols: &[String]) -> Result<Bindings> {
        let mut b = Bindings::default();
        for (k, v) in &self.bindings {
            let val = parse_epslin(v)?;
            if k == "n" {
                b.n = val;
            } else if symbols.contains(k) {
                b = b.with(k, val);
            } else {
                return Err(Error::Invalid(format!("--{k} is not a symbol of the integrand (symbols: {})", symbols.join(", "))));
            }
        }
        Ok(b)
    }

    fn record(&self, result: Value, verification: Verification, summary: Vec<String>) -> Record {
        Record { command: self.command.name().into(), input: self.input.clone(), options: self.options(), result, verification, summary }
    }
}

/// `--name value` or `--name=value` pairs given after the expression.
pub fn parse_binding_args(args: &[String]) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let name = a.strip_prefix("--").filter(|n| !n.is_empty()).ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: format!("unexpected argument {a:?}"),
            expected: vec!["--<symbol> <value>".into()],
        })?;
        let (name, value) = match name.split_once('=') {
            Some((n, v)) => (n.to_string(), v.to_string()),
            None => {
                let v = it.next().ok_or_else(|| Error::Invalid(format!("--{name} needs a value")))?;
                (name.to_string(), v.clone())
            }
        };
        parse_epslin(&value)?;
        out.push((name, value));
    }
    Ok(out)
}

/// Records of one job and the process exit status.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub records: Vec<Record>,
    pub exit_code: i32,
}

impl Outcome {
    fn of(records: Vec<Record>) -> Self {
        let exit_code = if records.iter().any(|r| r.verification.failed()) { 5 } else { 0 };
        Outcome { records, exit_code }
    }

    pub fn render(&self, f: Format) -> String {
        self.records.iter().map(|r| r.render(f)).collect()
    }
}

/// Exit status for each error class.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::UnsupportedClass(_) | Error::NotTriangular(_) | Error::NoFactorization(_) => 3,
        Error::SingularStep(_) | Error::DegeneratePoles(_) | Error::PoleAtEpsZero(_) | Error::UncancelledPole(_) | Error::CriterionViolation(_) => 4,
        Error::Verification(_) => 5,
        _ => 1,
    }
}

pub fn run_job(job: &JobSpec) -> Result<Outcome> {
    job.validate()?;
    let rec = match job.command {
        Command::Reduce => reduce(job)?,
        Command::CountBasis => count_basis(job)?,
        Command::Mb => mb(job)?,
        Command::CountMasters => count_masters(job)?,
        Command::Expand => expand_job(job)?,
        Command::CheckParametrization => check_parametrization(job)?,
        Command::Verify if job.suite => return Ok(Outcome::of(run_suite())),
        Command::Verify => return verify_file(job),
    };
    Ok(Outcome::of(vec![rec]))
}

/// Moves every constant part into `(0, 1]`.
pub fn default_basis(f: &HyperFn) -> Result<HyperFn> {
    let m = |e: &EpsLin| {
        let shift = e.const_part.ceil() - int(1);
        EpsLin::new(&e.const_part - shift, e.eps_part.clone())
    };
    HyperFn::new(f.upper.iter().map(m).collect(), f.lower.iter().map(m).collect(), f.kappa.clone(), &f.var)
}

fn reduction_json(r: &ReductionResult) -> Value {
    let t = r.render();
    json!({
        "target": r.target.to_string(),
        "basis": r.basis.to_string(),
        "shift_length": shift_length(&r.target, &r.basis),
        "s": t.s,
        "r": t.r,
        "tail": t.tail,
        "exact": {
            "s": encode_z(&r.s_poly),
            "r": r.r_polys.iter().map(encode_z).collect::<Vec<_>>(),
            "tail": encode_z(&r.algebraic_tail),
        },
    })
}

fn reduction_from_json(v: &Value) -> Result<ReductionResult> {
    let text = |k: &str| v[k].as_str().ok_or_else(|| Error::Invalid(format!("reduction record lacks {k}")));
    let e = &v["exact"];
    let r = e["r"].as_array().ok_or_else(|| Error::Invalid("reduction record lacks exact.r".into()))?;
    Ok(ReductionResult {
        target: parse_hyper(text("target")?)?,
        basis: parse_hyper(text("basis")?)?,
        s_poly: decode_z(&e["s"])?,
        r_polys: r.iter().map(decode_z).collect::<Result<_>>()?,
        algebraic_tail: decode_z(&e["tail"])?,
    })
}

fn reduce(job: &JobSpec) -> Result<Record> {
    let target = parse_hyper(&job.input)?;
    let basis = match &job.basis {
        Some(b) => parse_hyper(b)?,
        None => default_basis(&target)?,
    };
    let r = reduce_to_basis(&target, &basis)?;
    let k = job.order.min(AUTO_VERIFY_ORDER);
    let v =
        if job.verify { Verification::series(&verify_reduction(&r, job.terms, k)?, job.terms, k, "series oracle") } else { Verification::skipped() };
    let t = r.render();
    let mut summary = vec![format!("basis: {}", r.basis), format!("S = {}", t.s)];
    summary.extend(t.r.iter().enumerate().map(|(j, x)| format!("R_{j} = {x}")));
    summary.push(format!("tail = {}", t.tail));
    Ok(job.record(reduction_json(&r), v, summary))
}

fn count_basis(job: &JobSpec) -> Result<Record> {
    let f = parse_hyper(&job.input)?;
    let count = count_nontrivial_basis(&f);
    let report = detect_exceptional(&f);
    let mut summary = vec![format!("L = {count}")];
    summary.extend(report.notes.iter().cloned());
    let result = json!({ "function": f.to_string(), "count": count, "report": report });
    Ok(job.record(result, Verification::none(), summary))
}

fn parse_integrand(text: &str) -> Result<(MBRepr, Option<String>)> {
    match parse_input(text)? {
        Input::MB(m) => Ok((m, None)),
        Input::Preset(p) => Ok((crate::mellin_barnes::presets::preset_mb(&p)?, Some(p))),
        _ => Err(Error::Parse {
            line: 1,
            column: 1,
            message: "expected an MB integrand".into(),
            expected: vec!["MB{...}".into(), "@c3".into(), "@c1".into(), "@v1200".into()],
        }),
    }
}

fn sum_json(h: &HyperSum) -> Value {
    json!({
        "symbols": h.symbols,
        "terms": h.terms.iter().map(|t| t.render(&h.symbols)).collect::<Vec<_>>(),
        "structured": h,
    })
}

/// Presets are compared with the printed parameter lists.
fn preset_check(name: &str, h: &HyperSum) -> Result<Verification> {
    let printed = preset_printed(name)?;
    let ok = if name == "v1200" { h.same_functions_up_to_overall_power(&printed) } else { h.same_functions(&printed) };
    Ok(Verification::check(ok, "printed parameter lists", None))
}

fn mb(job: &JobSpec) -> Result<Record> {
    let (m, preset) = parse_integrand(&job.input)?;
    let h = mb_to_hyper(&m)?;
    let mut result = sum_json(&h);
    result["integrand"] = json!(print_mb(&m));
    let mut summary: Vec<String> = h.terms.iter().map(|t| t.render(&h.symbols)).collect();
    if !job.bindings.is_empty() {
        let fns = h.bind_all(&job.bindings(&m.symbols)?)?;
        result["bound"] = json!(fns.iter().map(|f| f.to_string()).collect::<Vec<_>>());
        summary.extend(fns.iter().map(|f| format!("bound: {f}")));
    }
    let v = match &preset {
        Some(p) => preset_check(p, &h)?,
        None => Verification::none(),
    };
    Ok(job.record(result, v, summary))
}

fn count_masters(job: &JobSpec) -> Result<Record> {
    let (m, _) = parse_integrand(&job.input)?;
    let h = mb_to_hyper(&m)?;
    let (l, per) = count_master_integrals(&h, &job.bindings(&m.symbols)?)?;
    let mut summary = vec![format!("L={l}")];
    summary.extend(per.iter().map(|t| format!("{}: {}", t.function, t.count)));
    Ok(job.record(json!({ "L": l, "terms": per }), Verification::none(), summary))
}

fn expansion_json<C: Coeff>(e: &Expansion<C>) -> Value {
    json!({
        "function": e.function.to_string(),
        "class": e.class.name(),
        "var": e.var,
        "prefactor": e.prefactor(),
        "change_of_variable": e.change_of_variable(),
        "orders": e.orders.iter().map(PolyLogExpr::to_json).collect::<Vec<_>>(),
        "text": e.orders.iter().map(PolyLogExpr::render).collect::<Vec<_>>(),
    })
}

fn expansion_from_json<C: Coeff>(function: HyperSpec<C>, v: &Value) -> Result<Expansion<C>> {
    let bad = |k: &str| Error::Invalid(format!("expansion record lacks {k}"));
    let class = v["class"].as_str().and_then(ExpansionClass::from_name).ok_or_else(|| bad("class"))?;
    let var = v["var"].as_str().ok_or_else(|| bad("var"))?.to_string();
    let orders = v["orders"].as_array().ok_or_else(|| bad("orders"))?.iter().map(PolyLogExpr::from_json).collect::<Result<_>>()?;
    Ok(Expansion { function, class, var, orders })
}

fn truncate<C: Coeff>(e: &Expansion<C>, k: usize) -> Expansion<C> {
    Expansion { orders: e.orders.iter().take(k + 1).cloned().collect(), ..e.clone() }
}

fn verify_spec_expansion(spec: &HyperSpec<SymPoly>, e: &Expansion<SymPoly>, n: usize) -> Result<Verification> {
    let k = e.order();
    match numeric(spec) {
        Some(f) => {
            let e = e.map(|c| c.as_constant().unwrap_or_else(|| int(0)));
            Ok(Verification::series(&verify_expansion(&f, &e, n)?, n, k, "series oracle"))
        }
        None => Ok(Verification::series(&verify_symbolic(e, n)?, n, k, "series oracle at sample points")),
    }
}

fn expand_job(job: &JobSpec) -> Result<Record> {
    let spec = parse_hyper_spec(&job.input)?;
    let e = expand(&spec, job.order)?;
    crate::expansion::verify::check_symbols(&e)?;
    let v = if job.verify { verify_spec_expansion(&spec, &truncate(&e, AUTO_VERIFY_ORDER), job.terms)? } else { Verification::skipped() };
    let mut summary = vec![format!("class: {}", e.class.name())];
    summary.extend(e.render().lines().map(str::to_string));
    Ok(job.record(expansion_json(&e), v, summary))
}

fn hyper_from(upper: Vec<EpsLin>, lower: Vec<EpsLin>) -> Result<HyperFn> {
    HyperFn::simple(upper, lower)
}

/// Compares `θ`-derived unknowns against the system, as a verification.
fn system_check(sys: &TriangularSystem, unknowns: &[BiSeries], n: usize, k: usize) -> Result<Verification> {
    Ok(Verification::series(&sys.check_series(unknowns)?, n, k, "system against series oracle"))
}

fn system_json(sys: &TriangularSystem) -> Result<Value> {
    Ok(serde_json::to_value(sys.render()?).expect("system text serializes"))
}

fn gauss_family(job: &JobSpec, fam: &Family) -> Result<Record> {
    let (p1, p2, r, q) = (fam.int("p1")?, fam.int("p2")?, fam.int("r")?, fam.int("q")?);
    if q == 0 {
        return Err(Error::Invalid("q must be nonzero".into()));
    }
    let a1 = fam.rat_or("a1", rat(1, 3));
    let a2 = fam.rat_or("a2", rat(-2, 5));
    let c = fam.rat_or("c", rat(3, 7));
    let f = |x: i64| Rat::new(x.into(), q.into());
    let tags: GaussTags = gauss_tags_int(p1, p2, r, q);
    let h = hyper_from(vec![EpsLin::new(f(p1), a1.clone()), EpsLin::new(f(p2), a2.clone())], vec![EpsLin::new(int(1) - f(r), c.clone())])?;
    let (n, k) = (job.terms.min(DEFAULT_TERMS), job.order.min(AUTO_VERIFY_ORDER));
    let w = series_of_hyper(&h, n, k)?;
    let mut betas = vec![int(0), f(p1), f(p2), -f(r)];
    betas.sort();
    betas.dedup();
    let mut candidates = Vec::new();
    let mut summary = vec![format!("function: {h}"), format!("accepted: {}", tags.half_integer)];
    let mut verification = Verification::none();
    for beta in betas {
        match gauss_triangular_system(p1, p2, r, q, &a1, &a2, &c, &beta) {
            Ok(sys) => {
                summary.push(format!("beta = {}: triangular", fmt_rat(&beta)));
                if job.verify && !verification.failed() {
                    let rho = w.theta().add(&w.scale(&beta));
                    verification = system_check(&sys, &[w.clone(), rho], n, k)?;
                }
                candidates.push(json!({ "beta": fmt_rat(&beta), "triangular": true, "system": system_json(&sys)? }));
            }
            Err(Error::NotTriangular(why)) => {
                summary.push(format!("beta = {}: not triangular ({why})", fmt_rat(&beta)));
                candidates.push(json!({ "beta": fmt_rat(&beta), "triangular": false, "reason": why }));
            }
            Err(e) => return Err(e),
        }
    }
    let result = json!({
        "family": print_family(fam),
        "function": h.to_string(),
        "accepted": tags.half_integer,
        "tags": tags,
        "candidates": candidates,
    });
    Ok(job.record(result, verification, summary))
}

fn three_f2_family(job: &JobSpec, fam: &Family) -> Result<Record> {
    let (r, p, q) = (fam.int("r")?, fam.int("p")?, fam.int("q")?);
    let a = [fam.rat_or("a1", rat(1, 2)), fam.rat_or("a2", rat(-1, 3)), fam.rat_or("a3", int(2))];
    let b = [fam.rat_or("b1", rat(2, 7)), fam.rat_or("b2", rat(-3, 4))];
    let (sys, report) = three_f2_system(r, p, q, a.clone(), b.clone())?;
    let s = Rat::new(r.into(), q.into());
    let t = Rat::new(p.into(), q.into());
    let h = hyper_from(
        vec![EpsLin::new(s.clone(), a[0].clone()), EpsLin::eps(a[1].clone()), EpsLin::eps(a[2].clone())],
        vec![EpsLin::new(int(1) + &s, b[0].clone()), EpsLin::new(int(1) - &t, b[1].clone())],
    )?;
    let accepted = report.parametrization.is_some();
    let verification = if job.verify {
        let (n, k) = (job.terms.min(DEFAULT_TERMS), job.order.min(AUTO_VERIFY_ORDER));
        let w = series_of_hyper(&h, n, k)?;
        let u1 = w.theta();
        let u2 = u1.theta().add(&u1.scale(&s));
        system_check(&sys, &[w, u1, u2], n, k)?
    } else {
        Verification::skipped()
    };
    let summary = vec![
        format!("function: {h}"),
        format!("accepted: {accepted}"),
        format!("case: {}", report.case),
        format!("parametrization: {}", report.parametrization.clone().unwrap_or_else(|| "none".into())),
    ];
    let result = json!({
        "family": print_family(fam),
        "function": h.to_string(),
        "accepted": accepted,
        "report": report,
        "system": system_json(&sys)?,
    });
    Ok(job.record(result, verification, summary))
}

fn f3_family(job: &JobSpec, fam: &Family) -> Result<Record> {
    let g = |k: &str| fam.int(k);
    let rep = f3_parametrization_check(g("p1")?, g("p2")?, g("r1")?, g("r2")?, g("p")?, g("q")?)?;
    let mut summary = vec![format!("accepted: {}", rep.pass), format!("form: {:?}", rep.form)];
    if rep.nonpositive_lower {
        summary.push("the lower parameter is a non-positive integer".into());
    }
    let result = json!({ "family": print_family(fam), "accepted": rep.pass, "report": rep });
    Ok(job.record(result, Verification::none(), summary))
}

fn factorization_job(job: &JobSpec, spec: &HyperSpec<SymPoly>) -> Result<Record> {
    let f = numeric(spec).ok_or_else(|| Error::Invalid("check-parametrization needs numeric parameters".into()))?;
    let (result, summary) = match factorization_conditions(&f.upper, &f.lower) {
        Ok(rep) => {
            let accepted = rep.parametrization.is_some();
            let summary = vec![
                format!("accepted: {accepted}"),
                format!("case: {}", rep.case),
                format!("beta = {}", fmt_rat(&rep.beta)),
                format!("parametrization: {}", rep.parametrization.clone().unwrap_or_else(|| "none".into())),
            ];
            (json!({ "function": f.to_string(), "accepted": accepted, "report": rep }), summary)
        }
        Err(Error::NoFactorization(why)) => {
            (json!({ "function": f.to_string(), "accepted": false, "reason": why }), vec!["accepted: false".into(), format!("reason: {why}")])
        }
        Err(e) => return Err(e),
    };
    Ok(job.record(result, Verification::none(), summary))
}

fn check_parametrization(job: &JobSpec) -> Result<Record> {
    match parse_input(&job.input)? {
        Input::Family(fam) => match fam.name.as_str() {
            "gauss" => gauss_family(job, &fam),
            "3f2" => three_f2_family(job, &fam),
            _ => f3_family(job, &fam),
        },
        Input::Hyper(spec) => factorization_job(job, &spec),
        _ => Err(Error::Parse {
            line: 1,
            column: 1,
            message: "expected a function or a parameter family".into(),
            expected: vec!["pFq[...]".into(), "gauss(...)".into(), "3f2(...)".into(), "f3(...)".into()],
        }),
    }
}

/// Highest eps degree in the stored numerators.
fn eps_degree(r: &ReductionResult) -> usize {
    std::iter::once(&r.s_poly)
        .chain(&r.r_polys)
        .chain(std::iter::once(&r.algebraic_tail))
        .flat_map(|f| f.num().coeffs().iter().map(|c| c.num().degree().unwrap_or(0)))
        .max()
        .unwrap_or(0)
}

fn reverify(rec: &Record, n: usize) -> Result<Verification> {
    let job = JobSpec::from_record(rec)?;
    match job.command {
        Command::Reduce => {
            let r = reduction_from_json(&rec.result)?;
            let k = job.order.max(eps_degree(&r)).min(MAX_ORDER);
            Ok(Verification::series(&verify_reduction(&r, n, k)?, n, k, "series oracle"))
        }
        Command::Expand => {
            let spec = parse_hyper_spec(&rec.input)?;
            let e = expansion_from_json(spec.clone(), &rec.result)?;
            verify_spec_expansion(&spec, &e, n)
        }
        Command::Verify => Err(Error::Invalid("verify records cannot be re-verified".into())),
        _ => {
            let fresh = run_job(&job)?;
            let ok = fresh.records.first().is_some_and(|f| f.result == rec.result);
            Ok(Verification::check(ok, "recomputed", (!ok).then(|| "stored result differs from a fresh computation".into())))
        }
    }
}

fn verify_file(job: &JobSpec) -> Result<Outcome> {
    let text = std::fs::read_to_string(&job.input).map_err(|e| Error::Io(format!("{}: {e}", job.input)))?;
    let recs = super::output::parse_records(&text)?;
    if recs.is_empty() {
        return Err(Error::Invalid(format!("{} contains no records", job.input)));
    }
    let out = recs
        .into_iter()
        .map(|mut r| {
            r.verification = reverify(&r, job.terms).unwrap_or_else(|e| Verification::check(false, "decode", Some(e.to_string())));
            r
        })
        .collect();
    Ok(Outcome::of(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::output::Status;

    #[test]
    fn count_masters_c3() {
        let j = JobSpec::new(Command::CountMasters, "@c3").bind("j1", "1").bind("j2", "1").bind("sigma", "1");
        let o = run_job(&j).unwrap();
        assert_eq!(o.records[0].result["L"], json!(2));
        assert!(o.render(Format::Text).contains("L=2"));
    }

    #[test]
    fn expand_symbolic_gauss() {
        let o = run_job(&JobSpec::new(Command::Expand, "2F1[a*eps,b*eps;1+c*eps;z]").order(2)).unwrap();
        let r = &o.records[0];
        assert_eq!(r.verification.status, Status::Pass);
        assert_eq!(r.result["orders"].as_array().unwrap().len(), 3);
        assert_eq!(o.exit_code, 0);
    }

    #[test]
    fn reduce_round_trip_and_corruption() {
        let j = JobSpec::new(Command::Reduce, "2F1[3/2+eps, 1/3; 7/4-eps; z]");
        let o = run_job(&j).unwrap();
        assert_eq!(o.records[0].verification.status, Status::Pass);
        assert_eq!(reverify(&o.records[0], 20).unwrap().status, Status::Pass);
        let mut bad = o.records[0].clone();
        let s = bad.result["exact"]["s"]["num"][1]["num"][0].as_str().unwrap().to_string();
        let v = crate::algebra::rat::decode_rat(&s).unwrap() + int(1);
        bad.result["exact"]["s"]["num"][1]["num"][0] = json!(crate::algebra::rat::encode_rat(&v));
        let check = reverify(&bad, 20).unwrap();
        assert_eq!(check.status, Status::Fail);
        assert_eq!(check.mismatch, Some((1, 0)));
    }

    #[test]
    fn default_basis_is_in_unit_interval() {
        let f = parse_hyper("2F1[5/2+eps, -1/3; 3; z]").unwrap();
        assert_eq!(default_basis(&f).unwrap().to_string(), "2F1[1/2+eps, 2/3; 1; z]");
    }

    #[test]
    fn exit_codes() {
        let code = |j: JobSpec| run_job(&j).map(|o| o.exit_code).unwrap_or_else(|e| exit_code(&e));
        assert_eq!(code(JobSpec::new(Command::Expand, "2F1[a; b; z]")), 2);
        assert_eq!(code(JobSpec::new(Command::Expand, "2F1[1/3+eps, eps; 1+eps; z]")), 3);
        assert_eq!(code(JobSpec::new(Command::Reduce, "2F1[1, 1/3; 2; z]").basis("2F1[1, 1/3; 1; z]")), 4);
        assert_eq!(code(JobSpec::new(Command::Expand, "2F1[eps, eps; 1; z]").order(9)), 1);
    }

    #[test]
    fn parametrization_rejections_are_results() {
        let o = run_job(&JobSpec::new(Command::CheckParametrization, "3f2(r=1, p=1, q=2)")).unwrap();
        assert_eq!((o.records[0].result["accepted"].clone(), o.exit_code), (json!(false), 0));
        let o = run_job(&JobSpec::new(Command::CheckParametrization, "3f2(r=1, p=-1, q=2)")).unwrap();
        assert_eq!(o.records[0].result["accepted"], json!(true));
        assert_eq!(o.records[0].verification.status, Status::Pass);
        let o = run_job(&JobSpec::new(Command::CheckParametrization, "gauss(p1=1, p2=1, r=-1, q=2)")).unwrap();
        assert_eq!(o.records[0].result["accepted"], json!(true));
        let o = run_job(&JobSpec::new(Command::CheckParametrization, "f3(p1=1, p2=0, r1=1, r2=0, p=0, q=2)")).unwrap();
        assert_eq!(o.records[0].result["accepted"], json!(false));
    }

    #[test]
    fn records_recompute() {
        let o = run_job(&JobSpec::new(Command::Mb, "@c1")).unwrap();
        assert_eq!(o.records[0].verification.status, Status::Pass);
        let back = super::super::output::parse_records(&o.render(Format::Jsonl)).unwrap();
        assert_eq!(reverify(&back[0], 10).unwrap().status, Status::Pass);
    }

    #[test]
    fn binding_args() {
        let a: Vec<String> = ["--j1", "1", "--n=4-2*eps", "--sigma", "1/2+eps"].iter().map(|s| s.to_string()).collect();
        let b = parse_binding_args(&a).unwrap();
        assert_eq!(b[1], ("n".to_string(), "4-2*eps".to_string()));
        assert!(parse_binding_args(&["j1".to_string()]).is_err());
        assert!(parse_binding_args(&["--j1".to_string()]).is_err());
    }

    #[test]
    fn deterministic_output() {
        let j = JobSpec::new(Command::Expand, "3F2[eps, 2*eps, -eps; 1+eps, 1-eps; z]").order(3);
        assert_eq!(run_job(&j).unwrap().render(Format::Jsonl), run_job(&j).unwrap().render(Format::Jsonl));
    }
}
