use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use beckring_core::dsl;
use beckring_core::graph::{BeckGraph, ExportFormat};
use beckring_core::ring::{make_product_with_cap, FiniteRing, DEFAULT_SIZE_CAP};
use beckring_core::solvers::{chromatic_number, max_clique, SolverConfig, DEFAULT_BUDGET};
use beckring_core::suite::{run_suite, SuiteOptions};
use beckring_core::theorems::{chi_bounds, counterexample_family, omega_product_formula, product_coloring_n, zn_formula, SMode};
use beckring_core::Error;

use crate::args::{Command, FormatArg, GlobalOpts, SModeArg};
use crate::exit::{CliError, OK, VERIFY};
use crate::report::analyze;

/// What a command produced: text or JSON for stdout, and the exit code.
pub struct Output {
    pub text: String,
    pub code: u8,
}

struct Ctx {
    json: bool,
    cfg: SolverConfig,
    mode: SMode,
    max_size: Option<usize>,
}

impl Ctx {
    fn from(g: &GlobalOpts) -> Result<Ctx, CliError> {
        let budget = match g.budget {
            None => DEFAULT_BUDGET,
            Some(s) if s.is_finite() && s >= 0.0 => Duration::from_secs_f64(s),
            Some(s) => return Err(CliError::Usage(format!("budget must be a non-negative number of seconds, got {s}"))),
        };
        let mode = match g.s_mode {
            SModeArg::Any => SMode::AnyOptimal,
            SModeArg::Min => SMode::MinS,
        };
        Ok(Ctx { json: g.json, cfg: SolverConfig::with_budget(budget), mode, max_size: g.max_size })
    }

    fn cap(&self) -> usize {
        self.max_size.unwrap_or(DEFAULT_SIZE_CAP)
    }

    /// Factors of `expr` and their product, refusing anything above the cap.
    fn rings(&self, expr: &str) -> Result<(Vec<FiniteRing>, FiniteRing), CliError> {
        let parsed = dsl::parse(expr)?;
        let factors = dsl::elaborate_factors(&parsed)?;
        let cap = self.cap();
        let size: u128 = factors.iter().map(|f| f.size() as u128).product();
        if size > cap as u128 {
            return Err(Error::Capacity { size, cap }.into());
        }
        let ring = match factors.as_slice() {
            [one] => one.clone(),
            _ => make_product_with_cap(&factors, cap)?,
        };
        Ok((factors, ring))
    }

    fn emit<T: Serialize>(&self, value: &T, text: String, pass: bool) -> Output {
        let text = if self.json {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
            s.push('\n');
            s
        } else {
            text
        };
        Output { text, code: if pass { OK } else { VERIFY } }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn run(cmd: &Command, global: &GlobalOpts) -> Result<Output, CliError> {
    let ctx = Ctx::from(global)?;
    match cmd {
        Command::Analyze { expr } => {
            let (_, ring) = ctx.rings(expr)?;
            let rep = analyze(&ring, ctx.mode, &ctx.cfg)?;
            Ok(ctx.emit(&rep, rep.to_text(), rep.all_pass()))
        }
        Command::PredictOmega { expr } => predict_omega(&ctx, expr),
        Command::BoundChi { expr } => bound_chi(&ctx, expr),
        Command::Zn { n } => zn(&ctx, *n),
        Command::Counterexample { factors } => counterexample(&ctx, factors),
        Command::Export { expr, format, output } => {
            let (_, ring) = ctx.rings(expr)?;
            let fmt = match format {
                FormatArg::Dimacs => ExportFormat::Dimacs,
                FormatArg::Json => ExportFormat::Json,
            };
            let data = BeckGraph::build_with_cap(&ring, ctx.cap())?.export(fmt);
            match output {
                Some(path) => {
                    std::fs::write(path, data)?;
                    Ok(Output { text: String::new(), code: OK })
                }
                None => Ok(Output { text: data, code: OK }),
            }
        }
        Command::VerifySuite { inject_bad_ring } => verify_suite(&ctx, *inject_bad_ring),
    }
}

#[derive(Serialize)]
struct FactorOmega {
    ring: String,
    omega: usize,
    #[serde(rename = "B")]
    b: usize,
    #[serde(rename = "C")]
    c: usize,
}

#[derive(Serialize)]
struct OmegaReport {
    ring: String,
    factors: Vec<FactorOmega>,
    predicted: usize,
    witness: Vec<String>,
    direct: usize,
    pass: bool,
}

fn need_product(factors: &[FiniteRing], what: &str) -> Result<(), CliError> {
    if factors.len() < 2 {
        return Err(CliError::Usage(format!("{what} needs a product of at least two factors, e.g. \"Z4 x Z4\"")));
    }
    Ok(())
}

fn predict_omega(ctx: &Ctx, expr: &str) -> Result<Output, CliError> {
    let (factors, ring) = ctx.rings(expr)?;
    need_product(&factors, "predict-omega")?;
    let p = omega_product_formula(&factors, &ctx.cfg)?;
    let direct = max_clique(&BeckGraph::build_with_cap(&ring, ctx.cap())?, &ctx.cfg)?.size();
    let pass = direct == p.predicted;
    let rep = OmegaReport {
        ring: ring.name().to_string(),
        factors: factors
            .iter()
            .zip(&p.factors)
            .map(|(r, f)| FactorOmega { ring: r.name().to_string(), omega: f.omega, b: f.b, c: f.c })
            .collect(),
        predicted: p.predicted,
        witness: p.witness.iter().map(|&e| ring.format_element(e)).collect(),
        direct,
        pass,
    };
    let mut t = String::new();
    for f in &rep.factors {
        writeln!(t, "{:<14} omega {}  |B| {}  |C| {}", f.ring, f.omega, f.b, f.c).unwrap();
    }
    writeln!(t, "predicted      {}", rep.predicted).unwrap();
    writeln!(t, "witness        {{{}}}", rep.witness.join(", ")).unwrap();
    writeln!(t, "direct         {}", rep.direct).unwrap();
    writeln!(t, "{}", verdict(pass)).unwrap();
    Ok(ctx.emit(&rep, t, pass))
}

#[derive(Serialize)]
struct FactorChi {
    ring: String,
    chi: usize,
    s: usize,
    s_proven_min: bool,
}

#[derive(Serialize)]
struct ChiReport {
    ring: String,
    s_mode: &'static str,
    factors: Vec<FactorChi>,
    lower: usize,
    upper: usize,
    constructed: usize,
    chi: usize,
    pass: bool,
}

fn bound_chi(ctx: &Ctx, expr: &str) -> Result<Output, CliError> {
    let (factors, ring) = ctx.rings(expr)?;
    need_product(&factors, "bound-chi")?;
    let b = chi_bounds(&factors, ctx.mode, &ctx.cfg)?;
    let cols: Vec<_> = b.factors.iter().map(|f| f.coloring.clone()).collect();
    let built = product_coloring_n(&factors, &cols)?;
    let g = BeckGraph::build_with_cap(&ring, ctx.cap())?;
    let (chi, _) = chromatic_number(&g, &ctx.cfg)?;
    let constructed = built.coloring.k();
    let pass = b.lower <= chi && chi <= b.upper && constructed == b.upper && built.coloring.is_proper(g.graph());
    let rep = ChiReport {
        ring: ring.name().to_string(),
        s_mode: match ctx.mode {
            SMode::AnyOptimal => "any",
            SMode::MinS => "min",
        },
        factors: factors
            .iter()
            .zip(&b.factors)
            .map(|(r, f)| FactorChi { ring: r.name().to_string(), chi: f.chi, s: f.s, s_proven_min: f.s_proven_min })
            .collect(),
        lower: b.lower,
        upper: b.upper,
        constructed,
        chi,
        pass,
    };
    let mut t = String::new();
    for f in &rep.factors {
        let note = if f.s_proven_min { " (minimal)" } else { "" };
        writeln!(t, "{:<14} chi {}  s {}{note}", f.ring, f.chi, f.s).unwrap();
    }
    writeln!(t, "bounds         {} <= chi <= {}", rep.lower, rep.upper).unwrap();
    writeln!(t, "constructed    {} colours", rep.constructed).unwrap();
    writeln!(t, "exact chi      {}", rep.chi).unwrap();
    writeln!(t, "{}", verdict(pass)).unwrap();
    Ok(ctx.emit(&rep, t, pass))
}

#[derive(Serialize)]
struct ZnReport {
    n: u64,
    factorization: Vec<(u64, u32)>,
    formula: u64,
    omega: Option<usize>,
    chi: Option<usize>,
    pass: bool,
}

fn zn(ctx: &Ctx, n: u64) -> Result<Output, CliError> {
    let f = zn_formula(n)?;
    // The closed form needs no ring; the solvers only run within the cap.
    let (omega, chi) = if n as u128 <= ctx.cap() as u128 {
        let ring = beckring_core::ring::make_zmod(n)?;
        let g = BeckGraph::build_with_cap(&ring, ctx.cap())?;
        (Some(max_clique(&g, &ctx.cfg)?.size()), Some(chromatic_number(&g, &ctx.cfg)?.0))
    } else {
        (None, None)
    };
    let want = f.value as usize;
    let pass = omega.is_none_or(|w| w == want) && chi.is_none_or(|c| c == want);
    let rep = ZnReport { n, factorization: f.factorization.clone(), formula: f.value, omega, chi, pass };
    let factors: Vec<String> = f
        .factorization
        .iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect();
    let mut t = String::new();
    writeln!(t, "N              {n} = {}", if factors.is_empty() { "1".to_string() } else { factors.join(" * ") }).unwrap();
    writeln!(t, "formula        {}", f.value).unwrap();
    let shown = |v: Option<usize>| v.map_or_else(|| "not run (above --max-size)".to_string(), |v| v.to_string());
    writeln!(t, "solver omega   {}", shown(omega)).unwrap();
    writeln!(t, "solver chi     {}", shown(chi)).unwrap();
    writeln!(t, "{}", verdict(pass)).unwrap();
    Ok(ctx.emit(&rep, t, pass))
}

#[derive(Serialize)]
struct FamilyJson {
    ring: String,
    omega: usize,
    chi: Option<usize>,
    gap: Option<isize>,
    chi_lower: usize,
    coloring_size: usize,
    direct_omega: Option<usize>,
    direct_chi: Option<usize>,
    pass: bool,
}

fn counterexample(ctx: &Ctx, exprs: &[String]) -> Result<Output, CliError> {
    let mut factors = Vec::new();
    for e in exprs {
        factors.extend(dsl::elaborate_factors(&dsl::parse(e)?)?);
    }
    let r = counterexample_family(&factors, &ctx.cfg)?;
    let pass = r.gap() == Some(1) && r.consistent();
    let rep = FamilyJson {
        ring: r.product.name().to_string(),
        omega: r.omega,
        chi: r.chi(),
        gap: r.gap(),
        chi_lower: r.chi_lower,
        coloring_size: r.chi_upper,
        direct_omega: r.direct_omega,
        direct_chi: r.direct_chi,
        pass,
    };
    let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    let mut t = String::new();
    writeln!(t, "ring           {}", rep.ring).unwrap();
    writeln!(t, "omega          {}", rep.omega).unwrap();
    writeln!(t, "chi            {}  (lower bound {}, constructed colouring {})", opt(rep.chi), rep.chi_lower, rep.coloring_size)
        .unwrap();
    writeln!(t, "gap            {}", rep.gap.map_or_else(|| "-".to_string(), |g| g.to_string())).unwrap();
    writeln!(t, "direct         omega {}, chi {}", opt(rep.direct_omega), opt(rep.direct_chi)).unwrap();
    writeln!(t, "{}", verdict(pass)).unwrap();
    Ok(ctx.emit(&rep, t, pass))
}

#[derive(Serialize)]
struct SuiteTally {
    name: &'static str,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct SuiteFailure<'a> {
    check: &'a str,
    instance: &'a str,
    detail: &'a str,
}

#[derive(Serialize)]
struct SuiteJson<'a> {
    checks: Vec<SuiteTally>,
    failures: Vec<SuiteFailure<'a>>,
    pass: bool,
}

fn verify_suite(ctx: &Ctx, inject_bad_ring: bool) -> Result<Output, CliError> {
    let opts = SuiteOptions { max_size: ctx.max_size.unwrap_or(SuiteOptions::default().max_size), inject_bad_ring };
    let rep = run_suite(&opts, &ctx.cfg)?;
    let pass = rep.all_passed();
    let json = SuiteJson {
        checks: rep.tallies.iter().map(|(n, t)| SuiteTally { name: n, passed: t.passed, failed: t.failed }).collect(),
        failures: rep
            .failures
            .iter()
            .map(|f| SuiteFailure { check: f.check, instance: &f.instance, detail: &f.detail })
            .collect(),
        pass,
    };
    let mut t = String::new();
    for c in &json.checks {
        let total = c.passed + c.failed;
        writeln!(t, "{} {:<22} {}/{total}", verdict(c.failed == 0), c.name, c.passed).unwrap();
    }
    for f in &rep.failures {
        writeln!(t, "FAIL {} [{}]: {}", f.check, f.instance, f.detail).unwrap();
    }
    writeln!(t, "{}", if pass { "all checks passed" } else { "verification failed" }).unwrap();
    Ok(ctx.emit(&json, t, pass))
}
