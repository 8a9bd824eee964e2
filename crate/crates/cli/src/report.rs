//! The `analyze` report. Witnesses are re-checked against the graph before a
//! report is returned.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use beckring_core::ring::{Elem, FiniteRing, RingKind};
use beckring_core::solvers::{best_clique_split, chromatic_number, max_clique, min_s_optimal_coloring, s_of, SolverConfig};
use beckring_core::theorems::{
    check_an_condition, chi_bounds, natural_an_type, nilradical_bound, omega_product_formula, zn_formula, SMode,
};
use beckring_core::{BeckGraph, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub ring: String,
    pub size: usize,
    pub local: bool,
    pub reduced: bool,
    pub units: usize,
    pub zero_divisors: usize,
    pub nilradical: Nilradical,
    pub omega: Omega,
    pub chi: Chi,
    pub split: Split,
    pub s: usize,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Nilradical {
    pub size: usize,
    pub index: usize,
    pub power_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Omega {
    pub value: usize,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chi {
    pub value: usize,
    pub classes: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    #[serde(rename = "B")]
    pub b: Vec<String>,
    #[serde(rename = "C")]
    pub c: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, expected: impl ToString, actual: impl ToString, pass: bool) -> Check {
        Check { name: name.to_string(), expected: expected.to_string(), actual: actual.to_string(), pass }
    }

    pub fn equal(name: &str, expected: usize, actual: usize) -> Check {
        Check::new(name, expected, actual, expected == actual)
    }
}

fn show(r: &FiniteRing, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&e| r.format_element(e)).collect()
}

pub fn analyze(r: &FiniteRing, mode: SMode, cfg: &SolverConfig) -> Result<AnalysisReport> {
    let g = BeckGraph::build(r)?;
    let clique = max_clique(&g, cfg)?;
    let split = best_clique_split(&g, cfg)?;
    let (coloring, s) = match mode {
        SMode::AnyOptimal => {
            let (_, c) = chromatic_number(&g, cfg)?;
            let s = s_of(&g, &c)?.0;
            (c, s)
        }
        SMode::MinS => {
            let m = min_s_optimal_coloring(&g, cfg)?;
            (m.coloring, m.s.0)
        }
    };
    let ids = |xs: &[Elem]| xs.iter().map(|e| e.0).collect::<Vec<_>>();
    if !g.graph().is_clique(&ids(&clique.vertices)) || !g.graph().is_clique(&ids(&split.clique.vertices)) {
        return Err(Error::Internal("clique witness failed re-verification".into()));
    }
    if !coloring.is_proper(g.graph()) {
        return Err(Error::Internal("colouring witness failed re-verification".into()));
    }
    let omega = clique.size();
    let chi = coloring.k();
    let nil = r.nilradical();

    let mut checks = vec![Check::new("omega <= chi", format!("<= {chi}"), omega, omega <= chi)];
    if let Some(n) = r.modulus() {
        let f = zn_formula(n as u64)?.value as usize;
        checks.push(Check::equal("Z_N closed form (omega)", f, omega));
        checks.push(Check::equal("Z_N closed form (chi)", f, chi));
    }
    if r.size() >= 2 && r.is_reduced() {
        let fields = r.field_factor_count()?;
        checks.push(Check::equal("reduced ring omega = fields + 1", fields + 1, omega));
        checks.push(Check::equal("reduced ring chi = fields + 1", fields + 1, chi));
    }
    let factors: Vec<FiniteRing> = match (r.kind(), r.factors()) {
        (RingKind::Product, Some(fs)) => fs.to_vec(),
        _ => vec![r.clone()],
    };
    if factors.len() >= 2 {
        let p = omega_product_formula(&factors, cfg)?;
        checks.push(Check::equal("product clique formula", p.predicted, omega));
        let b = chi_bounds(&factors, mode, cfg)?;
        checks.push(Check::new(
            "chi sandwich",
            format!("[{}, {}]", b.lower, b.upper),
            chi,
            b.lower <= chi && chi <= b.upper,
        ));
    }
    // The zero ring has no meaningful nilradical bound.
    if r.size() >= 2 {
        let nb = nilradical_bound(&factors, cfg)?;
        checks.push(Check::new("nilradical bound", format!("<= {omega}"), nb.bound, nb.bound <= omega));
        let mut condition = true;
        for f in &factors {
            condition &= check_an_condition(f, natural_an_type(&f.nilradical()), cfg)?.holds;
        }
        if condition {
            checks.push(Check::equal("nilradical bound equality", nb.bound, omega));
        }
    }

    Ok(AnalysisReport {
        ring: r.name().to_string(),
        size: r.size(),
        local: r.is_local(),
        reduced: r.is_reduced(),
        units: r.units().len(),
        zero_divisors: r.zero_divisors().len(),
        nilradical: Nilradical {
            size: nil.ideal.size(),
            index: nil.index_of_nilpotency,
            power_sizes: nil.power_sizes.clone(),
        },
        omega: Omega { value: omega, witness: show(r, &clique.vertices) },
        chi: Chi { value: chi, classes: coloring.classes().iter().map(|c| show(r, c)).collect() },
        split: Split { b: show(r, &split.b), c: show(r, &split.c) },
        s,
        checks,
    })
}

fn set(xs: &[String]) -> String {
    format!("{{{}}}", xs.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_checks(out: &mut String, checks: &[Check]) {
    for c in checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        writeln!(out, "  {verdict} {}: expected {}, actual {}", c.name, c.expected, c.actual).unwrap();
    }
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "ring           {}", self.ring).unwrap();
        writeln!(w, "size           {}", self.size).unwrap();
        writeln!(w, "local          {}", yes(self.local)).unwrap();
        writeln!(w, "reduced        {}", yes(self.reduced)).unwrap();
        writeln!(w, "units          {}", self.units).unwrap();
        writeln!(w, "zero-divisors  {}", self.zero_divisors).unwrap();
        let n = &self.nilradical;
        writeln!(w, "nilradical     size {}, index {}, powers {:?}", n.size, n.index, n.power_sizes).unwrap();
        writeln!(w, "omega          {}  {}", self.omega.value, set(&self.omega.witness)).unwrap();
        writeln!(w, "chi            {}", self.chi.value).unwrap();
        for (i, c) in self.chi.classes.iter().enumerate() {
            writeln!(w, "  class {i}: {}", set(c)).unwrap();
        }
        writeln!(w, "split          B = {}  C = {}", set(&self.split.b), set(&self.split.c)).unwrap();
        writeln!(w, "s              {}", self.s).unwrap();
        writeln!(w, "checks").unwrap();
        render_checks(w, &self.checks);
        out
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}
