//! Runs every formula and invariant over the catalog and tallies the results.

use std::collections::BTreeMap;

use crate::catalog::{self, combinations, product_name};
use crate::error::{Error, Result};
use crate::graph::BeckGraph;
use crate::ring::{make_product, make_structure_ring, make_zmod, FiniteRing};
use crate::solvers::{best_clique_split, chromatic_number, max_clique, SolverConfig};
use crate::theorems::{
    check_an_condition, chi_bounds, counterexample_family, natural_an_type, nilradical_bound, omega_chi,
    omega_product_formula, product_coloring_n, reduced_theorem_check, zn_formula, SMode,
};

/// Product cores at or below this size get an exact chromatic solve.
pub const CHI_CORE_CAP: usize = 64;

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Skip instances whose ring has more elements than this.
    pub max_size: usize,
    /// Add a deliberately broken structure table; the suite must fail.
    pub inject_bad_ring: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_size: 256, inject_bad_ring: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: &'static str,
    pub instance: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    /// In the order checks were first run.
    pub tallies: Vec<(&'static str, Tally)>,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, check: &'static str, instance: impl Into<String>, outcome: Result<Option<String>>) {
        let idx = match self.tallies.iter().position(|(n, _)| *n == check) {
            Some(i) => i,
            None => {
                self.tallies.push((check, Tally::default()));
                self.tallies.len() - 1
            }
        };
        let detail = match outcome {
            Ok(None) => {
                self.tallies[idx].1.passed += 1;
                return;
            }
            Ok(Some(why)) => why,
            Err(e) => e.to_string(),
        };
        self.tallies[idx].1.failed += 1;
        self.failures.push(Failure { check, instance: instance.into(), detail });
    }
}

fn mismatch(what: &str, expected: impl std::fmt::Display, actual: impl std::fmt::Display) -> Option<String> {
    Some(format!("{what}: expected {expected}, got {actual}"))
}

fn structural(r: &FiniteRing, cfg: &SolverConfig) -> Result<Option<String>> {
    r.validate()?;
    let g = BeckGraph::build(r)?;
    let n = g.n_vertices();
    if n > 1 && g.graph().degree(0) != n - 1 {
        return Ok(Some("vertex 0 is not adjacent to every other vertex".into()));
    }
    for v in 1..n {
        if !r.is_zero_divisor(crate::ring::Elem(v)) && g.graph().degree(v) != 1 {
            return Ok(Some(format!("non-zero-divisor {} has degree {}", r.format_element(crate::ring::Elem(v)), g.graph().degree(v))));
        }
    }
    let (w, c) = omega_chi(r, cfg)?;
    if w > c {
        return Ok(mismatch("omega <= chi", c, w));
    }
    // Solve on the core regardless of size, then lift with max(., 2).
    let core = g.core();
    let on_core = SolverConfig { core_threshold: 0, ..cfg.clone() };
    let full = cfg.clone().without_core();
    let (wc, cc) = omega_chi(r, &on_core)?;
    let (wf, cf) = omega_chi(r, &full)?;
    if (wc, cc) != (wf, cf) {
        return Ok(Some(format!("core of {} vertices gives ({wc}, {cc}), full graph ({wf}, {cf})", core.n_vertices())));
    }
    Ok(None)
}

fn omega_instance(rings: &[FiniteRing], cfg: &SolverConfig) -> Result<Option<String>> {
    let p = omega_product_formula(rings, cfg)?;
    let direct = max_clique(&BeckGraph::build(&p.product)?, cfg)?.size();
    if p.predicted != direct || p.complement_form() != direct {
        return Ok(mismatch("predicted omega", direct, p.predicted));
    }
    Ok(None)
}

fn chi_instance(rings: &[FiniteRing], cfg: &SolverConfig) -> Result<Option<String>> {
    let product = make_product(rings)?;
    let g = BeckGraph::build(&product)?;
    let chi = chromatic_number(&g, cfg)?.0;
    for mode in [SMode::AnyOptimal, SMode::MinS] {
        let b = chi_bounds(rings, mode, cfg)?;
        if !(b.lower <= chi && chi <= b.upper) {
            return Ok(Some(format!("{mode:?}: chi {chi} outside [{}, {}]", b.lower, b.upper)));
        }
        let cols: Vec<_> = b.factors.iter().map(|f| f.coloring.clone()).collect();
        let built = product_coloring_n(rings, &cols)?;
        if !built.coloring.is_proper(g.graph()) {
            return Ok(Some(format!("{mode:?}: constructed colouring is improper")));
        }
        if built.coloring.k() != b.upper {
            return Ok(mismatch("constructed colouring size", b.upper, built.coloring.k()));
        }
    }
    Ok(None)
}

fn reduced_instance(rings: &[FiniteRing], cfg: &SolverConfig) -> Result<Option<String>> {
    let product = make_product(rings)?;
    let c = reduced_theorem_check(&product, cfg)?;
    let want = rings.len() + 1;
    if (c.omega, c.chi, c.field_factors) != (want, want, rings.len()) {
        return Ok(Some(format!(
            "expected omega = chi = {want} with {} fields, got omega {} chi {} fields {}",
            rings.len(),
            c.omega,
            c.chi,
            c.field_factors
        )));
    }
    let b = chi_bounds(rings, SMode::AnyOptimal, cfg)?;
    if (b.lower, b.upper) != (want, want) {
        return Ok(Some(format!("chi bounds ({}, {}) do not both equal {want}", b.lower, b.upper)));
    }
    Ok(None)
}

fn zn_instance(n: u64, with_chi: bool, cfg: &SolverConfig) -> Result<Option<String>> {
    let f = zn_formula(n)?.value as usize;
    let g = BeckGraph::build(&make_zmod(n)?)?;
    let w = max_clique(&g, cfg)?.size();
    if w != f {
        return Ok(mismatch("omega", f, w));
    }
    if with_chi {
        let c = chromatic_number(&g, cfg)?.0;
        if c != f {
            return Ok(mismatch("chi", f, c));
        }
    }
    Ok(None)
}

fn nil_instance(rings: &[FiniteRing], cfg: &SolverConfig) -> Result<Option<String>> {
    let b = nilradical_bound(rings, cfg)?;
    let Some(omega) = b.omega else {
        return Ok(None);
    };
    if b.bound > omega {
        return Ok(Some(format!("bound {} exceeds omega {omega}", b.bound)));
    }
    let mut all_hold = true;
    for r in rings {
        all_hold &= check_an_condition(r, natural_an_type(&r.nilradical()), cfg)?.holds;
    }
    if all_hold && b.bound != omega {
        return Ok(mismatch("bound under the condition", omega, b.bound));
    }
    Ok(None)
}

fn family_instance(factors: &[FiniteRing], cfg: &SolverConfig) -> Result<Option<String>> {
    let r = counterexample_family(factors, cfg)?;
    if r.gap() != Some(1) {
        return Ok(Some(format!("gap {:?} (omega {}, chi in [{}, {}])", r.gap(), r.omega, r.chi_lower, r.chi_upper)));
    }
    if !r.consistent() {
        return Ok(Some(format!("inconsistent report: {r:?}")));
    }
    Ok(None)
}

/// A commutative table over `(2, 2, 2)` that is not associative.
fn bad_structure_ring() -> Result<FiniteRing> {
    let rows: [((usize, usize), [u64; 3]); 6] = [
        ((0, 0), [1, 0, 0]),
        ((0, 1), [0, 1, 0]),
        ((0, 2), [0, 0, 1]),
        ((1, 1), [0, 0, 1]),
        ((1, 2), [0, 1, 0]),
        ((2, 2), [0, 0, 0]),
    ];
    let table: BTreeMap<(usize, usize), Vec<u64>> = rows.iter().map(|&(k, v)| (k, v.to_vec())).collect();
    make_structure_ring(&[2, 2, 2], &[1, 0, 0], &table)
}

fn fits(rings: &[FiniteRing], max: usize) -> bool {
    rings.iter().map(|r| r.size() as u128).product::<u128>() <= max as u128
}

fn core_size(rings: &[FiniteRing]) -> usize {
    let total: usize = rings.iter().map(FiniteRing::size).product();
    let units: usize = rings.iter().map(|r| r.units().len()).product();
    // In a finite ring the non-units are 0 and the zero-divisors.
    total - units
}

pub fn run_suite(opts: &SuiteOptions, cfg: &SolverConfig) -> Result<SuiteReport> {
    let cat = catalog::catalog()?;
    let fields = catalog::fields()?;
    let max = opts.max_size;
    let mut rep = SuiteReport::default();

    for r in cat.iter().filter(|r| r.size() <= max) {
        rep.record("structure", r.name(), structural(r, cfg));
    }
    if opts.inject_bad_ring {
        rep.record("structure", "injected (2,2,2) table", bad_structure_ring().map(|_| None));
    }

    for k in [2, 3] {
        for rings in combinations(&cat, k, max) {
            rep.record("omega-product", product_name(&rings), omega_instance(&rings, cfg));
        }
    }

    for rings in combinations(&cat, 2, max) {
        if core_size(&rings) <= CHI_CORE_CAP {
            rep.record("chi-sandwich", product_name(&rings), chi_instance(&rings, cfg));
        }
    }

    for k in 1..=3 {
        for rings in combinations(&fields, k, max) {
            rep.record("reduced-equality", product_name(&rings), reduced_instance(&rings, cfg));
        }
    }

    for n in 1..=100u64.min(max as u64) {
        rep.record("zn-formula", format!("Z{n}"), zn_instance(n, n <= 60, cfg));
    }

    for k in [1, 2] {
        for rings in combinations(&cat, k, max) {
            rep.record("nilradical-bound", product_name(&rings), nil_instance(&rings, cfg));
        }
    }

    let z2 = make_zmod(2)?;
    let z3 = make_zmod(3)?;
    let family: [Vec<FiniteRing>; 4] = [vec![], vec![z2.clone()], vec![z3], vec![z2.clone(), z2]];
    for factors in family {
        let mut all = vec![best_effort_an()?];
        all.extend(factors.iter().cloned());
        if fits(&all, max) {
            let name = product_name(&all);
            rep.record("counterexample-family", name, family_instance(&factors, cfg));
        }
    }

    // Clique splits must be maximum cliques.
    for r in cat.iter().filter(|r| r.size() <= max) {
        let outcome = (|| {
            let g = BeckGraph::build(r)?;
            let s = best_clique_split(&g, cfg)?;
            let w = max_clique(&g, cfg)?.size();
            Ok(if s.clique.size() != w { mismatch("split clique size", w, s.clique.size()) } else { None })
        })();
        rep.record("clique-split", r.name(), outcome);
    }
    Ok(rep)
}

fn best_effort_an() -> Result<FiniteRing> {
    crate::theorems::canonical_an_ring().map_err(|e| Error::Internal(format!("no canonical seed ring: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let rep = run_suite(&SuiteOptions { max_size: 16, inject_bad_ring: false }, &SolverConfig::default()).unwrap();
        assert!(rep.all_passed(), "{:?}", rep.failures);
        assert!(rep.tallies.iter().any(|(n, t)| *n == "zn-formula" && t.passed == 16));
    }

    #[test]
    fn injected_ring_fails() {
        let rep = run_suite(&SuiteOptions { max_size: 8, inject_bad_ring: true }, &SolverConfig::default()).unwrap();
        assert_eq!(rep.failures.len(), 1);
        assert!(rep.failures[0].detail.starts_with("not a ring: (ab)c"), "{}", rep.failures[0].detail);
    }
}
