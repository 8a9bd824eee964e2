//! Exact clique and chromatic numbers of Beck graphs, with certificates.
//!
//! All searches are single-threaded over a fixed vertex order, so identical
//! inputs give identical witnesses. Every returned clique and colouring is
//! re-verified against the graph before it leaves this module.

pub mod clique;
pub mod coloring;

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{BeckGraph, Graph};
use crate::ring::Elem;

pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

/// Wall-clock budget, polled every few thousand search nodes.
#[derive(Debug)]
pub struct Budget {
    deadline: Option<Instant>,
    ticks: u32,
    expired: bool,
}

impl Budget {
    pub fn new(limit: Duration) -> Budget {
        Budget { deadline: Instant::now().checked_add(limit), ticks: 0, expired: false }
    }

    pub fn unlimited() -> Budget {
        Budget { deadline: None, ticks: 0, expired: false }
    }

    /// Returns true once the deadline has passed.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.expired {
            return true;
        }
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                self.expired = Instant::now() >= d;
            }
        }
        self.expired
    }
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Per solver call.
    pub budget: Duration,
    /// Graphs with more vertices than this are solved on their zero-divisor core.
    pub core_threshold: usize,
    /// Largest (twin-reduced) core on which s-minimisation is exhaustive.
    pub exhaustive_s_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { budget: DEFAULT_BUDGET, core_threshold: 24, exhaustive_s_cap: 20 }
    }
}

impl SolverConfig {
    pub fn with_budget(budget: Duration) -> SolverConfig {
        SolverConfig { budget, ..SolverConfig::default() }
    }

    /// Never reduce to the core; used to cross-check the reduction.
    pub fn without_core(mut self) -> SolverConfig {
        self.core_threshold = usize::MAX;
        self
    }

    fn budget(&self) -> Budget {
        Budget::new(self.budget)
    }
}

/// A set of pairwise-adjacent vertices (ring elements), sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clique {
    pub vertices: Vec<Elem>,
}

impl Clique {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// A maximum clique split into square-zero members `b` and the rest `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSplit {
    pub clique: Clique,
    pub b: Vec<Elem>,
    pub c: Vec<Elem>,
}

/// Proper colouring: `class_of[v]` in `0..k`, every class non-empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    class_of: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Builds a colouring from class labels, renumbering classes by first
    /// occurrence so that every class in `0..k` is non-empty.
    pub fn from_labels(labels: &[usize]) -> Coloring {
        let mut map: Vec<Option<usize>> = vec![None; labels.iter().map(|&c| c + 1).max().unwrap_or(0)];
        let mut k = 0;
        let class_of = labels
            .iter()
            .map(|&c| {
                *map[c].get_or_insert_with(|| {
                    k += 1;
                    k - 1
                })
            })
            .collect();
        Coloring { class_of, k }
    }

    /// Uses `class_of` verbatim; fails if some class in `0..k` is empty.
    pub fn new(class_of: Vec<usize>) -> Result<Coloring> {
        let k = class_of.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut hit = vec![false; k];
        for &c in &class_of {
            hit[c] = true;
        }
        if let Some(empty) = hit.iter().position(|&h| !h) {
            return Err(Error::Contract(format!("colour class {empty} is empty")));
        }
        Ok(Coloring { class_of, k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c].push(Elem(v));
        }
        out
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        coloring::is_proper(g, &self.class_of)
    }
}

/// Number of colour classes containing a square-zero element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SZero(pub usize);

#[derive(Debug, Clone)]
pub struct MinSColoring {
    pub coloring: Coloring,
    pub s: SZero,
    /// False when the search exceeded the exhaustive cap and `s` is only an
    /// achieved value, not a proven minimum.
    pub exact: bool,
}

/// Which graph a solver actually works on.
struct Working {
    graph: Graph,
    to_full: Vec<usize>,
    square_zero: Vec<bool>,
    reduced: bool,
}

fn working(g: &BeckGraph, cfg: &SolverConfig) -> Working {
    if g.n_vertices() > cfg.core_threshold {
        let core = g.core();
        Working {
            graph: core.graph,
            to_full: core.to_ring.iter().map(|e| e.0).collect(),
            square_zero: core.square_zero,
            reduced: true,
        }
    } else {
        Working {
            graph: g.graph().clone(),
            to_full: (0..g.n_vertices()).collect(),
            square_zero: g.square_zero().to_vec(),
            reduced: false,
        }
    }
}

fn verified_clique(g: &BeckGraph, vertices: Vec<usize>) -> Result<Clique> {
    if !g.graph().is_clique(&vertices) {
        return Err(Error::Internal(format!("solver returned a non-clique {vertices:?}")));
    }
    Ok(Clique { vertices: vertices.into_iter().map(Elem).collect() })
}

/// Lifts a core clique to the full graph: if the core gives fewer than two
/// vertices, `{0, 1}` (zero and the smallest nonzero element) is maximum.
fn lift_clique(g: &BeckGraph, w: &Working, local: Vec<usize>) -> Vec<usize> {
    let mut vs: Vec<usize> = local.into_iter().map(|v| w.to_full[v]).collect();
    if w.reduced && vs.len() < 2 && g.n_vertices() >= 2 {
        vs = vec![0, 1];
    }
    vs.sort_unstable();
    vs
}

/// Exact maximum clique with witness.
pub fn max_clique(g: &BeckGraph, cfg: &SolverConfig) -> Result<Clique> {
    let w = working(g, cfg);
    let mut budget = cfg.budget();
    let local = clique::maximum_clique(&w.graph, &mut budget).map_err(|mut e| {
        if w.reduced && g.n_vertices() >= 2 {
            e.lower = e.lower.max(2);
        }
        Error::Budget(e)
    })?;
    verified_clique(g, lift_clique(g, &w, local))
}

/// Exact chromatic number with an optimal colouring.
pub fn chromatic_number(g: &BeckGraph, cfg: &SolverConfig) -> Result<(usize, Coloring)> {
    let w = working(g, cfg);
    let mut budget = cfg.budget();
    let (k_local, local) = coloring::exact_chromatic(&w.graph, &mut budget).map_err(|mut e| {
        if w.reduced && g.n_vertices() >= 2 {
            e.lower = e.lower.max(2);
            e.upper = e.upper.map(|u| u.max(2));
        }
        Error::Budget(e)
    })?;
    let labels = lift_colouring(g, &w, &local, k_local);
    let col = Coloring::new(labels).map_err(|e| Error::Internal(e.to_string()))?;
    if !col.is_proper(g.graph()) {
        return Err(Error::Internal("solver returned an improper colouring".into()));
    }
    Ok((col.k(), col))
}

/// Vertices outside the core are adjacent only to 0; they join the lowest
/// class not holding 0, or a new class if the core has only one.
fn lift_colouring(g: &BeckGraph, w: &Working, local: &[usize], k_local: usize) -> Vec<usize> {
    if !w.reduced {
        return local.to_vec();
    }
    let n = g.n_vertices();
    let mut labels = vec![usize::MAX; n];
    for (i, &v) in w.to_full.iter().enumerate() {
        labels[v] = local[i];
    }
    let zero_class = labels[0];
    let spare = (0..k_local).find(|&c| c != zero_class).unwrap_or(k_local);
    for l in labels.iter_mut() {
        if *l == usize::MAX {
            *l = spare;
        }
    }
    labels
}

/// Among all maximum cliques, one with the most square-zero members.
pub fn best_clique_split(g: &BeckGraph, cfg: &SolverConfig) -> Result<CliqueSplit> {
    let omega = max_clique(g, cfg)?.size();
    let w = working(g, cfg);
    let mut budget = cfg.budget();
    // If the core's clique number is 1 the search comes back empty and
    // the lift supplies {0, 1}.
    let local = clique::maximum_clique_max_weight(&w.graph, &w.square_zero, omega, &mut budget)
        .map_err(Error::Budget)?;
    let vertices = lift_clique(g, &w, local);
    let clique = verified_clique(g, vertices)?;
    if clique.size() != omega {
        return Err(Error::Internal(format!("split clique has size {} but omega is {omega}", clique.size())));
    }
    let sz = g.square_zero();
    let (b, c) = clique.vertices.iter().partition(|e| sz[e.0]);
    Ok(CliqueSplit { clique, b, c })
}

/// Number of colour classes holding a square-zero element.
pub fn s_of(g: &BeckGraph, c: &Coloring) -> Result<SZero> {
    if c.class_of().len() != g.n_vertices() {
        return Err(Error::Contract(format!(
            "colouring covers {} vertices, graph has {}",
            c.class_of().len(),
            g.n_vertices()
        )));
    }
    if !c.is_proper(g.graph()) {
        return Err(Error::Contract("colouring is not proper".into()));
    }
    let sz = g.square_zero();
    let mut hit = vec![false; c.k()];
    for (v, &cls) in c.class_of().iter().enumerate() {
        if sz[v] {
            hit[cls] = true;
        }
    }
    Ok(SZero(hit.iter().filter(|&&h| h).count()))
}

/// Optimal colouring minimising the number of square-zero-bearing classes.
pub fn min_s_optimal_coloring(g: &BeckGraph, cfg: &SolverConfig) -> Result<MinSColoring> {
    let (chi, any) = chromatic_number(g, cfg)?;
    let w = working(g, cfg);
    let k_local = if w.reduced { chromatic_of_working(&w, &any) } else { chi };
    let start: Vec<usize> = {
        let labels: Vec<usize> = w.to_full.iter().map(|&v| any.class_of()[v]).collect();
        Coloring::from_labels(&labels).class_of().to_vec()
    };
    let mut budget = cfg.budget();
    let res = coloring::min_s_colouring(&w.graph, &w.square_zero, k_local, &start, cfg.exhaustive_s_cap, &mut budget)
        .map_err(Error::Budget)?;
    let labels = lift_colouring(g, &w, &res.colours, k_local);
    let coloring = Coloring::new(labels).map_err(|e| Error::Internal(e.to_string()))?;
    if !coloring.is_proper(g.graph()) || coloring.k() != chi {
        return Err(Error::Internal("min-s search returned a non-optimal colouring".into()));
    }
    let s = s_of(g, &coloring)?;
    Ok(MinSColoring { coloring, s, exact: res.exact })
}

/// Number of classes an optimal full colouring uses on the working graph.
fn chromatic_of_working(w: &Working, full: &Coloring) -> usize {
    let mut classes: Vec<usize> = w.to_full.iter().map(|&v| full.class_of()[v]).collect();
    classes.sort_unstable();
    classes.dedup();
    classes.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_product, make_zmod};

    fn beck(n: u64) -> BeckGraph {
        BeckGraph::build(&make_zmod(n).unwrap()).unwrap()
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    fn idx(v: &[Elem]) -> Vec<usize> {
        v.iter().map(|e| e.0).collect()
    }

    #[test]
    fn clique_numbers() {
        let q = max_clique(&beck(12), &cfg()).unwrap();
        assert_eq!(q.size(), 3);
        assert_eq!(idx(&q.vertices)[0], 0);
        assert_eq!(max_clique(&beck(2), &cfg()).unwrap().vertices, vec![Elem(0), Elem(1)]);
        assert_eq!(max_clique(&beck(1), &cfg()).unwrap().size(), 1);
        // 29 > core threshold; Z29 is a field, core is {0}
        assert_eq!(idx(&max_clique(&beck(29), &cfg()).unwrap().vertices), vec![0, 1]);
    }

    #[test]
    fn chromatic_numbers() {
        let (k, c) = chromatic_number(&beck(4), &cfg()).unwrap();
        assert_eq!(k, 2);
        assert_eq!(c.classes().iter().map(|cl| idx(cl)).collect::<Vec<_>>(), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(chromatic_number(&beck(36), &cfg()).unwrap().0, 6);
        assert_eq!(chromatic_number(&beck(31), &cfg()).unwrap().0, 2);
        assert_eq!(chromatic_number(&beck(1), &cfg()).unwrap().0, 1);
    }

    #[test]
    fn splits() {
        let s = best_clique_split(&beck(2), &cfg()).unwrap();
        assert_eq!((idx(&s.b), idx(&s.c)), (vec![0], vec![1]));
        let s = best_clique_split(&beck(4), &cfg()).unwrap();
        assert_eq!((idx(&s.b), idx(&s.c)), (vec![0, 2], vec![]));
        let s = best_clique_split(&beck(8), &cfg()).unwrap();
        assert_eq!((s.b.len(), s.c.len()), (2, 1));
    }

    #[test]
    fn s_statistic() {
        let z2 = beck(2);
        assert_eq!(s_of(&z2, &Coloring::new(vec![0, 1]).unwrap()).unwrap(), SZero(1));
        let z4 = beck(4);
        assert_eq!(s_of(&z4, &Coloring::new(vec![0, 1, 1, 1]).unwrap()).unwrap(), SZero(2));
        let z8 = beck(8);
        // {0},{4},{1,2,3,5,6,7}
        let c = Coloring::new(vec![0, 2, 2, 2, 1, 2, 2, 2]).unwrap();
        assert_eq!(s_of(&z8, &c).unwrap(), SZero(2));
        let bad = Coloring::new(vec![0, 0, 1, 1]).unwrap();
        assert!(matches!(s_of(&z4, &bad), Err(Error::Contract(_))));
    }

    #[test]
    fn min_s() {
        let r = min_s_optimal_coloring(&beck(4), &cfg()).unwrap();
        assert_eq!((r.s, r.exact), (SZero(2), true));
        let r = min_s_optimal_coloring(&beck(9), &cfg()).unwrap();
        assert_eq!((r.coloring.k(), r.s), (3, SZero(3)));
        for n in [2u64, 3, 5, 6, 30] {
            assert_eq!(min_s_optimal_coloring(&beck(n), &cfg()).unwrap().s, SZero(1), "Z{n}");
        }
    }

    #[test]
    fn from_labels_compacts() {
        let c = Coloring::from_labels(&[5, 2, 5, 9]);
        assert_eq!(c.class_of(), &[0, 1, 0, 2]);
        assert_eq!(c.k(), 3);
        assert!(Coloring::new(vec![0, 2]).is_err());
    }

    #[test]
    fn product_core_reduction_consistent() {
        let z2 = make_zmod(2).unwrap();
        let z3 = make_zmod(3).unwrap();
        let r = make_product(&[z2.clone(), z2, z3]).unwrap();
        let g = BeckGraph::build(&r).unwrap();
        let full = SolverConfig::default().without_core();
        assert_eq!(max_clique(&g, &cfg()).unwrap().size(), max_clique(&g, &full).unwrap().size());
        assert_eq!(chromatic_number(&g, &cfg()).unwrap().0, 4);
    }

    #[test]
    fn budget_exhaustion_reports_bounds() {
        let g = beck(36);
        let zero = SolverConfig::with_budget(Duration::ZERO);
        match chromatic_number(&g, &zero) {
            Ok((k, _)) => assert_eq!(k, 6),
            Err(Error::Budget(b)) => {
                assert!(b.lower <= 6);
                assert!(b.upper.is_none_or(|u| u >= 6));
            }
            Err(e) => panic!("unexpected {e}"),
        }
    }
}
