//! DSATUR, exact k-colourability by backtracking, and the search for an
//! optimal colouring with the fewest square-zero-bearing classes.

use std::collections::HashMap;

use super::{clique, Budget};
use crate::error::BudgetExceeded;
use crate::graph::Graph;

/// Vertices with identical open neighbourhoods (and identical `key`) are
/// merged into one representative. Such twins are never adjacent, and any
/// colouring can move one twin into the other's class without breaking
/// properness, so the reduced graph has the same chromatic number.
pub(crate) struct TwinReduction {
    pub graph: Graph,
    /// representative id -> original vertices
    pub members: Vec<Vec<usize>>,
}

impl TwinReduction {
    pub fn new(g: &Graph, key: &[bool]) -> TwinReduction {
        let mut index: HashMap<(&crate::graph::BitSet, bool), usize> = HashMap::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for v in 0..g.n() {
            let k = (g.neighbors(v), key.get(v).copied().unwrap_or(false));
            match index.get(&k) {
                Some(&r) => members[r].push(v),
                None => {
                    index.insert(k, members.len());
                    members.push(vec![v]);
                }
            }
        }
        let reps: Vec<usize> = members.iter().map(|m| m[0]).collect();
        TwinReduction { graph: g.induced(&reps), members }
    }

    pub fn expand(&self, reduced_colours: &[usize], n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (r, ms) in self.members.iter().enumerate() {
            for &v in ms {
                out[v] = reduced_colours[r];
            }
        }
        out
    }
}

/// Greedy DSATUR colouring. Ties: larger degree, then smaller id.
pub fn dsatur(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == usize::MAX)
            .max_by_key(|&v| (sat[v], degree[v], std::cmp::Reverse(v)))
            .expect("an uncoloured vertex remains");
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).expect("unbounded");
        colour[v] = c;
        for u in g.neighbors(v).iter() {
            let s = &mut seen[u];
            if s.len() <= c {
                s.resize(c + 1, false);
            }
            if !s[c] {
                s[c] = true;
                sat[u] += 1;
            }
        }
    }
    colour
}

pub fn colour_count(colours: &[usize]) -> usize {
    colours.iter().map(|&c| c + 1).max().unwrap_or(0)
}

pub fn is_proper(g: &Graph, colours: &[usize]) -> bool {
    colours.len() == g.n() && g.edges().iter().all(|&(u, v)| colours[u] != colours[v])
}

/// Backtracking k-colouring state with per-vertex neighbour colour counts.
struct KColour<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    /// `nbr[v * k + c]` = neighbours of v coloured c
    nbr: Vec<u32>,
    sat: Vec<usize>,
    degree: Vec<usize>,
    used: usize,
    budget: &'a mut Budget,
    out_of_time: bool,
}

const NONE: usize = usize::MAX;

impl<'a> KColour<'a> {
    fn new(g: &'a Graph, k: usize, budget: &'a mut Budget) -> KColour<'a> {
        let n = g.n();
        KColour {
            g,
            k,
            colour: vec![NONE; n],
            nbr: vec![0; n * k],
            sat: vec![0; n],
            degree: (0..n).map(|v| g.degree(v)).collect(),
            used: 0,
            budget,
            out_of_time: false,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        for u in self.g.neighbors(v).iter() {
            let slot = &mut self.nbr[u * self.k + c];
            if *slot == 0 {
                self.sat[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = NONE;
        for u in self.g.neighbors(v).iter() {
            let slot = &mut self.nbr[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colour[v] == NONE)
            .max_by_key(|&v| (self.sat[v], self.degree[v], std::cmp::Reverse(v)))
    }

    fn solve(&mut self) -> bool {
        if self.budget.tick() {
            self.out_of_time = true;
            return false;
        }
        let Some(v) = self.pick() else { return true };
        if self.sat[v] >= self.k {
            return false;
        }
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.nbr[v * self.k + c] != 0 {
                continue;
            }
            let fresh = c == self.used;
            if fresh {
                self.used += 1;
            }
            self.assign(v, c);
            if self.solve() {
                return true;
            }
            self.unassign(v);
            if fresh {
                self.used -= 1;
            }
            if self.out_of_time {
                return false;
            }
        }
        false
    }
}

/// Decides k-colourability with `precolour` (a clique) fixed to colours
/// `0..precolour.len()`.
fn k_colouring(g: &Graph, k: usize, precolour: &[usize], budget: &mut Budget) -> Result<Option<Vec<usize>>, ()> {
    if precolour.len() > k {
        return Ok(None);
    }
    let mut st = KColour::new(g, k, budget);
    for (c, &v) in precolour.iter().enumerate() {
        st.assign(v, c);
    }
    st.used = precolour.len();
    let found = st.solve();
    if st.out_of_time {
        return Err(());
    }
    Ok(found.then_some(st.colour))
}

/// Exact chromatic number and an optimal colouring.
pub fn exact_chromatic(g: &Graph, budget: &mut Budget) -> Result<(usize, Vec<usize>), BudgetExceeded> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let red = TwinReduction::new(g, &[]);
    let h = &red.graph;
    let mut best = dsatur(h);
    let ub = colour_count(&best);
    let q = clique::maximum_clique(h, budget).map_err(|e| BudgetExceeded {
        what: "chromatic_number",
        lower: e.lower.max(1),
        upper: Some(ub),
    })?;
    let mut lb = q.len();
    let mut chi = ub;
    while lb < chi {
        match k_colouring(h, lb, &q, budget) {
            Ok(Some(c)) => {
                best = c;
                chi = lb;
            }
            Ok(None) => lb += 1,
            Err(()) => return Err(BudgetExceeded { what: "chromatic_number", lower: lb, upper: Some(chi) }),
        }
    }
    Ok((chi, red.expand(&best, n)))
}

/// Result of the fewest-square-zero-classes search.
pub struct MinS {
    pub colours: Vec<usize>,
    pub s: usize,
    pub exact: bool,
}

fn s_count(colours: &[usize], flagged: &[bool]) -> usize {
    let mut classes: Vec<usize> = colours.iter().zip(flagged).filter(|(_, &f)| f).map(|(&c, _)| c).collect();
    classes.sort_unstable();
    classes.dedup();
    classes.len()
}

/// Among proper colourings with exactly `k = chi(g)` colours, finds one
/// minimising the number of classes that contain a flagged vertex. Exact when
/// the twin-reduced graph has at most `exhaustive_cap` vertices; otherwise a
/// local improvement of `start` is returned with `exact = false`.
pub fn min_s_colouring(
    g: &Graph,
    flagged: &[bool],
    k: usize,
    start: &[usize],
    exhaustive_cap: usize,
    budget: &mut Budget,
) -> Result<MinS, BudgetExceeded> {
    let n = g.n();
    let red = TwinReduction::new(g, flagged);
    let h = &red.graph;
    let hflag: Vec<bool> = red.members.iter().map(|m| flagged[m[0]]).collect();
    if h.n() > exhaustive_cap {
        let colours = improve_s(g, flagged, start.to_vec());
        let s = s_count(&colours, flagged);
        return Ok(MinS { colours, s, exact: false });
    }

    // Flagged vertices first (they alone determine s), then the rest; each
    // group by degree descending.
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (!hflag[v], std::cmp::Reverse(h.degree(v)), v));
    let n_flagged = hflag.iter().filter(|&&f| f).count();
    let flagged_graph = h.induced(&order[..n_flagged]);
    let s_floor = clique::maximum_clique(&flagged_graph, budget)
        .map_err(|e| BudgetExceeded { what: "min_s_optimal_coloring", lower: e.lower, upper: None })?
        .len()
        .max(1);

    let mut search = MinSSearch {
        h,
        k,
        order: &order,
        n_flagged,
        colour: vec![NONE; h.n()],
        class_flagged: vec![0; k],
        best: None,
        best_s: usize::MAX,
        s_floor,
        budget,
        out_of_time: false,
    };
    search.flagged_phase(0, 0, 0);
    if search.out_of_time {
        return Err(BudgetExceeded {
            what: "min_s_optimal_coloring",
            lower: s_floor,
            upper: search.best.as_ref().map(|_| search.best_s),
        });
    }
    let best = search.best.ok_or(BudgetExceeded { what: "min_s_optimal_coloring", lower: 0, upper: None })?;
    let colours = red.expand(&best, n);
    let s = s_count(&colours, flagged);
    Ok(MinS { colours, s, exact: true })
}

struct MinSSearch<'a> {
    h: &'a Graph,
    k: usize,
    order: &'a [usize],
    n_flagged: usize,
    colour: Vec<usize>,
    class_flagged: Vec<usize>,
    best: Option<Vec<usize>>,
    best_s: usize,
    s_floor: usize,
    budget: &'a mut Budget,
    out_of_time: bool,
}

impl MinSSearch<'_> {
    fn feasible(&self, v: usize, c: usize) -> bool {
        self.h.neighbors(v).iter().all(|u| self.colour[u] != c)
    }

    fn stop(&self) -> bool {
        self.out_of_time || self.best_s <= self.s_floor
    }

    /// Assigns flagged vertices; `s` = classes currently holding a flagged vertex.
    fn flagged_phase(&mut self, i: usize, used: usize, s: usize) {
        if self.stop() || s >= self.best_s {
            return;
        }
        if self.budget.tick() {
            self.out_of_time = true;
            return;
        }
        if i == self.n_flagged {
            if let Some(done) = self.complete(i, used) {
                self.best = Some(done);
                self.best_s = s;
            }
            return;
        }
        let v = self.order[i];
        for c in 0..(used + 1).min(self.k) {
            if !self.feasible(v, c) {
                continue;
            }
            let opens = self.class_flagged[c] == 0;
            self.colour[v] = c;
            self.class_flagged[c] += 1;
            self.flagged_phase(i + 1, used.max(c + 1), s + opens as usize);
            self.class_flagged[c] -= 1;
            self.colour[v] = NONE;
            if self.stop() {
                return;
            }
        }
    }

    /// Finds any completion of the current partial colouring using exactly
    /// `k` colours.
    fn complete(&mut self, i: usize, used: usize) -> Option<Vec<usize>> {
        if self.budget.tick() {
            self.out_of_time = true;
            return None;
        }
        let remaining = self.order.len() - i;
        if used + remaining < self.k {
            return None;
        }
        if i == self.order.len() {
            return (used == self.k).then(|| self.colour.clone());
        }
        let v = self.order[i];
        for c in 0..(used + 1).min(self.k) {
            if !self.feasible(v, c) {
                continue;
            }
            self.colour[v] = c;
            let r = self.complete(i + 1, used.max(c + 1));
            self.colour[v] = NONE;
            if r.is_some() || self.out_of_time {
                return r;
            }
        }
        None
    }
}

/// Empties flagged vertices out of whole classes when they fit elsewhere.
fn improve_s(g: &Graph, flagged: &[bool], mut colours: Vec<usize>) -> Vec<usize> {
    let k = colour_count(&colours);
    loop {
        let mut improved = false;
        let mut flagged_in: Vec<Vec<usize>> = vec![Vec::new(); k];
        for v in 0..g.n() {
            if flagged[v] {
                flagged_in[colours[v]].push(v);
            }
        }
        let mut candidates: Vec<usize> = (0..k).filter(|&c| !flagged_in[c].is_empty()).collect();
        candidates.sort_by_key(|&c| (flagged_in[c].len(), c));
        'class: for &c in &candidates {
            let class_size = colours.iter().filter(|&&x| x == c).count();
            if class_size == flagged_in[c].len() {
                continue;
            }
            let mut trial = colours.clone();
            for &v in &flagged_in[c] {
                let target = (0..k).find(|&t| {
                    t != c && !flagged_in[t].is_empty() && g.neighbors(v).iter().all(|u| trial[u] != t)
                });
                match target {
                    Some(t) => trial[v] = t,
                    None => continue 'class,
                }
            }
            colours = trial;
            improved = true;
            break;
        }
        if !improved {
            return colours;
        }
    }
}
