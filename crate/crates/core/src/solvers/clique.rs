//! Bitset branch-and-bound for maximum cliques, with a greedy colouring
//! bound over a fixed vertex order (degree descending, id ascending).

use super::Budget;
use crate::error::BudgetExceeded;
use crate::graph::{BitSet, Graph};

/// Graph renumbered so that bit position equals search priority.
struct Ordered {
    /// position -> original vertex
    order: Vec<usize>,
    rows: Vec<BitSet>,
}

impl Ordered {
    fn new(g: &Graph) -> Ordered {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut pos = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let rows = order
            .iter()
            .map(|&v| {
                let mut row = BitSet::new(n);
                for u in g.neighbors(v).iter() {
                    row.insert(pos[u]);
                }
                row
            })
            .collect();
        Ordered { order, rows }
    }

    fn mask(&self, flags: &[bool]) -> BitSet {
        let mut m = BitSet::new(self.order.len());
        for (p, &v) in self.order.iter().enumerate() {
            if flags[v] {
                m.insert(p);
            }
        }
        m
    }

    /// Greedy sequential colouring of `cand`. Returns vertices in
    /// non-decreasing colour order together with their colour (1-based).
    fn colour_sort(&self, cand: &BitSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(cand.count());
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                uncoloured.remove(v);
                for u in self.rows[v].iter() {
                    q.remove(u);
                }
                out.push((v, colour));
            }
        }
        out
    }
}

fn finish(ord: &Ordered, best: &[usize]) -> Vec<usize> {
    let mut vs: Vec<usize> = best.iter().map(|&p| ord.order[p]).collect();
    vs.sort_unstable();
    vs
}

/// Exact maximum clique (sorted original vertex ids).
pub fn maximum_clique(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>, BudgetExceeded> {
    let ord = Ordered::new(g);
    let mut search = MaxSearch { ord: &ord, budget, best: Vec::new(), cur: Vec::new(), out_of_time: false };
    search.expand(BitSet::full(g.n()));
    if search.out_of_time {
        return Err(BudgetExceeded { what: "max_clique", lower: search.best.len(), upper: None });
    }
    Ok(finish(&ord, &search.best))
}

struct MaxSearch<'a, 'b> {
    ord: &'a Ordered,
    budget: &'b mut Budget,
    best: Vec<usize>,
    cur: Vec<usize>,
    out_of_time: bool,
}

impl MaxSearch<'_, '_> {
    fn expand(&mut self, mut cand: BitSet) {
        if self.budget.tick() {
            self.out_of_time = true;
            return;
        }
        let sorted = self.ord.colour_sort(&cand);
        for &(v, colour) in sorted.iter().rev() {
            if self.cur.len() + colour <= self.best.len() || self.out_of_time {
                return;
            }
            self.cur.push(v);
            let next = cand.intersection(&self.ord.rows[v]);
            if next.is_empty() {
                if self.cur.len() > self.best.len() {
                    self.best = self.cur.clone();
                }
            } else {
                self.expand(next);
            }
            self.cur.pop();
            cand.remove(v);
        }
    }
}

/// Among cliques of size exactly `omega`, one maximising the number of
/// `weight`-flagged members. Returns the sorted clique.
pub fn maximum_clique_max_weight(
    g: &Graph,
    weight: &[bool],
    omega: usize,
    budget: &mut Budget,
) -> Result<Vec<usize>, BudgetExceeded> {
    let ord = Ordered::new(g);
    let flagged = ord.mask(weight);
    let mut search = SplitSearch {
        ord: &ord,
        flagged: &flagged,
        omega,
        budget,
        best: None,
        best_weight: 0,
        cur: Vec::new(),
        cur_weight: 0,
        out_of_time: false,
    };
    search.expand(BitSet::full(g.n()));
    if search.out_of_time {
        let lower = if search.best.is_some() { omega } else { 0 };
        return Err(BudgetExceeded { what: "best_clique_split", lower, upper: Some(omega) });
    }
    match search.best {
        Some(best) => Ok(finish(&ord, &best)),
        None => Ok(Vec::new()),
    }
}

struct SplitSearch<'a, 'b> {
    ord: &'a Ordered,
    flagged: &'a BitSet,
    omega: usize,
    budget: &'b mut Budget,
    best: Option<Vec<usize>>,
    best_weight: usize,
    cur: Vec<usize>,
    cur_weight: usize,
    out_of_time: bool,
}

impl SplitSearch<'_, '_> {
    fn done(&self) -> bool {
        self.out_of_time || (self.best.is_some() && self.best_weight == self.omega)
    }

    fn expand(&mut self, mut cand: BitSet) {
        if self.cur.len() == self.omega {
            if self.best.is_none() || self.cur_weight > self.best_weight {
                self.best = Some(self.cur.clone());
                self.best_weight = self.cur_weight;
            }
            return;
        }
        if self.budget.tick() {
            self.out_of_time = true;
            return;
        }
        let sorted = self.ord.colour_sort(&cand);
        for &(v, colour) in sorted.iter().rev() {
            if self.done() || self.cur.len() + colour < self.omega {
                return;
            }
            let need = self.omega - self.cur.len();
            let reachable = cand.intersection_count(self.flagged).min(need);
            if self.best.is_some() && self.cur_weight + reachable <= self.best_weight {
                return;
            }
            let w = self.flagged.contains(v) as usize;
            self.cur.push(v);
            self.cur_weight += w;
            self.expand(cand.intersection(&self.ord.rows[v]));
            self.cur_weight -= w;
            self.cur.pop();
            cand.remove(v);
        }
    }
}
