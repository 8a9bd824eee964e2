//! Bitset graphs and Beck's graph of a ring.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing, DEFAULT_SIZE_CAP};

/// Fixed-capacity set of small integers packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> BitSet {
        BitSet { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn full(len: usize) -> BitSet {
        let mut s = BitSet::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Simple undirected graph with one bitset adjacency row per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph { rows: vec![BitSet::new(n); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Adds `u - v`; self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
        }
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Subgraph induced on `vertices`, renumbered `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.adjacent(u, v)))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String cannot fail");
        }
        out
    }

    pub fn to_json(&self) -> String {
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("[{u},{v}]")).collect();
        format!("{{\"n\":{},\"edges\":[{}]}}\n", self.n(), edges.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dimacs,
    Json,
}

/// Beck's graph: every ring element is a vertex (vertex id = element
/// index), and `x ~ y` iff `x != y` and `xy = 0`.
#[derive(Debug, Clone)]
pub struct BeckGraph {
    ring: FiniteRing,
    graph: Graph,
    square_zero: Vec<bool>,
}

impl BeckGraph {
    pub fn build(ring: &FiniteRing) -> Result<BeckGraph> {
        Self::build_with_cap(ring, DEFAULT_SIZE_CAP)
    }

    pub fn build_with_cap(ring: &FiniteRing, cap: usize) -> Result<BeckGraph> {
        let n = ring.size();
        if n > cap {
            return Err(Error::Capacity { size: n as u128, cap });
        }
        let mut graph = Graph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if ring.mul_idx(a, b) == 0 {
                    graph.add_edge(a, b);
                }
            }
        }
        let square_zero = (0..n).map(|a| ring.mul_idx(a, a) == 0).collect();
        Ok(BeckGraph { ring: ring.clone(), graph, square_zero })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n_vertices(&self) -> usize {
        self.graph.n()
    }

    /// `x^2 = 0`, indexed by vertex.
    pub fn square_zero(&self) -> &[bool] {
        &self.square_zero
    }

    /// Induced subgraph on `{0}` plus the zero-divisors.
    pub fn core(&self) -> CoreGraph {
        let n = self.n_vertices();
        // A nonzero vertex is a zero-divisor iff it has a nonzero neighbour.
        let keep: Vec<usize> = (0..n)
            .filter(|&v| v == 0 || self.graph.neighbors(v).iter().any(|u| u != 0))
            .collect();
        CoreGraph {
            graph: self.graph.induced(&keep),
            square_zero: keep.iter().map(|&v| self.square_zero[v]).collect(),
            to_ring: keep.into_iter().map(Elem).collect(),
        }
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dimacs => self.graph.to_dimacs(),
            ExportFormat::Json => self.graph.to_json(),
        }
    }
}

/// The zero-divisor core. Non-zero-divisors are pendant on 0 in the full
/// graph, so for `|R| >= 2` the full graph has `omega = max(omega(core), 2)`
/// and likewise for `chi`.
#[derive(Debug, Clone)]
pub struct CoreGraph {
    pub graph: Graph,
    /// Core vertex id -> ring element.
    pub to_ring: Vec<Elem>,
    pub square_zero: Vec<bool>,
}

impl CoreGraph {
    pub fn n_vertices(&self) -> usize {
        self.graph.n()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_product, make_zmod};

    fn beck(n: u64) -> BeckGraph {
        BeckGraph::build(&make_zmod(n).unwrap()).unwrap()
    }

    #[test]
    fn bitset_basics() {
        let mut s = BitSet::new(130);
        for i in [0, 63, 64, 129] {
            s.insert(i);
        }
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(s.count(), 4);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(BitSet::full(70).count(), 70);
    }

    #[test]
    fn z4_graph() {
        let g = beck(4);
        assert_eq!(g.graph().edges(), vec![(0, 1), (0, 2), (0, 3)]);
        assert!(g.square_zero()[2]);
    }

    #[test]
    fn z2_and_z2xz2() {
        assert_eq!(beck(2).graph().edges(), vec![(0, 1)]);
        let z2 = make_zmod(2).unwrap();
        let g = BeckGraph::build(&make_product(&[z2.clone(), z2]).unwrap()).unwrap();
        // 0 meets all three others; (1,0)-(0,1) is the only other edge.
        assert_eq!(g.graph().edge_count(), 4);
        assert!(g.graph().adjacent(1, 2));
    }

    #[test]
    fn core_sizes() {
        assert_eq!(beck(7).core().n_vertices(), 1);
        let c = beck(12).core();
        let ids: Vec<usize> = c.to_ring.iter().map(|e| e.0).collect();
        assert_eq!(ids, vec![0, 2, 3, 4, 6, 8, 9, 10]);
    }

    #[test]
    fn exports() {
        assert_eq!(beck(2).export(ExportFormat::Dimacs), "p edge 2 1\ne 1 2\n");
        assert_eq!(beck(1).export(ExportFormat::Dimacs), "p edge 1 0\n");
        assert_eq!(beck(4).export(ExportFormat::Dimacs), "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
        assert_eq!(beck(4).export(ExportFormat::Json), "{\"n\":4,\"edges\":[[0,1],[0,2],[0,3]]}\n");
    }

    #[test]
    fn dimacs_edges_sorted_lexicographically() {
        let text = beck(12).export(ExportFormat::Dimacs);
        let pairs: Vec<(usize, usize)> = text
            .lines()
            .skip(1)
            .map(|l| {
                let mut it = l.split_whitespace().skip(1).map(|t| t.parse::<usize>().unwrap());
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect();
        let mut sorted = pairs.clone();
        sorted.sort();
        assert_eq!(pairs, sorted);
        assert!(pairs.iter().all(|&(u, v)| u < v));
    }
}
