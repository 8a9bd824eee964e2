//! Graph solvers against exhaustive search on random small graphs.

use beckring_core::graph::Graph;
use beckring_core::solvers::clique::{maximum_clique, maximum_clique_max_weight};
use beckring_core::solvers::coloring::{dsatur, exact_chromatic, is_proper, min_s_colouring};
use beckring_core::solvers::Budget;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        (Just(n), proptest::collection::vec(any::<bool>(), m)).prop_map(move |(n, keep)| {
            (n, pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&p, _)| p).collect())
        })
    })
}

fn cliques(g: &Graph) -> Vec<u32> {
    (0u32..1 << g.n())
        .filter(|&s| {
            let vs: Vec<usize> = (0..g.n()).filter(|&v| s >> v & 1 == 1).collect();
            g.is_clique(&vs)
        })
        .collect()
}

/// Every proper colouring using exactly `k` colours, as restricted-growth labels.
fn colourings(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, k: usize, cur: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        let v = cur.len();
        if v == g.n() {
            if used == k {
                out.push(cur.clone());
            }
            return;
        }
        for c in 0..(used + 1).min(k) {
            if (0..v).any(|u| cur[u] == c && g.adjacent(u, v)) {
                continue;
            }
            cur.push(c);
            go(g, k, cur, used.max(c + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(g, k, &mut Vec::new(), 0, &mut out);
    out
}

fn brute_chi(g: &Graph) -> usize {
    (1..=g.n()).find(|&k| !colourings(g, k).is_empty()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn clique_matches_enumeration((n, edges) in graph_strategy(12)) {
        let g = Graph::from_edges(n, &edges);
        let found = maximum_clique(&g, &mut Budget::unlimited()).unwrap();
        prop_assert!(g.is_clique(&found));
        let best = cliques(&g).iter().map(|s| s.count_ones() as usize).max().unwrap();
        prop_assert_eq!(found.len(), best);
    }

    #[test]
    fn weighted_clique_matches_enumeration((n, edges) in graph_strategy(11), seed in any::<u16>()) {
        let g = Graph::from_edges(n, &edges);
        let weight: Vec<bool> = (0..n).map(|v| seed >> (v % 16) & 1 == 1).collect();
        let all = cliques(&g);
        let omega = all.iter().map(|s| s.count_ones() as usize).max().unwrap();
        let wmask: u32 = (0..n).filter(|&v| weight[v]).fold(0, |m, v| m | 1 << v);
        let best = all.iter().filter(|s| s.count_ones() as usize == omega).map(|s| (s & wmask).count_ones()).max().unwrap();
        let found = maximum_clique_max_weight(&g, &weight, omega, &mut Budget::unlimited()).unwrap();
        prop_assert_eq!(found.len(), omega);
        prop_assert!(g.is_clique(&found));
        prop_assert_eq!(found.iter().filter(|&&v| weight[v]).count() as u32, best);
    }

    #[test]
    fn chromatic_matches_partition_search((n, edges) in graph_strategy(9)) {
        let g = Graph::from_edges(n, &edges);
        let (k, colours) = exact_chromatic(&g, &mut Budget::unlimited()).unwrap();
        prop_assert!(is_proper(&g, &colours));
        prop_assert_eq!(colours.iter().max().map_or(0, |m| m + 1), k);
        prop_assert_eq!(k, brute_chi(&g));
        prop_assert!(is_proper(&g, &dsatur(&g)));
    }

    #[test]
    fn min_s_matches_enumeration((n, edges) in graph_strategy(8), seed in any::<u8>()) {
        let g = Graph::from_edges(n, &edges);
        let flagged: Vec<bool> = (0..n).map(|v| seed >> v & 1 == 1).collect();
        let (k, start) = exact_chromatic(&g, &mut Budget::unlimited()).unwrap();
        let s_of = |c: &[usize]| {
            let mut cls: Vec<usize> = (0..n).filter(|&v| flagged[v]).map(|v| c[v]).collect();
            cls.sort_unstable();
            cls.dedup();
            cls.len()
        };
        let best = colourings(&g, k).iter().map(|c| s_of(c)).min().unwrap();
        let m = min_s_colouring(&g, &flagged, k, &start, 20, &mut Budget::unlimited()).unwrap();
        prop_assert!(m.exact);
        prop_assert!(is_proper(&g, &m.colours));
        prop_assert_eq!(m.colours.iter().max().map_or(0, |x| x + 1), k);
        prop_assert_eq!(s_of(&m.colours), m.s);
        prop_assert_eq!(m.s, best);
    }
}

#[test]
fn empty_and_complete_graphs() {
    let g = Graph::new(5);
    assert_eq!(maximum_clique(&g, &mut Budget::unlimited()).unwrap().len(), 1);
    assert_eq!(exact_chromatic(&g, &mut Budget::unlimited()).unwrap().0, 1);
    let edges: Vec<(usize, usize)> = (0..7).flat_map(|u| (u + 1..7).map(move |v| (u, v))).collect();
    let k7 = Graph::from_edges(7, &edges);
    assert_eq!(maximum_clique(&k7, &mut Budget::unlimited()).unwrap().len(), 7);
    assert_eq!(exact_chromatic(&k7, &mut Budget::unlimited()).unwrap().0, 7);
}

#[test]
fn odd_cycle_needs_three_colours() {
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    assert_eq!(maximum_clique(&c5, &mut Budget::unlimited()).unwrap().len(), 2);
    assert_eq!(exact_chromatic(&c5, &mut Budget::unlimited()).unwrap().0, 3);
}
