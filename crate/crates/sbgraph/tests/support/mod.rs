//! Shared helpers for the integration suites: a deterministic generator for
//! strongly connected (not necessarily strongly biconnected) instances, and
//! definition-level oracles for dominators and flowgraph bridges that share
//! no machinery with the library implementations.

#![allow(dead_code)]

use std::collections::BTreeSet;

use sbgraph::graph::{Arc, Digraph, VertexId};

/// splitmix64; enough randomness for test-instance supply and fully
/// deterministic, independent of the library PRNG.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed)
    }

    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

/// Strongly connected instance that is frequently NOT strongly biconnected:
/// a random out-tree from vertex 0 plus, per vertex, an arc back to a random
/// ancestor-or-root side vertex, plus `extras` random arcs. Out-tree gives
/// root-to-all, the return arcs give all-to-root; tree shapes make cut
/// vertices common.
pub fn sc_instance(n: u32, extras: u32, seed: u64) -> Digraph {
    assert!(n >= 1);
    let mut rng = TestRng::new(seed);
    let mut pairs: BTreeSet<(u32, u32)> = BTreeSet::new();
    for v in 1..n {
        let parent = rng.below(v as u64) as u32;
        pairs.insert((parent, v));
        let back = rng.below(v as u64) as u32;
        pairs.insert((v, back));
    }
    let mut placed = 0;
    let mut budget = 10 * extras as u64 + 10;
    while placed < extras && budget > 0 {
        budget -= 1;
        let u = rng.below(n as u64) as u32;
        let v = rng.below(n as u64) as u32;
        if u != v && pairs.insert((u, v)) {
            placed += 1;
        }
    }
    let ordered: Vec<(u32, u32)> = pairs.into_iter().collect();
    Digraph::new(n, &ordered).unwrap()
}

fn reachable_from(g: &Digraph, root: VertexId) -> Vec<bool> {
    let n = g.vertex_count() as usize;
    let mut seen = vec![false; n];
    let mut queue = vec![root];
    seen[root.index()] = true;
    while let Some(v) = queue.pop() {
        for &w in g.successors(v) {
            if !seen[w.index()] {
                seen[w.index()] = true;
                queue.push(w);
            }
        }
    }
    seen
}

/// Immediate dominators by the textbook fixed-point iteration over full
/// dominator sets (bitmask per vertex). Only suitable for small n.
pub fn fixpoint_idoms(g: &Digraph, root: VertexId) -> Vec<Option<VertexId>> {
    let n = g.vertex_count() as usize;
    assert!(n <= 64, "bitmask oracle holds at most 64 vertices");
    let reach = reachable_from(g, root);
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut dom: Vec<u64> = (0..n)
        .map(|v| if v == root.index() { 1u64 << v } else { full })
        .collect();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if v == root.index() || !reach[v] {
                continue;
            }
            let mut meet = full;
            for &p in g.predecessors(VertexId(v as u32)) {
                if reach[p.index()] {
                    meet &= dom[p.index()];
                }
            }
            let next = meet | (1u64 << v);
            if next != dom[v] {
                dom[v] = next;
                changed = true;
            }
        }
    }
    (0..n)
        .map(|v| {
            if !reach[v] || v == root.index() {
                return None;
            }
            let strict = dom[v] & !(1u64 << v);
            // the immediate dominator is the strict dominator with the
            // largest dominator set of its own
            (0..n)
                .filter(|&u| strict & (1u64 << u) != 0)
                .max_by_key(|&u| dom[u].count_ones())
                .map(|u| VertexId(u as u32))
        })
        .collect()
}

/// Flowgraph bridges by definition: arcs whose deletion makes some vertex
/// unreachable from the root. Callers ensure every vertex is reachable.
pub fn deletion_flowgraph_bridges(g: &Digraph, root: VertexId) -> Vec<Arc> {
    let n = g.vertex_count() as usize;
    let mut out = Vec::new();
    for &e in g.arcs() {
        let h = g.delete_arc(e).unwrap();
        if reachable_from(&h, root).iter().filter(|&&b| b).count() != n {
            out.push(e);
        }
    }
    out
}

/// Canonical set-of-sets form for component covers.
pub fn canonical_cover(comps: &[Vec<VertexId>]) -> BTreeSet<Vec<u32>> {
    comps
        .iter()
        .map(|c| {
            let mut v: Vec<u32> = c.iter().map(|x| x.0).collect();
            v.sort_unstable();
            v
        })
        .collect()
}

pub fn arc_pairs(arcs: &[Arc]) -> BTreeSet<(u32, u32)> {
    arcs.iter().map(|a| (a.tail.0, a.head.0)).collect()
}

pub fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn load_fixture(name: &str) -> Digraph {
    let text = std::fs::read_to_string(fixture(name)).unwrap();
    sbgraph::edgelist::parse_edge_list(&text).unwrap().graph
}
