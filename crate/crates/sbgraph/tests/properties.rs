//! Property tests for the structural invariants the library promises,
//! checked on randomized inputs against first-principles definitions.

mod support;

use proptest::prelude::*;

use sbgraph::connectivity::{
    block_decomposition, is_biconnected, is_strongly_biconnected, is_strongly_connected,
    scss_certificate, strongly_connected_components,
};
use sbgraph::critical::critical_sets;
use sbgraph::edgelist::{parse_edge_list, serialize_edge_list};
use sbgraph::generate::generate;
use sbgraph::graph::{Digraph, VertexId};
use sbgraph::oracle::{naive_b_bridges, naive_critical_sets};
use sbgraph::report::compute;
use sbgraph::resilience::{b_bridges_fast, classify, Witness};

use support::{arc_pairs, sc_instance};

fn digraph(max_n: u32, max_m: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |raw| {
            let pairs: Vec<(u32, u32)> =
                raw.into_iter().filter(|&(u, v)| u != v).collect();
            Digraph::new(n, &pairs).unwrap()
        })
    })
}

fn reaches(g: &Digraph, from: VertexId, to: VertexId) -> bool {
    let mut seen = vec![false; g.vertex_count() as usize];
    let mut stack = vec![from];
    seen[from.index()] = true;
    while let Some(v) = stack.pop() {
        if v == to {
            return true;
        }
        for &w in g.successors(v) {
            if !seen[w.index()] {
                seen[w.index()] = true;
                stack.push(w);
            }
        }
    }
    false
}

fn underlying_connected_without(g: &Digraph, skip: VertexId) -> bool {
    let u = g.underlying();
    let n = u.vertex_count();
    if n <= 1 {
        return true;
    }
    let start = match (0..n).map(VertexId).find(|&v| v != skip) {
        Some(s) => s,
        None => return true,
    };
    let mut seen = vec![false; n as usize];
    seen[start.index()] = true;
    seen[skip.index()] = true;
    let mut stack = vec![start];
    let mut visited = 1;
    while let Some(v) = stack.pop() {
        for &w in u.neighbors(v) {
            if !seen[w.index()] {
                seen[w.index()] = true;
                visited += 1;
                stack.push(w);
            }
        }
    }
    visited == n - 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trip(g in digraph(12, 40)) {
        let text = serialize_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.graph.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.graph.arcs(), g.arcs());
        prop_assert_eq!(back.duplicates_dropped, 0);
    }

    #[test]
    fn parser_never_panics(text in "\\PC{0,200}") {
        let _ = parse_edge_list(&text);
    }

    #[test]
    fn generator_output_is_deterministic_and_resilient(
        n in 3u32..=20,
        slack in 0u64..=30,
        seed in any::<u64>(),
    ) {
        let m = n as u64 + 2 + slack;
        let a = generate(n, m, seed).unwrap();
        let b = generate(n, m, seed).unwrap();
        prop_assert_eq!(a.arcs(), b.arcs());
        prop_assert!(is_strongly_biconnected(&a));
        let cap = (n as u64 * (n as u64 - 1)).min(m) as usize;
        prop_assert_eq!(a.arc_count(), cap);
    }

    #[test]
    fn scc_is_a_partition_of_strongly_connected_pieces(g in digraph(10, 30)) {
        let comps = strongly_connected_components(&g);
        let mut seen = vec![0u32; g.vertex_count() as usize];
        for c in &comps {
            prop_assert!(!c.is_empty());
            for &v in c {
                seen[v.index()] += 1;
            }
            let (sub, _) = g.induced_subgraph(c).unwrap();
            prop_assert!(is_strongly_connected(&sub));
        }
        prop_assert!(seen.iter().all(|&k| k == 1));
    }

    #[test]
    fn blocks_cover_edges_and_overlap_in_at_most_one_vertex(g in digraph(10, 30)) {
        let u = g.underlying();
        let d = block_decomposition(&u);
        for (a, b) in u.edges() {
            let hits = d
                .blocks
                .iter()
                .filter(|blk| blk.contains(a) && blk.contains(b))
                .count();
            prop_assert_eq!(hits, 1);
        }
        for i in 0..d.blocks.len() {
            for j in i + 1..d.blocks.len() {
                let shared = d.blocks[i].iter().filter(|v| d.blocks[j].contains(v)).count();
                prop_assert!(shared <= 1);
            }
        }
        if u.vertex_count() > 0 {
            prop_assert_eq!(d.blocks.len() == 1, is_biconnected(&u));
        }
    }

    #[test]
    fn critical_sets_match_per_element_deletion(
        n in 3u32..=10,
        extras in 0u32..=8,
        seed in any::<u64>(),
    ) {
        let g = sc_instance(n, extras, seed);
        let fast = critical_sets(&g).unwrap();
        let slow = naive_critical_sets(&g).unwrap();
        prop_assert_eq!(arc_pairs(&fast.strong_bridges), arc_pairs(&slow.strong_bridges));
        prop_assert_eq!(fast.strong_articulation_points, slow.strong_articulation_points);
    }

    #[test]
    fn fast_b_bridges_match_the_oracle(
        n in 3u32..=10,
        slack in 0u64..=10,
        seed in any::<u64>(),
    ) {
        let g = generate(n, n as u64 + 2 + slack, seed).unwrap();
        let (fast, trace) = b_bridges_fast(&g).unwrap();
        prop_assert_eq!(arc_pairs(&fast), arc_pairs(&naive_b_bridges(&g).unwrap()));
        prop_assert!(trace.final_arcs().len() <= 3 * (n as usize - 1));
    }

    #[test]
    fn classify_witnesses_reverify(g in digraph(10, 30)) {
        let report = classify(&g);
        match report.failure {
            None => prop_assert!(report.strongly_biconnected),
            Some(Witness::NotStronglyConnected { from, to }) => {
                prop_assert!(!report.strongly_connected);
                prop_assert!(!reaches(&g, from, to));
            }
            Some(Witness::UnderlyingNotBiconnected { cut_vertex }) => {
                prop_assert!(report.strongly_connected);
                prop_assert!(!underlying_connected_without(&g, cut_vertex));
            }
        }
    }

    #[test]
    fn report_json_round_trips(g in digraph(10, 30)) {
        let doc = compute(&g, true);
        let json = serde_json::to_string(&doc).unwrap();
        let back: sbgraph::report::ReportDocument = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(doc, back);
    }

    #[test]
    fn certificate_is_a_sparse_strongly_connected_skeleton(
        n in 2u32..=12,
        extras in 0u32..=10,
        seed in any::<u64>(),
    ) {
        let g = sc_instance(n, extras, seed);
        let cert = scss_certificate(&g, VertexId(0)).unwrap();
        prop_assert!(cert.certificate_arcs.len() <= 2 * (n as usize - 1).max(1));
        let pairs: Vec<(u32, u32)> =
            cert.certificate_arcs.iter().map(|a| (a.tail.0, a.head.0)).collect();
        for &(u, v) in &pairs {
            prop_assert!(g.has_arc(VertexId(u), VertexId(v)));
        }
        let sub = Digraph::new(n, &pairs).unwrap();
        prop_assert!(is_strongly_connected(&sub));
    }
}
