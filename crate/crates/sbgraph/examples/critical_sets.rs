//! Strong bridges and strong articulation points: the single failures that
//! already destroy plain strong connectivity. Run against the third fixture
//! this also shows the containment in the b-variants: every strong bridge is
//! a b-bridge, but not the other way around.
//!
//! Usage: cargo run --example critical_sets [-- path/to/file.edges]

use std::collections::BTreeSet;

use sbgraph::critical::critical_sets;
use sbgraph::resilience::classify;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig3.edges").into());
    let text = std::fs::read_to_string(&path).expect("readable input file");
    let g = sbgraph::edgelist::parse_edge_list(&text).expect("well-formed edge list").graph;

    let sets = critical_sets(&g).expect("input must be strongly connected with >= 3 vertices");
    println!("strong bridges ({}):", sets.strong_bridges.len());
    for a in &sets.strong_bridges {
        println!("  {} -> {}", g.label_of(a.tail), g.label_of(a.head));
    }
    println!("strong articulation points ({}):", sets.sap_count());
    for &v in &sets.strong_articulation_points {
        println!("  {}", g.label_of(v));
    }

    if let Some(bridges) = classify(&g).b_bridges {
        let strong: BTreeSet<(u64, u64)> = sets
            .strong_bridges
            .iter()
            .map(|a| (g.label_of(a.tail), g.label_of(a.head)))
            .collect();
        let extra: Vec<String> = bridges
            .iter()
            .map(|(a, _)| (g.label_of(a.tail), g.label_of(a.head)))
            .filter(|p| !strong.contains(p))
            .map(|(t, h)| format!("{t} -> {h}"))
            .collect();
        println!("b-bridges beyond the strong bridges: {}", if extra.is_empty() {
            "(none)".into()
        } else {
            extra.join(", ")
        });
    }
}
