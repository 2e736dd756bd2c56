//! Strongly biconnected components of a strongly connected graph. Unlike
//! strongly connected components these are not a partition: two components
//! may share a single vertex, and those shared vertices are exactly where
//! the graph is fragile.
//!
//! Usage: cargo run --example component_cover [-- path/to/file.edges]

use sbgraph::sbcc::strongly_biconnected_components;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig3.edges").into()
    });
    let text = std::fs::read_to_string(&path).expect("readable input file");
    let g = sbgraph::edgelist::parse_edge_list(&text).expect("well-formed edge list").graph;

    let cover = strongly_biconnected_components(&g).expect("input must be strongly connected");
    println!("{} component(s):", cover.count());
    for (i, comp) in cover.components().iter().enumerate() {
        let mut labels: Vec<u64> = comp.iter().map(|&v| g.label_of(v)).collect();
        labels.sort_unstable();
        let rendered: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        println!("  [{i}] {{{}}}", rendered.join(", "));
    }

    let shared: Vec<String> = g
        .vertices()
        .filter(|&v| cover.membership(v).len() > 1)
        .map(|v| format!("{} (in {} components)", g.label_of(v), cover.membership(v).len()))
        .collect();
    if shared.is_empty() {
        println!("no vertex is shared: the graph is one strongly biconnected block");
    } else {
        println!("shared vertices: {}", shared.join(", "));
    }
}
