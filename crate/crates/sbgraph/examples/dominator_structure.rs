//! The dominator machinery underneath the strong-bridge search: immediate
//! dominators from the smallest vertex in both directions, and the arcs
//! every root-to-vertex path must use. Strong bridges are exactly the union
//! of the two directional bridge sets.
//!
//! Usage: cargo run --example dominator_structure [-- path/to/file.edges]

use sbgraph::dominators::{dominator_tree, flowgraph_bridges};
use sbgraph::graph::{Digraph, VertexId};

fn show_direction(name: &str, g: &Digraph) {
    let root = VertexId(0);
    let tree = dominator_tree(g, root).expect("fixture vertices are all reachable");
    print!("{name} idoms:");
    for v in g.vertices() {
        if let Some(d) = tree.idom(v) {
            print!(" {}<-{}", g.label_of(v), g.label_of(d));
        }
    }
    println!();
    let bridges = flowgraph_bridges(g, root).expect("fixture vertices are all reachable");
    let rendered: Vec<String> = bridges
        .iter()
        .map(|a| format!("{}->{}", g.label_of(a.tail), g.label_of(a.head)))
        .collect();
    println!(
        "{name} bridges: {}",
        if rendered.is_empty() { "(none)".into() } else { rendered.join(" ") }
    );
}

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig3.edges").into());
    let text = std::fs::read_to_string(&path).expect("readable input file");
    let g = sbgraph::edgelist::parse_edge_list(&text).expect("well-formed edge list").graph;

    println!("root: {}", g.label_of(VertexId(0)));
    show_direction("forward", &g);
    show_direction("reverse", &g.reverse());
}
