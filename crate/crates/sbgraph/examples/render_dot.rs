//! Graphviz rendering with the failure sets highlighted: b-bridges bold red
//! (dashed when they already break strong connectivity), b-articulation
//! points double-circled. Pipe into `dot -Tsvg` to draw.
//!
//! Usage: cargo run --example render_dot [-- path/to/file.edges]

use sbgraph::dot::emit_dot;
use sbgraph::report::compute;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig1.edges").into());
    let text = std::fs::read_to_string(&path).expect("readable input file");
    let g = sbgraph::edgelist::parse_edge_list(&text).expect("well-formed edge list").graph;

    let report = compute(&g, false);
    print!("{}", emit_dot(&g, Some(&report)));
}
