//! Full analysis of an edge-list file: every property and failure set the
//! input qualifies for, as text and as the stable JSON document.
//!
//! Usage: cargo run --example analyze_file [-- path/to/file.edges]

use sbgraph::edgelist::parse_edge_list;
use sbgraph::report::{compute, render_text};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig1.edges").into());
    let text = std::fs::read_to_string(&path).expect("readable input file");
    let parsed = parse_edge_list(&text).expect("well-formed edge list");
    if parsed.duplicates_dropped > 0 {
        eprintln!("note: {} duplicate arc line(s) dropped", parsed.duplicates_dropped);
    }

    let doc = compute(&parsed.graph, true);
    println!("# {path}");
    print!("{}", render_text(&doc));
    println!();
    println!("{}", serde_json::to_string(&doc).expect("report serializes"));
}
