//! Lists the arcs a strongly biconnected graph cannot afford to lose, each
//! with a witness of what breaks when the arc is deleted.
//!
//! Usage: cargo run --example find_b_bridges [-- path/to/file.edges]

use sbgraph::graph::Digraph;
use sbgraph::resilience::{classify, Witness};

fn describe(g: &Digraph, w: &Witness) -> String {
    match w {
        Witness::NotStronglyConnected { from, to } => format!(
            "vertex {} can no longer reach vertex {}",
            g.label_of(*from),
            g.label_of(*to)
        ),
        Witness::UnderlyingNotBiconnected { cut_vertex } => {
            format!("vertex {} becomes a cut vertex", g.label_of(*cut_vertex))
        }
    }
}

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig1.edges").into());
    let text = std::fs::read_to_string(&path).expect("readable input file");
    let g = sbgraph::edgelist::parse_edge_list(&text).expect("well-formed edge list").graph;

    let report = classify(&g);
    match report.b_bridges {
        None => {
            println!("input is not strongly biconnected (or too small); no b-bridges defined");
            if let Some(w) = &report.failure {
                println!("reason: {}", describe(&g, w));
            }
        }
        Some(bridges) if bridges.is_empty() => {
            println!("no b-bridges: every single arc loss is survivable");
        }
        Some(bridges) => {
            println!("{} b-bridge(s):", bridges.len());
            for (arc, witness) in &bridges {
                println!(
                    "  {} -> {}: {}",
                    g.label_of(arc.tail),
                    g.label_of(arc.head),
                    describe(&g, witness)
                );
            }
        }
    }
}
