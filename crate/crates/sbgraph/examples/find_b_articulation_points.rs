//! Lists the vertices a strongly biconnected graph cannot afford to lose,
//! with the failure each deletion causes in the remaining graph.
//!
//! Usage: cargo run --example find_b_articulation_points [-- path/to/file.edges]

use sbgraph::graph::Digraph;
use sbgraph::resilience::{classify, Witness};

fn describe(g: &Digraph, w: &Witness) -> String {
    match w {
        Witness::NotStronglyConnected { from, to } => format!(
            "{} loses its path to {}",
            g.label_of(*from),
            g.label_of(*to)
        ),
        Witness::UnderlyingNotBiconnected { cut_vertex } => {
            format!("{} becomes a cut vertex", g.label_of(*cut_vertex))
        }
    }
}

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig2.edges").into());
    let text = std::fs::read_to_string(&path).expect("readable input file");
    let g = sbgraph::edgelist::parse_edge_list(&text).expect("well-formed edge list").graph;

    let report = classify(&g);
    match report.b_articulation_points {
        None => println!(
            "b-articulation points undefined here (needs a strongly biconnected input with >= 4 vertices)"
        ),
        Some(points) if points.is_empty() => {
            println!("no b-articulation points: every single vertex loss is survivable");
        }
        Some(points) => {
            println!("{} b-articulation point(s):", points.len());
            for (v, witness) in &points {
                println!("  {}: removing it, {}", g.label_of(*v), describe(&g, witness));
            }
        }
    }
}
