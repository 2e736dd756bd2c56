//! Yes/no resilience verdicts for a batch of small graphs: is the graph
//! strongly biconnected at all, and does it stay that way under any single
//! arc loss (2-edge) or vertex loss (2-vertex)?

use sbgraph::graph::Digraph;
use sbgraph::resilience::classify;

fn verdicts(name: &str, g: &Digraph) {
    let r = classify(g);
    println!(
        "{name}: strongly biconnected {}, survives any arc loss {}, survives any vertex loss {}",
        r.strongly_biconnected, r.is_2edge_sb, r.is_2vertex_sb
    );
}

fn main() {
    let cycle = Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    verdicts("plain 4-cycle            ", &cycle);

    let ring = Digraph::new(
        4,
        &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)],
    )
    .unwrap();
    verdicts("bidirected 4-ring        ", &ring);

    let mut pairs = Vec::new();
    for u in 0..5u32 {
        for v in 0..5u32 {
            if u != v {
                pairs.push((u, v));
            }
        }
    }
    let complete = Digraph::new(5, &pairs).unwrap();
    verdicts("complete bidirected on 5 ", &complete);

    let path = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
    verdicts("directed path            ", &path);
}
