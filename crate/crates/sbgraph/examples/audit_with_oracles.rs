//! Audits the fast analyses against the brute-force deletion oracles on a
//! batch of random instances. The oracles answer by definition (delete and
//! re-test), so agreement here is the strongest evidence the fast paths are
//! right.
//!
//! Usage: cargo run --example audit_with_oracles

use sbgraph::critical::critical_sets;
use sbgraph::generate::generate;
use sbgraph::oracle::{naive_b_articulation_points, naive_b_bridges, naive_critical_sets};
use sbgraph::resilience::{b_articulation_points, b_bridges_fast};

fn main() {
    let mut audited = 0;
    let mut disagreements = 0;
    for i in 0..40u64 {
        let n = 4 + (i % 9) as u32;
        let m = n as u64 + 2 + i % 7;
        let g = generate(n, m, 0xA0D17 + i).unwrap();

        let (fast_bridges, _) = b_bridges_fast(&g).unwrap();
        let slow_bridges = naive_b_bridges(&g).unwrap();
        let bridges_ok = fast_bridges == slow_bridges;

        let points_ok = b_articulation_points(&g).unwrap() == naive_b_articulation_points(&g).unwrap();

        let fast_cs = critical_sets(&g).unwrap();
        let slow_cs = naive_critical_sets(&g).unwrap();
        let critical_ok = fast_cs.strong_articulation_points == slow_cs.strong_articulation_points
            && fast_cs.strong_bridges.len() == slow_cs.strong_bridges.len();

        audited += 1;
        if !(bridges_ok && points_ok && critical_ok) {
            disagreements += 1;
            println!(
                "instance {i} (n={n}, m={}): bridges ok={bridges_ok} points ok={points_ok} critical ok={critical_ok}",
                g.arc_count()
            );
        }
    }
    println!("{audited} instances audited, {disagreements} disagreement(s)");
    assert_eq!(disagreements, 0);
}
