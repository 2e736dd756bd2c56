//! Graphviz export. Vertices are written ascending by label, arcs in
//! construction order, so output is stable across runs. With a report
//! attached, single-failure elements are highlighted: arcs whose loss breaks
//! strong biconnectivity come out bold red, those that already break strong
//! connectivity are dashed on top, and vertices whose loss breaks strong
//! biconnectivity are double-circled.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::graph::Digraph;
use crate::report::ReportDocument;

pub fn emit_dot(g: &Digraph, report: Option<&ReportDocument>) -> String {
    let empty_arcs: Vec<[u64; 2]> = Vec::new();
    let empty_vs: Vec<u64> = Vec::new();
    let pick_arcs = |field: &Option<Vec<[u64; 2]>>| -> HashSet<(u64, u64)> {
        field
            .as_ref()
            .unwrap_or(&empty_arcs)
            .iter()
            .map(|&[t, h]| (t, h))
            .collect()
    };
    let (b_bridges, strong, b_points) = match report {
        Some(r) => (
            pick_arcs(&r.b_bridges),
            pick_arcs(&r.strong_bridges),
            r.b_articulation_points
                .as_ref()
                .unwrap_or(&empty_vs)
                .iter()
                .copied()
                .collect::<HashSet<u64>>(),
        ),
        None => (HashSet::new(), HashSet::new(), HashSet::new()),
    };

    let mut out = String::from("digraph g {\n");
    let mut verts: Vec<u64> = g.vertices().map(|v| g.label_of(v)).collect();
    verts.sort_unstable();
    for v in verts {
        if b_points.contains(&v) {
            writeln!(out, "  {v} [shape=doublecircle];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for a in g.arcs() {
        let t = g.label_of(a.tail);
        let h = g.label_of(a.head);
        let is_b = b_bridges.contains(&(t, h));
        let is_strong = strong.contains(&(t, h));
        let mut attrs: Vec<String> = Vec::new();
        if is_b {
            attrs.push("color=red".into());
        }
        let style = match (is_b, is_strong) {
            (true, true) => Some("\"bold,dashed\""),
            (true, false) => Some("bold"),
            (false, true) => Some("dashed"),
            (false, false) => None,
        };
        if let Some(s) = style {
            attrs.push(format!("style={s}"));
        }
        if attrs.is_empty() {
            writeln!(out, "  {t} -> {h};").unwrap();
        } else {
            writeln!(out, "  {t} -> {h} [{}];", attrs.join(", ")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::compute;

    fn g(n: u32, pairs: &[(u32, u32)]) -> Digraph {
        Digraph::new(n, pairs).unwrap()
    }

    #[test]
    fn plain_output_has_no_attributes() {
        let two = g(2, &[(0, 1), (1, 0)]);
        assert_eq!(
            emit_dot(&two, None),
            "digraph g {\n  0;\n  1;\n  0 -> 1;\n  1 -> 0;\n}\n"
        );
    }

    #[test]
    fn cycle_arcs_are_bold_red_dashed() {
        let c = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let doc = compute(&c, false);
        let dot = emit_dot(&c, Some(&doc));
        // every arc of a plain cycle is both kinds of bridge
        assert_eq!(dot.matches("color=red, style=\"bold,dashed\"").count(), 3);
        assert!(!dot.contains("doublecircle"));
    }

    #[test]
    fn vertex_highlights_use_doublecircle() {
        let sq = g(4, &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)]);
        let doc = compute(&sq, false);
        let dot = emit_dot(&sq, Some(&doc));
        assert_eq!(dot.matches("[shape=doublecircle]").count(), 4);
        assert!(!dot.contains("color=red"));
    }

    #[test]
    fn labels_are_used_verbatim() {
        let c = g(3, &[(0, 1), (1, 2), (2, 0)]).with_labels(vec![7, 9, 11]);
        let dot = emit_dot(&c, None);
        assert!(dot.contains("  7 -> 9;"));
        assert!(dot.contains("  11 -> 7;"));
        assert!(dot.contains("  9;"));
    }
}
