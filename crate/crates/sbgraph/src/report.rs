//! The full analysis report: one structure holding every result the library
//! can produce for a graph, in label space, with deterministic ordering so
//! two runs over the same input are byte-identical.
//!
//! JSON field order is fixed (alphabetical) by declaring the struct fields in
//! that order. Sets that require a precondition the input fails to meet are
//! absent rather than empty: an empty list means "checked, nothing found".

use serde::{Deserialize, Serialize};

use crate::critical::{strong_articulation_points, strong_bridges};
use crate::error::Error;
use crate::graph::{Arc, Digraph};
use crate::resilience::classify;
use crate::sbcc::strongly_biconnected_components;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    /// Arcs appended by the augmentation loop, in the order chosen.
    pub added_arcs: Vec<[u64; 2]>,
    /// Component count of the working subgraph before each addition;
    /// strictly decreasing.
    pub component_counts: Vec<u64>,
    /// Certificate arcs the loop started from, sorted.
    pub initial_arcs: Vec<[u64; 2]>,
    pub root: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b_articulation_points: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b_bridges: Option<Vec<[u64; 2]>>,
    pub is_2edge_sb: bool,
    pub is_2vertex_sb: bool,
    pub m: u64,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sbcc: Option<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strong_articulation_points: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strong_bridges: Option<Vec<[u64; 2]>>,
    pub strongly_biconnected: bool,
    pub strongly_connected: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<TraceDocument>,
}

fn labeled_arc(g: &Digraph, a: Arc) -> [u64; 2] {
    [g.label_of(a.tail), g.label_of(a.head)]
}

/// Runs every analysis whose precondition the graph meets and collects the
/// results. Infallible: unmet preconditions leave the matching field absent.
pub fn compute(g: &Digraph, include_trace: bool) -> ReportDocument {
    let n = g.vertex_count();
    let c = classify(g);

    let mut doc = ReportDocument {
        b_articulation_points: None,
        b_bridges: None,
        is_2edge_sb: c.is_2edge_sb,
        is_2vertex_sb: c.is_2vertex_sb,
        m: g.arc_count() as u64,
        n: n as u64,
        sbcc: None,
        strong_articulation_points: None,
        strong_bridges: None,
        strongly_biconnected: c.strongly_biconnected,
        strongly_connected: c.strongly_connected,
        trace: None,
    };

    if c.strongly_connected {
        let mut sb: Vec<[u64; 2]> = strong_bridges(g)
            .expect("strongly connected")
            .into_iter()
            .map(|a| labeled_arc(g, a))
            .collect();
        sb.sort_unstable();
        doc.strong_bridges = Some(sb);

        let mut saps: Vec<u64> = if n >= 3 {
            strong_articulation_points(g)
                .expect("strongly connected, n >= 3")
                .into_iter()
                .map(|v| g.label_of(v))
                .collect()
        } else {
            // removing a vertex from a 1- or 2-vertex strongly connected
            // graph cannot break strong connectivity of what remains
            Vec::new()
        };
        saps.sort_unstable();
        doc.strong_articulation_points = Some(saps);

        let cover = strongly_biconnected_components(g).expect("strongly connected");
        let mut comps: Vec<Vec<u64>> = cover
            .components()
            .iter()
            .map(|c| {
                let mut labels: Vec<u64> = c.iter().map(|&v| g.label_of(v)).collect();
                labels.sort_unstable();
                labels
            })
            .collect();
        comps.sort();
        doc.sbcc = Some(comps);
    }

    if let Some(bridges) = c.b_bridges {
        let mut bb: Vec<[u64; 2]> =
            bridges.into_iter().map(|(a, _)| labeled_arc(g, a)).collect();
        bb.sort_unstable();
        doc.b_bridges = Some(bb);
    }
    if let Some(points) = c.b_articulation_points {
        let mut ba: Vec<u64> = points.into_iter().map(|(v, _)| g.label_of(v)).collect();
        ba.sort_unstable();
        doc.b_articulation_points = Some(ba);
    }
    if include_trace {
        if let Some(t) = c.trace {
            let mut initial: Vec<[u64; 2]> =
                t.initial_arcs.iter().map(|&a| labeled_arc(g, a)).collect();
            initial.sort_unstable();
            doc.trace = Some(TraceDocument {
                added_arcs: t.added_arcs.iter().map(|&a| labeled_arc(g, a)).collect(),
                component_counts: t.component_counts.iter().map(|&c| c as u64).collect(),
                initial_arcs: initial,
                root: g.label_of(t.root),
            });
        }
    }
    doc
}

fn fmt_arc_list(arcs: &[[u64; 2]]) -> String {
    if arcs.is_empty() {
        return "(none)".into();
    }
    arcs.iter()
        .map(|[t, h]| format!("{t}->{h}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn fmt_vertex_list(vs: &[u64]) -> String {
    if vs.is_empty() {
        return "(none)".into();
    }
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Plain-text rendering of a report, one `key: value` line per field,
/// mirroring the JSON layout. Absent sets render as `n/a`.
pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| {
        out.push_str(k);
        out.push_str(": ");
        out.push_str(&v);
        out.push('\n');
    };
    line("vertices", doc.n.to_string());
    line("arcs", doc.m.to_string());
    line("strongly connected", yes_no(doc.strongly_connected).into());
    line("strongly biconnected", yes_no(doc.strongly_biconnected).into());
    line(
        "strong bridges",
        doc.strong_bridges.as_deref().map_or("n/a".into(), fmt_arc_list),
    );
    line(
        "strong articulation points",
        doc.strong_articulation_points.as_deref().map_or("n/a".into(), fmt_vertex_list),
    );
    line("b-bridges", doc.b_bridges.as_deref().map_or("n/a".into(), fmt_arc_list));
    line(
        "b-articulation points",
        doc.b_articulation_points.as_deref().map_or("n/a".into(), fmt_vertex_list),
    );
    line("2-edge-strongly-biconnected", yes_no(doc.is_2edge_sb).into());
    line("2-vertex-strongly-biconnected", yes_no(doc.is_2vertex_sb).into());
    match &doc.sbcc {
        None => line("components", "n/a".into()),
        Some(comps) => {
            let rendered = comps
                .iter()
                .map(|c| format!("{{{}}}", fmt_vertex_list(c).replace(' ', ", ")))
                .collect::<Vec<_>>()
                .join(" ");
            line("components", rendered);
        }
    }
    if let Some(t) = &doc.trace {
        line("trace root", t.root.to_string());
        line("trace certificate arcs", t.initial_arcs.len().to_string());
        line("trace added arcs", fmt_arc_list(&t.added_arcs));
        line(
            "trace component counts",
            if t.component_counts.is_empty() {
                "(none)".into()
            } else {
                t.component_counts
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            },
        );
    }
    out
}

/// Precondition failures rendered for CLI stderr: a stable machine-readable
/// code plus the human message.
pub fn render_error(e: &Error) -> String {
    format!("error[{}]: {}", e.code(), e)
}
