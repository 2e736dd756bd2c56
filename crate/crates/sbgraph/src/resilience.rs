//! Resilience of strong biconnectivity under single failures: which arcs
//! (b-bridges) and which vertices (b-articulation points) a strongly
//! biconnected graph cannot afford to lose, plus the boolean 2-edge / 2-vertex
//! resilience classification built on top.
//!
//! The b-bridge computation avoids testing all m arcs. Arc deletions only
//! need to be tested inside a small working set E_y: a two-spanning-tree
//! strong-connectivity certificate, greedily augmented until it is strongly
//! biconnected on its own. Augmentation picks the first arc (in input order)
//! joining vertices that share no strongly biconnected component of the
//! current working subgraph; each such arc merges at least two blocks of the
//! block-cut tree, so the component count drops every round and the loop adds
//! at most n-1 arcs. An arc left outside the final working set is never a
//! b-bridge: the working set already witnesses strong biconnectivity without
//! it. Strong bridges are b-bridges outright and are folded in up front.
//!
//! The arc-selection rule is deliberately "share no component" rather than
//! "endpoints in two distinct components not both in their intersection":
//! two adjacent vertices always share the component their connecting edge
//! spans, and adding a second arc between them cannot merge anything, so the
//! weaker phrasing would admit picks that stall the loop.

use std::collections::HashSet;

use crate::connectivity::{
    block_decomposition, is_biconnected, is_strongly_biconnected, is_strongly_connected,
    scss_certificate, ScssCertificate,
};
use crate::critical::{strong_articulation_points, strong_bridges};
use crate::error::Error;
use crate::graph::{Arc, Digraph, VertexId};
use crate::sbcc::strongly_biconnected_components;

/// Why a graph fails to be strongly biconnected. Vertex ids always refer to
/// the graph the witness was issued for (for residual graphs after a
/// deletion, ids are mapped back to the original).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `to` is not reachable from `from`.
    NotStronglyConnected { from: VertexId, to: VertexId },
    /// The graph is strongly connected but removing `cut_vertex` disconnects
    /// the underlying graph.
    UnderlyingNotBiconnected { cut_vertex: VertexId },
}

/// Smallest-index witness that `g` is not strongly biconnected, or `None`
/// if it is.
pub fn sb_witness(g: &Digraph) -> Option<Witness> {
    let n = g.vertex_count();
    if n <= 1 {
        return None;
    }
    if let Some(u) = first_unreached(g, VertexId(0), false) {
        return Some(Witness::NotStronglyConnected { from: VertexId(0), to: u });
    }
    if let Some(u) = first_unreached(g, VertexId(0), true) {
        return Some(Witness::NotStronglyConnected { from: u, to: VertexId(0) });
    }
    let d = block_decomposition(&g.underlying());
    d.cut_vertices
        .first()
        .map(|&c| Witness::UnderlyingNotBiconnected { cut_vertex: c })
}

fn first_unreached(g: &Digraph, from: VertexId, backward: bool) -> Option<VertexId> {
    let mut visited = vec![false; g.vertex_count() as usize];
    let mut queue = std::collections::VecDeque::new();
    visited[from.index()] = true;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        let nbrs = if backward { g.predecessors(v) } else { g.successors(v) };
        for &w in nbrs {
            if !visited[w.index()] {
                visited[w.index()] = true;
                queue.push_back(w);
            }
        }
    }
    (0..g.vertex_count()).map(VertexId).find(|v| !visited[v.index()])
}

fn require_strongly_biconnected(g: &Digraph) -> Result<(), Error> {
    match sb_witness(g) {
        None => Ok(()),
        Some(Witness::NotStronglyConnected { .. }) => Err(Error::NotStronglyConnected),
        Some(Witness::UnderlyingNotBiconnected { .. }) => Err(Error::UnderlyingNotBiconnected),
    }
}

/// Record of one augmentation run: the working arc set it started from and
/// every arc the loop added, with the component count observed before each
/// addition.
#[derive(Clone, Debug)]
pub struct AugmentationTrace {
    pub root: VertexId,
    /// Certificate arcs the loop started from.
    pub initial_arcs: Vec<Arc>,
    /// Arcs added, in addition order.
    pub added_arcs: Vec<Arc>,
    /// Strongly-biconnected-component count of the working subgraph right
    /// before each addition; strictly decreasing.
    pub component_counts: Vec<usize>,
}

impl AugmentationTrace {
    /// The final working arc set E_y: initial certificate plus additions.
    pub fn final_arcs(&self) -> Vec<Arc> {
        let mut out = self.initial_arcs.clone();
        out.extend_from_slice(&self.added_arcs);
        out
    }
}

/// Grows `certificate` into a strongly biconnected spanning subgraph of `g`
/// by repeatedly adding the first arc of `g` (input order) whose endpoints
/// share no strongly biconnected component of the working subgraph.
pub fn augment_to_strongly_biconnected(
    g: &Digraph,
    certificate: &ScssCertificate,
) -> Result<AugmentationTrace, Error> {
    require_strongly_biconnected(g)?;
    for a in &certificate.certificate_arcs {
        if !g.has_arc(a.tail, a.head) {
            return Err(Error::ForeignCertificateArc(a.tail.0, a.head.0));
        }
    }

    let n = g.vertex_count();
    let mut working: Vec<(u32, u32)> = certificate
        .certificate_arcs
        .iter()
        .map(|a| (a.tail.0, a.head.0))
        .collect();
    let mut in_working: HashSet<Arc> = certificate.certificate_arcs.iter().copied().collect();
    let mut added_arcs = Vec::new();
    let mut component_counts = Vec::new();

    loop {
        let h = Digraph::new(n, &working).expect("working arcs come from g");
        if is_strongly_biconnected(&h) {
            break;
        }
        // the certificate keeps the working subgraph strongly connected, so
        // a component cover always exists
        let cover = strongly_biconnected_components(&h)?;
        component_counts.push(cover.count());
        let pick = g
            .arcs()
            .iter()
            .copied()
            .find(|a| !in_working.contains(a) && !cover.share_component(a.tail, a.head));
        match pick {
            Some(a) => {
                working.push((a.tail.0, a.head.0));
                in_working.insert(a);
                added_arcs.push(a);
            }
            None => return Err(Error::AugmentationStuck),
        }
    }

    Ok(AugmentationTrace {
        root: certificate.root,
        initial_arcs: certificate.certificate_arcs.clone(),
        added_arcs,
        component_counts,
    })
}

/// Arcs whose deletion destroys strong biconnectivity, in arc construction
/// order, plus the augmentation trace that bounded the search.
///
/// Only arcs of the final working set are deletion-tested; strong bridges
/// are included without a test. Runs in O(nm).
pub fn b_bridges_fast(g: &Digraph) -> Result<(Vec<Arc>, AugmentationTrace), Error> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::TooFewVertices { required: 3, actual: n });
    }
    require_strongly_biconnected(g)?;
    let u_set: HashSet<Arc> = strong_bridges(g)?.into_iter().collect();
    let certificate = scss_certificate(g, VertexId(0))?;
    let trace = augment_to_strongly_biconnected(g, &certificate)?;
    let mut bridges: HashSet<Arc> = u_set.clone();
    for e in trace.final_arcs() {
        if !u_set.contains(&e) && !is_strongly_biconnected(&g.delete_arc(e)?) {
            bridges.insert(e);
        }
    }
    let out = g.arcs().iter().copied().filter(|a| bridges.contains(a)).collect();
    Ok((out, trace))
}

/// Vertices whose deletion destroys strong biconnectivity, sorted ascending.
///
/// Strong articulation points qualify without a test; every other vertex
/// gets one deletion test, so the cost is O((n - a)m) for a strong
/// articulation points. Needs n >= 4: removing a vertex from a 3-vertex
/// graph leaves a pair, below the domain of the definition.
pub fn b_articulation_points(g: &Digraph) -> Result<Vec<VertexId>, Error> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(Error::TooFewVertices { required: 4, actual: n });
    }
    require_strongly_biconnected(g)?;
    let saps: HashSet<VertexId> = strong_articulation_points(g)?.into_iter().collect();
    let mut out = Vec::new();
    for v in g.vertices() {
        if saps.contains(&v) {
            out.push(v);
        } else {
            let (h, _) = g.delete_vertex(v)?;
            if !is_strongly_biconnected(&h) {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// Full resilience report. Never fails: preconditions the b-sets need are
/// reported through the flags and the failure witness instead.
#[derive(Clone, Debug)]
pub struct BResilienceReport {
    pub strongly_connected: bool,
    pub strongly_biconnected: bool,
    /// Why the graph itself is not strongly biconnected, when it is not.
    pub failure: Option<Witness>,
    /// b-bridges with a witness for each deletion; absent when the graph is
    /// not strongly biconnected or has fewer than 3 vertices.
    pub b_bridges: Option<Vec<(Arc, Witness)>>,
    /// b-articulation points with witnesses, in original vertex ids; absent
    /// unless the graph is strongly biconnected with at least 4 vertices.
    pub b_articulation_points: Option<Vec<(VertexId, Witness)>>,
    pub is_2edge_sb: bool,
    pub is_2vertex_sb: bool,
    pub trace: Option<AugmentationTrace>,
}

/// Classifies a graph: strong biconnectivity, its failure sets, and the
/// derived 2-edge / 2-vertex resilience flags.
pub fn classify(g: &Digraph) -> BResilienceReport {
    let n = g.vertex_count();
    let strongly_connected = is_strongly_connected(g);
    let strongly_biconnected = strongly_connected && is_biconnected(&g.underlying());
    let failure = if strongly_biconnected { None } else { sb_witness(g) };
    let mut report = BResilienceReport {
        strongly_connected,
        strongly_biconnected,
        failure,
        b_bridges: None,
        b_articulation_points: None,
        is_2edge_sb: false,
        is_2vertex_sb: false,
        trace: None,
    };
    if !strongly_biconnected || n < 3 {
        return report;
    }

    let (bridges, trace) = b_bridges_fast(g).expect("preconditions verified above");
    report.is_2edge_sb = bridges.is_empty();
    report.b_bridges = Some(
        bridges
            .into_iter()
            .map(|e| {
                let residual = g.delete_arc(e).expect("bridge comes from g");
                let w = sb_witness(&residual).expect("deleting a b-bridge breaks the property");
                (e, w)
            })
            .collect(),
    );
    report.trace = Some(trace);

    if n >= 4 {
        let points = b_articulation_points(g).expect("preconditions verified above");
        report.is_2vertex_sb = points.is_empty();
        report.b_articulation_points = Some(
            points
                .into_iter()
                .map(|v| {
                    let (residual, old_of_new) =
                        g.delete_vertex(v).expect("point comes from g");
                    let w = sb_witness(&residual)
                        .expect("deleting a b-articulation point breaks the property");
                    (v, map_witness(w, &old_of_new))
                })
                .collect(),
        );
    }
    report
}

fn map_witness(w: Witness, old_of_new: &[VertexId]) -> Witness {
    match w {
        Witness::NotStronglyConnected { from, to } => Witness::NotStronglyConnected {
            from: old_of_new[from.index()],
            to: old_of_new[to.index()],
        },
        Witness::UnderlyingNotBiconnected { cut_vertex } => {
            Witness::UnderlyingNotBiconnected { cut_vertex: old_of_new[cut_vertex.index()] }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32, pairs: &[(u32, u32)]) -> Digraph {
        Digraph::new(n, pairs).unwrap()
    }

    fn arc(t: u32, h: u32) -> Arc {
        Arc::new(VertexId(t), VertexId(h))
    }

    #[test]
    fn plain_cycle_certificate_needs_no_augmentation() {
        let c = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let cert = scss_certificate(&c, VertexId(0)).unwrap();
        let trace = augment_to_strongly_biconnected(&c, &cert).unwrap();
        assert!(trace.added_arcs.is_empty());
        assert!(trace.component_counts.is_empty());
        assert_eq!(trace.final_arcs().len(), 3);
    }

    #[test]
    fn bidirected_triangle_needs_one_round() {
        let t = g(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)]);
        let cert = scss_certificate(&t, VertexId(0)).unwrap();
        // certificate is the bidirected path 0-1-2, two blocks
        let trace = augment_to_strongly_biconnected(&t, &cert).unwrap();
        assert_eq!(trace.component_counts, vec![2]);
        assert_eq!(trace.added_arcs, vec![arc(2, 0)]);
    }

    #[test]
    fn bidirected_square_closes_in_one_round() {
        let s = g(
            4,
            &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)],
        );
        let cert = scss_certificate(&s, VertexId(0)).unwrap();
        assert_eq!(cert.certificate_arcs.len(), 6);
        let trace = augment_to_strongly_biconnected(&s, &cert).unwrap();
        assert_eq!(trace.component_counts, vec![3]);
        assert_eq!(trace.added_arcs, vec![arc(3, 0)]);
        let final_pairs: Vec<(u32, u32)> =
            trace.final_arcs().iter().map(|a| (a.tail.0, a.head.0)).collect();
        assert!(is_strongly_biconnected(&g(4, &final_pairs)));
    }

    #[test]
    fn plain_cycle_bridges_are_every_arc() {
        let c = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let (b, trace) = b_bridges_fast(&c).unwrap();
        assert_eq!(b, vec![arc(0, 1), arc(1, 2), arc(2, 0)]);
        assert!(trace.added_arcs.is_empty());
    }

    #[test]
    fn bidirected_triangle_survives_any_single_deletion() {
        let t = g(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)]);
        let (b, _) = b_bridges_fast(&t).unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn bidirected_square_loses_every_vertex() {
        // removing any vertex leaves a bidirected path: still strongly
        // connected, no longer biconnected underneath
        let s = g(
            4,
            &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)],
        );
        let pts = b_articulation_points(&s).unwrap();
        assert_eq!(pts, vec![VertexId(0), VertexId(1), VertexId(2), VertexId(3)]);
    }

    #[test]
    fn complete_bidirected_four_is_fully_resilient() {
        let mut pairs = Vec::new();
        for u in 0..4u32 {
            for v in 0..4u32 {
                if u != v {
                    pairs.push((u, v));
                }
            }
        }
        let k4 = g(4, &pairs);
        let (b, _) = b_bridges_fast(&k4).unwrap();
        assert!(b.is_empty());
        assert!(b_articulation_points(&k4).unwrap().is_empty());
        let report = classify(&k4);
        assert!(report.is_2edge_sb && report.is_2vertex_sb);
    }

    #[test]
    fn classify_reports_failure_witnesses() {
        // not strongly connected
        let path = g(3, &[(0, 1), (1, 2)]);
        let r = classify(&path);
        assert!(!r.strongly_connected && !r.strongly_biconnected);
        assert!(matches!(r.failure, Some(Witness::NotStronglyConnected { .. })));
        assert!(r.b_bridges.is_none() && r.b_articulation_points.is_none());
        assert!(!r.is_2edge_sb && !r.is_2vertex_sb);

        // strongly connected, underlying is a path
        let bipath = g(3, &[(0, 1), (1, 0), (1, 2), (2, 1)]);
        let r = classify(&bipath);
        assert!(r.strongly_connected && !r.strongly_biconnected);
        assert_eq!(
            r.failure,
            Some(Witness::UnderlyingNotBiconnected { cut_vertex: VertexId(1) })
        );
    }

    #[test]
    fn classify_small_graph_conventions() {
        // strongly biconnected but too small for the failure-set notions
        let pair = g(2, &[(0, 1), (1, 0)]);
        let r = classify(&pair);
        assert!(r.strongly_biconnected);
        assert!(r.b_bridges.is_none() && r.b_articulation_points.is_none());
        assert!(!r.is_2edge_sb && !r.is_2vertex_sb);

        // n = 3: arc sets computed, vertex sets out of domain
        let tri = g(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)]);
        let r = classify(&tri);
        assert!(r.b_bridges.is_some() && r.b_articulation_points.is_none());
        assert!(r.is_2edge_sb && !r.is_2vertex_sb);
    }

    #[test]
    fn every_witness_reverifies() {
        let s = g(
            4,
            &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)],
        );
        let r = classify(&s);
        for (e, w) in r.b_bridges.as_ref().unwrap() {
            let residual = s.delete_arc(*e).unwrap();
            match *w {
                Witness::NotStronglyConnected { from, to } => {
                    assert!(!reaches(&residual, from, to));
                }
                Witness::UnderlyingNotBiconnected { cut_vertex } => {
                    let (h, _) = residual.delete_vertex(cut_vertex).unwrap();
                    assert!(!is_connected_underlying(&h));
                }
            }
        }
        for (v, w) in r.b_articulation_points.as_ref().unwrap() {
            let (residual, old_of_new) = s.delete_vertex(*v).unwrap();
            // witnesses are in original ids; translate to residual ids
            let back = |x: VertexId| {
                VertexId(old_of_new.iter().position(|&o| o == x).unwrap() as u32)
            };
            match *w {
                Witness::NotStronglyConnected { from, to } => {
                    assert!(!reaches(&residual, back(from), back(to)));
                }
                Witness::UnderlyingNotBiconnected { cut_vertex } => {
                    let (h, _) = residual.delete_vertex(back(cut_vertex)).unwrap();
                    assert!(!is_connected_underlying(&h));
                }
            }
        }
    }

    fn reaches(g: &Digraph, from: VertexId, to: VertexId) -> bool {
        let mut visited = vec![false; g.vertex_count() as usize];
        let mut stack = vec![from];
        visited[from.index()] = true;
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            for &w in g.successors(v) {
                if !visited[w.index()] {
                    visited[w.index()] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    fn is_connected_underlying(g: &Digraph) -> bool {
        let u = g.underlying();
        if u.vertex_count() == 0 {
            return true;
        }
        let mut visited = vec![false; u.vertex_count() as usize];
        let mut stack = vec![VertexId(0)];
        visited[0] = true;
        let mut seen = 1;
        while let Some(v) = stack.pop() {
            for &w in u.neighbors(v) {
                if !visited[w.index()] {
                    visited[w.index()] = true;
                    seen += 1;
                    stack.push(w);
                }
            }
        }
        seen == u.vertex_count()
    }
}
