//! Single-failure analysis of strongly connected digraphs: the arcs and
//! vertices whose individual removal already destroys strong connectivity.
//!
//! Both computations reduce to dominator trees of the graph and its reverse
//! from one fixed root (vertex 0, for determinism): an arc kills strong
//! connectivity iff it is a flowgraph bridge in one of the two orientations,
//! and a vertex does iff it is internal in one of the two dominator trees,
//! with the root itself settled by one explicit deletion check. The
//! brute-force deletion oracle fences both claims in the test suite.

use std::collections::HashSet;

use crate::connectivity::is_strongly_connected;
use crate::dominators::{dominator_tree, flowgraph_bridges};
use crate::error::Error;
use crate::graph::{Arc, Digraph, VertexId};

/// Strong bridges and strong articulation points of one graph.
#[derive(Clone, Debug)]
pub struct CriticalSets {
    /// In arc construction order.
    pub strong_bridges: Vec<Arc>,
    /// Sorted ascending.
    pub strong_articulation_points: Vec<VertexId>,
}

impl CriticalSets {
    /// Number of strong articulation points.
    pub fn sap_count(&self) -> usize {
        self.strong_articulation_points.len()
    }
}

/// Arcs whose deletion leaves a graph that is not strongly connected,
/// in arc construction order.
pub fn strong_bridges(g: &Digraph) -> Result<Vec<Arc>, Error> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    if g.vertex_count() <= 1 {
        return Ok(Vec::new());
    }
    let s = VertexId(0);
    let forward = flowgraph_bridges(g, s)?;
    let backward = flowgraph_bridges(&g.reverse(), s)?;
    let mut critical: HashSet<Arc> = forward.into_iter().collect();
    for a in backward {
        critical.insert(a.reversed());
    }
    Ok(g.arcs().iter().copied().filter(|a| critical.contains(a)).collect())
}

/// Vertices whose deletion leaves a graph that is not strongly connected,
/// sorted ascending. Needs at least three vertices; on two, removal leaves a
/// single vertex and the notion degenerates.
pub fn strong_articulation_points(g: &Digraph) -> Result<Vec<VertexId>, Error> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::TooFewVertices { required: 3, actual: n });
    }
    let s = VertexId(0);
    let mut is_sap = vec![false; n as usize];
    for t in [dominator_tree(g, s)?, dominator_tree(&g.reverse(), s)?] {
        for v in g.vertices() {
            if let Some(d) = t.idom(v) {
                if d != s {
                    is_sap[d.index()] = true;
                }
            }
        }
    }
    // the root never shows up as an internal vertex of its own trees
    let (without_s, _) = g.delete_vertex(s)?;
    if !is_strongly_connected(&without_s) {
        is_sap[s.index()] = true;
    }
    Ok(g.vertices().filter(|v| is_sap[v.index()]).collect())
}

/// Both single-failure sets at once.
pub fn critical_sets(g: &Digraph) -> Result<CriticalSets, Error> {
    Ok(CriticalSets {
        strong_bridges: strong_bridges(g)?,
        strong_articulation_points: strong_articulation_points(g)?,
    })
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
    fn plain_cycle_is_all_critical() {
        let c = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(strong_bridges(&c).unwrap(), vec![arc(0, 1), arc(1, 2), arc(2, 0)]);
        assert_eq!(
            strong_articulation_points(&c).unwrap(),
            vec![VertexId(0), VertexId(1), VertexId(2)]
        );
    }

    #[test]
    fn bidirected_path_has_middle_articulation_only() {
        let p = g(3, &[(0, 1), (1, 0), (1, 2), (2, 1)]);
        assert_eq!(
            strong_bridges(&p).unwrap(),
            vec![arc(0, 1), arc(1, 0), arc(1, 2), arc(2, 1)]
        );
        assert_eq!(strong_articulation_points(&p).unwrap(), vec![VertexId(1)]);
    }

    #[test]
    fn bidirected_triangle_has_no_critical_elements() {
        let t = g(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)]);
        assert!(strong_bridges(&t).unwrap().is_empty());
        assert!(strong_articulation_points(&t).unwrap().is_empty());
    }

    #[test]
    fn root_detected_via_explicit_deletion() {
        // 1 <-> 0 <-> 2: vertex 0 is the only strong articulation point, and
        // it happens to be the dominator root
        let star = g(3, &[(0, 1), (1, 0), (0, 2), (2, 0)]);
        assert_eq!(strong_articulation_points(&star).unwrap(), vec![VertexId(0)]);
    }

    #[test]
    fn preconditions_are_errors() {
        let path = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(strong_bridges(&path).unwrap_err(), Error::NotStronglyConnected);
        let two = g(2, &[(0, 1), (1, 0)]);
        assert_eq!(
            strong_articulation_points(&two).unwrap_err(),
            Error::TooFewVertices { required: 3, actual: 2 }
        );
        assert_eq!(strong_bridges(&two).unwrap(), vec![arc(0, 1), arc(1, 0)]);
    }

    #[test]
    fn deletion_oracle_agreement_on_small_mixed_graph() {
        // strongly connected, mixes bidirected and one-way arcs
        let h = g(
            5,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (1, 0), (3, 2)],
        );
        assert!(is_strongly_connected(&h));
        let fast = strong_bridges(&h).unwrap();
        let naive: Vec<Arc> = h
            .arcs()
            .iter()
            .copied()
            .filter(|&e| !is_strongly_connected(&h.delete_arc(e).unwrap()))
            .collect();
        assert_eq!(fast, naive);

        let fast = strong_articulation_points(&h).unwrap();
        let naive: Vec<VertexId> = h
            .vertices()
            .filter(|&v| !is_strongly_connected(&h.delete_vertex(v).unwrap().0))
            .collect();
        assert_eq!(fast, naive);
    }
}
