//! Brute-force reference implementations. Each one answers by definition:
//! delete an element and re-test, or enumerate subsets outright. They are the
//! ground truth the fast paths are checked against, so they stay deliberately
//! simple and share nothing with the fast paths beyond the graph type and the
//! two connectivity predicates.

use crate::connectivity::{is_strongly_biconnected, is_strongly_connected};
use crate::critical::CriticalSets;
use crate::error::Error;
use crate::graph::{Arc, Digraph, VertexId};
use crate::sbcc::SbccCover;

/// Largest vertex count [`naive_sbcc`] will enumerate subsets for.
pub const SBCC_ENUMERATION_LIMIT: u32 = 12;

fn require_strongly_biconnected(g: &Digraph) -> Result<(), Error> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    if !is_strongly_biconnected(g) {
        return Err(Error::UnderlyingNotBiconnected);
    }
    Ok(())
}

/// Every arc whose deletion breaks strong biconnectivity, each arc tested
/// independently, in arc construction order.
pub fn naive_b_bridges(g: &Digraph) -> Result<Vec<Arc>, Error> {
    require_strongly_biconnected(g)?;
    let mut out = Vec::new();
    for &e in g.arcs() {
        if !is_strongly_biconnected(&g.delete_arc(e)?) {
            out.push(e);
        }
    }
    Ok(out)
}

/// Every vertex whose deletion breaks strong biconnectivity, ascending.
pub fn naive_b_articulation_points(g: &Digraph) -> Result<Vec<VertexId>, Error> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(Error::TooFewVertices { required: 4, actual: n });
    }
    require_strongly_biconnected(g)?;
    let mut out = Vec::new();
    for v in g.vertices() {
        let (h, _) = g.delete_vertex(v)?;
        if !is_strongly_biconnected(&h) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Strong bridges and strong articulation points by per-element deletion.
pub fn naive_critical_sets(g: &Digraph) -> Result<CriticalSets, Error> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let mut strong_bridges = Vec::new();
    for &e in g.arcs() {
        if !is_strongly_connected(&g.delete_arc(e)?) {
            strong_bridges.push(e);
        }
    }
    let mut strong_articulation_points = Vec::new();
    if g.vertex_count() >= 2 {
        for v in g.vertices() {
            let (h, _) = g.delete_vertex(v)?;
            if !is_strongly_connected(&h) {
                strong_articulation_points.push(v);
            }
        }
    }
    Ok(CriticalSets { strong_bridges, strong_articulation_points })
}

/// Strongly biconnected components by subset enumeration: every maximal
/// vertex set whose induced subgraph is strongly biconnected. Larger sets are
/// tested first, so maximality is by construction. Guarded to
/// [`SBCC_ENUMERATION_LIMIT`] vertices.
pub fn naive_sbcc(g: &Digraph) -> Result<SbccCover, Error> {
    let n = g.vertex_count();
    if n > SBCC_ENUMERATION_LIMIT {
        return Err(Error::ExhaustiveSizeGuard { limit: SBCC_ENUMERATION_LIMIT, actual: n });
    }
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let mut accepted_masks: Vec<u32> = Vec::new();
    let mut components: Vec<Vec<VertexId>> = Vec::new();
    for size in (1..=n).rev() {
        for mask in 0u32..(1u32 << n) {
            if mask.count_ones() != size {
                continue;
            }
            if accepted_masks.iter().any(|&a| a & mask == mask) {
                continue;
            }
            let verts: Vec<VertexId> =
                (0..n).filter(|&v| mask & (1 << v) != 0).map(VertexId).collect();
            let (sub, _) = g.induced_subgraph(&verts)?;
            if is_strongly_biconnected(&sub) {
                accepted_masks.push(mask);
                components.push(verts);
            }
        }
    }
    Ok(SbccCover::from_components(components, n))
}
