//! Strongly biconnected components of a strongly connected digraph: the
//! maximal vertex sets whose induced subgraphs are strongly connected with
//! biconnected underlying graphs. Distinct components overlap in at most one
//! vertex, so they form a cover, not a partition.
//!
//! The components are exactly the blocks of the underlying graph. Sketch of
//! why blocks suffice: inside a strongly connected graph, a directed path
//! between two block vertices that leaves the block must re-enter through
//! the single cut vertex it left from, so it can be shortcut at that vertex
//! into a path staying inside the block; hence each block induces a strongly
//! connected (and biconnected) subgraph, and nothing larger can, because a
//! set spanning two blocks contains a cut vertex of its own induced
//! underlying graph. The exhaustive oracle in the test suite re-derives the
//! cover by subset enumeration on every small instance; if the two ever
//! disagree, the oracle wins.

use crate::connectivity::{block_decomposition, is_strongly_connected};
use crate::error::Error;
use crate::graph::{Digraph, VertexId};

/// Cover of a graph by its strongly biconnected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SbccCover {
    components: Vec<Vec<VertexId>>,
    membership: Vec<Vec<usize>>,
}

impl SbccCover {
    pub(crate) fn from_components(components: Vec<Vec<VertexId>>, n: u32) -> Self {
        let mut membership = vec![Vec::new(); n as usize];
        for (i, comp) in components.iter().enumerate() {
            for v in comp {
                membership[v.index()].push(i);
            }
        }
        SbccCover { components, membership }
    }

    /// Component vertex sets, each sorted ascending.
    #[inline]
    pub fn components(&self) -> &[Vec<VertexId>] {
        &self.components
    }

    /// Number of components.
    #[inline]
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// Indices of the components containing `v`, ascending.
    #[inline]
    pub fn membership(&self, v: VertexId) -> &[usize] {
        &self.membership[v.index()]
    }

    /// True iff some single component contains both vertices.
    pub fn share_component(&self, u: VertexId, w: VertexId) -> bool {
        let (mut a, mut b) = (self.membership(u).iter(), self.membership(w).iter());
        let (mut x, mut y) = (a.next(), b.next());
        while let (Some(&i), Some(&j)) = (x, y) {
            match i.cmp(&j) {
                std::cmp::Ordering::Less => x = a.next(),
                std::cmp::Ordering::Greater => y = b.next(),
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

/// Strongly biconnected components of a strongly connected graph, in
/// discovery order of the block decomposition of the underlying graph.
pub fn strongly_biconnected_components(g: &Digraph) -> Result<SbccCover, Error> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let blocks = block_decomposition(&g.underlying()).blocks;
    Ok(SbccCover::from_components(blocks, g.vertex_count()))
}
