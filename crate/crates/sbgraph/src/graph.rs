//! Immutable simple digraphs with dense vertex ids, plus the derived views
//! (reverse, underlying undirected graph, arc/vertex deletion, induced
//! subgraph) that every analysis in this crate is built on.
//!
//! Vertices are dense `u32` indices. Arbitrary external names live in an
//! optional label table and never leak into the algorithms; arc iteration
//! order is construction order, which all deterministic outputs rely on.

use std::collections::HashSet;
use std::fmt;

use crate::error::Error;

/// Dense vertex index, valid only for the graph it came from.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Directed arc. Self-loops never exist in a constructed graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    #[inline]
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        Arc { tail, head }
    }

    /// Same endpoints, opposite direction.
    #[inline]
    pub fn reversed(self) -> Self {
        Arc { tail: self.head, head: self.tail }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tail, self.head)
    }
}

/// Immutable simple directed graph.
#[derive(Clone, Debug)]
pub struct Digraph {
    n: u32,
    arcs: Vec<Arc>,
    out: Vec<Vec<VertexId>>,
    inc: Vec<Vec<VertexId>>,
    arc_set: HashSet<(u32, u32)>,
    labels: Option<Vec<u64>>,
}

impl Digraph {
    /// Builds a graph from `(tail, head)` pairs, dropping duplicate arcs
    /// (first occurrence wins) and reporting how many were dropped.
    /// Out-of-range endpoints and self-loops are construction errors.
    pub fn build(n: u32, pairs: &[(u32, u32)]) -> Result<(Self, usize), Error> {
        let mut arcs = Vec::with_capacity(pairs.len());
        let mut arc_set = HashSet::with_capacity(pairs.len());
        let mut dropped = 0usize;
        for &(u, v) in pairs {
            if u >= n {
                return Err(Error::EndpointOutOfRange { endpoint: u, n });
            }
            if v >= n {
                return Err(Error::EndpointOutOfRange { endpoint: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !arc_set.insert((u, v)) {
                dropped += 1;
                continue;
            }
            arcs.push(Arc::new(VertexId(u), VertexId(v)));
        }
        let mut out = vec![Vec::new(); n as usize];
        let mut inc = vec![Vec::new(); n as usize];
        for a in &arcs {
            out[a.tail.index()].push(a.head);
            inc[a.head.index()].push(a.tail);
        }
        Ok((Digraph { n, arcs, out, inc, arc_set, labels: None }, dropped))
    }

    /// `build` without the duplicate count, for callers that construct
    /// known-clean arc lists.
    pub fn new(n: u32, pairs: &[(u32, u32)]) -> Result<Self, Error> {
        Self::build(n, pairs).map(|(g, _)| g)
    }

    /// Attaches external vertex names; `labels[v]` is the name of vertex `v`.
    pub fn with_labels(mut self, labels: Vec<u64>) -> Self {
        debug_assert_eq!(labels.len(), self.n as usize);
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n).map(VertexId)
    }

    #[inline]
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Out-neighbors of `v` in arc construction order.
    #[inline]
    pub fn successors(&self, v: VertexId) -> &[VertexId] {
        &self.out[v.index()]
    }

    /// In-neighbors of `v` in arc construction order.
    #[inline]
    pub fn predecessors(&self, v: VertexId) -> &[VertexId] {
        &self.inc[v.index()]
    }

    #[inline]
    pub fn has_arc(&self, tail: VertexId, head: VertexId) -> bool {
        self.arc_set.contains(&(tail.0, head.0))
    }

    #[inline]
    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    /// External name of `v`; the dense index doubles as the name when no
    /// label table is attached.
    #[inline]
    pub fn label_of(&self, v: VertexId) -> u64 {
        match &self.labels {
            Some(l) => l[v.index()],
            None => v.0 as u64,
        }
    }

    /// Graph with every arc flipped. Arc order follows construction order of
    /// the original, so the reverse graph is just as deterministic.
    pub fn reverse(&self) -> Digraph {
        let pairs: Vec<(u32, u32)> = self.arcs.iter().map(|a| (a.head.0, a.tail.0)).collect();
        let mut g = Digraph::new(self.n, &pairs).expect("reversal preserves validity");
        g.labels = self.labels.clone();
        g
    }

    /// Same vertices, one arc removed.
    pub fn delete_arc(&self, e: Arc) -> Result<Digraph, Error> {
        if !self.has_arc(e.tail, e.head) {
            return Err(Error::ArcNotPresent(e.tail.0, e.head.0));
        }
        let pairs: Vec<(u32, u32)> = self
            .arcs
            .iter()
            .filter(|a| **a != e)
            .map(|a| (a.tail.0, a.head.0))
            .collect();
        let mut g = Digraph::new(self.n, &pairs).expect("subset of a valid arc list");
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Removes `w` and its incident arcs. Remaining vertices are re-densified;
    /// the returned map gives the original id of each new vertex.
    pub fn delete_vertex(&self, w: VertexId) -> Result<(Digraph, Vec<VertexId>), Error> {
        if w.0 >= self.n {
            return Err(Error::VertexOutOfRange { vertex: w.0, n: self.n });
        }
        if self.n < 2 {
            return Err(Error::TooFewVertices { required: 2, actual: self.n });
        }
        let keep: Vec<VertexId> = self.vertices().filter(|&v| v != w).collect();
        Ok((self.induced(&keep), keep))
    }

    /// Subgraph induced by `verts` (duplicates not allowed; any order).
    /// New ids follow the order of `verts`; labels carry over.
    pub fn induced_subgraph(
        &self,
        verts: &[VertexId],
    ) -> Result<(Digraph, Vec<VertexId>), Error> {
        let mut seen = vec![false; self.n as usize];
        for &v in verts {
            if v.0 >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v.0, n: self.n });
            }
            debug_assert!(!seen[v.index()], "duplicate vertex in induced_subgraph");
            seen[v.index()] = true;
        }
        Ok((self.induced(verts), verts.to_vec()))
    }

    fn induced(&self, keep: &[VertexId]) -> Digraph {
        let mut new_of_old: Vec<Option<VertexId>> = vec![None; self.n as usize];
        for (i, &v) in keep.iter().enumerate() {
            new_of_old[v.index()] = Some(VertexId(i as u32));
        }
        let pairs: Vec<(u32, u32)> = self
            .arcs
            .iter()
            .filter_map(|a| {
                let t = new_of_old[a.tail.index()]?;
                let h = new_of_old[a.head.index()]?;
                Some((t.0, h.0))
            })
            .collect();
        let mut g =
            Digraph::new(keep.len() as u32, &pairs).expect("induced arcs stay in range");
        g.labels = Some(keep.iter().map(|&v| self.label_of(v)).collect());
        g
    }

    /// Forgets directions; antiparallel arc pairs collapse to one edge.
    pub fn underlying(&self) -> UndirectedView {
        let mut edge_set: HashSet<(u32, u32)> = HashSet::with_capacity(self.arcs.len());
        let mut edges = Vec::new();
        let mut adj = vec![Vec::new(); self.n as usize];
        for a in &self.arcs {
            let (x, y) = if a.tail.0 < a.head.0 {
                (a.tail.0, a.head.0)
            } else {
                (a.head.0, a.tail.0)
            };
            if edge_set.insert((x, y)) {
                edges.push((VertexId(x), VertexId(y)));
                adj[x as usize].push(VertexId(y));
                adj[y as usize].push(VertexId(x));
            }
        }
        UndirectedView { n: self.n, edges, adj }
    }
}

/// Undirected shadow of a digraph: the edge `{u, v}` exists iff at least one
/// of the two arc orientations does.
#[derive(Clone, Debug)]
pub struct UndirectedView {
    n: u32,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl UndirectedView {
    #[inline]
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(low, high)` pairs, in first-appearance order of the arcs
    /// that produced them.
    #[inline]
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n).map(VertexId)
    }
}
