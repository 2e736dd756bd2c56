//! Connectivity predicates and decompositions: strong connectivity, strongly
//! connected components, blocks / cut vertices / bridges of an undirected
//! view, the strongly-biconnected predicate, and a two-spanning-tree
//! certificate of strong connectivity.
//!
//! All traversals use explicit stacks and visit neighbors in adjacency
//! (construction) order, so every result is deterministic for a given arc
//! sequence.

use crate::error::Error;
use crate::graph::{Arc, Digraph, UndirectedView, VertexId};

/// True iff every vertex reaches every other vertex. Graphs with fewer than
/// two vertices count as strongly connected.
///
/// Implemented as a forward and a backward breadth-first search from vertex
/// 0; deliberately independent of [`strongly_connected_components`] so the
/// two can cross-check each other in tests.
pub fn is_strongly_connected(g: &Digraph) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    reachable_count(g, VertexId(0), false) == n && reachable_count(g, VertexId(0), true) == n
}

fn reachable_count(g: &Digraph, from: VertexId, backward: bool) -> u32 {
    let mut visited = vec![false; g.vertex_count() as usize];
    let mut queue = std::collections::VecDeque::new();
    visited[from.index()] = true;
    queue.push_back(from);
    let mut count = 1u32;
    while let Some(v) = queue.pop_front() {
        let nbrs = if backward { g.predecessors(v) } else { g.successors(v) };
        for &w in nbrs {
            if !visited[w.index()] {
                visited[w.index()] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count
}

/// Maximal strongly connected vertex sets, each sorted ascending, emitted in
/// reverse topological order of the condensation (a component is listed
/// before any component with an arc into it).
pub fn strongly_connected_components(g: &Digraph) -> Vec<Vec<VertexId>> {
    const UNSET: u32 = u32::MAX;
    let n = g.vertex_count() as usize;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut call: Vec<(u32, usize)> = Vec::new();
    let mut next = 0u32;
    let mut comps = Vec::new();

    for root in 0..n as u32 {
        if disc[root as usize] != UNSET {
            continue;
        }
        disc[root as usize] = next;
        low[root as usize] = next;
        next += 1;
        stack.push(root);
        on_stack[root as usize] = true;
        call.push((root, 0));
        while let Some(top) = call.last_mut() {
            let v = top.0;
            let succs = g.successors(VertexId(v));
            if top.1 < succs.len() {
                let w = succs[top.1].0;
                top.1 += 1;
                if disc[w as usize] == UNSET {
                    disc[w as usize] = next;
                    low[w as usize] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    call.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                call.pop();
                if let Some(parent) = call.last() {
                    let p = parent.0 as usize;
                    low[p] = low[p].min(low[v as usize]);
                }
                if low[v as usize] == disc[v as usize] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("component root is on the stack");
                        on_stack[w as usize] = false;
                        comp.push(VertexId(w));
                        if w == v {
                            break;
                        }
                    }
                    comp.sort();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// Blocks (maximal biconnected subgraphs), cut vertices, and bridges of an
/// undirected view. An isolated vertex forms a singleton block, so a
/// connected graph is biconnected iff it decomposes into exactly one block.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    /// Vertex set of each block, sorted ascending, in pop order of the
    /// underlying depth-first search.
    pub blocks: Vec<Vec<VertexId>>,
    /// Sorted ascending; exactly the vertices lying in two or more blocks.
    pub cut_vertices: Vec<VertexId>,
    /// Edges whose removal disconnects their component, as `(low, high)`
    /// pairs sorted ascending. A bridge is the same thing as a two-vertex
    /// block.
    pub undirected_bridges: Vec<(VertexId, VertexId)>,
}

/// Hopcroft-Tarjan block decomposition, iterative with an explicit edge
/// stack.
pub fn block_decomposition(u: &UndirectedView) -> BlockDecomposition {
    const UNSET: u32 = u32::MAX;
    let n = u.vertex_count() as usize;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut parent = vec![UNSET; n];
    let mut next = 0u32;
    let mut edge_stack: Vec<(u32, u32)> = Vec::new();
    let mut call: Vec<(u32, usize)> = Vec::new();
    let mut blocks: Vec<Vec<VertexId>> = Vec::new();
    let mut is_cut = vec![false; n];

    for root in 0..n as u32 {
        if disc[root as usize] != UNSET {
            continue;
        }
        if u.neighbors(VertexId(root)).is_empty() {
            blocks.push(vec![VertexId(root)]);
            disc[root as usize] = next;
            next += 1;
            continue;
        }
        disc[root as usize] = next;
        low[root as usize] = next;
        next += 1;
        call.push((root, 0));
        let mut root_children = 0u32;
        while let Some(top) = call.last_mut() {
            let v = top.0;
            let nbrs = u.neighbors(VertexId(v));
            if top.1 < nbrs.len() {
                let w = nbrs[top.1].0;
                top.1 += 1;
                if disc[w as usize] == UNSET {
                    parent[w as usize] = v;
                    disc[w as usize] = next;
                    low[w as usize] = next;
                    next += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    call.push((w, 0));
                } else if w != parent[v as usize] && disc[w as usize] < disc[v as usize] {
                    // back edge; the disc comparison keeps each edge on the
                    // stack exactly once
                    edge_stack.push((v, w));
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                call.pop();
                let p = parent[v as usize];
                if p == UNSET {
                    continue;
                }
                low[p as usize] = low[p as usize].min(low[v as usize]);
                if low[v as usize] >= disc[p as usize] {
                    // edges above (p, v) on the stack form one block
                    let mut members: Vec<VertexId> = Vec::new();
                    let mut seen = std::collections::HashSet::new();
                    loop {
                        let (a, b) = edge_stack.pop().expect("tree edge still on stack");
                        for x in [a, b] {
                            if seen.insert(x) {
                                members.push(VertexId(x));
                            }
                        }
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    members.sort();
                    blocks.push(members);
                    if p != root {
                        is_cut[p as usize] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root as usize] = true;
        }
    }

    let cut_vertices: Vec<VertexId> = (0..n as u32)
        .filter(|&v| is_cut[v as usize])
        .map(VertexId)
        .collect();
    let mut undirected_bridges: Vec<(VertexId, VertexId)> = blocks
        .iter()
        .filter(|b| b.len() == 2)
        .map(|b| (b[0], b[1]))
        .collect();
    undirected_bridges.sort();
    BlockDecomposition { blocks, cut_vertices, undirected_bridges }
}

/// True iff the view is connected and has no cut vertex. Conventions: the
/// empty graph, a single vertex, and a single edge all count as biconnected.
///
/// This is a standalone articulation scan on purpose: the brute-force
/// component oracle relies on this predicate, so it must not share code with
/// [`block_decomposition`].
pub fn is_biconnected(u: &UndirectedView) -> bool {
    const UNSET: u32 = u32::MAX;
    let n = u.vertex_count() as usize;
    if n <= 1 {
        return true;
    }
    let mut disc = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut parent = vec![UNSET; n];
    let mut call: Vec<(u32, usize)> = vec![(0, 0)];
    let mut next = 0u32;
    disc[0] = 0;
    low[0] = 0;
    next += 1;
    let mut visited = 1usize;
    let mut root_children = 0u32;
    while let Some(top) = call.last_mut() {
        let v = top.0;
        let nbrs = u.neighbors(VertexId(v));
        if top.1 < nbrs.len() {
            let w = nbrs[top.1].0;
            top.1 += 1;
            if disc[w as usize] == UNSET {
                parent[w as usize] = v;
                disc[w as usize] = next;
                low[w as usize] = next;
                next += 1;
                visited += 1;
                if v == 0 {
                    root_children += 1;
                }
                call.push((w, 0));
            } else if w != parent[v as usize] {
                low[v as usize] = low[v as usize].min(disc[w as usize]);
            }
        } else {
            call.pop();
            let p = parent[v as usize];
            if p == UNSET {
                continue;
            }
            low[p as usize] = low[p as usize].min(low[v as usize]);
            if p != 0 && low[v as usize] >= disc[p as usize] {
                return false;
            }
        }
    }
    visited == n && root_children < 2
}

/// Strongly connected with a biconnected underlying graph.
pub fn is_strongly_biconnected(g: &Digraph) -> bool {
    is_strongly_connected(g) && is_biconnected(&g.underlying())
}

/// Strong-connectivity certificate rooted at `y`: a depth-first spanning
/// tree of the graph plus the reversal of a depth-first spanning tree of the
/// reverse graph. The union is a strongly connected spanning subgraph with
/// at most `2(n-1)` arcs.
#[derive(Clone, Debug)]
pub struct ScssCertificate {
    pub root: VertexId,
    /// Tree arcs away from the root, in discovery order; `n - 1` arcs.
    pub forward_tree_arcs: Vec<Arc>,
    /// Arcs toward the root (a reversed spanning tree of the reverse graph),
    /// in discovery order; `n - 1` arcs.
    pub backward_tree_arcs: Vec<Arc>,
    /// Union of the two, forward arcs first, duplicates dropped.
    pub certificate_arcs: Vec<Arc>,
}

pub fn scss_certificate(g: &Digraph, y: VertexId) -> Result<ScssCertificate, Error> {
    if y.0 >= g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: y.0, n: g.vertex_count() });
    }
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let forward = dfs_tree_arcs(g, y, false);
    let backward = dfs_tree_arcs(g, y, true);
    let mut seen: std::collections::HashSet<Arc> = forward.iter().copied().collect();
    let mut certificate_arcs = forward.clone();
    for &a in &backward {
        if seen.insert(a) {
            certificate_arcs.push(a);
        }
    }
    Ok(ScssCertificate {
        root: y,
        forward_tree_arcs: forward,
        backward_tree_arcs: backward,
        certificate_arcs,
    })
}

/// Spanning-tree arcs of a depth-first search from `root`, expressed in the
/// graph's own orientation. `backward` walks predecessor lists, producing
/// the reversal of a spanning tree of the reverse graph.
fn dfs_tree_arcs(g: &Digraph, root: VertexId, backward: bool) -> Vec<Arc> {
    let n = g.vertex_count() as usize;
    let mut visited = vec![false; n];
    visited[root.index()] = true;
    let mut stack: Vec<(u32, usize)> = vec![(root.0, 0)];
    let mut tree = Vec::new();
    while let Some(top) = stack.last_mut() {
        let v = VertexId(top.0);
        let nbrs = if backward { g.predecessors(v) } else { g.successors(v) };
        if top.1 < nbrs.len() {
            let w = nbrs[top.1];
            top.1 += 1;
            if !visited[w.index()] {
                visited[w.index()] = true;
                tree.push(if backward { Arc::new(w, v) } else { Arc::new(v, w) });
                stack.push((w.0, 0));
            }
        } else {
            stack.pop();
        }
    }
    tree
}
