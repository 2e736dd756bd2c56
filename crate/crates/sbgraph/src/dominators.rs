//! Dominator trees of rooted flowgraphs and the arcs that every root-to-v
//! path must cross. This is the machinery behind the single-failure analyses
//! in [`crate::critical`].
//!
//! The construction is the semi-NCA variant of Lengauer-Tarjan: one
//! depth-first numbering pass, semidominators in reverse preorder with
//! path-compressed lookups, then immediate dominators by walking partial
//! results upward in preorder. Everything is iterative; deep graphs cannot
//! overflow the call stack. Worst case O(n^2) on pathological inputs, in
//! practice close to linear, and well inside the O(nm) budget of the callers.

use crate::error::Error;
use crate::graph::{Arc, Digraph, VertexId};

#[derive(Clone, Debug)]
pub struct DominatorTree {
    root: VertexId,
    idom: Vec<Option<VertexId>>,
    reachable: Vec<bool>,
    // preorder/postorder intervals on the dominator tree itself, for O(1)
    // ancestor queries
    pre: Vec<u32>,
    post: Vec<u32>,
}

impl DominatorTree {
    #[inline]
    pub fn root(&self) -> VertexId {
        self.root
    }

    /// Immediate dominator of `v`; `None` for the root and for vertices the
    /// root cannot reach.
    #[inline]
    pub fn idom(&self, v: VertexId) -> Option<VertexId> {
        self.idom[v.index()]
    }

    #[inline]
    pub fn is_reachable(&self, v: VertexId) -> bool {
        self.reachable[v.index()]
    }

    /// True iff every root-to-`v` path passes through `u` (`u = v` counts).
    pub fn dominates(&self, u: VertexId, v: VertexId) -> Result<bool, Error> {
        for x in [u, v] {
            if x.index() >= self.reachable.len() {
                return Err(Error::VertexOutOfRange {
                    vertex: x.0,
                    n: self.reachable.len() as u32,
                });
            }
            if !self.reachable[x.index()] {
                return Err(Error::UnreachableVertex(x.0));
            }
        }
        Ok(self.pre[u.index()] <= self.pre[v.index()]
            && self.post[v.index()] <= self.post[u.index()])
    }
}

/// Immediate dominators of all vertices reachable from `root`.
pub fn dominator_tree(g: &Digraph, root: VertexId) -> Result<DominatorTree, Error> {
    let n = g.vertex_count();
    if root.0 >= n {
        return Err(Error::VertexOutOfRange { vertex: root.0, n });
    }

    // depth-first preorder numbering, 1-based; dfn 0 means unreachable
    let mut dfn = vec![0u32; n as usize];
    let mut vertex = vec![0u32; n as usize + 1]; // number -> vertex
    let mut dfs_parent = vec![0u32; n as usize + 1]; // number -> number
    let mut next = 0u32;
    {
        let mut stack: Vec<(u32, usize)> = Vec::new();
        next += 1;
        dfn[root.index()] = next;
        vertex[next as usize] = root.0;
        stack.push((root.0, 0));
        while let Some(top) = stack.last_mut() {
            let v = VertexId(top.0);
            let succs = g.successors(v);
            if top.1 < succs.len() {
                let w = succs[top.1];
                top.1 += 1;
                if dfn[w.index()] == 0 {
                    next += 1;
                    dfn[w.index()] = next;
                    vertex[next as usize] = w.0;
                    dfs_parent[next as usize] = dfn[v.index()];
                    stack.push((w.0, 0));
                }
            } else {
                stack.pop();
            }
        }
    }
    let cnt = next as usize;

    // semidominators in reverse preorder; `ancestor` starts as the DFS tree
    // and is rewired by path compression, `label[x]` tracks the vertex with
    // minimal semi on the compressed path above x
    let mut semi: Vec<u32> = (0..=cnt as u32).collect();
    let mut label: Vec<u32> = (0..=cnt as u32).collect();
    let mut ancestor: Vec<u32> = dfs_parent.clone();
    let mut idom_num: Vec<u32> = dfs_parent.clone();
    let mut path: Vec<u32> = Vec::new();
    for w in (2..=cnt).rev() {
        let w32 = w as u32;
        let mut s = dfs_parent[w];
        for &p in g.predecessors(VertexId(vertex[w])) {
            let pn = dfn[p.index()];
            if pn == 0 {
                continue;
            }
            let u = eval(pn, w32 + 1, &mut ancestor, &semi, &mut label, &mut path);
            s = s.min(semi[u as usize]);
        }
        semi[w] = s;
    }

    // idom(w) = nearest common ancestor of the DFS parent and the
    // semidominator in the tree built so far; ascending order makes every
    // idom met on the climb already final
    for w in 2..=cnt {
        let sd = semi[w];
        let mut c = idom_num[w];
        while c > sd {
            c = idom_num[c as usize];
        }
        idom_num[w] = c;
    }

    // back to vertex space
    let mut idom: Vec<Option<VertexId>> = vec![None; n as usize];
    let mut reachable = vec![false; n as usize];
    reachable[root.index()] = true;
    for w in 2..=cnt {
        let v = vertex[w] as usize;
        reachable[v] = true;
        idom[v] = Some(VertexId(vertex[idom_num[w] as usize]));
    }

    // pre/post numbering of the dominator tree for ancestor queries;
    // children in preorder-number order keeps this deterministic
    let mut children: Vec<Vec<u32>> = vec![Vec::new(); cnt + 1];
    for w in 2..=cnt {
        children[idom_num[w] as usize].push(w as u32);
    }
    let mut pre = vec![0u32; n as usize];
    let mut post = vec![0u32; n as usize];
    let mut clock = 0u32;
    let mut stack: Vec<(u32, usize)> = vec![(1, 0)];
    pre[vertex[1] as usize] = clock;
    clock += 1;
    while let Some(top) = stack.last_mut() {
        let w = top.0 as usize;
        if top.1 < children[w].len() {
            let c = children[w][top.1];
            top.1 += 1;
            pre[vertex[c as usize] as usize] = clock;
            clock += 1;
            stack.push((c, 0));
        } else {
            post[vertex[w] as usize] = clock;
            clock += 1;
            stack.pop();
        }
    }

    Ok(DominatorTree { root, idom, reachable, pre, post })
}

fn eval(
    v: u32,
    last_linked: u32,
    ancestor: &mut [u32],
    semi: &[u32],
    label: &mut [u32],
    path: &mut Vec<u32>,
) -> u32 {
    if ancestor[v as usize] < last_linked {
        // v hangs off a forest root: its label is already exact
        return label[v as usize];
    }
    // climb to the forest root, remembering the chain
    path.clear();
    let mut u = v;
    loop {
        path.push(u);
        u = ancestor[u as usize];
        if ancestor[u as usize] < last_linked {
            break;
        }
    }
    // compress the whole chain onto the root's parent, folding
    // minimal-semi labels downward as we unwind
    let top_parent = ancestor[u as usize];
    let mut best = label[u as usize];
    while let Some(x) = path.pop() {
        ancestor[x as usize] = top_parent;
        if semi[best as usize] < semi[label[x as usize] as usize] {
            label[x as usize] = best;
        } else {
            best = label[x as usize];
        }
    }
    label[v as usize]
}

/// Arcs `(u, v)` that lie on every path from `root` to `v`. Requires every
/// vertex to be reachable from `root`.
///
/// Characterization: `(u, v)` qualifies iff `u` is the immediate dominator
/// of `v` and every other in-arc `(w, v)` comes from a `w` that `v` itself
/// dominates (so no alternative entry into `v` survives without `v`).
pub fn flowgraph_bridges(g: &Digraph, root: VertexId) -> Result<Vec<Arc>, Error> {
    let t = dominator_tree(g, root)?;
    for v in g.vertices() {
        if !t.is_reachable(v) {
            return Err(Error::UnreachableVertex(v.0));
        }
    }
    let mut head_ok = vec![false; g.vertex_count() as usize];
    for v in g.vertices() {
        let Some(d) = t.idom(v) else { continue };
        if !g.has_arc(d, v) {
            continue;
        }
        let mut ok = true;
        for &w in g.predecessors(v) {
            if w != d && !t.dominates(v, w)? {
                ok = false;
                break;
            }
        }
        head_ok[v.index()] = ok;
    }
    Ok(g
        .arcs()
        .iter()
        .copied()
        .filter(|a| head_ok[a.head.index()] && t.idom(a.head) == Some(a.tail))
        .collect())
}
