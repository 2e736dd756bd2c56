//! Reproducible random instances for tests and benchmarks.
//!
//! Construction: a random directed Hamiltonian cycle (which is already
//! strongly biconnected for n >= 3: strong connectivity from the cycle
//! orientation, no cut vertices in the underlying ring), then uniform random
//! extra arcs up to the budget. Arc additions cannot break either property,
//! so the trailing repair loop is a guard that is expected to settle
//! immediately; it stays because the output contract is checked, not assumed.

use std::collections::HashSet;

use crate::connectivity::is_strongly_biconnected;
use crate::error::Error;
use crate::graph::{Digraph, VertexId};
use crate::rng::Rng;
use crate::sbcc::strongly_biconnected_components;

/// Deterministic strongly biconnected instance with `n` vertices and
/// `min(m, n*(n-1))` arcs. Requires `n >= 3` and `m >= n + 2`.
pub fn generate(n: u32, m: u64, seed: u64) -> Result<Digraph, Error> {
    if n < 3 || m < n as u64 + 2 {
        return Err(Error::GeneratorParams { n: n as u64, m });
    }
    let capacity = n as u128 * (n as u128 - 1);
    let target = (m as u128).min(capacity) as u64;

    let mut rng = Rng::new(seed);
    let mut order: Vec<u32> = (0..n).collect();
    rng.shuffle(&mut order);

    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(target as usize);
    let mut present: HashSet<(u32, u32)> = HashSet::with_capacity(target as usize);
    for i in 0..n as usize {
        let p = (order[i], order[(i + 1) % n as usize]);
        pairs.push(p);
        present.insert(p);
    }

    let extras = target - n as u64;
    let complement = capacity as u64 - n as u64;
    if extras * 2 >= complement {
        // dense request: shuffle the full complement and take a prefix,
        // cheaper than rejection sampling near saturation
        let mut free: Vec<(u32, u32)> = Vec::with_capacity(complement as usize);
        for u in 0..n {
            for v in 0..n {
                if u != v && !present.contains(&(u, v)) {
                    free.push((u, v));
                }
            }
        }
        rng.shuffle(&mut free);
        for &p in free.iter().take(extras as usize) {
            pairs.push(p);
            present.insert(p);
        }
    } else {
        let mut added = 0u64;
        while added < extras {
            let u = rng.below(n as u64) as u32;
            let v = rng.below(n as u64) as u32;
            if u == v || present.contains(&(u, v)) {
                continue;
            }
            pairs.push((u, v));
            present.insert((u, v));
            added += 1;
        }
    }

    let mut g = Digraph::new(n, &pairs)?;
    // repair guard: join distinct components until the property holds
    while !is_strongly_biconnected(&g) {
        let cover = strongly_biconnected_components(&g)?;
        let mut patch = None;
        'scan: for u in 0..n {
            for v in 0..n {
                if u != v
                    && !g.has_arc(VertexId(u), VertexId(v))
                    && !cover.share_component(VertexId(u), VertexId(v))
                {
                    patch = Some((u, v));
                    break 'scan;
                }
            }
        }
        match patch {
            Some(p) => {
                pairs.push(p);
                g = Digraph::new(n, &pairs)?;
            }
            None => return Err(Error::AugmentationStuck),
        }
    }
    Ok(g)
}
