//! Exhaustive generation of labeled connected graphs.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Largest order accepted by [`connected_graphs`].
pub const MAX_GENERATED_ORDER: usize = 7;

/// Streams every labeled connected graph on `n` vertices exactly once.
///
/// Graphs are produced in increasing order of their upper-triangle bit mask
/// (bit `k` is the `k`-th pair in graph6 column-major order).
pub fn connected_graphs(n: usize) -> Result<ConnectedGraphs> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_GENERATED_ORDER {
        return Err(Error::GuardExceeded {
            what: "connected-graph generator",
            n,
            max: MAX_GENERATED_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok(ConnectedGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// All connected labeled graphs with `lo <= n <= hi`, ordered by `n`.
pub fn connected_graphs_up_to(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl ConnectedGraphs {
    fn build(&self, mask: u64) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        let mut rest = mask;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (i, j) = self.pairs[k];
            adj[i] |= bit(j);
            adj[j] |= bit(i);
        }
        adj
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            // Fewer than n-1 edges cannot connect n vertices.
            if (mask.count_ones() as usize) + 1 < self.n {
                continue;
            }
            let adj = self.build(mask);
            let g = Graph::from_adjacency(adj).expect("generated adjacency is valid");
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}
