//! Cut structure (articulation points, bridges) and cycle enumeration.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph};

struct LowLink<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    cut: Vec<bool>,
    bridges: Vec<(usize, usize)>,
}

impl LowLink<'_> {
    fn visit(&mut self, v: usize, parent: Option<usize>) {
        self.timer += 1;
        self.disc[v] = self.timer;
        self.low[v] = self.timer;
        let mut children = 0;
        for w in members(self.g.neighbors(v)) {
            if Some(w) == parent {
                continue;
            }
            if self.disc[w] == 0 {
                children += 1;
                self.visit(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if parent.is_some() && self.low[w] >= self.disc[v] {
                    self.cut[v] = true;
                }
                if self.low[w] > self.disc[v] {
                    self.bridges.push((v.min(w), v.max(w)));
                }
            } else {
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        if parent.is_none() && children > 1 {
            self.cut[v] = true;
        }
    }
}

fn lowlink(g: &Graph) -> Result<LowLink<'_>> {
    g.require_connected()?;
    let n = g.order();
    let mut state = LowLink {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        timer: 0,
        cut: vec![false; n],
        bridges: Vec::new(),
    };
    state.visit(0, None);
    Ok(state)
}

/// Vertices whose removal disconnects `g`, in increasing order.
pub fn cut_vertices(g: &Graph) -> Result<Vec<usize>> {
    let state = lowlink(g)?;
    Ok((0..g.order()).filter(|&v| state.cut[v]).collect())
}

/// Edges whose removal disconnects `g`, as sorted `(u, v)` pairs with `u < v`.
pub fn bridges(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let mut found = lowlink(g)?.bridges;
    found.sort_unstable();
    Ok(found)
}

/// A cycle `v_0 v_1 ... v_{l-1}` of a host graph, `l >= 3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CycleSpec {
    vertices: Vec<usize>,
}

impl CycleSpec {
    /// Validates that `vertices` are distinct and cyclically adjacent in `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<CycleSpec> {
        let l = vertices.len();
        if l < 3 {
            return Err(Error::InvalidCycle(format!("length {l} is below 3")));
        }
        let mut seen = 0u64;
        for &v in &vertices {
            g.check_vertex(v)?;
            if seen & bit(v) != 0 {
                return Err(Error::InvalidCycle(format!("vertex {v} repeated")));
            }
            seen |= bit(v);
        }
        for i in 0..l {
            let (a, b) = (vertices[i], vertices[(i + 1) % l]);
            if !g.has_edge(a, b) {
                return Err(Error::InvalidCycle(format!("{a}-{b} is not an edge")));
            }
        }
        Ok(CycleSpec { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> u64 {
        self.vertices.iter().fold(0, |acc, &v| acc | bit(v))
    }

    /// Re-checks this cycle against a (possibly different) host graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        CycleSpec::new(g, self.vertices.clone()).map(|_| ())
    }
}

/// All cycles of length `3..=max_len`, each reported once.
///
/// Each cycle is rooted at its smallest vertex and oriented so that the
/// second vertex is smaller than the last one. Output is sorted by length,
/// then lexicographically.
pub fn enumerate_cycles(g: &Graph, max_len: usize) -> Vec<CycleSpec> {
    let max_len = max_len.min(g.order());
    let mut out = Vec::new();
    if max_len < 3 {
        return out;
    }
    let mut path = Vec::with_capacity(max_len);
    for root in 0..g.order() {
        path.clear();
        path.push(root);
        // Only vertices above the root may appear on its cycles.
        let allowed = g.vertex_set() & !((bit(root) << 1) - 1);
        extend_path(g, root, allowed, bit(root), max_len, &mut path, &mut out);
    }
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    out
}

fn extend_path(
    g: &Graph,
    root: usize,
    allowed: u64,
    used: u64,
    max_len: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<CycleSpec>,
) {
    let last = *path.last().expect("path starts at root");
    if path.len() >= 3 && g.has_edge(last, root) && path[1] < last {
        out.push(CycleSpec {
            vertices: path.clone(),
        });
    }
    if path.len() == max_len {
        return;
    }
    for w in members(g.neighbors(last) & allowed & !used) {
        path.push(w);
        extend_path(g, root, allowed, used | bit(w), max_len, path, out);
        path.pop();
    }
}
