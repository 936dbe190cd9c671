//! Graph operations: vertex/edge removal, edge and vertex contraction,
//! k-subdivision and cycle extension.
//!
//! Operations that delete or merge vertices compact the remaining ids in
//! order; a merged pair takes the slot of its smaller id. The old-to-new id
//! map is returned with the graph so colorings can be carried across.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, MAX_ORDER};
use crate::structure::CycleSpec;

/// Result graph plus the map from source ids to result ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformed {
    pub graph: Graph,
    /// `vertex_map[old]` is the new id, or `None` for a deleted vertex.
    pub vertex_map: Vec<Option<usize>>,
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

/// Rebuilds `g` on the vertices kept by `map`, with edges pushed through it.
fn relabel(g: &Graph, map: &[Option<usize>], order: usize) -> Result<Graph> {
    let mut out = Graph::empty(order)?;
    for (a, b) in g.edges() {
        if let (Some(x), Some(y)) = (map[a], map[b]) {
            if x != y {
                out.insert_edge(x, y)?;
            }
        }
    }
    Ok(out)
}

/// `G - v`.
pub fn remove_vertex(g: &Graph, v: usize) -> Result<Transformed> {
    g.check_vertex(v)?;
    if g.order() < 2 {
        return Err(Error::InvalidParams("cannot remove the only vertex".into()));
    }
    let vertex_map: Vec<Option<usize>> = (0..g.order())
        .map(|w| match w.cmp(&v) {
            std::cmp::Ordering::Less => Some(w),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(w - 1),
        })
        .collect();
    let graph = relabel(g, &vertex_map, g.order() - 1)?;
    Ok(Transformed { graph, vertex_map })
}

/// `G - e`. Vertex ids are unchanged.
pub fn remove_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    check_pair(g, u, v)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let (a, b) = (u.min(v), u.max(v));
    Graph::from_edges(g.order(), g.edges().filter(|&e| e != (a, b)))
}

fn merge(g: &Graph, u: usize, v: usize) -> Result<Transformed> {
    let (keep, gone) = (u.min(v), u.max(v));
    let vertex_map: Vec<Option<usize>> = (0..g.order())
        .map(|w| {
            Some(if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            })
        })
        .collect();
    let graph = relabel(g, &vertex_map, g.order() - 1)?;
    Ok(Transformed { graph, vertex_map })
}

/// `G ∘ e`: merge the endpoints of an edge.
pub fn contract_edge(g: &Graph, u: usize, v: usize) -> Result<Transformed> {
    check_pair(g, u, v)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    merge(g, u, v)
}

/// `G ∘ {u, v}`: merge two non-adjacent vertices.
pub fn contract_vertices(g: &Graph, u: usize, v: usize) -> Result<Transformed> {
    check_pair(g, u, v)?;
    if g.has_edge(u, v) {
        return Err(Error::AdjacentPair(u, v));
    }
    merge(g, u, v)
}

/// Id of the vertex replacing `u` and `v` in a contraction.
pub fn merged_id(u: usize, v: usize) -> usize {
    u.min(v)
}

/// One edge of the base graph and the path replacing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Superedge {
    pub endpoints: (usize, usize),
    /// `u, x_1, ..., x_{k-1}, v`.
    pub path: Vec<usize>,
}

impl Superedge {
    pub fn internal(&self) -> &[usize] {
        &self.path[1..self.path.len() - 1]
    }
}

/// Correspondence between a graph and its k-subdivision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdivisionMap {
    pub k: usize,
    /// Base vertices keep their ids.
    pub base_vertex_map: Vec<usize>,
    /// One per base edge, in lexicographic edge order.
    pub superedges: Vec<Superedge>,
}

/// `S_k(G)`: every edge replaced by a path of length `k`.
///
/// Internal vertices of the `i`-th edge (lexicographic) get ids
/// `n + i(k-1) .. n + (i+1)(k-1)`, ordered from the smaller endpoint.
pub fn subdivide(g: &Graph, k: usize) -> Result<(Graph, SubdivisionMap)> {
    if k == 0 {
        return Err(Error::ZeroSubdivision);
    }
    let n = g.order();
    let order = n + g.size() * (k - 1);
    if order > MAX_ORDER {
        return Err(Error::TooManyVertices(order));
    }
    let mut out = Graph::empty(order)?;
    let mut superedges = Vec::with_capacity(g.size());
    for (i, (u, v)) in g.edges().enumerate() {
        let mut path = Vec::with_capacity(k + 1);
        path.push(u);
        path.extend((0..k - 1).map(|t| n + i * (k - 1) + t));
        path.push(v);
        for w in path.windows(2) {
            out.insert_edge(w[0], w[1])?;
        }
        superedges.push(Superedge {
            endpoints: (u, v),
            path,
        });
    }
    Ok((
        out,
        SubdivisionMap {
            k,
            base_vertex_map: (0..n).collect(),
            superedges,
        },
    ))
}

/// `W^+(G)`: a new hub (id `n`) joined to every vertex of the cycle.
pub fn cycle_extend(g: &Graph, cycle: &CycleSpec) -> Result<Graph> {
    cycle.validate(g)?;
    let n = g.order();
    if n + 1 > MAX_ORDER {
        return Err(Error::TooManyVertices(n + 1));
    }
    let mut adj: Vec<u64> = (0..n).map(|v| g.neighbors(v)).collect();
    let rim = cycle.vertex_set();
    for v in members(rim) {
        adj[v] |= bit(n);
    }
    adj.push(rim);
    Graph::from_adjacency(adj)
}
