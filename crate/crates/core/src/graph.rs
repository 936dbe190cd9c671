//! Immutable simple undirected graphs stored as neighbor bitsets.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order. Vertex sets are single `u64` words.
pub const MAX_ORDER: usize = 64;

/// A set of vertex ids packed into one machine word.
pub type VertexSet = u64;

/// Iterates over the members of a bitset in increasing order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

#[inline]
pub fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_set(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Simple undirected graph on vertices `0..order`.
///
/// Adjacency is symmetric and loop-free; both are checked when the graph is
/// built, so every `Graph` value upholds them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

/// Named graph families used as theorem inputs and fixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `K_{1,n}` with hub 0 and `n` leaves.
    Star,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![0; n],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        let valid = full_set(n);
        let mut degree_sum = 0usize;
        for (v, &row) in adj.iter().enumerate() {
            if row & !valid != 0 {
                let w = (row & !valid).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for w in members(row) {
                if adj[w] & bit(v) == 0 {
                    return Err(Error::InvalidParams(format!(
                        "adjacency not symmetric at {v}-{w}"
                    )));
                }
            }
            degree_sum += row.count_ones() as usize;
        }
        Ok(Graph {
            adj,
            edge_count: degree_sum / 2,
        })
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u] & bit(v) == 0 {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
            self.edge_count += 1;
        }
        Ok(())
    }

    /// Standard labeled member of a named family.
    pub fn named(family: Family, n: usize) -> Result<Graph> {
        match family {
            Family::Path => {
                check_min("path", 1, n)?;
                Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
            }
            Family::Cycle => {
                check_min("cycle", 3, n)?;
                Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
            }
            Family::Complete => {
                check_min("complete", 1, n)?;
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Family::Star => {
                check_min("star", 1, n)?;
                Graph::from_edges(n + 1, (1..=n).map(|v| (0, v)))
            }
        }
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::named(Family::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        Graph::named(Family::Cycle, n)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::named(Family::Complete, n)
    }

    pub fn star(leaves: usize) -> Result<Graph> {
        Graph::named(Family::Star, leaves)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, `m`.
    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v] | bit(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & bit(v) != 0
    }

    /// All vertices as a bitset.
    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.order())
    }

    /// Maximum degree `Δ`.
    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Minimum degree `δ`.
    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order())
            .flat_map(move |u| members(self.adj[u] & !full_set(u + 1)).map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// True iff a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_set()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }
}

fn check_min(family: &'static str, min: usize, n: usize) -> Result<()> {
    if n < min {
        Err(Error::FamilyTooSmall { family, min, n })
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, E=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        (0..g.order()).map(|v| g.degree(v)).collect()
    }

    #[test]
    fn single_edge_is_k2() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g, Graph::complete(2).unwrap());
    }

    #[test]
    fn four_cycle_is_two_regular() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(degrees(&g), vec![2; 4]);
        assert_eq!(g, Graph::cycle(4).unwrap());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g, Graph::path(3).unwrap());
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(Graph::empty(0), Err(Error::EmptyGraph));
        assert_eq!(Graph::empty(65), Err(Error::TooManyVertices(65)));
    }

    #[test]
    fn named_families() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(Graph::complete(4).unwrap().size(), 6);
        let star = Graph::star(3).unwrap();
        assert_eq!(star.order(), 4);
        assert_eq!(star.max_degree(), 3);
        assert_eq!(star.min_degree(), 1);
        assert_eq!(star.degree(0), 3);
        assert!(matches!(
            Graph::cycle(2),
            Err(Error::FamilyTooSmall {
                family: "cycle",
                ..
            })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).unwrap().is_connected());
        assert!(!Graph::from_edges(3, [(0, 1)]).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn adjacency_rows_validated() {
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert_eq!(Graph::from_adjacency(vec![0b1]), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn handshake_and_degree_bounds() {
        for g in [
            Graph::complete(7).unwrap(),
            Graph::star(5).unwrap(),
            Graph::cycle(9).unwrap(),
        ] {
            let sum: usize = degrees(&g).iter().sum();
            assert_eq!(sum, 2 * g.size());
            assert!(g.min_degree() <= g.max_degree());
            assert!(g.max_degree() < g.order());
        }
    }
}
