//! Colorings and the domination-coloring conditions.
//!
//! A vertex `v` dominates a color class `V_i` when `V_i ⊆ N[v]`. A domination
//! coloring is a proper coloring in which every vertex dominates at least one
//! class and every class is dominated by at least one vertex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, VertexSet};

/// Vertex-to-color assignment with dense color indices `0..class_count`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coloring {
    assignment: Vec<usize>,
    class_count: usize,
}

impl Coloring {
    /// Builds a coloring, compacting unused color indices while keeping the
    /// relative order of the used ones.
    pub fn new(assignment: Vec<usize>) -> Coloring {
        let mut used: Vec<usize> = assignment.clone();
        used.sort_unstable();
        used.dedup();
        let class_count = used.len();
        let already_dense = used.last().is_none_or(|&max| max + 1 == class_count);
        let assignment = if already_dense {
            assignment
        } else {
            assignment
                .into_iter()
                .map(|c| used.binary_search(&c).expect("color present"))
                .collect()
        };
        Coloring {
            assignment,
            class_count,
        }
    }

    /// Every vertex in its own class.
    pub fn singletons(n: usize) -> Coloring {
        Coloring {
            assignment: (0..n).collect(),
            class_count: n,
        }
    }

    /// Builds a coloring from disjoint class bitsets covering `0..n`.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Coloring {
        let mut assignment = vec![usize::MAX; n];
        for (i, &class) in classes.iter().enumerate() {
            for v in members(class) {
                assignment[v] = i;
            }
        }
        debug_assert!(assignment.iter().all(|&c| c != usize::MAX));
        Coloring::new(assignment)
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Color classes as bitsets, indexed by color.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![0; self.class_count];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c] |= bit(v);
        }
        classes
    }

    pub fn class(&self, i: usize) -> VertexSet {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == i)
            .fold(0, |acc, (v, _)| acc | bit(v))
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() == g.order() {
            Ok(())
        } else {
            Err(Error::ColoringLength {
                expected: g.order(),
                got: self.len(),
            })
        }
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.assignment.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Coloring {
    type Err = Error;

    /// Parses comma-separated color indices, e.g. `"0,1,0,1"`.
    fn from_str(s: &str) -> Result<Coloring> {
        let mut assignment = Vec::new();
        let mut offset = 0;
        for field in s.split(',') {
            let trimmed = field.trim();
            let lead = field.len() - field.trim_start().len();
            let value = trimmed.parse::<usize>().map_err(|_| Error::ColoringParse {
                offset: offset + lead,
                reason: format!("expected a color index, found {trimmed:?}"),
            })?;
            assignment.push(value);
            offset += field.len() + 1;
        }
        Ok(Coloring::new(assignment))
    }
}

impl Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Every violated domination-coloring condition of a coloring.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationDiagnostic {
    /// Vertices that dominate no color class.
    pub undominating_vertices: Vec<usize>,
    /// Color indices that no vertex dominates.
    pub undominated_classes: Vec<usize>,
    /// Edges whose endpoints share a color.
    pub improper_edges: Vec<(usize, usize)>,
}

impl DominationDiagnostic {
    pub fn is_domination_coloring(&self) -> bool {
        self.undominating_vertices.is_empty()
            && self.undominated_classes.is_empty()
            && self.improper_edges.is_empty()
    }
}

impl fmt::Display for DominationDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_domination_coloring() {
            return f.write_str("ok");
        }
        let mut parts = Vec::new();
        if !self.improper_edges.is_empty() {
            let edges: Vec<String> = self
                .improper_edges
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect();
            parts.push(format!("improper edges [{}]", edges.join(" ")));
        }
        if !self.undominating_vertices.is_empty() {
            parts.push(format!(
                "vertices dominating no class {:?}",
                self.undominating_vertices
            ));
        }
        if !self.undominated_classes.is_empty() {
            parts.push(format!(
                "undominated classes {:?}",
                self.undominated_classes
            ));
        }
        f.write_str(&parts.join("; "))
    }
}

/// True iff no edge joins two vertices of the same color.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_len(g)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// `{ v : V_i ⊆ N[v] }`, the intersection of `N[u]` over `u ∈ V_i`.
pub fn dominators_of_class(g: &Graph, c: &Coloring, i: usize) -> Result<Vec<usize>> {
    c.check_len(g)?;
    if i >= c.class_count() {
        return Err(Error::ClassOutOfRange {
            class: i,
            count: c.class_count(),
        });
    }
    Ok(members(class_dominators(g, c.class(i))).collect())
}

/// `{ i : V_i ⊆ N[v] }`.
pub fn classes_dominated_by(g: &Graph, c: &Coloring, v: usize) -> Result<Vec<usize>> {
    c.check_len(g)?;
    g.check_vertex(v)?;
    let closed = g.closed_neighborhood(v);
    Ok(c.classes()
        .iter()
        .enumerate()
        .filter(|&(_, &class)| class & !closed == 0)
        .map(|(i, _)| i)
        .collect())
}

/// Dominator set of an arbitrary vertex set, as a bitset.
pub(crate) fn class_dominators(g: &Graph, class: VertexSet) -> VertexSet {
    members(class).fold(g.vertex_set(), |acc, u| acc & g.closed_neighborhood(u))
}

/// Full diagnostic of the domination-coloring conditions.
pub fn diagnose(g: &Graph, c: &Coloring) -> Result<DominationDiagnostic> {
    c.check_len(g)?;
    let classes = c.classes();
    let improper_edges = g
        .edges()
        .filter(|&(u, v)| c.color(u) == c.color(v))
        .collect();
    let undominating_vertices = (0..g.order())
        .filter(|&v| {
            let closed = g.closed_neighborhood(v);
            !classes.iter().any(|&class| class & !closed == 0)
        })
        .collect();
    let undominated_classes = classes
        .iter()
        .enumerate()
        .filter(|&(_, &class)| class_dominators(g, class) == 0)
        .map(|(i, _)| i)
        .collect();
    Ok(DominationDiagnostic {
        undominating_vertices,
        undominated_classes,
        improper_edges,
    })
}

/// True iff `c` is a domination coloring of `g`.
pub fn is_domination_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    Ok(diagnose(g, c)?.is_domination_coloring())
}
