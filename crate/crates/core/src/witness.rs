//! Constructive recolorings that carry a domination coloring across a graph
//! operation.
//!
//! *Extending* constructions give a single fresh color to the one vertex the
//! operation introduces (restored vertex, merged vertex, hub) or to one
//! endpoint of a restored edge. They always succeed.
//!
//! *Reducing* constructions follow a case analysis that gives fresh colors to
//! the vertices whose domination relied on the removed element. They are not
//! always enough; when the result is not a domination coloring, or uses more
//! colors than allowed, the outcome is a [`WitnessStatus::Gap`] that names
//! the case and lists every violated condition.
//!
//! In every function `g` is the graph `G` on which the operation acts. The
//! base coloring lives on the operation's source and the constructed one on
//! its target:
//!
//! | kind                | source      | target      | color bound   |
//! |---------------------|-------------|-------------|---------------|
//! | `AddVertex`         | `G - v`     | `G`         | `k + 1`       |
//! | `AddEdge`           | `G - e`     | `G`         | `k + 1`       |
//! | `ContractEdge`      | `G`         | `G ∘ e`     | `k + 1`       |
//! | `ContractVertices`  | `G`         | `G ∘ {u,v}` | `k + 1`       |
//! | `CycleExtend`       | `G`         | `W^+(G)`    | `k + 1`       |
//! | `RemoveVertex`      | `G`         | `G - v`     | `k + deg(v) - 1` |
//! | `RemoveEdge`        | `G`         | `G - e`     | `k + 2`       |
//! | `Uncontract`        | `G ∘ {u,v}` | `G`         | `k + 2`       |
//! | `RemoveHub`         | `W^+(G)`    | `G`         | `k + l`       |

use serde::Serialize;

use crate::coloring::{class_dominators, diagnose, Coloring, DominationDiagnostic};
use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph};
use crate::ops;
use crate::structure::CycleSpec;

/// Constructions that add a fresh color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExtendKind {
    AddVertex { vertex: usize },
    AddEdge { u: usize, v: usize },
    ContractEdge { u: usize, v: usize },
    ContractVertices { u: usize, v: usize },
    CycleExtend { cycle: CycleSpec },
}

/// Constructions driven by a case analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReduceKind {
    RemoveVertex {
        vertex: usize,
    },
    RemoveEdge {
        u: usize,
        v: usize,
    },
    /// Split the merged vertex of `G ∘ {u,v}` (or `G ∘ uv`) back into `u`, `v`.
    Uncontract {
        u: usize,
        v: usize,
    },
    RemoveHub {
        cycle: CycleSpec,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessStatus {
    Validated,
    Gap,
}

/// Why a construction did not yield an admissible coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub diagnostic: DominationDiagnostic,
    /// Set when the coloring uses more colors than the bound allows.
    pub over_budget: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessOutcome {
    pub status: WitnessStatus,
    /// Which branch of the case analysis produced the coloring.
    pub case: &'static str,
    /// The constructed coloring of the target graph.
    pub coloring: Coloring,
    pub colors_used: usize,
    /// Class count of the base coloring.
    pub base_colors: usize,
    /// Largest color count the construction is allowed.
    pub color_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<GapReport>,
}

impl WitnessOutcome {
    pub fn is_validated(&self) -> bool {
        self.status == WitnessStatus::Validated
    }
}

fn require_domination(g: &Graph, base: &Coloring) -> Result<()> {
    if diagnose(g, base)?.is_domination_coloring() {
        Ok(())
    } else {
        Err(Error::BaseNotDomination)
    }
}

fn finish(
    target: &Graph,
    assignment: Vec<usize>,
    base_colors: usize,
    color_bound: usize,
    case: &'static str,
) -> Result<WitnessOutcome> {
    let coloring = Coloring::new(assignment);
    let diagnostic = diagnose(target, &coloring)?;
    let colors_used = coloring.class_count();
    let over_budget = colors_used > color_bound;
    let ok = diagnostic.is_domination_coloring() && !over_budget;
    Ok(WitnessOutcome {
        status: if ok {
            WitnessStatus::Validated
        } else {
            WitnessStatus::Gap
        },
        case,
        coloring,
        colors_used,
        base_colors,
        color_bound,
        gap: (!ok).then_some(GapReport {
            diagnostic,
            over_budget,
        }),
    })
}

/// Pulls a coloring back along a vertex map: `out[w] = base[map[w]]`.
/// Unmapped vertices get `usize::MAX` and must be overwritten.
fn pull_back(base: &Coloring, map: &[Option<usize>]) -> Vec<usize> {
    map.iter()
        .map(|m| m.map_or(usize::MAX, |x| base.color(x)))
        .collect()
}

/// Pushes a coloring forward along a vertex map, skipping `skip`.
fn push_forward(base: &Coloring, map: &[Option<usize>], order: usize, skip: u64) -> Vec<usize> {
    let mut out = vec![usize::MAX; order];
    for (old, target) in map.iter().enumerate() {
        if let Some(new) = target {
            if skip & bit(old) == 0 {
                out[*new] = base.color(old);
            }
        }
    }
    out
}

/// Builds a coloring of the larger or merged graph from one of the source.
pub fn extend_witness(kind: &ExtendKind, g: &Graph, base: &Coloring) -> Result<WitnessOutcome> {
    let k = base.class_count();
    match kind {
        ExtendKind::AddVertex { vertex } => {
            let v = *vertex;
            let source = ops::remove_vertex(g, v)?;
            require_domination(&source.graph, base)?;
            let mut assignment = pull_back(base, &source.vertex_map);
            assignment[v] = k;
            finish(g, assignment, k, k + 1, "fresh color on restored vertex")
        }
        ExtendKind::AddEdge { u, v } => {
            let (u, v) = (*u, *v);
            let source = ops::remove_edge(g, u, v)?;
            require_domination(&source, base)?;
            let mut assignment = base.assignment().to_vec();
            if base.color(u) == base.color(v) {
                assignment[u.max(v)] = k;
                finish(g, assignment, k, k + 1, "fresh color on one endpoint")
            } else {
                finish(g, assignment, k, k, "endpoints already distinct")
            }
        }
        ExtendKind::ContractEdge { u, v } | ExtendKind::ContractVertices { u, v } => {
            let (u, v) = (*u, *v);
            let target = match kind {
                ExtendKind::ContractEdge { .. } => ops::contract_edge(g, u, v)?,
                _ => ops::contract_vertices(g, u, v)?,
            };
            require_domination(g, base)?;
            let order = target.graph.order();
            let mut assignment = push_forward(base, &target.vertex_map, order, bit(u) | bit(v));
            assignment[ops::merged_id(u, v)] = k;
            finish(
                &target.graph,
                assignment,
                k,
                k + 1,
                "fresh color on merged vertex",
            )
        }
        ExtendKind::CycleExtend { cycle } => {
            let target = ops::cycle_extend(g, cycle)?;
            require_domination(g, base)?;
            let mut assignment = base.assignment().to_vec();
            assignment.push(k);
            finish(&target, assignment, k, k + 1, "fresh color on hub")
        }
    }
}

/// Gives each vertex of `targets` its own fresh color, in increasing order.
fn fresh_colors(assignment: &mut [usize], targets: u64, first: usize) -> usize {
    let mut next = first;
    for w in members(targets) {
        assignment[w] = next;
        next += 1;
    }
    next - first
}

/// Builds a coloring of the smaller or split graph by the case analysis.
pub fn reduce_witness(kind: &ReduceKind, g: &Graph, base: &Coloring) -> Result<WitnessOutcome> {
    let k = base.class_count();
    match kind {
        ReduceKind::RemoveVertex { vertex } => {
            let v = *vertex;
            let target = ops::remove_vertex(g, v)?;
            require_domination(g, base)?;
            let classes = base.classes();
            let own = base.color(v);
            let shared = classes[own] != bit(v);
            // Classes whose only dominator is v.
            let needy = classes
                .iter()
                .enumerate()
                .filter(|&(i, &c)| i != own && class_dominators(g, c) == bit(v))
                .fold(0u64, |acc, (_, &c)| acc | c);
            let mut assignment = base.assignment().to_vec();
            fresh_colors(&mut assignment, needy, k);
            let case = match (shared, needy != 0) {
                (true, true) => "case 1: shared color, recolor classes dominated only by v",
                (true, false) => "case 1: shared color, keep coloring",
                (false, true) => "case 2: own color, recolor classes dominated only by v",
                (false, false) => "case 2: own color, keep coloring",
            };
            let assignment = push_forward(
                &Coloring::new(assignment),
                &target.vertex_map,
                target.graph.order(),
                0,
            );
            let bound = (k + g.degree(v)).saturating_sub(1);
            finish(&target.graph, assignment, k, bound, case)
        }
        ReduceKind::RemoveEdge { u, v } => {
            let (u, v) = (*u, *v);
            let target = ops::remove_edge(g, u, v)?;
            require_domination(g, base)?;
            let u_dominates_vs = base.class(base.color(v)) & !g.closed_neighborhood(u) == 0;
            let v_dominates_us = base.class(base.color(u)) & !g.closed_neighborhood(v) == 0;
            let mut assignment = base.assignment().to_vec();
            let case = match (u_dominates_vs, v_dominates_us) {
                (false, false) => "case 1: no endpoint dominates the other's class",
                (true, false) => {
                    assignment[v] = k;
                    "case 2: u dominates v's class, fresh color on v"
                }
                (false, true) => {
                    assignment[u] = k;
                    "case 2: v dominates u's class, fresh color on u"
                }
                (true, true) => {
                    assignment[u] = k;
                    assignment[v] = k + 1;
                    "case 3: both dominate, fresh colors on u and v"
                }
            };
            finish(&target, assignment, k, k + 2, case)
        }
        ReduceKind::Uncontract { u, v } => {
            let (u, v) = (*u, *v);
            let source = if g.has_edge(u, v) {
                ops::contract_edge(g, u, v)?
            } else {
                ops::contract_vertices(g, u, v)?
            };
            require_domination(&source.graph, base)?;
            let mut assignment = pull_back(base, &source.vertex_map);
            assignment[u] = k;
            assignment[v] = k + 1;
            let case = if g.has_edge(u, v) {
                "edge uncontraction: fresh colors on both endpoints"
            } else {
                "vertex uncontraction: fresh colors on both vertices"
            };
            finish(g, assignment, k, k + 2, case)
        }
        ReduceKind::RemoveHub { cycle } => {
            let source = ops::cycle_extend(g, cycle)?;
            require_domination(&source, base)?;
            let hub = g.order();
            let classes = base.classes();
            let hub_class = base.color(hub);
            let alone = classes[hub_class] == bit(hub);
            let mut flagged = 0u64;
            if alone {
                // Rim vertices whose only dominated class is {hub}.
                for w in cycle.vertices() {
                    let closed = source.closed_neighborhood(*w);
                    let dominated: Vec<usize> = (0..classes.len())
                        .filter(|&i| classes[i] & !closed == 0)
                        .collect();
                    if dominated == [hub_class] {
                        flagged |= bit(*w);
                    }
                }
            }
            for (i, &c) in classes.iter().enumerate() {
                if i != hub_class && class_dominators(&source, c) == bit(hub) {
                    flagged |= c;
                }
            }
            debug_assert_eq!(flagged & !cycle.vertex_set(), 0);
            let mut assignment = base.assignment().to_vec();
            fresh_colors(&mut assignment, flagged, k);
            assignment.truncate(hub);
            let case = match (alone, flagged != 0) {
                (true, true) => "case 1: hub alone, recolor flagged rim vertices",
                (true, false) => "case 1: hub alone, keep coloring",
                (false, true) => "case 2: hub shares color, recolor flagged rim vertices",
                (false, false) => "case 2: hub shares color, keep coloring",
            };
            finish(g, assignment, k, k + cycle.len(), case)
        }
    }
}
