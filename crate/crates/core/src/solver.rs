//! Exact computation of the domination chromatic number.
//!
//! The decision search assigns vertices in descending-degree order to an open
//! class or to a newly opened one (class `j` opens only after `0..j`). Each
//! class carries the intersection of the closed neighborhoods of its members,
//! which is exactly its dominator set; a class whose dominator set becomes
//! empty can never be repaired by adding vertices, so that branch is cut.
//! Once every vertex of `N[w]` is placed, `w` must already dominate a class.

use std::collections::BTreeMap;
use std::sync::RwLock;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::coloring::{is_domination_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, VertexSet};

/// Default node budget per solve.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_NODE_BUDGET`].
pub const BUDGET_ENV: &str = "DOMCHROM_BUDGET";

/// Order guard for the partition-enumeration oracle (Bell(8) = 4140).
pub const ORACLE_MAX_ORDER: usize = 8;

/// Search limits. Exhausting either yields an "unknown" outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_nodes: u64,
    #[serde(skip)]
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: DEFAULT_NODE_BUDGET,
            max_time: None,
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Budget {
        Budget {
            max_nodes,
            max_time: None,
        }
    }

    /// Default budget, overridden by `DOMCHROM_BUDGET` when it parses.
    pub fn from_env() -> Budget {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Budget::nodes)
            .unwrap_or_default()
    }
}

/// Outcome of the k-class decision problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(Coloring),
    /// No domination coloring with exactly k classes exists.
    Infeasible,
    /// The budget ran out before the question was settled.
    Unknown,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Bounds on χ_dd with a witness attaining the upper bound.
///
/// When the search finishes, `lower == upper == χ_dd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub lower: usize,
    pub upper: usize,
    pub witness: Coloring,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn chi_dd(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.upper)
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

enum Flow {
    Found,
    Exhausted,
    Abort,
}

struct Searcher<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    /// Vertices whose closed neighborhood is fully placed once `order[idx]` is.
    completes_at: Vec<VertexSet>,
    members: Vec<VertexSet>,
    dominators: Vec<VertexSet>,
    assignment: Vec<usize>,
    nodes: u64,
    budget: Budget,
    started: Instant,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, k: usize, budget: Budget, started: Instant) -> Searcher<'a> {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut placed = 0u64;
        let mut done = 0u64;
        let completes_at = order
            .iter()
            .map(|&v| {
                placed |= bit(v);
                let now = (0..n)
                    .filter(|&w| done & bit(w) == 0 && g.closed_neighborhood(w) & !placed == 0)
                    .fold(0, |acc, w| acc | bit(w));
                done |= now;
                now
            })
            .collect();
        Searcher {
            g,
            k,
            order,
            completes_at,
            members: vec![0; k],
            dominators: vec![0; k],
            assignment: vec![usize::MAX; n],
            nodes: 0,
            budget,
            started,
        }
    }

    fn out_of_budget(&self) -> bool {
        if self.nodes > self.budget.max_nodes {
            return true;
        }
        match self.budget.max_time {
            Some(limit) if self.nodes.is_multiple_of(1024) => self.started.elapsed() > limit,
            _ => false,
        }
    }

    /// Every vertex whose neighborhood just completed still dominates a class.
    fn completed_ok(&self, idx: usize, open: usize) -> bool {
        members(self.completes_at[idx]).all(|w| {
            let closed = self.g.closed_neighborhood(w);
            self.members[..open].iter().any(|&m| m & !closed == 0)
        })
    }

    /// Leaf check: classes only grow, so a class inside `N[w]` at completion
    /// time may have left it since.
    fn all_vertices_dominate(&self) -> bool {
        (0..self.g.order()).all(|w| {
            let closed = self.g.closed_neighborhood(w);
            self.members.iter().any(|&m| m & !closed == 0)
        })
    }

    fn dfs(&mut self, idx: usize, open: usize) -> Flow {
        let n = self.g.order();
        if idx == n {
            return if open == self.k && self.all_vertices_dominate() {
                Flow::Found
            } else {
                Flow::Exhausted
            };
        }
        self.nodes += 1;
        if self.out_of_budget() {
            return Flow::Abort;
        }
        let v = self.order[idx];
        let adj = self.g.neighbors(v);
        let closed = self.g.closed_neighborhood(v);
        let remaining_after = n - idx - 1;

        if open + remaining_after >= self.k {
            for c in 0..open {
                if self.members[c] & adj != 0 {
                    continue;
                }
                let narrowed = self.dominators[c] & closed;
                if narrowed == 0 {
                    continue;
                }
                debug_assert_eq!(
                    narrowed,
                    crate::coloring::class_dominators(self.g, self.members[c] | bit(v))
                );
                let saved = self.dominators[c];
                self.members[c] |= bit(v);
                self.dominators[c] = narrowed;
                self.assignment[v] = c;
                let flow = if self.completed_ok(idx, open) {
                    self.dfs(idx + 1, open)
                } else {
                    Flow::Exhausted
                };
                self.members[c] &= !bit(v);
                self.dominators[c] = saved;
                match flow {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
        }

        if open < self.k {
            self.members[open] = bit(v);
            self.dominators[open] = closed;
            self.assignment[v] = open;
            let flow = if self.completed_ok(idx, open + 1) {
                self.dfs(idx + 1, open + 1)
            } else {
                Flow::Exhausted
            };
            self.members[open] = 0;
            self.dominators[open] = 0;
            if !matches!(flow, Flow::Exhausted) {
                return flow;
            }
        }
        Flow::Exhausted
    }

    fn run(&mut self) -> Search {
        match self.dfs(0, 0) {
            Flow::Found => {
                let witness = Coloring::new(self.assignment.clone());
                assert!(
                    is_domination_coloring(self.g, &witness).unwrap_or(false),
                    "search produced an invalid witness {witness} for {:?}",
                    self.g
                );
                assert_eq!(witness.class_count(), self.k);
                Search::Found(witness)
            }
            Flow::Exhausted => Search::Infeasible,
            Flow::Abort => Search::Unknown,
        }
    }
}

/// Decides whether `g` has a domination coloring with exactly `k` classes.
pub fn find_domination_coloring(g: &Graph, k: usize, budget: Budget) -> Result<Search> {
    g.require_connected()?;
    if k == 0 || k > g.order() {
        return Err(Error::ClassCountOutOfRange { k, n: g.order() });
    }
    Ok(Searcher::new(g, k, budget, Instant::now()).run())
}

/// Size of a greedily grown clique; a lower bound on χ and hence on χ_dd.
pub fn greedy_clique_bound(g: &Graph) -> usize {
    let mut by_degree: Vec<usize> = (0..g.order()).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    by_degree
        .iter()
        .map(|&seed| {
            let mut clique = bit(seed);
            let mut candidates = g.neighbors(seed);
            for &w in &by_degree {
                if candidates & bit(w) != 0 {
                    clique |= bit(w);
                    candidates &= g.neighbors(w);
                }
            }
            clique.count_ones() as usize
        })
        .max()
        .unwrap_or(1)
        .max(1)
}

/// Computes χ_dd exactly, searching k upward from the clique bound.
///
/// If the budget runs out, the result keeps the bounds established so far
/// and the all-singletons witness.
pub fn chi_dd_exact(g: &Graph, budget: Budget) -> Result<SolveResult> {
    g.require_connected()?;
    let started = Instant::now();
    let n = g.order();
    let mut nodes = 0;
    for k in greedy_clique_bound(g)..=n {
        let mut searcher = Searcher::new(
            g,
            k,
            Budget::nodes(budget.max_nodes.saturating_sub(nodes)),
            started,
        );
        searcher.budget.max_time = budget.max_time;
        let outcome = searcher.run();
        nodes += searcher.nodes;
        let stats = SolveStats {
            nodes,
            elapsed: started.elapsed(),
        };
        match outcome {
            Search::Found(witness) => {
                return Ok(SolveResult {
                    lower: k,
                    upper: k,
                    witness,
                    stats,
                })
            }
            Search::Infeasible => continue,
            Search::Unknown => {
                return Ok(SolveResult {
                    lower: k,
                    upper: n,
                    witness: Coloring::singletons(n),
                    stats,
                })
            }
        }
    }
    unreachable!("the all-singletons coloring always has n classes")
}

/// Brute-force χ_dd over every set partition of the vertex set.
///
/// Partitions are walked as restricted growth strings; each one is checked
/// with the plain definition from [`crate::coloring`].
pub fn chi_dd_oracle(g: &Graph) -> Result<usize> {
    g.require_connected()?;
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::GuardExceeded {
            what: "partition oracle",
            n,
            max: ORACLE_MAX_ORDER,
        });
    }
    let mut best = usize::MAX;
    let mut rgs = vec![0usize; n];
    let mut maxes = vec![0usize; n];
    loop {
        let classes = maxes[n - 1] + 1;
        if classes < best && is_domination_coloring(g, &Coloring::new(rgs.clone()))? {
            best = classes;
        }
        // Advance to the next restricted growth string.
        let mut i = n;
        loop {
            if i <= 1 {
                return Ok(best);
            }
            i -= 1;
            if rgs[i] <= maxes[i - 1] {
                rgs[i] += 1;
                maxes[i] = maxes[i - 1].max(rgs[i]);
                for j in i + 1..n {
                    rgs[j] = 0;
                    maxes[j] = maxes[i];
                }
                break;
            }
        }
    }
}

/// Memo of χ_dd(P_k), filled on demand by [`chi_dd_exact`].
#[derive(Debug, Default)]
pub struct PathTable {
    budget: Budget,
    values: RwLock<BTreeMap<usize, usize>>,
}

impl PathTable {
    pub fn new(budget: Budget) -> PathTable {
        PathTable {
            budget,
            values: RwLock::new(BTreeMap::new()),
        }
    }

    /// χ_dd of the path on `k` vertices.
    pub fn chi_dd(&self, k: usize) -> Result<usize> {
        if k == 0 {
            return Err(Error::EmptyGraph);
        }
        if let Some(&v) = self.values.read().expect("path table lock").get(&k) {
            return Ok(v);
        }
        let value = chi_dd_exact(&Graph::path(k)?, self.budget)?
            .chi_dd()
            .ok_or(Error::BudgetExhausted)?;
        // Racing writers compute the same value.
        self.values
            .write()
            .expect("path table lock")
            .insert(k, value);
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(g: &Graph) -> usize {
        chi_dd_exact(g, Budget::default())
            .unwrap()
            .chi_dd()
            .unwrap()
    }

    #[test]
    fn decision_examples() {
        let b = Budget::default();
        assert_eq!(
            find_domination_coloring(&Graph::complete(3).unwrap(), 2, b).unwrap(),
            Search::Infeasible
        );
        match find_domination_coloring(&Graph::cycle(4).unwrap(), 2, b).unwrap() {
            Search::Found(c) => assert_eq!(c.to_string(), "0,1,0,1"),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            find_domination_coloring(&Graph::path(4).unwrap(), 2, b).unwrap(),
            Search::Infeasible
        );
    }

    #[test]
    fn decision_rejects_bad_input() {
        let b = Budget::default();
        let p3 = Graph::path(3).unwrap();
        assert!(find_domination_coloring(&p3, 0, b).is_err());
        assert!(find_domination_coloring(&p3, 4, b).is_err());
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            find_domination_coloring(&split, 2, b),
            Err(Error::Disconnected)
        );
        assert_eq!(chi_dd_exact(&split, b), Err(Error::Disconnected));
        assert_eq!(chi_dd_oracle(&split), Err(Error::Disconnected));
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=8 {
            assert_eq!(chi(&Graph::complete(n).unwrap()), n);
        }
    }

    #[test]
    fn small_families() {
        assert_eq!(chi(&Graph::path(4).unwrap()), 3);
        assert_eq!(chi(&Graph::cycle(6).unwrap()), 4);
        assert_eq!(chi(&Graph::star(3).unwrap()), 2);
        assert_eq!(chi(&Graph::cycle(4).unwrap()), 2);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(chi_dd_oracle(&Graph::star(3).unwrap()).unwrap(), 2);
        assert_eq!(chi_dd_oracle(&Graph::cycle(4).unwrap()).unwrap(), 2);
        assert_eq!(chi_dd_oracle(&Graph::empty(1).unwrap()).unwrap(), 1);
        assert!(matches!(
            chi_dd_oracle(&Graph::path(9).unwrap()),
            Err(Error::GuardExceeded { n: 9, .. })
        ));
    }

    #[test]
    fn path_table() {
        let table = PathTable::new(Budget::default());
        assert_eq!(table.chi_dd(1).unwrap(), 1);
        assert_eq!(table.chi_dd(2).unwrap(), 2);
        assert_eq!(table.chi_dd(3).unwrap(), 2);
        assert_eq!(table.chi_dd(4).unwrap(), 3);
        assert_eq!(table.chi_dd(4).unwrap(), 3);
        assert!(table.chi_dd(0).is_err());
    }

    #[test]
    fn tiny_budget_reports_unknown() {
        let g = Graph::cycle(12).unwrap();
        let r = chi_dd_exact(&g, Budget::nodes(5)).unwrap();
        assert!(!r.is_exact());
        assert_eq!(r.upper, 12);
        assert_eq!(r.chi_dd(), None);
        assert_eq!(
            find_domination_coloring(&g, 6, Budget::nodes(3)).unwrap(),
            Search::Unknown
        );
    }

    #[test]
    fn deterministic_witnesses() {
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let a = chi_dd_exact(&g, Budget::default()).unwrap();
        let b = chi_dd_exact(&g, Budget::default()).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.stats.nodes, b.stats.nodes);
    }

    #[test]
    fn greedy_clique() {
        assert_eq!(greedy_clique_bound(&Graph::complete(5).unwrap()), 5);
        assert_eq!(greedy_clique_bound(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(greedy_clique_bound(&Graph::empty(1).unwrap()), 1);
    }
}
