//! Exhaustive verification of the χ_dd bounds for the six graph operations.
//!
//! | id | operation            | instances             | bounds on χ_dd(result)                       |
//! |----|----------------------|-----------------------|----------------------------------------------|
//! | 1  | `G - v`              | non-cut vertices      | `[χ - 1, χ + deg(v) - 1]`                    |
//! | 2  | `G - e`              | non-bridge edges      | `[χ - 1, χ + 2]`                             |
//! | 3  | `G ∘ e`              | all edges             | `[χ - 2, χ + 1]`                             |
//! | 4  | `G ∘ {u,v}`          | non-adjacent pairs    | `[χ - 2, χ + 1]`                             |
//! | 5  | `S_k(G)`             | `k` in the k-range    | `[χ(P_{k+1}), (m-1)χ(P_k) + χ(P_{k+1})]`     |
//! | 6  | `W^+(G)` on cycle C  | cycles up to the cap  | `[χ - l, χ + 1]`                             |
//!
//! Every check solves both sides exactly. Where a constructive recoloring
//! exists it is run as well and its outcome recorded next to the numeric
//! verdict; reducing constructions may legitimately report gaps.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::sync::{Arc, RwLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::ops;
use crate::solver::{chi_dd_exact, chi_dd_oracle, Budget, PathTable, SolveResult};
use crate::structure::{bridges, cut_vertices, enumerate_cycles, CycleSpec};
use crate::witness::{
    extend_witness, reduce_witness, ExtendKind, ReduceKind, WitnessOutcome, WitnessStatus,
};

pub const SCHEMA_VERSION: u32 = 1;
pub const ALL_THEOREMS: [u8; 6] = [1, 2, 3, 4, 5, 6];

/// The element an operation acts on.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Instance {
    Vertex { v: usize },
    Edge { u: usize, v: usize },
    Pair { u: usize, v: usize },
    Subdivision { k: usize },
    Cycle { cycle: Vec<usize> },
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Vertex { v } => write!(f, "v={v}"),
            Instance::Edge { u, v } => write!(f, "e={u}-{v}"),
            Instance::Pair { u, v } => write!(f, "pair={u},{v}"),
            Instance::Subdivision { k } => write!(f, "k={k}"),
            Instance::Cycle { cycle } => {
                let parts: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
                write!(f, "C={}", parts.join("-"))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    /// Removal on a single-vertex graph, or subdivision of an edgeless one.
    TooSmall,
    CutVertex,
    Bridge,
    AdjacentPair,
    SubdivisionTooShort,
    EdgeCap,
    OrderCap,
    SolverUnknown,
}

impl SkipReason {
    pub fn as_str(self) -> &'static str {
        match self {
            SkipReason::TooSmall => "too-small",
            SkipReason::CutVertex => "cut-vertex",
            SkipReason::Bridge => "bridge",
            SkipReason::AdjacentPair => "adjacent-pair",
            SkipReason::SubdivisionTooShort => "subdivision-too-short",
            SkipReason::EdgeCap => "edge-cap",
            SkipReason::OrderCap => "order-cap",
            SkipReason::SolverUnknown => "solver-unknown",
        }
    }
}

/// Summary of one constructive recoloring run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRun {
    pub status: WitnessStatus,
    pub case: &'static str,
    pub colors_used: usize,
    pub color_bound: usize,
    /// Validated, yet fewer colors than χ_dd of the target: a solver bug.
    pub below_chi: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl WitnessRun {
    fn new(outcome: &WitnessOutcome, chi_target: usize) -> WitnessRun {
        WitnessRun {
            status: outcome.status,
            case: outcome.case,
            colors_used: outcome.colors_used,
            color_bound: outcome.color_bound,
            below_chi: outcome.is_validated() && outcome.colors_used < chi_target,
            detail: outcome.gap.as_ref().map(|gap| {
                let mut s = gap.diagnostic.to_string();
                if gap.over_budget {
                    s.push_str(&format!(
                        "; {} colors exceed bound {}",
                        outcome.colors_used, outcome.color_bound
                    ));
                }
                format!("{} [{}]", s, outcome.coloring)
            }),
        }
    }
}

/// One verified inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub theorem: u8,
    pub graph: String,
    pub instance: Instance,
    pub chi_before: usize,
    pub chi_after: usize,
    pub lower: i64,
    pub upper: i64,
    pub holds: bool,
    pub tight_lower: bool,
    pub tight_upper: bool,
    /// Construction building a coloring of the larger/merged graph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extend: Option<WitnessRun>,
    /// Construction following the case analysis.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduce: Option<WitnessRun>,
    /// Partition-oracle agreement on the subdivided graph, when small enough.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Skip {
    pub theorem: u8,
    pub graph: String,
    pub instance: Instance,
    pub reason: SkipReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum CheckOutcome {
    Checked(TheoremCheck),
    Skipped(Skip),
}

/// Harness settings. Defaults: all theorems, k in 2..=4, cycle cap
/// `min(n, 6)`, subdivided order cap 24, subdivision edge cap 6, oracle
/// cross-check up to order 8, witnesses on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessConfig {
    pub theorems: Vec<u8>,
    pub k_min: usize,
    pub k_max: usize,
    pub cycle_cap: Option<usize>,
    pub subdivided_order_cap: usize,
    pub subdivision_max_edges: usize,
    pub oracle_cross_check_order: usize,
    pub budget: Budget,
    pub witnesses: bool,
    #[serde(skip)]
    pub workers: Option<usize>,
    /// Largest order whose χ_dd results are memoized.
    pub cache_max_order: usize,
    /// Gap examples kept per theorem, direction and case.
    pub gap_examples: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            theorems: ALL_THEOREMS.to_vec(),
            k_min: 2,
            k_max: 4,
            cycle_cap: None,
            subdivided_order_cap: 24,
            subdivision_max_edges: 6,
            oracle_cross_check_order: 8,
            budget: Budget::default(),
            witnesses: true,
            workers: None,
            cache_max_order: 6,
            gap_examples: 3,
        }
    }
}

impl HarnessConfig {
    pub fn with_theorems(mut self, theorems: &[u8]) -> Self {
        let set: BTreeSet<u8> = theorems.iter().copied().collect();
        self.theorems = set.into_iter().collect();
        self
    }

    fn validate(&self) -> Result<()> {
        if let Some(bad) = self.theorems.iter().find(|t| !(1..=6).contains(*t)) {
            return Err(Error::InvalidParams(format!("unknown theorem {bad}")));
        }
        if self.k_min == 0 || self.k_min > self.k_max {
            return Err(Error::InvalidParams(format!(
                "bad k-range {}..={}",
                self.k_min, self.k_max
            )));
        }
        Ok(())
    }
}

/// Solves χ_dd with memoization keyed by graph6.
pub struct Checker {
    config: HarnessConfig,
    cache: RwLock<HashMap<String, Arc<SolveResult>>>,
    paths: PathTable,
}

/// A solved graph, or the skip reason if the solver gave up.
type Solved = std::result::Result<Arc<SolveResult>, SkipReason>;

impl Checker {
    pub fn new(config: HarnessConfig) -> Result<Checker> {
        config.validate()?;
        let paths = PathTable::new(config.budget);
        Ok(Checker {
            config,
            cache: RwLock::new(HashMap::new()),
            paths,
        })
    }

    pub fn config(&self) -> &HarnessConfig {
        &self.config
    }

    fn solve(&self, g: &Graph) -> Result<Solved> {
        let cacheable = g.order() <= self.config.cache_max_order;
        let key = cacheable.then(|| to_graph6(g));
        if let Some(key) = &key {
            if let Some(hit) = self.cache.read().expect("cache lock").get(key) {
                return Ok(Ok(Arc::clone(hit)));
            }
        }
        let result = chi_dd_exact(g, self.config.budget)?;
        if !result.is_exact() {
            return Ok(Err(SkipReason::SolverUnknown));
        }
        let result = Arc::new(result);
        if let Some(key) = key {
            self.cache
                .write()
                .expect("cache lock")
                .insert(key, Arc::clone(&result));
        }
        Ok(Ok(result))
    }

    fn path_chi(&self, k: usize) -> Result<std::result::Result<usize, SkipReason>> {
        match self.paths.chi_dd(k) {
            Ok(v) => Ok(Ok(v)),
            Err(Error::BudgetExhausted) => Ok(Err(SkipReason::SolverUnknown)),
            Err(e) => Err(e),
        }
    }

    fn cycle_cap(&self, g: &Graph) -> usize {
        self.config.cycle_cap.unwrap_or(6).min(g.order())
    }

    /// Every instance of a theorem on `g`, including ones that will be skipped.
    pub fn instances(&self, theorem: u8, g: &Graph) -> Vec<Instance> {
        let n = g.order();
        match theorem {
            1 => (0..n).map(|v| Instance::Vertex { v }).collect(),
            2 | 3 => g.edges().map(|(u, v)| Instance::Edge { u, v }).collect(),
            4 => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .map(|(u, v)| Instance::Pair { u, v })
                .collect(),
            5 => (self.config.k_min..=self.config.k_max)
                .map(|k| Instance::Subdivision { k })
                .collect(),
            6 => enumerate_cycles(g, self.cycle_cap(g))
                .into_iter()
                .map(|c| Instance::Cycle {
                    cycle: c.vertices().to_vec(),
                })
                .collect(),
            _ => Vec::new(),
        }
    }

    /// Checks one theorem instance on a connected graph.
    pub fn check_theorem(
        &self,
        theorem: u8,
        g: &Graph,
        instance: &Instance,
    ) -> Result<CheckOutcome> {
        g.require_connected()?;
        let skip = |reason| {
            Ok(CheckOutcome::Skipped(Skip {
                theorem,
                graph: to_graph6(g),
                instance: instance.clone(),
                reason,
            }))
        };
        macro_rules! solved {
            ($e:expr) => {
                match $e? {
                    Ok(v) => v,
                    Err(reason) => return skip(reason),
                }
            };
        }
        let before = solved!(self.solve(g));
        let chi = before.upper;
        let witnesses = self.config.witnesses;
        let mut check = TheoremCheck {
            theorem,
            graph: to_graph6(g),
            instance: instance.clone(),
            chi_before: chi,
            chi_after: 0,
            lower: 0,
            upper: 0,
            holds: false,
            tight_lower: false,
            tight_upper: false,
            extend: None,
            reduce: None,
            oracle_agrees: None,
        };
        let chi_i = chi as i64;

        match (theorem, instance) {
            (1, Instance::Vertex { v }) => {
                g.check_vertex(*v)?;
                if g.order() < 2 {
                    return skip(SkipReason::TooSmall);
                }
                if cut_vertices(g)?.contains(v) {
                    return skip(SkipReason::CutVertex);
                }
                let target = ops::remove_vertex(g, *v)?.graph;
                let after = solved!(self.solve(&target));
                check.chi_after = after.upper;
                check.lower = chi_i - 1;
                check.upper = chi_i + g.degree(*v) as i64 - 1;
                if witnesses {
                    let ext =
                        extend_witness(&ExtendKind::AddVertex { vertex: *v }, g, &after.witness)?;
                    check.extend = Some(WitnessRun::new(&ext, chi));
                    let red = reduce_witness(
                        &ReduceKind::RemoveVertex { vertex: *v },
                        g,
                        &before.witness,
                    )?;
                    check.reduce = Some(WitnessRun::new(&red, after.upper));
                }
            }
            (2, Instance::Edge { u, v }) => {
                let (u, v) = (*u, *v);
                let target = ops::remove_edge(g, u, v)?;
                if bridges(g)?.contains(&(u.min(v), u.max(v))) {
                    return skip(SkipReason::Bridge);
                }
                let after = solved!(self.solve(&target));
                check.chi_after = after.upper;
                check.lower = chi_i - 1;
                check.upper = chi_i + 2;
                if witnesses {
                    let ext = extend_witness(&ExtendKind::AddEdge { u, v }, g, &after.witness)?;
                    check.extend = Some(WitnessRun::new(&ext, chi));
                    let red = reduce_witness(&ReduceKind::RemoveEdge { u, v }, g, &before.witness)?;
                    check.reduce = Some(WitnessRun::new(&red, after.upper));
                }
            }
            (3, Instance::Edge { u, v }) | (4, Instance::Pair { u, v }) => {
                let (u, v) = (*u, *v);
                let (target, kind) = if theorem == 3 {
                    (
                        ops::contract_edge(g, u, v)?,
                        ExtendKind::ContractEdge { u, v },
                    )
                } else {
                    if g.has_edge(u, v) {
                        return skip(SkipReason::AdjacentPair);
                    }
                    (
                        ops::contract_vertices(g, u, v)?,
                        ExtendKind::ContractVertices { u, v },
                    )
                };
                let after = solved!(self.solve(&target.graph));
                check.chi_after = after.upper;
                check.lower = chi_i - 2;
                check.upper = chi_i + 1;
                if witnesses {
                    let ext = extend_witness(&kind, g, &before.witness)?;
                    check.extend = Some(WitnessRun::new(&ext, after.upper));
                    let red = reduce_witness(&ReduceKind::Uncontract { u, v }, g, &after.witness)?;
                    check.reduce = Some(WitnessRun::new(&red, chi));
                }
            }
            (5, Instance::Subdivision { k }) => {
                let k = *k;
                let m = g.size();
                if m == 0 {
                    return skip(SkipReason::TooSmall);
                }
                if k < 2 {
                    return skip(SkipReason::SubdivisionTooShort);
                }
                if m > self.config.subdivision_max_edges {
                    return skip(SkipReason::EdgeCap);
                }
                if g.order() + m * (k - 1) > self.config.subdivided_order_cap {
                    return skip(SkipReason::OrderCap);
                }
                let (target, _) = ops::subdivide(g, k)?;
                let after = solved!(self.solve(&target));
                let p_k = solved!(self.path_chi(k)) as i64;
                let p_k1 = solved!(self.path_chi(k + 1)) as i64;
                check.chi_after = after.upper;
                check.lower = p_k1;
                check.upper = (m as i64 - 1) * p_k + p_k1;
                if target.order() <= self.config.oracle_cross_check_order {
                    check.oracle_agrees = Some(chi_dd_oracle(&target)? == after.upper);
                }
            }
            (6, Instance::Cycle { cycle }) => {
                let spec = CycleSpec::new(g, cycle.clone())?;
                let target = ops::cycle_extend(g, &spec)?;
                let after = solved!(self.solve(&target));
                check.chi_after = after.upper;
                check.lower = chi_i - spec.len() as i64;
                check.upper = chi_i + 1;
                if witnesses {
                    let ext = extend_witness(
                        &ExtendKind::CycleExtend {
                            cycle: spec.clone(),
                        },
                        g,
                        &before.witness,
                    )?;
                    check.extend = Some(WitnessRun::new(&ext, after.upper));
                    let red =
                        reduce_witness(&ReduceKind::RemoveHub { cycle: spec }, g, &after.witness)?;
                    check.reduce = Some(WitnessRun::new(&red, chi));
                }
            }
            _ => {
                return Err(Error::InvalidParams(format!(
                    "instance {instance} does not apply to theorem {theorem}"
                )))
            }
        }
        let after = check.chi_after as i64;
        check.holds = check.lower <= after && after <= check.upper;
        check.tight_lower = after == check.lower;
        check.tight_upper = after == check.upper;
        Ok(check_outcome(check))
    }

    /// All configured theorems over every instance of one graph.
    pub fn check_graph(&self, g: &Graph) -> Result<Vec<CheckOutcome>> {
        let mut out = Vec::new();
        for &t in &self.config.theorems {
            for inst in self.instances(t, g) {
                out.push(self.check_theorem(t, g, &inst)?);
            }
        }
        Ok(out)
    }
}

fn check_outcome(check: TheoremCheck) -> CheckOutcome {
    CheckOutcome::Checked(check)
}

/// Counts for one witness direction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct WitnessTally {
    pub runs: usize,
    pub validated: usize,
    pub gaps: usize,
    pub over_budget: usize,
    pub below_chi: usize,
    pub by_case: BTreeMap<String, CaseTally>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CaseTally {
    pub runs: usize,
    pub validated: usize,
    pub gaps: usize,
}

impl WitnessTally {
    fn record(&mut self, run: &WitnessRun) {
        self.runs += 1;
        let case = self.by_case.entry(run.case.to_string()).or_default();
        case.runs += 1;
        if run.status == WitnessStatus::Validated {
            self.validated += 1;
            case.validated += 1;
        } else {
            self.gaps += 1;
            case.gaps += 1;
        }
        if run.colors_used > run.color_bound {
            self.over_budget += 1;
        }
        if run.below_chi {
            self.below_chi += 1;
        }
    }

    fn merge(&mut self, other: WitnessTally) {
        self.runs += other.runs;
        self.validated += other.validated;
        self.gaps += other.gaps;
        self.over_budget += other.over_budget;
        self.below_chi += other.below_chi;
        for (case, t) in other.by_case {
            let mine = self.by_case.entry(case).or_default();
            mine.runs += t.runs;
            mine.validated += t.validated;
            mine.gaps += t.gaps;
        }
    }

    /// Fraction of runs that ended in a gap.
    pub fn gap_rate(&self) -> f64 {
        if self.runs == 0 {
            0.0
        } else {
            self.gaps as f64 / self.runs as f64
        }
    }
}

/// Per-theorem aggregate over a corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TheoremSummary {
    pub theorem: u8,
    pub instances: usize,
    pub holds: usize,
    pub violations: usize,
    pub unknowns: usize,
    pub skipped: BTreeMap<String, usize>,
    pub tight_lower: usize,
    pub tight_upper: usize,
    pub extend: WitnessTally,
    pub reduce: WitnessTally,
    pub oracle_checked: usize,
    pub oracle_mismatches: usize,
}

impl TheoremSummary {
    pub fn skipped_total(&self) -> usize {
        self.skipped.values().sum()
    }

    fn merge(&mut self, other: TheoremSummary) {
        self.instances += other.instances;
        self.holds += other.holds;
        self.violations += other.violations;
        self.unknowns += other.unknowns;
        for (k, v) in other.skipped {
            *self.skipped.entry(k).or_default() += v;
        }
        self.tight_lower += other.tight_lower;
        self.tight_upper += other.tight_upper;
        self.extend.merge(other.extend);
        self.reduce.merge(other.reduce);
        self.oracle_checked += other.oracle_checked;
        self.oracle_mismatches += other.oracle_mismatches;
    }
}

/// A recorded proof-construction gap.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GapExample {
    pub theorem: u8,
    pub direction: &'static str,
    pub case: &'static str,
    pub graph: String,
    pub instance: Instance,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusDescriptor {
    pub description: String,
    pub graphs: usize,
    /// Disconnected inputs, which no theorem applies to.
    pub rejected_disconnected: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub instances: usize,
    pub violations: usize,
    pub unknowns: usize,
    pub extend_gaps: usize,
    pub reduce_gaps: usize,
    pub anomalies: usize,
}

/// Aggregated result of a corpus run.
///
/// Everything except `elapsed_ms` is a pure function of the corpus and the
/// configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub schema: u32,
    pub corpus: CorpusDescriptor,
    pub config: HarnessConfig,
    pub totals: Totals,
    pub theorems: Vec<TheoremSummary>,
    pub violations: Vec<TheoremCheck>,
    pub unknowns: Vec<Skip>,
    pub gap_examples: Vec<GapExample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CorpusReport {
    /// Zero violations, zero solver unknowns and no witness anomalies.
    pub fn is_clean(&self) -> bool {
        self.totals.violations == 0 && self.totals.unknowns == 0 && self.totals.anomalies == 0
    }

    pub fn summary(&self, theorem: u8) -> Option<&TheoremSummary> {
        self.theorems.iter().find(|t| t.theorem == theorem)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned-column text rendering.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "corpus: {} ({} graphs, {} disconnected rejected)",
            self.corpus.description, self.corpus.graphs, self.corpus.rejected_disconnected
        );
        let _ = writeln!(
            s,
            "{:>3} {:>10} {:>10} {:>6} {:>6} {:>9} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
            "thm",
            "instances",
            "holds",
            "viol",
            "unk",
            "skipped",
            "tight-lo",
            "tight-hi",
            "ext-ok",
            "ext-gap",
            "red-ok",
            "red-gap"
        );
        for t in &self.theorems {
            let _ = writeln!(
                s,
                "{:>3} {:>10} {:>10} {:>6} {:>6} {:>9} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
                t.theorem,
                t.instances,
                t.holds,
                t.violations,
                t.unknowns,
                t.skipped_total(),
                t.tight_lower,
                t.tight_upper,
                t.extend.validated,
                t.extend.gaps,
                t.reduce.validated,
                t.reduce.gaps
            );
        }
        let mut any_case = false;
        for t in &self.theorems {
            for (dir, tally) in [("extend", &t.extend), ("reduce", &t.reduce)] {
                for (case, c) in &tally.by_case {
                    if !any_case {
                        let _ = writeln!(s, "\nwitness cases:");
                        any_case = true;
                    }
                    let rate = if c.runs == 0 {
                        0.0
                    } else {
                        c.gaps as f64 / c.runs as f64
                    };
                    let _ = writeln!(
                        s,
                        "  thm {} {:<6} {:<60} runs {:>8}  gaps {:>8}  ({:.2}%)",
                        t.theorem,
                        dir,
                        case,
                        c.runs,
                        c.gaps,
                        100.0 * rate
                    );
                }
            }
        }
        if !self.gap_examples.is_empty() {
            let _ = writeln!(s, "\ngap examples:");
            for g in &self.gap_examples {
                let _ = writeln!(
                    s,
                    "  thm {} {} [{}] {} {}: {}",
                    g.theorem, g.direction, g.case, g.graph, g.instance, g.detail
                );
            }
        }
        for v in &self.violations {
            let _ = writeln!(
                s,
                "VIOLATION thm {} {} {}: chi {} -> {} not in [{}, {}]",
                v.theorem, v.graph, v.instance, v.chi_before, v.chi_after, v.lower, v.upper
            );
        }
        for u in &self.unknowns {
            let _ = writeln!(s, "UNKNOWN thm {} {} {}", u.theorem, u.graph, u.instance);
        }
        let _ = writeln!(
            s,
            "\ntotal: {} instances, {} violations, {} unknowns, {} anomalies",
            self.totals.instances,
            self.totals.violations,
            self.totals.unknowns,
            self.totals.anomalies
        );
        s
    }

    /// One CSV row per theorem.
    pub fn to_csv(&self) -> String {
        let mut s = String::from(
            "theorem,instances,holds,violations,unknowns,skipped,tight_lower,tight_upper,extend_validated,extend_gaps,reduce_validated,reduce_gaps,oracle_checked,oracle_mismatches\n",
        );
        for t in &self.theorems {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                t.theorem,
                t.instances,
                t.holds,
                t.violations,
                t.unknowns,
                t.skipped_total(),
                t.tight_lower,
                t.tight_upper,
                t.extend.validated,
                t.extend.gaps,
                t.reduce.validated,
                t.reduce.gaps,
                t.oracle_checked,
                t.oracle_mismatches
            );
        }
        s
    }
}

/// Order-insensitive partial result of a corpus run.
#[derive(Default)]
struct Accumulator {
    theorems: BTreeMap<u8, TheoremSummary>,
    violations: Vec<TheoremCheck>,
    unknowns: Vec<Skip>,
    gaps: BTreeMap<(u8, &'static str, &'static str), BTreeSet<GapExample>>,
    graphs: usize,
    disconnected: usize,
}

impl Accumulator {
    fn add(&mut self, outcome: CheckOutcome, keep: usize) {
        match outcome {
            CheckOutcome::Skipped(skip) => {
                let t = self.theorems.entry(skip.theorem).or_default();
                *t.skipped
                    .entry(skip.reason.as_str().to_string())
                    .or_default() += 1;
                if skip.reason == SkipReason::SolverUnknown {
                    t.unknowns += 1;
                    self.unknowns.push(skip);
                }
            }
            CheckOutcome::Checked(check) => {
                let t = self.theorems.entry(check.theorem).or_default();
                t.instances += 1;
                if check.holds {
                    t.holds += 1;
                } else {
                    t.violations += 1;
                }
                t.tight_lower += check.tight_lower as usize;
                t.tight_upper += check.tight_upper as usize;
                if let Some(agrees) = check.oracle_agrees {
                    t.oracle_checked += 1;
                    t.oracle_mismatches += (!agrees) as usize;
                }
                for (dir, run) in [("extend", &check.extend), ("reduce", &check.reduce)] {
                    let Some(run) = run else { continue };
                    if dir == "extend" {
                        t.extend.record(run);
                    } else {
                        t.reduce.record(run);
                    }
                    if run.status == WitnessStatus::Gap && keep > 0 {
                        let set = self.gaps.entry((check.theorem, dir, run.case)).or_default();
                        set.insert(GapExample {
                            theorem: check.theorem,
                            direction: dir,
                            case: run.case,
                            graph: check.graph.clone(),
                            instance: check.instance.clone(),
                            detail: run.detail.clone().unwrap_or_default(),
                        });
                        if set.len() > keep {
                            set.pop_last();
                        }
                    }
                }
                if !check.holds {
                    self.violations.push(check);
                }
            }
        }
    }

    fn merge(mut self, other: Accumulator, keep: usize) -> Accumulator {
        for (id, t) in other.theorems {
            self.theorems.entry(id).or_default().merge(t);
        }
        self.violations.extend(other.violations);
        self.unknowns.extend(other.unknowns);
        for (key, set) in other.gaps {
            let mine = self.gaps.entry(key).or_default();
            mine.extend(set);
            while mine.len() > keep {
                mine.pop_last();
            }
        }
        self.graphs += other.graphs;
        self.disconnected += other.disconnected;
        self
    }
}

/// Runs every configured theorem over every instance of every graph.
pub fn run_corpus(
    graphs: &[Graph],
    description: &str,
    config: HarnessConfig,
) -> Result<CorpusReport> {
    let started = Instant::now();
    let checker = Checker::new(config)?;
    let keep = checker.config.gap_examples;
    let work = || -> Result<Accumulator> {
        graphs
            .par_iter()
            .try_fold(Accumulator::default, |mut acc, g| {
                acc.graphs += 1;
                if !g.is_connected() {
                    acc.disconnected += 1;
                    return Ok(acc);
                }
                for outcome in checker.check_graph(g)? {
                    acc.add(outcome, keep);
                }
                Ok(acc)
            })
            .try_reduce(Accumulator::default, |a, b| Ok(a.merge(b, keep)))
    };
    let acc = match checker.config.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidParams(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    Ok(finish_report(acc, description, checker.config, started))
}

fn finish_report(
    mut acc: Accumulator,
    description: &str,
    config: HarnessConfig,
    started: Instant,
) -> CorpusReport {
    let theorems: Vec<TheoremSummary> = config
        .theorems
        .iter()
        .map(|&id| {
            let mut t = acc.theorems.remove(&id).unwrap_or_default();
            t.theorem = id;
            t
        })
        .collect();
    let sort_key = |c: &TheoremCheck| (c.graph.clone(), c.theorem, c.instance.clone());
    acc.violations.sort_by_key(sort_key);
    acc.unknowns.sort_by(|a, b| {
        (&a.graph, a.theorem, &a.instance).cmp(&(&b.graph, b.theorem, &b.instance))
    });
    let gap_examples: Vec<GapExample> = acc.gaps.into_values().flatten().collect();
    let totals = Totals {
        instances: theorems.iter().map(|t| t.instances).sum(),
        violations: theorems.iter().map(|t| t.violations).sum(),
        unknowns: theorems.iter().map(|t| t.unknowns).sum(),
        extend_gaps: theorems.iter().map(|t| t.extend.gaps).sum(),
        reduce_gaps: theorems.iter().map(|t| t.reduce.gaps).sum(),
        anomalies: theorems
            .iter()
            .map(|t| {
                t.extend.gaps
                    + t.extend.below_chi
                    + t.reduce.below_chi
                    + t.reduce.over_budget.min(t.reduce.validated)
                    + t.oracle_mismatches
            })
            .sum(),
    };
    CorpusReport {
        schema: SCHEMA_VERSION,
        corpus: CorpusDescriptor {
            description: description.to_string(),
            graphs: acc.graphs,
            rejected_disconnected: acc.disconnected,
        },
        config,
        totals,
        theorems,
        violations: acc.violations,
        unknowns: acc.unknowns,
        gap_examples,
        elapsed_ms: None,
    }
    .with_elapsed(started)
}

impl CorpusReport {
    fn with_elapsed(mut self, started: Instant) -> CorpusReport {
        self.elapsed_ms = Some(started.elapsed().as_millis() as u64);
        self
    }

    /// Drops the timing field so two reports can be compared byte for byte.
    pub fn without_timing(mut self) -> CorpusReport {
        self.elapsed_ms = None;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn checked(o: CheckOutcome) -> TheoremCheck {
        match o {
            CheckOutcome::Checked(c) => c,
            CheckOutcome::Skipped(s) => panic!("skipped: {s:?}"),
        }
    }

    #[test]
    fn vertex_removal_on_c4() {
        let checker = Checker::new(HarnessConfig::default()).unwrap();
        let c = checked(
            checker
                .check_theorem(1, &Graph::cycle(4).unwrap(), &Instance::Vertex { v: 0 })
                .unwrap(),
        );
        assert_eq!((c.chi_before, c.chi_after, c.lower, c.upper), (2, 2, 1, 3));
        assert!(c.holds);
        assert_eq!(c.extend.unwrap().status, WitnessStatus::Validated);
    }

    #[test]
    fn subdivision_of_triangle() {
        let checker = Checker::new(HarnessConfig::default()).unwrap();
        let c = checked(
            checker
                .check_theorem(
                    5,
                    &Graph::cycle(3).unwrap(),
                    &Instance::Subdivision { k: 2 },
                )
                .unwrap(),
        );
        assert_eq!((c.chi_after, c.lower, c.upper), (4, 2, 6));
        assert!(c.holds);
        assert_eq!(c.oracle_agrees, Some(true));
    }

    #[test]
    fn cycle_extension_on_c4_is_tight() {
        let checker = Checker::new(HarnessConfig::default()).unwrap();
        let c = checked(
            checker
                .check_theorem(
                    6,
                    &Graph::cycle(4).unwrap(),
                    &Instance::Cycle {
                        cycle: vec![0, 1, 2, 3],
                    },
                )
                .unwrap(),
        );
        assert_eq!((c.chi_after, c.lower, c.upper), (3, -2, 3));
        assert!(c.holds && c.tight_upper);
    }

    #[test]
    fn hypothesis_violations_are_skips() {
        let checker = Checker::new(HarnessConfig::default()).unwrap();
        let p4 = Graph::path(4).unwrap();
        let o = checker
            .check_theorem(1, &p4, &Instance::Vertex { v: 1 })
            .unwrap();
        assert!(matches!(
            o,
            CheckOutcome::Skipped(Skip {
                reason: SkipReason::CutVertex,
                ..
            })
        ));
        let o = checker
            .check_theorem(2, &p4, &Instance::Edge { u: 0, v: 1 })
            .unwrap();
        assert!(matches!(
            o,
            CheckOutcome::Skipped(Skip {
                reason: SkipReason::Bridge,
                ..
            })
        ));
        let o = checker
            .check_theorem(4, &p4, &Instance::Pair { u: 0, v: 1 })
            .unwrap();
        assert!(matches!(
            o,
            CheckOutcome::Skipped(Skip {
                reason: SkipReason::AdjacentPair,
                ..
            })
        ));
        let o = checker
            .check_theorem(5, &p4, &Instance::Subdivision { k: 1 })
            .unwrap();
        assert!(matches!(
            o,
            CheckOutcome::Skipped(Skip {
                reason: SkipReason::SubdivisionTooShort,
                ..
            })
        ));
        let k1 = Graph::empty(1).unwrap();
        let o = checker
            .check_theorem(1, &k1, &Instance::Vertex { v: 0 })
            .unwrap();
        assert!(matches!(
            o,
            CheckOutcome::Skipped(Skip {
                reason: SkipReason::TooSmall,
                ..
            })
        ));
        assert!(checker
            .check_theorem(1, &p4, &Instance::Edge { u: 0, v: 1 })
            .is_err());
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            checker.check_theorem(1, &split, &Instance::Vertex { v: 2 }),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn empty_theorem_set() {
        let graphs = vec![Graph::cycle(4).unwrap()];
        let report =
            run_corpus(&graphs, "c4", HarnessConfig::default().with_theorems(&[])).unwrap();
        assert_eq!(report.totals.instances, 0);
        assert!(report.theorems.is_empty());
        assert!(report.is_clean());
    }

    #[test]
    fn bad_config_rejected() {
        assert!(Checker::new(HarnessConfig::default().with_theorems(&[7])).is_err());
        let cfg = HarnessConfig {
            k_min: 4,
            k_max: 2,
            ..HarnessConfig::default()
        };
        assert!(Checker::new(cfg).is_err());
    }

    #[test]
    fn instance_labels() {
        assert_eq!(Instance::Edge { u: 0, v: 3 }.to_string(), "e=0-3");
        assert_eq!(
            Instance::Cycle {
                cycle: vec![0, 1, 2]
            }
            .to_string(),
            "C=0-1-2"
        );
    }
}
