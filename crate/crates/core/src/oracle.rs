//! Exhaustive ground truth at desk scale.
//!
//! Branch-and-bound over edge inclusion in lexicographic order. A branch dies
//! when its partial graph already contains the forest (containment is
//! monotone under edge addition, checked incrementally through the new edge)
//! or when the undecided edges cannot lift it back to the incumbent. The
//! incumbent seeds from the best forest-free construction, which is what
//! makes mid-size instances practical.
//!
//! Determinism: the tree is split at a fixed depth into an ordered task list;
//! tasks never share incumbents, and merging is a fold over the fixed order.
//! Worker count therefore changes wall time only — max_edges, extremal keys
//! and node counts are bitwise stable.

use crate::canon::{canonical_key_bipartite, canonical_key_general, CanonError, CanonicalKey};
use crate::construct::{build_family, complete_bipartite};
use crate::embed::{contains_forest, contains_forest_through_edge, ForestSearch};
use crate::forest::LinearForestSpec;
use crate::formulas::{ex_forest_bipartite, FormulaError};
use crate::graph::{AdjacencyHost, BipartiteGraph, GeneralGraph};
use crate::report::{fixed9, json_str, json_str_array};
use crate::spectral::{spectral_radius, SpectralError};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Fixed split depth for the task list; see the module notes on determinism.
const SPLIT_DEPTH: usize = 6;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("bipartite search budget: m*n = {cells} exceeds {max} (FOREST_TURAN_BUDGET raises it)")]
    BipartiteBudget { cells: usize, max: usize },
    #[error("general search budget: order {order} exceeds {max}")]
    GeneralBudget { order: usize, max: usize },
    #[error("spectral search budget: order {order} exceeds {max}")]
    SpectralBudget { order: usize, max: usize },
    #[error("oracle sides are limited to 64 vertices, got {0}")]
    SideTooWide(usize),
    #[error("embedding step budget exhausted inside the oracle; raise the embed budget")]
    EmbedBudget,
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Search ceilings. `FOREST_TURAN_BUDGET` overrides them as
/// `cells[,general_order[,spectral_order]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBudget {
    /// Max m*n for the bipartite edge search.
    pub max_bipartite_cells: usize,
    /// Max order for the general-graph edge search.
    pub max_general_order: usize,
    /// Max order for the bipartite spectral enumeration.
    pub max_spectral_bipartite_order: usize,
    /// Max order for the general spectral enumeration.
    pub max_spectral_general_order: usize,
    /// Step budget handed to each containment query.
    pub embed_steps: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_bipartite_cells: 30,
            max_general_order: 8,
            max_spectral_bipartite_order: 8,
            max_spectral_general_order: 7,
            embed_steps: crate::embed::DEFAULT_STEP_BUDGET,
        }
    }
}

impl OracleBudget {
    /// Parse the `FOREST_TURAN_BUDGET` value; silently keeps defaults for
    /// missing fields.
    pub fn from_env_value(value: &str) -> Self {
        let mut budget = OracleBudget::default();
        let mut fields = value.split(',').map(str::trim);
        if let Some(Ok(cells)) = fields.next().map(str::parse) {
            budget.max_bipartite_cells = cells;
        }
        if let Some(Ok(order)) = fields.next().map(str::parse) {
            budget.max_general_order = order;
        }
        if let Some(Ok(order)) = fields.next().map(str::parse::<usize>) {
            budget.max_spectral_bipartite_order = order;
            budget.max_spectral_general_order = order.saturating_sub(1);
        }
        budget
    }

    /// Budget from the environment, defaults when unset.
    pub fn from_env() -> Self {
        match std::env::var("FOREST_TURAN_BUDGET") {
            Ok(v) => Self::from_env_value(&v),
            Err(_) => OracleBudget::default(),
        }
    }
}

/// Which universe a report describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleKind {
    Bipartite { m: usize, n: usize },
    General { order: usize },
}

/// Exact extremal count plus every extremal graph up to isomorphism.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub kind: OracleKind,
    pub spec: LinearForestSpec,
    pub max_edges: u64,
    /// Canonical keys of all extremal graphs, sorted and deduplicated.
    pub extremal_keys: Vec<CanonicalKey>,
    /// Search-tree nodes visited; deterministic for fixed parameters.
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl OracleReport {
    pub fn contains_key(&self, key: &CanonicalKey) -> bool {
        self.extremal_keys.binary_search(key).is_ok()
    }

    /// Stable JSON: fixed field order, no timings.
    pub fn stable_json(&self) -> String {
        let keys = json_str_array(self.extremal_keys.iter().map(|k| k.to_hex()));
        match &self.kind {
            OracleKind::Bipartite { m, n } => format!(
                "{{\"kind\":\"bipartite\",\"m\":{m},\"n\":{n},\"spec\":{},\"max_edges\":{},\"extremal_keys\":{},\"nodes_explored\":{}}}",
                json_str(&self.spec.to_string()),
                self.max_edges,
                keys,
                self.nodes_explored
            ),
            OracleKind::General { order } => format!(
                "{{\"kind\":\"general\",\"order\":{order},\"spec\":{},\"max_edges\":{},\"extremal_keys\":{},\"nodes_explored\":{}}}",
                json_str(&self.spec.to_string()),
                self.max_edges,
                keys,
                self.nodes_explored
            ),
        }
    }
}

// ---------------------------------------------------------------------------
// Shared branch-and-bound core
// ---------------------------------------------------------------------------

/// The two search universes differ only in edge bookkeeping, the containment
/// probe, and leaf canonicalization.
trait SearchSpace: Sync {
    fn slots(&self) -> usize;
    fn row_count(&self) -> usize;
    fn toggle(&self, rows: &mut [u64], idx: usize);
    fn free_through(&self, rows: &[u64], idx: usize, budget: u64) -> ForestSearch;
    fn canonical(&self, rows: &[u64]) -> Result<CanonicalKey, CanonError>;
}

struct BipSpace<'s> {
    m: usize,
    n: usize,
    spec: &'s LinearForestSpec,
}

/// Adjacency view over the searcher's transient row masks.
struct BipView<'a> {
    m: usize,
    n: usize,
    rows: &'a [u64],
}

impl AdjacencyHost for BipView<'_> {
    fn order(&self) -> usize {
        self.m + self.n
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        let (lo, hi) = (u.min(v), u.max(v));
        lo < self.m && hi >= self.m && (self.rows[lo] >> (hi - self.m)) & 1 != 0
    }

    fn degree(&self, u: usize) -> usize {
        if u < self.m {
            self.rows[u].count_ones() as usize
        } else {
            let bit = 1u64 << (u - self.m);
            self.rows.iter().filter(|&&r| r & bit != 0).count()
        }
    }

    fn neighbors_of(&self, u: usize, out: &mut Vec<usize>) {
        out.clear();
        if u < self.m {
            let mut w = self.rows[u];
            while w != 0 {
                out.push(self.m + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        } else {
            let bit = 1u64 << (u - self.m);
            out.extend((0..self.m).filter(|&x| self.rows[x] & bit != 0));
        }
    }

    fn side_split(&self) -> Option<(usize, usize)> {
        Some((self.m, self.n))
    }
}

impl SearchSpace for BipSpace<'_> {
    fn slots(&self) -> usize {
        self.m * self.n
    }

    fn row_count(&self) -> usize {
        self.m
    }

    fn toggle(&self, rows: &mut [u64], idx: usize) {
        rows[idx / self.n] ^= 1u64 << (idx % self.n);
    }

    fn free_through(&self, rows: &[u64], idx: usize, budget: u64) -> ForestSearch {
        let view = BipView { m: self.m, n: self.n, rows };
        let (x, y) = (idx / self.n, idx % self.n);
        contains_forest_through_edge(&view, self.spec, x, self.m + y, budget)
    }

    fn canonical(&self, rows: &[u64]) -> Result<CanonicalKey, CanonError> {
        let mut g = BipartiteGraph::empty(self.m, self.n);
        for x in 0..self.m {
            let mut w = rows[x];
            while w != 0 {
                g.add_edge(x, w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        canonical_key_bipartite(&g)
    }
}

struct GenSpace<'s> {
    order: usize,
    pairs: Vec<(usize, usize)>,
    spec: &'s LinearForestSpec,
}

struct GenView<'a> {
    order: usize,
    rows: &'a [u64],
}

impl AdjacencyHost for GenView<'_> {
    fn order(&self) -> usize {
        self.order
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 != 0
    }

    fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones() as usize
    }

    fn neighbors_of(&self, u: usize, out: &mut Vec<usize>) {
        out.clear();
        let mut w = self.rows[u];
        while w != 0 {
            out.push(w.trailing_zeros() as usize);
            w &= w - 1;
        }
    }
}

impl SearchSpace for GenSpace<'_> {
    fn slots(&self) -> usize {
        self.pairs.len()
    }

    fn row_count(&self) -> usize {
        self.order
    }

    fn toggle(&self, rows: &mut [u64], idx: usize) {
        let (u, v) = self.pairs[idx];
        rows[u] ^= 1u64 << v;
        rows[v] ^= 1u64 << u;
    }

    fn free_through(&self, rows: &[u64], idx: usize, budget: u64) -> ForestSearch {
        let view = GenView { order: self.order, rows };
        let (u, v) = self.pairs[idx];
        contains_forest_through_edge(&view, self.spec, u, v, budget)
    }

    fn canonical(&self, rows: &[u64]) -> Result<CanonicalKey, CanonError> {
        let mut g = GeneralGraph::empty(self.order);
        for u in 0..self.order {
            let mut w = rows[u];
            while w != 0 {
                let v = w.trailing_zeros() as usize;
                if v > u {
                    g.add_edge(u, v);
                }
                w &= w - 1;
            }
        }
        canonical_key_general(&g)
    }
}

struct Task {
    rows: Vec<u64>,
    included: u64,
    next: usize,
}

struct TaskResult {
    best: u64,
    keys: BTreeSet<CanonicalKey>,
    nodes: u64,
}

struct Search<'s, S: SearchSpace> {
    space: &'s S,
    seed: u64,
    embed_budget: u64,
}

impl<'s, S: SearchSpace> Search<'s, S> {
    fn run(&self, workers: usize) -> Result<(u64, Vec<CanonicalKey>, u64), OracleError> {
        let total = self.space.slots();
        let mut tasks = Vec::new();
        let mut rows = vec![0u64; self.space.row_count()];
        let mut split_nodes = 0u64;
        self.split(&mut rows, 0, 0, SPLIT_DEPTH.min(total), &mut tasks, &mut split_nodes)?;

        let solve_all = |tasks: &[Task]| -> Result<Vec<TaskResult>, OracleError> {
            tasks.iter().map(|t| self.solve(t)).collect()
        };
        let results = if workers <= 1 {
            solve_all(&tasks)?
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| OracleError::ThreadPool(e.to_string()))?;
            pool.install(|| tasks.par_iter().map(|t| self.solve(t)).collect::<Result<Vec<_>, _>>())?
        };

        let mut best = self.seed;
        for r in &results {
            best = best.max(r.best);
        }
        let mut keys = BTreeSet::new();
        let mut nodes = split_nodes;
        for r in results {
            nodes += r.nodes;
            if r.best == best {
                keys.extend(r.keys);
            }
        }
        Ok((best, keys.into_iter().collect(), nodes))
    }

    fn split(
        &self,
        rows: &mut Vec<u64>,
        included: u64,
        next: usize,
        depth_left: usize,
        tasks: &mut Vec<Task>,
        nodes: &mut u64,
    ) -> Result<(), OracleError> {
        let total = self.space.slots();
        if included + (total - next) as u64 < self.seed {
            return Ok(());
        }
        if depth_left == 0 || next == total {
            tasks.push(Task { rows: rows.clone(), included, next });
            return Ok(());
        }
        *nodes += 1;
        self.space.toggle(rows, next);
        match self.space.free_through(rows, next, self.embed_budget) {
            ForestSearch::Free => {
                self.split(rows, included + 1, next + 1, depth_left - 1, tasks, nodes)?
            }
            ForestSearch::Embedded(_) => {}
            ForestSearch::BudgetExceeded => return Err(OracleError::EmbedBudget),
        }
        self.space.toggle(rows, next);
        self.split(rows, included, next + 1, depth_left - 1, tasks, nodes)
    }

    fn solve(&self, task: &Task) -> Result<TaskResult, OracleError> {
        let mut rows = task.rows.clone();
        let mut result = TaskResult { best: self.seed, keys: BTreeSet::new(), nodes: 0 };
        self.descend(&mut rows, task.included, task.next, &mut result)?;
        Ok(result)
    }

    fn descend(
        &self,
        rows: &mut Vec<u64>,
        included: u64,
        next: usize,
        out: &mut TaskResult,
    ) -> Result<(), OracleError> {
        out.nodes += 1;
        let total = self.space.slots();
        if included + (total - next) as u64 [LT] out.best {
            return Ok(());
        }
        if next == total {
            if included > out.best {
                out.best = included;
                out.keys.clear();
            }
            out.keys.insert(self.space.canonical(rows)?);
            return Ok(());
        }
        self.space.toggle(rows, next);
        match self.space.free_through(rows, next, self.embed_budget) {
            ForestSearch::Free => self.descend(rows, included + 1, next + 1, out)?,
            ForestSearch::Embedded(_) => {}
            ForestSearch::BudgetExceeded => {
                self.space.toggle(rows, next);
                return Err(OracleError::EmbedBudget);
            }
        }
        self.space.toggle(rows, next);
        self.descend(rows, included, next + 1, out)
    }
}

// ---------------------------------------------------------------------------
// Incumbent seeding
// ---------------------------------------------------------------------------

fn transpose(g: &BipartiteGraph) -> BipartiteGraph {
    let mut t = BipartiteGraph::empty(g.n(), g.m());
    for (x, y) in g.edges() {
        t.add_edge(y, x);
    }
    t
}

/// Best forest-free construction on sides (m, n); every candidate is verified
/// forest-free before it may seed the incumbent.
fn seed_bipartite(m: usize, n: usize, spec: &LinearForestSpec) -> u64 {
    let mut candidates: Vec<BipartiteGraph> = vec![complete_bipartite(m, n)];
    let (lo, hi, transposed) = if m <= n { (m, n, false) } else { (n, m, true) };
    if let Ok(result) = ex_forest_bipartite(lo, hi, spec) {
        for desc in &result.extremal {
            if let Ok(built) = build_family(desc) {
                if let Some(b) = built.as_bipartite() {
                    let oriented = if transposed { transpose(b) } else { b.clone() };
                    if oriented.m() == m && oriented.n() == n {
                        candidates.push(oriented);
                    }
                }
            }
        }
    }
    candidates
        .iter()
        .filter(|g| contains_forest(*g, spec).is_free())
        .map(|g| g.edge_count())
        .max()
        .unwrap_or(0)
}

fn seed_general(order: usize, spec: &LinearForestSpec) -> u64 {
    let mut candidates = vec![GeneralGraph::complete(order)];
    let p = spec.p();
    for odd in [false, true] {
        if let Ok(g) = crate::construct::nikiforov_graph(p, order, odd) {
            candidates.push(g);
        }
    }
    candidates.push(crate::construct::matching_graph(order));
    candidates
        .iter()
        .filter(|g| contains_forest(*g, spec).is_free())
        .map(|g| g.edge_count())
        .max()
        .unwrap_or(0)
}

// ---------------------------------------------------------------------------
// Public searches
// ---------------------------------------------------------------------------

/// Exact ex(m,n;F) with all extremal graphs up to isomorphism.
pub fn brute_ex_bipartite(
    m: usize,
    n: usize,
    spec: &LinearForestSpec,
    budget: &OracleBudget,
    workers: usize,
) -> Result<OracleReport, OracleError> {
    if m * n > budget.max_bipartite_cells {
        return Err(OracleError::BipartiteBudget { cells: m * n, max: budget.max_bipartite_cells });
    }
    if n > 64 || m > 64 {
        return Err(OracleError::SideTooWide(n.max(m)));
    }
    let start = Instant::now();
    let space = BipSpace { m, n, spec };
    let seed = seed_bipartite(m, n, spec);
    let search = Search { space: &space, seed, embed_budget: budget.embed_steps };
    let (max_edges, extremal_keys, nodes) = search.run(workers)?;
    Ok(OracleReport {
        kind: OracleKind::Bipartite { m, n },
        spec: spec.clone(),
        max_edges,
        extremal_keys,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// Exact ex(n;F) over all simple graphs of the given order.
pub fn brute_ex_general(
    order: usize,
    spec: &LinearForestSpec,
    budget: &OracleBudget,
    workers: usize,
) -> Result<OracleReport, OracleError> {
    if order > budget.max_general_order {
        return Err(OracleError::GeneralBudget { order, max: budget.max_general_order });
    }
    let start = Instant::now();
    let pairs: Vec<(usize, usize)> =
        (0..order).flat_map(|u| ((u + 1)..order).map(move |v| (u, v))).collect();
    let space = GenSpace { order, pairs, spec };
    let seed = seed_general(order, spec);
    let search = Search { space: &space, seed, embed_budget: budget.embed_steps };
    let (max_edges, extremal_keys, nodes) = search.run(workers)?;
    Ok(OracleReport {
        kind: OracleKind::General { order },
        spec: spec.clone(),
        max_edges,
        extremal_keys,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

// ---------------------------------------------------------------------------
// Threshold scan
// ---------------------------------------------------------------------------

/// One compared point of a threshold scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub n: usize,
    /// Oracle value; `None` when the per-point budget was exceeded.
    pub brute: Option<u64>,
    pub formula: u64,
    pub agree: bool,
    /// Whether every named extremal construction's key lies in the oracle's
    /// extremal set; only evaluated on agreeing rows.
    pub extremal_match: Option<bool>,
}

/// Empirical agreement threshold between the oracle and the asymptotic
/// formula at fixed m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdScan {
    pub m: usize,
    pub spec: LinearForestSpec,
    pub n_max: usize,
    pub rows: Vec<ScanRow>,
    /// Least n0 such that every tested n >= n0 agrees.
    pub first_stable_n: Option<usize>,
}

impl ThresholdScan {
    pub fn stable_json(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                format!(
                    "{{\"n\":{},\"brute\":{},\"formula\":{},\"agree\":{},\"extremal_match\":{}}}",
                    r.n,
                    r.brute.map_or("null".to_string(), |v| v.to_string()),
                    r.formula,
                    r.agree,
                    r.extremal_match.map_or("null".to_string(), |v| v.to_string()),
                )
            })
            .collect();
        format!(
            "{{\"m\":{},\"spec\":{},\"n_max\":{},\"rows\":[{}],\"first_stable_n\":{}}}",
            self.m,
            json_str(&self.spec.to_string()),
            self.n_max,
            rows.join(","),
            self.first_stable_n.map_or("null".to_string(), |v| v.to_string()),
        )
    }
}

/// Compare the oracle against the bipartite forest formula for n from m to
/// n_max, reporting per-point agreement, extremal membership, and the least
/// n after which all tested points agree.
pub fn threshold_scan(
    m: usize,
    spec: &LinearForestSpec,
    n_max: usize,
    budget: &OracleBudget,
    workers: usize,
) -> Result<ThresholdScan, OracleError> {
    let mut rows = Vec::new();
    for n in m..=n_max {
        let formula = ex_forest_bipartite(m, n, spec)?;
        let report = match brute_ex_bipartite(m, n, spec, budget, workers) {
            Ok(r) => Some(r),
            Err(OracleError::BipartiteBudget { .. }) => None,
            Err(e) => return Err(e),
        };
        let (brute, agree, extremal_match) = match report {
            Some(report) => {
                let agree = report.max_edges == formula.value;
                let extremal_match = if agree {
                    let mut all_in = true;
                    for desc in &formula.extremal {
                        let built = match build_family(desc) {
                            Ok(b) => b,
                            Err(_) => {
                                all_in = false;
                                break;
                            }
                        };
                        let key = match built.as_bipartite() {
                            Some(b) => canonical_key_bipartite(b)?,
                            None => canonical_key_general(&built.to_general())?,
                        };
                        if !report.contains_key(&key) {
                            all_in = false;
                            break;
                        }
                    }
                    Some(all_in)
                } else {
                    None
                };
                (Some(report.max_edges), agree, extremal_match)
            }
            None => (None, false, None),
        };
        rows.push(ScanRow { n, brute, formula: formula.value, agree, extremal_match });
    }
    let mut first_stable_n = None;
    for row in rows.iter().rev() {
        if row.agree {
            first_stable_n = Some(row.n);
        } else {
            break;
        }
    }
    Ok(ThresholdScan { m, spec: spec.clone(), n_max, rows, first_stable_n })
}

// ---------------------------------------------------------------------------
// Spectral search
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralSearchMode {
    /// Maximize the spectral radius over forest-free bipartite graphs.
    BipartiteMax,
    /// Minimize the least eigenvalue over forest-free general graphs.
    GeneralLeastEigenvalue,
}

/// Spectral extremum over all forest-free graphs of one order.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSearchReport {
    pub mode: SpectralSearchMode,
    pub order: usize,
    pub spec: LinearForestSpec,
    /// Max λ (bipartite mode) or min λ_min (general mode).
    pub extremal_value: f64,
    pub extremal_keys: Vec<CanonicalKey>,
    pub graphs_explored: u64,
    pub free_graphs: u64,
    pub elapsed: Duration,
}

impl SpectralSearchReport {
    pub fn stable_json(&self) -> String {
        let mode = match self.mode {
            SpectralSearchMode::BipartiteMax => "bipartite-max",
            SpectralSearchMode::GeneralLeastEigenvalue => "general-least-eigenvalue",
        };
        format!(
            "{{\"mode\":{},\"order\":{},\"spec\":{},\"extremal_value\":{},\"extremal_keys\":{},\"graphs_explored\":{},\"free_graphs\":{}}}",
            json_str(mode),
            self.order,
            json_str(&self.spec.to_string()),
            fixed9(self.extremal_value),
            json_str_array(self.extremal_keys.iter().map(|k| k.to_hex())),
            self.graphs_explored,
            self.free_graphs,
        )
    }
}

/// Exhaustive spectral extremum at one order. Bipartite mode enumerates every
/// labeled bipartite graph over all side splits; general mode enumerates all
/// labeled simple graphs. Extremal graphs are collected up to general-graph
/// isomorphism (the same unlabeled graph may appear under several splits).
pub fn brute_spectral_max(
    order: usize,
    spec: &LinearForestSpec,
    mode: SpectralSearchMode,
    tol: f64,
    budget: &OracleBudget,
) -> Result<SpectralSearchReport, OracleError> {
    let start = Instant::now();
    // ties within 100*tol collapse into the extremal set
    let tie = 100.0 * tol;
    let mut explored = 0u64;
    let mut free = 0u64;
    let mut best = f64::NEG_INFINITY;
    let mut keys: BTreeSet<CanonicalKey> = BTreeSet::new();
    let mut consider = |value: f64, g: &GeneralGraph| -> Result<(), OracleError> {
        if value > best + tie {
            best = value;
            keys.clear();
            keys.insert(canonical_key_general(g)?);
        } else if value >= best - tie {
            best = best.max(value);
            keys.insert(canonical_key_general(g)?);
        }
        Ok(())
    };

    match mode {
        SpectralSearchMode::BipartiteMax => {
            if order > budget.max_spectral_bipartite_order {
                return Err(OracleError::SpectralBudget {
                    order,
                    max: budget.max_spectral_bipartite_order,
                });
            }
            for a in 0..=order / 2 {
                let b = order - a;
                let cells = a * b;
                let mut rows = vec![0u64; a];
                for mask in 0u64..(1u64 << cells) {
                    explored += 1;
                    for (x, row) in rows.iter_mut().enumerate() {
                        *row = (mask >> (x * b)) & ((1u64 << b) - 1);
                    }
                    let view = BipView { m: a, n: b, rows: &rows };
                    match contains_forest_budgeted(&view, spec, budget.embed_steps) {
                        ForestSearch::Free => {}
                        ForestSearch::Embedded(_) => continue,
                        ForestSearch::BudgetExceeded => return Err(OracleError::EmbedBudget),
                    }
                    free += 1;
                    let value = if order == 0 {
                        0.0
                    } else {
                        spectral_radius(&view, tol)?.lambda_max
                    };
                    let g = view_to_general(&view);
                    consider(value, &g)?;
                }
            }
        }
        SpectralSearchMode::GeneralLeastEigenvalue => {
            if order > budget.max_spectral_general_order {
                return Err(OracleError::SpectralBudget {
                    order,
                    max: budget.max_spectral_general_order,
                });
            }
            let pairs: Vec<(usize, usize)> =
                (0..order).flat_map(|u| ((u + 1)..order).map(move |v| (u, v))).collect();
            let mut rows = vec![0u64; order];
            for mask in 0u64..(1u64 << pairs.len()) {
                explored += 1;
                rows.iter_mut().for_each(|r| *r = 0);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 != 0 {
                        rows[u] |= 1 << v;
                        rows[v] |= 1 << u;
                    }
                }
                let view = GenView { order, rows: &rows };
                match contains_forest_budgeted(&view, spec, budget.embed_steps) {
                    ForestSearch::Free => {}
                    ForestSearch::Embedded(_) => continue,
                    ForestSearch::BudgetExceeded => return Err(OracleError::EmbedBudget),
                }
                free += 1;
                let value = if order == 0 {
                    0.0
                } else {
                    -crate::spectral::least_eigenvalue(&view, tol)?
                };
                let mut g = GeneralGraph::empty(order);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 != 0 {
                        g.add_edge(u, v);
                    }
                }
                consider(value, &g)?;
            }
            // stored negated so "larger is more extremal"; flip back
            best = -best;
        }
    }
    Ok(SpectralSearchReport {
        mode,
        order,
        spec: spec.clone(),
        extremal_value: best,
        extremal_keys: keys.into_iter().collect(),
        graphs_explored: explored,
        free_graphs: free,
        elapsed: start.elapsed(),
    })
}

use crate::embed::contains_forest_budgeted;

fn view_to_general(view: &BipView<'_>) -> GeneralGraph {
    let mut g = GeneralGraph::empty(view.m + view.n);
    for x in 0..view.m {
        let mut w = view.rows[x];
        while w != 0 {
            g.add_edge(x, view.m + w.trailing_zeros() as usize);
            w &= w - 1;
        }
    }
    g
}
