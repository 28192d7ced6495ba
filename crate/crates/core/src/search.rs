//! Exact backtracking search for interval total colorings of small graphs.
//!
//! Vertices and edges are colored in a fixed order: a breadth-first sweep
//! where each vertex is followed by its incident edges not yet listed. Each
//! vertex keeps a bitmask of the colors already in its palette, so the
//! interval requirement narrows the candidates for the next element to
//! `[max - d, min + d]`. A second rule drops branches that can no longer
//! use every color.
//!
//! Parallel runs split on the color of the first element. Every branch is
//! searched deterministically and the witness from the lowest successful
//! branch wins, so verdicts and witnesses do not depend on the worker
//! count.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{bound_report, BoundKind, BoundTarget};
use crate::coloring::{Certificate, Color, TotalColoring};
use crate::graph::{EdgeId, Graph, VertexId};

/// Palettes are `u64` bitmasks.
pub const MAX_COLORS: Color = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("t must be at least 1, got {0}")]
    NonPositiveT(Color),
    #[error("t = {0} exceeds the search limit of {MAX_COLORS} colors")]
    TooManyColors(Color),
    #[error("empty range: t_min = {t_min} > t_max = {t_max}")]
    EmptyRange { t_min: Color, t_max: Color },
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Defaults to `Δ + 1`.
    pub t_min: Option<Color>,
    /// Defaults to the tightest applicable upper bound on `W_τ`.
    pub t_max: Option<Color>,
    /// Node cap for each color choice of the first element; `None` is
    /// unlimited.
    pub budget: Option<u64>,
    /// Worker threads; 1 runs inline.
    pub jobs: usize,
    pub palette_pruning: bool,
    pub surjectivity_pruning: bool,
    /// With `false` the search looks for colorings satisfying everything
    /// except that each of `1..=t` must appear.
    pub require_all_colors: bool,
    /// Restrict the first element to colors `<= ceil(t / 2)`. Sound because
    /// `x -> t + 1 - x` maps colorings to colorings.
    pub symmetry_breaking: bool,
    /// Shuffle candidate colors with this seed instead of trying them in
    /// ascending order.
    pub value_order_seed: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            t_min: None,
            t_max: None,
            budget: None,
            jobs: 1,
            palette_pruning: true,
            surjectivity_pruning: true,
            require_all_colors: true,
            symmetry_breaking: false,
            value_order_seed: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Feasible(TotalColoring),
    Infeasible,
    BudgetExhausted,
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible(_))
    }

    pub fn status(&self) -> Status {
        match self {
            Verdict::Feasible(_) => Status::Feasible,
            Verdict::Infeasible => Status::Infeasible,
            Verdict::BudgetExhausted => Status::Budget,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Feasible,
    Infeasible,
    Budget,
}

#[derive(Debug, Clone, Copy)]
enum Item {
    Vertex(VertexId),
    Edge(EdgeId, VertexId, VertexId),
}

/// Breadth-first from each unvisited vertex; each vertex is followed by its
/// incident edges that have not appeared yet.
fn element_order(g: &Graph) -> Vec<Item> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut edge_seen = vec![false; g.edge_count()];
    let mut out = Vec::with_capacity(n + g.edge_count());
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            out.push(Item::Vertex(v));
            for &(w, e) in g.neighbors(v) {
                if !edge_seen[e] {
                    edge_seen[e] = true;
                    out.push(Item::Edge(e, v, w));
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    out
}

fn bit(c: Color) -> u64 {
    1u64 << (c - 1)
}

/// Colors `lo..=hi` as a mask; empty when `lo > hi`.
fn range_mask(lo: Color, hi: Color) -> u64 {
    if lo > hi {
        return 0;
    }
    let upper = if hi >= 64 { u64::MAX } else { (1u64 << hi) - 1 };
    let lower = (1u64 << (lo - 1)) - 1;
    upper & !lower
}

fn mask_min(m: u64) -> Color {
    m.trailing_zeros() as Color + 1
}

fn mask_max(m: u64) -> Color {
    64 - m.leading_zeros() as Color
}

enum Step {
    Found,
    Exhausted,
    Budget,
    Cancelled,
}

struct Problem<'a> {
    g: &'a Graph,
    t: Color,
    items: Vec<Item>,
    degree: Vec<Color>,
    cfg: &'a SearchConfig,
}

struct Worker<'p, 'a> {
    p: &'p Problem<'a>,
    vertex: Vec<Color>,
    edge: Vec<Color>,
    star: Vec<u64>,
    /// unassigned elements left in each star
    open: Vec<u32>,
    uses: Vec<u32>,
    distinct: Color,
    nodes: u64,
    rng: Option<ChaCha8Rng>,
    branch: usize,
    best: &'p AtomicUsize,
}

impl<'p, 'a> Worker<'p, 'a> {
    fn new(p: &'p Problem<'a>, branch: usize, best: &'p AtomicUsize) -> Self {
        let g = p.g;
        Worker {
            p,
            vertex: vec![0; g.vertex_count()],
            edge: vec![0; g.edge_count()],
            star: vec![0; g.vertex_count()],
            open: p.degree.iter().map(|&d| d as u32 + 1).collect(),
            uses: vec![0; p.t as usize + 1],
            distinct: 0,
            nodes: 0,
            rng: p
                .cfg
                .value_order_seed
                .map(|s| ChaCha8Rng::seed_from_u64(s ^ (branch as u64).wrapping_mul(0x9e37_79b9))),
            branch,
            best,
        }
    }

    /// Colors allowed at `v` by the interval rule, given its partial palette.
    fn palette_window(&self, v: VertexId) -> u64 {
        let s = self.star[v];
        if !self.p.cfg.palette_pruning || s == 0 {
            return range_mask(1, self.p.t);
        }
        let d = self.p.degree[v];
        range_mask((mask_max(s) - d).max(1), (mask_min(s) + d).min(self.p.t))
    }

    fn candidates(&self, item: Item) -> u64 {
        match item {
            Item::Vertex(v) => {
                let mut forbidden = self.star[v];
                for &(w, _) in self.p.g.neighbors(v) {
                    if self.vertex[w] != 0 {
                        forbidden |= bit(self.vertex[w]);
                    }
                }
                self.palette_window(v) & !forbidden
            }
            Item::Edge(_, a, b) => {
                self.palette_window(a) & self.palette_window(b) & !(self.star[a] | self.star[b])
            }
        }
    }

    fn add_to_star(&mut self, v: VertexId, c: Color) {
        self.star[v] |= bit(c);
        self.open[v] -= 1;
    }

    fn remove_from_star(&mut self, v: VertexId, c: Color) {
        self.star[v] &= !bit(c);
        self.open[v] += 1;
    }

    /// A completed star must span exactly `d + 1` colors. Only needed when
    /// the window rule is off.
    fn star_closes(&self, v: VertexId) -> bool {
        if self.open[v] != 0 || self.p.cfg.palette_pruning {
            return true;
        }
        mask_max(self.star[v]) - mask_min(self.star[v]) == self.p.degree[v]
    }

    fn assign(&mut self, item: Item, c: Color) -> bool {
        let ok = match item {
            Item::Vertex(v) => {
                self.vertex[v] = c;
                self.add_to_star(v, c);
                self.star_closes(v)
            }
            Item::Edge(e, a, b) => {
                self.edge[e] = c;
                self.add_to_star(a, c);
                self.add_to_star(b, c);
                self.star_closes(a) && self.star_closes(b)
            }
        };
        if self.uses[c as usize] == 0 {
            self.distinct += 1;
        }
        self.uses[c as usize] += 1;
        ok
    }

    fn unassign(&mut self, item: Item, c: Color) {
        match item {
            Item::Vertex(v) => {
                self.vertex[v] = 0;
                self.remove_from_star(v, c);
            }
            Item::Edge(e, a, b) => {
                self.edge[e] = 0;
                self.remove_from_star(a, c);
                self.remove_from_star(b, c);
            }
        }
        self.uses[c as usize] -= 1;
        if self.uses[c as usize] == 0 {
            self.distinct -= 1;
        }
    }

    /// Can the colors still missing be covered by the elements left?
    fn coverable(&self, next: usize) -> bool {
        let cfg = self.p.cfg;
        if !cfg.require_all_colors || !cfg.surjectivity_pruning {
            return true;
        }
        let left = (self.p.items.len() - next) as Color;
        self.p.t - self.distinct <= left
    }

    fn leaf_ok(&self) -> bool {
        !self.p.cfg.require_all_colors || self.distinct == self.p.t
    }

    fn ordered(&mut self, mask: u64) -> Vec<Color> {
        let mut colors = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            colors.push(mask_min(m));
            m &= m - 1;
        }
        if let Some(rng) = self.rng.as_mut() {
            colors.shuffle(rng);
        }
        colors
    }

    fn dfs(&mut self, idx: usize) -> Step {
        if idx == self.p.items.len() {
            return if self.leaf_ok() { Step::Found } else { Step::Exhausted };
        }
        self.nodes += 1;
        if let Some(budget) = self.p.cfg.budget {
            if self.nodes > budget {
                return Step::Budget;
            }
        }
        if self.nodes.is_multiple_of(4096) && self.best.load(Ordering::Relaxed) < self.branch {
            return Step::Cancelled;
        }
        let item = self.p.items[idx];
        let mut budget_hit = false;
        for c in self.ordered(self.candidates(item)) {
            let closes = self.assign(item, c);
            let step = if closes && self.coverable(idx + 1) {
                self.dfs(idx + 1)
            } else {
                Step::Exhausted
            };
            match step {
                Step::Found => return Step::Found,
                Step::Exhausted => self.unassign(item, c),
                Step::Budget => {
                    // a budget hit is final for this branch
                    self.unassign(item, c);
                    budget_hit = true;
                    break;
                }
                Step::Cancelled => return Step::Cancelled,
            }
        }
        if budget_hit {
            Step::Budget
        } else {
            Step::Exhausted
        }
    }

    fn coloring(&self) -> TotalColoring {
        TotalColoring {
            t: self.p.t,
            vertex_colors: self.vertex.clone(),
            edge_colors: self.edge.clone(),
        }
    }

    /// Search the subtree where the first element has color `c`.
    fn run_branch(mut self, c: Color) -> (Step, Option<TotalColoring>) {
        let item = self.p.items[0];
        let closes = self.assign(item, c);
        if !(closes && self.coverable(1)) {
            return (Step::Exhausted, None);
        }
        match self.dfs(1) {
            Step::Found => {
                self.best.fetch_min(self.branch, Ordering::Relaxed);
                let col = self.coloring();
                (Step::Found, Some(col))
            }
            other => (other, None),
        }
    }
}

/// Decide whether `g` has an interval total `t`-coloring under `cfg`.
/// `t_min`/`t_max` in `cfg` are ignored.
pub fn exists_coloring(g: &Graph, t: Color, cfg: &SearchConfig) -> Result<Verdict, SearchError> {
    if t < 1 {
        return Err(SearchError::NonPositiveT(t));
    }
    if t > MAX_COLORS {
        return Err(SearchError::TooManyColors(t));
    }
    let degree: Vec<Color> = g.degrees().into_iter().map(|d| d as Color).collect();
    if degree.iter().any(|&d| d + 1 > t) {
        return Ok(Verdict::Infeasible);
    }
    let items = element_order(g);
    if items.is_empty() {
        return Ok(Verdict::Infeasible);
    }
    let p = Problem {
        g,
        t,
        items,
        degree,
        cfg,
    };
    let best = AtomicUsize::new(usize::MAX);

    let first_mask = {
        let probe = Worker::new(&p, 0, &best);
        let mut m = probe.candidates(p.items[0]);
        if cfg.symmetry_breaking {
            m &= range_mask(1, (t + 1) / 2);
        }
        m
    };
    let firsts = Worker::new(&p, 0, &best).ordered(first_mask);

    let run = |(branch, &c): (usize, &Color)| {
        if best.load(Ordering::Relaxed) < branch {
            return (Step::Cancelled, None);
        }
        Worker::new(&p, branch, &best).run_branch(c)
    };
    let results: Vec<(Step, Option<TotalColoring>)> = if cfg.jobs <= 1 {
        let mut out = Vec::with_capacity(firsts.len());
        for pair in firsts.iter().enumerate() {
            let r = run(pair);
            let found = matches!(r.0, Step::Found);
            out.push(r);
            if found {
                break;
            }
        }
        out
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| SearchError::ThreadPool(e.to_string()))?;
        pool.install(|| firsts.par_iter().enumerate().map(run).collect())
    };

    // branches are independent, so the lowest successful one is the same
    // whichever worker reached it first
    let mut budget = false;
    for (step, col) in results {
        match step {
            Step::Found => return Ok(Verdict::Feasible(col.expect("found carries a coloring"))),
            Step::Budget => budget = true,
            Step::Exhausted | Step::Cancelled => {}
        }
    }
    Ok(if budget {
        Verdict::BudgetExhausted
    } else {
        Verdict::Infeasible
    })
}

/// Default search range: `Δ + 1` up to the tightest applicable upper bound
/// on `W_τ`, clipped to [`MAX_COLORS`]. The flag says whether the upper end
/// is still a proven bound after clipping.
pub fn default_t_range(g: &Graph) -> (Color, Color, bool) {
    let report = bound_report(g);
    let lo = report
        .best(BoundKind::Lower, BoundTarget::MinColors)
        .unwrap_or(1)
        .max(1);
    let hi = report
        .best(BoundKind::Upper, BoundTarget::MaxColors)
        .unwrap_or(MAX_COLORS);
    (lo, hi.min(MAX_COLORS), hi <= MAX_COLORS)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TVerdict {
    pub t: Color,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumResult {
    pub graph: Graph,
    pub t_range: [Color; 2],
    pub verdicts: Vec<TVerdict>,
    pub w_tau: Option<Color>,
    #[serde(rename = "W_tau")]
    pub max_tau: Option<Color>,
}

impl SpectrumResult {
    pub fn feasible(&self) -> Vec<Color> {
        self.verdicts
            .iter()
            .filter(|v| v.status == Status::Feasible)
            .map(|v| v.t)
            .collect()
    }

    pub fn completed(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Budget)
    }
}

/// Verdict for every `t` in the configured range. `w_tau` is reported only
/// when the range starts at or below `Δ + 1` and every smaller `t` in it was
/// refuted; `W_tau` likewise needs the range to reach a proven upper bound.
pub fn compute_spectrum(g: &Graph, cfg: &SearchConfig) -> Result<SpectrumResult, SearchError> {
    let (lo_default, hi_default, hi_proven) = default_t_range(g);
    let t_min = cfg.t_min.unwrap_or(lo_default).max(1);
    let t_max = cfg.t_max.unwrap_or(hi_default);
    if t_min > t_max {
        return Err(SearchError::EmptyRange { t_min, t_max });
    }
    if t_max > MAX_COLORS {
        return Err(SearchError::TooManyColors(t_max));
    }
    let mut verdicts = Vec::new();
    for t in t_min..=t_max {
        let v = exists_coloring(g, t, cfg)?;
        let status = v.status();
        let certificate = match v {
            Verdict::Feasible(coloring) => Some(Certificate {
                graph: g.clone(),
                coloring,
            }),
            _ => None,
        };
        verdicts.push(TVerdict {
            t,
            status,
            certificate,
        });
    }

    let first_open = verdicts.iter().find(|v| v.status != Status::Infeasible);
    let w_tau = match first_open {
        Some(v) if v.status == Status::Feasible && t_min <= lo_default => Some(v.t),
        _ => None,
    };
    let last_open = verdicts.iter().rev().find(|v| v.status != Status::Infeasible);
    let top_proven = hi_proven && t_max >= hi_default;
    let max_tau = match last_open {
        Some(v) if v.status == Status::Feasible && top_proven => Some(v.t),
        _ => None,
    };
    Ok(SpectrumResult {
        graph: g.clone(),
        t_range: [t_min, t_max],
        verdicts,
        w_tau,
        max_tau,
    })
}

/// Naive re-check of an interval total coloring, written without any of the
/// main verifier's helpers so the two can be compared.
pub fn brute_force_verifier_oracle(g: &Graph, c: &TotalColoring) -> bool {
    let n = g.vertex_count();
    let edges = g.edges();
    if c.vertex_colors.len() != n || c.edge_colors.len() != edges.len() {
        return false;
    }
    // every color within 1..=t
    let all: Vec<Color> = c.vertex_colors.iter().chain(c.edge_colors.iter()).cloned().collect();
    if all.iter().any(|&x| x < 1 || x > c.t) {
        return false;
    }
    // every color used
    let used: HashSet<Color> = all.iter().cloned().collect();
    if (1..=c.t).any(|x| !used.contains(&x)) {
        return false;
    }
    // collect, for each vertex, the list of colors touching it
    let mut around: HashMap<usize, Vec<Color>> = HashMap::new();
    for v in 0..n {
        around.insert(v, vec![c.vertex_colors[v]]);
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        if c.vertex_colors[a] == c.vertex_colors[b] {
            return false;
        }
        around.get_mut(&a).unwrap().push(c.edge_colors[i]);
        around.get_mut(&b).unwrap().push(c.edge_colors[i]);
    }
    for v in 0..n {
        let list = &around[&v];
        let set: HashSet<Color> = list.iter().cloned().collect();
        // a repeat means two incident edges or an edge and the vertex clash
        if set.len() != list.len() {
            return false;
        }
        let lo = *list.iter().min().unwrap();
        for k in 0..list.len() as Color {
            if !set.contains(&(lo + k)) {
                return false;
            }
        }
    }
    true
}
