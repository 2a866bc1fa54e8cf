//! Exact search for interval t-colorings.
//!
//! [`feasible`] decides one `t` by depth-first search over edges in a fixed
//! order. Each vertex carries the window `(min, max, count)` of the colors
//! already placed on it, plus a bit mask of those colors. A partial
//! assignment is cut as soon as a vertex can no longer end up with a
//! contiguous palette or the remaining edges cannot cover the unused colors.
//! Complete assignments are always re-checked with
//! [`verify_interval`](crate::coloring::verify_interval), so every prune rule
//! can be switched off without changing any answer.

use std::collections::{BTreeMap, VecDeque};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{upper_bounds, BoundReport, BoundsError};
use crate::coloring::{verify_interval, Color, EdgeColoring};
use crate::graph::{profile, Graph};

/// Colors are tracked in a `u128` mask per vertex.
pub const MAX_COLORS: Color = 127;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has no edges")]
    Edgeless,
    #[error("t must be at least 1")]
    ZeroColors,
    #[error("t = {0} exceeds the solver's color capacity of {MAX_COLORS}")]
    TooManyColors(Color),
    #[error("search limits must be positive")]
    InvalidLimits,
}

impl From<BoundsError> for SolverError {
    fn from(_: BoundsError) -> Self {
        SolverError::Edgeless
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeOrder {
    /// Breadth-first from a maximum-degree vertex, so every new edge touches
    /// an already colored vertex whenever possible.
    #[default]
    Bfs,
    DegreeDesc,
    Input,
}

/// Individual pruning rules. All are sound; turning one off only makes the
/// search visit more nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PruneRules {
    /// Never give a vertex the same color twice.
    pub distinct: bool,
    /// Keep `max - min <= d(v) - 1` and leave room for a length-`d(v)`
    /// interval inside `1..=t`.
    pub window: bool,
    /// A vertex whose edges are all colored must span exactly `d(v) - 1`.
    pub closed_vertex: bool,
    /// Unused colors must not outnumber uncolored edges.
    pub coverage: bool,
    /// Restrict the first edge to colors `<= ceil(t / 2)` (palette reversal).
    pub symmetry: bool,
    /// After each assignment, every uncolored edge next to it must keep a
    /// candidate color.
    pub forward_check: bool,
}

impl Default for PruneRules {
    fn default() -> Self {
        PruneRules {
            distinct: true,
            window: true,
            closed_vertex: true,
            coverage: true,
            symmetry: true,
            forward_check: true,
        }
    }
}

impl PruneRules {
    pub fn none() -> Self {
        PruneRules {
            distinct: false,
            window: false,
            closed_vertex: false,
            coverage: false,
            symmetry: false,
            forward_check: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    pub edge_order: EdgeOrder,
    pub parallel_over_t: bool,
    pub prunes: PruneRules,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_limit: Some(200_000_000),
            time_limit: None,
            edge_order: EdgeOrder::Bfs,
            parallel_over_t: true,
            prunes: PruneRules::default(),
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<(), SolverError> {
        if self.node_limit == Some(0) || self.time_limit == Some(Duration::ZERO) {
            return Err(SolverError::InvalidLimits);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitHit {
    Nodes,
    Time,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Feasible(EdgeColoring),
    Infeasible,
    Unknown(LimitHit),
}

impl Outcome {
    pub fn status(&self) -> Status {
        match self {
            Outcome::Feasible(_) => Status::Feasible,
            Outcome::Infeasible => Status::Infeasible,
            Outcome::Unknown(_) => Status::Unknown,
        }
    }

    pub fn witness(&self) -> Option<&EdgeColoring> {
        match self {
            Outcome::Feasible(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Feasible,
    Infeasible,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub t: Color,
    pub outcome: Outcome,
    /// Search-tree nodes (color assignments tried).
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Decides whether `g` has an interval `t`-coloring.
pub fn feasible(g: &Graph, t: Color, cfg: &SearchConfig) -> Result<Feasibility, SolverError> {
    cfg.validate()?;
    let m = g.edge_count();
    if m == 0 {
        return Err(SolverError::Edgeless);
    }
    if t == 0 {
        return Err(SolverError::ZeroColors);
    }
    let start = Instant::now();
    let done = |outcome| Feasibility {
        t,
        outcome,
        nodes: 0,
        elapsed: start.elapsed(),
    };
    // every color needs an edge, and a max-degree vertex needs Δ colors
    if t as usize > m || (t as usize) < g.max_degree() {
        return Ok(done(Outcome::Infeasible));
    }
    if t > MAX_COLORS {
        return Err(SolverError::TooManyColors(t));
    }
    let order = edge_order(g, cfg.edge_order);
    let mut search = Search::new(g, t, order, cfg, start);
    let found = search.descend(0);
    let outcome = match (found, search.abort) {
        (true, _) => {
            let witness = EdgeColoring::new(t, search.colors.clone())
                .expect("search only places colors in 1..=t");
            let report = verify_interval(g, &witness).expect("witness sized to graph");
            assert!(report.interval_ok, "solver produced an invalid witness");
            Outcome::Feasible(witness)
        }
        (false, Some(hit)) => Outcome::Unknown(hit),
        (false, None) => Outcome::Infeasible,
    };
    Ok(Feasibility {
        t,
        outcome,
        nodes: search.nodes,
        elapsed: start.elapsed(),
    })
}

/// Edge visiting order for the search.
pub fn edge_order(g: &Graph, order: EdgeOrder) -> Vec<usize> {
    let m = g.edge_count();
    match order {
        EdgeOrder::Input => (0..m).collect(),
        EdgeOrder::DegreeDesc => {
            let deg = |v: usize| g.incident(v).len();
            let mut edges: Vec<usize> = (0..m).collect();
            edges.sort_by_key(|&e| {
                let (u, v) = g.edge(e);
                (
                    std::cmp::Reverse(deg(u).max(deg(v))),
                    std::cmp::Reverse(deg(u) + deg(v)),
                    e,
                )
            });
            edges
        }
        EdgeOrder::Bfs => {
            let n = g.vertex_count();
            let mut visited = vec![false; n];
            let mut listed = vec![false; m];
            let mut out = Vec::with_capacity(m);
            while out.len() < m {
                let root = (0..n)
                    .filter(|&v| !visited[v] && !g.incident(v).is_empty())
                    .max_by_key(|&v| (g.incident(v).len(), std::cmp::Reverse(v)))
                    .expect("unlisted edges have an unvisited endpoint");
                visited[root] = true;
                let mut queue = VecDeque::from([root]);
                while let Some(x) = queue.pop_front() {
                    for &(w, e) in g.incident(x) {
                        if !listed[e] {
                            listed[e] = true;
                            out.push(e);
                        }
                        if !visited[w] {
                            visited[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
            out
        }
    }
}

fn range_mask(lo: Color, hi: Color) -> u128 {
    if lo > hi {
        return 0;
    }
    let upper = if hi >= 127 {
        u128::MAX
    } else {
        (1u128 << (hi + 1)) - 1
    };
    upper & !((1u128 << lo) - 1)
}

#[derive(Clone, Copy)]
struct VertexState {
    min: Color,
    max: Color,
    count: u32,
    mask: u128,
}

struct Search<'a> {
    g: &'a Graph,
    t: Color,
    order: Vec<usize>,
    prunes: PruneRules,
    degree: Vec<u32>,
    colors: Vec<Color>,
    vertex: Vec<VertexState>,
    color_use: Vec<u32>,
    unused: u32,
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    abort: Option<LimitHit>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, t: Color, order: Vec<usize>, cfg: &SearchConfig, start: Instant) -> Self {
        let n = g.vertex_count();
        Search {
            g,
            t,
            order,
            prunes: cfg.prunes,
            degree: (0..n).map(|v| g.incident(v).len() as u32).collect(),
            colors: vec![0; g.edge_count()],
            vertex: vec![
                VertexState {
                    min: Color::MAX,
                    max: 0,
                    count: 0,
                    mask: 0,
                };
                n
            ],
            color_use: vec![0; t as usize + 1],
            unused: t,
            nodes: 0,
            node_limit: cfg.node_limit,
            deadline: cfg.time_limit.map(|d| start + d),
            abort: None,
        }
    }

    /// Colors at `x` that keep a length-`d(x)` interval inside `1..=t`
    /// around what is already placed there.
    fn window(&self, x: usize) -> (Color, Color) {
        let s = &self.vertex[x];
        let d = self.degree[x];
        if s.count == 0 {
            return (1, self.t);
        }
        let lo = (s.max + 1).saturating_sub(d).max(1);
        let hi = (s.min + d - 1).min(self.t);
        (lo, hi)
    }

    /// Some interval of length `d(x)` inside `1..=t` contains `min..=max`.
    fn fits(&self, x: usize) -> bool {
        let s = &self.vertex[x];
        let d = self.degree[x];
        if s.count == 0 {
            return d <= self.t;
        }
        let first_lo = (s.max + 1).saturating_sub(d).max(1);
        let first_hi = s.min.min((self.t + 1).saturating_sub(d));
        first_lo <= first_hi
    }

    fn candidates(&self, depth: usize, u: usize, v: usize) -> u128 {
        let (mut lo, mut hi) = (1, self.t);
        if self.prunes.window {
            for x in [u, v] {
                let (a, b) = self.window(x);
                lo = lo.max(a);
                hi = hi.min(b);
            }
        }
        if self.prunes.symmetry && depth == 0 {
            hi = hi.min(self.t.div_ceil(2));
        }
        let mut cand = range_mask(lo, hi);
        if self.prunes.distinct {
            cand &= !(self.vertex[u].mask | self.vertex[v].mask);
        }
        cand
    }

    fn out_of_budget(&mut self) -> bool {
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                self.abort = Some(LimitHit::Nodes);
                return true;
            }
        }
        if let Some(deadline) = self.deadline {
            if self.nodes & 0x3ff == 0 && Instant::now() >= deadline {
                self.abort = Some(LimitHit::Time);
                return true;
            }
        }
        false
    }

    fn place(&mut self, e: usize, c: Color) {
        let (u, v) = self.g.edge(e);
        self.colors[e] = c;
        for x in [u, v] {
            let s = &mut self.vertex[x];
            s.min = s.min.min(c);
            s.max = s.max.max(c);
            s.count += 1;
            s.mask |= 1u128 << c;
        }
        if self.color_use[c as usize] == 0 {
            self.unused -= 1;
        }
        self.color_use[c as usize] += 1;
    }

    fn unplace(&mut self, e: usize, c: Color, saved: [VertexState; 2]) {
        let (u, v) = self.g.edge(e);
        self.colors[e] = 0;
        self.vertex[u] = saved[0];
        self.vertex[v] = saved[1];
        self.color_use[c as usize] -= 1;
        if self.color_use[c as usize] == 0 {
            self.unused += 1;
        }
    }

    fn closed_ok(&self, x: usize) -> bool {
        let s = &self.vertex[x];
        s.count < self.degree[x] || s.max - s.min == self.degree[x] - 1
    }

    /// Every uncolored edge at `x` still has a color compatible with both
    /// of its endpoints.
    fn neighbors_alive(&self, x: usize) -> bool {
        if !self.fits(x) {
            return false;
        }
        self.g.incident(x).iter().all(|&(w, f)| {
            if self.colors[f] != 0 {
                return true;
            }
            let (a, b) = self.window(x);
            let (c, d) = self.window(w);
            let dom = range_mask(a.max(c), b.min(d)) & !(self.vertex[x].mask | self.vertex[w].mask);
            dom != 0
        })
    }

    fn descend(&mut self, depth: usize) -> bool {
        let m = self.order.len();
        if depth == m {
            return self.complete_is_interval();
        }
        let e = self.order[depth];
        let (u, v) = self.g.edge(e);
        let mut cand = self.candidates(depth, u, v);
        while cand != 0 {
            let c = cand.trailing_zeros() as Color;
            cand &= cand - 1;
            self.nodes += 1;
            if self.out_of_budget() {
                return false;
            }
            let remaining = (m - depth - 1) as u32;
            let unused_after = self.unused - u32::from(self.color_use[c as usize] == 0);
            if self.prunes.coverage && unused_after > remaining {
                continue;
            }
            let saved = [self.vertex[u], self.vertex[v]];
            self.place(e, c);
            let mut ok = true;
            if self.prunes.closed_vertex {
                ok = self.closed_ok(u) && self.closed_ok(v);
            }
            if ok && self.prunes.window {
                ok = self.fits(u) && self.fits(v);
            }
            if ok && self.prunes.forward_check {
                ok = self.neighbors_alive(u) && self.neighbors_alive(v);
            }
            if ok && self.descend(depth + 1) {
                return true;
            }
            self.unplace(e, c, saved);
            if self.abort.is_some() {
                return false;
            }
        }
        false
    }

    fn complete_is_interval(&self) -> bool {
        match EdgeColoring::new(self.t, self.colors.clone()) {
            Ok(c) => verify_interval(self.g, &c)
                .map(|r| r.interval_ok)
                .unwrap_or(false),
            Err(_) => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TResult {
    pub t: Color,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<LimitHit>,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumResult {
    pub bounds: BoundReport,
    /// One entry per `t` in `lower..=ceiling`, ascending.
    pub per_t: Vec<TResult>,
    pub witnesses: BTreeMap<Color, EdgeColoring>,
    pub elapsed: Duration,
}

impl SpectrumResult {
    pub fn feasible_t(&self) -> Vec<Color> {
        self.witnesses.keys().copied().collect()
    }

    pub fn unknown_t(&self) -> Vec<Color> {
        self.per_t
            .iter()
            .filter(|r| r.status == Status::Unknown)
            .map(|r| r.t)
            .collect()
    }

    pub fn status(&self, t: Color) -> Option<Status> {
        self.per_t.iter().find(|r| r.t == t).map(|r| r.status)
    }

    /// Smallest feasible `t` (w(G)).
    pub fn min_t(&self) -> Option<Color> {
        self.witnesses.keys().next().copied()
    }

    /// Largest feasible `t` (W(G)).
    pub fn max_t(&self) -> Option<Color> {
        self.witnesses.keys().next_back().copied()
    }

    pub fn is_exhaustive(&self) -> bool {
        self.per_t.iter().all(|r| r.status != Status::Unknown)
    }

    pub fn total_nodes(&self) -> u64 {
        self.per_t.iter().map(|r| r.nodes).sum()
    }
}

fn solve_range(
    g: &Graph,
    ts: Vec<Color>,
    cfg: &SearchConfig,
) -> Result<Vec<Feasibility>, SolverError> {
    if cfg.parallel_over_t {
        ts.into_par_iter().map(|t| feasible(g, t, cfg)).collect()
    } else {
        ts.into_iter().map(|t| feasible(g, t, cfg)).collect()
    }
}

/// Every `t` from Δ(G) to the bounds ceiling, each decided independently.
pub fn spectrum(g: &Graph, cfg: &SearchConfig) -> Result<SpectrumResult, SolverError> {
    cfg.validate()?;
    let start = Instant::now();
    let bounds = upper_bounds(g, &profile(g))?;
    let ts: Vec<Color> = (bounds.lower.max(1)..=bounds.ceiling).collect();
    let mut per_t = Vec::with_capacity(ts.len());
    let mut witnesses = BTreeMap::new();
    if bounds.class_two_obstruction {
        per_t.extend(ts.iter().map(|&t| TResult {
            t,
            status: Status::Infeasible,
            limit: None,
            nodes: 0,
        }));
    } else {
        for f in solve_range(g, ts, cfg)? {
            let limit = match f.outcome {
                Outcome::Unknown(hit) => Some(hit),
                _ => None,
            };
            per_t.push(TResult {
                t: f.t,
                status: f.outcome.status(),
                limit,
                nodes: f.nodes,
            });
            if let Outcome::Feasible(w) = f.outcome {
                witnesses.insert(f.t, w);
            }
        }
    }
    Ok(SpectrumResult {
        bounds,
        per_t,
        witnesses,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxColoring {
    pub w: Color,
    pub witness: EdgeColoring,
    /// Some larger `t` ended with a limit hit, so the true maximum may be
    /// higher.
    pub lower_estimate: bool,
    pub nodes: u64,
}

/// Largest feasible `t`, searching downward from the bounds ceiling.
/// `None` when no `t` in range is found feasible.
pub fn max_coloring(g: &Graph, cfg: &SearchConfig) -> Result<Option<MaxColoring>, SolverError> {
    cfg.validate()?;
    let bounds = upper_bounds(g, &profile(g))?;
    if bounds.class_two_obstruction {
        return Ok(None);
    }
    let mut lower_estimate = false;
    let mut nodes = 0;
    for t in (bounds.lower.max(1)..=bounds.ceiling).rev() {
        let f = feasible(g, t, cfg)?;
        nodes += f.nodes;
        match f.outcome {
            Outcome::Feasible(witness) => {
                return Ok(Some(MaxColoring {
                    w: t,
                    witness,
                    lower_estimate,
                    nodes,
                }))
            }
            Outcome::Unknown(_) => lower_estimate = true,
            Outcome::Infeasible => {}
        }
    }
    Ok(None)
}
