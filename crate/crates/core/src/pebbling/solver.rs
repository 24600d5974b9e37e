//! Exact r-solvability by depth-first search over configurations.
//!
//! Each query keeps its own transposition table keyed on the full count
//! vector. A node is cut when its weight `sum_v c(v) / 2^dist(v, root)`
//! drops below one: every pebbling step at best preserves that weight and a
//! pebble on the root has weight exactly one.

use std::sync::OnceLock;

use rustc_hash::FxHashSet;

use super::configuration::{Configuration, Move, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on distinct configurations explored per r-solvability query.
pub const DEFAULT_STATE_BUDGET: u64 = 10_000_000;

/// Weights are scaled by `2^WEIGHT_BITS` at most; farther vertices round up.
const WEIGHT_BITS: u32 = 64;

/// Result of an r-solvability query that finished within budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootOutcome {
    Solvable(Witness),
    Unsolvable,
}

impl RootOutcome {
    pub fn is_solvable(&self) -> bool {
        matches!(self, RootOutcome::Solvable(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            RootOutcome::Solvable(w) => Some(w),
            RootOutcome::Unsolvable => None,
        }
    }
}

/// Reusable solver for one graph. Distance vectors are computed lazily per
/// root and shared by all queries, including concurrent ones.
#[derive(Debug)]
pub struct Solver<'g> {
    graph: &'g Graph,
    distances: Vec<OnceLock<Vec<u32>>>,
    state_budget: u64,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(Solver {
            graph,
            distances: (0..graph.n()).map(|_| OnceLock::new()).collect(),
            state_budget: DEFAULT_STATE_BUDGET,
        })
    }

    pub fn with_state_budget(mut self, budget: u64) -> Self {
        self.state_budget = budget;
        self
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn state_budget(&self) -> u64 {
        self.state_budget
    }

    /// Distances from `root` to every vertex.
    pub fn distances(&self, root: usize) -> &[u32] {
        self.distances[root].get_or_init(|| self.graph.distances_from(root))
    }

    /// Decide whether a pebble can reach `root`; solvable answers carry a
    /// witness that replays against `c`.
    pub fn r_solve(&self, c: &Configuration, root: usize) -> Result<RootOutcome> {
        c.check_against(self.graph)?;
        self.graph.check_vertex(root)?;
        self.r_solve_counts(c.counts(), c.size(), root)
    }

    pub(crate) fn r_solve_counts(
        &self,
        counts: &[u32],
        size: u64,
        root: usize,
    ) -> Result<RootOutcome> {
        if counts[root] >= 1 {
            return Ok(RootOutcome::Solvable(Witness::default()));
        }
        for &v in self.graph.neighbors(root) {
            if counts[v] >= 2 {
                return Ok(RootOutcome::Solvable(Witness::new(vec![Move::new(
                    v, root,
                )])));
            }
        }
        let mut search = Search::new(self, counts, size, root);
        match search.run()? {
            true => Ok(RootOutcome::Solvable(Witness::new(search.trail))),
            false => Ok(RootOutcome::Unsolvable),
        }
    }

    /// Lowest-index root for which `c` is not solvable, if any.
    pub fn unsolvable_root(&self, c: &Configuration) -> Result<Option<usize>> {
        c.check_against(self.graph)?;
        let counts = c.counts();
        let mut open: Vec<bool> = counts.iter().map(|&x| x == 0).collect();
        let mut remaining = open.iter().filter(|&&o| o).count();
        // Any root adjacent to a vertex with two pebbles is one step away.
        for (v, &x) in counts.iter().enumerate() {
            if remaining == 0 {
                break;
            }
            if x >= 2 {
                for &u in self.graph.neighbors(v) {
                    if open[u] {
                        open[u] = false;
                        remaining -= 1;
                    }
                }
            }
        }
        for root in (0..counts.len()).filter(|&r| open[r]) {
            if !self.r_solve_counts(counts, c.size(), root)?.is_solvable() {
                return Ok(Some(root));
            }
        }
        Ok(None)
    }

    pub fn is_solvable(&self, c: &Configuration) -> Result<bool> {
        Ok(self.unsolvable_root(c)?.is_none())
    }
}

/// Decide r-solvability of `c` on `g` with the default state budget.
pub fn is_r_solvable(g: &Graph, c: &Configuration, root: usize) -> Result<RootOutcome> {
    Solver::new(g)?.r_solve(c, root)
}

/// True iff `c` is r-solvable for every root of `g`.
pub fn is_solvable(g: &Graph, c: &Configuration) -> Result<bool> {
    Solver::new(g)?.is_solvable(c)
}

struct Search<'a> {
    graph: &'a Graph,
    dist: &'a [u32],
    root: usize,
    counts: Vec<u32>,
    weight_of: Vec<u128>,
    weight: u128,
    target: u128,
    key_width: usize,
    key_buf: Vec<u8>,
    seen: FxHashSet<Box<[u8]>>,
    budget: u64,
    trail: Vec<Move>,
}

impl<'a> Search<'a> {
    fn new(solver: &'a Solver<'_>, counts: &[u32], size: u64, root: usize) -> Self {
        let dist = solver.distances(root);
        let scale = dist.iter().copied().max().unwrap_or(0).min(WEIGHT_BITS);
        let weight_of: Vec<u128> = dist
            .iter()
            .map(|&d| if d <= scale { 1u128 << (scale - d) } else { 1 })
            .collect();
        let weight = counts
            .iter()
            .zip(&weight_of)
            .map(|(&c, &w)| u128::from(c) * w)
            .sum();
        let key_width = match size {
            0..=0xff => 1,
            0x100..=0xffff => 2,
            _ => 4,
        };
        Search {
            graph: solver.graph,
            dist,
            root,
            counts: counts.to_vec(),
            weight_of,
            weight,
            target: 1u128 << scale,
            key_width,
            key_buf: Vec::with_capacity(counts.len() * key_width),
            seen: FxHashSet::default(),
            budget: solver.state_budget,
            trail: Vec::new(),
        }
    }

    fn run(&mut self) -> Result<bool> {
        self.visit()
    }

    /// Mark the current configuration as explored; false if it already was.
    fn remember(&mut self) -> Result<bool> {
        self.key_buf.clear();
        for &c in &self.counts {
            match self.key_width {
                1 => self.key_buf.push(c as u8),
                2 => self.key_buf.extend_from_slice(&(c as u16).to_le_bytes()),
                _ => self.key_buf.extend_from_slice(&c.to_le_bytes()),
            }
        }
        if self.seen.contains(self.key_buf.as_slice()) {
            return Ok(false);
        }
        if self.seen.len() as u64 >= self.budget {
            return Err(Error::BudgetExceeded {
                what: "solver state",
                limit: self.budget,
            });
        }
        self.seen.insert(self.key_buf.clone().into_boxed_slice());
        Ok(true)
    }

    fn step(&mut self, m: Move) {
        self.counts[m.from] -= 2;
        self.counts[m.to] += 1;
        self.weight = self.weight - 2 * self.weight_of[m.from] + self.weight_of[m.to];
        self.trail.push(m);
    }

    fn undo(&mut self, m: Move) {
        self.counts[m.from] += 2;
        self.counts[m.to] -= 1;
        self.weight = self.weight + 2 * self.weight_of[m.from] - self.weight_of[m.to];
        self.trail.pop();
    }

    /// If some pile can be pushed straight down a shortest path, append
    /// those moves to the trail.
    fn direct_push(&mut self, sources: &[usize]) -> bool {
        let Some(&v) = sources.iter().find(|&&v| {
            let d = self.dist[v];
            d < 32 && u64::from(self.counts[v]) >= 1u64 << d
        }) else {
            return false;
        };
        let mut path = vec![v];
        let mut at = v;
        while at != self.root {
            let d = self.dist[at];
            at = *self
                .graph
                .neighbors(at)
                .iter()
                .find(|&&u| self.dist[u] + 1 == d)
                .expect("BFS layers are contiguous");
            path.push(at);
        }
        let hops = path.len() - 1;
        for (i, pair) in path.windows(2).enumerate() {
            let repeats = 1u64 << (hops - 1 - i);
            for _ in 0..repeats {
                self.trail.push(Move::new(pair[0], pair[1]));
            }
        }
        true
    }

    fn visit(&mut self) -> Result<bool> {
        if self.counts[self.root] >= 1 {
            return Ok(true);
        }
        if self.weight < self.target {
            return Ok(false);
        }
        let mut sources: Vec<usize> = (0..self.counts.len())
            .filter(|&v| self.counts[v] >= 2)
            .collect();
        if sources.is_empty() {
            return Ok(false);
        }
        if self.direct_push(&sources) {
            return Ok(true);
        }
        if !self.remember()? {
            return Ok(false);
        }
        // Far sources and big piles first; sources next to the root last.
        sources.sort_by_key(|&v| {
            (
                std::cmp::Reverse(self.dist[v]),
                std::cmp::Reverse(self.counts[v]),
                v,
            )
        });
        let graph = self.graph;
        let dist = self.dist;
        for from in sources {
            let mut targets: Vec<usize> = graph.neighbors(from).to_vec();
            targets.sort_by_key(|&v| (dist[v], v));
            for to in targets {
                let m = Move::new(from, to);
                self.step(m);
                if self.visit()? {
                    return Ok(true);
                }
                self.undo(m);
            }
        }
        Ok(false)
    }
}
