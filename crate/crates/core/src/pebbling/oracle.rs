//! Reference decision procedure: breadth-first exploration of every
//! reachable configuration, with no pruning or move ordering. Only suitable
//! for tiny instances; used to cross-check [`super::solver`].

use std::collections::{HashSet, VecDeque};

use super::configuration::Configuration;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000;

pub fn brute_force_r_solvable(g: &Graph, c: &Configuration, root: usize) -> Result<bool> {
    brute_force_r_solvable_with_budget(g, c, root, DEFAULT_ORACLE_BUDGET)
}

pub fn brute_force_r_solvable_with_budget(
    g: &Graph,
    c: &Configuration,
    root: usize,
    budget: u64,
) -> Result<bool> {
    if c.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            actual: c.len(),
        });
    }
    g.check_vertex(root)?;
    let start = c.counts().to_vec();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(state) = queue.pop_front() {
        if state[root] >= 1 {
            return Ok(true);
        }
        for u in 0..state.len() {
            if state[u] < 2 {
                continue;
            }
            for &v in g.neighbors(u) {
                let mut next = state.clone();
                next[u] -= 2;
                next[v] += 1;
                if seen.contains(&next) {
                    continue;
                }
                if seen.len() as u64 >= budget {
                    return Err(Error::BudgetExceeded {
                        what: "oracle state",
                        limit: budget,
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}
