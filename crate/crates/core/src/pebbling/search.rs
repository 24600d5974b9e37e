//! Level enumeration: the unsolvable-configuration search, the pebbling
//! number and the Class 0 test.
//!
//! A level is the set of all configurations of a fixed size `t`. For each
//! root (ascending) the search walks count vectors in ascending
//! lexicographic order, skipping any that put a pebble on the root. Work is
//! split across threads by the counts on the first two non-root vertices;
//! the reported configuration is always the lexicographically first one,
//! whatever the thread count.

use rayon::prelude::*;

use super::configuration::Configuration;
use super::solver::{Solver, DEFAULT_STATE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on configurations enumerated for a single level.
pub const DEFAULT_LEVEL_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Passed to every r-solvability query.
    pub state_budget: u64,
    /// Maximum number of configurations one level may require.
    pub level_budget: u64,
    /// Check root 0 only. Sound only for vertex-transitive graphs; the
    /// caller is responsible for that.
    pub vertex_transitive: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            state_budget: DEFAULT_STATE_BUDGET,
            level_budget: DEFAULT_LEVEL_BUDGET,
            vertex_transitive: false,
        }
    }
}

/// An unsolvable configuration together with the root it fails for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub config: Configuration,
    pub root: usize,
}

/// `C(a, b)` saturating at `u128::MAX`.
pub(crate) fn binomial_saturating(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        // acc * (a - i) / (i + 1) stays integral at every step.
        match acc.checked_mul(u128::from(a - i)) {
            Some(x) => acc = x / u128::from(i + 1),
            None => return u128::MAX,
        }
    }
    acc
}

/// Number of ways to place `t` pebbles on `k` vertices.
pub(crate) fn multiset_count(k: u64, t: u64) -> u128 {
    match (k, t) {
        (_, 0) => 1,
        (0, _) => 0,
        _ => binomial_saturating(t + k - 1, t),
    }
}

/// First unsolvable configuration of size `t`, with default options.
pub fn find_unsolvable(g: &Graph, t: u64) -> Result<Option<Counterexample>> {
    find_unsolvable_with(g, t, &SearchOptions::default())
}

pub fn find_unsolvable_with(
    g: &Graph,
    t: u64,
    opts: &SearchOptions,
) -> Result<Option<Counterexample>> {
    let solver = Solver::new(g)?.with_state_budget(opts.state_budget);
    find_unsolvable_in(&solver, t, opts)
}

fn roots(n: usize, opts: &SearchOptions) -> std::ops::Range<usize> {
    if opts.vertex_transitive {
        0..n.min(1)
    } else {
        0..n
    }
}

fn find_unsolvable_in(
    solver: &Solver<'_>,
    t: u64,
    opts: &SearchOptions,
) -> Result<Option<Counterexample>> {
    let n = solver.graph().n();
    let t32 =
        u32::try_from(t).map_err(|_| Error::InvalidParameter(format!("level {t} is too large")))?;
    let roots = roots(n, opts);
    let per_root = multiset_count(n as u64 - 1, t);
    let total = per_root.saturating_mul(roots.len() as u128);
    if total > u128::from(opts.level_budget) {
        return Err(Error::BudgetExceeded {
            what: "level configuration",
            limit: opts.level_budget,
        });
    }
    for root in roots {
        if let Some(config) = first_unsolvable_for_root(solver, t32, root)? {
            return Ok(Some(Counterexample { config, root }));
        }
    }
    Ok(None)
}

/// Positions of the non-root vertices, in ascending order.
fn others(n: usize, root: usize) -> Vec<usize> {
    (0..n).filter(|&v| v != root).collect()
}

fn first_unsolvable_for_root(
    solver: &Solver<'_>,
    t: u32,
    root: usize,
) -> Result<Option<Configuration>> {
    let n = solver.graph().n();
    let free = others(n, root);
    let k = free.len();
    if k == 0 {
        // Only the root exists; the empty configuration is the one to test.
        return if t == 0 {
            Ok(Some(Configuration::zeros(n)))
        } else {
            Ok(None)
        };
    }
    let fixed = (k - 1).min(2);
    let prefixes = prefixes(t, fixed);
    let found = prefixes
        .par_iter()
        .map(|prefix| scan_block(solver, t, root, &free, prefix))
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    match found {
        None => Ok(None),
        Some(r) => r,
    }
}

/// All length-`len` prefixes with sum at most `t`, in lexicographic order.
fn prefixes(t: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                let used: u32 = p.iter().sum();
                (0..=t - used).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Advance `parts` to the next composition of the same sum in ascending
/// lexicographic order. Returns false after the last one.
fn next_composition(parts: &mut [u32]) -> bool {
    let Some(last) = parts.iter().rposition(|&x| x > 0) else {
        return false;
    };
    if last == 0 {
        return false;
    }
    let mass = parts[last];
    parts[last] = 0;
    parts[last - 1] += 1;
    let end = parts.len() - 1;
    parts[end] = mass - 1;
    true
}

fn scan_block(
    solver: &Solver<'_>,
    t: u32,
    root: usize,
    free: &[usize],
    prefix: &[u32],
) -> Result<Option<Configuration>> {
    let n = solver.graph().n();
    let rest = t - prefix.iter().sum::<u32>();
    let tail_len = free.len() - prefix.len();
    if tail_len == 0 && rest > 0 {
        return Ok(None);
    }
    let mut tail = vec![0u32; tail_len];
    if let Some(last) = tail.last_mut() {
        *last = rest;
    }
    let mut counts = vec![0u32; n];
    for (&v, &x) in free.iter().zip(prefix) {
        counts[v] = x;
    }
    loop {
        for (&v, &x) in free[prefix.len()..].iter().zip(&tail) {
            counts[v] = x;
        }
        if !solver
            .r_solve_counts(&counts, u64::from(t), root)?
            .is_solvable()
        {
            return Ok(Some(Configuration::new(counts)));
        }
        if !next_composition(&mut tail) {
            return Ok(None);
        }
    }
}

/// Lower bound `max(n, 2^diameter)` used as the starting level for the
/// pebbling number scan.
pub fn pebbling_lower_bound(g: &Graph) -> Result<u64> {
    let diameter = g.diameter()?;
    let pile = 1u64
        .checked_shl(diameter)
        .filter(|_| diameter < 63)
        .ok_or_else(|| Error::InvalidParameter(format!("diameter {diameter} is too large")))?;
    Ok(pile.max(g.n() as u64))
}

pub fn pebbling_number(g: &Graph) -> Result<u64> {
    pebbling_number_with(g, &SearchOptions::default())
}

/// Smallest `t` whose level contains no unsolvable configuration, scanning
/// upward from [`pebbling_lower_bound`].
pub fn pebbling_number_with(g: &Graph, opts: &SearchOptions) -> Result<u64> {
    let solver = Solver::new(g)?.with_state_budget(opts.state_budget);
    let mut t = pebbling_lower_bound(g)?;
    loop {
        if find_unsolvable_in(&solver, t, opts)?.is_none() {
            return Ok(t);
        }
        t += 1;
    }
}

pub fn is_class0(g: &Graph) -> Result<bool> {
    is_class0_with(g, &SearchOptions::default())
}

/// Class 0 means the pebbling number equals the vertex count.
pub fn is_class0_with(g: &Graph, opts: &SearchOptions) -> Result<bool> {
    if pebbling_lower_bound(g)? > g.n() as u64 {
        return Ok(false);
    }
    Ok(find_unsolvable_with(g, g.n() as u64, opts)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    #[test]
    fn compositions_in_lex_order() {
        let mut parts = vec![0, 0, 3];
        let mut seen = vec![parts.clone()];
        while next_composition(&mut parts) {
            seen.push(parts.clone());
        }
        assert_eq!(seen.len(), 10);
        let mut sorted = seen.clone();
        sorted.sort();
        assert_eq!(seen, sorted);
        assert_eq!(seen.last().unwrap(), &vec![3, 0, 0]);
    }

    #[test]
    fn prefix_blocks_cover_the_level() {
        assert_eq!(prefixes(2, 2).len(), 6);
        assert_eq!(prefixes(4, 0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multiset_count(4, 2), 10);
        assert_eq!(multiset_count(0, 0), 1);
        assert_eq!(multiset_count(0, 3), 0);
        assert_eq!(binomial_saturating(7, 4), 35);
        assert_eq!(binomial_saturating(300, 150), u128::MAX);
    }

    #[test]
    fn clean_and_dirty_levels() {
        assert_eq!(find_unsolvable(&complete(4).unwrap(), 4), Ok(None));
        let c5 = cycle(5).unwrap();
        let hit = find_unsolvable(&c5, 4).unwrap().unwrap();
        assert_eq!(hit.config.size(), 4);
        assert!(!crate::pebbling::is_r_solvable(&c5, &hit.config, hit.root)
            .unwrap()
            .is_solvable());
        assert_eq!(find_unsolvable(&c5, 5), Ok(None));
    }

    #[test]
    fn first_hit_is_lexicographically_first() {
        // Root 0 of K_3 at level 2: (0,0,2) is solvable, (0,1,1) is not.
        let hit = find_unsolvable(&complete(3).unwrap(), 2).unwrap().unwrap();
        assert_eq!((hit.config.counts(), hit.root), (&[0, 1, 1][..], 0));
    }

    #[test]
    fn small_pebbling_numbers() {
        for n in 1..=6 {
            assert_eq!(pebbling_number(&complete(n).unwrap()), Ok(n as u64));
        }
        assert_eq!(pebbling_number(&path(3).unwrap()), Ok(4));
        assert_eq!(pebbling_number(&path(4).unwrap()), Ok(8));
        assert_eq!(is_class0(&path(4).unwrap()), Ok(false));
    }

    #[test]
    fn level_budget_guard() {
        let opts = SearchOptions {
            level_budget: 10,
            ..SearchOptions::default()
        };
        assert!(find_unsolvable_with(&complete(6).unwrap(), 6, &opts)
            .unwrap_err()
            .is_budget());
    }
}
