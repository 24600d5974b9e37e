//! Standard graph families and a seeded random generator for connected
//! graphs with a minimum-degree floor.
//!
//! Vertex numbering per family:
//! - `complete(n)`, `path(n)`: `0..n`, path edges `i ~ i+1`.
//! - `cycle(n)`: `i ~ (i+1) mod n`.
//! - `hypercube(d)`: vertex = bit string as an integer, edges flip one bit.
//! - `petersen()`: outer 5-cycle `0..5`, inner pentagram `5..10`
//!   (`5+i ~ 5+(i+2) mod 5`), spokes `i ~ 5+i`.
//! - `complete_bipartite(a, b)`: sides `0..a` and `a..a+b`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Rejection-sampling cap for [`random_connected_min_degree`].
pub const RANDOM_GRAPH_RETRY_CAP: u32 = 10_000;

fn require(ok: bool, message: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(message()))
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, || "complete graph needs n >= 1".into())?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, || "path needs n >= 1".into())?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn hypercube(d: u32) -> Result<Graph> {
    require(d <= 20, || format!("hypercube dimension {d} is too large"))?;
    let n = 1usize << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |bit| (u, u ^ (1 << bit))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::from_edge_list(n, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edge_list(10, &edges).expect("petersen edges are valid")
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    require(a >= 1 && b >= 1, || {
        format!("complete bipartite graph needs both sides nonempty, got ({a}, {b})")
    })?;
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(a + b, &edges)
}

/// Edge probability used by [`random_connected_min_degree`].
pub fn min_degree_edge_probability(n: usize, delta: usize) -> f64 {
    let n = n as f64;
    ((delta as f64 + n.sqrt()) / n).min(0.95)
}

/// Sample a connected graph on `n` vertices with minimum degree at least
/// `delta` by rejection from the binomial model.
///
/// Each attempt includes every pair independently with probability
/// `min(0.95, (delta + sqrt(n)) / n)`; pairs are visited in lexicographic
/// order so the result depends only on `(n, delta, seed)`. When
/// `delta == n - 1` the only admissible graph is `K_n`, which is returned
/// directly.
pub fn random_connected_min_degree(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, || "random graph needs n >= 1".into())?;
    require(delta < n, || {
        format!("delta {delta} must be at most n - 1 = {}", n - 1)
    })?;
    if delta == n - 1 {
        return complete(n);
    }
    let p = min_degree_edge_probability(n, delta);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for _ in 0..RANDOM_GRAPH_RETRY_CAP {
        edges.clear();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges)?;
        if g.min_degree() >= delta && g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted {
        attempts: RANDOM_GRAPH_RETRY_CAP,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_counts() {
        for n in 1..12 {
            let k = complete(n).unwrap();
            assert_eq!((k.n(), k.edge_count()), (n, n * (n - 1) / 2));
            let p = path(n).unwrap();
            assert_eq!((p.n(), p.edge_count()), (n, n - 1));
        }
        for n in 3..12 {
            let c = cycle(n).unwrap();
            assert_eq!((c.n(), c.edge_count()), (n, n));
            assert!((0..n).all(|v| c.degree(v) == 2));
        }
        for d in 0..7u32 {
            let q = hypercube(d).unwrap();
            let n = 1usize << d;
            assert_eq!((q.n(), q.edge_count()), (n, d as usize * n / 2));
        }
        for (a, b) in [(1, 1), (1, 4), (3, 5)] {
            let g = complete_bipartite(a, b).unwrap();
            assert_eq!((g.n(), g.edge_count()), (a + b, a * b));
        }
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(hypercube(3).unwrap().edge_count(), 12);
    }

    #[test]
    fn adjacency_symmetric() {
        let graphs = [
            complete(6).unwrap(),
            cycle(7).unwrap(),
            hypercube(4).unwrap(),
            petersen(),
            complete_bipartite(2, 3).unwrap(),
        ];
        for g in &graphs {
            for u in 0..g.n() {
                for &v in g.neighbors(u) {
                    assert!(g.has_edge(v, u));
                }
            }
        }
    }

    #[test]
    fn petersen_is_cubic_with_diameter_two() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(g.diameter(), Ok(2));
        assert_eq!(hypercube(3).unwrap().min_degree(), 3);
    }

    #[test]
    fn parameter_minimums() {
        assert!(complete(0).is_err());
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert_eq!(hypercube(0).unwrap().n(), 1);
        assert!(random_connected_min_degree(5, 5, 0).is_err());
    }

    #[test]
    fn random_min_degree_postconditions() {
        let g = random_connected_min_degree(10, 5, 1).unwrap();
        assert!(g.is_connected());
        assert!(g.min_degree() >= 5);

        assert_eq!(
            random_connected_min_degree(5, 4, 7).unwrap(),
            complete(5).unwrap()
        );

        let a = random_connected_min_degree(12, 6, 3).unwrap();
        let b = random_connected_min_degree(12, 6, 3).unwrap();
        assert_eq!(a.edges(), b.edges());

        for seed in 0..50 {
            let g = random_connected_min_degree(20, 3, seed).unwrap();
            assert!(g.is_connected() && g.min_degree() >= 3);
        }
    }
}
