use pebbling_core::generators::{hypercube, petersen, random_connected_min_degree};
use pebbling_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Floyd-Warshall diameter, independent of the BFS routines.
fn floyd_diameter(g: &Graph) -> Option<u32> {
    let n = g.n();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    (max < inf).then_some(max)
}

#[test]
fn diameter_two_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for i in 0..100 {
        let n = rng.random_range(2..=30usize);
        let delta = rng.random_range(1..=(n / 2).max(1));
        let g = random_connected_min_degree(n, delta, i).unwrap();
        assert!(g.is_connected() && g.min_degree() >= delta);
        assert_eq!(g.diameter().ok(), floyd_diameter(&g));
    }
    assert_eq!(petersen().diameter().ok(), floyd_diameter(&petersen()));
    assert_eq!(hypercube(4).unwrap().diameter(), Ok(4));
    assert_eq!(floyd_diameter(&Graph::empty(3)), None);
}

#[test]
fn extremal_graph_diameters_by_floyd() {
    use pebbling_core::extremal::{build_bipartite, build_general};
    for m in 4..=12 {
        assert_eq!(floyd_diameter(&build_bipartite(m).unwrap().graph), Some(4));
    }
    for n in 6..=14 {
        assert_eq!(floyd_diameter(&build_general(n).unwrap().graph), Some(3));
    }
}
