//! Undirected simple graphs on dense vertex indices `0..n`.
//!
//! Neighbor lists are kept sorted so that every traversal visits vertices in
//! ascending index order. All searches built on top of [`Graph`] inherit that
//! determinism.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Distance value used for unreachable vertices in [`Graph::distances_from`].
pub const UNREACHABLE: u32 = u32::MAX;

/// An immutable undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse into one.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Canonical edge list: pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// Copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges = self.edges();
        edges.push((u, v));
        Graph::from_edge_list(self.n(), &edges)
    }

    pub fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex,
                n: self.n(),
            })
        }
    }

    /// Minimum degree; zero for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// BFS distances from `source`; unreachable vertices get [`UNREACHABLE`].
    pub fn distances_from(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.adj[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// True iff the graph has at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        self.distances_from(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Shortest-path edge count between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<u32> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        match self.distances_from(u)[v] {
            UNREACHABLE => Err(Error::Disconnected),
            d => Ok(d),
        }
    }

    /// Largest distance from `v` to any vertex.
    pub fn eccentricity(&self, v: usize) -> Result<u32> {
        self.check_vertex(v)?;
        let dist = self.distances_from(v);
        if dist.contains(&UNREACHABLE) {
            return Err(Error::Disconnected);
        }
        Ok(dist.into_iter().max().unwrap_or(0))
    }

    /// Maximum eccentricity over all vertices (one BFS per vertex).
    pub fn diameter(&self) -> Result<u32> {
        if self.n() == 0 {
            return Err(Error::Disconnected);
        }
        let mut best = 0;
        for v in 0..self.n() {
            best = best.max(self.eccentricity(v)?);
        }
        Ok(best)
    }

    /// `v` together with its neighbors, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let at = out.partition_point(|&u| u < v);
        out.insert(at, v);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn edge_list_construction() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, generators::complete(3).unwrap());
        let dup = Graph::from_edge_list(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
        let rev = Graph::from_edge_list(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(rev.edge_count(), 1);
    }

    #[test]
    fn edge_list_rejections() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn connectivity() {
        assert!(generators::complete(4).unwrap().is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn distances_and_diameter() {
        let p3 = generators::path(3).unwrap();
        assert_eq!(p3.distance(0, 2), Ok(2));
        assert_eq!(p3.distance(1, 1), Ok(0));
        let q3 = generators::hypercube(3).unwrap();
        assert_eq!(q3.distance(0b000, 0b111), Ok(3));
        assert_eq!(generators::complete(5).unwrap().diameter(), Ok(1));
        assert_eq!(Graph::empty(3).diameter(), Err(Error::Disconnected));
        assert_eq!(Graph::empty(3).distance(0, 1), Err(Error::Disconnected));
    }

    #[test]
    fn closed_neighborhood_is_sorted() {
        let g = generators::cycle(5).unwrap();
        assert_eq!(g.closed_neighborhood(0), vec![0, 1, 4]);
        assert_eq!(g.closed_neighborhood(2), vec![1, 2, 3]);
    }
}
