//! Greedy spanning-tree pebbling: a fast sufficient test.
//!
//! For each root, pebbles are pushed up a BFS tree leaf-first, every vertex
//! forwarding half of what it holds (rounded down) to its parent. Success
//! proves r-solvability; failure proves nothing.

use std::collections::VecDeque;
use std::sync::OnceLock;

use super::configuration::Configuration;
use crate::error::{Error, Result};
use crate::graph::Graph;

struct Tree {
    /// Vertices in BFS order from the root.
    order: Vec<usize>,
    parent: Vec<usize>,
}

pub struct GreedyTree<'g> {
    graph: &'g Graph,
    trees: Vec<OnceLock<Tree>>,
}

impl<'g> GreedyTree<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(GreedyTree {
            graph,
            trees: (0..graph.n()).map(|_| OnceLock::new()).collect(),
        })
    }

    fn tree(&self, root: usize) -> &Tree {
        self.trees[root].get_or_init(|| {
            let n = self.graph.n();
            let mut parent = vec![usize::MAX; n];
            let mut order = Vec::with_capacity(n);
            let mut queue = VecDeque::from([root]);
            parent[root] = root;
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &v in self.graph.neighbors(u) {
                    if parent[v] == usize::MAX {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            Tree { order, parent }
        })
    }

    pub fn reaches(&self, c: &Configuration, root: usize) -> bool {
        if c[root] >= 1 {
            return true;
        }
        let tree = self.tree(root);
        let mut held: Vec<u64> = c.counts().iter().map(|&x| u64::from(x)).collect();
        for &v in tree.order.iter().skip(1).rev() {
            held[tree.parent[v]] += held[v] / 2;
        }
        held[root] >= 1
    }

    /// True when the greedy push succeeds for every root.
    pub fn solvable(&self, c: &Configuration) -> Result<bool> {
        c.check_against(self.graph)?;
        Ok((0..self.graph.n()).all(|r| self.reaches(c, r)))
    }
}
