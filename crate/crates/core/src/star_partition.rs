//! Greedy star partitions and the center-accumulation sufficiency test.
//!
//! The greedy procedure takes the closed neighborhood of vertex 0 as the
//! first part, then repeatedly takes the closed neighborhood of the
//! lowest-index unassigned vertex whose whole neighborhood is still
//! unassigned. Whatever is left when no such vertex exists is `W`; each of
//! its vertices then has a neighbor inside some part.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pebbling::Configuration;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPart {
    pub center: usize,
    /// Sorted; contains the center.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPartition {
    pub parts: Vec<StarPart>,
    /// Sorted leftover vertices.
    pub leftover: Vec<usize>,
}

impl StarPartition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

pub fn build_star_partition(g: &Graph) -> Result<StarPartition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut assigned = vec![false; n];
    let mut parts = Vec::new();
    loop {
        let next = (0..n).find(|&u| !assigned[u] && g.neighbors(u).iter().all(|&v| !assigned[v]));
        let Some(center) = next else { break };
        let members = g.closed_neighborhood(center);
        for &v in &members {
            assigned[v] = true;
        }
        parts.push(StarPart { center, members });
    }
    let leftover = (0..n).filter(|&v| !assigned[v]).collect();
    Ok(StarPartition { parts, leftover })
}

/// Check that `p` is a `q`-star partition of `g`: parts and `W` are disjoint
/// and cover `V`, every part is a star around its center with at least `q`
/// vertices, and every vertex of `W` has a neighbor in some part.
pub fn verify_star_partition(g: &Graph, p: &StarPartition, q: usize) -> bool {
    let n = g.n();
    // owner[v] = Some(part index) or None for W; usize::MAX marks unseen.
    let mut owner = vec![usize::MAX; n];
    for (i, part) in p.parts.iter().enumerate() {
        if part.members.len() < q || !part.members.contains(&part.center) {
            return false;
        }
        for &v in &part.members {
            if v >= n || owner[v] != usize::MAX {
                return false;
            }
            if v != part.center && !g.has_edge(part.center, v) {
                return false;
            }
            owner[v] = i;
        }
    }
    const LEFTOVER: usize = usize::MAX - 1;
    for &v in &p.leftover {
        if v >= n || owner[v] != usize::MAX {
            return false;
        }
        owner[v] = LEFTOVER;
    }
    if owner.contains(&usize::MAX) {
        return false;
    }
    p.leftover
        .iter()
        .all(|&v| g.neighbors(v).iter().any(|&u| owner[u] < LEFTOVER))
}

/// Sufficient test for solvability: every center can collect four pebbles
/// from its own pile plus one step in from each leaf.
///
/// A true answer proves the configuration solvable, since every vertex lies
/// within distance two of some center.
pub fn star_sufficient_solvable(g: &Graph, p: &StarPartition, c: &Configuration) -> Result<bool> {
    if !verify_star_partition(g, p, 1) || p.is_empty() {
        return Err(Error::UnverifiedPartition);
    }
    if c.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            actual: c.len(),
        });
    }
    Ok(star_sufficient_unchecked(p, c))
}

/// [`star_sufficient_solvable`] without re-verifying the partition.
pub(crate) fn star_sufficient_unchecked(p: &StarPartition, c: &Configuration) -> bool {
    p.parts.iter().all(|part| {
        let gathered: u64 = part
            .members
            .iter()
            .map(|&v| {
                if v == part.center {
                    u64::from(c[v])
                } else {
                    u64::from(c[v] / 2)
                }
            })
            .sum();
        gathered >= 4
    })
}
