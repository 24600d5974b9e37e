use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Pebble counts indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    counts: Vec<u32>,
    size: u64,
}

impl Configuration {
    pub fn new(counts: Vec<u32>) -> Self {
        let size = counts.iter().map(|&c| u64::from(c)).sum();
        Configuration { counts, size }
    }

    pub fn zeros(n: usize) -> Self {
        Configuration::new(vec![0; n])
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<u32> {
        self.counts
    }

    /// Total number of pebbles.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of vertices the configuration is defined on.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.counts[v]
    }

    /// Copy with one extra pebble on `v`.
    pub fn with_added(&self, v: usize) -> Configuration {
        let mut counts = self.counts.clone();
        counts[v] += 1;
        Configuration {
            counts,
            size: self.size + 1,
        }
    }

    pub(crate) fn check_against(&self, g: &Graph) -> Result<()> {
        if self.len() == g.n() {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected: g.n(),
                actual: self.len(),
            })
        }
    }
}

impl std::ops::Index<usize> for Configuration {
    type Output = u32;

    fn index(&self, v: usize) -> &u32 {
        &self.counts[v]
    }
}

/// A pebbling step: two pebbles leave `from`, one arrives at `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub from: usize,
    pub to: usize,
}

impl Move {
    pub fn new(from: usize, to: usize) -> Self {
        Move { from, to }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.from, self.to)
    }
}

/// Apply one pebbling step, returning the new configuration.
pub fn apply_move(g: &Graph, c: &Configuration, m: Move) -> Result<Configuration> {
    c.check_against(g)?;
    g.check_vertex(m.from)?;
    g.check_vertex(m.to)?;
    if !g.has_edge(m.from, m.to) {
        return Err(Error::NotAnEdge {
            from: m.from,
            to: m.to,
        });
    }
    let available = c.counts[m.from];
    if available < 2 {
        return Err(Error::InsufficientPebbles {
            from: m.from,
            available,
        });
    }
    let mut counts = c.counts.clone();
    counts[m.from] -= 2;
    counts[m.to] += 1;
    Ok(Configuration {
        counts,
        size: c.size - 1,
    })
}

/// Ordered move sequence certifying that a root can be reached.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness {
    pub moves: Vec<Move>,
}

impl Witness {
    pub fn new(moves: Vec<Move>) -> Self {
        Witness { moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Replay every move from `start` and return the final configuration.
    pub fn replay(&self, g: &Graph, start: &Configuration) -> Result<Configuration> {
        let mut c = start.clone();
        for &m in &self.moves {
            c = apply_move(g, &c, m)?;
        }
        Ok(c)
    }

    /// True iff the replay is legal and leaves a pebble on `root`.
    pub fn certifies(&self, g: &Graph, start: &Configuration, root: usize) -> bool {
        matches!(self.replay(g, start), Ok(end) if end.get(root) >= 1)
    }
}
