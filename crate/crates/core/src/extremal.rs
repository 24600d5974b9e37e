//! The two lower-bound families and their unsolvable configurations.
//!
//! *Bipartite family* `B_m`: sides `L = L1 ∪ L2`, `R = R1 ∪ R2` with
//! `|L1| = |R1| = ceil(m/2)` and `|L2| = |R2| = floor(m/2)`. `L1 ∪ R1` and
//! `L2 ∪ R2` each induce a complete bipartite graph missing one edge (`xy`
//! and `wz`), and the cross edges `wy`, `xz` are added.
//!
//! *General family* `G_n`: `|L| = ceil(n/2)`, `|R| = floor(n/2)`, each side a
//! clique missing one edge (`xy` in `L`, `wz` in `R`), plus `wy` and `xz`.
//!
//! Numbering is block by block (`L1, L2, R1, R2`, resp. `L, R`), ascending
//! inside each block, and `x, y, w, z` are the lowest indices available in
//! their blocks.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pebbling::Configuration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalFamily {
    Bipartite { m: usize },
    General { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Role {
    Vertex(usize),
    Set(Vec<usize>),
}

impl Role {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Role::Vertex(v) => std::slice::from_ref(v),
            Role::Set(vs) => vs,
        }
    }
}

/// A graph with named special vertices and vertex blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub family: ExtremalFamily,
    pub graph: Graph,
    pub roles: BTreeMap<&'static str, Role>,
}

impl LabeledGraph {
    pub fn vertex(&self, role: &str) -> Option<usize> {
        match self.roles.get(role)? {
            Role::Vertex(v) => Some(*v),
            Role::Set(_) => None,
        }
    }

    pub fn block(&self, role: &str) -> Option<&[usize]> {
        match self.roles.get(role)? {
            Role::Set(vs) => Some(vs),
            Role::Vertex(_) => None,
        }
    }

    /// `(role, vertex)` pairs, one per vertex of every role, sorted by role.
    pub fn role_lines(&self) -> Vec<(&'static str, usize)> {
        self.roles
            .iter()
            .flat_map(|(&name, role)| role.vertices().iter().map(move |&v| (name, v)))
            .collect()
    }

    fn role(&self, name: &str) -> usize {
        self.vertex(name)
            .expect("constructions define every special vertex")
    }

    fn set(&self, name: &str) -> &[usize] {
        self.block(name).expect("constructions define every block")
    }
}

fn block(start: usize, len: usize) -> Vec<usize> {
    (start..start + len).collect()
}

/// Build `B_m` (`m >= 2`).
pub fn build_bipartite(m: usize) -> Result<LabeledGraph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "bipartite construction needs m >= 2, got {m}"
        )));
    }
    let big = m.div_ceil(2);
    let small = m / 2;
    let l1 = block(0, big);
    let l2 = block(big, small);
    let r1 = block(m, big);
    let r2 = block(m + big, small);
    let (x, w, y, z) = (l1[0], l2[0], r1[0], r2[0]);

    let mut edges = Vec::new();
    for (left, right, missing) in [(&l1, &r1, (x, y)), (&l2, &r2, (w, z))] {
        for &u in left {
            for &v in right {
                if (u, v) != missing {
                    edges.push((u, v));
                }
            }
        }
    }
    edges.push((w, y));
    edges.push((x, z));
    let graph = Graph::from_edge_list(2 * m, &edges)?;

    let left: Vec<usize> = l1.iter().chain(&l2).copied().collect();
    let right: Vec<usize> = r1.iter().chain(&r2).copied().collect();
    let roles = BTreeMap::from([
        ("L", Role::Set(left)),
        ("R", Role::Set(right)),
        ("L1", Role::Set(l1)),
        ("L2", Role::Set(l2)),
        ("R1", Role::Set(r1)),
        ("R2", Role::Set(r2)),
        ("x", Role::Vertex(x)),
        ("y", Role::Vertex(y)),
        ("w", Role::Vertex(w)),
        ("z", Role::Vertex(z)),
    ]);
    Ok(LabeledGraph {
        family: ExtremalFamily::Bipartite { m },
        graph,
        roles,
    })
}

/// Build `G_n` (`n >= 4`).
pub fn build_general(n: usize) -> Result<LabeledGraph> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "general construction needs n >= 4, got {n}"
        )));
    }
    let left = block(0, n.div_ceil(2));
    let right = block(left.len(), n / 2);
    let (x, y, w, z) = (left[0], left[1], right[0], right[1]);

    let mut edges = Vec::new();
    for (side, missing) in [(&left, (x, y)), (&right, (w, z))] {
        for (i, &u) in side.iter().enumerate() {
            for &v in &side[i + 1..] {
                if (u, v) != missing {
                    edges.push((u, v));
                }
            }
        }
    }
    edges.push((w, y));
    edges.push((x, z));
    let graph = Graph::from_edge_list(n, &edges)?;
    let roles = BTreeMap::from([
        ("L", Role::Set(left)),
        ("R", Role::Set(right)),
        ("x", Role::Vertex(x)),
        ("y", Role::Vertex(y)),
        ("w", Role::Vertex(w)),
        ("z", Role::Vertex(z)),
    ]);
    Ok(LabeledGraph {
        family: ExtremalFamily::General { n },
        graph,
        roles,
    })
}

/// Root and the three loaded vertices of an extremal configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfigChoice {
    pub root: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// The unsolvable configuration on an extremal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalConfig {
    pub config: Configuration,
    pub root: usize,
    pub choice: ConfigChoice,
}

impl ExtremalConfig {
    /// Role lines for the configuration's special vertices.
    pub fn role_lines(&self) -> Vec<(&'static str, usize)> {
        let ConfigChoice { root, a, b, c } = self.choice;
        vec![("a", a), ("b", b), ("c", c), ("r", root)]
    }
}

/// Admissible roots and admissible loaded vertices, both ascending.
///
/// Bipartite: root in `L2 - {w}`, loaded vertices in `L1 - {x}`.
/// General: root in `R - {w, z}`, loaded vertices in `L - {x, y}`.
pub fn admissible(lg: &LabeledGraph) -> (Vec<usize>, Vec<usize>) {
    let (x, y, w, z) = (lg.role("x"), lg.role("y"), lg.role("w"), lg.role("z"));
    match lg.family {
        ExtremalFamily::Bipartite { .. } => (
            lg.set("L2").iter().copied().filter(|&v| v != w).collect(),
            lg.set("L1").iter().copied().filter(|&v| v != x).collect(),
        ),
        ExtremalFamily::General { .. } => (
            lg.set("R")
                .iter()
                .copied()
                .filter(|&v| v != w && v != z)
                .collect(),
            lg.set("L")
                .iter()
                .copied()
                .filter(|&v| v != x && v != y)
                .collect(),
        ),
    }
}

/// Configuration with the lowest admissible root and loaded vertices.
///
/// Requires `m >= 7` for the bipartite family and `n >= 9` for the general
/// family.
pub fn extremal_config(lg: &LabeledGraph) -> Result<ExtremalConfig> {
    let (minimum, actual) = match lg.family {
        ExtremalFamily::Bipartite { m } => (7, m),
        ExtremalFamily::General { n } => (9, n),
    };
    if actual < minimum {
        return Err(Error::InvalidParameter(format!(
            "unsolvable configuration needs size parameter >= {minimum}, got {actual}"
        )));
    }
    let (roots, loaded) = admissible(lg);
    extremal_config_with(
        lg,
        ConfigChoice {
            root: roots[0],
            a: loaded[0],
            b: loaded[1],
            c: loaded[2],
        },
    )
}

/// Configuration for an explicit admissible choice: zero on `r, w, x, y, z`,
/// three on `a` and `b`, two on `c`, one everywhere else.
pub fn extremal_config_with(lg: &LabeledGraph, choice: ConfigChoice) -> Result<ExtremalConfig> {
    let (roots, loaded) = admissible(lg);
    let ConfigChoice { root, a, b, c } = choice;
    let distinct = a != b && b != c && a != c;
    if !roots.contains(&root) || !distinct || ![a, b, c].iter().all(|v| loaded.contains(v)) {
        return Err(Error::InvalidParameter(format!(
            "inadmissible choice {choice:?}"
        )));
    }
    let mut counts = vec![1u32; lg.graph.n()];
    for v in [root, lg.role("w"), lg.role("x"), lg.role("y"), lg.role("z")] {
        counts[v] = 0;
    }
    counts[a] = 3;
    counts[b] = 3;
    counts[c] = 2;
    Ok(ExtremalConfig {
        config: Configuration::new(counts),
        root,
        choice,
    })
}

/// Shorthand for `extremal_config(&build_bipartite(m)?)`.
pub fn bipartite_config(m: usize) -> Result<(LabeledGraph, ExtremalConfig)> {
    let lg = build_bipartite(m)?;
    let cfg = extremal_config(&lg)?;
    Ok((lg, cfg))
}

/// Shorthand for `extremal_config(&build_general(n)?)`.
pub fn general_config(n: usize) -> Result<(LabeledGraph, ExtremalConfig)> {
    let lg = build_general(n)?;
    let cfg = extremal_config(&lg)?;
    Ok((lg, cfg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_multiset(g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn bipartite_b8() {
        let lg = build_bipartite(8).unwrap();
        assert_eq!(lg.graph.n(), 16);
        assert_eq!(lg.graph.min_degree(), 4);
        assert_eq!(lg.graph.max_degree(), 4);
        assert_eq!(lg.graph.edge_count(), 32);
        // L1 - {x} reaches L2 - {w} only through y, w, R2 or R1, x, z.
        assert_eq!(lg.graph.diameter(), Ok(4));
    }

    #[test]
    fn bipartite_b7_structure() {
        let lg = build_bipartite(7).unwrap();
        assert!(lg.graph.is_connected());
        assert_eq!(lg.graph.diameter(), Ok(4));
        assert_eq!(lg.block("L1").unwrap(), &[0, 1, 2, 3]);
        assert_eq!(lg.block("L2").unwrap(), &[4, 5, 6]);
        assert_eq!(lg.block("R1").unwrap(), &[7, 8, 9, 10]);
        assert_eq!(lg.block("R2").unwrap(), &[11, 12, 13]);
        assert_eq!(
            [lg.role("x"), lg.role("y"), lg.role("w"), lg.role("z")],
            [0, 7, 4, 11]
        );
        assert!(!lg.graph.has_edge(0, 7));
        assert!(!lg.graph.has_edge(4, 11));
        assert!(lg.graph.has_edge(4, 7));
        assert!(lg.graph.has_edge(0, 11));
        // Bipartite: no edges inside L or inside R.
        for (u, v) in lg.graph.edges() {
            assert!(u < 7 && v >= 7);
        }
    }

    #[test]
    fn degree_spectra_match_closed_forms() {
        for m in 4..=40 {
            let lg = build_bipartite(m).unwrap();
            let (big, small) = (m.div_ceil(2), m / 2);
            let mut expected = vec![big; 2 * big];
            expected.extend(vec![small; 2 * small]);
            expected.sort_unstable();
            assert_eq!(degree_multiset(&lg.graph), expected, "B_{m}");
            assert_eq!(lg.graph.min_degree(), m / 2);
        }
        for n in 4..=40 {
            let lg = build_general(n).unwrap();
            let (big, small) = (n.div_ceil(2), n / 2);
            let mut expected = vec![big - 1; big];
            expected.extend(vec![small - 1; small]);
            expected.sort_unstable();
            assert_eq!(degree_multiset(&lg.graph), expected, "G_{n}");
            assert_eq!(lg.graph.min_degree(), n / 2 - 1);
        }
    }

    #[test]
    fn general_small_cases() {
        let g10 = build_general(10).unwrap();
        assert_eq!(g10.graph.min_degree(), 4);
        let g9 = build_general(9).unwrap();
        assert_eq!(g9.graph.n(), 9);
        assert!(g9.graph.is_connected());
        // Only wy and xz cross between the sides.
        assert_eq!(g9.graph.diameter(), Ok(3));
        assert!(!build_general(4).unwrap().graph.is_connected());
        assert!(!build_bipartite(2).unwrap().graph.is_connected());
    }

    #[test]
    fn bipartite_config_shape() {
        let (_, cfg) = bipartite_config(7).unwrap();
        assert_eq!(cfg.config.size(), 14);
        assert_eq!(cfg.config.counts().iter().filter(|&&c| c == 0).count(), 5);
        assert_eq!(cfg.root, 5);
        assert_eq!((cfg.choice.a, cfg.choice.b, cfg.choice.c), (1, 2, 3));
        assert_eq!(cfg.config.counts()[1..4], [3, 3, 2]);
    }

    #[test]
    fn general_config_shape() {
        let (_, cfg) = general_config(9).unwrap();
        assert_eq!(cfg.config.size(), 9);
        assert_eq!(cfg.root, 7);
        assert_eq!((cfg.choice.a, cfg.choice.b, cfg.choice.c), (2, 3, 4));
        for n in 9..=30 {
            assert_eq!(general_config(n).unwrap().1.config.size(), n as u64);
        }
        for m in 7..=30 {
            assert_eq!(bipartite_config(m).unwrap().1.config.size(), 2 * m as u64);
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(build_bipartite(1).is_err());
        assert!(build_bipartite(2).is_ok());
        assert!(build_general(3).is_err());
        assert!(bipartite_config(6).is_err());
        assert!(general_config(8).is_err());
        let lg = build_general(9).unwrap();
        let bad = ConfigChoice {
            root: 0,
            a: 2,
            b: 3,
            c: 4,
        };
        assert!(extremal_config_with(&lg, bad).is_err());
        let dup = ConfigChoice {
            root: 7,
            a: 2,
            b: 2,
            c: 4,
        };
        assert!(extremal_config_with(&lg, dup).is_err());
    }
}
