//! Reproducible check suite: each criterion runs a fixed, seeded workload
//! and reports expected versus observed values, a verdict, and wall time.
//!
//! [`Level::Full`] runs every criterion at its stated sample sizes.
//! [`Level::Quick`] shrinks the sampled workloads and uses the single-root
//! shortcut for the (vertex-transitive) Petersen graph.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::extremal::{bipartite_config, general_config};
use crate::generators::{complete, cycle, hypercube, petersen, random_connected_min_degree};
use crate::graph::Graph;
use crate::pebbling::{
    brute_force_r_solvable, find_unsolvable, is_class0_with, pebbling_number, SearchOptions, Solver,
};
use crate::star_partition::{
    build_star_partition, star_sufficient_solvable, verify_star_partition,
};
use crate::threshold::{
    estimate_solvability_probability, exact_double_prob, exact_pair_double_prob,
    negatively_correlated, sample_uniform_config, to_f64, Family, GraphSource, SolverKind,
    TrialPlan,
};
use num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl std::str::FromStr for Level {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(crate::Error::InvalidParameter(format!(
                "unknown level '{s}'"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u32,
    pub description: &'static str,
    pub expected: String,
    pub observed: String,
    /// Whether the mathematical check held (ignores timing).
    pub holds: bool,
    pub elapsed: Duration,
    pub time_limit: Duration,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.holds && self.elapsed <= self.time_limit
    }

    pub fn verdict(&self) -> &'static str {
        match (self.holds, self.elapsed <= self.time_limit) {
            (true, true) => "PASS",
            (true, false) => "FAIL (time)",
            (false, _) => "FAIL",
        }
    }

    /// `[PASS] #3 description: observed (expected ...; 1.2s)`.
    pub fn summary_line(&self) -> String {
        format!(
            "[{}] #{} {}: observed {} (expected {}; {:.2?} of {:?})",
            self.verdict(),
            self.id,
            self.description,
            self.observed,
            self.expected,
            self.elapsed,
            self.time_limit
        )
    }
}

struct Outcome {
    expected: String,
    observed: String,
    holds: bool,
}

fn timed(
    id: u32,
    description: &'static str,
    time_limit: Duration,
    body: impl FnOnce() -> Result<Outcome>,
) -> CriterionReport {
    let start = Instant::now();
    let outcome = body().unwrap_or_else(|e| Outcome {
        expected: "completion".into(),
        observed: format!("error: {e}"),
        holds: false,
    });
    CriterionReport {
        id,
        description,
        expected: outcome.expected,
        observed: outcome.observed,
        holds: outcome.holds,
        elapsed: start.elapsed(),
        time_limit,
    }
}

const SECOND: Duration = Duration::from_secs(1);
const MINUTE: Duration = Duration::from_secs(60);

pub fn run_all(level: Level) -> Vec<CriterionReport> {
    vec![
        class0_corpus(level),
        bipartite_lower_bound(),
        general_lower_bound(),
        dense_graphs_are_class0(level),
        occupancy_formula(level),
        negative_correlation(),
        star_partition_guarantee(level),
        star_sufficiency_soundness(level),
        clique_threshold(level),
        oracle_equivalence(level),
        monotonicity(level),
    ]
}

/// Fixed-format table: id, description, expected, observed, verdict.
pub fn format_table(reports: &[CriterionReport]) -> String {
    let mut out = String::from("id | description | expected | observed | verdict\n");
    for r in reports {
        writeln!(
            out,
            "{} | {} | {} | {} | {}",
            r.id,
            r.description,
            r.expected,
            r.observed,
            r.verdict()
        )
        .expect("writing to String");
    }
    out
}

/// Criterion 1: Pebbling numbers of the Class 0 corpus.
pub fn class0_corpus(level: Level) -> CriterionReport {
    // Per-graph limits: 10 s for the small graphs, 10 min for Petersen.
    timed(
        1,
        "Class 0 corpus: K3..K6, C5, Q3, Petersen",
        10 * MINUTE + 60 * SECOND,
        || {
            let mut observed = Vec::new();
            let mut holds = true;
            let mut small: Vec<(String, Graph, u64)> = (3..=6)
                .map(|n| Ok((format!("K{n}"), complete(n)?, n as u64)))
                .collect::<Result<_>>()?;
            small.push(("C5".into(), cycle(5)?, 5));
            small.push(("Q3".into(), hypercube(3)?, 8));
            for (name, g, expected) in small {
                let start = Instant::now();
                let pi = pebbling_number(&g)?;
                holds &= pi == expected && start.elapsed() <= 10 * SECOND;
                observed.push(format!("pi({name})={pi}"));
            }
            let opts = SearchOptions {
                vertex_transitive: level == Level::Quick,
                ..SearchOptions::default()
            };
            let start = Instant::now();
            let class0 = is_class0_with(&petersen(), &opts)?;
            let limit = if opts.vertex_transitive {
                MINUTE
            } else {
                10 * MINUTE
            };
            holds &= class0 && start.elapsed() <= limit;
            observed.push(format!("Petersen class0={class0}"));
            Ok(Outcome {
                expected: "pi(Kn)=n, pi(C5)=5, pi(Q3)=8, Petersen class0=true".into(),
                observed: observed.join(", "),
                holds,
            })
        },
    )
}

/// Criterion 2: The bipartite construction's configuration is r-unsolvable.
pub fn bipartite_lower_bound() -> CriterionReport {
    timed(
        2,
        "B_m configuration unsolvable, m=7..9",
        3 * MINUTE,
        || {
            let mut observed = Vec::new();
            let mut holds = true;
            for m in 7..=9 {
                let start = Instant::now();
                let (lg, cfg) = bipartite_config(m)?;
                let solvable = Solver::new(&lg.graph)?
                    .r_solve(&cfg.config, cfg.root)?
                    .is_solvable();
                holds &=
                    !solvable && cfg.config.size() == 2 * m as u64 && start.elapsed() <= MINUTE;
                observed.push(format!("B_{m}:{}", verdict_word(solvable)));
            }
            Ok(Outcome {
                expected: "unsolvable for m=7,8,9 (pi(B_m) >= 2m+1)".into(),
                observed: observed.join(" "),
                holds,
            })
        },
    )
}

/// Criterion 3: The general construction's configuration is r-unsolvable.
pub fn general_lower_bound() -> CriterionReport {
    timed(
        3,
        "G_n configuration unsolvable, n=9..12",
        4 * MINUTE,
        || {
            let mut observed = Vec::new();
            let mut holds = true;
            for n in 9..=12 {
                let start = Instant::now();
                let (lg, cfg) = general_config(n)?;
                let solvable = Solver::new(&lg.graph)?
                    .r_solve(&cfg.config, cfg.root)?
                    .is_solvable();
                holds &= !solvable && cfg.config.size() == n as u64 && start.elapsed() <= MINUTE;
                observed.push(format!("G_{n}:{}", verdict_word(solvable)));
            }
            Ok(Outcome {
                expected: "unsolvable for n=9..12 (pi(G_n) >= n+1)".into(),
                observed: observed.join(" "),
                holds,
            })
        },
    )
}

fn verdict_word(solvable: bool) -> &'static str {
    if solvable {
        "solvable"
    } else {
        "unsolvable"
    }
}

/// Criterion 4: Random graphs with minimum degree floor(n/2) are Class 0.
pub fn dense_graphs_are_class0(level: Level) -> CriterionReport {
    let samples = match level {
        Level::Quick => 3,
        Level::Full => 20,
    };
    timed(
        4,
        "min degree floor(n/2) => Class 0, n=9..11",
        15 * MINUTE,
        || {
            let mut clean = 0;
            let mut total = 0;
            for n in 9..=11usize {
                for seed in 0..samples {
                    let g = random_connected_min_degree(n, n / 2, 4000 + seed)?;
                    total += 1;
                    if g.min_degree() >= n / 2 && find_unsolvable(&g, n as u64)?.is_none() {
                        clean += 1;
                    }
                }
            }
            Ok(Outcome {
                expected: format!("{total}/{total} Class 0"),
                observed: format!("{clean}/{total} Class 0"),
                holds: clean == total,
            })
        },
    )
}

/// All count vectors of `t` pebbles on `n` vertices.
fn for_each_configuration(n: usize, t: u32, f: &mut impl FnMut(&[u32])) {
    fn rec(counts: &mut Vec<u32>, n: usize, left: u32, f: &mut impl FnMut(&[u32])) {
        if counts.len() + 1 == n {
            counts.push(left);
            f(counts);
            counts.pop();
            return;
        }
        for x in 0..=left {
            counts.push(x);
            rec(counts, n, left - x, f);
            counts.pop();
        }
    }
    rec(&mut Vec::with_capacity(n), n, t, f);
}

/// Exact occupancy frequencies by enumeration: (single, pair) as rationals.
pub fn enumerate_double_frequencies(n: usize, t: u32) -> (BigRational, Option<BigRational>) {
    let (mut total, mut single, mut pair) = (0i64, 0i64, 0i64);
    for_each_configuration(n, t, &mut |c| {
        total += 1;
        if c[0] == 2 {
            single += 1;
            if n >= 2 && c[1] == 2 {
                pair += 1;
            }
        }
    });
    let q = |k: i64| BigRational::new(k.into(), total.into());
    (q(single), (n >= 2).then(|| q(pair)))
}

/// Criterion 5: Exact double-occupancy formula versus enumeration and sampling.
pub fn occupancy_formula(level: Level) -> CriterionReport {
    let samples: u64 = match level {
        Level::Quick => 20_000,
        Level::Full => 100_000,
    };
    timed(
        5,
        "P[C(v)=2] formula: enumeration n<=6,t<=8 and MC (20,15)",
        MINUTE,
        || {
            let mut mismatches = 0;
            for n in 1..=6usize {
                for t in 0..=8u32 {
                    let (single, pair) = enumerate_double_frequencies(n, t);
                    if single != exact_double_prob(n as u64, u64::from(t)) {
                        mismatches += 1;
                    }
                    if let Some(pair) = pair {
                        if pair != exact_pair_double_prob(n as u64, u64::from(t)) {
                            mismatches += 1;
                        }
                    }
                }
            }
            let p = to_f64(&exact_double_prob(20, 15));
            let mut rng = ChaCha8Rng::seed_from_u64(5005);
            let hits = (0..samples)
                .filter(|_| sample_uniform_config(20, 15, &mut rng)[0] == 2)
                .count();
            let freq = hits as f64 / samples as f64;
            let sigma = (p * (1.0 - p) / samples as f64).sqrt();
            let z = (freq - p).abs() / sigma;
            Ok(Outcome {
                expected: format!("0 mismatches; |freq-p|<=3 sigma with p={p:.6}"),
                observed: format!("{mismatches} mismatches; freq={freq:.6}, {z:.2} sigma"),
                holds: mismatches == 0 && z <= 3.0,
            })
        },
    )
}

/// Criterion 6: Pair probability at most the squared single probability.
pub fn negative_correlation() -> CriterionReport {
    timed(
        6,
        "pair <= single^2, 4<=n<=60, 4<=t<=n-1",
        10 * SECOND,
        || {
            let mut checked = 0;
            let mut violations = Vec::new();
            for n in 4..=60u64 {
                for t in 4..n {
                    checked += 1;
                    if !negatively_correlated(n, t) {
                        violations.push((n, t));
                    }
                }
            }
            Ok(Outcome {
                expected: format!("0 violations of {checked}"),
                observed: format!(
                    "{} violations {:?}",
                    violations.len(),
                    &violations[..violations.len().min(5)]
                ),
                holds: violations.is_empty(),
            })
        },
    )
}

/// Criterion 7: Greedy star partitions are (delta+1)-star partitions with few parts.
pub fn star_partition_guarantee(level: Level) -> CriterionReport {
    let graphs = match level {
        Level::Quick => 50,
        Level::Full => 200,
    };
    timed(
        7,
        "star partition verifies, l <= n/(delta+1)",
        MINUTE,
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(7007);
            let mut good = 0;
            for i in 0..graphs {
                let n = rng.random_range(8..=60usize);
                let floor = rng.random_range(3..=(n / 3).max(3));
                let g = random_connected_min_degree(n, floor, 7000 + i)?;
                let delta = g.min_degree();
                let p = build_star_partition(&g)?;
                if delta >= 3
                    && verify_star_partition(&g, &p, delta + 1)
                    && p.len() * (delta + 1) <= n
                {
                    good += 1;
                }
            }
            Ok(Outcome {
                expected: format!("{graphs}/{graphs}"),
                observed: format!("{good}/{graphs}"),
                holds: good == graphs,
            })
        },
    )
}

/// Small connected graph: random recursive tree plus random extra edges.
fn random_small_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    let extra = rng.random_range(0.0..0.6);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("indices in range")
}

/// Criterion 8: The star sufficient condition never accepts an unsolvable configuration.
pub fn star_sufficiency_soundness(level: Level) -> CriterionReport {
    let samples = match level {
        Level::Quick => 250,
        Level::Full => 1000,
    };
    timed(
        8,
        "star-sufficient => solvable, n<=10, |c|<=10",
        10 * MINUTE,
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(8008);
            let (mut positives, mut violations) = (0, 0);
            for _ in 0..samples {
                let n = rng.random_range(2..=10usize);
                let g = random_small_graph(n, &mut rng);
                let t = rng.random_range(0..=10usize);
                let c = sample_uniform_config(n, t, &mut rng);
                let p = build_star_partition(&g)?;
                if star_sufficient_solvable(&g, &p, &c)? {
                    positives += 1;
                    if !Solver::new(&g)?.is_solvable(&c)? {
                        violations += 1;
                    }
                }
            }
            Ok(Outcome {
                expected: "0 violations".into(),
                observed: format!(
                    "{violations} violations among {positives} accepted of {samples}"
                ),
                holds: violations == 0 && positives > 0,
            })
        },
    )
}

/// Criterion 9: Clique solvability jumps from below 0.1 to above 0.9 across the
/// `sqrt(n)` scale.
pub fn clique_threshold(level: Level) -> CriterionReport {
    let trials = match level {
        Level::Quick => 500,
        Level::Full => 2000,
    };
    timed(
        9,
        "cliques: Pr(8 sqrt n) > 0.9, Pr(0.25 sqrt n) < 0.1",
        10 * MINUTE,
        || {
            let mut observed = Vec::new();
            let mut holds = true;
            for n in [64usize, 256, 1024] {
                let graph = complete(n)?;
                let root = (n as f64).sqrt();
                for (mult, above) in [(8.0, true), (0.25, false)] {
                    let t = (mult * root).ceil() as u64;
                    let row = estimate_solvability_probability(&TrialPlan {
                        source: GraphSource::Explicit {
                            label: Family::Complete.tag().into(),
                            graph: graph.clone(),
                        },
                        t,
                        trials,
                        seed: 9009,
                        solver: SolverKind::Exact,
                    })?;
                    let half_width = (row.ci_hi - row.ci_lo) / 2.0;
                    let side_ok = if above {
                        row.estimate > 0.9
                    } else {
                        row.upper_estimate() < 0.1
                    };
                    holds &= side_ok && half_width < 0.03;
                    observed.push(format!("n={n},t={t}:{:.4}±{half_width:.4}", row.estimate));
                }
            }
            Ok(Outcome {
                expected: "high > 0.9, low < 0.1, CI half-width < 0.03".into(),
                observed: observed.join(" "),
                holds,
            })
        },
    )
}

/// Criterion 10: The pruned solver agrees with the brute-force oracle.
pub fn oracle_equivalence(level: Level) -> CriterionReport {
    let samples = match level {
        Level::Quick => 200,
        Level::Full => 500,
    };
    timed(
        10,
        "solver == brute-force oracle, n<=8, t<=8",
        10 * MINUTE,
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(1010);
            let (mut disagreements, mut bad_witnesses, mut solvable) = (0, 0, 0);
            for _ in 0..samples {
                let n = rng.random_range(1..=8usize);
                let g = random_small_graph(n, &mut rng);
                let t = rng.random_range(0..=8usize);
                let c = sample_uniform_config(n, t, &mut rng);
                let root = rng.random_range(0..n);
                let fast = Solver::new(&g)?.r_solve(&c, root)?;
                let slow = brute_force_r_solvable(&g, &c, root)?;
                if fast.is_solvable() != slow {
                    disagreements += 1;
                }
                if let Some(w) = fast.witness() {
                    solvable += 1;
                    if !w.certifies(&g, &c, root) {
                        bad_witnesses += 1;
                    }
                }
            }
            Ok(Outcome {
            expected: "0 disagreements, 0 bad witnesses".into(),
            observed: format!(
                "{disagreements} disagreements, {bad_witnesses} bad witnesses ({solvable}/{samples} solvable)"
            ),
            holds: disagreements == 0 && bad_witnesses == 0,
        })
        },
    )
}

/// Criterion 11: Adding a pebble or an edge never destroys solvability.
pub fn monotonicity(level: Level) -> CriterionReport {
    let samples = match level {
        Level::Quick => 250,
        Level::Full => 1000,
    };
    timed(
        11,
        "pebble- and edge-addition monotonicity",
        10 * MINUTE,
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(1111);
            let (mut pebble_premises, mut pebble_violations) = (0, 0);
            for _ in 0..samples {
                let n = rng.random_range(2..=8usize);
                let g = random_small_graph(n, &mut rng);
                let t = rng.random_range(n.saturating_sub(2)..=n + 3);
                let c = sample_uniform_config(n, t, &mut rng);
                let v = rng.random_range(0..n);
                let solver = Solver::new(&g)?;
                if solver.is_solvable(&c)? {
                    pebble_premises += 1;
                    if !solver.is_solvable(&c.with_added(v))? {
                        pebble_violations += 1;
                    }
                }
            }
            let (mut edge_premises, mut edge_violations, mut edge_trials) = (0, 0, 0);
            while edge_trials < samples {
                let n = rng.random_range(3..=8usize);
                let g = random_small_graph(n, &mut rng);
                let missing: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| !g.has_edge(u, v))
                    .collect();
                if missing.is_empty() {
                    continue;
                }
                edge_trials += 1;
                let (u, v) = missing[rng.random_range(0..missing.len())];
                let bigger = g.with_edge(u, v)?;
                let t = rng.random_range(0..=2 * n);
                let c = sample_uniform_config(n, t, &mut rng);
                let root = rng.random_range(0..n);
                if Solver::new(&g)?.r_solve(&c, root)?.is_solvable() {
                    edge_premises += 1;
                    if !Solver::new(&bigger)?.r_solve(&c, root)?.is_solvable() {
                        edge_violations += 1;
                    }
                }
            }
            Ok(Outcome {
            expected: "0 violations".into(),
            observed: format!(
                "pebble: {pebble_violations}/{pebble_premises}, edge: {edge_violations}/{edge_premises}"
            ),
            holds: pebble_violations == 0 && edge_violations == 0 && pebble_premises > 0 && edge_premises > 0,
        })
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn configuration_count(n: usize, t: u32) -> u64 {
        let mut k = 0;
        for_each_configuration(n, t, &mut |_| k += 1);
        k
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(configuration_count(4, 2), 10);
        assert_eq!(configuration_count(4, 4), 35);
        assert_eq!(configuration_count(1, 5), 1);
        let (single, pair) = enumerate_double_frequencies(4, 2);
        assert_eq!(single, BigRational::new(1.into(), 10.into()));
        assert_eq!(pair, Some(BigRational::new(0.into(), 1.into())));
    }

    #[test]
    fn levels_parse() {
        assert_eq!("quick".parse::<Level>(), Ok(Level::Quick));
        assert!("medium".parse::<Level>().is_err());
    }

    #[test]
    fn table_has_one_row_per_report() {
        let reports = vec![negative_correlation()];
        let table = format_table(&reports);
        assert_eq!(table.lines().count(), 2);
        assert!(table.lines().nth(1).unwrap().ends_with("PASS"));
    }
}
