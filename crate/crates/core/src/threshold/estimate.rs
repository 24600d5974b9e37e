//! Monte Carlo estimation of solvability probabilities and threshold sweeps.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;

use super::sampler::{sample_uniform_config, trial_rng};
use crate::error::{Error, Result};
use crate::extremal::build_general;
use crate::generators::{complete, random_connected_min_degree};
use crate::graph::Graph;
use crate::pebbling::{Configuration, GreedyTree, Solver};
use crate::star_partition::{build_star_partition, star_sufficient_unchecked, StarPartition};

/// Two-sided 95% normal quantile.
pub const Z_95: f64 = 1.959_963_984_540_054;

pub const CSV_HEADER: &str = "family,n,t,trials,successes,unknowns,est,ci_lo,ci_hi,solver,seed";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolverKind {
    Exact,
    StarSufficient,
    GreedyTree,
}

impl SolverKind {
    pub fn tag(self) -> &'static str {
        match self {
            SolverKind::Exact => "exact",
            SolverKind::StarSufficient => "star",
            SolverKind::GreedyTree => "greedy",
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SolverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(SolverKind::Exact),
            "star" | "star-sufficient" => Ok(SolverKind::StarSufficient),
            "greedy" | "greedy-tree" => Ok(SolverKind::GreedyTree),
            _ => Err(Error::InvalidParameter(format!("unknown solver '{s}'"))),
        }
    }
}

/// Graph families a sweep can draw from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Complete,
    /// The general-graph lower-bound construction.
    ExtremalGeneral,
    /// One seeded sample of a connected graph with minimum degree at least
    /// `floor(delta_fraction * n)` per size.
    RandomMinDegree {
        delta_fraction: f64,
    },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::ExtremalGeneral => "extremal-G",
            Family::RandomMinDegree { .. } => "random-mindeg",
        }
    }

    /// Seed used for the random member of size `n`.
    pub fn graph_seed(seed: u64, n: usize) -> u64 {
        seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
    }

    pub fn build(&self, n: usize, seed: u64) -> Result<Graph> {
        match *self {
            Family::Complete => complete(n),
            Family::ExtremalGeneral => Ok(build_general(n)?.graph),
            Family::RandomMinDegree { delta_fraction } => {
                if !(0.0..=1.0).contains(&delta_fraction) {
                    return Err(Error::InvalidParameter(format!(
                        "delta fraction {delta_fraction} outside [0, 1]"
                    )));
                }
                let delta = ((delta_fraction * n as f64).floor() as usize).min(n.saturating_sub(1));
                random_connected_min_degree(n, delta, Family::graph_seed(seed, n))
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `complete`, `extremal-G`, or `random-mindeg[:FRACTION]` (default 0.5).
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        match (name, arg) {
            ("complete", None) => Ok(Family::Complete),
            ("extremal-G" | "general-extremal", None) => Ok(Family::ExtremalGeneral),
            ("random-mindeg", arg) => {
                let delta_fraction = match arg {
                    None => 0.5,
                    Some(a) => a.parse().map_err(|_| {
                        Error::InvalidParameter(format!("bad delta fraction '{a}'"))
                    })?,
                };
                Ok(Family::RandomMinDegree { delta_fraction })
            }
            _ => Err(Error::InvalidParameter(format!("unknown family '{s}'"))),
        }
    }
}

/// How pebble counts are chosen for each size in a sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum TSpec {
    /// The same absolute counts for every size.
    Absolute(Vec<u64>),
    /// `t = ceil(c * sqrt(n))` for each multiplier `c`.
    SqrtMultiples(Vec<f64>),
    /// `t = ceil(omega * n^{3/2} / delta)` with `delta` the graph's minimum
    /// degree, for each `omega`.
    DensityMultiples(Vec<f64>),
}

impl TSpec {
    pub fn grid(&self, g: &Graph) -> Vec<u64> {
        let n = g.n() as f64;
        let mut ts: Vec<u64> = match self {
            TSpec::Absolute(ts) => ts.clone(),
            TSpec::SqrtMultiples(cs) => cs.iter().map(|c| (c * n.sqrt()).ceil() as u64).collect(),
            TSpec::DensityMultiples(ws) => {
                let delta = g.min_degree().max(1) as f64;
                ws.iter()
                    .map(|w| (w * n.powf(1.5) / delta).ceil() as u64)
                    .collect()
            }
        };
        ts.sort_unstable();
        ts.dedup();
        ts
    }
}

impl FromStr for TSpec {
    type Err = Error;

    /// `abs:3,5,8`, `sqrt:0.25,8` or `omega:2,4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad t-spec '{s}'"));
        let (kind, list) = s.split_once(':').ok_or_else(bad)?;
        let items: Vec<&str> = list.split(',').map(str::trim).collect();
        if items.iter().any(|i| i.is_empty()) {
            return Err(bad());
        }
        let floats = || -> Result<Vec<f64>> {
            items
                .iter()
                .map(|i| i.parse::<f64>().ok().filter(|x| *x >= 0.0).ok_or_else(bad))
                .collect()
        };
        match kind {
            "abs" => items
                .iter()
                .map(|i| i.parse().map_err(|_| bad()))
                .collect::<Result<_>>()
                .map(TSpec::Absolute),
            "sqrt" => floats().map(TSpec::SqrtMultiples),
            "omega" => floats().map(TSpec::DensityMultiples),
            _ => Err(bad()),
        }
    }
}

/// Where the graph of a trial plan comes from.
#[derive(Debug, Clone)]
pub enum GraphSource {
    Explicit { label: String, graph: Graph },
    Family { family: Family, n: usize },
}

/// One estimation job: `trials` uniform configurations of `t` pebbles.
#[derive(Debug, Clone)]
pub struct TrialPlan {
    pub source: GraphSource,
    pub t: u64,
    pub trials: u64,
    pub seed: u64,
    pub solver: SolverKind,
}

/// One row of a threshold curve.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdRow {
    pub family: String,
    pub n: usize,
    pub t: u64,
    pub trials: u64,
    pub successes: u64,
    /// Trials whose solver query ran out of budget.
    pub unknowns: u64,
    /// `successes / trials`, i.e. unknowns counted as failures.
    pub estimate: f64,
    /// Wilson lower bound with unknowns counted as failures.
    pub ci_lo: f64,
    /// Wilson upper bound with unknowns counted as successes.
    pub ci_hi: f64,
    pub solver: SolverKind,
    pub seed: u64,
}

impl ThresholdRow {
    /// Point estimate with unknowns counted as successes.
    pub fn upper_estimate(&self) -> f64 {
        (self.successes + self.unknowns) as f64 / self.trials as f64
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.n,
            self.t,
            self.trials,
            self.successes,
            self.unknowns,
            format_sig6(self.estimate),
            format_sig6(self.ci_lo),
            format_sig6(self.ci_hi),
            self.solver,
            self.seed
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ThresholdCurve {
    pub rows: Vec<ThresholdRow>,
}

impl ThresholdCurve {
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{CSV_HEADER}")?;
        for row in &self.rows {
            writeln!(out, "{}", row.csv_line())?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV is ASCII")
    }
}

/// Format with six significant digits, `%g` style, trailing zeros trimmed.
pub fn format_sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { format!("{x}") };
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Wilson score interval for `successes` out of `trials` at normal quantile `z`.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let center = p + z2 / (2.0 * n);
    let spread = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    let denom = 1.0 + z2 / n;
    let lo = ((center - spread) / denom).max(0.0);
    let hi = ((center + spread) / denom).min(1.0);
    // Clamp rounding at the boundary so the interval always contains p.
    (lo.min(p), hi.max(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TrialOutcome {
    Success,
    Failure,
    Unknown,
}

/// Per-graph solver state shared by all trials.
enum Prepared<'g> {
    Exact(Solver<'g>),
    Star(StarPartition),
    Greedy(GreedyTree<'g>),
}

impl<'g> Prepared<'g> {
    fn new(g: &'g Graph, kind: SolverKind) -> Result<Self> {
        Ok(match kind {
            SolverKind::Exact => Prepared::Exact(Solver::new(g)?),
            SolverKind::StarSufficient => Prepared::Star(build_star_partition(g)?),
            SolverKind::GreedyTree => Prepared::Greedy(GreedyTree::new(g)?),
        })
    }

    fn judge(&self, c: &Configuration) -> Result<TrialOutcome> {
        let solved = match self {
            Prepared::Exact(solver) => match solver.is_solvable(c) {
                Ok(b) => b,
                Err(e) if e.is_budget() => return Ok(TrialOutcome::Unknown),
                Err(e) => return Err(e),
            },
            Prepared::Star(p) => star_sufficient_unchecked(p, c),
            Prepared::Greedy(tree) => tree.solvable(c)?,
        };
        Ok(if solved {
            TrialOutcome::Success
        } else {
            TrialOutcome::Failure
        })
    }
}

fn run_trials(
    g: &Graph,
    label: &str,
    t: u64,
    trials: u64,
    seed: u64,
    kind: SolverKind,
) -> Result<ThresholdRow> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let prepared = Prepared::new(g, kind)?;
    let n = g.n();
    let t_usize =
        usize::try_from(t).map_err(|_| Error::InvalidParameter(format!("t = {t} is too large")))?;
    let outcomes: Vec<TrialOutcome> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, i);
            let c = sample_uniform_config(n, t_usize, &mut rng);
            prepared.judge(&c)
        })
        .collect::<Result<_>>()?;
    let successes = outcomes
        .iter()
        .filter(|&&o| o == TrialOutcome::Success)
        .count() as u64;
    let unknowns = outcomes
        .iter()
        .filter(|&&o| o == TrialOutcome::Unknown)
        .count() as u64;
    let (ci_lo, _) = wilson_interval(successes, trials, Z_95);
    let (_, ci_hi) = wilson_interval(successes + unknowns, trials, Z_95);
    Ok(ThresholdRow {
        family: label.to_string(),
        n,
        t,
        trials,
        successes,
        unknowns,
        estimate: successes as f64 / trials as f64,
        ci_lo,
        ci_hi,
        solver: kind,
        seed,
    })
}

/// Estimate the probability that a uniform configuration is solvable.
/// Trial `i` draws from its own stream derived from `(seed, i)`, so the
/// result does not depend on scheduling.
pub fn estimate_solvability_probability(plan: &TrialPlan) -> Result<ThresholdRow> {
    match &plan.source {
        GraphSource::Explicit { label, graph } => {
            run_trials(graph, label, plan.t, plan.trials, plan.seed, plan.solver)
        }
        GraphSource::Family { family, n } => {
            let g = family.build(*n, plan.seed)?;
            run_trials(
                &g,
                family.tag(),
                plan.t,
                plan.trials,
                plan.seed,
                plan.solver,
            )
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub t_spec: TSpec,
    pub trials: u64,
    pub seed: u64,
    pub solver: SolverKind,
}

/// Run every `(n, t)` cell of a sweep. Rows come out ordered by `(n, t)`.
pub fn threshold_sweep(spec: &SweepSpec) -> Result<ThresholdCurve> {
    if spec.sizes.is_empty() {
        return Err(Error::InvalidParameter("no sizes given".into()));
    }
    let mut sizes = spec.sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();
    let mut rows = Vec::new();
    for n in sizes {
        let g = spec.family.build(n, spec.seed)?;
        let grid = spec.t_spec.grid(&g);
        if grid.is_empty() {
            return Err(Error::InvalidParameter("empty t grid".into()));
        }
        for t in grid {
            rows.push(run_trials(
                &g,
                spec.family.tag(),
                t,
                spec.trials,
                spec.seed,
                spec.solver,
            )?);
        }
    }
    Ok(ThresholdCurve { rows })
}
