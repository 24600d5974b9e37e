//! Exact and probabilistic tools for graph pebbling.
//!
//! - [`graph`] and [`generators`]: simple graphs, standard families, and
//!   seeded random graphs with a minimum-degree floor.
//! - [`pebbling`]: pebbling steps, exact r-solvability with replayable
//!   witnesses, a brute-force reference oracle, unsolvable-configuration
//!   search, pebbling numbers and the Class 0 test.
//! - [`extremal`]: the dense bipartite and general constructions that are
//!   not Class 0, with their unsolvable configurations.
//! - [`star_partition`]: greedy star partitions and a center-accumulation
//!   sufficient condition for solvability.
//! - [`threshold`]: uniform random configurations, exact occupancy
//!   probabilities and Monte Carlo threshold curves.
//! - [`acceptance`]: the reproducible check suite behind `verify-paper`.

pub mod acceptance;
pub mod error;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod io;
pub mod pebbling;
pub mod star_partition;
pub mod threshold;

pub use error::{Error, Result};
pub use extremal::{ConfigChoice, ExtremalConfig, ExtremalFamily, LabeledGraph, Role};
pub use graph::Graph;
pub use pebbling::{Configuration, Move, RootOutcome, SearchOptions, Solver, Witness};
pub use star_partition::{StarPart, StarPartition};
pub use threshold::{Family, SolverKind, TSpec, ThresholdCurve, ThresholdRow, TrialPlan};
