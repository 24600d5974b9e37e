//! Pebbling semantics and exact solvers.

mod configuration;
mod greedy;
mod oracle;
mod search;
mod solver;

pub use configuration::{apply_move, Configuration, Move, Witness};
pub use greedy::GreedyTree;
pub use oracle::{
    brute_force_r_solvable, brute_force_r_solvable_with_budget, DEFAULT_ORACLE_BUDGET,
};
pub use search::{
    find_unsolvable, find_unsolvable_with, is_class0, is_class0_with, pebbling_lower_bound,
    pebbling_number, pebbling_number_with, Counterexample, SearchOptions, DEFAULT_LEVEL_BUDGET,
};
pub use solver::{is_r_solvable, is_solvable, RootOutcome, Solver, DEFAULT_STATE_BUDGET};
