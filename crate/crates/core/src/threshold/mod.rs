//! The uniform random-configuration model: sampling, exact occupancy
//! probabilities, and Monte Carlo threshold estimation.

mod estimate;
mod occupancy;
mod sampler;

pub use estimate::{
    estimate_solvability_probability, format_sig6, threshold_sweep, wilson_interval, Family,
    GraphSource, SolverKind, SweepSpec, TSpec, ThresholdCurve, ThresholdRow, TrialPlan, CSV_HEADER,
    Z_95,
};
pub use occupancy::{
    binomial, exact_double_prob, exact_pair_double_prob, negatively_correlated, to_f64,
    OccupancyStats,
};
pub use sampler::{sample_uniform_config, trial_rng};
