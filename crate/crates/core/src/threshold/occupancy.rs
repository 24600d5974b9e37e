//! Exact occupancy probabilities under the uniform configuration model.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// `C(a, b)` for possibly negative arguments: zero when `b < 0` or
/// `0 <= ... a < b`, one when `b == 0`. This is the multiset-count
/// convention, so `C(-1, 0) = 1` (the single way to place nothing).
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 {
        return BigUint::zero();
    }
    if b == 0 {
        return BigUint::one();
    }
    if a < b {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn total_configurations(n: u64, t: u64) -> BigUint {
    binomial((t + n) as i64 - 1, t as i64)
}

/// Probability that a fixed vertex holds exactly two pebbles:
/// `C(t+n-4, t-2) / C(t+n-1, t)`.
pub fn exact_double_prob(n: u64, t: u64) -> BigRational {
    assert!(n >= 1, "need at least one vertex");
    let (n, t) = (n as i64, t as i64);
    ratio(
        binomial(t + n - 4, t - 2),
        total_configurations(n as u64, t as u64),
    )
}

/// Probability that two fixed distinct vertices each hold exactly two
/// pebbles: `C(t+n-7, t-4) / C(t+n-1, t)`.
pub fn exact_pair_double_prob(n: u64, t: u64) -> BigRational {
    assert!(n >= 2, "need two distinct vertices");
    let (n, t) = (n as i64, t as i64);
    ratio(
        binomial(t + n - 7, t - 4),
        total_configurations(n as u64, t as u64),
    )
}

/// Whether `Pr[X_j X_k = 1] <= Pr[X_j = 1]^2`, decided exactly.
pub fn negatively_correlated(n: u64, t: u64) -> bool {
    let single = exact_double_prob(n, t);
    exact_pair_double_prob(n, t) <= &single * &single
}

/// Exact occupancy figures for one `(n, t)` and a list of part sizes.
#[derive(Debug, Clone, PartialEq)]
pub struct OccupancyStats {
    pub n: u64,
    pub t: u64,
    /// Probability that a given vertex holds exactly two pebbles.
    pub single: BigRational,
    /// Probability that two given vertices both hold exactly two pebbles.
    pub pair: BigRational,
    /// Expected number of vertices holding exactly two pebbles, per part.
    pub part_expectations: Vec<BigRational>,
}

impl OccupancyStats {
    pub fn new(n: u64, t: u64, part_sizes: &[usize]) -> Self {
        let single = exact_double_prob(n, t);
        let pair = if n >= 2 {
            exact_pair_double_prob(n, t)
        } else {
            BigRational::zero()
        };
        let part_expectations = part_sizes
            .iter()
            .map(|&k| &single * BigRational::from_integer((k as u64).into()))
            .collect();
        OccupancyStats {
            n,
            t,
            single,
            pair,
            part_expectations,
        }
    }

    /// Chebyshev bound `4 / E[X_i]` on a part falling below half its mean,
    /// valid when the pair probability is at most the squared single one.
    pub fn chebyshev_bounds(&self) -> Vec<f64> {
        self.part_expectations
            .iter()
            .map(|e| 4.0 / to_f64(e))
            .collect()
    }
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
