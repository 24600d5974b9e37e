use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pebbling::Configuration;

/// Uniform configuration of `t` pebbles on `n` vertices: every one of the
/// `C(t+n-1, t)` count vectors is equally likely.
///
/// Stars and bars: of `t + n - 1` slots, a uniform `t`-subset holds pebbles
/// and the complementary `n - 1` slots are bars. A pebble in slot `s` with
/// `j` pebbles before it has `s - j` bars before it, which is its vertex.
pub fn sample_uniform_config<R: Rng + ?Sized>(n: usize, t: usize, rng: &mut R) -> Configuration {
    assert!(n >= 1, "configurations need at least one vertex");
    let mut counts = vec![0u32; n];
    if n == 1 {
        counts[0] = t as u32;
        return Configuration::new(counts);
    }
    let mut slots = index::sample(rng, t + n - 1, t).into_vec();
    slots.sort_unstable();
    for (j, s) in slots.into_iter().enumerate() {
        counts[s - j] += 1;
    }
    Configuration::new(counts)
}

/// Independent generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}
