use std::collections::HashMap;

use pebbling_core::generators::random_connected_min_degree;
use pebbling_core::threshold::{
    estimate_solvability_probability, exact_double_prob, sample_uniform_config, threshold_sweep,
    to_f64, trial_rng, Family, GraphSource, SolverKind, SweepSpec, TSpec, TrialPlan,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

fn all_configurations(n: usize, t: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![t]];
    }
    (0..=t)
        .flat_map(|x| {
            all_configurations(n - 1, t - x)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, x);
                    rest
                })
        })
        .collect()
}

fn chi_square_p(observed: &[u64], expected: &[f64]) -> f64 {
    let stat: f64 = observed
        .iter()
        .zip(expected)
        .map(|(&o, &e)| (o as f64 - e).powi(2) / e)
        .sum();
    ChiSquared::new((observed.len() - 1) as f64)
        .unwrap()
        .sf(stat)
}

#[test]
fn sampler_is_uniform_over_configurations() {
    let support = all_configurations(4, 2);
    assert_eq!(support.len(), 10);
    let draws = 100_000u64;
    let mut rng = ChaCha8Rng::seed_from_u64(366);
    let mut hits: HashMap<Vec<u32>, u64> = HashMap::new();
    for _ in 0..draws {
        *hits
            .entry(sample_uniform_config(4, 2, &mut rng).into_counts())
            .or_default() += 1;
    }
    assert_eq!(hits.len(), 10);
    let observed: Vec<u64> = support.iter().map(|c| hits[c]).collect();
    let expected = vec![draws as f64 / 10.0; 10];
    let p = chi_square_p(&observed, &expected);
    assert!(p > 0.001, "chi-square p = {p}");
}

#[test]
fn sampler_marginals_match_enumeration() {
    for (n, t) in [(3usize, 3u32), (4, 2), (4, 4)] {
        // Exact marginal of vertex 0 by enumeration.
        let support = all_configurations(n, t);
        let mut exact = vec![0f64; t as usize + 1];
        for c in &support {
            exact[c[0] as usize] += 1.0 / support.len() as f64;
        }
        let draws = 50_000u64;
        let mut rng = ChaCha8Rng::seed_from_u64(398 + n as u64 * 10 + u64::from(t));
        let mut observed = vec![0u64; t as usize + 1];
        for _ in 0..draws {
            observed[sample_uniform_config(n, t as usize, &mut rng)[0] as usize] += 1;
        }
        let expected: Vec<f64> = exact.iter().map(|p| p * draws as f64).collect();
        let p = chi_square_p(&observed, &expected);
        assert!(p > 0.001, "(n,t)=({n},{t}) chi-square p = {p}");
    }
}

#[test]
fn double_probability_matches_sampling_at_20_30() {
    let p = to_f64(&exact_double_prob(20, 30));
    let draws = 100_000u64;
    let mut rng = ChaCha8Rng::seed_from_u64(374);
    let hits = (0..draws)
        .filter(|_| sample_uniform_config(20, 30, &mut rng)[0] == 2)
        .count();
    let freq = hits as f64 / draws as f64;
    let sigma = (p * (1.0 - p) / draws as f64).sqrt();
    assert!((freq - p).abs() <= 3.0 * sigma, "freq {freq} vs {p}");
}

#[test]
fn star_estimates_never_exceed_exact_ones() {
    // Same seed means the same configurations, so the one-sided guarantee
    // holds trial by trial, not just within noise.
    for seed in 0..4 {
        let g = random_connected_min_degree(10, 3, seed).unwrap();
        for t in [10, 16, 24] {
            let plan = |solver| TrialPlan {
                source: GraphSource::Explicit {
                    label: "random".into(),
                    graph: g.clone(),
                },
                t,
                trials: 200,
                seed: 17,
                solver,
            };
            let exact = estimate_solvability_probability(&plan(SolverKind::Exact)).unwrap();
            let star = estimate_solvability_probability(&plan(SolverKind::StarSufficient)).unwrap();
            let greedy = estimate_solvability_probability(&plan(SolverKind::GreedyTree)).unwrap();
            assert!(star.successes <= exact.successes);
            assert!(greedy.successes <= exact.successes);
        }
    }
}

#[test]
fn trials_do_not_depend_on_scheduling() {
    // Trial i always sees the configuration drawn from stream (seed, i).
    let a = sample_uniform_config(12, 12, &mut trial_rng(5, 7));
    let b = sample_uniform_config(12, 12, &mut trial_rng(5, 7));
    assert_eq!(a, b);
}

#[test]
fn clique_curve_rises_across_sqrt_scale() {
    let spec = SweepSpec {
        family: Family::Complete,
        sizes: vec![64, 256, 1024],
        t_spec: TSpec::SqrtMultiples(vec![0.25, 0.5, 1.0, 2.0, 4.0, 8.0]),
        trials: 400,
        seed: 389,
        solver: SolverKind::Exact,
    };
    let curve = threshold_sweep(&spec).unwrap();
    assert_eq!(curve.rows.len(), 18);
    for chunk in curve.rows.chunks(6) {
        let est: Vec<f64> = chunk.iter().map(|r| r.estimate).collect();
        for w in est.windows(2) {
            assert!(w[1] + 0.05 >= w[0], "{est:?}");
        }
        assert!(est[0] < 0.1 && est[5] > 0.9, "{est:?}");
        for r in chunk {
            assert!(r.ci_lo <= r.estimate && r.estimate <= r.ci_hi);
            assert!(r.successes <= r.trials);
        }
    }
}

#[test]
fn dense_random_graphs_with_star_solver() {
    let spec = SweepSpec {
        family: Family::RandomMinDegree {
            delta_fraction: 0.5,
        },
        sizes: vec![32, 64],
        t_spec: TSpec::SqrtMultiples(vec![2.0, 4.0, 8.0]),
        trials: 400,
        seed: 394,
        solver: SolverKind::StarSufficient,
    };
    let curve = threshold_sweep(&spec).unwrap();
    for chunk in curve.rows.chunks(3) {
        let est: Vec<f64> = chunk.iter().map(|r| r.estimate).collect();
        assert!(
            est[0] <= est[1] + 0.05 && est[1] <= est[2] + 0.05,
            "{est:?}"
        );
        assert!(est[2] > 0.9, "{est:?}");
    }
}

#[test]
fn repeated_sweeps_write_identical_csv() {
    for family in [Family::Complete, Family::ExtremalGeneral] {
        let spec = SweepSpec {
            family,
            sizes: vec![9, 16],
            t_spec: TSpec::Absolute(vec![4, 9, 20]),
            trials: 1,
            seed: 42,
            solver: SolverKind::Exact,
        };
        let a = threshold_sweep(&spec).unwrap().to_csv();
        let b = threshold_sweep(&spec).unwrap().to_csv();
        assert_eq!(a.as_bytes(), b.as_bytes());
        assert_eq!(a.lines().count(), 7);
    }
}
