use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pebbling_core::extremal::build_general;
use pebbling_core::star_partition::{build_star_partition, star_sufficient_solvable};
use pebbling_core::threshold::{sample_uniform_config, trial_rng};
use std::hint::black_box;

fn sampler(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_uniform_config");
    for &(n, t) in &[(64usize, 16usize), (1024, 64), (4096, 256)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("n={n},t={t}")),
            &(n, t),
            |b, &(n, t)| {
                let mut rng = trial_rng(7, 0);
                b.iter(|| black_box(sample_uniform_config(n, t, &mut rng)))
            },
        );
    }
    group.finish();
}

fn star_partition(c: &mut Criterion) {
    let g = build_general(200).unwrap().graph;
    c.bench_function("build_star_partition G_200", |b| {
        b.iter(|| black_box(build_star_partition(&g).unwrap()))
    });
    let partition = build_star_partition(&g).unwrap();
    let mut rng = trial_rng(11, 0);
    let config = sample_uniform_config(g.n(), 60, &mut rng);
    c.bench_function("star sufficiency G_200 t=60", |b| {
        b.iter(|| black_box(star_sufficient_solvable(&g, &partition, &config).unwrap()))
    });
}

criterion_group!(benches, sampler, star_partition);
criterion_main!(benches);
