use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use wramsey_bench::{dense_graph, pentagon_blowup, tripartite};
use wramsey_core::bounds::{c_of_k, construction_k4};
use wramsey_core::graphs::canonical_key;
use wramsey_core::packing::{r_induced, r_tilde, tau_integral, tau_star};
use wramsey_core::weighted_ramsey::{r_of_coloring, wram};

fn packing(c: &mut Criterion) {
    let g = dense_graph(8);
    c.bench_function("tau_star dense n=8", |b| b.iter(|| tau_star(black_box(&g)).unwrap()));
    c.bench_function("r_induced dense n=8", |b| b.iter(|| r_induced(black_box(&g)).unwrap()));
    c.bench_function("r_tilde dense n=8", |b| b.iter(|| r_tilde(black_box(&g)).unwrap()));
    let t = tripartite(9);
    c.bench_function("tau_integral K_{3,3,3}", |b| b.iter(|| tau_integral(black_box(&t)).unwrap()));
}

fn coloring(c: &mut Criterion) {
    let blow = pentagon_blowup(9);
    c.bench_function("r_of_coloring blow-up n=9 k=4", |b| b.iter(|| r_of_coloring(black_box(&blow), 4).unwrap()));
    c.bench_function("canonical_key blow-up n=9", |b| b.iter(|| canonical_key(black_box(&blow)).unwrap()));
    let mut group = c.benchmark_group("exhaustive");
    group.sample_size(10);
    group.bench_function("wram(6,3)", |b| b.iter(|| wram(6, 3).unwrap()));
    group.finish();
}

fn bounds(c: &mut Criterion) {
    c.bench_function("c_of_k 4..=200", |b| b.iter(|| (4..=200).map(|k| c_of_k(k).unwrap()).collect::<Vec<_>>()));
    c.bench_function("construction_k4 n=12", |b| b.iter(|| construction_k4(black_box(12)).unwrap()));
}

criterion_group!(benches, packing, coloring, bounds);
criterion_main!(benches);
