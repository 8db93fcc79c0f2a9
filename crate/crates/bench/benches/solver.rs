use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use badedge::graph::{complete, cycle, helm, wheel};
use badedge::random::connected_graphs;
use badedge::solver::{enumerate_oracle, solve_bk};
use badedge::{chromatic_number, Graph, RuleMode, SolverConfig};

fn instances() -> Vec<(String, Graph, usize)> {
    vec![
        ("cycle:11".into(), cycle(11).unwrap(), 2),
        ("wheel:7".into(), wheel(7).unwrap().0, 3),
        ("helm:5".into(), helm(5).unwrap().0, 3),
        ("complete:7".into(), complete(7).unwrap(), 4),
    ]
}

fn exact_solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("b_k");
    for (name, g, k) in instances() {
        group.bench_with_input(BenchmarkId::new("oracle", &name), &g, |b, g| {
            b.iter(|| enumerate_oracle(black_box(g), k, RuleMode::OneClass, true).unwrap())
        });
        for workers in [1, 4] {
            let cfg = SolverConfig::counting().with_workers(workers);
            group.bench_with_input(BenchmarkId::new(format!("bnb-count-w{workers}"), &name), &g, |b, g| {
                b.iter(|| solve_bk(black_box(g), k, RuleMode::OneClass, true, &cfg).unwrap())
            });
        }
        group.bench_with_input(BenchmarkId::new("bnb-value", &name), &g, |b, g| {
            b.iter(|| solve_bk(black_box(g), k, RuleMode::OneClass, true, &SolverConfig::default()).unwrap())
        });
    }
    group.finish();
}

fn larger_instances(c: &mut Criterion) {
    let mut group = c.benchmark_group("bnb-large");
    group.sample_size(10);
    for (i, g) in connected_graphs(99, 3, 18, 22).into_iter().enumerate() {
        group.bench_with_input(BenchmarkId::new("random", format!("#{i} n={} m={}", g.n(), g.m())), &g, |b, g| {
            b.iter(|| solve_bk(black_box(g), 3, RuleMode::Unrestricted, true, &SolverConfig::default()).unwrap())
        });
    }
    group.finish();
}

fn chromatic(c: &mut Criterion) {
    let graphs = connected_graphs(7, 8, 12, 16);
    c.bench_function("chromatic_number/random 12-16", |b| {
        b.iter(|| graphs.iter().map(|g| chromatic_number(black_box(g)).unwrap()).sum::<usize>())
    });
}

criterion_group!(benches, exact_solvers, larger_instances, chromatic);
criterion_main!(benches);
