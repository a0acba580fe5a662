use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use std::hint::black_box;

use sgcolor::classify::{class_ratio, probe_conjecture, ProbeOptions, RatioOptions};
use sgcolor::colorers::color_cactus;
use sgcolor::gen::{generate, generate_class2pm, FamilySpec};
use sgcolor::{Graph, SignedGraph};

fn graphs() -> Vec<(&'static str, Graph)> {
    let complete6 = Graph::new(6, (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j)))).unwrap();
    vec![
        ("k6", complete6),
        ("w9", generate(&FamilySpec::Wheel { vertices: 9 }).unwrap().graph),
        ("class2pm_k1", generate_class2pm(1).unwrap()),
    ]
}

fn class_ratio_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("class_ratio");
    group.sample_size(10);
    for (name, g) in graphs() {
        group.throughput(Throughput::Elements(1 << g.cycle_rank()));
        for parallel in [false, true] {
            let label = if parallel { "parallel" } else { "sequential" };
            let opts = RatioOptions { parallel, ..Default::default() };
            group.bench_with_input(BenchmarkId::new(label, name), &g, |b, g| {
                b.iter(|| class_ratio(black_box(g), opts).unwrap())
            });
        }
    }
    group.finish();
}

fn probe_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("probe_conjecture");
    group.sample_size(10);
    for parallel in [false, true] {
        let label = if parallel { "parallel" } else { "sequential" };
        let opts = ProbeOptions { trials: 200, seed: 1, parallel, ..Default::default() };
        group.bench_function(BenchmarkId::new(label, "r4"), |b| {
            b.iter(|| probe_conjecture(black_box(4), opts).unwrap())
        });
    }
    group.finish();
}

fn cactus_scaling(c: &mut Criterion) {
    let mut group = c.benchmark_group("cactus_triangle_chain");
    for n in [1_000usize, 10_000, 100_000] {
        let g = generate(&FamilySpec::TriangleChain { triangles: n / 2 }).unwrap().graph;
        let sg = SignedGraph::positive(g);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &sg, |b, sg| {
            b.iter(|| color_cactus(black_box(sg)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, class_ratio_sweep, probe_sweep, cactus_scaling);
criterion_main!(benches);
