use criterion::{black_box, criterion_group, criterion_main, Criterion};

use critloc::genus2::{
    fiber_solve, jacobian_rank_f64, BranchPoint, CurveParams, HFormulaVariant, QuadDiff, SolveOptions,
};
use critloc::kummer::{kummer_mesh, kummer_singular_search, NodeSearchOptions};
use critloc::Rational;

fn solver(c: &mut Criterion) {
    let curve = CurveParams::from_i64(2, 3, 5).unwrap();
    let mut g = c.benchmark_group("fiber_solve");
    g.sample_size(10);
    let regular = QuadDiff {
        a: [-87.75, -271.5, 41.25],
    };
    let opts = SolveOptions {
        seeds: 16,
        ..SolveOptions::default()
    };
    g.bench_function("regular_16_seeds", |b| {
        b.iter(|| fiber_solve(&curve, black_box(&regular), &opts))
    });
    let critical = QuadDiff { a: [0.0, -7.0, 1.0] };
    let opts = SolveOptions {
        seeds: 16,
        critical_at: Some(BranchPoint::Finite(Rational::zero())),
        ..SolveOptions::default()
    };
    g.bench_function("critical_16_seeds", |b| {
        b.iter(|| fiber_solve(&curve, black_box(&critical), &opts))
    });
    g.finish();
}

fn float_rank(c: &mut Criterion) {
    let curve = CurveParams::from_i64(2, 3, 5).unwrap();
    let x = [0.5, 2.0, -3.0, 1.0, 0.25, -1.0];
    c.bench_function("jacobian_rank_f64", |b| {
        b.iter(|| jacobian_rank_f64(&curve, black_box(&x), HFormulaVariant::CANONICAL, 1e-8).unwrap())
    });
}

fn kummer(c: &mut Criterion) {
    let curve = CurveParams::from_i64(2, 3, 5).unwrap();
    let mut g = c.benchmark_group("kummer");
    g.sample_size(10);
    let opts = NodeSearchOptions {
        seeds: 100,
        ..NodeSearchOptions::default()
    };
    g.bench_function("node_search_100_seeds", |b| {
        b.iter(|| kummer_singular_search(&curve, black_box(&opts)).unwrap())
    });
    g.bench_function("mesh_81x81", |b| {
        b.iter(|| kummer_mesh(&curve, black_box(0.5), -2.0, 2.0, 0.05).unwrap())
    });
    g.finish();
}

criterion_group!(benches, solver, float_rank, kummer);
criterion_main!(benches);
