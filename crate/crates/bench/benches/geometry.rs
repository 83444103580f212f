use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use geomlab_core::fields::{harmonic_map_classification, parallel_null_line_fields};
use geomlab_core::model::builtin;
use geomlab_core::soliton::{algebraic_ricci_soliton_solve, einstein_solve, invariant_ricci_soliton_solve};
use geomlab_core::MetricLieAlgebra;

fn geometry(c: &mut Criterion) {
    for name in ["oscillator", "heisenberg3", "su2xR"] {
        let m = builtin(name).unwrap().geometry;
        let fresh = |_: &str| MetricLieAlgebra::new(m.algebra().clone(), m.metric().clone()).unwrap();
        c.bench_function(&format!("levi_civita/{name}"), |b| {
            b.iter(|| fresh(black_box(name)).levi_civita().lambdas.len())
        });
        c.bench_function(&format!("curvature+ricci/{name}"), |b| {
            b.iter(|| fresh(black_box(name)).ricci().scalar.clone())
        });
        c.bench_function(&format!("ledger/{name}"), |b| b.iter(|| fresh(black_box(name)).ledger_conditions().l5));
    }
}

fn solvers(c: &mut Criterion) {
    let m = builtin("oscillator").unwrap().geometry;
    c.bench_function("einstein/oscillator", |b| b.iter(|| einstein_solve(black_box(&m)).feasible));
    c.bench_function("invariant_soliton/oscillator", |b| {
        b.iter(|| invariant_ricci_soliton_solve(black_box(&m)).feasible)
    });
    c.bench_function("algebraic_soliton/oscillator", |b| {
        b.iter(|| algebraic_ricci_soliton_solve(black_box(&m)).feasible)
    });
    c.bench_function("walker/oscillator", |b| b.iter(|| parallel_null_line_fields(black_box(&m)).lines.len()));
    c.bench_function("harmonic/oscillator", |b| {
        b.iter(|| harmonic_map_classification(black_box(&m)).quadratic_obstruction_vanishes)
    });
}

criterion_group!(benches, geometry, solvers);
criterion_main!(benches);
