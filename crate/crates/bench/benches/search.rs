use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use guessgraph_bench::{cycle, cycle_square, polynomial_digraph};
use guessgraph_core::digraph::{mas_exact, DEFAULT_MAS_BUDGET};
use guessgraph_core::gf_linear::{linear_guessing_number, DEFAULT_LINEAR_BUDGET};
use guessgraph_core::guessing_graph::{degree_closed_form, DENSE_LIMIT};
use guessgraph_core::solvers::bounds_report;
use guessgraph_core::{guessing_number, information_defect, GuessingGraph, SolveOptions};

fn guessing(c: &mut Criterion) {
    let sq = cycle_square();
    let p7 = polynomial_digraph("x^4+x^2+x+1", 7);
    let opts = SolveOptions::default();
    c.bench_function("materialize C3xC3 s=2", |b| {
        b.iter(|| GuessingGraph::materialize(black_box(&sq), 2, DENSE_LIMIT).unwrap())
    });
    c.bench_function("guessing number C3xC3 s=2", |b| {
        b.iter(|| guessing_number(black_box(&sq), 2, &opts).unwrap())
    });
    c.bench_function("guessing number C5 s=3", |b| {
        b.iter(|| guessing_number(black_box(&cycle(5)), 3, &opts).unwrap())
    });
    c.bench_function("information defect P7 s=2", |b| {
        b.iter(|| information_defect(black_box(&p7), 2, &opts).unwrap())
    });
}

fn structure(c: &mut Criterion) {
    let h14 = polynomial_digraph("x^12+x^11+x^10+x^9+x^6+x+1", 14);
    let sq = cycle_square();
    c.bench_function("mas 14-vertex polynomial digraph", |b| {
        b.iter(|| mas_exact(black_box(&h14), DEFAULT_MAS_BUDGET))
    });
    c.bench_function("linear search C3xC3 p=2", |b| {
        b.iter(|| linear_guessing_number(black_box(&sq), 2, DEFAULT_LINEAR_BUDGET).unwrap())
    });
    c.bench_function("degree closed form 14 vertices", |b| {
        b.iter(|| degree_closed_form(black_box(&h14), 2).unwrap())
    });
    let mut group = c.benchmark_group("bounds");
    group.sample_size(10);
    group.bench_function("bounds report C3xC3 s=2", |b| {
        b.iter(|| bounds_report(black_box(&sq), 2))
    });
    group.finish();
}

criterion_group!(benches, guessing, structure);
criterion_main!(benches);
