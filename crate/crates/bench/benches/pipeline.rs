use std::hint::black_box;

use cartan_bench::{finite_instances, instances};
use cartan_core::oracle::enumerate_cartans_bruteforce;
use cartan_core::{cartan_subalgebra, lie_nilpotency_report, presets, radical, radical_complement, unit_group};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn radicals(c: &mut Criterion) {
    let mut group = c.benchmark_group("radical");
    for (name, a) in instances() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &a, |b, a| {
            b.iter(|| radical(black_box(a)))
        });
    }
    group.finish();
    let mut group = c.benchmark_group("radical_complement");
    for (name, a) in instances() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &a, |b, a| {
            b.iter(|| radical_complement(black_box(a)))
        });
    }
    group.finish();
}

fn cartans(c: &mut Criterion) {
    let mut group = c.benchmark_group("cartan_subalgebra");
    for (name, a) in instances() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &a, |b, a| {
            b.iter(|| cartan_subalgebra(black_box(a), 0))
        });
    }
    group.finish();
}

fn units_and_reports(c: &mut Criterion) {
    let mut group = c.benchmark_group("unit_group");
    for (name, a) in finite_instances() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &a, |b, a| {
            b.iter(|| unit_group(black_box(a)))
        });
    }
    group.finish();
    let mut group = c.benchmark_group("lie_nilpotency_report");
    for (name, a) in finite_instances() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &a, |b, a| {
            b.iter(|| lie_nilpotency_report(black_box(a), 0))
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let a = presets::from_preset("upper:2@GF(3)").unwrap();
    c.bench_function("oracle_cartans/upper:2@GF(3)", |b| {
        b.iter(|| enumerate_cartans_bruteforce(black_box(&a)))
    });
}

criterion_group!(benches, radicals, cartans, units_and_reports, oracle);
criterion_main!(benches);
