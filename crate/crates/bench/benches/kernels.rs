use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use excludant::bijections::MapId;
use excludant::qseries::gf;
use excludant::verify::{certify_bijection, sigma_stat, SigmaStat};
use excludant::{enumerate, PowerSeries};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for n in [20u32, 30, 40] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate(black_box(n)).count())
        });
    }
    group.finish();
    c.bench_function("sigma_mex_r3_n30", |b| {
        b.iter(|| sigma_stat(black_box(30), 3, SigmaStat::MexR))
    });
}

fn series(c: &mut Criterion) {
    let p = gf::gf_partitions(200);
    let d = gf::gf_sigma_mex(200);
    c.bench_function("mul_order200", |b| b.iter(|| black_box(&p) * black_box(&d)));
    let euler = excludant::qseries::poch_inf(1, 1, 200);
    c.bench_function("invert_order200", |b| {
        b.iter(|| black_box(&euler).invert().unwrap())
    });
    let mut group = c.benchmark_group("gf_order60");
    group.bench_function("mexr2_r3", |b| {
        b.iter(|| gf::gf_mexr2_rhs(black_box(3), 60))
    });
    group.bench_function("maxr1_r3", |b| {
        b.iter(|| gf::gf_maxr1_rhs(black_box(3), 60))
    });
    group.bench_function("maxr1_product_r3", |b| {
        b.iter(|| gf::gf_maxr1_rhs_product(black_box(3), 60))
    });
    group.bench_function("przq_r2_20x20", |b| {
        b.iter(|| gf::przq(black_box(2), 20, 20))
    });
    group.finish();
    let _: &PowerSeries = &p;
}

fn certification(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify_n10");
    group.sample_size(10);
    for map in [MapId::Gamma, MapId::Delta] {
        group.bench_function(map.name(), |b| {
            b.iter(|| certify_bijection(map, 2, black_box(10)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, series, certification);
criterion_main!(benches);
