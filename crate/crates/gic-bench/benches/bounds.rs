use criterion::{black_box, criterion_group, criterion_main, Criterion};
use gic_bench::reference_channel;
use gic_core::*;

fn closed_forms(c: &mut Criterion) {
    let params = reference_channel();
    let mut group = c.benchmark_group("closed_form");
    group.bench_function("etw_sum_upper", |b| {
        b.iter(|| etw_sum_upper(black_box(&params)).unwrap().value)
    });
    group.bench_function("kramer_sum_upper", |b| {
        b.iter(|| {
            kramer_sum_upper(black_box(100.0), black_box(0.5))
                .unwrap()
                .value
        })
    });
    group.bench_function("weak_corner_bounds", |b| {
        b.iter(|| weak_corner_bounds(black_box(&params)).unwrap())
    });
    group.bench_function("delta_upper_simple", |b| {
        b.iter(|| {
            delta_upper_simple(black_box(100.0), black_box(0.5))
                .unwrap()
                .value
        })
    });
    group.finish();
}

fn regions(c: &mut Criterion) {
    let params = reference_channel();
    let region = etw_region(&params).unwrap();
    let point = RatePair { r1: 3.0, r2: 0.3 };
    let mut group = c.benchmark_group("regions");
    group.bench_function("etw_region_build", |b| {
        b.iter(|| etw_region(black_box(&params)).unwrap())
    });
    group.bench_function("membership", |b| {
        b.iter(|| region.contains(black_box(point), DEFAULT_MEMBERSHIP_TOL))
    });
    group.bench_function("boundary_polyline", |b| b.iter(|| region.boundary()));
    group.bench_function("kramer_boundary_sweep", |b| {
        b.iter(|| kramer_boundary(black_box(&params)).unwrap().len())
    });
    group.finish();
}

fn optimizers(c: &mut Criterion) {
    let mut group = c.benchmark_group("optimizers");
    group.sample_size(10);
    let coarse = GridSpec::new(21, 1);
    group.bench_function("hk_sum_lower_coarse_21x1", |b| {
        b.iter(|| {
            hk_sum_lower_optimized(black_box(100.0), black_box(0.5), Some(&coarse))
                .unwrap()
                .value
        })
    });
    group.bench_function("hk_sum_lower_default", |b| {
        b.iter(|| {
            hk_sum_lower_optimized(black_box(100.0), black_box(0.5), None)
                .unwrap()
                .value
        })
    });
    group.bench_function("etkin_sum_upper_default", |b| {
        b.iter(|| {
            etkin_sum_upper(black_box(100.0), black_box(0.5), None)
                .unwrap()
                .value
        })
    });
    group.bench_function("delta_upper_improved_default", |b| {
        b.iter(|| {
            delta_upper_improved(black_box(500.0), black_box(0.045), None)
                .unwrap()
                .value
        })
    });
    group.finish();
}

criterion_group!(benches, closed_forms, regions, optimizers);
criterion_main!(benches);
