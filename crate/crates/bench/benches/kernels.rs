use std::hint::black_box;
use std::sync::Arc;

use conekahler_core::potential::green;
use conekahler_core::verify::{sample_grid, scalar_curvature_numeric, Box3};
use conekahler_core::{
    ChargeConfig, ConeAngleSpec, Connection, GaugeDescriptor, HPoint, HarmonicExtension, LeBrunMetric, MetricField,
    Potential, QuadratureSettings,
};
use criterion::{criterion_group, criterion_main, Criterion};

fn varying() -> Arc<HarmonicExtension> {
    let spec = Arc::new(ConeAngleSpec::expression("1 + 0.5*x2*exp((1 - x2^2 - x3^2)/2)", 1.0).unwrap());
    Arc::new(HarmonicExtension::new(spec, QuadratureSettings::default()).unwrap())
}

fn sweep(c: &mut Criterion) {
    let ext = varying();
    let mut g = c.benchmark_group("poisson_sweep");
    for (label, p) in [
        ("near_boundary", HPoint::new(0.01, 0.3, -0.2).unwrap()),
        ("interior", HPoint::new(1.0, 0.3, -0.2).unwrap()),
        ("far", HPoint::new(30.0, 5.0, 2.0).unwrap()),
    ] {
        g.bench_function(label, |b| b.iter(|| ext.sweep(black_box(p))));
    }
    g.finish();
}

fn green_kernel(c: &mut Criterion) {
    let q = HPoint::new(1.0, 0.0, 0.0).unwrap();
    let p = HPoint::new(0.4, 0.7, -0.3).unwrap();
    c.bench_function("green", |b| {
        b.iter(|| green(black_box(p), black_box(q), ChargeConfig::DEFAULT_KAPPA))
    });
}

fn metric_sample(c: &mut Criterion) {
    let v = Arc::new(Potential::new(
        varying(),
        ChargeConfig::new(vec![HPoint::new(1.0, 0.0, 0.0).unwrap()], ChargeConfig::DEFAULT_KAPPA).unwrap(),
    ));
    let m = LeBrunMetric::new(Arc::new(Connection::new(v, GaugeDescriptor::default()).unwrap()));
    let p = HPoint::new(1.5, 1.3, 0.2).unwrap();
    c.bench_function("metric_tensor", |b| b.iter(|| m.tensors(black_box(p))));
}

fn curvature(c: &mut Criterion) {
    // an analytically flat field isolates the finite-difference pipeline cost
    let grid = sample_grid(
        &conekahler_core::ConeMetric { angle: 0.7 },
        &Box3 { z: [0.8, 0.96], x2: [0.0, 0.16], x3: [0.0, 0.16] },
        0.02,
    )
    .unwrap();
    let mut g = c.benchmark_group("curvature");
    g.sample_size(10);
    g.bench_function("scalar_9x9x9", |b| b.iter(|| scalar_curvature_numeric(black_box(&grid), |_| 0.0)));
    g.finish();
}

criterion_group!(benches, sweep, green_kernel, metric_sample, curvature);
criterion_main!(benches);
