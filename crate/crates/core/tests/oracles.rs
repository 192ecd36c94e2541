//! Independent closed-form and quadrature oracles for the solver stack.

use std::f64::consts::PI;
use std::sync::Arc;

use conekahler_core::connection::{disk_flux, flux, loop_integral, HorizontalCircle};
use conekahler_core::dirichlet::{harmonicity_check, lebedev_poisson};
use conekahler_core::hyperbolic::{
    ball_to_half_isometric, exterior_derivative_one, hyp_distance, laplacian_h_with_step,
};
use conekahler_core::potential::{green, green_gradient};
use conekahler_core::quadrature::gauss_legendre_on;
use conekahler_core::verify::fixtures::{HyperbolicFour, HyperbolicProduct, SphereProduct};
use conekahler_core::verify::{sample_grid, scalar_curvature_numeric, Box3};
use conekahler_core::{
    BallPoint, ChargeConfig, ConeAngleSpec, ConeMetric, Connection, GaugeDescriptor, HPoint, HarmonicExtension,
    MetricField, OneForm3, Potential, QuadratureSettings, ScalarField,
};

const K: f64 = ChargeConfig::DEFAULT_KAPPA;

fn pt(z: f64, x2: f64, x3: f64) -> HPoint {
    HPoint::new(z, x2, x3).unwrap()
}

fn varying() -> Arc<ConeAngleSpec> {
    Arc::new(ConeAngleSpec::expression("1 + 0.5*x2*exp((1 - x2^2 - x3^2)/2)", 1.0).unwrap())
}

fn extension(spec: Arc<ConeAngleSpec>) -> Arc<HarmonicExtension> {
    Arc::new(HarmonicExtension::new(spec, QuadratureSettings::default()).unwrap())
}

/// Length of the hyperbolic geodesic between two points, integrated along
/// the Euclidean semicircle orthogonal to the boundary that joins them.
fn semicircle_length(p: HPoint, q: HPoint) -> f64 {
    // in-plane coordinate s from p's foot toward q's; circle centre c on the boundary
    let l = (q.x2 - p.x2).hypot(q.x3 - p.x3);
    let c = (q.z * q.z - p.z * p.z + l * l) / (2.0 * l);
    let (t1, t2) = (p.z.atan2(-c), q.z.atan2(l - c));
    // on the circle of radius R, ds_h = R dt / (R sin t)
    gauss_legendre_on(64, t1.min(t2), t1.max(t2))
        .into_iter()
        .map(|(t, w)| w / t.sin())
        .sum()
}

#[test]
fn distance_matches_geodesic_arc_length() {
    for (p, q) in [
        (pt(0.5, 0.0, 0.0), pt(2.0, 1.0, -0.5)),
        (pt(0.05, -1.0, 0.3), pt(0.07, 2.0, 1.0)),
        (pt(3.0, 0.2, 0.2), pt(1.0, 0.25, 0.1)),
    ] {
        let d = hyp_distance(p, q);
        let arc = semicircle_length(p, q);
        assert!((d - arc).abs() < 1e-9 * d.max(1.0), "{p} {q}: {d} vs {arc}");
    }
    // vertical geodesic
    assert!((hyp_distance(pt(0.3, 1.0, 1.0), pt(2.7, 1.0, 1.0)) - 9f64.ln()).abs() < 1e-14);
}

#[test]
fn green_is_harmonic_with_unit_flux_per_kappa() {
    let q = pt(1.0, 0.3, -0.2);
    let g = conekahler_core::hyperbolic::FnField(move |p: HPoint| green(p, q, K).unwrap());
    for p in [pt(0.4, 0.0, 0.0), pt(2.0, 1.0, 1.0), pt(1.0, -0.7, 0.4)] {
        let coarse = laplacian_h_with_step(&g, p, 2e-2 * p.z).unwrap();
        let fine = laplacian_h_with_step(&g, p, 1e-2 * p.z).unwrap();
        let order = (coarse / fine).abs().log2();
        let tight = laplacian_h_with_step(&g, p, 2e-3 * p.z).unwrap();
        assert!(tight.abs() < 1e-5, "{p}: {tight}");
        assert!((1.5..=2.5).contains(&order), "{p}: order {order}");
        let fd = g.gradient(p).unwrap();
        let exact = green_gradient(p, q, K).unwrap();
        for i in 0..3 {
            assert!((fd[i] - exact[i]).abs() < 1e-6, "{p}: {fd:?} vs {exact:?}");
        }
    }
    // Euclidean flux of ∇G / z through a chart sphere around q, by a
    // Gauss-Legendre × trapezoid product rule.
    let (r0, nt, np) = (0.4, 48, 96);
    let mut total = 0.0;
    for (u, wu) in gauss_legendre_on(nt, -1.0, 1.0) {
        let st = (1.0 - u * u).sqrt();
        for j in 0..np {
            let ph = 2.0 * PI * j as f64 / np as f64;
            let n = [u, st * ph.cos(), st * ph.sin()];
            let p = pt(q.z + r0 * n[0], q.x2 + r0 * n[1], q.x3 + r0 * n[2]);
            let gr = green_gradient(p, q, K).unwrap();
            let dot = gr[0] * n[0] + gr[1] * n[1] + gr[2] * n[2];
            total += wu * (2.0 * PI / np as f64) * r0 * r0 * dot / p.z;
        }
    }
    assert!((total.abs() - K).abs() < 1e-8, "product-rule flux {total}");
    let potential = Potential::new(extension(Arc::new(ConeAngleSpec::constant(1.0).unwrap())), ChargeConfig::new(vec![q], K).unwrap());
    let leb = flux(&potential, q, r0, 59, 1e-8).unwrap();
    assert!((leb.enclosed_flux - total.abs()).abs() < 1e-8);
}

#[test]
fn poisson_reproduces_constants() {
    for c in [0.5, 1.0, 1.7] {
        let spec = ConeAngleSpec::constant(c).unwrap();
        for y in [[0.0, 0.0, 0.0], [0.3, -0.5, 0.2], [0.0, 0.4, 0.0]] {
            let v = lebedev_poisson(&spec, BallPoint::new(y[0], y[1], y[2]).unwrap(), 131).unwrap();
            assert!((v - 1.0 / c).abs() < 1e-10, "{c} {y:?}: {v}");
        }
        // the general sweep, not the constant shortcut
        let e = Arc::new(ConeAngleSpec::expression(&format!("{c} + 0*x2"), c).unwrap());
        let ext = extension(e);
        for p in [pt(1e-3, 0.0, 0.0), pt(0.4, 2.0, -1.0), pt(25.0, 3.0, 3.0)] {
            assert!((ext.solve(p).unwrap() - 1.0 / c).abs() < 1e-10);
        }
    }
}

#[test]
fn centre_value_is_the_sphere_mean() {
    let spec = varying();
    let ext = extension(Arc::clone(&spec));
    let centre = ball_to_half_isometric(BallPoint::new(0.0, 0.0, 0.0).unwrap());
    let (nt, np) = (400, 800);
    let mut mean = 0.0;
    for (u, wu) in gauss_legendre_on(nt, -1.0, 1.0) {
        let st = (1.0 - u * u).sqrt();
        for j in 0..np {
            let ph = 2.0 * PI * (j as f64 + 0.5) / np as f64;
            mean += wu / (2.0 * np as f64) * spec.inv_beta_on_sphere([u, st * ph.cos(), st * ph.sin()]);
        }
    }
    let v = ext.solve(centre).unwrap();
    assert!((v - mean).abs() < 1e-8, "{v} vs {mean}");
}

#[test]
fn harmonic_extension_residual_is_second_order() {
    let ext = extension(varying());
    let pts = [pt(0.3, 1.0, 0.0), pt(0.6, -1.0, 0.5), pt(1.5, 0.2, -0.4)];
    let r = harmonicity_check(&*ext, &pts, 0.04).unwrap();
    let order = r.order.expect("residual above round-off");
    assert!((1.5..=2.5).contains(&order), "order {order}");
}

#[test]
fn stokes_loop_equals_disk_flux() {
    let ext = extension(varying());
    let v = Arc::new(Potential::new(ext, ChargeConfig::new(vec![pt(1.0, 0.0, 0.0)], K).unwrap()));
    let circles = [
        HorizontalCircle { z: 0.6, axis: (1.0, 0.5), radius: 0.3 },
        HorizontalCircle { z: 2.0, axis: (-0.5, 0.0), radius: 0.8 },
    ];
    let fluxes: Vec<f64> = circles.iter().map(|&c| disk_flux(&v, c, 32, 64).unwrap()).collect();
    for gauge in [GaugeDescriptor::default(), GaugeDescriptor::homotopy_above((0.5, 0.5))] {
        let conn = Connection::new(Arc::clone(&v), gauge).unwrap();
        for (&circle, &rhs) in circles.iter().zip(&fluxes) {
            let lhs = loop_integral(&conn, circle, 256).unwrap();
            assert!((lhs - rhs).abs() < 1e-4, "{circle:?}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn gauges_differ_by_a_closed_form() {
    let ext = extension(varying());
    let v = Arc::new(Potential::new(ext, ChargeConfig::new(vec![pt(1.0, 0.0, 0.0)], K).unwrap()));
    let a = Connection::new(Arc::clone(&v), GaugeDescriptor::default()).unwrap();
    let b = Connection::new(Arc::clone(&v), GaugeDescriptor::homotopy_above((0.3, -0.2))).unwrap();
    let diff = |p: HPoint| -> conekahler_core::Result<OneForm3> {
        let (x, y) = (a.a(p)?, b.a(p)?);
        Ok(OneForm3([x.0[0] - y.0[0], x.0[1] - y.0[1], x.0[2] - y.0[2]]))
    };
    for p in [pt(0.8, 0.6, 0.2), pt(1.6, -0.5, 0.4)] {
        let scale = a.curvature(p).unwrap().euclidean_norm();
        let coarse = exterior_derivative_one(diff, p, 0.04 * p.z).unwrap().euclidean_norm();
        let fine = exterior_derivative_one(diff, p, 0.02 * p.z).unwrap().euclidean_norm();
        assert!(fine < 1e-3 * scale.max(1.0), "{p}: {fine}");
        let order = (coarse / fine).log2();
        assert!((1.5..=2.5).contains(&order), "{p}: order {order}");
    }
}

fn refine<M: MetricField>(m: &M, b: &Box3, reference: f64) -> (f64, f64) {
    let coarse = sample_grid(m, b, 0.04).unwrap();
    let fine = sample_grid(m, b, 0.02).unwrap();
    let ec = scalar_curvature_numeric(&coarse, |_| reference).unwrap().max_abs;
    let ef = scalar_curvature_numeric(&fine, |_| reference).unwrap().max_abs;
    (ef, (ec / ef).log2())
}

#[test]
fn curvature_pipeline_reproduces_fixtures() {
    let b = |z: f64| Box3 { z: [z, z + 0.08], x2: [0.0, 0.08], x3: [0.0, 0.08] };
    let flat = sample_grid(&ConeMetric::flat(), &b(0.5), 0.02).unwrap();
    assert!(scalar_curvature_numeric(&flat, |_| 0.0).unwrap().max_abs < 1e-9);
    let sphere = SphereProduct { radius: 1.3 };
    for (name, (err, order)) in [
        ("sphere", refine(&sphere, &b(0.8), sphere.scalar_curvature())),
        ("H2 x R2", refine(&HyperbolicProduct, &b(1.0), -2.0)),
        ("H4", refine(&HyperbolicFour, &b(1.0), -12.0)),
    ] {
        assert!((1.5..=2.5).contains(&order), "{name}: refinement order {order}, error {err}");
    }
}
