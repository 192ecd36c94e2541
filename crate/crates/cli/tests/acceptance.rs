//! Acceptance criteria 1-7, run one after another so the reported runtimes
//! are not inflated by concurrent tests. Prints one line per criterion.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::{Duration, Instant};

use conekahler_cli::commands::{self, RunOptions};
use conekahler_cli::report::CheckResult;
use conekahler_cli::{RunReport, Status};
use conekahler_core::connection::{check_decay_da, default_rays, disk_flux, loop_integral, HorizontalCircle};
use conekahler_core::dirichlet::lebedev_poisson;
use conekahler_core::hyperbolic::ball_to_half_isometric;
use conekahler_core::quadrature::gauss_legendre_on;
use conekahler_core::verify::fixtures::{HyperbolicFour, HyperbolicProduct, SphereProduct};
use conekahler_core::verify::{sample_grid, scalar_curvature_numeric, Box3};
use conekahler_core::{
    BallPoint, ChargeConfig, ConeAngleSpec, ConeMetric, Connection, GaugeDescriptor, HPoint, HarmonicExtension,
    MetricField, Potential, QuadratureSettings,
};

const KAPPA: f64 = ChargeConfig::DEFAULT_KAPPA;
const WINDOW: std::ops::RangeInclusive<f64> = 1.5..=2.5;
const VARYING: &str = "1 + 0.5*x2*exp((1 - x2^2 - x3^2)/2)";

/// Collects failed requirements for one criterion.
#[derive(Default)]
struct Log(Vec<String>);

impl Log {
    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.0.push(what.into());
        }
    }
}

fn scenario(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scenarios").join(format!("{name}.toml"))
}

fn verify(name: &str, out: &Path) -> RunReport {
    commands::verify(&RunOptions::new(scenario(name), out.join(name))).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn val(c: &CheckResult, k: &str) -> f64 {
    c.measured.get(k).copied().flatten().unwrap_or(f64::NAN)
}

fn ord(c: &CheckResult, k: &str) -> Option<f64> {
    c.orders.get(k).copied().flatten()
}

fn all<'a>(r: &'a RunReport, name: &str) -> Vec<&'a CheckResult> {
    r.check(name).collect()
}

fn one<'a>(r: &'a RunReport, name: &str) -> &'a CheckResult {
    r.check(name).next().unwrap_or_else(|| panic!("{} has no {name} check", r.scenario))
}

fn no_failures(r: &RunReport, log: &mut Log) {
    for c in &r.checks {
        log.require(
            matches!(c.status, Status::Pass | Status::Skipped),
            format!("{}{:?}: {:?} {}", c.name, c.target, c.status, c.message),
        );
    }
}

fn curvature_max(r: &RunReport, log: &mut Log, bound: f64, need_order: bool) {
    let grids = all(r, "scalar_curvature");
    log.require(!grids.is_empty(), "no curvature grids");
    for c in grids {
        let s = val(c, "max_abs");
        log.require(val(c, "spacing") == 0.02, "grid spacing is not 0.02");
        log.require(s < bound, format!("max|s| = {s:.3e} on {:?}", c.target));
        if need_order {
            let o = ord(c, "max_abs");
            log.require(o.is_some_and(|o| WINDOW.contains(&o)), format!("curvature order {o:?}"));
        }
    }
}

fn criterion_1(out: &Path, log: &mut Log) {
    let r = verify("flat", out);
    no_failures(&r, log);
    curvature_max(&r, log, 1e-9, false);
    for c in all(&r, "kahler") {
        log.require(val(c, "max_residual") < 1e-10, format!("dω = {:.3e}", val(c, "max_residual")));
    }
    let probes = all(&r, "cone_angle");
    log.require(!probes.is_empty(), "no cone probes");
    for c in probes {
        log.require((val(c, "angle") - 1.0).abs() <= 1e-3, format!("cone angle {}", val(c, "angle")));
    }
    let g = one(&r, "geodesics");
    log.require(val(g, "random_shots") == 50.0, "expected 50 shots");
    log.require(val(g, "random_completed") == 50.0, format!("{} of 50 shots completed", val(g, "random_completed")));
    log.require(val(g, "length") == 100.0, "shot length is not 100");
    log.require(val(g, "max_drift") < 1e-10, format!("energy drift {:.3e}", val(g, "max_drift")));
}

fn criterion_2(out: &Path, log: &mut Log) {
    let r = verify("cone07", out);
    no_failures(&r, log);
    curvature_max(&r, log, 1e-9, false);
    for c in all(&r, "cone_angle") {
        log.require((val(c, "angle") - 0.7).abs() <= 1e-3, format!("cone angle {}", val(c, "angle")));
    }
    let q = one(&r, "quasi_isometry");
    let c = val(q, "constant");
    log.require(c.is_finite(), "quasi-isometry constant not finite");
    log.require(val(q, "change") <= 1e-6, format!("constant changed by {:.3e}", val(q, "change")));
}

fn criterion_3(out: &Path, log: &mut Log) {
    let spec = ConeAngleSpec::expression(VARYING, 1.0).unwrap();
    let (lo, hi) = (spec.beta_at(-1.0, 0.0), spec.beta_at(1.0, 0.0));
    log.require((lo - 0.5).abs() < 1e-12 && (hi - 1.5).abs() < 1e-12, "β does not span [0.5, 1.5]");
    let r = verify("varying", out);
    no_failures(&r, log);
    let h = one(&r, "harmonicity");
    let o = ord(h, "residual");
    log.require(o.is_some_and(|o| WINDOW.contains(&o)), format!("harmonicity order {o:?}"));
    let b = one(&r, "barrier");
    log.require(val(b, "samples") == 1000.0, "barrier not checked at 10³ samples");
    log.require(val(b, "min_margin") > 0.0, format!("barrier margin {}", val(b, "min_margin")));
    let probes: Vec<_> = all(&r, "cone_angle").into_iter().filter(|c| c.status != Status::Skipped).collect();
    log.require(probes.len() >= 2, "fewer than two cone probes");
    for c in probes {
        let (a, beta) = (val(c, "angle"), val(c, "beta"));
        log.require((a - beta).abs() <= 1e-2, format!("cone angle {a} vs β {beta}"));
    }
    curvature_max(&r, log, 1e-3, true);
}

fn charged_checks(r: &RunReport, log: &mut Log) {
    no_failures(r, log);
    let ci = one(r, "curvature_identity");
    let o = ord(ci, "residual");
    log.require(o.is_some_and(|o| WINDOW.contains(&o)), format!("dA = F order {o:?}"));
    curvature_max(r, log, 1e-3, true);
    let g = one(r, "green_decay");
    let (a, b) = (val(g, "min_exponent"), val(g, "max_exponent"));
    log.require((a - 2.0).abs() <= 0.1 && (b - 2.0).abs() <= 0.1, format!("decay exponents [{a}, {b}]"));
    let measured = all(r, "cone_angle").into_iter().filter(|c| c.status == Status::Pass).count();
    log.require(measured >= 1, "no measured cone probe");
    log.require(all(r, "kahler").iter().all(|c| c.passed), "Kähler check failed");
}

fn flux_with(r: &RunReport, inside: f64) -> Vec<f64> {
    all(r, "flux")
        .into_iter()
        .filter(|c| val(c, "charges_inside") == inside)
        .map(|c| val(c, "enclosed_flux"))
        .collect()
}

fn criterion_4(out: &Path, log: &mut Log) {
    let r = verify("one_charge", out);
    charged_checks(&r, log);
    let f = flux_with(&r, 1.0);
    log.require(!f.is_empty(), "no sphere around the charge");
    for x in f {
        log.require((x - KAPPA).abs() <= 1e-3 * KAPPA, format!("flux {x}"));
    }
}

fn criterion_5(out: &Path, log: &mut Log) {
    let r = verify("two_charges", out);
    charged_checks(&r, log);
    let pts = conekahler_cli::Scenario::load(&scenario("two_charges")).unwrap().charge_config().unwrap();
    log.require(pts.len() == 2 && pts.points()[0].horizontal_distance(pts.points()[1]) > 0.0, "charges share a vertical line");
    let f = flux_with(&r, 2.0);
    log.require(!f.is_empty(), "no sphere enclosing both charges");
    for x in f {
        log.require((x - 2.0 * KAPPA).abs() <= 1e-3 * KAPPA, format!("flux {x}"));
    }
    log.require(flux_with(&r, 1.0).iter().all(|x| (x - KAPPA).abs() <= 1e-3 * KAPPA), "single-charge flux");
}

fn refinement<M: MetricField>(m: &M, b: &Box3, reference: f64) -> f64 {
    let e = |h| {
        scalar_curvature_numeric(&sample_grid(m, b, h).unwrap(), |_| reference)
            .unwrap()
            .max_abs
    };
    (e(0.04) / e(0.02)).log2()
}

fn criterion_6(_: &Path, log: &mut Log) {
    let b = |z: f64| Box3 { z: [z, z + 0.08], x2: [0.0, 0.08], x3: [0.0, 0.08] };
    let flat = scalar_curvature_numeric(&sample_grid(&ConeMetric::flat(), &b(0.5), 0.02).unwrap(), |_| 0.0).unwrap();
    log.require(flat.max_abs < 1e-9, format!("flat fixture {:.3e}", flat.max_abs));
    let sphere = SphereProduct { radius: 1.3 };
    for (name, o) in [
        ("sphere", refinement(&sphere, &b(0.8), sphere.scalar_curvature())),
        ("hyperbolic plane slice", refinement(&HyperbolicProduct, &b(1.0), -2.0)),
        ("hyperbolic four-space", refinement(&HyperbolicFour, &b(1.0), -12.0)),
    ] {
        log.require(WINDOW.contains(&o), format!("{name} refinement order {o}"));
    }

    for c in [0.5, 1.0, 1.7] {
        let spec = ConeAngleSpec::constant(c).unwrap();
        let y = BallPoint::new(0.2, -0.3, 0.1).unwrap();
        let v = lebedev_poisson(&spec, y, 131).unwrap();
        log.require((v - 1.0 / c).abs() < 1e-10, format!("Lebedev constant {c}: {v}"));
        let ext = HarmonicExtension::new(
            Arc::new(ConeAngleSpec::expression(&format!("{c} + 0*x2"), c).unwrap()),
            QuadratureSettings::default(),
        )
        .unwrap();
        for p in [HPoint::new(1e-3, 0.0, 0.0).unwrap(), HPoint::new(0.4, 2.0, -1.0).unwrap()] {
            let u = ext.solve(p).unwrap();
            log.require((u - 1.0 / c).abs() < 1e-10, format!("sweep constant {c} at {p}: {u}"));
        }
    }

    let spec = Arc::new(ConeAngleSpec::expression(VARYING, 1.0).unwrap());
    let ext = Arc::new(HarmonicExtension::new(Arc::clone(&spec), QuadratureSettings::default()).unwrap());
    let (nt, np) = (300, 600);
    let mut mean = 0.0;
    for (u, wu) in gauss_legendre_on(nt, -1.0, 1.0) {
        let st = (1.0 - u * u).sqrt();
        for j in 0..np {
            let ph = 2.0 * PI * (j as f64 + 0.5) / np as f64;
            mean += wu / (2.0 * np as f64) * spec.inv_beta_on_sphere([u, st * ph.cos(), st * ph.sin()]);
        }
    }
    let centre = ext.solve(ball_to_half_isometric(BallPoint::new(0.0, 0.0, 0.0).unwrap())).unwrap();
    log.require((centre - mean).abs() < 1e-8, format!("centre value {centre} vs sphere mean {mean}"));

    let v = Arc::new(Potential::new(
        ext,
        ChargeConfig::new(vec![HPoint::new(1.0, 0.0, 0.0).unwrap()], KAPPA).unwrap(),
    ));
    let conn = Connection::new(Arc::clone(&v), GaugeDescriptor::default()).unwrap();
    let circle = HorizontalCircle { z: 0.6, axis: (1.0, 0.5), radius: 0.3 };
    let lhs = loop_integral(&conn, circle, 256).unwrap();
    let rhs = disk_flux(&v, circle, 32, 64).unwrap();
    log.require((lhs - rhs).abs() < 1e-4, format!("Stokes: loop {lhs} vs disk {rhs}"));
}

fn criterion_7(_: &Path, log: &mut Log) {
    let spec = Arc::new(ConeAngleSpec::expression(VARYING, 1.0).unwrap());
    let ext = HarmonicExtension::new(spec, QuadratureSettings::default()).unwrap();
    let r = check_decay_da(&ext, &default_rays(), 16);
    log.require(r.constant.is_finite() && r.constant > 0.0, format!("decay constant {}", r.constant));
    log.require(r.relative_change <= 0.2, format!("constant moved {:.1}% under doubling", 100.0 * r.relative_change));
    log.require(r.vertical_decay, "no decay along vertical rays");
}

#[test]
fn acceptance() {
    type Criterion = fn(&Path, &mut Log);
    let criteria: [(u32, &str, Criterion, u64); 7] = [
        (1, "flat reduction", criterion_1, 60),
        (2, "constant cone 0.7", criterion_2, 60),
        (3, "varying angle, no blow-up", criterion_3, 600),
        (4, "one blow-up point", criterion_4, 600),
        (5, "two blow-up points", criterion_5, 900),
        (6, "oracle battery", criterion_6, 300),
        (7, "gauge-invariant decay", criterion_7, 300),
    ];
    let dir = tempfile::tempdir().unwrap();
    let mut failed = Vec::new();
    for (n, name, run, budget) in criteria {
        let mut log = Log::default();
        let t = Instant::now();
        run(dir.path(), &mut log);
        let elapsed = t.elapsed();
        log.require(
            elapsed <= Duration::from_secs(budget),
            format!("runtime {:.1}s exceeds {budget}s", elapsed.as_secs_f64()),
        );
        let ok = log.0.is_empty();
        println!(
            "criterion {n} ({name}): {} in {:.1}s{}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if ok { String::new() } else { format!(": {}", log.0.join("; ")) }
        );
        if !ok {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
