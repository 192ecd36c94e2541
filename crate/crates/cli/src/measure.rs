//! The measurement half of the battery: everything that evaluates the
//! solver. Results carry no pass/fail judgement so that they can be cached
//! and re-assessed.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use conekahler_core::connection::{check_curvature_identity, check_decay_da, flux};
use conekahler_core::dirichlet::{barrier_constant, check_barriers, collar_samples, harmonicity_check};
use conekahler_core::metric::{complex_structure, coframe_residuals, volume_ratio};
use conekahler_core::potential::check_decay_z2;
use conekahler_core::verify::geodesic::{adversarial_launches, random_launches, shoot_all};
use conekahler_core::verify::{
    cone_angle_probe, kahler_check, quasi_isometry_check, sample_grid, scalar_curvature_numeric, FieldGrid,
    GeodesicReport, GeodesicStatus, ReducedLeBrun,
};
use conekahler_core::{
    BoundaryStats, ConeAngleSpec, Connection, HPoint, HarmonicExtension, LeBrunMetric, Mat4, ModelMetric, Potential,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::config::Scenario;
use crate::error::CliResult;

/// A finite number, or `None` for NaN and infinities (which JSON cannot hold).
pub type Num = Option<f64>;

pub fn num(x: f64) -> Num {
    x.is_finite().then_some(x)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Outcome {
    Measured,
    Skipped { reason: String },
    Failed { error: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Measurement {
    pub check: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub outcome: Outcome,
    pub values: BTreeMap<String, Num>,
    pub orders: BTreeMap<String, Num>,
    pub details: Value,
}

impl Measurement {
    fn new(check: &str, target: Option<String>) -> Self {
        Self {
            check: check.into(),
            target,
            outcome: Outcome::Measured,
            values: BTreeMap::new(),
            orders: BTreeMap::new(),
            details: Value::Null,
        }
    }

    fn value(mut self, k: &str, v: f64) -> Self {
        self.values.insert(k.into(), num(v));
        self
    }

    fn order(mut self, k: &str, v: Option<f64>) -> Self {
        self.orders.insert(k.into(), v.and_then(num));
        self
    }

    fn details<T: Serialize>(mut self, d: &T) -> Self {
        self.details = serde_json::to_value(d).unwrap_or(Value::Null);
        self
    }

    fn failed(check: &str, target: Option<String>, error: impl std::fmt::Display) -> Self {
        let mut m = Self::new(check, target);
        m.outcome = Outcome::Failed { error: error.to_string() };
        m
    }

    fn skipped(check: &str, target: Option<String>, reason: impl Into<String>) -> Self {
        let mut m = Self::new(check, target);
        m.outcome = Outcome::Skipped { reason: reason.into() };
        m
    }

    pub fn label(&self) -> String {
        match &self.target {
            Some(t) => format!("{}[{t}]", self.check),
            None => self.check.clone(),
        }
    }
}

/// The assembled geometry of one scenario.
pub struct Model {
    pub spec: Arc<ConeAngleSpec>,
    pub stats: BoundaryStats,
    pub harmonic: Arc<HarmonicExtension>,
    pub potential: Arc<Potential>,
    pub connection: Arc<Connection>,
    pub metric: LeBrunMetric,
}

impl Model {
    pub fn build(s: &Scenario) -> CliResult<Self> {
        let spec = s.spec_arc()?;
        let harmonic = Arc::new(HarmonicExtension::new(Arc::clone(&spec), s.config.quadrature.clone())?);
        let stats = *harmonic.stats();
        let potential = Arc::new(Potential::new(Arc::clone(&harmonic), s.charge_config()?));
        let connection = Arc::new(Connection::new(Arc::clone(&potential), s.gauge()?)?);
        let metric = LeBrunMetric::new(Arc::clone(&connection));
        Ok(Self {
            spec,
            stats,
            harmonic,
            potential,
            connection,
            metric,
        })
    }
}

/// Independent seeds per check, derived from the run seed.
pub fn sub_seed(seed: u64, tag: u64) -> u64 {
    let mut x = seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn to_points(raw: &[[f64; 3]]) -> CliResult<Vec<HPoint>> {
    raw.iter()
        .map(|c| Ok(HPoint::new(c[0], c[1], c[2])?))
        .collect()
}

/// Measurements with their wall-clock durations in seconds.
#[derive(Default)]
pub struct Battery {
    pub measurements: Vec<Measurement>,
    pub timings: BTreeMap<String, f64>,
}

impl Battery {
    fn run<F>(&mut self, name: &str, f: F)
    where
        F: FnOnce() -> Vec<Measurement>,
    {
        let t = Instant::now();
        let ms = f();
        *self.timings.entry(name.into()).or_default() += t.elapsed().as_secs_f64();
        self.measurements.extend(ms);
    }
}

fn one<F>(check: &str, f: F) -> Vec<Measurement>
where
    F: FnOnce() -> CliResult<Measurement>,
{
    vec![f().unwrap_or_else(|e| Measurement::failed(check, None, e))]
}

pub fn measure_harmonicity(s: &Scenario, m: &Model) -> Vec<Measurement> {
    let Some(cfg) = &s.config.checks.harmonicity else { return vec![] };
    one("harmonicity", || {
        let r = harmonicity_check(&*m.harmonic, &to_points(&cfg.points)?, cfg.relative_step)?;
        Ok(Measurement::new("harmonicity", None)
            .value("max_residual", r.max_residual)
            .value("max_residual_half_step", r.max_residual_half_step)
            .order("residual", r.order)
            .details(&r))
    })
}

pub fn measure_max_principle(s: &Scenario, m: &Model, seed: u64) -> Vec<Measurement> {
    let Some(cfg) = &s.config.checks.max_principle else { return vec![] };
    one("max_principle", || {
        let pts: Vec<HPoint> = collar_samples(1.0, cfg.half_width, cfg.samples, sub_seed(seed, 1))
            .into_iter()
            .map(|p| HPoint::new_unchecked(cfg.z[0] + (cfg.z[1] - cfg.z[0]) * p.z, p.x2, p.x3))
            .collect();
        let r = conekahler_core::dirichlet::check_max_principle(&m.harmonic, &pts, 0.0);
        Ok(Measurement::new("max_principle", None)
            .value("min_value", r.min_value)
            .value("max_value", r.max_value)
            .value("min_inv_beta", r.min_inv_beta)
            .value("max_inv_beta", r.max_inv_beta)
            .value("samples", r.samples as f64))
    })
}

pub fn measure_barrier(s: &Scenario, m: &Model, seed: u64) -> Vec<Measurement> {
    let Some(cfg) = &s.config.checks.barrier else { return vec![] };
    one("barrier", || {
        let validation = collar_samples(cfg.collar, cfg.half_width, cfg.validation, sub_seed(seed, 2));
        let cert = barrier_constant(&m.spec, &m.stats, cfg.collar, &validation)?;
        let samples = collar_samples(cfg.collar, cfg.half_width, cfg.samples, sub_seed(seed, 3));
        let r = check_barriers(&m.harmonic, &cert, &samples)?;
        Ok(Measurement::new("barrier", None)
            .value("constant", cert.constant)
            .value("oscillation_bound", cert.oscillation_bound)
            .value("min_super_margin", cert.min_super_margin)
            .value("max_sub_margin", cert.max_sub_margin)
            .value("min_margin", r.min_margin)
            .value("remainder_bound", r.remainder_bound)
            .value("samples", r.samples as f64)
            .details(&json!({ "certificate": cert, "violations": r.violations })))
    })
}

pub fn measure_flux(s: &Scenario, m: &Model) -> Vec<Measurement> {
    let Some(cfg) = &s.config.checks.flux else { return vec![] };
    cfg.spheres
        .iter()
        .enumerate()
        .map(|(i, sp)| {
            let target = Some(format!("sphere {i}"));
            let run = || -> CliResult<Measurement> {
                let c = HPoint::new(sp.center[0], sp.center[1], sp.center[2])?;
                let r = flux(&m.potential, c, sp.radius, cfg.degree, 1e-3 * m.potential.charges().kappa())?;
                Ok(Measurement::new("flux", target.clone())
                    .value("enclosed_flux", r.enclosed_flux)
                    .value("expected", r.expected)
                    .value("charges_inside", r.charges_inside as f64)
                    .value("kappa", m.potential.charges().kappa())
                    .value("quadrature_error", r.error_estimate)
                    .details(&r))
            };
            run().unwrap_or_else(|e| Measurement::failed("flux", target.clone(), e))
        })
        .collect()
}

pub fn measure_green_decay(s: &Scenario, m: &Model) -> Vec<Measurement> {
    let Some(cfg) = &s.config.checks.green_decay else { return vec![] };
    if m.potential.charges().is_empty() {
        return vec![Measurement::skipped("green_decay", None, "scenario has no charges")];
    }
    one("green_decay", || {
        let feet: Vec<(f64, f64)> = cfg.feet.iter().map(|f| (f[0], f[1])).collect();
        let r = check_decay_z2(m.potential.charges(), &feet, &cfg.heights)?;
        Ok(Measurement::new("green_decay", None)
            .value("min_exponent", r.min_exponent.unwrap_or(f64::NAN))
            .value("max_exponent", r.max_exponent.unwrap_or(f64::NAN))
            .details(&r.descents))
    })
}

pub fn measure_curvature_identity(s: &Scenario, m: &Model) -> Vec<Measurement> {
    let Some(cfg) = &s.config.checks.curvature_identity else { return vec![] };
    one("curvature_identity", || {
        let r = check_curvature_identity(&m.connection, &to_points(&cfg.points)?, cfg.relative_step)?;
        Ok(Measurement::new("curvature_identity", None)
            .value("max_residual", r.max_residual)
            .value("max_residual_half_step", r.max_residual_half_step)
            .order("residual", r.order)
            .details(&r))
    })
}

pub fn measure_gauge_decay(s: &Scenario, m: &Model) -> Vec<Measurement> {
    let Some(cfg) = &s.config.checks.gauge_decay else { return vec![] };
    let r = check_decay_da(&m.harmonic, &s.rays(), cfg.samples_per_ray);
    vec![Measurement::new("gauge_decay", None)
        .value("constant", r.constant)
        .value("constant_doubled", r.constant_doubled)
        .value("relative_change", r.relative_change)
        .value("vertical_decay", if r.vertical_decay { 1.0 } else { 0.0 })
        .details(&r.rays)]
}

fn j_defect(g: &Mat4, w: &Mat4) -> f64 {
    match complex_structure(g, w) {
        Some(j) => (j * j + Mat4::identity()).amax(),
        None => f64::INFINITY,
    }
}

pub fn measure_metric_identities(s: &Scenario, m: &Model) -> Vec<Measurement> {
    let Some(cfg) = &s.config.checks.metric_identities else { return vec![] };
    one("metric_identities", || {
        let (mut coframe, mut vol, mut jd) = (0.0_f64, 0.0_f64, 0.0_f64);
        for p in to_points(&cfg.points)? {
            let x = m.metric.sample(p)?;
            let (r1, r2) = coframe_residuals(x.v, x.a, p.z);
            coframe = coframe.max(r1).max(r2);
            vol = vol.max((volume_ratio(&x.g, &x.omega) - 2.0).abs());
            jd = jd.max(j_defect(&x.g, &x.omega));
        }
        Ok(Measurement::new("metric_identities", None)
            .value("coframe_residual", coframe)
            .value("volume_defect", vol)
            .value("complex_structure_defect", jd))
    })
}

/// Samples every configured grid.
pub fn sample_grids(s: &Scenario, m: &Model) -> CliResult<Vec<(String, FieldGrid)>> {
    s.config
        .grids
        .iter()
        .map(|g| Ok((g.name.clone(), sample_grid(&m.metric, &g.bounds(), g.spacing)?)))
        .collect()
}

/// Curvature and `dω` from sampled grids; depends on nothing but the grids.
pub fn measure_grids(s: &Scenario, grids: &[(String, FieldGrid)]) -> Vec<Measurement> {
    let Some(cfg) = &s.config.checks.curvature else { return vec![] };
    let mut out = Vec::new();
    for (name, grid) in grids {
        if !cfg.grids.is_empty() && !cfg.grids.contains(name) {
            continue;
        }
        let t = Some(name.clone());
        out.push(match scalar_curvature_numeric(grid, |_| 0.0) {
            Ok(r) => Measurement::new("scalar_curvature", t.clone())
                .value("max_abs", r.max_abs)
                .value("max_abs_coarse", r.max_abs_coarse)
                .value("spacing", r.spacing)
                .value("points", r.points as f64)
                .order("max_abs", r.order)
                .details(&json!({ "worst_point": r.worst_point })),
            Err(e) => Measurement::failed("scalar_curvature", t.clone(), e),
        });
        out.push(match kahler_check(grid) {
            Ok(r) => Measurement::new("kahler", t.clone())
                .value("max_residual", r.max_residual)
                .value("max_residual_coarse", r.max_residual_coarse)
                .value("volume_defect", r.max_volume_defect)
                .value("spacing", r.spacing)
                .order("max_residual", r.order),
            Err(e) => Measurement::failed("kahler", t, e),
        });
    }
    out
}

pub fn measure_cone(s: &Scenario, m: &Model, extra: &[[f64; 2]]) -> Vec<Measurement> {
    let Some(cfg) = &s.config.checks.cone else {
        if extra.is_empty() {
            return vec![];
        }
        return cone_probes(m, extra, &Default::default());
    };
    let mut probes = cfg.probes.clone();
    probes.extend_from_slice(extra);
    cone_probes(m, &probes, &cfg.ladder)
}

fn cone_probes(m: &Model, probes: &[[f64; 2]], ladder: &conekahler_core::verify::ConeProbeSettings) -> Vec<Measurement> {
    probes
        .iter()
        .map(|&foot| {
            let t = Some(format!("({}, {})", foot[0], foot[1]));
            match cone_angle_probe(&m.metric, foot, m.potential.charges(), ladder) {
                Ok(r) if r.is_skipped() => {
                    let reason = match &r.status {
                        conekahler_core::verify::ProbeStatus::Skipped { reason } => reason.clone(),
                        _ => unreachable!(),
                    };
                    Measurement::skipped("cone_angle", t, reason)
                }
                Ok(r) => Measurement::new("cone_angle", t)
                    .value("angle", r.angle.unwrap_or(f64::NAN))
                    .value("beta", m.spec.beta_at(foot[0], foot[1]))
                    .value("extrapolation_change", r.extrapolation_change.unwrap_or(f64::NAN))
                    .details(&r),
                Err(e) => Measurement::failed("cone_angle", t, e),
            }
        })
        .collect()
}

pub fn measure_quasi(s: &Scenario, m: &Model, seed: u64) -> Vec<Measurement> {
    let Some(cfg) = &s.config.checks.quasi_isometry else { return vec![] };
    one("quasi_isometry", || {
        let model = ModelMetric::new(Arc::clone(&m.spec));
        let r = quasi_isometry_check(&m.metric, &model, m.potential.charges(), cfg, sub_seed(seed, 4))?;
        Ok(Measurement::new("quasi_isometry", None)
            .value("constant", r.constant)
            .value("constant_enlarged", r.constant_enlarged)
            .value("change", r.change)
            .value("lambda_min", r.lambda_min)
            .value("lambda_max", r.lambda_max)
            .value("samples", r.samples as f64)
            .details(&r))
    })
}

/// Geodesic shots; the reports are returned too so trajectories can be dumped.
pub fn measure_geodesics(s: &Scenario, m: &Model, seed: u64, record: bool) -> (Vec<Measurement>, Vec<GeodesicReport>) {
    let Some(cfg) = &s.config.checks.geodesics else { return (vec![], vec![]) };
    let charges = m.potential.charges().points().to_vec();
    let sys = ReducedLeBrun::new(Arc::clone(&m.connection), charges.is_empty());
    let mut settings = cfg.integrator;
    settings.record = record;
    let random = random_launches(&cfg.bounds(), cfg.shots, sub_seed(seed, 5), &charges, 0.1);
    let adversarial = adversarial_launches(&cfg.bounds(), cfg.adversarial, sub_seed(seed, 6));
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    let mut tally = |results: Vec<conekahler_core::Result<GeodesicReport>>| {
        let mut t = [0usize; 5];
        for r in results {
            match r {
                Ok(r) => {
                    t[match r.status {
                        GeodesicStatus::Completed => 0,
                        GeodesicStatus::HitDivisor => 1,
                        GeodesicStatus::NearCharge => 2,
                        GeodesicStatus::StepUnderflow => 3,
                    }] += 1;
                    reports.push(r);
                }
                Err(e) => {
                    t[4] += 1;
                    errors.push(e.to_string());
                }
            }
        }
        t
    };
    let rt = tally(shoot_all(&sys, &random, &settings));
    let at = tally(shoot_all(&sys, &adversarial, &settings));
    let max_drift = reports.iter().fold(0.0_f64, |a, r| a.max(r.max_drift));
    let min_height = reports.iter().fold(f64::INFINITY, |a, r| a.min(r.min_height));
    let mut meas = Measurement::new("geodesics", None)
        .value("length", settings.length)
        .value("random_shots", cfg.shots as f64)
        .value("random_completed", rt[0] as f64)
        .value("random_hit_divisor", rt[1] as f64)
        .value("random_near_charge", rt[2] as f64)
        .value("random_step_underflow", rt[3] as f64)
        .value("random_errors", rt[4] as f64)
        .value("adversarial_shots", cfg.adversarial as f64)
        .value("adversarial_completed", at[0] as f64)
        .value("adversarial_hit_divisor", at[1] as f64)
        .value("adversarial_near_charge", at[2] as f64)
        .value("adversarial_step_underflow", at[3] as f64)
        .value("adversarial_errors", at[4] as f64)
        .value("max_drift", max_drift)
        .value("min_height", min_height)
        .value("steps", reports.iter().map(|r| r.steps).sum::<usize>() as f64);
    meas = meas.details(&json!({ "errors": errors }));
    (vec![meas], reports)
}

/// Which checks a command runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Cone,
    Geodesics,
}

/// Named sampled grids, in configuration order.
pub type NamedGrids = Vec<(String, FieldGrid)>;

/// Everything one measurement pass produces.
pub type MeasureOutput = (Battery, NamedGrids, Vec<GeodesicReport>);

/// Runs the selected measurements. Grids are sampled only for `All`.
pub fn measure(
    s: &Scenario,
    m: &Model,
    seed: u64,
    selection: Selection,
    extra_probes: &[[f64; 2]],
    record_trajectories: bool,
) -> CliResult<MeasureOutput> {
    let mut b = Battery::default();
    let mut grids = Vec::new();
    let mut trajectories = Vec::new();
    if selection == Selection::All {
        b.run("harmonicity", || measure_harmonicity(s, m));
        b.run("max_principle", || measure_max_principle(s, m, seed));
        b.run("barrier", || measure_barrier(s, m, seed));
        b.run("flux", || measure_flux(s, m));
        b.run("green_decay", || measure_green_decay(s, m));
        b.run("curvature_identity", || measure_curvature_identity(s, m));
        b.run("gauge_decay", || measure_gauge_decay(s, m));
        b.run("metric_identities", || measure_metric_identities(s, m));
        let t = Instant::now();
        grids = sample_grids(s, m)?;
        b.timings.insert("grid_sampling".into(), t.elapsed().as_secs_f64());
        b.run("curvature", || measure_grids(s, &grids));
    }
    if matches!(selection, Selection::All | Selection::Cone) {
        b.run("cone_angle", || measure_cone(s, m, extra_probes));
    }
    if selection == Selection::All {
        b.run("quasi_isometry", || measure_quasi(s, m, seed));
    }
    if matches!(selection, Selection::All | Selection::Geodesics) {
        let mut reps = Vec::new();
        b.run("geodesics", || {
            let (ms, r) = measure_geodesics(s, m, seed, record_trajectories);
            reps = r;
            ms
        });
        trajectories = reps;
    }
    Ok((b, grids, trajectories))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sub_seeds_differ() {
        assert_ne!(sub_seed(0, 1), sub_seed(0, 2));
        assert_ne!(sub_seed(1, 1), sub_seed(0, 1));
        assert_eq!(sub_seed(5, 3), sub_seed(5, 3));
    }

    #[test]
    fn non_finite_numbers_become_null() {
        let m = Measurement::new("x", None).value("a", f64::NAN).value("b", 1.0);
        let text = serde_json::to_string(&m).unwrap();
        let back: Measurement = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.values["a"], None);
    }
}
