//! Assessment: measured values against scaled tolerances, and the
//! `report.json` document.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::Tolerances;
use crate::measure::{Measurement, Num, Outcome};

pub const REPORT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// The shipped report schema; its hash also versions the cache.
pub const REPORT_SCHEMA: &str = include_str!("../../../docs/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub scenario: String,
    pub status: Status,
    pub passed: bool,
    pub measured: BTreeMap<String, Num>,
    pub tolerances: BTreeMap<String, f64>,
    pub orders: BTreeMap<String, Num>,
    pub message: String,
    pub details: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub command: String,
    pub scenario: String,
    pub config_hash: String,
    pub seed: u64,
    pub tol_scale: f64,
    pub passed: bool,
    pub summary: Summary,
    pub checks: Vec<CheckResult>,
    /// Wall-clock seconds per check family; the only non-deterministic field.
    pub timings: BTreeMap<String, f64>,
}

impl RunReport {
    pub fn new(
        command: &str,
        scenario: &str,
        config_hash: &str,
        seed: u64,
        tol_scale: f64,
        checks: Vec<CheckResult>,
        timings: BTreeMap<String, f64>,
    ) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Error => summary.error += 1,
            }
        }
        Self {
            version: REPORT_VERSION.into(),
            command: command.into(),
            scenario: scenario.into(),
            config_hash: config_hash.into(),
            seed,
            tol_scale,
            passed: summary.fail == 0 && summary.error == 0,
            summary,
            checks,
            timings,
        }
    }

    pub fn check(&self, name: &str) -> impl Iterator<Item = &CheckResult> {
        let name = name.to_string();
        self.checks.iter().filter(move |c| c.name == name)
    }

    /// Exit code: 0 all passed, 2 some check failed, 1 some check errored.
    pub fn exit_code(&self) -> i32 {
        if self.summary.error > 0 {
            1
        } else if self.summary.fail > 0 {
            2
        } else {
            0
        }
    }
}

fn get(m: &Measurement, k: &str) -> f64 {
    m.values.get(k).copied().flatten().unwrap_or(f64::NAN)
}

fn order(m: &Measurement, k: &str) -> Option<f64> {
    m.orders.get(k).copied().flatten()
}

struct Verdict {
    passed: bool,
    tolerances: BTreeMap<String, f64>,
    message: String,
}

impl Verdict {
    fn new() -> Self {
        Self {
            passed: true,
            tolerances: BTreeMap::new(),
            message: String::new(),
        }
    }

    fn tol(&mut self, k: &str, v: f64) -> &mut Self {
        self.tolerances.insert(k.into(), v);
        self
    }

    /// Records a requirement; NaN never satisfies one.
    fn require(&mut self, ok: bool, what: impl Into<String>) -> &mut Self {
        if !ok {
            self.passed = false;
            if !self.message.is_empty() {
                self.message.push_str("; ");
            }
            self.message.push_str(&what.into());
        }
        self
    }

    /// `fine ≤ tol` and an observed order inside the window. A missing order
    /// means the coarse error was already at round-off, which is accepted.
    fn converged(&mut self, m: &Measurement, value: &str, tol: f64, order_key: &str, window: [f64; 2]) {
        let fine = get(m, value);
        self.tol(value, tol);
        self.tol("order_min", window[0]);
        self.tol("order_max", window[1]);
        self.require(fine <= tol, format!("{value} = {fine:.3e} exceeds {tol:.3e}"));
        if let Some(p) = order(m, order_key) {
            self.require(
                (window[0]..=window[1]).contains(&p),
                format!("observed order {p:.3} outside [{}, {}]", window[0], window[1]),
            );
        }
    }
}

fn judge(m: &Measurement, t: &Tolerances) -> Verdict {
    let mut v = Verdict::new();
    let w = t.order_window;
    match m.check.as_str() {
        "harmonicity" => {
            v.converged(m, "max_residual_half_step", t.harmonicity, "residual", w);
        }
        "curvature_identity" => {
            v.converged(m, "max_residual_half_step", t.curvature_identity, "residual", w);
        }
        "scalar_curvature" => {
            v.converged(m, "max_abs", t.scalar_curvature, "max_abs", w);
        }
        "kahler" => {
            v.converged(m, "max_residual", t.kahler, "max_residual", w);
            let d = get(m, "volume_defect");
            v.tol("volume_defect", t.metric_identities);
            v.require(d <= t.metric_identities, format!("volume defect {d:.3e}"));
        }
        "max_principle" => {
            let (lo, hi) = (get(m, "min_value"), get(m, "max_value"));
            let (blo, bhi) = (get(m, "min_inv_beta"), get(m, "max_inv_beta"));
            v.tol("bound_slack", t.max_principle);
            v.require(lo >= blo - t.max_principle, format!("minimum {lo:.6} below {blo:.6}"));
            v.require(hi <= bhi + t.max_principle, format!("maximum {hi:.6} above {bhi:.6}"));
        }
        "barrier" => {
            let margin = get(m, "min_margin");
            v.tol("min_margin_floor", 0.0);
            v.require(margin > 0.0, format!("barrier margin {margin:.3e} is not positive"));
        }
        "flux" => {
            let (f, e, k) = (get(m, "enclosed_flux"), get(m, "expected"), get(m, "kappa"));
            let tol = t.flux_relative * k;
            v.tol("flux_absolute", tol);
            v.require((f - e).abs() <= tol, format!("flux {f:.8} vs expected {e:.8}"));
        }
        "green_decay" => {
            let (a, b) = (get(m, "min_exponent"), get(m, "max_exponent"));
            v.tol("exponent_deviation", t.green_exponent);
            v.require(
                (a - 2.0).abs() <= t.green_exponent && (b - 2.0).abs() <= t.green_exponent,
                format!("decay exponents in [{a:.4}, {b:.4}]"),
            );
        }
        "gauge_decay" => {
            let (c, r) = (get(m, "constant"), get(m, "relative_change"));
            v.tol("relative_change", t.gauge_decay_change);
            v.require(c.is_finite(), "decay constant is not finite");
            v.require(r <= t.gauge_decay_change, format!("constant changed by {:.1}%", 100.0 * r));
            v.require(get(m, "vertical_decay") == 1.0, "no decay along vertical rays");
        }
        "metric_identities" => {
            v.tol("residual", t.metric_identities);
            for k in ["coframe_residual", "volume_defect", "complex_structure_defect"] {
                let x = get(m, k);
                v.require(x <= t.metric_identities, format!("{k} = {x:.3e}"));
            }
        }
        "cone_angle" => {
            let (a, b) = (get(m, "angle"), get(m, "beta"));
            v.tol("angle", t.cone_angle);
            v.require((a - b).abs() <= t.cone_angle, format!("angle {a:.6} vs β = {b:.6}"));
        }
        "quasi_isometry" => {
            let (c, d) = (get(m, "constant"), get(m, "change"));
            v.tol("relative_change", t.quasi_change);
            v.require(c.is_finite() && c >= 1.0, format!("constant {c}"));
            v.require(d / c <= t.quasi_change, format!("constant moved by {d:.3e} under doubling"));
        }
        "geodesics" => {
            let shots = get(m, "random_shots");
            let done = get(m, "random_completed");
            let drift = get(m, "max_drift");
            v.tol("max_drift", t.geodesic_drift);
            v.require(done == shots, format!("{done}/{shots} random shots reached full length"));
            v.require(
                get(m, "adversarial_step_underflow") == 0.0 && get(m, "adversarial_errors") == 0.0,
                "adversarial shot failed without a geometric reason",
            );
            v.require(drift <= t.geodesic_drift, format!("energy drift {drift:.3e}"));
        }
        other => {
            v.require(false, format!("no assessment rule for `{other}`"));
        }
    }
    v
}

/// Applies the tolerances to one measurement.
pub fn assess(scenario: &str, m: &Measurement, t: &Tolerances) -> CheckResult {
    let (status, passed, tolerances, message) = match &m.outcome {
        Outcome::Skipped { reason } => (Status::Skipped, true, BTreeMap::new(), reason.clone()),
        Outcome::Failed { error } => (Status::Error, false, BTreeMap::new(), error.clone()),
        Outcome::Measured => {
            let v = judge(m, t);
            let s = if v.passed { Status::Pass } else { Status::Fail };
            (s, v.passed, v.tolerances, v.message)
        }
    };
    CheckResult {
        name: m.check.clone(),
        target: m.target.clone(),
        scenario: scenario.into(),
        status,
        passed,
        measured: m.values.clone(),
        tolerances,
        orders: m.orders.clone(),
        message,
        details: m.details.clone(),
    }
}

pub fn assess_all(scenario: &str, ms: &[Measurement], t: &Tolerances) -> Vec<CheckResult> {
    ms.iter().map(|m| assess(scenario, m, t)).collect()
}

/// The report as JSON with the timings removed, for reproducibility checks.
pub fn without_timings(r: &RunReport) -> Value {
    let mut v = serde_json::to_value(r).expect("report serialises");
    if let Some(o) = v.as_object_mut() {
        o.remove("timings");
    }
    v
}
