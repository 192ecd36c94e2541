//! Cone angle along the divisor `z = 0`, from the ratio of the θ-circle
//! length to `2π` times the radial distance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperbolic::HPoint;
use crate::metric::MetricField;
use crate::potential::ChargeConfig;
use crate::quadrature::gauss_legendre_on;

/// Probes within this horizontal distance of a charge's vertical line are skipped.
pub const CHARGE_LINE_CLEARANCE: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConeProbeSettings {
    /// Height of the first rung of the ladder.
    pub top: f64,
    /// Number of rungs; rung `k` sits at `top · 2^-k`.
    pub levels: usize,
    /// Gauss–Legendre nodes for the radial length.
    pub nodes: usize,
}

impl Default for ConeProbeSettings {
    fn default() -> Self {
        Self {
            top: 0.1,
            levels: 6,
            nodes: 16,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum ProbeStatus {
    Measured,
    Skipped { reason: String },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConeProbeResult {
    pub foot: [f64; 2],
    #[serde(flatten)]
    pub status: ProbeStatus,
    /// Heights of the ladder.
    pub heights: Vec<f64>,
    /// Radial distance from the divisor at each height.
    pub radii: Vec<f64>,
    /// `C(ρ) / 2πρ` at each height.
    pub ratios: Vec<f64>,
    pub angle: Option<f64>,
    /// Difference between the last two Richardson extrapolants.
    pub extrapolation_change: Option<f64>,
}

impl ConeProbeResult {
    fn skipped(foot: [f64; 2], reason: String) -> Self {
        Self {
            foot,
            status: ProbeStatus::Skipped { reason },
            heights: Vec::new(),
            radii: Vec::new(),
            ratios: Vec::new(),
            angle: None,
            extrapolation_change: None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, ProbeStatus::Skipped { .. })
    }
}

/// Measures the cone angle at the divisor point `foot`.
pub fn cone_angle_probe(
    field: &dyn MetricField,
    foot: [f64; 2],
    charges: &ChargeConfig,
    settings: &ConeProbeSettings,
) -> Result<ConeProbeResult> {
    if settings.levels < 2 || settings.nodes < 2 || !(settings.top > 0.0) {
        return Err(Error::Geometry(format!("invalid cone probe settings {settings:?}")));
    }
    for (i, c) in charges.points().iter().enumerate() {
        let d = (c.x2 - foot[0]).hypot(c.x3 - foot[1]);
        if d < CHARGE_LINE_CLEARANCE {
            return Ok(ConeProbeResult::skipped(
                foot,
                format!("probe lies {d:.3e} from the vertical line of charge {i}"),
            ));
        }
    }
    let at = |z: f64| HPoint::new(z, foot[0], foot[1]);
    let mut heights = Vec::with_capacity(settings.levels);
    let mut radii = Vec::with_capacity(settings.levels);
    let mut ratios = Vec::with_capacity(settings.levels);
    for k in 0..settings.levels {
        let z = settings.top * 0.5f64.powi(k as i32);
        let mut radial = 0.0;
        for (zz, w) in gauss_legendre_on(settings.nodes, 0.0, z) {
            let g = field.metric(at(zz)?)?;
            let reduced = g[(1, 1)] - g[(0, 1)] * g[(0, 1)] / g[(0, 0)];
            if !(reduced > 0.0) {
                return Err(Error::NotPositiveDefinite(at(zz)?));
            }
            radial += w * reduced.sqrt();
        }
        let g = field.metric(at(z)?)?;
        heights.push(z);
        radii.push(radial);
        ratios.push(g[(0, 0)].sqrt() / radial);
    }
    let n = ratios.len();
    let rich = |k: usize| 2.0 * ratios[k] - ratios[k - 1];
    let angle = rich(n - 1);
    let change = if n >= 3 { Some((angle - rich(n - 2)).abs()) } else { None };
    if !(angle > 0.0) {
        return Err(Error::Geometry(format!(
            "cone ladder at {foot:?} extrapolates to a non-positive angle {angle:.3e}; ratios {ratios:?}"
        )));
    }
    Ok(ConeProbeResult {
        foot,
        status: ProbeStatus::Measured,
        heights,
        radii,
        ratios,
        angle: Some(angle),
        extrapolation_change: change,
    })
}
