//! Scenario files: strict TOML with no defaults for `β` or the charges.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use conekahler_core::connection::{Ray, StringDirection};
use conekahler_core::verify::{Box3, ConeProbeSettings, GeodesicSettings, QuasiIsometrySettings};
use conekahler_core::{ChargeConfig, ConeAngleSpec, GaugeDescriptor, HPoint, LonLatGrid, QuadratureSettings, SmoothGauge};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub beta: BetaConfig,
    pub charges: ChargesConfig,
    #[serde(default)]
    pub gauge: GaugeConfig,
    #[serde(default)]
    pub quadrature: QuadratureSettings,
    #[serde(default)]
    pub grids: Vec<GridConfig>,
    #[serde(default)]
    pub checks: ChecksConfig,
    #[serde(default)]
    pub tolerances: Tolerances,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BetaConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expression: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at_infinity: Option<f64>,
    /// Lon-lat grid file, relative to the scenario file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outside_radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feature_radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivative_bound: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holder_exponent: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChargesConfig {
    /// `[z, x2, x3]` per charge. Exactly one of `points` and `blowups` must
    /// be given; an empty list means no charges.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[f64; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blowups: Option<Vec<BlowupConfig>>,
    #[serde(default = "default_kappa")]
    pub kappa: f64,
    #[serde(default)]
    pub strings: Vec<StringDirection>,
}

/// A blow-up point `ξ = (a + ib, 0)` with the height of its charge above the foot `(a, b)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlowupConfig {
    pub foot: [f64; 2],
    pub height: f64,
}

fn default_kappa() -> f64 {
    ChargeConfig::DEFAULT_KAPPA
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GaugeKind {
    #[default]
    Kernel,
    Homotopy,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaugeConfig {
    #[serde(default)]
    pub smooth: GaugeKind,
    /// Base point `[z, x2, x3]` of the homotopy gauge; default height one above the charge centroid.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<[f64; 3]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub name: String,
    pub z: [f64; 2],
    pub x2: [f64; 2],
    pub x3: [f64; 2],
    pub spacing: f64,
}

impl GridConfig {
    pub fn bounds(&self) -> Box3 {
        Box3 {
            z: self.z,
            x2: self.x2,
            x3: self.x3,
        }
    }
}

/// Each check runs when its table is present.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChecksConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub harmonicity: Option<HarmonicityConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_principle: Option<MaxPrincipleConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub barrier: Option<BarrierConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flux: Option<FluxConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub green_decay: Option<GreenDecayConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curvature_identity: Option<PointsConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gauge_decay: Option<GaugeDecayConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric_identities: Option<PointsConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curvature: Option<CurvatureConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone: Option<ConeConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quasi_isometry: Option<QuasiIsometrySettings>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geodesics: Option<GeodesicsConfig>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HarmonicityConfig {
    pub points: Vec<[f64; 3]>,
    #[serde(default = "default_harmonic_step")]
    pub relative_step: f64,
}

fn default_harmonic_step() -> f64 {
    0.05
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaxPrincipleConfig {
    pub samples: usize,
    pub z: [f64; 2],
    pub half_width: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BarrierConfig {
    /// Collar width `ε`.
    pub collar: f64,
    pub half_width: f64,
    pub samples: usize,
    pub validation: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SphereConfig {
    pub center: [f64; 3],
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FluxConfig {
    pub spheres: Vec<SphereConfig>,
    #[serde(default = "default_flux_degree")]
    pub degree: u32,
}

fn default_flux_degree() -> u32 {
    59
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GreenDecayConfig {
    /// Feet `[x2, x3]` of the vertical descents.
    pub feet: Vec<[f64; 2]>,
    pub heights: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsConfig {
    pub points: Vec<[f64; 3]>,
    #[serde(default = "default_identity_step")]
    pub relative_step: f64,
}

fn default_identity_step() -> f64 {
    0.02
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RayConfig {
    pub origin: [f64; 3],
    pub direction: [f64; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaugeDecayConfig {
    pub samples_per_ray: usize,
    /// Custom rays; the built-in family is used when empty.
    #[serde(default)]
    pub rays: Vec<RayConfig>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurvatureConfig {
    /// Grid names; all grids when empty.
    #[serde(default)]
    pub grids: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeConfig {
    pub probes: Vec<[f64; 2]>,
    #[serde(default)]
    pub ladder: ConeProbeSettings,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeodesicsConfig {
    pub shots: usize,
    #[serde(default)]
    pub adversarial: usize,
    pub z: [f64; 2],
    pub x2: [f64; 2],
    pub x3: [f64; 2],
    #[serde(default)]
    pub integrator: GeodesicSettings,
}

impl GeodesicsConfig {
    pub fn bounds(&self) -> Box3 {
        Box3 {
            z: self.z,
            x2: self.x2,
            x3: self.x3,
        }
    }
}

/// Pass thresholds; every value except the order window is multiplied by `--tol-scale`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    pub order_window: [f64; 2],
    pub harmonicity: f64,
    pub max_principle: f64,
    pub flux_relative: f64,
    pub green_exponent: f64,
    pub curvature_identity: f64,
    pub gauge_decay_change: f64,
    pub metric_identities: f64,
    pub scalar_curvature: f64,
    pub kahler: f64,
    pub cone_angle: f64,
    pub quasi_change: f64,
    pub geodesic_drift: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            order_window: [1.5, 2.5],
            harmonicity: 1e-4,
            max_principle: 1e-8,
            flux_relative: 1e-3,
            green_exponent: 0.1,
            curvature_identity: 1e-3,
            gauge_decay_change: 0.2,
            metric_identities: 1e-10,
            scalar_curvature: 1e-3,
            kahler: 1e-3,
            cone_angle: 1e-2,
            quasi_change: 1e-2,
            geodesic_drift: 1e-6,
        }
    }
}

impl Tolerances {
    pub fn scaled(&self, s: f64) -> Self {
        Self {
            order_window: self.order_window,
            harmonicity: self.harmonicity * s,
            max_principle: self.max_principle * s,
            flux_relative: self.flux_relative * s,
            green_exponent: self.green_exponent * s,
            curvature_identity: self.curvature_identity * s,
            gauge_decay_change: self.gauge_decay_change * s,
            metric_identities: self.metric_identities * s,
            scalar_curvature: self.scalar_curvature * s,
            kahler: self.kahler * s,
            cone_angle: self.cone_angle * s,
            quasi_change: self.quasi_change * s,
            geodesic_drift: self.geodesic_drift * s,
        }
    }
}

/// A parsed scenario with its source directory, for resolving grid files.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub config: Config,
    pub base_dir: PathBuf,
}

fn point(c: [f64; 3], what: &str) -> CliResult<HPoint> {
    HPoint::new(c[0], c[1], c[2]).map_err(|e| CliError::Config(format!("{what}: {e}")))
}

/// Number of boundary samples used to reject non-positive `β` expressions.
const BETA_SAMPLES: usize = 64;

impl Scenario {
    pub fn parse(text: &str, base_dir: &Path) -> CliResult<Self> {
        let config: Config = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        let s = Self {
            config,
            base_dir: base_dir.to_path_buf(),
        };
        s.validate()?;
        Ok(s)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Self::parse(&text, &dir)
    }

    fn validate(&self) -> CliResult<()> {
        let c = &self.config;
        if c.id.trim().is_empty() {
            return Err(CliError::Config("scenario id must not be empty".into()));
        }
        self.cone_angle_spec()?;
        self.charge_config()?;
        self.gauge()?;
        let mut names = std::collections::BTreeSet::new();
        for g in &c.grids {
            if !(g.spacing > 0.0) {
                return Err(CliError::Config(format!("grid '{}' spacing must be positive", g.name)));
            }
            g.bounds().validate().map_err(|e| CliError::Config(format!("grid '{}': {e}", g.name)))?;
            if !names.insert(g.name.as_str()) {
                return Err(CliError::Config(format!("grid name '{}' is repeated", g.name)));
            }
        }
        if let Some(cv) = &c.checks.curvature {
            if c.grids.is_empty() {
                return Err(CliError::Config("curvature check enabled but no grids are defined".into()));
            }
            if let Some(n) = cv.grids.iter().find(|n| !names.contains(n.as_str())) {
                return Err(CliError::Config(format!("curvature check names unknown grid '{n}'")));
            }
        }
        if let Some(h) = &c.checks.harmonicity {
            for p in &h.points {
                point(*p, "harmonicity point")?;
            }
        }
        if let Some(g) = &c.checks.geodesics {
            g.bounds().validate().map_err(|e| CliError::Config(format!("geodesic box: {e}")))?;
        }
        Ok(())
    }

    pub fn cone_angle_spec(&self) -> CliResult<ConeAngleSpec> {
        let b = &self.config.beta;
        let given = [b.constant.is_some(), b.expression.is_some(), b.grid.is_some()];
        if given.iter().filter(|x| **x).count() != 1 {
            return Err(CliError::Config(
                "[beta] needs exactly one of 'constant', 'expression' or 'grid'".into(),
            ));
        }
        if b.at_infinity.is_some() && b.expression.is_none() {
            return Err(CliError::Config("'at_infinity' only applies to 'expression'".into()));
        }
        let mut spec = if let Some(c) = b.constant {
            ConeAngleSpec::constant(c)?
        } else if let Some(e) = &b.expression {
            let inf = b
                .at_infinity
                .ok_or_else(|| CliError::Config("'expression' needs 'at_infinity'".into()))?;
            ConeAngleSpec::expression(e, inf)?
        } else {
            let path = self.base_dir.join(b.grid.as_ref().expect("checked above"));
            let text = std::fs::read_to_string(&path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            ConeAngleSpec::grid(LonLatGrid::parse(&text)?)
        };
        if let Some(r) = b.outside_radius {
            spec = spec.with_outside_radius(r)?;
        }
        if let Some(r) = b.feature_radius {
            if !(r > 0.0) {
                return Err(CliError::Config(format!("feature_radius {r} must be positive")));
            }
            spec = spec.with_feature_radius(r);
        }
        if let Some(d) = b.derivative_bound {
            spec = spec.with_derivative_bound(d);
        }
        if let Some(h) = b.holder_exponent {
            spec = spec.with_holder_exponent(h);
        }
        // sample the plane on a spiral to reject non-positive β early
        for k in 0..BETA_SAMPLES {
            let r = 0.05 * 1.25f64.powi(k as i32 / 2);
            let t = 2.399963229728653 * k as f64;
            let v = spec.beta_at(r * t.cos(), r * t.sin());
            if !(v.is_finite() && v > 0.0) {
                return Err(CliError::Config(format!(
                    "beta is not positive at ({:.3}, {:.3}): {v}",
                    r * t.cos(),
                    r * t.sin()
                )));
            }
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn charge_config(&self) -> CliResult<ChargeConfig> {
        let c = &self.config.charges;
        let listed: Vec<[f64; 3]> = match (&c.points, &c.blowups) {
            (Some(p), None) => p.clone(),
            (None, Some(b)) => b.iter().map(|b| [b.height, b.foot[0], b.foot[1]]).collect(),
            _ => {
                return Err(CliError::Config(
                    "[charges] needs exactly one of 'points' or 'blowups'".into(),
                ))
            }
        };
        let mut pts = Vec::with_capacity(listed.len());
        for (i, p) in listed.iter().enumerate() {
            if !(p[0] > 0.0) {
                return Err(CliError::Config(format!("charge {i} has z = {} but must lie in z > 0", p[0])));
            }
            pts.push(point(*p, &format!("charge {i}"))?);
        }
        if c.strings.len() > pts.len() {
            return Err(CliError::Config(format!(
                "{} string directions for {} charges",
                c.strings.len(),
                pts.len()
            )));
        }
        Ok(ChargeConfig::new(pts, c.kappa)?)
    }

    pub fn gauge(&self) -> CliResult<GaugeDescriptor> {
        let g = &self.config.gauge;
        let smooth = match g.smooth {
            GaugeKind::Kernel => {
                if g.base.is_some() {
                    return Err(CliError::Config("'base' only applies to the homotopy gauge".into()));
                }
                SmoothGauge::Kernel
            }
            GaugeKind::Homotopy => {
                let base = match g.base {
                    Some(b) => point(b, "homotopy base")?,
                    None => {
                        let (x2, x3) = self.charge_config()?.centroid();
                        HPoint::new_unchecked(1.0, x2, x3)
                    }
                };
                SmoothGauge::Homotopy { base }
            }
        };
        Ok(GaugeDescriptor {
            smooth,
            strings: self.config.charges.strings.clone(),
        })
    }

    pub fn spec_arc(&self) -> CliResult<Arc<ConeAngleSpec>> {
        Ok(Arc::new(self.cone_angle_spec()?))
    }

    pub fn rays(&self) -> Vec<Ray> {
        match &self.config.checks.gauge_decay {
            Some(d) if !d.rays.is_empty() => d
                .rays
                .iter()
                .map(|r| Ray {
                    label: "configured",
                    origin: HPoint::new_unchecked(r.origin[0], r.origin[1], r.origin[2]),
                    direction: r.direction,
                })
                .collect(),
            _ => conekahler_core::connection::default_rays(),
        }
    }

    /// SHA-256 of the canonical JSON form of the parsed configuration, plus
    /// the contents of any referenced grid file.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(serde_json::to_vec(&self.config).expect("config serialises"));
        if let Some(g) = &self.config.beta.grid {
            if let Ok(bytes) = std::fs::read(self.base_dir.join(g)) {
                h.update(bytes);
            }
        }
        hex(&h.finalize())
    }

    pub fn seed(&self, cli: Option<u64>) -> u64 {
        cli.or(self.config.seed).unwrap_or(0)
    }
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Map from grid name to its configuration, in file order.
pub fn grid_map(config: &Config) -> BTreeMap<&str, &GridConfig> {
    config.grids.iter().map(|g| (g.name.as_str(), g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
id = "flat"
[beta]
constant = 1.0
[charges]
points = []
"#;

    fn parse(text: &str) -> CliResult<Scenario> {
        Scenario::parse(text, Path::new("."))
    }

    #[test]
    fn minimal_config_is_flat() {
        let s = parse(MINIMAL).unwrap();
        assert_eq!(s.cone_angle_spec().unwrap().constant_value(), Some(1.0));
        assert!(s.charge_config().unwrap().is_empty());
        assert_eq!(s.config.charges.kappa, 2.0 * std::f64::consts::PI);
        assert_eq!(s.config.tolerances, Tolerances::default());
    }

    #[test]
    fn beta_and_charges_are_required() {
        assert!(parse("id = \"x\"\n[charges]\npoints = []\n").is_err());
        assert!(parse("id = \"x\"\n[beta]\nconstant = 1.0\n").is_err());
        assert!(parse("id = \"x\"\n[beta]\nconstant = 1.0\n[charges]\nkappa = 1.0\n").is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = format!("{MINIMAL}\n[tolerances]\ncone = 1.0\n");
        assert!(matches!(parse(&text), Err(CliError::Config(_))));
        assert!(parse("id = \"x\"\nbogus = 1\n[beta]\nconstant = 1.0\n[charges]\npoints = []\n").is_err());
    }

    #[test]
    fn charges_must_be_off_the_boundary_and_distinct() {
        let on_boundary = MINIMAL.replace("points = []", "points = [[0.0, 1.0, 0.0]]");
        assert!(parse(&on_boundary).is_err());
        let duplicate = MINIMAL.replace("points = []", "points = [[1.0, 0.0, 0.0], [1.0, 0.0, 0.0]]");
        assert!(parse(&duplicate).is_err());
        let ok = MINIMAL.replace("points = []", "points = [[1.0, 0.0, 0.0], [2.0, 0.0, 0.0]]");
        assert!(parse(&ok).is_ok());
        let blowup = MINIMAL.replace("points = []", "blowups = [{ foot = [0.5, 0.0], height = 1.0 }]");
        let s = parse(&blowup).unwrap();
        assert_eq!(s.charge_config().unwrap().points()[0], HPoint::new(1.0, 0.5, 0.0).unwrap());
        let both = MINIMAL.replace("points = []", "points = []\nblowups = []");
        assert!(parse(&both).is_err());
    }

    #[test]
    fn non_positive_beta_is_rejected() {
        let bad = MINIMAL.replace("constant = 1.0", "expression = \"1 - 2*exp(-x2^2-x3^2)\"\nat_infinity = 1.0");
        assert!(parse(&bad).is_err());
        let both = MINIMAL.replace("constant = 1.0", "constant = 1.0\nexpression = \"1\"");
        assert!(parse(&both).is_err());
    }

    #[test]
    fn hash_ignores_formatting() {
        let a = parse(MINIMAL).unwrap().hash();
        let b = parse(&MINIMAL.replace("constant = 1.0", "constant   =   1.0   # comment")).unwrap().hash();
        assert_eq!(a, b);
        let c = parse(&MINIMAL.replace("constant = 1.0", "constant = 0.7")).unwrap().hash();
        assert_ne!(a, c);
    }
}
