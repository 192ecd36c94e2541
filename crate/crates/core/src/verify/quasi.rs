//! Comparison of a metric with the warped product `g_β` in the asymptotic region.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperbolic::HPoint;
use crate::metric::{relative_eigenvalues, MetricField, ModelMetric};
use crate::potential::ChargeConfig;

use super::cone::CHARGE_LINE_CLEARANCE;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuasiIsometrySettings {
    /// `Z₀`: high samples have `z ≥ Z₀ · 2^k` on shell `k`.
    pub far_height: f64,
    /// `R₀`: wide samples have `|x| ≥ R₀ · 2^k` on shell `k`.
    pub far_radius: f64,
    /// Lowest height of wide samples.
    pub min_height: f64,
    pub shells: usize,
    /// Samples per shell; the enlarged run doubles this.
    pub samples_per_shell: usize,
}

impl Default for QuasiIsometrySettings {
    fn default() -> Self {
        Self {
            far_height: 4.0,
            far_radius: 8.0,
            min_height: 0.01,
            shells: 4,
            samples_per_shell: 16,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuasiIsometryReport {
    pub samples: usize,
    /// Smallest `c` with every relative eigenvalue in `[1/c, c]`.
    pub constant: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// `c` over the doubled sample set.
    pub constant_enlarged: f64,
    /// `|c_enlarged − c|`.
    pub change: f64,
    /// `c` restricted to each shell, innermost first.
    pub shell_constants: Vec<f64>,
}

/// Far samples on `shells` dyadic shells; the first `n` points of each shell
/// do not depend on `n`.
pub fn far_samples(settings: &QuasiIsometrySettings, charges: &ChargeConfig, per_shell: usize, seed: u64) -> Vec<Vec<HPoint>> {
    (0..settings.shells)
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64 + 1);
            let scale = 2f64.powi(k as i32);
            let mut pts = Vec::with_capacity(per_shell);
            while pts.len() < per_shell {
                let p = if pts.len() % 2 == 0 {
                    let z = settings.far_height * scale * (1.0 + rng.gen::<f64>());
                    let r = settings.far_height * scale * rng.gen::<f64>().sqrt();
                    let t = rng.gen_range(0.0..std::f64::consts::TAU);
                    HPoint::new_unchecked(z, r * t.cos(), r * t.sin())
                } else {
                    let r = settings.far_radius * scale * (1.0 + rng.gen::<f64>());
                    let t = rng.gen_range(0.0..std::f64::consts::TAU);
                    let lo = settings.min_height.ln();
                    let z = (lo * (1.0 - rng.gen::<f64>())).exp();
                    HPoint::new_unchecked(z, r * t.cos(), r * t.sin())
                };
                let clear = charges
                    .points()
                    .iter()
                    .all(|c| p.horizontal_distance(*c) >= CHARGE_LINE_CLEARANCE);
                if clear {
                    pts.push(p);
                }
            }
            pts
        })
        .collect()
}

fn constant_of(eigs: &[[f64; 4]]) -> (f64, f64, f64) {
    let lo = eigs.iter().fold(f64::INFINITY, |m, e| m.min(e[0]));
    let hi = eigs.iter().fold(0.0_f64, |m, e| m.max(e[3]));
    (hi.max(1.0 / lo), lo, hi)
}

/// Relative eigenvalues of `field` against `g_β` on far samples.
pub fn quasi_isometry_check(
    field: &dyn MetricField,
    model: &ModelMetric,
    charges: &ChargeConfig,
    settings: &QuasiIsometrySettings,
    seed: u64,
) -> Result<QuasiIsometryReport> {
    if settings.shells == 0 || settings.samples_per_shell == 0 {
        return Err(Error::Geometry("quasi-isometry check needs at least one sample".into()));
    }
    let n = settings.samples_per_shell;
    let shells = far_samples(settings, charges, 2 * n, seed);
    let eigs: Vec<Vec<[f64; 4]>> = shells
        .par_iter()
        .map(|pts| {
            pts.iter()
                .map(|&p| Ok(relative_eigenvalues(&field.metric(p)?, model.diagonal(p))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let base: Vec<[f64; 4]> = eigs.iter().flat_map(|e| e[..n].iter().copied()).collect();
    let all: Vec<[f64; 4]> = eigs.iter().flatten().copied().collect();
    let (constant, lambda_min, lambda_max) = constant_of(&base);
    let (constant_enlarged, _, _) = constant_of(&all);
    if !constant.is_finite() || !constant_enlarged.is_finite() {
        return Err(Error::Geometry("relative eigenvalues are not finite".into()));
    }
    Ok(QuasiIsometryReport {
        samples: base.len(),
        constant,
        lambda_min,
        lambda_max,
        constant_enlarged,
        change: (constant_enlarged - constant).abs(),
        shell_constants: eigs.iter().map(|e| constant_of(&e[..n]).0).collect(),
    })
}
