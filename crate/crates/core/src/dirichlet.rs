//! Harmonic extension of `β⁻¹` from the sphere at infinity.
//!
//! The extension is the Poisson integral of the hyperbolic Laplacian. In the
//! half-space model the kernel is `K(z, y) = z² / (π (z² + |y|²)²)`, a
//! probability density in `y ∈ R²` for every height `z`. We integrate in polar
//! coordinates about the foot point `x` of the evaluation point,
//!
//! ```text
//! u(z, x) = f(x) + ∫∫ (f(x + R e(φ)) − f(x)) K(z, R) R² d(ln R) dφ,
//! ```
//!
//! with Gauss–Legendre panels in `ln R` and the trapezoid rule in `φ`. The
//! node layout moves smoothly with the evaluation point, so the quadrature
//! value is itself a smooth function and survives finite differencing. The
//! same sweep yields the gradient (kernel-differentiated) and a primitive of
//! `∗_h du` built from the closed-form primitive of each kernel.
//!
//! High above the boundary the kernel is broad, and the rings are centred on
//! the origin instead, with the data taken relative to its value at `∞`.
//!
//! The ball-model Poisson kernel with a Lebedev rule is kept as an
//! independent route for cross-checks away from the sphere at infinity.

use std::f64::consts::PI;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cone_angle::{BoundaryStats, ConeAngleSpec};
use crate::error::{Error, Result};
use crate::hyperbolic::{laplacian_h_with_step, BallPoint, FnField, HPoint, OneForm3, ScalarField};
use crate::quadrature::{gauss_legendre_on, lebedev};

/// Points with `z ≥ FAR_HEIGHT · L` and `z ≥ |x| / FAR_SLOPE` are integrated
/// on rings about the origin instead of the foot point.
const FAR_HEIGHT: f64 = 2.0;
const FAR_SLOPE: f64 = 8.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuadratureSettings {
    /// Trapezoid nodes on each ring.
    pub angular_nodes: usize,
    /// Number of Gauss–Legendre panels in `ln R`.
    pub radial_panels: usize,
    pub panel_nodes: usize,
    /// Extent below `ln min(z, L)` covered by the panels (natural-log units).
    pub inner_margin: f64,
    /// Extent above `ln(z + |x| + L)` covered by the panels.
    pub outer_margin: f64,
    /// Target accuracy of [`HarmonicExtension::solve`].
    pub tolerance: f64,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self {
            angular_nodes: 96,
            radial_panels: 48,
            panel_nodes: 12,
            inner_margin: 12.0,
            outer_margin: 10.0,
            tolerance: 1e-8,
        }
    }
}

impl QuadratureSettings {
    /// The rule used to estimate the error of `self`.
    pub fn refined(&self) -> Self {
        Self {
            angular_nodes: 2 * self.angular_nodes,
            radial_panels: 2 * self.radial_panels,
            panel_nodes: self.panel_nodes,
            inner_margin: self.inner_margin + 4.0,
            outer_margin: self.outer_margin + 4.0,
            tolerance: self.tolerance,
        }
    }
}

/// Value, gradient and kernel-gauge primitive of `∗_h du` at one point.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PoissonSweep {
    pub value: f64,
    pub gradient: [f64; 3],
    pub kernel_potential: OneForm3,
}

/// The ball-model Poisson kernel `((1 − |y|²) / |y − ξ|²)²`, normalised so
/// that its mean over the unit sphere is one.
pub fn poisson_weight(y: BallPoint, xi: [f64; 3]) -> f64 {
    let d2 = (y.y1 - xi[0]).powi(2) + (y.y2 - xi[1]).powi(2) + (y.y3 - xi[2]).powi(2);
    ((1.0 - y.norm_sq()) / d2).powi(2)
}

/// The harmonic extension `u_β` of `β⁻¹`.
#[derive(Debug)]
pub struct HarmonicExtension {
    spec: Arc<ConeAngleSpec>,
    settings: QuadratureSettings,
    panel_rule: Vec<(f64, f64)>,
    angles: Vec<(f64, f64)>,
    stats: BoundaryStats,
}

impl HarmonicExtension {
    pub fn new(spec: Arc<ConeAngleSpec>, settings: QuadratureSettings) -> Result<Self> {
        if settings.angular_nodes < 8 || settings.radial_panels == 0 || settings.panel_nodes == 0 {
            return Err(Error::Geometry(format!("quadrature settings too small: {settings:?}")));
        }
        let stats = spec.validate()?;
        Ok(Self::with_stats(spec, settings, stats))
    }

    fn with_stats(spec: Arc<ConeAngleSpec>, settings: QuadratureSettings, stats: BoundaryStats) -> Self {
        let panel_rule = gauss_legendre_on(settings.panel_nodes, 0.0, 1.0);
        let n = settings.angular_nodes;
        let angles = (0..n)
            .map(|j| {
                let phi = 2.0 * PI * j as f64 / n as f64;
                (phi.cos(), phi.sin())
            })
            .collect();
        Self {
            spec,
            settings,
            panel_rule,
            angles,
            stats,
        }
    }

    pub fn spec(&self) -> &ConeAngleSpec {
        &self.spec
    }

    pub fn spec_arc(&self) -> Arc<ConeAngleSpec> {
        Arc::clone(&self.spec)
    }

    pub fn settings(&self) -> &QuadratureSettings {
        &self.settings
    }

    pub fn stats(&self) -> &BoundaryStats {
        &self.stats
    }

    /// Boundary value `β⁻¹(x)` below `p`.
    pub fn boundary_value(&self, p: HPoint) -> f64 {
        self.spec.inv_beta_at(p.x2, p.x3)
    }

    fn angle_table(&self, factor: usize) -> std::borrow::Cow<'_, [(f64, f64)]> {
        if factor == 1 {
            return std::borrow::Cow::Borrowed(&self.angles);
        }
        let n = self.angles.len() * factor;
        std::borrow::Cow::Owned(
            (0..n)
                .map(|j| {
                    let phi = 2.0 * PI * j as f64 / n as f64;
                    (phi.cos(), phi.sin())
                })
                .collect(),
        )
    }

    pub fn sweep(&self, p: HPoint) -> PoissonSweep {
        if let Some(c) = self.spec.constant_value() {
            return PoissonSweep {
                value: 1.0 / c,
                ..PoissonSweep::default()
            };
        }
        let l = self.spec.feature_radius();
        let rx = p.horizontal_radius();
        if p.z >= FAR_HEIGHT * l && p.z * FAR_SLOPE >= rx {
            self.sweep_about_origin(p)
        } else {
            self.sweep_about_foot(p)
        }
    }

    fn radial_nodes(&self, lo: f64, hi: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let width = (hi - lo) / self.settings.radial_panels as f64;
        (0..self.settings.radial_panels).flat_map(move |k| {
            let start = lo + width * k as f64;
            self.panel_rule
                .iter()
                .map(move |&(t, w)| ((start + width * t).exp(), width * w))
        })
    }

    /// Rings centred on the foot point `x`, data taken relative to `β⁻¹(x)`.
    fn sweep_about_foot(&self, p: HPoint) -> PoissonSweep {
        let spec = &*self.spec;
        let (z, x2, x3) = (p.z, p.x2, p.x3);
        let z2 = z * z;
        let l = spec.feature_radius();
        let rx = p.horizontal_radius();
        let f0 = spec.inv_beta_at(x2, x3);
        let f_inf = 1.0 / spec.beta_at_infinity();

        let lo = -(1.0 / z + 1.0 / l).ln() - self.settings.inner_margin;
        let hi = (z + (rx * rx + l * l).sqrt()).ln() + self.settings.outer_margin;
        // rings of radius ~|x| cross the region where β varies under an
        // angle ~L/|x|; refine when their kernel weight is not negligible
        let far_weight = 2.0 * z2 / (z2 + rx * rx) * l / (l + rx);
        let factor = if far_weight > 1e-13 {
            (rx / (2.0 * l)).log2().ceil().clamp(0.0, 5.0) as u32
        } else {
            0
        };
        let angles = self.angle_table(1 << factor);
        let inv_n = 1.0 / angles.len() as f64;

        let (mut val, mut dz, mut dx2, mut dx3, mut a2, mut a3) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        for (r, wt) in self.radial_nodes(lo, hi) {
            let (mut s0, mut sc, mut ss) = (0.0, 0.0, 0.0);
            for &(c, s) in angles.iter() {
                let df = spec.inv_beta_at(x2 + r * c, x3 + r * s) - f0;
                s0 += df;
                sc += df * c;
                ss += df * s;
            }
            s0 *= inv_n;
            sc *= inv_n;
            ss *= inv_n;
            let r2 = r * r;
            let q = z2 + r2;
            let q2 = q * q;
            let q3 = q2 * q;
            val += wt * 2.0 * z2 * r2 / q2 * s0;
            dz += wt * 4.0 * z * (r2 - z2) * r2 / q3 * s0;
            let kx = wt * 8.0 * z2 * r2 * r / q3;
            dx2 += kx * sc;
            dx3 += kx * ss;
            let ka = wt * 2.0 * r2 * r / q2;
            a2 -= ka * ss;
            a3 += ka * sc;
        }
        // beyond the outermost ring the data is replaced by its value at ∞
        let rh2 = (2.0 * hi).exp();
        let qh = z2 + rh2;
        let d_inf = f_inf - f0;
        val += d_inf * z2 / qh;
        dz += d_inf * 2.0 * z * rh2 / (qh * qh);

        PoissonSweep {
            value: f0 + val,
            gradient: [dz, dx2, dx3],
            kernel_potential: OneForm3([0.0, a2, a3]),
        }
    }

    /// Rings centred on the origin, data taken relative to `β⁻¹(∞)`. Used
    /// high above the boundary, where the kernel is broad and smooth.
    fn sweep_about_origin(&self, p: HPoint) -> PoissonSweep {
        let spec = &*self.spec;
        let (z, x2, x3) = (p.z, p.x2, p.x3);
        let z2 = z * z;
        let l = spec.feature_radius();
        let rx = p.horizontal_radius();
        let f_inf = 1.0 / spec.beta_at_infinity();

        let lo = l.ln() - self.settings.inner_margin - 2.0;
        let hi = (z + rx + l).ln() + self.settings.outer_margin;
        let factor = (rx / z).log2().ceil().clamp(0.0, 4.0) as u32;
        let angles = self.angle_table(1 << factor);
        let inv_n = 1.0 / angles.len() as f64;

        let (mut val, mut dz, mut dx2, mut dx3, mut a2, mut a3) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        for (r, wt) in self.radial_nodes(lo, hi) {
            let (mut s_val, mut s_dz, mut s_d2, mut s_d3, mut s_a2, mut s_a3) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
            for &(c, s) in angles.iter() {
                let g = spec.inv_beta_at(r * c, r * s) - f_inf;
                let y2 = x2 - r * c;
                let y3 = x3 - r * s;
                let y2sq = y2 * y2 + y3 * y3;
                let q = z2 + y2sq;
                let q2 = q * q;
                let gq3 = g / (q2 * q);
                s_val += g / q2;
                s_dz += gq3 * (y2sq - z2);
                s_d2 += gq3 * y2;
                s_d3 += gq3 * y3;
                let gq2 = g / q2;
                s_a2 += gq2 * y3;
                s_a3 -= gq2 * y2;
            }
            // ∫ dφ / π = 2 · mean
            let k = wt * r * r * 2.0 * inv_n;
            val += k * z2 * s_val;
            dz += k * 2.0 * z * s_dz;
            dx2 -= k * 4.0 * z2 * s_d2;
            dx3 -= k * 4.0 * z2 * s_d3;
            a2 += k * s_a2;
            a3 += k * s_a3;
        }

        PoissonSweep {
            value: f_inf + val,
            gradient: [dz, dx2, dx3],
            kernel_potential: OneForm3([0.0, a2, a3]),
        }
    }

    /// Difference between this rule and its refinement at `p`:
    /// `(value error, gradient error)`.
    pub fn estimate_error(&self, p: HPoint) -> (f64, f64) {
        if self.spec.constant_value().is_some() {
            return (0.0, 0.0);
        }
        let fine = Self::with_stats(Arc::clone(&self.spec), self.settings.refined(), self.stats);
        let (a, b) = (self.sweep(p), fine.sweep(p));
        let grad = (0..3)
            .map(|i| (a.gradient[i] - b.gradient[i]).abs())
            .fold(0.0, f64::max);
        ((a.value - b.value).abs(), grad)
    }

    /// `u_β(p)` with an error check against the refined rule.
    pub fn solve(&self, p: HPoint) -> Result<f64> {
        let (err, _) = self.estimate_error(p);
        if err > self.settings.tolerance {
            return Err(Error::Quadrature {
                estimate: err,
                tolerance: self.settings.tolerance,
            });
        }
        Ok(self.sweep(p).value)
    }
}

impl ScalarField for HarmonicExtension {
    fn value(&self, p: HPoint) -> Result<f64> {
        Ok(self.sweep(p).value)
    }

    fn gradient(&self, p: HPoint) -> Result<[f64; 3]> {
        Ok(self.sweep(p).gradient)
    }
}

/// `u_β(p)` with default quadrature settings.
pub fn solve_u_beta(spec: &ConeAngleSpec, p: HPoint) -> Result<f64> {
    HarmonicExtension::new(Arc::new(spec.clone()), QuadratureSettings::default())?.solve(p)
}

/// The Poisson integral in the ball model evaluated with a Lebedev rule.
pub fn lebedev_poisson(spec: &ConeAngleSpec, y: BallPoint, degree: u32) -> Result<f64> {
    let rule = lebedev(degree)?;
    Ok(rule.mean(|xi| poisson_weight(y, xi) * spec.inv_beta_on_sphere(xi)))
}

/// Barrier constant `C` for `φ± = β⁻¹ ± C z` on the collar `z ≤ ε`.
#[derive(Clone, Debug, Serialize)]
pub struct BarrierCertificate {
    pub constant: f64,
    pub collar_width: f64,
    /// `(max β⁻¹ − min β⁻¹) / ε`; the constant always exceeds it.
    pub oscillation_bound: f64,
    pub enlargements: usize,
    /// Smallest `Δ_h φ₊` seen on the validation set (must be ≥ 0).
    pub min_super_margin: f64,
    /// Largest `Δ_h φ₋` seen on the validation set (must be ≤ 0).
    pub max_sub_margin: f64,
    pub samples: usize,
}

/// Uniform samples of the collar `0 < z ≤ ε` over the square `|x_i| ≤ half_width`.
pub fn collar_samples(eps: f64, half_width: f64, n: usize, seed: u64) -> Vec<HPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let z = eps * (1.0 - rng.gen::<f64>());
            let x2 = rng.gen_range(-half_width..=half_width);
            let x3 = rng.gen_range(-half_width..=half_width);
            HPoint::new_unchecked(z, x2, x3)
        })
        .collect()
}

fn barrier_margins(spec: &ConeAngleSpec, c: f64, validation: &[HPoint]) -> Result<(f64, f64)> {
    let plus = FnField(|q: HPoint| spec.inv_beta_at(q.x2, q.x3) + c * q.z);
    let minus = FnField(|q: HPoint| spec.inv_beta_at(q.x2, q.x3) - c * q.z);
    let mut min_super = f64::INFINITY;
    let mut max_sub = f64::NEG_INFINITY;
    for &q in validation {
        let h = (0.5 * q.z).min(1e-2 * spec.feature_radius());
        min_super = min_super.min(laplacian_h_with_step(&plus, q, h)?);
        max_sub = max_sub.max(laplacian_h_with_step(&minus, q, h)?);
    }
    Ok((min_super, max_sub))
}

/// Finds `C > (max β⁻¹ − min β⁻¹) / ε` such that `Δ_h φ₊ ≥ 0 ≥ Δ_h φ₋`
/// (positive Laplacian) at every validation point, doubling `C` until the
/// sign conditions hold.
pub fn barrier_constant(
    spec: &ConeAngleSpec,
    stats: &BoundaryStats,
    eps: f64,
    validation: &[HPoint],
) -> Result<BarrierCertificate> {
    if !(eps > 0.0) {
        return Err(Error::Geometry(format!("collar width {eps} must be positive")));
    }
    if let Some(q) = validation.iter().find(|q| q.z > eps || q.z <= 0.0) {
        return Err(Error::Geometry(format!("validation point {q} is outside the collar")));
    }
    const MAX_ENLARGEMENTS: usize = 60;
    let bound = stats.oscillation() / eps;
    let mut c = (bound * (1.0 + 1e-3)).max(1e-9);
    for enlargements in 0..=MAX_ENLARGEMENTS {
        let (min_super, max_sub) = barrier_margins(spec, c, validation)?;
        if min_super >= 0.0 && max_sub <= 0.0 {
            return Ok(BarrierCertificate {
                constant: c,
                collar_width: eps,
                oscillation_bound: bound,
                enlargements,
                min_super_margin: min_super,
                max_sub_margin: max_sub,
                samples: validation.len(),
            });
        }
        c *= 2.0;
    }
    Err(Error::BarrierCertification {
        attempts: MAX_ENLARGEMENTS,
        constant: c,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BarrierViolation {
    pub point: HPoint,
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BarrierReport {
    pub samples: usize,
    pub min_margin: f64,
    /// `sup |u_β − β⁻¹| / z`, the measured bound on the remainder `v`.
    pub remainder_bound: f64,
    pub violations: Vec<BarrierViolation>,
    pub passed: bool,
}

/// Checks `β⁻¹ − C z ≤ u_β ≤ β⁻¹ + C z` at collar samples.
pub fn check_barriers(
    ext: &HarmonicExtension,
    certificate: &BarrierCertificate,
    samples: &[HPoint],
) -> Result<BarrierReport> {
    let tol = ext.settings().tolerance;
    let c = certificate.constant;
    let mut report = BarrierReport {
        samples: samples.len(),
        min_margin: f64::INFINITY,
        remainder_bound: 0.0,
        violations: Vec::new(),
        passed: true,
    };
    let values: Vec<f64> = {
        use rayon::prelude::*;
        samples.par_iter().map(|&q| ext.sweep(q).value).collect()
    };
    for (&q, &u) in samples.iter().zip(&values) {
        if q.z > certificate.collar_width * (1.0 + 1e-12) {
            return Err(Error::Geometry(format!("sample {q} is outside the collar")));
        }
        let b = ext.boundary_value(q);
        let (lower, upper) = (b - c * q.z, b + c * q.z);
        let margin = (u - lower).min(upper - u);
        report.min_margin = report.min_margin.min(margin);
        report.remainder_bound = report.remainder_bound.max((u - b).abs() / q.z);
        if margin < -tol {
            report.passed = false;
            report.violations.push(BarrierViolation {
                point: q,
                value: u,
                lower,
                upper,
            });
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct MaxPrincipleReport {
    pub samples: usize,
    pub min_value: f64,
    pub max_value: f64,
    pub min_inv_beta: f64,
    pub max_inv_beta: f64,
    pub violations: usize,
    pub passed: bool,
}

/// Checks `min β⁻¹ − tol ≤ u_β ≤ max β⁻¹ + tol` at the samples.
pub fn check_max_principle(ext: &HarmonicExtension, samples: &[HPoint], tol: f64) -> MaxPrincipleReport {
    use rayon::prelude::*;
    let values: Vec<f64> = samples.par_iter().map(|&q| ext.sweep(q).value).collect();
    let stats = ext.stats();
    let (lo, hi) = (stats.min_inv_beta - tol, stats.max_inv_beta + tol);
    let violations = values.iter().filter(|v| **v < lo || **v > hi).count();
    MaxPrincipleReport {
        samples: samples.len(),
        min_value: values.iter().cloned().fold(f64::INFINITY, f64::min),
        max_value: values.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        min_inv_beta: stats.min_inv_beta,
        max_inv_beta: stats.max_inv_beta,
        violations,
        passed: violations == 0,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HarmonicityReport {
    pub points: usize,
    /// Step as a fraction of the local height `z`.
    pub relative_step: f64,
    pub max_residual: f64,
    pub max_residual_half_step: f64,
    pub order: Option<f64>,
}

/// Finite-difference harmonicity residual at step `s·z` and `s·z/2`, with the
/// observed convergence order.
pub fn harmonicity_check<F: ScalarField + ?Sized>(
    field: &F,
    points: &[HPoint],
    relative_step: f64,
) -> Result<HarmonicityReport> {
    let mut r1: f64 = 0.0;
    let mut r2: f64 = 0.0;
    for &p in points {
        r1 = r1.max(laplacian_h_with_step(field, p, relative_step * p.z)?.abs());
        r2 = r2.max(laplacian_h_with_step(field, p, 0.5 * relative_step * p.z)?.abs());
    }
    let order = (r2 > 0.0 && r1 > 1e-13).then(|| (r1 / r2).log2());
    Ok(HarmonicityReport {
        points: points.len(),
        relative_step,
        max_residual: r1,
        max_residual_half_step: r2,
        order,
    })
}
