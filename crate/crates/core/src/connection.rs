//! Curvature `F = ∗_h dV`, its fluxes, and connection potentials `A` with `dA = F`.
//!
//! Each charge contributes a closed-form monopole potential with a Dirac
//! string along the vertical line through it (below the charge by default).
//! The smooth part from `u_β` is either the kernel gauge (the Poisson
//! integral of the closed-form primitive of each kernel's curvature) or the
//! straight-line homotopy primitive from a base point.

use std::f64::consts::PI;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::dirichlet::{HarmonicExtension, PoissonSweep};
use crate::error::{Error, Result};
use crate::hyperbolic::{geodesic_sphere, hyp_distance, HPoint, OneForm3, TwoForm3};
use crate::potential::{Potential, PotentialSample};
use crate::quadrature::{gauss_legendre_on, lebedev};

/// Points with `ρ / z` below this are treated as lying on a Dirac string.
pub const STRING_DISTANCE: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StringDirection {
    /// Along the vertical segment from the charge toward `z = 0`.
    Down,
    /// Along the vertical ray from the charge toward `z = ∞`.
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum SmoothGauge {
    Kernel,
    Homotopy { base: HPoint },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaugeDescriptor {
    pub smooth: SmoothGauge,
    /// One entry per charge; missing entries default to [`StringDirection::Down`].
    pub strings: Vec<StringDirection>,
}

impl Default for GaugeDescriptor {
    fn default() -> Self {
        Self {
            smooth: SmoothGauge::Kernel,
            strings: Vec::new(),
        }
    }
}

impl GaugeDescriptor {
    /// Homotopy gauge based at height one above the given foot point.
    pub fn homotopy_above(foot: (f64, f64)) -> Self {
        Self {
            smooth: SmoothGauge::Homotopy {
                base: HPoint::new_unchecked(1.0, foot.0, foot.1),
            },
            strings: Vec::new(),
        }
    }

    pub fn string(&self, index: usize) -> StringDirection {
        self.strings.get(index).copied().unwrap_or(StringDirection::Down)
    }
}

/// `∗_h dV` at `p`, from the exact gradient of `V`.
pub fn curvature_form(v: &Potential, p: HPoint) -> Result<TwoForm3> {
    Ok(curvature_from_gradient(v.sample(p)?.gradient, p))
}

fn curvature_from_gradient(g: [f64; 3], p: HPoint) -> TwoForm3 {
    TwoForm3([g[0] / p.z, g[1] / p.z, g[2] / p.z])
}

/// Monopole potential of a charge at `q` carrying flux `kappa`, regular off
/// the string. Points on the string give [`Error::StringProximity`].
pub fn monopole_potential(
    p: HPoint,
    q: HPoint,
    kappa: f64,
    string: StringDirection,
    index: usize,
) -> Result<OneForm3> {
    let xi2 = p.x2 - q.x2;
    let xi3 = p.x3 - q.x3;
    let rho2 = xi2 * xi2 + xi3 * xi3;
    let c2 = q.z * q.z;
    let m = p.z * p.z + rho2 - c2;
    let d = (m * m + 4.0 * rho2 * c2).sqrt();
    let on_string_side = match string {
        StringDirection::Down => m <= 0.0,
        StringDirection::Up => m >= 0.0,
    };
    if on_string_side && rho2.sqrt() < STRING_DISTANCE * p.z {
        return Err(Error::StringProximity {
            index,
            location: p,
            distance: rho2.sqrt() / p.z,
        });
    }
    if d == 0.0 {
        return Err(Error::Pole {
            index,
            location: p,
            distance: 0.0,
        });
    }
    // Ψ / ρ², with Ψ = −κ/4π (1 − cos ϑ) or κ/4π (1 + cos ϑ), cos ϑ = m / D
    let k = kappa / (4.0 * PI);
    let psi_over_rho2 = match string {
        StringDirection::Down => {
            if m > 0.0 {
                -k * 4.0 * c2 / (d * (d + m))
            } else {
                -k * (d - m) / (d * rho2)
            }
        }
        StringDirection::Up => {
            if m < 0.0 {
                k * 4.0 * c2 / (d * (d - m))
            } else {
                k * (d + m) / (d * rho2)
            }
        }
    };
    Ok(OneForm3([0.0, -psi_over_rho2 * xi3, psi_over_rho2 * xi2]))
}

/// A connection potential `A` for `∗_h dV` in a fixed gauge.
#[derive(Debug, Clone)]
pub struct Connection {
    potential: Arc<Potential>,
    gauge: GaugeDescriptor,
    homotopy_nodes: Vec<(f64, f64)>,
}

impl Connection {
    pub const HOMOTOPY_NODES: usize = 24;

    pub fn new(potential: Arc<Potential>, gauge: GaugeDescriptor) -> Result<Self> {
        let k = potential.charges().len();
        if gauge.strings.len() > k {
            return Err(Error::Charges(format!(
                "{} string directions given for {k} charges",
                gauge.strings.len()
            )));
        }
        if let SmoothGauge::Homotopy { base } = gauge.smooth {
            HPoint::new(base.z, base.x2, base.x3)?;
        }
        Ok(Self {
            potential,
            gauge,
            homotopy_nodes: gauss_legendre_on(Self::HOMOTOPY_NODES, 0.0, 1.0),
        })
    }

    pub fn potential(&self) -> &Potential {
        &self.potential
    }

    pub fn gauge(&self) -> &GaugeDescriptor {
        &self.gauge
    }

    /// `A` at `p`.
    pub fn a(&self, p: HPoint) -> Result<OneForm3> {
        let s = self.potential.sample(p)?;
        self.a_with(p, &s)
    }

    /// `A` at `p`, reusing an already computed sample of `V`.
    pub fn a_with(&self, p: HPoint, sample: &PotentialSample) -> Result<OneForm3> {
        Ok(self.monopole_part(p)? + self.smooth_part(p, &sample.sweep))
    }

    pub fn monopole_part(&self, p: HPoint) -> Result<OneForm3> {
        let charges = self.potential.charges();
        let mut a = OneForm3::default();
        for (i, &q) in charges.points().iter().enumerate() {
            a = a + monopole_potential(p, q, charges.kappa(), self.gauge.string(i), i)?;
        }
        Ok(a)
    }

    /// Primitive of `∗_h du_β` in the chosen smooth gauge.
    pub fn smooth_part(&self, p: HPoint, sweep: &PoissonSweep) -> OneForm3 {
        match self.gauge.smooth {
            SmoothGauge::Kernel => sweep.kernel_potential,
            SmoothGauge::Homotopy { base } => homotopy_primitive(self.potential.harmonic(), base, p, &self.homotopy_nodes),
        }
    }

    pub fn curvature(&self, p: HPoint) -> Result<TwoForm3> {
        curvature_form(&self.potential, p)
    }
}

/// `A(p) = ∫₀¹ s B(p₀ + s(p − p₀)) × (p − p₀) ds` for `B = ∇u / z`.
fn homotopy_primitive(u: &HarmonicExtension, base: HPoint, p: HPoint, nodes: &[(f64, f64)]) -> OneForm3 {
    if u.spec().constant_value().is_some() {
        return OneForm3::default();
    }
    let d = [p.z - base.z, p.x2 - base.x2, p.x3 - base.x3];
    let mut a = [0.0; 3];
    for &(s, w) in nodes {
        let q = HPoint::new_unchecked(base.z + s * d[0], base.x2 + s * d[1], base.x3 + s * d[2]);
        let g = u.sweep(q).gradient;
        let b = [g[0] / q.z, g[1] / q.z, g[2] / q.z];
        let cross = [
            b[1] * d[2] - b[2] * d[1],
            b[2] * d[0] - b[0] * d[2],
            b[0] * d[1] - b[1] * d[0],
        ];
        for k in 0..3 {
            a[k] += w * s * cross[k];
        }
    }
    OneForm3(a)
}

#[derive(Clone, Debug, Serialize)]
pub struct FluxReport {
    pub center: HPoint,
    pub radius: f64,
    pub degree: u32,
    /// `−∮ ∗_h dV` over the sphere, equal to `κ` per enclosed charge.
    pub enclosed_flux: f64,
    pub charges_inside: usize,
    pub expected: f64,
    pub error_estimate: f64,
}

/// Charges nearer than this (hyperbolic) to the sphere violate the precondition.
pub const FLUX_CLEARANCE: f64 = 1e-2;

fn sphere_flux(v: &Potential, center: HPoint, radius: f64, degree: u32) -> Result<f64> {
    use rayon::prelude::*;
    let rule = lebedev(degree)?;
    let (c, r) = geodesic_sphere(center, radius);
    let terms: Vec<Result<f64>> = rule
        .points
        .par_iter()
        .zip(&rule.weights)
        .map(|(n, w)| {
            let p = HPoint::new_unchecked(c.z + r * n[0], c.x2 + r * n[1], c.x3 + r * n[2]);
            let g = v.sample(p)?.gradient;
            Ok(w * (g[0] * n[0] + g[1] * n[1] + g[2] * n[2]) / p.z)
        })
        .collect();
    let mut mean = 0.0;
    for t in terms {
        mean += t?;
    }
    Ok(-4.0 * PI * r * r * mean)
}

/// Flux of `F` through the geodesic sphere of the given radius, reported as
/// enclosed charge. The error estimate compares against the next lower rule.
pub fn flux(v: &Potential, center: HPoint, radius: f64, degree: u32, tolerance: f64) -> Result<FluxReport> {
    let charges = v.charges();
    let mut inside = 0;
    for (i, &q) in charges.points().iter().enumerate() {
        let d = hyp_distance(q, center);
        if (d - radius).abs() < FLUX_CLEARANCE {
            return Err(Error::Geometry(format!(
                "charge {i} at {q} lies within {FLUX_CLEARANCE} of the sphere"
            )));
        }
        if d < radius {
            inside += 1;
        }
    }
    let degrees = crate::quadrature::LEBEDEV_DEGREES;
    let pos = degrees
        .iter()
        .position(|&d| d == degree)
        .ok_or_else(|| Error::Geometry(format!("no Lebedev rule of degree {degree}")))?;
    if pos == 0 {
        return Err(Error::Geometry("flux needs a rule above the lowest degree".into()));
    }
    let fine = sphere_flux(v, center, radius, degree)?;
    let coarse = sphere_flux(v, center, radius, degrees[pos - 1])?;
    let error_estimate = (fine - coarse).abs();
    if error_estimate > tolerance {
        return Err(Error::Quadrature {
            estimate: error_estimate,
            tolerance,
        });
    }
    Ok(FluxReport {
        center,
        radius,
        degree,
        enclosed_flux: fine,
        charges_inside: inside,
        expected: inside as f64 * charges.kappa(),
        error_estimate,
    })
}

/// A horizontal circle `{z} × {|x − axis| = radius}`, traversed
/// counter-clockwise in the `(x2, x3)` plane.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct HorizontalCircle {
    pub z: f64,
    pub axis: (f64, f64),
    pub radius: f64,
}

/// `∮ A` over the circle with the trapezoid rule on `n` nodes.
pub fn loop_integral(conn: &Connection, circle: HorizontalCircle, n: usize) -> Result<f64> {
    let mut sum = 0.0;
    for j in 0..n {
        let phi = 2.0 * PI * j as f64 / n as f64;
        let (c, s) = (phi.cos(), phi.sin());
        let p = HPoint::new(circle.z, circle.axis.0 + circle.radius * c, circle.axis.1 + circle.radius * s)?;
        let a = conn.a(p)?;
        sum += circle.radius * (-s * a.0[1] + c * a.0[2]);
    }
    Ok(sum * 2.0 * PI / n as f64)
}

/// `∫ F` over the flat disk bounded by the circle, oriented by `dx2 ∧ dx3`.
pub fn disk_flux(v: &Potential, circle: HorizontalCircle, radial_nodes: usize, angular_nodes: usize) -> Result<f64> {
    let rule = gauss_legendre_on(radial_nodes, 0.0, circle.radius);
    let mut sum = 0.0;
    for &(r, w) in &rule {
        let mut ring = 0.0;
        for j in 0..angular_nodes {
            let phi = 2.0 * PI * j as f64 / angular_nodes as f64;
            let p = HPoint::new(circle.z, circle.axis.0 + r * phi.cos(), circle.axis.1 + r * phi.sin())?;
            ring += curvature_form(v, p)?.0[0];
        }
        sum += w * r * ring * 2.0 * PI / angular_nodes as f64;
    }
    Ok(sum)
}

/// A ray `origin + t · direction` with `t` on a geometric ladder.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Ray {
    pub label: &'static str,
    pub origin: HPoint,
    pub direction: [f64; 3],
}

impl Ray {
    pub fn at(&self, t: f64) -> HPoint {
        HPoint::new_unchecked(
            self.origin.z + t * self.direction[0],
            self.origin.x2 + t * self.direction[1],
            self.origin.x3 + t * self.direction[2],
        )
    }
}

/// The default ray family: vertical rays above two feet, horizontal rays at
/// two heights, and a diagonal.
pub fn default_rays() -> Vec<Ray> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    vec![
        Ray { label: "vertical at origin", origin: HPoint::new_unchecked(1.0, 0.0, 0.0), direction: [1.0, 0.0, 0.0] },
        Ray { label: "vertical at (1, 1)", origin: HPoint::new_unchecked(1.0, 1.0, 1.0), direction: [1.0, 0.0, 0.0] },
        Ray { label: "horizontal at z = 0.1", origin: HPoint::new_unchecked(0.1, 1.0, 0.0), direction: [0.0, s, s] },
        Ray { label: "horizontal at z = 1", origin: HPoint::new_unchecked(1.0, 1.0, 0.0), direction: [0.0, 1.0, 0.0] },
        Ray { label: "diagonal", origin: HPoint::new_unchecked(1.0, 1.0, 0.0), direction: [s, 0.0, s] },
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct RayProfile {
    pub label: &'static str,
    pub parameters: Vec<f64>,
    pub values: Vec<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecayBoundReport {
    pub rays: Vec<RayProfile>,
    /// Supremum over the first `samples_per_ray` samples of each ray.
    pub constant: f64,
    /// Supremum over twice as many samples, extending each ray.
    pub constant_doubled: f64,
    pub relative_change: f64,
    /// Whether the quantity decreases along every vertical ray.
    pub vertical_decay: bool,
    pub passed: bool,
}

/// `|du_β| ((z + 1)² + x2² + x3²)` with `|du_β|` the Euclidean gradient norm,
/// equal to `z |du_β|_h ((z + 1)² + r²) / z`.
pub fn decay_quantity(u: &HarmonicExtension, p: HPoint) -> f64 {
    let g = u.sweep(p).gradient;
    let norm = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt();
    norm * ((p.z + 1.0).powi(2) + p.x2 * p.x2 + p.x3 * p.x3)
}

/// Checks that the gauge-invariant decay quantity stays bounded along the rays,
/// with its supremum stable (within 20%) when each ray is extended to twice
/// as many samples on the ladder `t = 2^k`.
pub fn check_decay_da(u: &HarmonicExtension, rays: &[Ray], samples_per_ray: usize) -> DecayBoundReport {
    use rayon::prelude::*;
    let n2 = 2 * samples_per_ray;
    let rays_out: Vec<RayProfile> = rays
        .par_iter()
        .map(|ray| {
            let parameters: Vec<f64> = (0..n2).map(|k| if k == 0 { 0.0 } else { 2f64.powi(k as i32 - 1) }).collect();
            let values = parameters.iter().map(|&t| decay_quantity(u, ray.at(t))).collect();
            RayProfile {
                label: ray.label,
                parameters,
                values,
            }
        })
        .collect();
    let sup = |n: usize| {
        rays_out
            .iter()
            .flat_map(|r| r.values[..n].iter().copied())
            .fold(0.0, f64::max)
    };
    let constant = sup(samples_per_ray);
    let constant_doubled = sup(n2);
    let relative_change = if constant > 0.0 {
        (constant_doubled - constant) / constant
    } else {
        0.0
    };
    let vertical_decay = rays
        .iter()
        .zip(&rays_out)
        .filter(|(r, _)| r.direction == [1.0, 0.0, 0.0])
        .all(|(_, p)| {
            let v = &p.values;
            v[v.len() - 1] <= v[v.len() / 2] + 1e-12
        });
    let finite = rays_out.iter().all(|r| r.values.iter().all(|v| v.is_finite()));
    DecayBoundReport {
        passed: finite && relative_change.abs() <= 0.2 && vertical_decay,
        rays: rays_out,
        constant,
        constant_doubled,
        relative_change,
        vertical_decay,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CurvatureIdentityReport {
    pub points: usize,
    /// Difference step as a fraction of the local height.
    pub relative_step: f64,
    /// `max |dA − F|` (Euclidean components) at the step and at half of it.
    pub max_residual: f64,
    pub max_residual_half_step: f64,
    pub order: Option<f64>,
}

/// `dA = F` by central differences of `A` at steps `s·z` and `s·z/2`.
pub fn check_curvature_identity(conn: &Connection, points: &[HPoint], relative_step: f64) -> Result<CurvatureIdentityReport> {
    use crate::hyperbolic::exterior_derivative_one;
    use rayon::prelude::*;
    let rows: Vec<(f64, f64)> = points
        .par_iter()
        .map(|&p| {
            let f = conn.curvature(p)?;
            let r = |h: f64| -> Result<f64> { Ok(exterior_derivative_one(|q| conn.a(q), p, h)?.max_abs_diff(&f)) };
            Ok((r(relative_step * p.z)?, r(0.5 * relative_step * p.z)?))
        })
        .collect::<Result<_>>()?;
    let r1 = rows.iter().fold(0.0_f64, |m, r| m.max(r.0));
    let r2 = rows.iter().fold(0.0_f64, |m, r| m.max(r.1));
    Ok(CurvatureIdentityReport {
        points: points.len(),
        relative_step,
        max_residual: r1,
        max_residual_half_step: r2,
        order: (r2 > 0.0 && r1 > 1e-13).then(|| (r1 / r2).log2()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone_angle::ConeAngleSpec;
    use crate::dirichlet::QuadratureSettings;
    use crate::hyperbolic::exterior_derivative_one;
    use crate::potential::ChargeConfig;

    const K: f64 = ChargeConfig::DEFAULT_KAPPA;

    fn potential(beta: &str, charges: Vec<HPoint>) -> Arc<Potential> {
        let spec = Arc::new(ConeAngleSpec::expression(beta, 1.0).unwrap());
        let ext = Arc::new(HarmonicExtension::new(spec, QuadratureSettings::default()).unwrap());
        Arc::new(Potential::new(ext, ChargeConfig::new(charges, K).unwrap()))
    }

    fn max_curl_residual(conn: &Connection, p: HPoint, h: f64) -> f64 {
        let da = exterior_derivative_one(|q: HPoint| conn.a(q), p, h).unwrap();
        da.max_abs_diff(&conn.curvature(p).unwrap())
    }

    #[test]
    fn monopole_curl_is_the_green_curvature() {
        let q = HPoint::new_unchecked(1.0, 0.2, -0.1);
        let v = potential("1", vec![q]);
        for string in [StringDirection::Down, StringDirection::Up] {
            let conn = Connection::new(
                Arc::clone(&v),
                GaugeDescriptor {
                    smooth: SmoothGauge::Kernel,
                    strings: vec![string],
                },
            )
            .unwrap();
            for p in [
                HPoint::new_unchecked(0.5, 0.7, 0.3),
                HPoint::new_unchecked(2.0, -0.4, 0.1),
                HPoint::new_unchecked(1.2, 0.5, -0.1),
            ] {
                let r = max_curl_residual(&conn, p, 2e-5);
                assert!(r < 1e-7, "{string:?} at {p}: {r:e}");
            }
        }
    }

    #[test]
    fn kernel_gauge_curl_is_the_harmonic_curvature() {
        let v = potential("1 + x2/(1 + x2^2 + x3^2)", vec![]);
        let conn = Connection::new(v, GaugeDescriptor::default()).unwrap();
        for p in [HPoint::new_unchecked(0.3, 0.4, -0.2), HPoint::new_unchecked(1.5, -1.0, 2.0)] {
            let r = max_curl_residual(&conn, p, 1e-4);
            assert!(r < 1e-6, "{p}: {r:e}");
        }
    }

    #[test]
    fn homotopy_gauge_curl_is_the_harmonic_curvature() {
        let v = potential("1 + x2/(1 + x2^2 + x3^2)", vec![]);
        let conn = Connection::new(v, GaugeDescriptor::homotopy_above((0.0, 0.0))).unwrap();
        let p = HPoint::new_unchecked(0.6, 0.4, -0.2);
        let r = max_curl_residual(&conn, p, 1e-4);
        assert!(r < 1e-6, "{r:e}");
    }

    #[test]
    fn curvature_identity_converges_at_second_order() {
        let v = potential("1 + 0.3*x2/(1 + x2^2 + x3^2)", vec![HPoint::new_unchecked(1.0, 0.0, 0.0)]);
        let conn = Connection::new(v, GaugeDescriptor::default()).unwrap();
        let pts = [HPoint::new_unchecked(0.8, 0.6, 0.2), HPoint::new_unchecked(1.6, -0.5, 0.4)];
        let r = check_curvature_identity(&conn, &pts, 0.02).unwrap();
        let order = r.order.unwrap();
        assert!((1.5..=2.5).contains(&order), "order {order}, {r:?}");
        assert!(r.max_residual_half_step < 1e-3, "{r:?}");
    }

    #[test]
    fn string_carries_the_flux() {
        let q = HPoint::new_unchecked(1.0, 0.0, 0.0);
        let v = potential("1", vec![q]);
        let conn = Connection::new(v, GaugeDescriptor::default()).unwrap();
        // below the charge the circle links the string
        let below = loop_integral(&conn, HorizontalCircle { z: 0.5, axis: (0.0, 0.0), radius: 1e-3 }, 64).unwrap();
        assert!((below + K).abs() < 1e-3, "{below}");
        let above = loop_integral(&conn, HorizontalCircle { z: 2.0, axis: (0.0, 0.0), radius: 1e-3 }, 64).unwrap();
        assert!(above.abs() < 1e-3, "{above}");
        assert!(matches!(
            conn.a(HPoint::new_unchecked(0.5, 0.0, 0.0)),
            Err(Error::StringProximity { .. })
        ));
        assert!(conn.a(HPoint::new_unchecked(2.0, 0.0, 0.0)).is_ok());
    }

    #[test]
    fn flat_connection_vanishes() {
        let v = potential("1", vec![]);
        let conn = Connection::new(v, GaugeDescriptor::homotopy_above((0.0, 0.0))).unwrap();
        assert_eq!(conn.a(HPoint::new_unchecked(0.3, 1.0, 2.0)).unwrap(), OneForm3::default());
        assert_eq!(conn.curvature(HPoint::new_unchecked(0.3, 1.0, 2.0)).unwrap(), TwoForm3::default());
    }

    #[test]
    fn flux_counts_enclosed_charges() {
        let q = HPoint::new_unchecked(1.0, 0.0, 0.0);
        let v = potential("1", vec![q]);
        let r = flux(&v, q, 0.2, 59, 1e-6).unwrap();
        assert!((r.enclosed_flux - K).abs() < 1e-4 * K, "{}", r.enclosed_flux);
        let r = flux(&v, HPoint::new_unchecked(1.0, 3.0, 0.0), 0.5, 59, 1e-6).unwrap();
        assert!(r.enclosed_flux.abs() < 1e-6 && r.charges_inside == 0);
        assert!(flux(&v, HPoint::new_unchecked(1.0, 0.0, 0.0), 0.0, 59, 1e-6).is_err());
    }

    #[test]
    fn flux_precondition_rejects_charges_on_the_sphere() {
        let q = HPoint::new_unchecked(1.0, 0.0, 0.0);
        let v = potential("1", vec![q]);
        let edge = HPoint::new_unchecked(std::f64::consts::E.powf(0.3), 0.0, 0.0);
        assert!(flux(&v, edge, 0.3, 59, 1e-6).is_err());
    }

    #[test]
    fn decay_quantity_vanishes_for_constant_angle() {
        let spec = Arc::new(ConeAngleSpec::constant(0.7).unwrap());
        let u = HarmonicExtension::new(spec, QuadratureSettings::default()).unwrap();
        let r = check_decay_da(&u, &default_rays(), 4);
        assert_eq!(r.constant, 0.0);
        assert!(r.passed);
    }
}
