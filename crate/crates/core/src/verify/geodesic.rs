//! Geodesics as Hamiltonian flows with adaptive Dormand–Prince 5(4) steps.
//!
//! Every system is normalised so that `H = ½` at launch; time then equals
//! arc length.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::Box3;
use crate::connection::Connection;
use crate::error::{Error, Result};
use crate::hyperbolic::HPoint;
use crate::metric::{Mat4, MetricField};

/// Integrator state: chart position `(θ, z, x2, x3)` followed by four momenta.
pub type State = [f64; 8];

pub trait HamiltonianSystem: Sync {
    fn rhs(&self, y: &State) -> Result<State>;
    fn energy(&self, y: &State) -> Result<f64>;
    /// Unit-speed state at `p` with angle `theta`, moving along the unit
    /// vector `direction` of an orthonormal frame adapted to `(θ, z, x2, x3)`.
    fn launch(&self, p: HPoint, theta: f64, direction: [f64; 4]) -> Result<State>;
    /// Points where the chart degenerates away from the divisor.
    fn singular_points(&self) -> &[HPoint] {
        &[]
    }
}

fn point_of(y: &State) -> Result<HPoint> {
    HPoint::new(y[1], y[2], y[3])
}

fn unit(direction: [f64; 4]) -> Result<[f64; 4]> {
    let n = direction.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !(n > 0.0 && n.is_finite()) {
        return Err(Error::Geometry(format!("launch direction {direction:?} has no length")));
    }
    Ok(direction.map(|x| x / n))
}

/// `H = ½ pᵀ g⁻¹ p` for any circle-invariant metric; momenta are `p_a`.
pub struct GenericHamiltonian<'a> {
    pub field: &'a dyn MetricField,
}

impl HamiltonianSystem for GenericHamiltonian<'_> {
    fn rhs(&self, y: &State) -> Result<State> {
        let p = point_of(y)?;
        let g = self.field.metric(p)?;
        let gi = g.try_inverse().ok_or(Error::NotPositiveDefinite(p))?;
        let mom = nalgebra::Vector4::new(y[4], y[5], y[6], y[7]);
        let v = gi * mom;
        let dg = self.field.metric_derivatives(p)?;
        let mut out = [0.0; 8];
        out[..4].copy_from_slice(v.as_slice());
        for k in 0..3 {
            out[5 + k] = 0.5 * v.dot(&(dg[k] * v));
        }
        Ok(out)
    }

    fn energy(&self, y: &State) -> Result<f64> {
        let p = point_of(y)?;
        let g = self.field.metric(p)?;
        let gi = g.try_inverse().ok_or(Error::NotPositiveDefinite(p))?;
        let mom = nalgebra::Vector4::new(y[4], y[5], y[6], y[7]);
        Ok(0.5 * mom.dot(&(gi * mom)))
    }

    fn launch(&self, p: HPoint, theta: f64, direction: [f64; 4]) -> Result<State> {
        let e = unit(direction)?;
        let g: Mat4 = self.field.metric(p)?;
        let chol = g.cholesky().ok_or(Error::NotPositiveDefinite(p))?;
        // g = L Lᵀ, v = L⁻ᵀ e has g(v, v) = 1
        let lt = chol.l().transpose();
        let v = lt
            .solve_upper_triangular(&nalgebra::Vector4::from(e))
            .ok_or(Error::NotPositiveDefinite(p))?;
        let mom = g * v;
        Ok([theta, p.z, p.x2, p.x3, mom[0], mom[1], mom[2], mom[3]])
    }
}

/// The flow reduced by the circle action: with `q = p_θ` conserved and
/// `π = V ẋ`,
/// `H = ½ (q² V / z² + |π|² / V)`.
///
/// Only `θ̇` involves the connection potential; with `track_angle` off the
/// angle is frozen and the flow is gauge-free.
pub struct ReducedLeBrun {
    connection: Arc<Connection>,
    pub track_angle: bool,
}

impl ReducedLeBrun {
    pub fn new(connection: Arc<Connection>, track_angle: bool) -> Self {
        Self {
            connection,
            track_angle,
        }
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

impl HamiltonianSystem for ReducedLeBrun {
    fn rhs(&self, y: &State) -> Result<State> {
        let p = point_of(y)?;
        let s = self.connection.potential().sample(p)?;
        let (v, gv) = (s.value, s.gradient);
        let (q, pi) = (y[4], [y[5], y[6], y[7]]);
        let z = p.z;
        let pi2 = pi[0] * pi[0] + pi[1] * pi[1] + pi[2] * pi[2];
        let b = gv.map(|x| x / z);
        let pxb = cross(pi, b);
        let mut out = [0.0; 8];
        for k in 0..3 {
            let grad_vz = gv[k] / (z * z) - if k == 0 { 2.0 * v / (z * z * z) } else { 0.0 };
            out[1 + k] = pi[k] / v;
            out[5 + k] = -0.5 * q * q * grad_vz + 0.5 * gv[k] * pi2 / (v * v) + q * pxb[k] / v;
        }
        out[0] = if self.track_angle {
            let a = self.connection.a_with(p, &s)?.0;
            q * v / (z * z) - (a[0] * pi[0] + a[1] * pi[1] + a[2] * pi[2]) / v
        } else {
            0.0
        };
        Ok(out)
    }

    fn energy(&self, y: &State) -> Result<f64> {
        let p = point_of(y)?;
        let v = self.connection.potential().sample(p)?.value;
        let pi2 = y[5] * y[5] + y[6] * y[6] + y[7] * y[7];
        Ok(0.5 * (y[4] * y[4] * v / (p.z * p.z) + pi2 / v))
    }

    fn launch(&self, p: HPoint, theta: f64, direction: [f64; 4]) -> Result<State> {
        let e = unit(direction)?;
        let v = self.connection.potential().sample(p)?.value;
        let q = e[0] * p.z / v.sqrt();
        let r = v.sqrt();
        Ok([theta, p.z, p.x2, p.x3, q, r * e[1], r * e[2], r * e[3]])
    }

    fn singular_points(&self) -> &[HPoint] {
        self.connection.potential().charges().points()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GeodesicSettings {
    pub length: f64,
    pub rtol: f64,
    pub atol: f64,
    pub initial_step: f64,
    pub max_step: f64,
    pub min_step: f64,
    pub max_steps: usize,
    /// Trajectories reaching `z` below this height have hit the divisor.
    pub divisor_height: f64,
    /// Trajectories within this Euclidean distance of a charge stop.
    pub charge_clearance: f64,
    pub record: bool,
}

impl Default for GeodesicSettings {
    fn default() -> Self {
        Self {
            length: 100.0,
            rtol: 1e-12,
            atol: 1e-13,
            initial_step: 1e-2,
            max_step: 1.0,
            min_step: 1e-12,
            max_steps: 2_000_000,
            divisor_height: 1e-6,
            charge_clearance: 1e-3,
            record: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeodesicStatus {
    Completed,
    HitDivisor,
    NearCharge,
    StepUnderflow,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct GeodesicState {
    /// `(θ, z, x2, x3)`.
    pub position: [f64; 4],
    /// The system's momenta: `p_a` for the generic flow, `(q, π)` for the reduced one.
    pub momentum: [f64; 4],
    pub arc_length: f64,
    pub energy: f64,
}

impl GeodesicState {
    fn new(y: &State, t: f64, energy: f64) -> Self {
        Self {
            position: [y[0], y[1], y[2], y[3]],
            momentum: [y[4], y[5], y[6], y[7]],
            arc_length: t,
            energy,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeodesicReport {
    pub status: GeodesicStatus,
    pub initial: GeodesicState,
    #[serde(rename = "final")]
    pub last: GeodesicState,
    pub steps: usize,
    pub rejected: usize,
    /// `max |H − H₀| / H₀` over accepted steps.
    pub max_drift: f64,
    pub min_height: f64,
    #[serde(skip)]
    pub trajectory: Vec<GeodesicState>,
}

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = B1 - 5179.0 / 57600.0;
const E3: f64 = B3 - 7571.0 / 16695.0;
const E4: f64 = B4 - 393.0 / 640.0;
const E5: f64 = B5 - -92097.0 / 339200.0;
const E6: f64 = B6 - 187.0 / 2100.0;
const E7: f64 = -1.0 / 40.0;

fn combo(y: &State, h: f64, terms: &[(f64, &State)]) -> State {
    let mut out = *y;
    for (c, k) in terms {
        for i in 0..8 {
            out[i] += h * c * k[i];
        }
    }
    out
}

/// One Dormand–Prince step from `(y, k1)`: the fifth-order solution, its
/// derivative there and the embedded error vector.
fn dp_step<S: HamiltonianSystem + ?Sized>(sys: &S, y: &State, k1: &State, h: f64) -> Result<(State, State, State)> {
    let k2 = sys.rhs(&combo(y, h, &[(A21, k1)]))?;
    let k3 = sys.rhs(&combo(y, h, &[(A31, k1), (A32, &k2)]))?;
    let k4 = sys.rhs(&combo(y, h, &[(A41, k1), (A42, &k2), (A43, &k3)]))?;
    let k5 = sys.rhs(&combo(y, h, &[(A51, k1), (A52, &k2), (A53, &k3), (A54, &k4)]))?;
    let k6 = sys.rhs(&combo(y, h, &[(A61, k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]))?;
    let y5 = combo(y, h, &[(B1, k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
    let k7 = sys.rhs(&y5)?;
    let mut err = [0.0; 8];
    for i in 0..8 {
        err[i] = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
    }
    Ok((y5, k7, err))
}

fn near_singular(points: &[HPoint], y: &State, clearance: f64) -> bool {
    let p = HPoint::new_unchecked(y[1], y[2], y[3]);
    points.iter().any(|c| p.euclidean_distance(*c) < clearance)
}

/// Integrates from `y0` to arc length `settings.length`.
pub fn geodesic_integrate<S: HamiltonianSystem + ?Sized>(sys: &S, y0: State, settings: &GeodesicSettings) -> Result<GeodesicReport> {
    let e0 = sys.energy(&y0)?;
    if !(e0 > 0.0) {
        return Err(Error::Geometry(format!("launch energy {e0:.3e} is not positive")));
    }
    // rescale momenta so that H = ½
    let scale = (0.5 / e0).sqrt();
    let mut y = y0;
    for m in &mut y[4..] {
        *m *= scale;
    }
    let e0 = sys.energy(&y)?;
    let initial = GeodesicState::new(&y, 0.0, e0);
    let mut trajectory = if settings.record { vec![initial] } else { Vec::new() };
    let mut k1 = sys.rhs(&y)?;
    let (mut t, mut h) = (0.0, settings.initial_step.min(settings.length));
    let (mut steps, mut rejected) = (0, 0);
    let (mut max_drift, mut min_height) = (0.0_f64, y[1]);
    let mut energy = e0;
    let singular = sys.singular_points();
    let status = loop {
        if t >= settings.length {
            break GeodesicStatus::Completed;
        }
        if y[1] < settings.divisor_height {
            break GeodesicStatus::HitDivisor;
        }
        if near_singular(singular, &y, settings.charge_clearance) {
            break GeodesicStatus::NearCharge;
        }
        if steps >= settings.max_steps || h < settings.min_step {
            break GeodesicStatus::StepUnderflow;
        }
        let h_try = h.min(settings.length - t).min(settings.max_step);
        match dp_step(sys, &y, &k1, h_try) {
            Ok((y5, k7, err)) => {
                let norm = (0..8)
                    .map(|i| err[i].abs() / (settings.atol + settings.rtol * y[i].abs().max(y5[i].abs())))
                    .fold(0.0_f64, f64::max);
                if norm <= 1.0 && y5[1] > 0.0 {
                    let e = match sys.energy(&y5) {
                        Ok(e) => e,
                        Err(_) => {
                            rejected += 1;
                            h = 0.25 * h_try;
                            continue;
                        }
                    };
                    t = if settings.length - t - h_try <= 1e-15 * settings.length {
                        settings.length
                    } else {
                        t + h_try
                    };
                    y = y5;
                    k1 = k7;
                    steps += 1;
                    energy = e;
                    max_drift = max_drift.max((e - e0).abs() / e0);
                    min_height = min_height.min(y[1]);
                    if settings.record {
                        trajectory.push(GeodesicState::new(&y, t, e));
                    }
                    let grow = if norm == 0.0 { 5.0 } else { (0.9 * norm.powf(-0.2)).clamp(0.2, 5.0) };
                    h = h_try * grow;
                } else {
                    rejected += 1;
                    let shrink = if norm.is_finite() { (0.9 * norm.powf(-0.2)).clamp(0.1, 0.9) } else { 0.25 };
                    h = h_try * shrink;
                }
            }
            Err(_) => {
                rejected += 1;
                h = 0.25 * h_try;
            }
        }
    };
    Ok(GeodesicReport {
        status,
        initial,
        last: GeodesicState::new(&y, t, energy),
        steps,
        rejected,
        max_drift,
        min_height,
        trajectory,
    })
}

/// A starting point and frame direction for one shot.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Launch {
    pub point: HPoint,
    pub theta: f64,
    pub direction: [f64; 4],
}

/// Uniform points in `bounds` (clear of `avoid` by `clearance`) with
/// isotropic directions, all drawn from `seed`.
pub fn random_launches(bounds: &Box3, n: usize, seed: u64, avoid: &[HPoint], clearance: f64) -> Vec<Launch> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let point = HPoint::new_unchecked(
            rng.gen_range(bounds.z[0]..=bounds.z[1]),
            rng.gen_range(bounds.x2[0]..=bounds.x2[1]),
            rng.gen_range(bounds.x3[0]..=bounds.x3[1]),
        );
        let theta = rng.gen_range(0.0..std::f64::consts::TAU);
        let direction: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
        if avoid.iter().all(|c| point.euclidean_distance(*c) >= clearance) {
            out.push(Launch { point, theta, direction });
        }
    }
    out
}

/// Shots that graze the divisor (small angular momentum, aimed down) and
/// shots aimed outward to the asymptotic region.
pub fn adversarial_launches(bounds: &Box3, n: usize, seed: u64) -> Vec<Launch> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = bounds.center();
    (0..n)
        .map(|i| {
            let t = rng.gen_range(0.0..std::f64::consts::TAU);
            if i % 2 == 0 {
                let graze = 10f64.powf(rng.gen_range(-3.0..-1.0));
                Launch {
                    point: HPoint::new_unchecked(bounds.z[0], c.x2, c.x3),
                    theta: 0.0,
                    direction: [graze, -1.0, 0.1 * t.cos(), 0.1 * t.sin()],
                }
            } else {
                Launch {
                    point: c,
                    theta: 0.0,
                    direction: [0.1, rng.gen_range(0.0..1.0), t.cos(), t.sin()],
                }
            }
        })
        .collect()
}

/// Integrates every launch in parallel; results keep launch order.
pub fn shoot_all<S: HamiltonianSystem + ?Sized>(
    sys: &S,
    launches: &[Launch],
    settings: &GeodesicSettings,
) -> Vec<Result<GeodesicReport>> {
    launches
        .par_iter()
        .map(|l| geodesic_integrate(sys, sys.launch(l.point, l.theta, l.direction)?, settings))
        .collect()
}

/// Cartesian coordinates of the flat space obtained by unrolling the cone
/// `c z² dθ² + c⁻¹ |dx|²`: `ρ = z/√c`, `φ = cθ`, `y = x/√c`.
pub fn unroll_cone(angle: f64, position: [f64; 4]) -> [f64; 4] {
    let s = angle.sqrt();
    let rho = position[1] / s;
    let phi = angle * position[0];
    [rho * phi.cos(), rho * phi.sin(), position[2] / s, position[3] / s]
}
