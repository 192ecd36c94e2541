//! The four-dimensional metric and Kähler form in the chart `(θ, z, x2, x3)`.
//!
//! With `η = dθ + A`,
//!
//! ```text
//! g = z² V⁻¹ η² + V (dz² + dx2² + dx3²)
//! ω = z dz ∧ η + V dx2 ∧ dx3
//! ```
//!
//! Matrices are indexed `0 = θ, 1 = z, 2 = x2, 3 = x3`. Two-forms are stored
//! as antisymmetric matrices with `ω = Σ_{a<b} Ω_ab dx^a ∧ dx^b`.

use std::sync::Arc;

use nalgebra::{Matrix4, SymmetricEigen, Vector4};
use num_complex::Complex64;
use serde::Serialize;

use crate::cone_angle::ConeAngleSpec;
use crate::connection::Connection;
use crate::error::{Error, Result};
use crate::hyperbolic::{fd_step, laplacian_h, HPoint, OneForm3, ScalarField};

pub type Mat4 = Matrix4<f64>;

/// Component order of metric dumps.
pub const METRIC_COMPONENTS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

pub const METRIC_COMPONENT_NAMES: [&str; 10] = [
    "g_tt", "g_tz", "g_t2", "g_t3", "g_zz", "g_z2", "g_z3", "g_22", "g_23", "g_33",
];

/// Component order of Kähler-form dumps.
pub const FORM_COMPONENTS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub const FORM_COMPONENT_NAMES: [&str; 6] = ["w_tz", "w_t2", "w_t3", "w_z2", "w_z3", "w_23"];

/// `g` from `V`, `A` and the height `z`, without a definiteness check.
pub fn metric_matrix(v: f64, a: OneForm3, z: f64) -> Mat4 {
    let e = [1.0, a.0[0], a.0[1], a.0[2]];
    let c = z * z / v;
    let mut g = Mat4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            g[(i, j)] = c * e[i] * e[j];
        }
    }
    for i in 1..4 {
        g[(i, i)] += v;
    }
    g
}

/// `g` at `p`, rejecting matrices that are not positive definite.
pub fn assemble_g(v: f64, a: OneForm3, p: HPoint) -> Result<Mat4> {
    let g = metric_matrix(v, a, p.z);
    if !(v > 0.0) || g.iter().any(|x| !x.is_finite()) || g.cholesky().is_none() {
        return Err(Error::NotPositiveDefinite(p));
    }
    Ok(g)
}

/// `ω = z dz ∧ η + V dx2 ∧ dx3`.
pub fn assemble_omega(v: f64, a: OneForm3, z: f64) -> Mat4 {
    let mut w = Mat4::zeros();
    let mut set = |i: usize, j: usize, x: f64| {
        w[(i, j)] += x;
        w[(j, i)] -= x;
    };
    // z dz ∧ (dθ + A_z dz + A_2 dx2 + A_3 dx3)
    set(1, 0, z);
    set(1, 2, z * a.0[1]);
    set(1, 3, z * a.0[2]);
    set(2, 3, v);
    w
}

/// Pfaffian of an antisymmetric 4×4 matrix: `ω ∧ ω = 2 Pf(Ω) dθ∧dz∧dx2∧dx3`.
pub fn pfaffian(w: &Mat4) -> f64 {
    w[(0, 1)] * w[(2, 3)] - w[(0, 2)] * w[(1, 3)] + w[(0, 3)] * w[(1, 2)]
}

/// `ω ∧ ω / vol_g` in the complex orientation `dz ∧ dθ ∧ dx2 ∧ dx3`.
pub fn volume_ratio(g: &Mat4, w: &Mat4) -> f64 {
    // the complex orientation is opposite to dθ ∧ dz ∧ dx2 ∧ dx3
    -2.0 * pfaffian(w) / g.determinant().sqrt()
}

/// The endomorphism `J` with `ω(X, Y) = g(JX, Y)`.
pub fn complex_structure(g: &Mat4, w: &Mat4) -> Option<Mat4> {
    let gi = g.try_inverse()?;
    Some(-(gi * w))
}

/// The coframe `α₁ = dx2 + i dx3`, `α₂ = dz + i z V⁻¹ η`.
#[derive(Clone, Copy, Debug)]
pub struct Coframe {
    pub alpha1: [Complex64; 4],
    pub alpha2: [Complex64; 4],
}

impl Coframe {
    pub fn new(v: f64, a: OneForm3, z: f64) -> Self {
        let c = z / v;
        let i = Complex64::i();
        let zero = Complex64::new(0.0, 0.0);
        Self {
            alpha1: [zero, zero, Complex64::new(1.0, 0.0), i],
            alpha2: [
                i * c,
                Complex64::new(1.0, 0.0) + i * c * a.0[0],
                i * c * a.0[1],
                i * c * a.0[2],
            ],
        }
    }

    /// `(i/2) Σ α ∧ ᾱ` as an antisymmetric matrix.
    pub fn kahler_form(&self) -> Mat4 {
        let mut w = Mat4::zeros();
        for alpha in [&self.alpha1, &self.alpha2] {
            for a in 0..4 {
                for b in 0..4 {
                    let wedge = alpha[a] * alpha[b].conj() - alpha[b] * alpha[a].conj();
                    w[(a, b)] += (Complex64::i() * 0.5 * wedge).re;
                }
            }
        }
        w
    }

    /// `Σ Re(α ⊗ ᾱ)`.
    pub fn hermitian_metric(&self) -> Mat4 {
        let mut g = Mat4::zeros();
        for alpha in [&self.alpha1, &self.alpha2] {
            for a in 0..4 {
                for b in 0..4 {
                    g[(a, b)] += (alpha[a] * alpha[b].conj()).re;
                }
            }
        }
        g
    }
}

/// Residuals of `V⁻¹ω = (i/2) Σ α∧ᾱ` and `V⁻¹g = Σ Re(α⊗ᾱ)`.
pub fn coframe_residuals(v: f64, a: OneForm3, z: f64) -> (f64, f64) {
    let cf = Coframe::new(v, a, z);
    let w = assemble_omega(v, a, z) / v;
    let g = metric_matrix(v, a, z) / v;
    (
        (w - cf.kahler_form()).amax(),
        (g - cf.hermitian_metric()).amax(),
    )
}

/// A circle-invariant metric on the chart `(θ, z, x2, x3)`.
pub trait MetricField: Sync {
    fn metric(&self, p: HPoint) -> Result<Mat4>;

    /// The Kähler form, when the metric carries one.
    fn kahler_form(&self, _p: HPoint) -> Result<Option<Mat4>> {
        Ok(None)
    }

    /// Metric and Kähler form together, for fields where both come from one
    /// evaluation.
    fn tensors(&self, p: HPoint) -> Result<(Mat4, Option<Mat4>)> {
        Ok((self.metric(p)?, self.kahler_form(p)?))
    }

    /// `∂g/∂z, ∂g/∂x2, ∂g/∂x3`, by central differences unless overridden.
    fn metric_derivatives(&self, p: HPoint) -> Result<[Mat4; 3]> {
        let h = fd_step(p);
        let mut out = [Mat4::zeros(); 3];
        for (axis, d) in out.iter_mut().enumerate() {
            let mut e = [0.0; 3];
            e[axis] = h;
            let gp = self.metric(p.shifted(e))?;
            e[axis] = -h;
            let gm = self.metric(p.shifted(e))?;
            *d = (gp - gm) / (2.0 * h);
        }
        Ok(out)
    }
}

/// The metric built from `V` and a connection potential.
#[derive(Debug, Clone)]
pub struct LeBrunMetric {
    connection: Arc<Connection>,
}

/// `V`, `A` and their assembled tensors at one point.
#[derive(Clone, Copy, Debug)]
pub struct MetricSample {
    pub v: f64,
    pub grad_v: [f64; 3],
    pub a: OneForm3,
    pub g: Mat4,
    pub omega: Mat4,
}

impl LeBrunMetric {
    pub fn new(connection: Arc<Connection>) -> Self {
        Self { connection }
    }

    pub fn connection(&self) -> &Connection {
        &self.connection
    }

    pub fn sample(&self, p: HPoint) -> Result<MetricSample> {
        let s = self.connection.potential().sample(p)?;
        let a = self.connection.a_with(p, &s)?;
        Ok(MetricSample {
            v: s.value,
            grad_v: s.gradient,
            a,
            g: assemble_g(s.value, a, p)?,
            omega: assemble_omega(s.value, a, p.z),
        })
    }
}

impl MetricField for LeBrunMetric {
    fn metric(&self, p: HPoint) -> Result<Mat4> {
        Ok(self.sample(p)?.g)
    }

    fn kahler_form(&self, p: HPoint) -> Result<Option<Mat4>> {
        Ok(Some(self.sample(p)?.omega))
    }

    fn tensors(&self, p: HPoint) -> Result<(Mat4, Option<Mat4>)> {
        let s = self.sample(p)?;
        Ok((s.g, Some(s.omega)))
    }
}

/// `c z² dθ² + c⁻¹ (dz² + dx2² + dx3²)`: the metric for constant `β = c`
/// with no blow-ups, flat space when `c = 1`.
#[derive(Debug, Clone, Copy)]
pub struct ConeMetric {
    pub angle: f64,
}

impl ConeMetric {
    pub fn flat() -> Self {
        Self { angle: 1.0 }
    }
}

impl MetricField for ConeMetric {
    fn metric(&self, p: HPoint) -> Result<Mat4> {
        let c = self.angle;
        Ok(Mat4::from_diagonal(&Vector4::new(c * p.z * p.z, 1.0 / c, 1.0 / c, 1.0 / c)))
    }

    fn kahler_form(&self, p: HPoint) -> Result<Option<Mat4>> {
        Ok(Some(assemble_omega(1.0 / self.angle, OneForm3::default(), p.z)))
    }

    fn metric_derivatives(&self, p: HPoint) -> Result<[Mat4; 3]> {
        let mut dz = Mat4::zeros();
        dz[(0, 0)] = 2.0 * self.angle * p.z;
        Ok([dz, Mat4::zeros(), Mat4::zeros()])
    }
}

/// The warped product `g_β = β² z² dθ² + dz² + dx2² + dx3²`, optionally
/// scaled by `β⁻¹`.
#[derive(Debug, Clone)]
pub struct ModelMetric {
    spec: Arc<ConeAngleSpec>,
    scaled: bool,
}

impl ModelMetric {
    pub fn new(spec: Arc<ConeAngleSpec>) -> Self {
        Self { spec, scaled: false }
    }

    /// `β⁻¹ g_β`.
    pub fn scaled(spec: Arc<ConeAngleSpec>) -> Self {
        Self { spec, scaled: true }
    }

    pub fn diagonal(&self, p: HPoint) -> [f64; 4] {
        let b = self.spec.beta_at(p.x2, p.x3);
        let d = [b * b * p.z * p.z, 1.0, 1.0, 1.0];
        if self.scaled {
            d.map(|x| x / b)
        } else {
            d
        }
    }

    /// The two-form compatible with this metric and the coframe orientation:
    /// `β z dz∧dθ + dx2∧dx3`, or `z dz∧dθ + β⁻¹ dx2∧dx3` when scaled.
    pub fn associated_form(&self, p: HPoint) -> Mat4 {
        let b = self.spec.beta_at(p.x2, p.x3);
        let (dzdt, d23) = if self.scaled { (p.z, 1.0 / b) } else { (b * p.z, 1.0) };
        let mut w = Mat4::zeros();
        w[(1, 0)] = dzdt;
        w[(0, 1)] = -dzdt;
        w[(2, 3)] = d23;
        w[(3, 2)] = -d23;
        w
    }
}

/// The two-form `z dz∧dθ + β dx2∧dx3`, in the form in which it is usually
/// quoted alongside `β⁻¹ g_β`. It is closed but not compatible with `β⁻¹ g_β`.
pub fn quoted_model_form(spec: &ConeAngleSpec, p: HPoint) -> Mat4 {
    let b = spec.beta_at(p.x2, p.x3);
    let mut w = Mat4::zeros();
    w[(1, 0)] = p.z;
    w[(0, 1)] = -p.z;
    w[(2, 3)] = b;
    w[(3, 2)] = -b;
    w
}

impl MetricField for ModelMetric {
    fn metric(&self, p: HPoint) -> Result<Mat4> {
        let d = self.diagonal(p);
        Ok(Mat4::from_diagonal(&Vector4::new(d[0], d[1], d[2], d[3])))
    }

    fn kahler_form(&self, p: HPoint) -> Result<Option<Mat4>> {
        Ok(Some(self.associated_form(p)))
    }
}

/// `dω` for a circle-invariant two-form field, by central differences.
/// Components are the coefficients of `dθ∧dz∧dx2, dθ∧dz∧dx3, dθ∧dx2∧dx3,
/// dz∧dx2∧dx3`.
pub fn form_exterior_derivative<F>(field: F, p: HPoint, h: f64) -> Result<[f64; 4]>
where
    F: Fn(HPoint) -> Result<Mat4>,
{
    // derivative along chart index 1..=3; θ derivatives vanish
    let mut d = [Mat4::zeros(); 4];
    for axis in 0..3 {
        let mut e = [0.0; 3];
        e[axis] = h;
        let wp = field(p.shifted(e))?;
        e[axis] = -h;
        let wm = field(p.shifted(e))?;
        d[axis + 1] = (wp - wm) / (2.0 * h);
    }
    Ok(exterior_from_derivatives(&d))
}

/// `dω` from the chart derivatives `d[a] = ∂_a Ω` (with `d[0]` the θ derivative).
pub fn exterior_from_derivatives(d: &[Mat4; 4]) -> [f64; 4] {
    let c = |a: usize, b: usize, e: usize| d[a][(b, e)] + d[b][(e, a)] + d[e][(a, b)];
    [c(0, 1, 2), c(0, 1, 3), c(0, 2, 3), c(1, 2, 3)]
}

/// Eigenvalues of `g` relative to a diagonal reference metric.
pub fn relative_eigenvalues(g: &Mat4, reference_diagonal: [f64; 4]) -> [f64; 4] {
    let s = reference_diagonal.map(|x| 1.0 / x.sqrt());
    let mut m = *g;
    for i in 0..4 {
        for j in 0..4 {
            m[(i, j)] *= s[i] * s[j];
        }
    }
    let mut e: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    e.sort_by(f64::total_cmp);
    [e[0], e[1], e[2], e[3]]
}

/// The `v` field of the ansatz, as a function of `(x1, x2, x3)`.
pub enum AnsatzV<'a> {
    /// `v = log 2x₁`, for which the numerator vanishes identically.
    Hyperbolic,
    Custom(&'a dyn Fn([f64; 3]) -> f64),
}

/// `s = −(∂²_{x1} e^v + ∂²_{x2} v + ∂²_{x3} v) / (W e^v)`, by central
/// differences of step `h` in `(x1, x2, x3)`.
pub fn scalar_curvature_ansatz(v: &AnsatzV<'_>, w: &dyn Fn([f64; 3]) -> f64, x: [f64; 3], h: f64) -> Result<f64> {
    let vf = |y: [f64; 3]| match v {
        AnsatzV::Hyperbolic => (2.0 * y[0]).ln(),
        AnsatzV::Custom(f) => f(y),
    };
    let denom = w(x) * vf(x).exp();
    if !(denom > 0.0) {
        return Err(Error::NonPositiveConformalFactor(denom));
    }
    if let AnsatzV::Hyperbolic = v {
        return Ok(0.0);
    }
    let shifted = |axis: usize, s: f64| {
        let mut y = x;
        y[axis] += s;
        y
    };
    let second = |f: &dyn Fn([f64; 3]) -> f64, axis: usize| {
        (f(shifted(axis, h)) - 2.0 * f(x) + f(shifted(axis, -h))) / (h * h)
    };
    let ev = |y: [f64; 3]| vf(y).exp();
    let num = second(&ev, 0) + second(&vf, 1) + second(&vf, 2);
    Ok(-num / denom)
}

/// The compatibility defect `Δ_h V`.
pub fn compatibility_residual<F: ScalarField + ?Sized>(v: &F, p: HPoint) -> Result<f64> {
    laplacian_h(v, p)
}

/// `∂²_{x1}(W e^v) + ∂²_{x2} W + ∂²_{x3} W` for `e^v = 2x₁ = z²`, `W = V / z²`,
/// by differences of step `h` in `x₁ = z²/2`. It equals `−Δ_h V / z⁴`.
pub fn compatibility_in_x1<F: ScalarField + ?Sized>(v: &F, p: HPoint, h: f64) -> Result<f64> {
    let x1 = 0.5 * p.z * p.z;
    if x1 - h <= 0.0 {
        return Err(Error::StepUnderflow { location: p, step: h });
    }
    let at = |y1: f64, y2: f64, y3: f64| -> Result<f64> {
        let q = HPoint::from_x1(y1, y2, y3)?;
        v.value(q)
    };
    let w = |y1: f64, y2: f64, y3: f64| -> Result<f64> { Ok(at(y1, y2, y3)? / (2.0 * y1)) };
    let (x2, x3) = (p.x2, p.x3);
    let c = at(x1, x2, x3)?;
    let d11 = (at(x1 + h, x2, x3)? - 2.0 * c + at(x1 - h, x2, x3)?) / (h * h);
    let wc = w(x1, x2, x3)?;
    let d22 = (w(x1, x2 + h, x3)? - 2.0 * wc + w(x1, x2 - h, x3)?) / (h * h);
    let d33 = (w(x1, x2, x3 + h)? - 2.0 * wc + w(x1, x2, x3 - h)?) / (h * h);
    Ok(d11 + d22 + d33)
}

/// `v = log 2x₁`, `W = V / 2x₁` and `e^v` at a point.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct LeBrunData {
    pub v: f64,
    pub w: f64,
    pub exp_v: f64,
}

impl LeBrunData {
    pub fn at(potential_value: f64, p: HPoint) -> Result<Self> {
        let exp_v = p.z * p.z;
        let w = potential_value / exp_v;
        if !(w > 0.0) {
            return Err(Error::NonPositiveConformalFactor(w));
        }
        Ok(Self {
            v: exp_v.ln(),
            w,
            exp_v,
        })
    }
}

/// Norms of `D = V⁻¹g − (β²z²η² + dz² + dx2² + dx3²)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ConformalRemainder {
    /// Spectral norm of the coordinate matrix of `D / z³`.
    pub coordinate_norm: f64,
    /// Spectral norm of `D` measured against `g_β`.
    pub relative_norm: f64,
    /// Spectral norm of `D / z³` measured against `g_β`.
    pub model_norm: f64,
}

pub fn conformal_remainder(v: f64, a: OneForm3, beta: f64, p: HPoint) -> ConformalRemainder {
    let z = p.z;
    let e = Vector4::new(1.0, a.0[0], a.0[1], a.0[2]);
    let d: Mat4 = (e * e.transpose()) * (z * z * (1.0 / (v * v) - beta * beta));
    let spectral = |m: &Mat4| {
        SymmetricEigen::new(*m)
            .eigenvalues
            .iter()
            .fold(0.0f64, |acc, x| acc.max(x.abs()))
    };
    let rel = {
        let s = [1.0 / (beta * z), 1.0, 1.0, 1.0];
        let mut m = d;
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] *= s[i] * s[j];
            }
        }
        m
    };
    let z3 = z * z * z;
    ConformalRemainder {
        coordinate_norm: spectral(&d) / z3,
        relative_norm: spectral(&rel),
        model_norm: spectral(&rel) / z3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(x: f64, y: f64, w: f64) -> OneForm3 {
        OneForm3([x, y, w])
    }

    #[test]
    fn flat_and_cone_reductions() {
        let p = HPoint::new_unchecked(0.7, 0.1, 0.2);
        let g = assemble_g(1.0, OneForm3::default(), p).unwrap();
        assert_eq!(g, Mat4::from_diagonal(&Vector4::new(p.z * p.z, 1.0, 1.0, 1.0)));
        let c = 0.7;
        let g = assemble_g(1.0 / c, OneForm3::default(), p).unwrap();
        let expected = ConeMetric { angle: c }.metric(p).unwrap();
        assert!((g - expected).amax() < 1e-15);
    }

    #[test]
    fn volume_ratio_and_complex_structure() {
        let p = HPoint::new_unchecked(0.4, 0.0, 0.0);
        for (v, af) in [(1.0, a(0.0, 0.0, 0.0)), (2.3, a(0.3, -1.2, 0.7)), (0.4, a(-2.0, 0.5, 0.1))] {
            let g = assemble_g(v, af, p).unwrap();
            let w = assemble_omega(v, af, p.z);
            assert!((volume_ratio(&g, &w) - 2.0).abs() < 1e-12);
            let j = complex_structure(&g, &w).unwrap();
            assert!((j * j + Mat4::identity()).amax() < 1e-12);
            // g is J-invariant
            assert!((j.transpose() * g * j - g).amax() < 1e-12);
        }
    }

    #[test]
    fn coframe_identities_hold() {
        for (v, af, z) in [(1.0, a(0.0, 0.0, 0.0), 1.0), (2.3, a(0.3, -1.2, 0.7), 0.2), (0.6, a(1.0, 2.0, -3.0), 5.0)] {
            let (rw, rg) = coframe_residuals(v, af, z);
            assert!(rw < 1e-12 && rg < 1e-12, "{rw} {rg}");
        }
    }

    #[test]
    fn non_positive_potential_is_rejected() {
        let p = HPoint::new_unchecked(1.0, 0.0, 0.0);
        assert!(matches!(assemble_g(-1.0, OneForm3::default(), p), Err(Error::NotPositiveDefinite(_))));
    }

    #[test]
    fn ansatz_curvature_cases() {
        let one = |_: [f64; 3]| 1.0;
        let x = [0.3, 0.2, -0.1];
        assert_eq!(scalar_curvature_ansatz(&AnsatzV::Hyperbolic, &one, x, 1e-3).unwrap(), 0.0);
        let zero = |_: [f64; 3]| 0.0;
        assert!(scalar_curvature_ansatz(&AnsatzV::Custom(&zero), &one, x, 1e-3).unwrap().abs() < 1e-12);
        let eps = 0.05;
        let w = |y: [f64; 3]| 1.0 + y[1] * y[1];
        let vf = move |y: [f64; 3]| (2.0 * y[0]).ln() + eps * y[1] * y[1];
        let s = scalar_curvature_ansatz(&AnsatzV::Custom(&vf), &w, x, 1e-4).unwrap();
        let expected = -2.0 * eps / (w(x) * vf(x).exp());
        assert!((s - expected).abs() < 1e-5, "{s} vs {expected}");
        let neg = |_: [f64; 3]| -1.0;
        assert!(scalar_curvature_ansatz(&AnsatzV::Hyperbolic, &neg, x, 1e-3).is_err());
    }

    #[test]
    fn compatibility_in_x1_is_scaled_laplacian() {
        let v = crate::hyperbolic::FnField(|p: HPoint| p.z.powi(3) + p.x2 * p.x2 * p.z);
        let p = HPoint::new_unchecked(0.8, 0.5, 0.1);
        let lhs = compatibility_in_x1(&v, p, 1e-4).unwrap();
        let lap = compatibility_residual(&v, p).unwrap();
        assert!((lhs + lap / p.z.powi(4)).abs() < 1e-5, "{lhs} vs {}", -lap / p.z.powi(4));
        let harmonic = crate::hyperbolic::FnField(|p: HPoint| p.z * p.z);
        assert!(compatibility_residual(&harmonic, p).unwrap().abs() < 1e-8);
    }

    #[test]
    fn remainder_vanishes_for_constant_angle() {
        let r = conformal_remainder(1.0 / 0.7, OneForm3::default(), 0.7, HPoint::new_unchecked(1e-3, 0.0, 0.0));
        assert!(r.coordinate_norm < 1e-6 && r.relative_norm < 1e-12);
    }

    #[test]
    fn model_forms() {
        let spec = Arc::new(ConeAngleSpec::expression("1 + x2/(1 + x2^2 + x3^2)", 1.0).unwrap());
        let p = HPoint::new_unchecked(0.3, 0.4, -0.2);
        let h = 1e-4;
        let scaled = ModelMetric::scaled(Arc::clone(&spec));
        let plain = ModelMetric::new(Arc::clone(&spec));
        // compatible forms: ω∧ω = 2 vol
        for m in [&scaled, &plain] {
            let g = m.metric(p).unwrap();
            let w = m.associated_form(p);
            assert!((volume_ratio(&g, &w) - 2.0).abs() < 1e-12);
        }
        let closed = |f: &dyn Fn(HPoint) -> Mat4| {
            form_exterior_derivative(|q| Ok(f(q)), p, h)
                .unwrap()
                .iter()
                .fold(0.0f64, |a, x| a.max(x.abs()))
        };
        assert!(closed(&|q| scaled.associated_form(q)) < 1e-9);
        assert!(closed(&|q| quoted_model_form(&spec, q)) < 1e-9);
        // g_β's own form fails closedness by z |∇β|
        let d = form_exterior_derivative(|q| Ok(plain.associated_form(q)), p, h).unwrap();
        let f = crate::hyperbolic::FnField(|q: HPoint| spec.beta_at(q.x2, q.x3));
        let gb = crate::hyperbolic::central_gradient(&f, p, h).unwrap();
        let expect = p.z * (gb[1] * gb[1] + gb[2] * gb[2]).sqrt();
        let got = (d[0] * d[0] + d[1] * d[1]).sqrt();
        assert!((got - expect).abs() < 1e-7, "{got} vs {expect}");
    }

    #[test]
    fn relative_eigenvalues_of_cone_against_model() {
        let c = 0.7;
        let p = HPoint::new_unchecked(2.0, 1.0, 0.0);
        let g = ConeMetric { angle: c }.metric(p).unwrap();
        let e = relative_eigenvalues(&g, [c * c * p.z * p.z, 1.0, 1.0, 1.0]);
        for x in e {
            assert!((x - 1.0 / c).abs() < 1e-12);
        }
    }
}
