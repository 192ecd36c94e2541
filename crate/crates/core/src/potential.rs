//! Green's functions of hyperbolic space and the potential `V = u_β + Σ G_i`.

use std::f64::consts::PI;
use std::sync::Arc;

use serde::Serialize;

use crate::dirichlet::{HarmonicExtension, PoissonSweep};
use crate::error::{Error, Result};
use crate::hyperbolic::{hyp_distance, HPoint, ScalarField};

/// Charges closer than this (hyperbolic distance) to an evaluation point are poles.
pub const POLE_DISTANCE: f64 = 1e-6;

/// Blow-up points in the half-space and the flux carried by each.
#[derive(Clone, Debug, Serialize)]
pub struct ChargeConfig {
    points: Vec<HPoint>,
    kappa: f64,
    shared_vertical: Vec<(usize, usize)>,
}

impl ChargeConfig {
    pub const DEFAULT_KAPPA: f64 = 2.0 * PI;

    pub fn new(points: Vec<HPoint>, kappa: f64) -> Result<Self> {
        if !(kappa.is_finite() && kappa > 0.0) {
            return Err(Error::Charges(format!("flux per charge must be positive, got {kappa}")));
        }
        for (i, p) in points.iter().enumerate() {
            if !(p.z > 0.0 && p.z.is_finite() && p.x2.is_finite() && p.x3.is_finite()) {
                return Err(Error::Charges(format!("charge {i} at {p} must have finite coordinates and z > 0")));
            }
        }
        let mut shared_vertical = Vec::new();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if hyp_distance(points[i], points[j]) < POLE_DISTANCE {
                    return Err(Error::Charges(format!(
                        "charges {i} and {j} coincide at {}; only unit charges are supported",
                        points[i]
                    )));
                }
                if points[i].horizontal_distance(points[j]) < 1e-12 {
                    shared_vertical.push((i, j));
                }
            }
        }
        Ok(Self {
            points,
            kappa,
            shared_vertical,
        })
    }

    /// Charges above the divisor points `a + i b` at the given heights.
    pub fn from_blowups(feet: &[(f64, f64)], heights: &[f64], kappa: f64) -> Result<Self> {
        if feet.len() != heights.len() {
            return Err(Error::Charges(format!(
                "{} blow-up points but {} heights",
                feet.len(),
                heights.len()
            )));
        }
        let points = feet
            .iter()
            .zip(heights)
            .map(|(&(a, b), &c)| HPoint::new(c, a, b))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Charges(e.to_string()))?;
        Self::new(points, kappa)
    }

    pub fn empty(kappa: f64) -> Result<Self> {
        Self::new(Vec::new(), kappa)
    }

    pub fn points(&self) -> &[HPoint] {
        &self.points
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Pairs of charges on a common vertical line. Such configurations are
    /// iterated blow-ups and fall outside what the checks cover.
    pub fn shared_vertical_pairs(&self) -> &[(usize, usize)] {
        &self.shared_vertical
    }

    pub fn has_shared_vertical(&self) -> bool {
        !self.shared_vertical.is_empty()
    }

    /// Centroid of the charges' feet, or the origin.
    pub fn centroid(&self) -> (f64, f64) {
        if self.points.is_empty() {
            return (0.0, 0.0);
        }
        let n = self.points.len() as f64;
        let s = self.points.iter().fold((0.0, 0.0), |a, p| (a.0 + p.x2, a.1 + p.x3));
        (s.0 / n, s.1 / n)
    }
}

/// `σ − 1 = cosh d − 1` computed without cancellation.
fn cosh_distance_minus_one(p: HPoint, q: HPoint) -> f64 {
    let dx2 = p.x2 - q.x2;
    let dx3 = p.x3 - q.x3;
    let dz = p.z - q.z;
    (dx2 * dx2 + dx3 * dx3 + dz * dz) / (2.0 * p.z * q.z)
}

fn check_pole(index: usize, p: HPoint, q: HPoint) -> Result<f64> {
    let w = cosh_distance_minus_one(p, q);
    let d = (1.0 + w + (w * (w + 2.0)).sqrt()).ln();
    if d < POLE_DISTANCE {
        return Err(Error::Pole {
            index,
            location: p,
            distance: d,
        });
    }
    Ok(w)
}

/// `κ (coth d(p, q) − 1) / 4π`.
pub fn green(p: HPoint, q: HPoint, kappa: f64) -> Result<f64> {
    let w = check_pole(0, p, q)?;
    Ok(green_from_w(w, kappa))
}

fn green_from_w(w: f64, kappa: f64) -> f64 {
    let sigma = 1.0 + w;
    let s = (w * (w + 2.0)).sqrt();
    kappa / (4.0 * PI) / (s * (sigma + s))
}

/// Gradient of `green(·, q)` at `p` in `(z, x2, x3)` order.
pub fn green_gradient(p: HPoint, q: HPoint, kappa: f64) -> Result<[f64; 3]> {
    let w = check_pole(0, p, q)?;
    Ok(green_gradient_from_w(p, q, w, kappa))
}

fn green_gradient_from_w(p: HPoint, q: HPoint, w: f64, kappa: f64) -> [f64; 3] {
    let s2 = w * (w + 2.0);
    let dg = -kappa / (4.0 * PI) / (s2 * s2.sqrt());
    let (z, c) = (p.z, q.z);
    let dx2 = p.x2 - q.x2;
    let dx3 = p.x3 - q.x3;
    let ds_dz = (z * z - c * c - dx2 * dx2 - dx3 * dx3) / (2.0 * z * z * c);
    [dg * ds_dz, dg * dx2 / (z * c), dg * dx3 / (z * c)]
}

/// Value and gradient of `V`, plus the Poisson sweep of its harmonic part.
#[derive(Clone, Copy, Debug, Default)]
pub struct PotentialSample {
    pub value: f64,
    pub gradient: [f64; 3],
    pub sweep: PoissonSweep,
}

/// `V = u_β + Σ G_i`.
#[derive(Debug, Clone)]
pub struct Potential {
    harmonic: Arc<HarmonicExtension>,
    charges: ChargeConfig,
}

impl Potential {
    pub fn new(harmonic: Arc<HarmonicExtension>, charges: ChargeConfig) -> Self {
        Self { harmonic, charges }
    }

    pub fn harmonic(&self) -> &HarmonicExtension {
        &self.harmonic
    }

    pub fn harmonic_arc(&self) -> Arc<HarmonicExtension> {
        Arc::clone(&self.harmonic)
    }

    pub fn charges(&self) -> &ChargeConfig {
        &self.charges
    }

    /// Sum of the Green's terms and their gradient.
    pub fn green_part(&self, p: HPoint) -> Result<(f64, [f64; 3])> {
        let kappa = self.charges.kappa;
        let mut value = 0.0;
        let mut grad = [0.0; 3];
        for (i, &q) in self.charges.points.iter().enumerate() {
            let w = check_pole(i, p, q)?;
            value += green_from_w(w, kappa);
            let g = green_gradient_from_w(p, q, w, kappa);
            for k in 0..3 {
                grad[k] += g[k];
            }
        }
        Ok((value, grad))
    }

    pub fn sample(&self, p: HPoint) -> Result<PotentialSample> {
        let (gv, gg) = self.green_part(p)?;
        let sweep = self.harmonic.sweep(p);
        let mut gradient = sweep.gradient;
        for k in 0..3 {
            gradient[k] += gg[k];
        }
        Ok(PotentialSample {
            value: sweep.value + gv,
            gradient,
            sweep,
        })
    }
}

impl ScalarField for Potential {
    fn value(&self, p: HPoint) -> Result<f64> {
        let (gv, _) = self.green_part(p)?;
        Ok(self.harmonic.sweep(p).value + gv)
    }

    fn gradient(&self, p: HPoint) -> Result<[f64; 3]> {
        Ok(self.sample(p)?.gradient)
    }
}

/// Builds `V` for the given angle data and charges.
pub fn assemble_v(harmonic: Arc<HarmonicExtension>, charges: ChargeConfig) -> Potential {
    Potential::new(harmonic, charges)
}

#[derive(Clone, Debug, Serialize)]
pub struct DecayDescent {
    pub x2: f64,
    pub x3: f64,
    pub heights: Vec<f64>,
    pub values: Vec<f64>,
    pub exponent: f64,
    pub intercept: f64,
    pub max_residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecayReport {
    pub descents: Vec<DecayDescent>,
    pub min_exponent: Option<f64>,
    pub max_exponent: Option<f64>,
    pub passed: bool,
}

/// Least-squares slope and intercept of `y` against `x`.
pub fn fit_line(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

/// Fits `Σ G_i ≈ c z^α` along vertical descents and checks `α = 2 ± 0.1`.
pub fn check_decay_z2(charges: &ChargeConfig, feet: &[(f64, f64)], heights: &[f64]) -> Result<DecayReport> {
    if heights.len() < 2 || heights.iter().any(|z| !(*z > 0.0)) {
        return Err(Error::Geometry("decay fit needs at least two positive heights".into()));
    }
    let mut descents = Vec::new();
    if !charges.is_empty() {
        for &(x2, x3) in feet {
            if let Some(i) = charges
                .points
                .iter()
                .position(|c| ((c.x2 - x2).powi(2) + (c.x3 - x3).powi(2)).sqrt() < 1e-9)
            {
                return Err(Error::Geometry(format!(
                    "descent at ({x2}, {x3}) lies on the vertical line of charge {i}"
                )));
            }
            let mut values = Vec::with_capacity(heights.len());
            for &z in heights {
                let p = HPoint::new(z, x2, x3)?;
                let mut g = 0.0;
                for &q in &charges.points {
                    g += green(p, q, charges.kappa)?;
                }
                values.push(g);
            }
            let lx: Vec<f64> = heights.iter().map(|z| z.ln()).collect();
            let ly: Vec<f64> = values.iter().map(|v| v.ln()).collect();
            let (exponent, intercept) = fit_line(&lx, &ly);
            let max_residual = lx
                .iter()
                .zip(&ly)
                .map(|(a, b)| (b - intercept - exponent * a).abs())
                .fold(0.0, f64::max);
            descents.push(DecayDescent {
                x2,
                x3,
                heights: heights.to_vec(),
                values,
                exponent,
                intercept,
                max_residual,
            });
        }
    }
    let min_exponent = descents.iter().map(|d| d.exponent).reduce(f64::min);
    let max_exponent = descents.iter().map(|d| d.exponent).reduce(f64::max);
    let passed = descents.iter().all(|d| (d.exponent - 2.0).abs() <= 0.1);
    Ok(DecayReport {
        descents,
        min_exponent,
        max_exponent,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone_angle::ConeAngleSpec;
    use crate::dirichlet::QuadratureSettings;
    use crate::hyperbolic::central_gradient;

    const K: f64 = ChargeConfig::DEFAULT_KAPPA;

    #[test]
    fn green_decays_monotonically_along_a_ray() {
        let q = HPoint::new_unchecked(1.0, 0.0, 0.0);
        let mut last = f64::INFINITY;
        for k in 1..40 {
            let p = HPoint::new_unchecked(1.0 + 0.5 * k as f64, k as f64, 0.0);
            let g = green(p, q, K).unwrap();
            assert!(g > 0.0 && g < last);
            last = g;
        }
        assert!(last < 1e-3);
    }

    #[test]
    fn green_has_unit_pole_strength() {
        let q = HPoint::new_unchecked(0.7, 0.2, -0.1);
        for eps in [1e-2f64, 1e-3, 1e-4] {
            let p = HPoint::new_unchecked(0.7 * eps.exp(), 0.2, -0.1);
            let d = hyp_distance(p, q);
            let ratio = green(p, q, K).unwrap() * 4.0 * PI * d / K;
            // coth d − 1 = 1/d − 1 + O(d)
            assert!((ratio - (1.0 - d)).abs() < 2.0 * d * d, "{ratio} at d = {d}");
        }
    }

    #[test]
    fn green_is_symmetric_and_rejects_poles() {
        let p = HPoint::new_unchecked(0.3, 1.0, 2.0);
        let q = HPoint::new_unchecked(2.0, -1.0, 0.5);
        assert!((green(p, q, K).unwrap() - green(q, p, K).unwrap()).abs() < 1e-15);
        assert!(matches!(green(p, p, K), Err(Error::Pole { .. })));
    }

    #[test]
    fn green_gradient_matches_differences() {
        let q = HPoint::new_unchecked(1.0, 0.0, 0.0);
        let p = HPoint::new_unchecked(0.6, 0.4, -0.3);
        let exact = green_gradient(p, q, K).unwrap();
        let f = crate::hyperbolic::FnField(|x: HPoint| green(x, q, K).unwrap());
        let fd = central_gradient(&f, p, 1e-5).unwrap();
        for i in 0..3 {
            assert!((exact[i] - fd[i]).abs() < 1e-8);
        }
    }

    #[test]
    fn green_is_harmonic() {
        let q = HPoint::new_unchecked(1.0, 0.0, 0.0);
        let f = crate::hyperbolic::FnField(|x: HPoint| green(x, q, K).unwrap());
        let p = HPoint::new_unchecked(1.5, 0.7, 0.2);
        let r1 = crate::hyperbolic::laplacian_h_with_step(&f, p, 2e-3).unwrap();
        let r2 = crate::hyperbolic::laplacian_h_with_step(&f, p, 1e-3).unwrap();
        let order = (r1 / r2).abs().log2();
        assert!(r2.abs() < 1e-5 && (order - 2.0).abs() < 0.2, "{r1} {r2}");
    }

    #[test]
    fn charge_validation() {
        let p = HPoint::new_unchecked(1.0, 0.0, 0.0);
        assert!(ChargeConfig::new(vec![p, p], K).is_err());
        assert!(ChargeConfig::new(vec![p], -1.0).is_err());
        let c = ChargeConfig::new(vec![p, HPoint::new_unchecked(2.0, 0.0, 0.0)], K).unwrap();
        assert!(c.has_shared_vertical());
        assert!(ChargeConfig::from_blowups(&[(0.0, 0.0)], &[0.0], K).is_err());
        let c = ChargeConfig::from_blowups(&[(1.0, 2.0)], &[0.5], K).unwrap();
        assert_eq!(c.points()[0], HPoint::new_unchecked(0.5, 1.0, 2.0));
    }

    #[test]
    fn flat_potential_is_one() {
        let spec = Arc::new(ConeAngleSpec::constant(1.0).unwrap());
        let ext = Arc::new(HarmonicExtension::new(spec, QuadratureSettings::default()).unwrap());
        let v = assemble_v(ext, ChargeConfig::empty(K).unwrap());
        let s = v.sample(HPoint::new_unchecked(0.3, 2.0, 1.0)).unwrap();
        assert_eq!(s.value, 1.0);
        assert_eq!(s.gradient, [0.0; 3]);
    }

    #[test]
    fn decay_exponent_is_two_off_the_charge_line() {
        let c = ChargeConfig::new(vec![HPoint::new_unchecked(1.0, 0.0, 0.0)], K).unwrap();
        let heights = [1e-1, 5e-2, 2e-2, 1e-2, 5e-3, 1e-3];
        let r = check_decay_z2(&c, &[(3.0, 0.0)], &heights).unwrap();
        assert!(r.passed, "{:?}", r.min_exponent);
        assert!(check_decay_z2(&c, &[(0.0, 0.0)], &heights).is_err());
        let r = check_decay_z2(&ChargeConfig::empty(K).unwrap(), &[(3.0, 0.0)], &heights).unwrap();
        assert!(r.passed && r.descents.is_empty());
    }
}
