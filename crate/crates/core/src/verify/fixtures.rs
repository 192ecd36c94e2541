//! Circle-invariant metrics with closed-form scalar curvature, in the chart
//! `(θ, z, x2, x3)`.

use nalgebra::Vector4;

use crate::error::{Error, Result};
use crate::hyperbolic::HPoint;
use crate::metric::{Mat4, MetricField};

/// `r² (dz² + sin²z dθ²) + dx2² + dx3²`, with `s = 2/r²`.
#[derive(Clone, Copy, Debug)]
pub struct SphereProduct {
    pub radius: f64,
}

impl SphereProduct {
    pub fn scalar_curvature(&self) -> f64 {
        2.0 / (self.radius * self.radius)
    }
}

impl MetricField for SphereProduct {
    fn metric(&self, p: HPoint) -> Result<Mat4> {
        if !(p.z > 0.0 && p.z < std::f64::consts::PI) {
            return Err(Error::InvalidPoint(format!("sphere chart needs 0 < z < π, got {p}")));
        }
        let r2 = self.radius * self.radius;
        let s = p.z.sin();
        Ok(Mat4::from_diagonal(&Vector4::new(r2 * s * s, r2, 1.0, 1.0)))
    }
}

/// `(dθ² + dz²)/z² + dx2² + dx3²`, with `s = −2`.
#[derive(Clone, Copy, Debug)]
pub struct HyperbolicProduct;

impl MetricField for HyperbolicProduct {
    fn metric(&self, p: HPoint) -> Result<Mat4> {
        let w = 1.0 / (p.z * p.z);
        Ok(Mat4::from_diagonal(&Vector4::new(w, w, 1.0, 1.0)))
    }
}

/// Hyperbolic 4-space `(dθ² + dz² + dx2² + dx3²)/z²`, with `s = −12`.
#[derive(Clone, Copy, Debug)]
pub struct HyperbolicFour;

impl MetricField for HyperbolicFour {
    fn metric(&self, p: HPoint) -> Result<Mat4> {
        Ok(Mat4::identity() / (p.z * p.z))
    }
}
