//! Hyperbolic 3-space in the upper half-space and ball models.
//!
//! Points of the upper half-space are stored as `(z, x2, x3)` with `z > 0`;
//! the metric is `h = (dz² + dx2² + dx3²) / z²`. Differential forms on the
//! half-space use the coordinate bases
//!
//! ```text
//! one-forms: (dz, dx2, dx3)
//! two-forms: (dx2∧dx3, dx3∧dz, dz∧dx2)
//! ```
//!
//! so that a two-form with components `b` is the contraction of the
//! Euclidean volume `dz∧dx2∧dx3` with the vector `b`. With this identification
//! `∗_h ω = ω / z` on one-forms and `∗_h b = z b` on two-forms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the upper half-space model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HPoint {
    pub z: f64,
    pub x2: f64,
    pub x3: f64,
}

impl HPoint {
    pub fn new(z: f64, x2: f64, x3: f64) -> Result<Self> {
        if !(z.is_finite() && x2.is_finite() && x3.is_finite()) {
            return Err(Error::InvalidPoint(format!(
                "non-finite coordinates ({z}, {x2}, {x3})"
            )));
        }
        if z <= 0.0 {
            return Err(Error::InvalidPoint(format!("height z = {z} must be positive")));
        }
        Ok(Self { z, x2, x3 })
    }

    /// Builds a point without validation; callers guarantee `z > 0`.
    pub const fn new_unchecked(z: f64, x2: f64, x3: f64) -> Self {
        Self { z, x2, x3 }
    }

    pub fn from_array(c: [f64; 3]) -> Result<Self> {
        Self::new(c[0], c[1], c[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.z, self.x2, self.x3]
    }

    /// LeBrun's coordinate `x1 = z² / 2`.
    pub fn x1(self) -> f64 {
        0.5 * self.z * self.z
    }

    pub fn from_x1(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        if !(x1 > 0.0) {
            return Err(Error::InvalidPoint(format!("x1 = {x1} must be positive")));
        }
        Self::new((2.0 * x1).sqrt(), x2, x3)
    }

    pub fn horizontal_distance(self, other: HPoint) -> f64 {
        (self.x2 - other.x2).hypot(self.x3 - other.x3)
    }

    pub fn horizontal_radius(self) -> f64 {
        self.x2.hypot(self.x3)
    }

    /// Coordinate translation; the result is unchecked.
    pub fn shifted(self, d: [f64; 3]) -> HPoint {
        HPoint::new_unchecked(self.z + d[0], self.x2 + d[1], self.x3 + d[2])
    }

    pub fn euclidean_distance(self, other: HPoint) -> f64 {
        let d = [self.z - other.z, self.x2 - other.x2, self.x3 - other.x3];
        (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
    }
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(z={:.6}, x2={:.6}, x3={:.6})", self.z, self.x2, self.x3)
    }
}

/// A point of the ball model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BallPoint {
    pub y1: f64,
    pub y2: f64,
    pub y3: f64,
}

impl BallPoint {
    pub fn new(y1: f64, y2: f64, y3: f64) -> Result<Self> {
        let p = Self { y1, y2, y3 };
        if !(p.norm_sq() < 1.0) {
            return Err(Error::InvalidPoint(format!(
                "ball point ({y1}, {y2}, {y3}) is not inside the unit ball"
            )));
        }
        Ok(p)
    }

    pub fn norm_sq(self) -> f64 {
        self.y1 * self.y1 + self.y2 * self.y2 + self.y3 * self.y3
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.y1, self.y2, self.y3]
    }
}

/// A point of the sphere at infinity: a point of the boundary plane `z = 0`
/// or the single point at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum BoundaryPoint {
    Finite { x2: f64, x3: f64 },
    Infinity,
}

/// Model conversion with the formulas exactly as used in the decay estimate:
///
/// ```text
/// y1 = (x2² + x3² − 1) / ((z+1)² + x2² + x3²)
/// y2 = 2 x2 / ((z+1)² + x2² + x3²)
/// y3 = 2 x3 / ((z+1)² + x2² + x3²)
/// ```
///
/// This map agrees with the Cayley isometry on the boundary plane but is not
/// itself an isometry (it omits `z²` from the numerator of `y1`); see
/// [`half_to_ball_isometric`] for the isometry used by the Poisson solver.
pub fn half_to_ball(p: HPoint) -> BallPoint {
    let r2 = p.x2 * p.x2 + p.x3 * p.x3;
    let den = (p.z + 1.0) * (p.z + 1.0) + r2;
    BallPoint {
        y1: (r2 - 1.0) / den,
        y2: 2.0 * p.x2 / den,
        y3: 2.0 * p.x3 / den,
    }
}

/// The Cayley isometry from the half-space to the ball. The point
/// `(z=1, 0, 0)` goes to the centre of the ball.
pub fn half_to_ball_isometric(p: HPoint) -> BallPoint {
    let r2 = p.x2 * p.x2 + p.x3 * p.x3;
    let den = (p.z + 1.0) * (p.z + 1.0) + r2;
    BallPoint {
        y1: (r2 + p.z * p.z - 1.0) / den,
        y2: 2.0 * p.x2 / den,
        y3: 2.0 * p.x3 / den,
    }
}

/// Inverse of [`half_to_ball_isometric`].
pub fn ball_to_half_isometric(y: BallPoint) -> HPoint {
    let den = (1.0 - y.y1) * (1.0 - y.y1) + y.y2 * y.y2 + y.y3 * y.y3;
    HPoint::new_unchecked(
        (1.0 - y.norm_sq()) / den,
        2.0 * y.y2 / den,
        2.0 * y.y3 / den,
    )
}

/// Boundary point to unit vector; the point at infinity goes to `(1, 0, 0)`.
pub fn boundary_to_sphere(b: BoundaryPoint) -> [f64; 3] {
    match b {
        BoundaryPoint::Infinity => [1.0, 0.0, 0.0],
        BoundaryPoint::Finite { x2, x3 } => {
            let r2 = x2 * x2 + x3 * x3;
            let den = 1.0 + r2;
            [(r2 - 1.0) / den, 2.0 * x2 / den, 2.0 * x3 / den]
        }
    }
}

/// Inverse of [`boundary_to_sphere`] for a unit vector.
pub fn sphere_to_boundary(xi: [f64; 3]) -> BoundaryPoint {
    let d = 1.0 - xi[0];
    if d <= 1e-300 {
        BoundaryPoint::Infinity
    } else {
        BoundaryPoint::Finite {
            x2: xi[1] / d,
            x3: xi[2] / d,
        }
    }
}

/// Hyperbolic distance, `cosh d = 1 + (|Δx|² + Δz²) / (2 z z')`.
pub fn hyp_distance(p: HPoint, q: HPoint) -> f64 {
    let num = (p.x2 - q.x2).powi(2) + (p.x3 - q.x3).powi(2) + (p.z - q.z).powi(2);
    let s = num / (2.0 * p.z * q.z);
    // acosh(1 + s) written to keep precision for small s
    (s + (s * (s + 2.0)).sqrt()).ln_1p()
}

/// Euclidean centre and radius of the geodesic sphere of hyperbolic radius
/// `radius` about `center`.
pub fn geodesic_sphere(center: HPoint, radius: f64) -> (HPoint, f64) {
    (
        HPoint::new_unchecked(center.z * radius.cosh(), center.x2, center.x3),
        center.z * radius.sinh(),
    )
}

/// Components `(dz, dx2, dx3)` of a one-form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct OneForm3(pub [f64; 3]);

/// Components `(dx2∧dx3, dx3∧dz, dz∧dx2)` of a two-form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TwoForm3(pub [f64; 3]);

macro_rules! form_ops {
    ($t:ident) => {
        impl $t {
            pub fn euclidean_norm(&self) -> f64 {
                let c = self.0;
                (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt()
            }

            pub fn scaled(&self, s: f64) -> Self {
                $t([self.0[0] * s, self.0[1] * s, self.0[2] * s])
            }

            pub fn max_abs_diff(&self, other: &Self) -> f64 {
                (0..3)
                    .map(|i| (self.0[i] - other.0[i]).abs())
                    .fold(0.0, f64::max)
            }
        }

        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                $t([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
            }
        }

        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                $t([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
            }
        }
    };
}

form_ops!(OneForm3);
form_ops!(TwoForm3);

impl OneForm3 {
    /// Pointwise h-norm: `|ω|_h = z |ω|_E`.
    pub fn norm_h(&self, p: HPoint) -> f64 {
        p.z * self.euclidean_norm()
    }
}

impl TwoForm3 {
    /// Pointwise h-norm: `|b|_h = z² |b|_E`.
    pub fn norm_h(&self, p: HPoint) -> f64 {
        p.z * p.z * self.euclidean_norm()
    }
}

/// Hodge star of the hyperbolic metric on one-forms.
pub fn hodge_star_h(df: OneForm3, p: HPoint) -> TwoForm3 {
    TwoForm3(df.0).scaled(1.0 / p.z)
}

/// Hodge star of the hyperbolic metric on two-forms.
pub fn hodge_star_h_two(b: TwoForm3, p: HPoint) -> OneForm3 {
    OneForm3(b.0).scaled(p.z)
}

/// A real function on the half-space.
pub trait ScalarField: Sync {
    fn value(&self, p: HPoint) -> Result<f64>;

    /// Euclidean coordinate gradient `(∂z, ∂x2, ∂x3)`; central differences
    /// unless the implementor supplies a closed form.
    fn gradient(&self, p: HPoint) -> Result<[f64; 3]> {
        central_gradient(self, p, fd_step(p))
    }
}

/// Adapter turning a closure into a [`ScalarField`].
pub struct FnField<F>(pub F);

impl<F> ScalarField for FnField<F>
where
    F: Fn(HPoint) -> f64 + Sync,
{
    fn value(&self, p: HPoint) -> Result<f64> {
        Ok((self.0)(p))
    }
}

/// Default finite-difference step: `max(1e-5, 1e-3 z)`.
pub fn fd_step(p: HPoint) -> f64 {
    (1e-3 * p.z).max(1e-5)
}

fn stencil_point(p: HPoint, axis: usize, offset: f64) -> Result<HPoint> {
    let mut c = p.to_array();
    c[axis] += offset;
    if c[0] <= 0.0 {
        return Err(Error::StepUnderflow {
            location: p,
            step: offset.abs(),
        });
    }
    Ok(HPoint::new_unchecked(c[0], c[1], c[2]))
}

pub fn central_gradient<F: ScalarField + ?Sized>(f: &F, p: HPoint, h: f64) -> Result<[f64; 3]> {
    let mut g = [0.0; 3];
    for (axis, slot) in g.iter_mut().enumerate() {
        let fp = f.value(stencil_point(p, axis, h)?)?;
        let fm = f.value(stencil_point(p, axis, -h)?)?;
        *slot = (fp - fm) / (2.0 * h);
    }
    Ok(g)
}

/// `Δ_h f = −z² (∂²_z f + ∂²_{x2} f + ∂²_{x3} f) + z ∂_z f`, the positive
/// Laplacian of `h`, by central differences with the default step.
pub fn laplacian_h<F: ScalarField + ?Sized>(f: &F, p: HPoint) -> Result<f64> {
    laplacian_h_with_step(f, p, fd_step(p))
}

pub fn laplacian_h_with_step<F: ScalarField + ?Sized>(f: &F, p: HPoint, h: f64) -> Result<f64> {
    let f0 = f.value(p)?;
    let mut second = 0.0;
    let mut dz = 0.0;
    for axis in 0..3 {
        let fp = f.value(stencil_point(p, axis, h)?)?;
        let fm = f.value(stencil_point(p, axis, -h)?)?;
        second += (fp - 2.0 * f0 + fm) / (h * h);
        if axis == 0 {
            dz = (fp - fm) / (2.0 * h);
        }
    }
    Ok(-p.z * p.z * second + p.z * dz)
}

/// Exterior derivative of a one-form field (the Euclidean curl in the
/// `(z, x2, x3)` ordering) by central differences.
pub fn exterior_derivative_one<F>(field: F, p: HPoint, h: f64) -> Result<TwoForm3>
where
    F: Fn(HPoint) -> Result<OneForm3>,
{
    let mut d = [[0.0; 3]; 3]; // d[axis][component]
    for (axis, row) in d.iter_mut().enumerate() {
        let ap = field(stencil_point(p, axis, h)?)?;
        let am = field(stencil_point(p, axis, -h)?)?;
        for (c, slot) in row.iter_mut().enumerate() {
            *slot = (ap.0[c] - am.0[c]) / (2.0 * h);
        }
    }
    Ok(TwoForm3([
        d[1][2] - d[2][1],
        d[2][0] - d[0][2],
        d[0][1] - d[1][0],
    ]))
}

/// Exterior derivative of a two-form field (the Euclidean divergence),
/// returned as the coefficient of `dz∧dx2∧dx3`.
pub fn exterior_derivative_two<F>(field: F, p: HPoint, h: f64) -> Result<f64>
where
    F: Fn(HPoint) -> Result<TwoForm3>,
{
    let mut div = 0.0;
    for axis in 0..3 {
        let bp = field(stencil_point(p, axis, h)?)?;
        let bm = field(stencil_point(p, axis, -h)?)?;
        div += (bp.0[axis] - bm.0[axis]) / (2.0 * h);
    }
    Ok(div)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(z: f64, x2: f64, x3: f64) -> HPoint {
        HPoint::new(z, x2, x3).unwrap()
    }

    #[test]
    fn half_to_ball_matches_printed_formula() {
        let y = half_to_ball(pt(1.0, 0.0, 0.0));
        assert!((y.y1 + 0.25).abs() < 1e-15);
        assert_eq!((y.y2, y.y3), (0.0, 0.0));
        let y = half_to_ball(pt(1e-12, 0.0, 0.0));
        assert!((y.y1 + 1.0).abs() < 1e-11);
    }

    #[test]
    fn cayley_isometry_sends_unit_height_to_centre_and_inverts() {
        let c = half_to_ball_isometric(pt(1.0, 0.0, 0.0));
        assert!(c.norm_sq() < 1e-30);
        let p = pt(0.3, -1.2, 2.5);
        let back = ball_to_half_isometric(half_to_ball_isometric(p));
        assert!(p.euclidean_distance(back) < 1e-12);
    }

    #[test]
    fn boundary_sphere_round_trip() {
        assert_eq!(boundary_to_sphere(BoundaryPoint::Finite { x2: 0.0, x3: 0.0 }), [-1.0, 0.0, 0.0]);
        assert_eq!(boundary_to_sphere(BoundaryPoint::Infinity), [1.0, 0.0, 0.0]);
        let xi = boundary_to_sphere(BoundaryPoint::Finite { x2: 0.7, x3: -3.0 });
        let n = xi.iter().map(|v| v * v).sum::<f64>();
        assert!((n - 1.0).abs() < 1e-14);
        match sphere_to_boundary(xi) {
            BoundaryPoint::Finite { x2, x3 } => {
                assert!((x2 - 0.7).abs() < 1e-13 && (x3 + 3.0).abs() < 1e-13)
            }
            BoundaryPoint::Infinity => panic!("expected finite point"),
        }
        assert_eq!(sphere_to_boundary([1.0, 0.0, 0.0]), BoundaryPoint::Infinity);
    }

    #[test]
    fn distance_identity_and_vertical_segment() {
        let p = pt(0.4, 1.0, -2.0);
        assert_eq!(hyp_distance(p, p), 0.0);
        let d = hyp_distance(pt(1.0, 0.0, 0.0), pt(std::f64::consts::E, 0.0, 0.0));
        assert!((d - 1.0).abs() < 1e-14);
    }

    #[test]
    fn laplacian_of_simple_fields() {
        let p = pt(0.7, 0.2, -0.4);
        let one = FnField(|_: HPoint| 1.0);
        assert_eq!(laplacian_h(&one, p).unwrap(), 0.0);
        let z2 = FnField(|q: HPoint| q.z * q.z);
        assert!(laplacian_h(&z2, p).unwrap().abs() < 1e-8);
        let z = FnField(|q: HPoint| q.z);
        assert!((laplacian_h(&z, p).unwrap() - 0.7).abs() < 1e-8);
    }

    #[test]
    fn laplacian_reports_step_underflow() {
        let f = FnField(|q: HPoint| q.z);
        let err = laplacian_h(&f, pt(5e-6, 0.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::StepUnderflow { .. }));
    }

    #[test]
    fn hodge_star_of_dz_matches_curvature_display() {
        // ∗_h dV for V = z has dx2∧dx3 coefficient ∂_{x1} V = 1/z
        let p = pt(0.5, 0.0, 0.0);
        let star = hodge_star_h(OneForm3([1.0, 0.0, 0.0]), p);
        assert_eq!(star, TwoForm3([2.0, 0.0, 0.0]));
        assert_eq!(hodge_star_h(OneForm3::default(), p), TwoForm3::default());
    }

    #[test]
    fn invalid_points_rejected() {
        assert!(HPoint::new(0.0, 0.0, 0.0).is_err());
        assert!(HPoint::new(1.0, f64::NAN, 0.0).is_err());
        assert!(BallPoint::new(1.0, 0.0, 0.0).is_err());
    }
}
