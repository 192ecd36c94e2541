//! The prescribed cone angle `β` on `C ∪ {∞}` and its reciprocal boundary
//! data `β⁻¹` on the sphere at infinity.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::hyperbolic::{boundary_to_sphere, sphere_to_boundary, BoundaryPoint};

/// Samples of `β` on a longitude–latitude grid of the sphere at infinity.
///
/// Latitude is `asin(ξ1)` where `ξ = boundary_to_sphere(b)`, so the south
/// pole is the origin of the boundary plane and the north pole is `∞`;
/// longitude is `atan2(ξ3, ξ2)` in `[0°, 360°)`. Row `i` holds latitude
/// `−90° + 180° i / (n_lat − 1)`, column `j` longitude `360° j / n_lon`.
///
/// Text format, `#` starting a comment line:
///
/// ```text
/// lonlat <n_lon> <n_lat>
/// <n_lat rows of n_lon whitespace-separated values, southernmost row first>
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct LonLatGrid {
    n_lon: usize,
    n_lat: usize,
    values: Vec<f64>,
}

impl LonLatGrid {
    pub fn new(n_lon: usize, n_lat: usize, values: Vec<f64>) -> Result<Self> {
        if n_lon < 2 || n_lat < 2 {
            return Err(Error::ConeAngle(format!(
                "grid needs at least 2 longitudes and 2 latitudes, got {n_lon}x{n_lat}"
            )));
        }
        if values.len() != n_lon * n_lat {
            return Err(Error::ConeAngle(format!(
                "grid declares {n_lon}x{n_lat} samples but holds {}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(Error::ConeAngle(format!("grid sample {v} is not a positive number")));
        }
        for row in [0, n_lat - 1] {
            let r = &values[row * n_lon..(row + 1) * n_lon];
            let spread = r.iter().cloned().fold(f64::MIN, f64::max) - r.iter().cloned().fold(f64::MAX, f64::min);
            if spread > 1e-9 * r[0].abs() {
                return Err(Error::ConeAngle(format!(
                    "pole row {row} is not constant (spread {spread:.3e})"
                )));
            }
        }
        Ok(Self { n_lon, n_lat, values })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .flat_map(str::split_whitespace);
        if tokens.next() != Some("lonlat") {
            return Err(Error::ConeAngle("grid file must start with 'lonlat'".into()));
        }
        let mut dim = |what: &str| -> Result<usize> {
            tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::ConeAngle(format!("missing or invalid {what}")))
        };
        let n_lon = dim("n_lon")?;
        let n_lat = dim("n_lat")?;
        let values = tokens
            .map(|t| {
                t.parse::<f64>()
                    .map_err(|_| Error::ConeAngle(format!("invalid grid value '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n_lon, n_lat, values)
    }

    /// Bilinear interpolation, periodic in longitude.
    pub fn eval(&self, xi: [f64; 3]) -> f64 {
        let lat = xi[0].clamp(-1.0, 1.0).asin();
        let mut lon = xi[2].atan2(xi[1]);
        if lon < 0.0 {
            lon += 2.0 * PI;
        }
        let fi = (lat + 0.5 * PI) / PI * (self.n_lat - 1) as f64;
        let i0 = (fi.floor() as usize).min(self.n_lat - 2);
        let ti = fi - i0 as f64;
        let fj = lon / (2.0 * PI) * self.n_lon as f64;
        let j0 = (fj.floor() as usize) % self.n_lon;
        let tj = fj - fj.floor();
        let j1 = (j0 + 1) % self.n_lon;
        let v = |i: usize, j: usize| self.values[i * self.n_lon + j];
        (1.0 - ti) * ((1.0 - tj) * v(i0, j0) + tj * v(i0, j1))
            + ti * ((1.0 - tj) * v(i0 + 1, j0) + tj * v(i0 + 1, j1))
    }
}

#[derive(Clone, Debug)]
pub enum AngleSource {
    Constant(f64),
    Expression { expr: Expr, at_infinity: f64 },
    Grid(LonLatGrid),
}

/// Sampled extremes of `β⁻¹` over the sphere at infinity and the largest
/// difference quotient seen.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundaryStats {
    pub min_inv_beta: f64,
    pub max_inv_beta: f64,
    pub max_difference_quotient: f64,
}

impl BoundaryStats {
    pub fn oscillation(&self) -> f64 {
        self.max_inv_beta - self.min_inv_beta
    }
}

/// The prescribed angle function `β` on `C ∪ {∞}`.
#[derive(Clone, Debug)]
pub struct ConeAngleSpec {
    source: AngleSource,
    /// `β` is replaced by its value at `∞` outside this radius.
    outside_radius: Option<f64>,
    /// Declared bound on difference quotients of `β⁻¹` on the unit sphere.
    derivative_bound: f64,
    /// Length scale on which `β` varies in the boundary plane.
    feature_radius: f64,
    /// Declared Hölder exponent; recorded only.
    holder_exponent: Option<f64>,
}

impl ConeAngleSpec {
    pub const DEFAULT_DERIVATIVE_BOUND: f64 = 1e3;

    pub fn constant(c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::ConeAngle(format!("constant angle {c} must be positive")));
        }
        Ok(Self::from_source(AngleSource::Constant(c)))
    }

    pub fn expression(text: &str, at_infinity: f64) -> Result<Self> {
        if !(at_infinity.is_finite() && at_infinity > 0.0) {
            return Err(Error::ConeAngle(format!(
                "value at infinity {at_infinity} must be positive"
            )));
        }
        let expr = Expr::parse(text)?;
        if let Some(c) = expr.as_constant() {
            if (c - at_infinity).abs() <= 1e-15 * c.abs() {
                return Self::constant(c);
            }
        }
        Ok(Self::from_source(AngleSource::Expression { expr, at_infinity }))
    }

    pub fn grid(grid: LonLatGrid) -> Self {
        Self::from_source(AngleSource::Grid(grid))
    }

    fn from_source(source: AngleSource) -> Self {
        Self {
            source,
            outside_radius: None,
            derivative_bound: Self::DEFAULT_DERIVATIVE_BOUND,
            feature_radius: 1.0,
            holder_exponent: None,
        }
    }

    pub fn with_outside_radius(mut self, radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::ConeAngle(format!("outside radius {radius} must be positive")));
        }
        self.outside_radius = Some(radius);
        Ok(self)
    }

    pub fn with_derivative_bound(mut self, bound: f64) -> Self {
        self.derivative_bound = bound;
        self
    }

    pub fn with_feature_radius(mut self, radius: f64) -> Self {
        self.feature_radius = radius;
        self
    }

    pub fn with_holder_exponent(mut self, delta: f64) -> Self {
        self.holder_exponent = Some(delta);
        self
    }

    pub fn source(&self) -> &AngleSource {
        &self.source
    }

    pub fn feature_radius(&self) -> f64 {
        self.feature_radius
    }

    pub fn holder_exponent(&self) -> Option<f64> {
        self.holder_exponent
    }

    pub fn derivative_bound(&self) -> f64 {
        self.derivative_bound
    }

    /// `Some(c)` when `β ≡ c`.
    pub fn constant_value(&self) -> Option<f64> {
        match &self.source {
            AngleSource::Constant(c) => Some(*c),
            _ => None,
        }
    }

    pub fn beta_at_infinity(&self) -> f64 {
        match &self.source {
            AngleSource::Constant(c) => *c,
            AngleSource::Expression { at_infinity, .. } => *at_infinity,
            AngleSource::Grid(g) => g.eval([1.0, 0.0, 0.0]),
        }
    }

    /// `β` at a finite boundary point.
    pub fn beta_at(&self, x2: f64, x3: f64) -> f64 {
        if let Some(r) = self.outside_radius {
            if x2 * x2 + x3 * x3 > r * r {
                return self.beta_at_infinity();
            }
        }
        match &self.source {
            AngleSource::Constant(c) => *c,
            AngleSource::Expression { expr, .. } => expr.eval(x2, x3),
            AngleSource::Grid(g) => g.eval(boundary_to_sphere(BoundaryPoint::Finite { x2, x3 })),
        }
    }

    pub fn beta(&self, b: BoundaryPoint) -> f64 {
        match b {
            BoundaryPoint::Finite { x2, x3 } => self.beta_at(x2, x3),
            BoundaryPoint::Infinity => self.beta_at_infinity(),
        }
    }

    pub fn inv_beta_at(&self, x2: f64, x3: f64) -> f64 {
        1.0 / self.beta_at(x2, x3)
    }

    pub fn inv_beta(&self, b: BoundaryPoint) -> f64 {
        1.0 / self.beta(b)
    }

    /// `β⁻¹` at a unit vector of the sphere model.
    pub fn inv_beta_on_sphere(&self, xi: [f64; 3]) -> f64 {
        self.inv_beta(sphere_to_boundary(xi))
    }

    /// Samples `β⁻¹` on a longitude–latitude net of the sphere (refined
    /// locally around the extremes) and checks positivity and the declared
    /// difference-quotient bound.
    pub fn validate(&self) -> Result<BoundaryStats> {
        const N_LAT: usize = 181;
        const N_LON: usize = 360;
        let sphere = |lat: f64, lon: f64| [lat.sin(), lat.cos() * lon.cos(), lat.cos() * lon.sin()];
        let lat_of = |i: usize| -0.5 * PI + PI * i as f64 / (N_LAT - 1) as f64;
        let lon_of = |j: usize| 2.0 * PI * j as f64 / N_LON as f64;

        let mut grid = vec![0.0; N_LAT * N_LON];
        for i in 0..N_LAT {
            for j in 0..N_LON {
                let b = self.beta(sphere_to_boundary(sphere(lat_of(i), lon_of(j))));
                if !(b.is_finite() && b > 0.0) {
                    return Err(Error::ConeAngle(format!(
                        "β = {b} is not positive at latitude {:.2}°, longitude {:.2}°",
                        lat_of(i).to_degrees(),
                        lon_of(j).to_degrees()
                    )));
                }
                grid[i * N_LON + j] = 1.0 / b;
            }
        }
        let b_inf = self.beta_at_infinity();
        if !(b_inf.is_finite() && b_inf > 0.0) {
            return Err(Error::ConeAngle(format!("β(∞) = {b_inf} is not positive")));
        }

        let mut quotient: f64 = 0.0;
        for i in 0..N_LAT {
            for j in 0..N_LON {
                let v = grid[i * N_LON + j];
                let p = sphere(lat_of(i), lon_of(j));
                let mut neighbours = vec![(i, (j + 1) % N_LON)];
                if i + 1 < N_LAT {
                    neighbours.push((i + 1, j));
                }
                for (a, b) in neighbours {
                    let q = sphere(lat_of(a), lon_of(b));
                    let chord = ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2) + (p[2] - q[2]).powi(2)).sqrt();
                    if chord > 1e-12 {
                        quotient = quotient.max((v - grid[a * N_LON + b]).abs() / chord);
                    }
                }
            }
        }
        if quotient > self.derivative_bound {
            return Err(Error::ConeAngle(format!(
                "difference quotient {quotient:.3e} of β⁻¹ exceeds the declared bound {:.3e}",
                self.derivative_bound
            )));
        }

        let f = |lat: f64, lon: f64| self.inv_beta(sphere_to_boundary(sphere(lat, lon)));
        let (imin, imax) = grid.iter().enumerate().fold((0, 0), |(lo, hi), (k, v)| {
            (
                if *v < grid[lo] { k } else { lo },
                if *v > grid[hi] { k } else { hi },
            )
        });
        let refine = |k: usize, sign: f64| {
            let (mut lat, mut lon) = (lat_of(k / N_LON), lon_of(k % N_LON));
            let mut best = sign * f(lat, lon);
            let mut step = PI / (N_LAT - 1) as f64;
            while step > 1e-9 {
                let mut moved = false;
                for (dl, dn) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
                    let (a, b) = ((lat + dl).clamp(-0.5 * PI, 0.5 * PI), lon + dn);
                    let v = sign * f(a, b);
                    if v > best {
                        best = v;
                        lat = a;
                        lon = b;
                        moved = true;
                    }
                }
                if !moved {
                    step *= 0.5;
                }
            }
            sign * best
        };
        let min_inv = refine(imin, -1.0).min(1.0 / b_inf);
        let max_inv = refine(imax, 1.0).max(1.0 / b_inf);
        Ok(BoundaryStats {
            min_inv_beta: min_inv,
            max_inv_beta: max_inv,
            max_difference_quotient: quotient,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expression_with_value_at_infinity() {
        let s = ConeAngleSpec::expression("1 + x2/(1 + x2^2 + x3^2)", 1.0).unwrap();
        assert_eq!(s.beta_at(1.0, 0.0), 1.5);
        assert_eq!(s.beta_at(-1.0, 0.0), 0.5);
        assert_eq!(s.beta(BoundaryPoint::Infinity), 1.0);
        let stats = s.validate().unwrap();
        assert!((stats.min_inv_beta - 1.0 / 1.5).abs() < 1e-12);
        assert!((stats.max_inv_beta - 2.0).abs() < 1e-12);
    }

    #[test]
    fn constant_expressions_collapse() {
        let s = ConeAngleSpec::expression("0.7", 0.7).unwrap();
        assert_eq!(s.constant_value(), Some(0.7));
        let stats = s.validate().unwrap();
        assert_eq!(stats.oscillation(), 0.0);
    }

    #[test]
    fn non_positive_beta_rejected() {
        let s = ConeAngleSpec::expression("x2", 1.0).unwrap();
        assert!(s.validate().is_err());
        assert!(ConeAngleSpec::constant(-1.0).is_err());
        assert!(ConeAngleSpec::expression("1", 0.0).is_err());
    }

    #[test]
    fn rough_data_fails_quotient_bound() {
        // β jumps across x2 = 0 in a thin layer
        let s = ConeAngleSpec::expression("1 + 100*(1 + tanh(1e4*x2))", 1.0)
            .unwrap()
            .with_derivative_bound(20.0);
        assert!(s.validate().is_err());
    }

    #[test]
    fn outside_radius_switches_to_value_at_infinity() {
        let s = ConeAngleSpec::expression("2 + x2", 1.0)
            .unwrap()
            .with_outside_radius(1.0)
            .unwrap();
        assert_eq!(s.beta_at(0.5, 0.0), 2.5);
        assert_eq!(s.beta_at(3.0, 0.0), 1.0);
    }

    #[test]
    fn lonlat_grid_parses_and_interpolates() {
        let mut text = String::from("# test grid\nlonlat 4 3\n");
        text.push_str("1 1 1 1\n2 2 4 4\n3 3 3 3\n");
        let g = LonLatGrid::parse(&text).unwrap();
        assert_eq!(g.eval([-1.0, 0.0, 0.0]), 1.0);
        assert_eq!(g.eval([1.0, 0.0, 0.0]), 3.0);
        // equator, longitude 45° sits halfway between columns 0 and 1
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((g.eval([0.0, h, h]) - 2.0).abs() < 1e-12);
        let spec = ConeAngleSpec::grid(g);
        assert_eq!(spec.beta_at_infinity(), 3.0);
        assert_eq!(spec.beta_at(0.0, 0.0), 1.0);
        assert!(LonLatGrid::parse("lonlat 2 2\n1 1 1").is_err());
        assert!(LonLatGrid::parse("lonlat 2 2\n1 2 1 1").is_err());
    }
}
