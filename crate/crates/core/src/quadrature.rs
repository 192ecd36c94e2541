//! Gauss–Legendre and Lebedev quadrature rules.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::lebedev_data as data;

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n > 0, "Gauss-Legendre rule needs at least one node");
    let mut rule = vec![(0.0, 0.0); n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule[i] = (-x, w);
        rule[n - 1 - i] = (x, w);
    }
    rule
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Gauss–Legendre rule mapped to `[a, b]`.
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    gauss_legendre(n)
        .into_iter()
        .map(|(x, w)| (mid + half * x, half * w))
        .collect()
}

/// A Lebedev rule: unit vectors and weights summing to one.
#[derive(Debug)]
pub struct LebedevRule {
    pub degree: u32,
    pub points: Vec<[f64; 3]>,
    pub weights: Vec<f64>,
}

impl LebedevRule {
    /// Mean of `f` over the unit sphere.
    pub fn mean<F: FnMut([f64; 3]) -> f64>(&self, mut f: F) -> f64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(p, w)| w * f(*p))
            .sum()
    }
}

/// Degrees for which a Lebedev rule ships with the crate.
pub const LEBEDEV_DEGREES: [u32; 8] = [7, 11, 17, 23, 29, 41, 59, 131];

/// The Lebedev rule of the given polynomial degree.
pub fn lebedev(degree: u32) -> Result<&'static LebedevRule> {
    static RULES: [OnceLock<LebedevRule>; 8] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let (slot, reps, count): (usize, &[[f64; 4]], usize) = match degree {
        7 => (0, data::DEGREE_7, data::DEGREE_7_POINTS),
        11 => (1, data::DEGREE_11, data::DEGREE_11_POINTS),
        17 => (2, data::DEGREE_17, data::DEGREE_17_POINTS),
        23 => (3, data::DEGREE_23, data::DEGREE_23_POINTS),
        29 => (4, data::DEGREE_29, data::DEGREE_29_POINTS),
        41 => (5, data::DEGREE_41, data::DEGREE_41_POINTS),
        59 => (6, data::DEGREE_59, data::DEGREE_59_POINTS),
        131 => (7, data::DEGREE_131, data::DEGREE_131_POINTS),
        _ => {
            return Err(Error::Geometry(format!(
                "no Lebedev rule of degree {degree}; available: {LEBEDEV_DEGREES:?}"
            )))
        }
    };
    Ok(RULES[slot].get_or_init(|| expand_orbits(degree, reps, count)))
}

/// Expands orbit representatives under the 48 signed permutations.
fn expand_orbits(degree: u32, reps: &[[f64; 4]], count: usize) -> LebedevRule {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut points = Vec::with_capacity(count);
    let mut weights = Vec::with_capacity(count);
    for rep in reps {
        let mut orbit: Vec<[f64; 3]> = Vec::with_capacity(48);
        for perm in PERMS {
            for signs in 0..8u32 {
                let mut v = [0.0; 3];
                for k in 0..3 {
                    let s = if signs & (1 << k) != 0 { -1.0 } else { 1.0 };
                    v[k] = s * rep[perm[k]];
                }
                let dup = orbit
                    .iter()
                    .any(|o| (0..3).all(|k| (o[k] - v[k]).abs() < 1e-13));
                if !dup {
                    orbit.push(v);
                }
            }
        }
        weights.extend(std::iter::repeat_n(rep[3], orbit.len()));
        points.extend(orbit);
    }
    assert_eq!(
        points.len(),
        count,
        "Lebedev degree {degree} expanded to the wrong number of points"
    );
    LebedevRule {
        degree,
        points,
        weights,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let rule = gauss_legendre(8);
        let w: f64 = rule.iter().map(|r| r.1).sum();
        assert!((w - 2.0).abs() < 1e-14);
        // ∫ x^14 = 2/15 is within degree 15
        let i: f64 = rule.iter().map(|(x, w)| w * x.powi(14)).sum();
        assert!((i - 2.0 / 15.0).abs() < 1e-14);
        let r = gauss_legendre_on(5, 0.0, 2.0);
        let i: f64 = r.iter().map(|(x, w)| w * x * x).sum();
        assert!((i - 8.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn lebedev_rules_expand_and_integrate_harmonics() {
        for degree in LEBEDEV_DEGREES {
            let rule = lebedev(degree).unwrap();
            let w: f64 = rule.weights.iter().sum();
            assert!((w - 1.0).abs() < 1e-13, "degree {degree}: weight sum {w}");
            for p in &rule.points {
                let n = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
                assert!((n - 1.0).abs() < 1e-13);
            }
            // mean of x² is 1/3, of x²y²z² is 1/105
            let m2 = rule.mean(|p| p[0] * p[0]);
            assert!((m2 - 1.0 / 3.0).abs() < 1e-13, "degree {degree}");
            if degree >= 7 {
                let m6 = rule.mean(|p| (p[0] * p[1] * p[2]).powi(2));
                assert!((m6 - 1.0 / 105.0).abs() < 1e-13, "degree {degree}");
            }
        }
        assert!(lebedev(13).is_err());
    }
}
