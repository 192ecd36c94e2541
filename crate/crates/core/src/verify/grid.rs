//! Regular grids of metric and Kähler-form samples on the reduced chart `(z, x2, x3)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperbolic::HPoint;
use crate::metric::{Mat4, MetricField, FORM_COMPONENTS, METRIC_COMPONENTS};

/// An axis-aligned box `z × x2 × x3` with `z > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Box3 {
    pub z: [f64; 2],
    pub x2: [f64; 2],
    pub x3: [f64; 2],
}

impl Box3 {
    pub fn cube(center: HPoint, half_width: f64) -> Self {
        Self {
            z: [center.z - half_width, center.z + half_width],
            x2: [center.x2 - half_width, center.x2 + half_width],
            x3: [center.x3 - half_width, center.x3 + half_width],
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, r) in [("z", self.z), ("x2", self.x2), ("x3", self.x3)] {
            if !(r[0].is_finite() && r[1].is_finite() && r[0] < r[1]) {
                return Err(Error::Geometry(format!("box range {name} = {r:?} is empty")));
            }
        }
        if !(self.z[0] > 0.0) {
            return Err(Error::Geometry(format!("box must lie in z > 0, got z = {:?}", self.z)));
        }
        Ok(())
    }

    pub fn contains(&self, p: HPoint) -> bool {
        (self.z[0]..=self.z[1]).contains(&p.z)
            && (self.x2[0]..=self.x2[1]).contains(&p.x2)
            && (self.x3[0]..=self.x3[1]).contains(&p.x3)
    }

    pub fn center(&self) -> HPoint {
        HPoint::new_unchecked(
            0.5 * (self.z[0] + self.z[1]),
            0.5 * (self.x2[0] + self.x2[1]),
            0.5 * (self.x3[0] + self.x3[1]),
        )
    }
}

/// Margin, in grid nodes, kept around the box so that stride-2 stencils fit.
pub const MARGIN: usize = 2;

/// Metric and Kähler-form samples on a uniform grid. Node `(i, j, k)` sits
/// at `origin + h (i, j, k)` in `(z, x2, x3)`; the first and last
/// [`MARGIN`] nodes along each axis lie outside the requested box.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldGrid {
    pub origin: [f64; 3],
    pub spacing: f64,
    pub shape: [usize; 3],
    /// Ten metric components per node in [`METRIC_COMPONENTS`] order.
    pub metric: Vec<[f64; 10]>,
    /// Six Kähler-form components per node in [`FORM_COMPONENTS`] order, if any.
    pub omega: Option<Vec<[f64; 6]>>,
}

impl FieldGrid {
    pub fn len(&self) -> usize {
        self.shape[0] * self.shape[1] * self.shape[2]
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.shape[1] + j) * self.shape[2] + k
    }

    pub fn point(&self, i: usize, j: usize, k: usize) -> HPoint {
        let h = self.spacing;
        HPoint::new_unchecked(
            self.origin[0] + h * i as f64,
            self.origin[1] + h * j as f64,
            self.origin[2] + h * k as f64,
        )
    }

    pub fn metric_at(&self, idx: usize) -> Mat4 {
        unpack_metric(&self.metric[idx])
    }

    pub fn omega_at(&self, idx: usize) -> Option<Mat4> {
        self.omega.as_ref().map(|w| unpack_form(&w[idx]))
    }

    /// Node indices inside the box (all but the margins).
    pub fn interior(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let [n0, n1, n2] = self.shape;
        (MARGIN..n0 - MARGIN).flat_map(move |i| {
            (MARGIN..n1 - MARGIN).flat_map(move |j| (MARGIN..n2 - MARGIN).map(move |k| (i, j, k)))
        })
    }
}

pub fn pack_metric(g: &Mat4) -> [f64; 10] {
    METRIC_COMPONENTS.map(|(a, b)| g[(a, b)])
}

pub fn unpack_metric(c: &[f64; 10]) -> Mat4 {
    let mut g = Mat4::zeros();
    for (n, &(a, b)) in METRIC_COMPONENTS.iter().enumerate() {
        g[(a, b)] = c[n];
        g[(b, a)] = c[n];
    }
    g
}

pub fn pack_form(w: &Mat4) -> [f64; 6] {
    FORM_COMPONENTS.map(|(a, b)| w[(a, b)])
}

pub fn unpack_form(c: &[f64; 6]) -> Mat4 {
    let mut w = Mat4::zeros();
    for (n, &(a, b)) in FORM_COMPONENTS.iter().enumerate() {
        w[(a, b)] = c[n];
        w[(b, a)] = -c[n];
    }
    w
}

/// Samples `field` on the grid of spacing `h` covering `bounds`, plus margins.
pub fn sample_grid(field: &dyn MetricField, bounds: &Box3, h: f64) -> Result<FieldGrid> {
    bounds.validate()?;
    if !(h > 0.0) {
        return Err(Error::GridTooCoarse(format!("grid spacing {h} must be positive")));
    }
    let count = |r: [f64; 2]| ((r[1] - r[0]) / h + 1e-9).floor() as usize + 1;
    let inner = [count(bounds.z), count(bounds.x2), count(bounds.x3)];
    if inner.iter().any(|&n| n < 1) {
        return Err(Error::GridTooCoarse(format!("box {bounds:?} holds no nodes at spacing {h}")));
    }
    let m = MARGIN as f64 * h;
    let origin = [bounds.z[0] - m, bounds.x2[0] - m, bounds.x3[0] - m];
    if !(origin[0] > 0.0) {
        return Err(Error::GridTooCoarse(format!(
            "stencil margin reaches z = {:.3e}; shrink the box or the spacing",
            origin[0]
        )));
    }
    let shape = inner.map(|n| n + 2 * MARGIN);
    let mut grid = FieldGrid {
        origin,
        spacing: h,
        shape,
        metric: Vec::new(),
        omega: None,
    };
    let nodes: Vec<HPoint> = (0..shape[0])
        .flat_map(|i| (0..shape[1]).flat_map(move |j| (0..shape[2]).map(move |k| (i, j, k))))
        .map(|(i, j, k)| grid.point(i, j, k))
        .collect();
    let samples: Vec<(Mat4, Option<Mat4>)> = nodes
        .par_iter()
        .map(|&p| field.tensors(p))
        .collect::<Result<_>>()?;
    grid.metric = samples.iter().map(|(g, _)| pack_metric(g)).collect();
    if samples.iter().all(|(_, w)| w.is_some()) {
        grid.omega = Some(samples.iter().map(|(_, w)| pack_form(&w.unwrap())).collect());
    }
    Ok(grid)
}

/// First and second chart derivatives of a grid quantity at a node, by
/// central differences with the given stride. Index 0 (θ) derivatives vanish.
pub(crate) struct Derivatives {
    pub first: [Mat4; 4],
    pub second: [[Mat4; 4]; 4],
}

pub(crate) fn derivatives<F>(grid: &FieldGrid, at: (usize, usize, usize), stride: usize, value: F) -> Derivatives
where
    F: Fn(usize) -> Mat4,
{
    let h = grid.spacing * stride as f64;
    let s = stride as isize;
    let node = |d: [isize; 3]| {
        let i = (at.0 as isize + d[0]) as usize;
        let j = (at.1 as isize + d[1]) as usize;
        let k = (at.2 as isize + d[2]) as usize;
        value(grid.index(i, j, k))
    };
    let unit = |axis: usize, n: isize| {
        let mut d = [0isize; 3];
        d[axis] = n;
        d
    };
    let centre = node([0, 0, 0]);
    let mut first = [Mat4::zeros(); 4];
    let mut second = [[Mat4::zeros(); 4]; 4];
    for a in 0..3 {
        let p = node(unit(a, s));
        let m = node(unit(a, -s));
        first[a + 1] = (p - m) / (2.0 * h);
        second[a + 1][a + 1] = (p - centre * 2.0 + m) / (h * h);
        for b in a + 1..3 {
            let mut d = [0isize; 3];
            let mut corner = |sa: isize, sb: isize| {
                d = [0; 3];
                d[a] = sa * s;
                d[b] = sb * s;
                node(d)
            };
            let mixed = (corner(1, 1) - corner(1, -1) - corner(-1, 1) + corner(-1, -1)) / (4.0 * h * h);
            second[a + 1][b + 1] = mixed;
            second[b + 1][a + 1] = mixed;
        }
    }
    Derivatives { first, second }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::ConeMetric;

    #[test]
    fn pack_round_trip() {
        let mut g = Mat4::zeros();
        for a in 0..4 {
            for b in 0..4 {
                g[(a, b)] = (a * b) as f64 + (a + b) as f64;
            }
        }
        assert_eq!(unpack_metric(&pack_metric(&g)), g);
        let w = crate::metric::assemble_omega(2.0, crate::hyperbolic::OneForm3([0.1, 0.2, 0.3]), 0.5);
        assert_eq!(unpack_form(&pack_form(&w)), w);
    }

    #[test]
    fn grid_shape_and_margins() {
        let b = Box3 {
            z: [0.5, 0.6],
            x2: [0.0, 0.1],
            x3: [0.0, 0.05],
        };
        let g = sample_grid(&ConeMetric::flat(), &b, 0.025).unwrap();
        assert_eq!(g.shape, [9, 9, 7]);
        assert_eq!(g.interior().count(), 5 * 5 * 3);
        assert!((g.point(2, 2, 2).z - 0.5).abs() < 1e-15);
        assert!(g.omega.is_some());
    }

    #[test]
    fn margin_below_the_boundary_is_rejected() {
        let b = Box3 {
            z: [0.01, 0.2],
            x2: [0.0, 0.1],
            x3: [0.0, 0.1],
        };
        assert!(matches!(
            sample_grid(&ConeMetric::flat(), &b, 0.02),
            Err(Error::GridTooCoarse(_))
        ));
    }
}
