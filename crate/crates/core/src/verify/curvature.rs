//! Scalar curvature and `dω` on sampled grids, with order estimates from
//! stride-1 and stride-2 stencils.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::{derivatives, FieldGrid, MARGIN};
use crate::error::{Error, Result};
use crate::hyperbolic::HPoint;
use crate::metric::{exterior_from_derivatives, volume_ratio, Mat4};

/// Smallest interior extent, in nodes, for which the order estimate is meaningful.
pub const MIN_INTERIOR: usize = 1;

/// Errors below this level are treated as round-off and give no order estimate.
pub const ROUNDOFF_FLOOR: f64 = 1e-11;

/// Scalar curvature from a metric, its first and second chart derivatives.
///
/// `dg[a] = ∂_a g`, `ddg[a][b] = ∂_a ∂_b g`, index 0 being the Killing direction.
pub fn scalar_from_derivatives(g: &Mat4, dg: &[Mat4; 4], ddg: &[[Mat4; 4]; 4]) -> Result<f64> {
    let gi = g
        .try_inverse()
        .ok_or_else(|| Error::GridTooCoarse("singular metric sample".into()))?;
    // Γ_{e,bc} = ½ (∂_c g_eb + ∂_b g_ec − ∂_e g_bc)
    let mut gamma = [[[0.0; 4]; 4]; 4];
    for (e, ge) in gamma.iter_mut().enumerate() {
        for b in 0..4 {
            for c in 0..4 {
                ge[b][c] = 0.5 * (dg[c][(e, b)] + dg[b][(e, c)] - dg[e][(b, c)]);
            }
        }
    }
    // g^{ef} Γ_{e,bc} Γ_{f,ad}
    let quad = |b: usize, c: usize, a: usize, d: usize| {
        let mut s = 0.0;
        for e in 0..4 {
            for f in 0..4 {
                s += gi[(e, f)] * gamma[e][b][c] * gamma[f][a][d];
            }
        }
        s
    };
    let riemann = |a: usize, b: usize, c: usize, d: usize| {
        0.5 * (ddg[b][c][(a, d)] + ddg[a][d][(b, c)] - ddg[b][d][(a, c)] - ddg[a][c][(b, d)]) + quad(b, c, a, d)
            - quad(b, d, a, c)
    };
    let mut s = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let w = gi[(a, c)] * gi[(b, d)];
                    if w != 0.0 {
                        s += w * riemann(a, b, c, d);
                    }
                }
            }
        }
    }
    Ok(s)
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CurvatureSample {
    pub point: HPoint,
    pub scalar: f64,
    pub reference: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub spacing: f64,
    pub points: usize,
    /// `max |s − s_ref|` with the stride-1 stencil.
    pub max_abs: f64,
    /// The same with the stride-2 stencil.
    pub max_abs_coarse: f64,
    pub order: Option<f64>,
    pub worst_point: HPoint,
    #[serde(skip)]
    pub samples: Vec<CurvatureSample>,
}

fn order_estimate(fine: f64, coarse: f64) -> Option<f64> {
    (coarse > ROUNDOFF_FLOOR && fine > 0.0).then(|| (coarse / fine).log2())
}

fn check_shape(grid: &FieldGrid) -> Result<()> {
    if grid.shape.iter().any(|&n| n < 2 * MARGIN + MIN_INTERIOR) {
        return Err(Error::GridTooCoarse(format!(
            "grid shape {:?} leaves no interior for {MARGIN}-node stencils",
            grid.shape
        )));
    }
    Ok(())
}

fn metric_derivatives(grid: &FieldGrid, at: (usize, usize, usize), stride: usize) -> (Mat4, [Mat4; 4], [[Mat4; 4]; 4]) {
    let d = derivatives(grid, at, stride, |i| grid.metric_at(i));
    (grid.metric_at(grid.index(at.0, at.1, at.2)), d.first, d.second)
}

/// Scalar curvature on every interior node, compared with `reference`.
pub fn scalar_curvature_numeric<R>(grid: &FieldGrid, reference: R) -> Result<CurvatureReport>
where
    R: Fn(HPoint) -> f64 + Sync,
{
    check_shape(grid)?;
    let nodes: Vec<_> = grid.interior().collect();
    let rows: Vec<(CurvatureSample, f64)> = nodes
        .par_iter()
        .map(|&at| {
            let p = grid.point(at.0, at.1, at.2);
            let (g, d1, d2) = metric_derivatives(grid, at, 1);
            let fine = scalar_from_derivatives(&g, &d1, &d2)?;
            let (g, d1, d2) = metric_derivatives(grid, at, 2);
            let coarse = scalar_from_derivatives(&g, &d1, &d2)?;
            let r = reference(p);
            let stencil_check = |s: f64| {
                if s.is_finite() {
                    Ok(())
                } else {
                    Err(Error::GridTooCoarse(format!("non-finite curvature at {p} (h = {:.3e})", grid.spacing)))
                }
            };
            stencil_check(fine)?;
            stencil_check(coarse)?;
            Ok((
                CurvatureSample {
                    point: p,
                    scalar: fine,
                    reference: r,
                },
                (coarse - r).abs(),
            ))
        })
        .collect::<Result<_>>()?;
    let mut max_abs = 0.0;
    let mut max_abs_coarse: f64 = 0.0;
    let mut worst_point = rows[0].0.point;
    for (s, c) in &rows {
        let e = (s.scalar - s.reference).abs();
        if e >= max_abs {
            max_abs = e;
            worst_point = s.point;
        }
        max_abs_coarse = max_abs_coarse.max(*c);
    }
    Ok(CurvatureReport {
        spacing: grid.spacing,
        points: rows.len(),
        max_abs,
        max_abs_coarse,
        order: order_estimate(max_abs, max_abs_coarse),
        worst_point,
        samples: rows.into_iter().map(|(s, _)| s).collect(),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KahlerReport {
    pub spacing: f64,
    pub points: usize,
    /// Largest component of `dω` with the stride-1 stencil.
    pub max_residual: f64,
    pub max_residual_coarse: f64,
    pub order: Option<f64>,
    /// `max |ω∧ω / vol_g − 2|`: the compatibility of `ω` with `g`.
    pub max_volume_defect: f64,
}

/// `dω` on every interior node, plus the pointwise volume compatibility.
pub fn kahler_check(grid: &FieldGrid) -> Result<KahlerReport> {
    check_shape(grid)?;
    if grid.omega.is_none() {
        return Err(Error::Geometry("grid carries no Kähler form".into()));
    }
    let omega = |i: usize| grid.omega_at(i).unwrap_or_else(Mat4::zeros);
    let nodes: Vec<_> = grid.interior().collect();
    let rows: Vec<[f64; 3]> = nodes
        .par_iter()
        .map(|&at| {
            let residual = |stride| {
                let d = derivatives(grid, at, stride, omega);
                exterior_from_derivatives(&d.first)
                    .iter()
                    .fold(0.0_f64, |m, x| m.max(x.abs()))
            };
            let idx = grid.index(at.0, at.1, at.2);
            let vol = (volume_ratio(&grid.metric_at(idx), &omega(idx)) - 2.0).abs();
            [residual(1), residual(2), vol]
        })
        .collect();
    let max = |k: usize| rows.iter().fold(0.0_f64, |m, r| m.max(r[k]));
    let (fine, coarse) = (max(0), max(1));
    Ok(KahlerReport {
        spacing: grid.spacing,
        points: rows.len(),
        max_residual: fine,
        max_residual_coarse: coarse,
        order: order_estimate(fine, coarse),
        max_volume_defect: max(2),
    })
}
