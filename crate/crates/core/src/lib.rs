//! Scalar-flat Kähler metrics with cone singularities along a hyperbolic
//! boundary, built from Gibbons–Hawking-type data over hyperbolic 3-space.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cone_angle;
pub mod connection;
pub mod dirichlet;
pub mod error;
pub mod expr;
pub mod hyperbolic;
pub mod metric;
pub mod potential;
#[allow(clippy::excessive_precision, clippy::approx_constant)]
mod lebedev_data;
pub mod quadrature;
pub mod verify;

pub use cone_angle::{AngleSource, BoundaryStats, ConeAngleSpec, LonLatGrid};
pub use dirichlet::{HarmonicExtension, QuadratureSettings};
pub use error::{Error, Result};
pub use expr::{Expr, ExprError};
pub use hyperbolic::{BallPoint, BoundaryPoint, HPoint, OneForm3, ScalarField, TwoForm3};
pub use connection::{Connection, GaugeDescriptor, SmoothGauge, StringDirection};
pub use metric::{ConeMetric, LeBrunMetric, Mat4, MetricField, ModelMetric};
pub use potential::{ChargeConfig, Potential};
