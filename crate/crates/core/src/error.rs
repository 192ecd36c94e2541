use thiserror::Error;

use crate::expr::ExprError;
use crate::hyperbolic::HPoint;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("finite-difference step {step:.3e} reaches the boundary at {location}")]
    StepUnderflow { location: HPoint, step: f64 },

    #[error("evaluation within {distance:.3e} of charge {index} at {location}")]
    Pole {
        index: usize,
        location: HPoint,
        distance: f64,
    },

    #[error("point {location} lies within {distance:.3e} of the Dirac string of charge {index}")]
    StringProximity {
        index: usize,
        location: HPoint,
        distance: f64,
    },

    #[error("quadrature did not converge: estimated error {estimate:.3e} exceeds {tolerance:.3e}")]
    Quadrature { estimate: f64, tolerance: f64 },

    #[error("barrier sign conditions not certified after {attempts} enlargements (last C = {constant:.3e})")]
    BarrierCertification { attempts: usize, constant: f64 },

    #[error("metric is not positive definite at {0}")]
    NotPositiveDefinite(HPoint),

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("W e^v = {0:.3e} is not positive")]
    NonPositiveConformalFactor(f64),

    #[error("invalid cone angle data: {0}")]
    ConeAngle(String),

    #[error("invalid charge configuration: {0}")]
    Charges(String),

    #[error("invalid geometry: {0}")]
    Geometry(String),

    #[error(transparent)]
    Expression(#[from] ExprError),
}
