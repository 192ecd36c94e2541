//! Numerical verification: curvature on grids, cone angles, comparison with
//! the warped product and geodesic shooting.

pub mod cone;
pub mod curvature;
pub mod fixtures;
pub mod geodesic;
pub mod grid;
pub mod quasi;

pub use cone::{cone_angle_probe, ConeProbeResult, ConeProbeSettings, ProbeStatus};
pub use curvature::{kahler_check, scalar_curvature_numeric, CurvatureReport, KahlerReport};
pub use geodesic::{
    geodesic_integrate, GenericHamiltonian, GeodesicReport, GeodesicSettings, GeodesicState, GeodesicStatus,
    HamiltonianSystem, Launch, ReducedLeBrun,
};
pub use grid::{sample_grid, Box3, FieldGrid};
pub use quasi::{quasi_isometry_check, QuasiIsometryReport, QuasiIsometrySettings};
